use std::cmp::Ordering;

use lexsect::{compress, lex_compare, lex_weights, vulnerability, SolutionBundle, VulnerabilityVector};
use proptest::prelude::*;

fn bundle_strategy(max_n: usize, max_d: usize) -> impl Strategy<Value = SolutionBundle> {
    (1..=max_n, 1..=max_d).prop_flat_map(|(n, d)| {
        prop::collection::vec(prop::collection::vec(0u8..=1, d), n)
            .prop_map(|v| SolutionBundle::new(v).unwrap())
    })
}

fn pair_strategy(max_n: usize, max_d: usize) -> impl Strategy<Value = (SolutionBundle, SolutionBundle)> {
    (1..=max_n, 1..=max_d).prop_flat_map(|(n, d)| {
        let one = prop::collection::vec(prop::collection::vec(0u8..=1, d), n)
            .prop_map(|v| SolutionBundle::new(v).unwrap());
        (one.clone(), one)
    })
}

/// Layer k as the join over all k-subsets of meets, straight from the
/// definition.
fn join_of_meets(b: &SolutionBundle) -> Vec<Vec<u8>> {
    let n = b.n();
    let d = b.d();
    (1..=n)
        .map(|k| {
            let mut layer = vec![0u8; d];
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut meet = vec![1u8; d];
                for (i, v) in b.vectors().iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        for (m, &e) in meet.iter_mut().zip(v) {
                            *m &= e;
                        }
                    }
                }
                for (l, m) in layer.iter_mut().zip(meet) {
                    *l |= m;
                }
            }
            layer
        })
        .collect()
}

fn column_sums(vs: &[Vec<u8>]) -> Vec<usize> {
    let mut s = vec![0; vs[0].len()];
    for v in vs {
        for (a, &e) in s.iter_mut().zip(v) {
            *a += e as usize;
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn compression_preserves_column_sums(b in bundle_strategy(6, 12)) {
        let c = compress(&b);
        prop_assert_eq!(column_sums(c.layers()), column_sums(b.vectors()));
    }

    #[test]
    fn compression_is_monotone_and_idempotent(b in bundle_strategy(6, 12)) {
        let c = compress(&b);
        for w in c.layers().windows(2) {
            prop_assert!(w[0].iter().zip(&w[1]).all(|(a, b)| a >= b));
        }
        let again = compress(&c.clone().into_bundle());
        prop_assert_eq!(again, c);
    }

    #[test]
    fn shuffled_bundles_share_compression(b in bundle_strategy(6, 12), seed in any::<u64>()) {
        // Moving ones between vectors within a column keeps the column sums.
        let counts = b.column_counts();
        let n = b.n();
        let mut other = vec![vec![0u8; b.d()]; n];
        for (j, &c) in counts.iter().enumerate() {
            let offset = (seed as usize).wrapping_add(j * 7) % n;
            for t in 0..c {
                other[(offset + t) % n][j] = 1;
            }
        }
        let other = SolutionBundle::new(other).unwrap();
        prop_assert_eq!(compress(&other), compress(&b));
    }

    #[test]
    fn fast_compression_matches_definition(b in bundle_strategy(3, 4)) {
        prop_assert_eq!(compress(&b).layers().to_vec(), join_of_meets(&b));
    }

    #[test]
    fn vulnerability_is_layer_sizes(b in bundle_strategy(6, 12)) {
        let f = vulnerability(&b);
        let sizes: Vec<usize> = compress(&b).layers().iter().map(|l| l.iter().filter(|&&e| e == 1).count()).collect();
        prop_assert_eq!(&f.0, &sizes);
        prop_assert!(f.0.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn lex_order_is_total(
        f in prop::collection::vec(0usize..5, 4),
        g in prop::collection::vec(0usize..5, 4),
        h in prop::collection::vec(0usize..5, 4),
    ) {
        let (f, g, h) = (VulnerabilityVector(f), VulnerabilityVector(g), VulnerabilityVector(h));
        let fg = lex_compare(&f, &g).unwrap();
        prop_assert_eq!(fg.reverse(), lex_compare(&g, &f).unwrap());
        prop_assert_eq!(fg == Ordering::Equal, f == g);
        let gh = lex_compare(&g, &h).unwrap();
        if fg != Ordering::Greater && gh != Ordering::Greater {
            prop_assert_ne!(lex_compare(&f, &h).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn weights_agree_with_lex_order((x, y) in pair_strategy(6, 12)) {
        let c = lex_weights(x.d(), x.n());
        let cx = c.apply(&compress(&x).into_bundle());
        let cy = c.apply(&compress(&y).into_bundle());
        prop_assert_eq!(lex_compare(&vulnerability(&x), &vulnerability(&y)).unwrap(), cx.cmp(&cy));
    }
}
