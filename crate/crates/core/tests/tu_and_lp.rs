mod common;

use lexsect::{
    assert_integral, bipartite_to_system, digraph_to_system, is_totally_unimodular_bruteforce, solve_lp,
    validate_tu_entries, LpOutcome, LpProblem, Rational, TuCheck, TuSystem,
};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TU_LIMIT: u128 = 1_000_000;

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for k in 0..cols {
                    let t = &f * &rows[r][k];
                    rows[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Columns of variables strictly inside their bounds are independent.
fn is_vertex(p: &LpProblem<Rational>, x: &[Rational]) -> bool {
    let free: Vec<usize> = (0..x.len()).filter(|&j| x[j] > p.lower[j] && x[j] < p.upper[j]).collect();
    if free.is_empty() {
        return true;
    }
    let sub: Vec<Vec<Rational>> = p.a_eq.iter().map(|row| free.iter().map(|&j| row[j].clone()).collect()).collect();
    rank(sub) == free.len()
}

fn system_lp(s: &TuSystem, lower: Vec<i64>, upper: Vec<i64>, cost: Vec<i64>, scale: i64) -> LpProblem<Rational> {
    LpProblem {
        a_eq: s.a().iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(),
        b_eq: s.b().iter().map(|&v| q(v * scale)).collect(),
        lower: lower.into_iter().map(q).collect(),
        upper: upper.into_iter().map(q).collect(),
        objective: cost.into_iter().map(q).collect(),
    }
}

#[test]
fn incidence_matrices_are_tu() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..60 {
        let d = 1 + round % 8;
        let s = if round % 2 == 0 {
            digraph_to_system(&common::random_digraph(&mut rng, 2 + round % 5, d)).unwrap()
        } else {
            bipartite_to_system(&common::random_bipartite(&mut rng, 1 + round % 4, d)).unwrap()
        };
        assert_eq!(is_totally_unimodular_bruteforce(s.a(), TU_LIMIT), TuCheck::Yes, "{:?}", s.a());
        assert!(validate_tu_entries(&s).is_ok());
    }
}

#[test]
fn incidence_columns() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let s = digraph_to_system(&common::random_digraph(&mut rng, 6, 10)).unwrap();
        for j in 0..s.d() {
            let col: Vec<i64> = s.column(j).map(|(_, v)| v).collect();
            assert_eq!(col.len(), 2);
            assert_eq!(col.iter().sum::<i64>(), 0);
        }
        let inst = common::random_bipartite(&mut rng, 4, 9);
        let s = bipartite_to_system(&inst).unwrap();
        for j in 0..s.d() {
            let rows: Vec<usize> = s.column(j).map(|(i, v)| { assert_eq!(v, 1); i }).collect();
            assert_eq!(rows.len(), 2);
            assert!(rows[0] < 4 && rows[1] >= 4);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tu_matrices_pass_entry_validation(a in prop::collection::vec(prop::collection::vec(-3i64..=3, 1..4), 1..4)) {
        let width = a[0].len();
        let a: Vec<Vec<i64>> = a.into_iter().map(|mut r| { r.resize(width, 0); r }).collect();
        let b = vec![0; a.len()];
        let s = TuSystem::new(a.clone(), b).unwrap();
        if is_totally_unimodular_bruteforce(&a, TU_LIMIT) == TuCheck::Yes {
            prop_assert!(validate_tu_entries(&s).is_ok());
        }
    }

    #[test]
    fn tu_lp_vertices_are_integral(seed in any::<u64>(), vertices in 2usize..6, edges in 1usize..9, scale in 1i64..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = digraph_to_system(&common::random_digraph(&mut rng, vertices, edges)).unwrap();
        let d = s.d();
        let cost: Vec<i64> = (0..d as i64).map(|j| (seed as i64 >> (j % 32)) % 7 - 3).collect();
        let lower = vec![0; d];
        let upper: Vec<i64> = (0..d).map(|j| 1 + (j as i64 % scale)).collect();
        let p = system_lp(&s, lower, upper, cost, scale);
        if let LpOutcome::Optimal(sol) = solve_lp(&p).unwrap() {
            prop_assert!(p.is_feasible(&sol.values));
            prop_assert!(assert_integral(&sol.values).is_ok());
            prop_assert!(is_vertex(&p, &sol.values));
        }
    }
}

#[test]
fn lp_matches_enumeration_on_boxed_problems() {
    // Exhaustive check over the integer points of small boxes: a TU LP's
    // optimum is attained at an integer point.
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let s = digraph_to_system(&common::random_digraph(&mut rng, 4, 6)).unwrap();
        let d = s.d();
        let cost: Vec<i64> = (0..d).map(|_| rand::Rng::gen_range(&mut rng, -4..5)).collect();
        let p = system_lp(&s, vec![0; d], vec![2; d], cost.clone(), 1);
        let mut best: Option<i64> = None;
        for code in 0..3usize.pow(d as u32) {
            let x: Vec<i64> = (0..d).map(|j| ((code / 3usize.pow(j as u32)) % 3) as i64).collect();
            if s.satisfies(&x) {
                let v: i64 = x.iter().zip(&cost).map(|(a, b)| a * b).sum();
                best = Some(best.map_or(v, |b: i64| b.min(v)));
            }
        }
        match (solve_lp(&p).unwrap(), best) {
            (LpOutcome::Optimal(sol), Some(b)) => assert_eq!(sol.objective_value, q(b)),
            (LpOutcome::Infeasible, None) => {}
            (outcome, best) => panic!("LP {outcome:?} vs enumeration {best:?}"),
        }
    }
}

#[test]
fn degenerate_problem_terminates() {
    // Many parallel edges and zero costs: heavy degeneracy for Bland's rule.
    let edges: Vec<(usize, usize)> = (0..6).flat_map(|_| [(0, 1), (1, 2), (0, 2)]).collect();
    let s = common::digraph(3, &edges, 0, 2);
    let d = s.d();
    let p = system_lp(&s, vec![0; d], vec![1; d], vec![0; d], 3);
    let sol = solve_lp(&p).unwrap().optimal().unwrap();
    assert!(p.is_feasible(&sol.values));
    let x = assert_integral(&sol.values).unwrap();
    assert!(x.iter().all(|v| !v.is_negative() && *v <= One::one()));
}
