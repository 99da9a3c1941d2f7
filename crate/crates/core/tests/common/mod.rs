#![allow(dead_code)]

use lexsect::{bipartite_to_system, digraph_to_system, BipartiteInstance, DigraphInstance, TuSystem};
use rand::Rng;

pub fn digraph(vertices: usize, edges: &[(usize, usize)], s: usize, t: usize) -> TuSystem {
    digraph_to_system(&DigraphInstance { vertices, edges: edges.to_vec(), source: s, sink: t, n: 1 }).unwrap()
}

pub fn bridge() -> TuSystem {
    digraph(3, &[(0, 1), (0, 1), (1, 2)], 0, 2)
}

pub fn diamond() -> TuSystem {
    digraph(4, &[(0, 1), (1, 3), (0, 2), (2, 3)], 0, 3)
}

pub fn k22() -> TuSystem {
    bipartite_to_system(&BipartiteInstance { left: 2, right: 2, edges: vec![(0, 0), (0, 1), (1, 0), (1, 1)], n: 1 })
        .unwrap()
}

/// Random loopless multigraph with distinct random terminals.
pub fn random_digraph<R: Rng>(rng: &mut R, vertices: usize, edges: usize) -> DigraphInstance {
    let mut list = Vec::with_capacity(edges);
    while list.len() < edges {
        let u = rng.gen_range(0..vertices);
        let v = rng.gen_range(0..vertices);
        if u != v {
            list.push((u, v));
        }
    }
    let source = rng.gen_range(0..vertices);
    let mut sink = rng.gen_range(0..vertices);
    while sink == source {
        sink = rng.gen_range(0..vertices);
    }
    DigraphInstance { vertices, edges: list, source, sink, n: 1 }
}

pub fn random_bipartite<R: Rng>(rng: &mut R, side: usize, edges: usize) -> BipartiteInstance {
    let list = (0..edges).map(|_| (rng.gen_range(0..side), rng.gen_range(0..side))).collect();
    BipartiteInstance { left: side, right: side, edges: list, n: 1 }
}
