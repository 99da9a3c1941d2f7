#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use lexsect::DigraphInstance;
use rand::Rng;

pub const BRIDGE: &str = "c two parallel edges then a bridge\np digraph 3 3 0 2\ne 0 1\ne 0 1\ne 1 2\n";
pub const DIAMOND: &str = "p digraph 4 4 0 3\ne 0 1\ne 1 3\ne 0 2\ne 2 3\n";
pub const K22: &str = "p bipartite 2 2\ne 0 0\ne 0 1\ne 1 0\ne 1 1\n";
pub const SINGLE_EDGE: &str = "p digraph 2 1 0 1\ne 0 1\n";
pub const BRIDGE_SYSTEM: &str = r#"{"A": [[-1,-1,0],[1,1,-1],[0,0,1]], "b": [-1,0,1]}"#;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> serde_json::Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad report {:?}: {e}", self.stdout))
    }
}

pub fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

pub fn lexsect(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_lexsect")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

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

/// Random DAG on `vertices` vertices (edges go from lower to higher index)
/// with terminals 0 and `vertices - 1`.
pub fn random_dag<R: Rng>(rng: &mut R, vertices: usize, edges: usize) -> DigraphInstance {
    let mut list = Vec::with_capacity(edges);
    while list.len() < edges {
        let u = rng.gen_range(0..vertices);
        let v = rng.gen_range(0..vertices);
        if u < v {
            list.push((u, v));
        }
    }
    DigraphInstance { vertices, edges: list, source: 0, sink: vertices - 1, n: 1 }
}

pub fn graph_file(inst: &DigraphInstance) -> String {
    let mut s = format!("p digraph {} {} {} {}\n", inst.vertices, inst.edges.len(), inst.source, inst.sink);
    for (u, v) in &inst.edges {
        s.push_str(&format!("e {u} {v}\n"));
    }
    s
}
