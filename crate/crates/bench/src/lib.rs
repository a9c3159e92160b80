//! Fixtures shared by the kernel benchmarks.

use steiner_core::exact::BigMatrix;
use steiner_core::graphs::Graph;
use steiner_core::hypermatrix::{build_steiner_hypermatrix, SymmetricHypermatrix};

/// `D_k(G)` for a graph known to be valid.
pub fn steiner(g: &Graph, k: usize) -> SymmetricHypermatrix {
    build_steiner_hypermatrix(g, k).expect("valid order and graph")
}

/// Dense integer matrix with small pseudo-random entries.
pub fn dense_matrix(size: usize, seed: u64) -> BigMatrix {
    let mut state = seed | 1;
    BigMatrix::from_fn(size, size, |_, _| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        ((state % 19) as i64 - 9).into()
    })
}

/// Caterpillar: a path with one pendant vertex on every inner vertex.
pub fn caterpillar(spine: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v, v + 1)).collect();
    edges.extend((2..spine).map(|v| (v, spine + v - 1)));
    Graph::new(2 * spine - 2, edges).expect("a tree")
}
