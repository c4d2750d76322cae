//! Shared inputs for the benchmarks.

use xorclique_core::solver::{build_xor_product, XorGraph};

/// Xor product with no vertex cap.
pub fn xor_graph(n: usize, k: usize) -> XorGraph {
    build_xor_product(n, k, usize::MAX).expect("valid parameters")
}

/// Parameters of the clique benchmarks, all solvable in well under a second.
pub const SOLVER_CASES: &[(usize, usize)] = &[(5, 2), (6, 2), (7, 2), (6, 3)];
