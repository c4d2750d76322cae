//! Kneser graphs, their Xor product, and maximum clique search.

mod clique;
mod kneser;
mod solve;
mod xor;

pub use clique::{degeneracy_order, max_clique, CliqueResult, SolveStatus, SolverOptions};
pub use kneser::{
    binom, build_kneser, colex_rank, k_subsets_colex, BitGraph, KneserGraph, DEFAULT_VERTEX_CAP,
};
pub use solve::{solve_f, Method, SolveOptions, SolveOutcome};
pub use xor::{
    build_xor_product, clique_to_family, family_to_clique, vertices_to_family, write_dimacs,
    xor_vertex_count, XorGraph,
};
