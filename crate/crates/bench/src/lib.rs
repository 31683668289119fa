//! Shared inputs for the benchmarks.

use walkwl_core::hierarchy::Corpus;
use walkwl_core::Graph;

/// One G(n, 1/2) graph per requested order, fixed seed.
pub fn random_graphs(orders: &[usize]) -> Vec<Graph> {
    orders
        .iter()
        .map(|&n| Corpus::Random { count: 1, n, p: 0.5, seed: n as u64 }.graphs().expect("valid corpus").remove(0))
        .collect()
}
