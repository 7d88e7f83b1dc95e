//! Shared fixtures for the benchmark targets.

use relzero_core::graph::Multigraph;

/// Thick cycle on `n` vertices with every spindle of size `k`.
pub fn thick_cycle(n: usize, k: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for i in 0..n {
        g.add_edges(i, (i + 1) % n, k).unwrap();
    }
    g
}

/// Two thick cycles sharing a vertex: a small blocky benchmark graph.
pub fn double_cycle(n: usize, k: usize) -> Multigraph {
    relzero_core::graph::glue_at_vertex(&thick_cycle(n, k), 0, &thick_cycle(n, k), 0)
}
