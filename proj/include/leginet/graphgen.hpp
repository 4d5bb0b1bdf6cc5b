#pragma once

#include "leginet/graph.hpp"
#include "leginet/util.hpp"

namespace leginet {

/// Uniform random directed graph with exactly m distinct edges (no self
/// loops) drawn without replacement from the n(n-1) ordered pairs.
Digraph gnm_random_digraph(int n, int m, Rng& rng);

/// Directed preferential attachment: each new node emits edges_per_node
/// edges to distinct earlier nodes chosen proportionally to total degree
/// plus one. In-degrees develop a heavy tail (scale-free-like).
Digraph preferential_attachment_digraph(int n, int edges_per_node, Rng& rng);

/// Directed ring lattice: each node points to its k nearest successors.
Digraph ring_lattice_digraph(int n, int k);

/// Watts-Strogatz style small world: ring lattice with each edge's target
/// rewired to a uniform random node with probability beta.
Digraph watts_strogatz_digraph(int n, int k, double beta, Rng& rng);

}  // namespace leginet
