#pragma once

#include <vector>

#include "degpow/graph.hpp"

namespace degpow {

/// Blocks (maximal 2-connected subgraphs and bridges) of a graph.
/// Every edge lies in exactly one block; a two-vertex block is a bridge.
/// Isolated vertices belong to no block.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
};

BlockDecomposition block_decomposition(const Graph& g);

bool is_connected(const Graph& g);

/// True iff `within` induces a graph containing a cycle.
bool has_cycle(const Graph& g, VertexSet within);

bool has_triangle(const Graph& g);

/// A 4-cycle exists iff some pair of vertices has two common neighbours.
bool has_c4(const Graph& g);

/// Block test: a graph has no even cycle iff each block is a bridge or an
/// odd cycle. A 2-connected block with more edges than vertices contains a
/// theta, two of whose three cycles have even total length.
bool has_even_cycle(const Graph& g);

/// Maximum number of internally disjoint s-t paths, stopping early once
/// `limit` paths are found. s and t must be distinct and non-adjacent.
int local_vertex_connectivity(const Graph& g, int s, int t, int limit);

/// Maximum number of edge-disjoint s-t paths, capped at `limit`.
int local_edge_connectivity(const Graph& g, int s, int t, int limit);

/// kappa(G); kappa(K_n) = n - 1, disconnected graphs give 0.
int vertex_connectivity(const Graph& g);

/// lambda(G); requires n >= 2. Disconnected graphs give 0.
int edge_connectivity(const Graph& g);

bool is_t_connected(const Graph& g, int t);
bool is_t_edge_connected(const Graph& g, int t);

/// t-connected, and every single edge deletion leaves a graph that is not.
bool is_minimally_t_connected(const Graph& g, int t);
bool is_minimally_t_edge_connected(const Graph& g, int t);

/// Largest minimum degree met while repeatedly deleting a min-degree vertex.
int degeneracy(const Graph& g);

bool is_k_degenerate(const Graph& g, int k);

/// k-degenerate with k*n - k(k+1)/2 edges. Throws when n < k + 1.
bool is_maximal_k_degenerate(const Graph& g, int k);

/// Some cycle has a chord: an edge uv such that G - uv still has two
/// internally disjoint u-v paths.
bool has_chorded_cycle(const Graph& g);

/// Some cycle passes through at most one vertex of `marked`.
bool has_cycle_meeting_at_most_one(const Graph& g, VertexSet marked);

}  // namespace degpow
