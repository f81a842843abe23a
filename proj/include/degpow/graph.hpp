#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degpow/exact_int.hpp"
#include "degpow/int_tuple.hpp"

namespace degpow {

/// One bit per vertex; a neighbourhood fits in a single word.
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline int popcount(VertexSet s) { return std::popcount(s); }

/// Lowest vertex in a non-empty set.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

/// Vertex set {0, ..., n-1}.
constexpr VertexSet all_vertices(int n) {
  return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 64 vertices.
///
/// Row v of the adjacency matrix is the neighbourhood bitset of v. The matrix
/// is symmetric with a zero diagonal. Values are immutable: with_edge and
/// without_edge return modified copies.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  /// Edgeless graph on n vertices, 1 <= n <= 64.
  explicit Graph(int n);

  /// Graph on n vertices with the given (possibly repeated) edges.
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const;  // edge count

  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  VertexSet vertices() const { return all_vertices(n_); }

  int min_degree() const;
  int max_degree() const;

  /// Edges (u, v) with u < v, ordered by v then u (graph6 slot order).
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Builds a graph, validating 1 <= n <= 64 and every endpoint.
Graph new_graph(int n, std::span<const Edge> edges);

/// Vertex degrees sorted non-increasing.
DegreeSequence degree_sequence(const Graph& g);

/// Sum over vertices of degree^p, exactly. p >= 1.
ExactInt ep(const Graph& g, int p);

/// Relabels vertex v as perm[v]. perm must be a permutation of 0..n-1.
Graph permute(const Graph& g, std::span<const int> perm);

/// Subgraph induced by `vertices`, relabelled in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet vertices);

/// graph6 encoding (n <= 62 uses the one-byte header; 63/64 the long form).
std::string to_graph6(const Graph& g);

/// Parses one graph6 string. Throws std::invalid_argument when malformed.
Graph from_graph6(std::string_view s);

}  // namespace degpow
