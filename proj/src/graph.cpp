#include "degpow/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace degpow {

namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("graph order must be in [1, 64], got " +
                                std::to_string(n));
}

void check_endpoints(int n, int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") out of range for n=" +
                                std::to_string(n));
  if (u == v)
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

constexpr int kG6Offset = 63;

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_endpoints(n, u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

int Graph::size() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += popcount(adj_[v]);
  return total / 2;
}

int Graph::min_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int v = 1; v < n_; ++v)
    for (VertexSet lower = adj_[v] & (bit(v) - 1); lower; lower &= lower - 1)
      out.emplace_back(first_vertex(lower), v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_endpoints(n_, u, v);
  Graph g = *this;
  g.adj_[u] |= bit(v);
  g.adj_[v] |= bit(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_endpoints(n_, u, v);
  Graph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ &&
         std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph new_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> degrees(g.order());
  for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  return DegreeSequence(std::move(degrees));
}

ExactInt ep(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("ep: exponent must be >= 1");
  // Group equal degrees so each power is computed once.
  std::array<int, Graph::kMaxVertices> count{};
  for (int v = 0; v < g.order(); ++v) ++count[g.degree(v)];
  ExactInt total = 0;
  for (int d = 1; d < g.order(); ++d)
    if (count[d]) total += count[d] * ipow(d, p);
  return total;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute: permutation length mismatch");
  VertexSet seen = 0;
  for (int x : perm) {
    if (x < 0 || x >= n || (seen & bit(x)))
      throw std::invalid_argument("permute: not a permutation");
    seen |= bit(x);
  }
  std::vector<Edge> mapped;
  for (auto [u, v] : g.edges()) mapped.emplace_back(perm[u], perm[v]);
  return Graph(n, mapped);
}

Graph induced_subgraph(const Graph& g, VertexSet vertices) {
  vertices &= g.vertices();
  if (!vertices) throw std::invalid_argument("induced_subgraph: empty selection");
  std::array<int, Graph::kMaxVertices> index{};
  int k = 0;
  for (VertexSet s = vertices; s; s &= s - 1) index[first_vertex(s)] = k++;
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges())
    if ((vertices & bit(u)) && (vertices & bit(v)))
      kept.emplace_back(index[u], index[v]);
  return Graph(k, kept);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Offset + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kG6Offset + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kG6Offset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kG6Offset + (n & 63)));
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kG6Offset + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(kG6Offset + (group << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view s) {
  for (char c : s) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw std::invalid_argument("graph6: byte outside [63,126]");
  }
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  int n = 0;
  std::size_t pos = 0;
  if (s[0] != '~') {
    n = s[0] - kG6Offset;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == '~')
      throw std::invalid_argument("graph6: unsupported or truncated header");
    n = ((s[1] - kG6Offset) << 12) | ((s[2] - kG6Offset) << 6) | (s[3] - kG6Offset);
    pos = 4;
  }
  if (n < 1) throw std::invalid_argument("graph6: zero vertices");
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6: more than 64 vertices");
  const std::size_t slots = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (slots + 5) / 6;
  if (s.size() - pos != body)
    throw std::invalid_argument("graph6: body length " +
                                std::to_string(s.size() - pos) + ", expected " +
                                std::to_string(body));
  std::vector<Edge> edges;
  std::size_t slot = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++slot) {
      int group = s[pos + slot / 6] - kG6Offset;
      if ((group >> (5 - slot % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (slots % 6) {
    int last = s.back() - kG6Offset;
    if (last & ((1 << (6 - slots % 6)) - 1))
      throw std::invalid_argument("graph6: non-zero padding bits");
  }
  return Graph(n, edges);
}

}  // namespace degpow
