#include "degpow/structure.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace degpow {

namespace {

using Rows = std::array<VertexSet, Graph::kMaxVertices>;

VertexSet component_of(const Graph& g, int start, VertexSet within) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(first_vertex(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int edges_within(const Graph& g, VertexSet within) {
  int twice = 0;
  for (VertexSet s = within; s; s &= s - 1)
    twice += popcount(g.neighbors(first_vertex(s)) & within);
  return twice / 2;
}

struct BlockSearch {
  const Graph& g;
  std::array<int, Graph::kMaxVertices> disc{};
  std::array<int, Graph::kMaxVertices> low{};
  std::vector<Edge> stack;
  BlockDecomposition out;
  int time = 0;

  void visit(int u, int parent) {
    disc[u] = low[u] = ++time;
    int children = 0;
    for (VertexSet nb = g.neighbors(u); nb; nb &= nb - 1) {
      const int v = first_vertex(nb);
      if (!disc[v]) {
        ++children;
        stack.emplace_back(u, v);
        visit(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent >= 0 || children > 1) out.cut_vertices |= bit(u);
          VertexSet block = 0;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block |= bit(a) | bit(b);
            if (a == u && b == v) break;
          }
          out.blocks.push_back(block);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

// Residual search in the vertex-split network: every vertex other than s and
// t has an in-copy and an out-copy joined by a unit arc; each edge uv gives
// unit arcs u_out -> v_in and v_out -> u_in.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : g_(g), s_(s), t_(t) {}

  bool augment() {
    constexpr int kNone = -1;
    std::array<int, 2 * Graph::kMaxVertices> parent;
    parent.fill(kNone);
    VertexSet seen_in = bit(s_), seen_out = bit(s_);
    std::array<int, 2 * Graph::kMaxVertices> queue;
    int head = 0, tail = 0;
    queue[tail++] = out_id(s_);
    while (head < tail) {
      const int node = queue[head++];
      const int v = node >> 1;
      if (node & 1) {
        // v_out: forward edge arcs, then the reverse of v's internal arc.
        for (VertexSet nb = g_.neighbors(v) & ~flow_out_[v] & ~seen_in; nb; nb &= nb - 1) {
          const int w = first_vertex(nb);
          seen_in |= bit(w);
          parent[in_id(w)] = node;
          if (w == t_) return apply(in_id(w), parent);
          queue[tail++] = in_id(w);
        }
        if (v != s_ && (used_ & bit(v)) && !(seen_in & bit(v))) {
          seen_in |= bit(v);
          parent[in_id(v)] = node;
          queue[tail++] = in_id(v);
        }
      } else {
        // v_in: internal arc if free, then cancel flow entering v.
        if (!(used_ & bit(v)) && !(seen_out & bit(v))) {
          seen_out |= bit(v);
          parent[out_id(v)] = node;
          queue[tail++] = out_id(v);
        }
        for (VertexSet back = flow_in_[v] & ~seen_out; back; back &= back - 1) {
          const int u = first_vertex(back);
          seen_out |= bit(u);
          parent[out_id(u)] = node;
          queue[tail++] = out_id(u);
        }
      }
    }
    return false;
  }

 private:
  static int in_id(int v) { return 2 * v; }
  static int out_id(int v) { return 2 * v + 1; }

  bool apply(int node, const std::array<int, 2 * Graph::kMaxVertices>& parent) {
    while (node != out_id(s_)) {
      const int prev = parent[node];
      const int a = prev >> 1, b = node >> 1;
      if (a == b) {
        if (prev & 1) used_ &= ~bit(a);  // a_out -> a_in undoes the internal arc
        else used_ |= bit(a);
      } else if (prev & 1) {
        flow_out_[a] |= bit(b);
        flow_in_[b] |= bit(a);
      } else {
        // a_in -> b_out cancels one unit on b_out -> a_in
        flow_out_[b] &= ~bit(a);
        flow_in_[a] &= ~bit(b);
      }
      node = prev;
    }
    return true;
  }

  const Graph& g_;
  int s_, t_;
  Rows flow_out_{};
  Rows flow_in_{};
  VertexSet used_ = 0;
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockSearch search{g, {}, {}, {}, {}, 0};
  for (int v = 0; v < g.order(); ++v)
    if (!search.disc[v]) search.visit(v, -1);
  return std::move(search.out);
}

bool is_connected(const Graph& g) {
  return component_of(g, 0, g.vertices()) == g.vertices();
}

bool has_cycle(const Graph& g, VertexSet within) {
  within &= g.vertices();
  int components = 0;
  for (VertexSet rest = within; rest; ++components)
    rest &= ~component_of(g, first_vertex(rest), within);
  return edges_within(g, within) > popcount(within) - components;
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbors(u) & g.neighbors(v)) return true;
  return false;
}

bool has_c4(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (popcount(g.neighbors(u) & g.neighbors(v)) >= 2) return true;
  return false;
}

bool has_even_cycle(const Graph& g) {
  for (VertexSet block : block_decomposition(g).blocks) {
    const int nv = popcount(block);
    if (nv < 3) continue;
    const int ne = edges_within(g, block);
    if (ne > nv || nv % 2 == 0) return true;
  }
  return false;
}

int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  if (s == t || g.adjacent(s, t))
    throw std::invalid_argument("local_vertex_connectivity: s, t must be distinct and non-adjacent");
  SplitFlow flow(g, s, t);
  int paths = 0;
  while (paths < limit && flow.augment()) ++paths;
  return paths;
}

int local_edge_connectivity(const Graph& g, int s, int t, int limit) {
  if (s == t) throw std::invalid_argument("local_edge_connectivity: s == t");
  // pos[u] bit v: one unit flows u -> v. Residual u -> v exists unless it does.
  Rows pos{};
  int paths = 0;
  while (paths < limit) {
    std::array<int, Graph::kMaxVertices> parent;
    VertexSet seen = bit(s);
    std::array<int, Graph::kMaxVertices> queue;
    int head = 0, tail = 0;
    queue[tail++] = s;
    bool reached = false;
    while (head < tail && !reached) {
      const int u = queue[head++];
      for (VertexSet nb = g.neighbors(u) & ~pos[u] & ~seen; nb; nb &= nb - 1) {
        const int v = first_vertex(nb);
        seen |= bit(v);
        parent[v] = u;
        if (v == t) {
          reached = true;
          break;
        }
        queue[tail++] = v;
      }
    }
    if (!reached) break;
    for (int v = t; v != s; v = parent[v]) {
      const int u = parent[v];
      if (pos[v] & bit(u)) pos[v] &= ~bit(u);
      else pos[u] |= bit(v);
    }
    ++paths;
  }
  return paths;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (g.size() == n * (n - 1) / 2) return n - 1;
  if (!is_connected(g)) return 0;
  int best = g.min_degree();
  for (int s = 0; s < n && best > 0; ++s)
    for (VertexSet others = g.vertices() & ~g.neighbors(s) & ~(bit(s + 1) - 1); others;
         others &= others - 1)
      best = std::min(best, local_vertex_connectivity(g, s, first_vertex(others), best));
  return best;
}

int edge_connectivity(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("edge_connectivity: needs n >= 2");
  int best = g.min_degree();
  for (int t = 1; t < g.order() && best > 0; ++t)
    best = std::min(best, local_edge_connectivity(g, 0, t, best));
  return best;
}

bool is_t_connected(const Graph& g, int t) {
  const int n = g.order();
  if (t <= 0) return true;
  if (n <= t || g.min_degree() < t) return false;
  for (int s = 0; s < n; ++s)
    for (VertexSet others = g.vertices() & ~g.neighbors(s) & ~(bit(s + 1) - 1); others;
         others &= others - 1)
      if (local_vertex_connectivity(g, s, first_vertex(others), t) < t) return false;
  return true;
}

bool is_t_edge_connected(const Graph& g, int t) {
  if (t <= 0) return true;
  if (g.order() < 2 || g.min_degree() < t) return false;
  for (int v = 1; v < g.order(); ++v)
    if (local_edge_connectivity(g, 0, v, t) < t) return false;
  return true;
}

bool is_minimally_t_connected(const Graph& g, int t) {
  if (!is_t_connected(g, t)) return false;
  for (auto [u, v] : g.edges())
    if (is_t_connected(g.without_edge(u, v), t)) return false;
  return true;
}

bool is_minimally_t_edge_connected(const Graph& g, int t) {
  if (!is_t_edge_connected(g, t)) return false;
  for (auto [u, v] : g.edges())
    if (is_t_edge_connected(g.without_edge(u, v), t)) return false;
  return true;
}

int degeneracy(const Graph& g) {
  VertexSet remaining = g.vertices();
  int k = 0;
  while (remaining) {
    int pick = -1, pick_degree = g.order();
    for (VertexSet s = remaining; s; s &= s - 1) {
      const int v = first_vertex(s);
      const int d = popcount(g.neighbors(v) & remaining);
      if (d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    k = std::max(k, pick_degree);
    remaining &= ~bit(pick);
  }
  return k;
}

bool is_k_degenerate(const Graph& g, int k) { return degeneracy(g) <= k; }

bool is_maximal_k_degenerate(const Graph& g, int k) {
  if (g.order() < k + 1)
    throw std::invalid_argument("is_maximal_k_degenerate: needs n >= k + 1");
  return g.size() == k * g.order() - k * (k + 1) / 2 && is_k_degenerate(g, k);
}

bool has_chorded_cycle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (local_vertex_connectivity(g.without_edge(u, v), u, v, 2) >= 2) return true;
  return false;
}

bool has_cycle_meeting_at_most_one(const Graph& g, VertexSet marked) {
  const VertexSet free = g.vertices() & ~marked;
  if (has_cycle(g, free)) return true;
  for (VertexSet m = marked & g.vertices(); m; m &= m - 1)
    if (has_cycle(g, free | bit(first_vertex(m)))) return true;
  return false;
}

}  // namespace degpow
