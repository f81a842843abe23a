#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "degpow/enumerate.hpp"

namespace degpow {

namespace {

constexpr int kN = Graph::kMaxVertices;
constexpr int kKeyWords = (kN * (kN - 1) / 2 + 63) / 64;

using Coloring = std::array<int, kN>;
using VertexMap = std::array<int, kN>;

// Upper-triangle adjacency bits in graph6 slot order, most significant first.
struct Key {
  std::array<std::uint64_t, kKeyWords> words{};
  int used = 0;

  friend bool operator==(const Key& a, const Key& b) {
    return std::equal(a.words.begin(), a.words.begin() + a.used, b.words.begin());
  }
  friend bool operator<(const Key& a, const Key& b) {
    return std::lexicographical_compare(a.words.begin(), a.words.begin() + a.used,
                                        b.words.begin(), b.words.begin() + b.used);
  }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Coloring color{};
    std::vector<int> prefix;
    search(color, 1, prefix);
    CanonicalLabeling out;
    out.position.assign(best_position_.begin(), best_position_.begin() + n_);
    out.form.graph6 = to_graph6(permute(g_, out.position));
    return out;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable. Cells keep
  // their relative order, and new cells are ordered by signature, so the
  // result depends only on the coloured graph.
  void refine(Coloring& color, int& cells) const {
    std::array<std::array<std::uint8_t, kN + 1>, kN> sig;
    std::array<int, kN> order;
    while (true) {
      std::array<VertexSet, kN> members{};
      for (int v = 0; v < n_; ++v) members[color[v]] |= bit(v);
      const std::size_t width = static_cast<std::size_t>(cells) + 1;
      for (int v = 0; v < n_; ++v) {
        sig[v][0] = static_cast<std::uint8_t>(color[v]);
        for (int c = 0; c < cells; ++c)
          sig[v][c + 1] = static_cast<std::uint8_t>(popcount(g_.neighbors(v) & members[c]));
      }
      std::iota(order.begin(), order.begin() + n_, 0);
      std::sort(order.begin(), order.begin() + n_, [&](int a, int b) {
        return std::memcmp(sig[a].data(), sig[b].data(), width) < 0;
      });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i && std::memcmp(sig[order[i - 1]].data(), sig[order[i]].data(), width) != 0) ++next;
        color[order[i]] = next;
      }
      if (next + 1 == cells) return;
      cells = next + 1;
    }
  }

  Key key_for(const Coloring& position) const {
    VertexMap at{};
    for (int v = 0; v < n_; ++v) at[position[v]] = v;
    Key key;
    int slot = 0;
    for (int j = 1; j < n_; ++j) {
      const VertexSet row = g_.neighbors(at[j]);
      for (int i = 0; i < j; ++i, ++slot)
        if ((row >> at[i]) & 1) key.words[slot / 64] |= std::uint64_t{1} << (63 - slot % 64);
    }
    key.used = (slot + 63) / 64;
    return key;
  }

  void leaf(const Coloring& position) {
    const Key key = key_for(position);
    if (!have_best_ || key < best_key_) {
      have_best_ = true;
      best_key_ = key;
      best_position_ = position;
      return;
    }
    if (key == best_key_) {
      VertexMap best_at{};
      for (int v = 0; v < n_; ++v) best_at[best_position_[v]] = v;
      VertexMap gamma{};
      bool identity = true;
      for (int v = 0; v < n_; ++v) {
        gamma[v] = best_at[position[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity) automorphisms_.push_back(gamma);
    }
  }

  // Representative of v's orbit under the known automorphisms that fix the
  // individualised prefix pointwise.
  VertexMap orbits(const std::vector<int>& prefix) const {
    VertexMap parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const VertexMap& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(Coloring color, int cells, std::vector<int>& prefix) {
    refine(color, cells);
    if (cells == n_) {
      leaf(color);
      return;
    }
    std::array<int, kN> size{};
    for (int v = 0; v < n_; ++v) ++size[color[v]];
    int target = 0;
    while (size[target] == 1) ++target;

    VertexSet explored_roots = 0;
    for (int v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      const VertexMap orbit = orbits(prefix);
      bool covered = false;
      for (VertexSet e = explored_roots; e && !covered; e &= e - 1)
        covered = orbit[first_vertex(e)] == orbit[v];
      if (covered) continue;
      explored_roots |= bit(v);

      Coloring child = color;
      for (int u = 0; u < n_; ++u)
        if (color[u] > target || (color[u] == target && u != v)) ++child[u];
      prefix.push_back(v);
      search(child, cells + 1, prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Key best_key_;
  Coloring best_position_{};
  std::vector<VertexMap> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, int max_n) {
  if (g.order() > max_n)
    throw std::invalid_argument("canonical_labeling: n=" + std::to_string(g.order()) +
                                " exceeds configured limit " + std::to_string(max_n));
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g, int max_n) {
  return canonical_labeling(g, max_n).form;
}

}  // namespace degpow
