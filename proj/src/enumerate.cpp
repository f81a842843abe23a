#include "degpow/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "degpow/structure.hpp"

namespace degpow {

bool SearchPredicate::hereditary_ok(const Graph& g) const {
  if (max_edges && g.size() > *max_edges) return false;
  if (c4_free && has_c4(g)) return false;
  if (even_cycle_free && has_even_cycle(g)) return false;
  return true;
}

bool SearchPredicate::leaf_ok(const Graph& g) const {
  if (min_degree && g.min_degree() < *min_degree) return false;
  if (degenerate && !is_k_degenerate(g, *degenerate)) return false;
  if (minimally_connected && !is_minimally_t_connected(g, *minimally_connected)) return false;
  if (minimally_edge_connected && !is_minimally_t_edge_connected(g, *minimally_edge_connected))
    return false;
  return true;
}

std::string SearchPredicate::describe() const {
  std::vector<std::string> parts;
  auto with = [](const char* name, int v) { return std::string(name) + "(" + std::to_string(v) + ")"; };
  if (c4_free) parts.emplace_back("c4_free");
  if (even_cycle_free) parts.emplace_back("even_cycle_free");
  if (max_edges) parts.push_back(with("max_edges", *max_edges));
  if (min_degree) parts.push_back(with("min_degree", *min_degree));
  if (minimally_connected) parts.push_back(with("minimally_connected", *minimally_connected));
  if (minimally_edge_connected)
    parts.push_back(with("minimally_edge_connected", *minimally_edge_connected));
  if (degenerate) parts.push_back(with("degenerate", *degenerate));
  if (parts.empty()) return "all";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "," + parts[i];
  return out;
}

int enumeration_guard_from_env() {
  const char* raw = std::getenv("DEGPOW_MAX_N");
  if (!raw) return kEnumerationDefaultMaxN;
  const int value = std::atoi(raw);
  return std::clamp(value, kEnumerationDefaultMaxN, kEnumerationHardMaxN);
}

namespace {

struct Node {
  Graph graph;
  CanonicalForm form;
};

// Canonical augmentation: a child G+e is kept iff deleting the last edge of
// its canonical labelling yields a graph isomorphic to G, and no earlier
// child of G had the same form.
class Generator {
 public:
  Generator(int n, const SearchPredicate& pred, const GraphVisitor& visit, bool check_isomorph_free)
      : n_(n), pred_(pred), visit_(visit), check_(check_isomorph_free) {}

  void process(const Node& node) {
    if (check_) {
      std::lock_guard lock(seen_mutex_);
      if (!seen_.insert(node.form.graph6).second)
        throw std::logic_error("enumerate_graphs: isomorph visited twice: " + node.form.graph6);
    }
    if (pred_.leaf_ok(node.graph)) {
      ++count_;
      if (visit_) visit_(node.graph, node.form);
    }
  }

  std::vector<Node> children(const Node& node) const {
    std::vector<Node> out;
    const Graph& g = node.graph;
    if (pred_.max_edges && g.size() >= *pred_.max_edges) return out;
    std::set<std::string> taken;
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (g.adjacent(u, v)) continue;
        Graph child = g.with_edge(u, v);
        if (!pred_.hereditary_ok(child)) continue;
        CanonicalLabeling lab = canonical_labeling(child, kEnumerationHardMaxN);
        if (taken.contains(lab.form.graph6)) continue;
        auto [a, b] = canonical_last_edge(child, lab.position);
        bool from_here = (a == u && b == v) || (a == v && b == u);
        if (!from_here) {
          const Graph parent = child.without_edge(a, b);
          from_here = degree_sequence(parent) == degree_sequence(g) &&
                      canonical_form(parent, kEnumerationHardMaxN) == node.form;
        }
        if (!from_here) continue;
        taken.insert(lab.form.graph6);
        out.push_back({std::move(child), std::move(lab.form)});
      }
    }
    return out;
  }

  void descend(const Node& node) {
    process(node);
    for (const Node& child : children(node)) descend(child);
  }

  std::uint64_t count() const { return count_; }

 private:
  Edge canonical_last_edge(const Graph& g, const std::vector<int>& position) const {
    std::array<int, Graph::kMaxVertices> at{};
    for (int v = 0; v < n_; ++v) at[position[v]] = v;
    for (int j = n_ - 1; j >= 1; --j)
      for (int i = j - 1; i >= 0; --i)
        if (g.adjacent(at[i], at[j])) return {at[i], at[j]};
    throw std::logic_error("canonical_last_edge: graph has no edges");
  }

  int n_;
  const SearchPredicate& pred_;
  const GraphVisitor& visit_;
  bool check_;
  std::atomic<std::uint64_t> count_{0};
  std::mutex seen_mutex_;
  std::set<std::string> seen_;
};

Node root(int n) {
  Graph empty(n);
  return {empty, canonical_form(empty, kEnumerationHardMaxN)};
}

}  // namespace

std::uint64_t enumerate_graphs(int n, const SearchPredicate& pred, const GraphVisitor& visit,
                               const EnumerateOptions& options) {
  if (options.max_n > kEnumerationHardMaxN)
    throw std::invalid_argument("enumerate_graphs: guard above hard limit 10");
  if (n < 1 || n > options.max_n)
    throw std::invalid_argument("enumerate_graphs: n=" + std::to_string(n) + " outside [1, " +
                                std::to_string(options.max_n) + "]");
  Generator gen(n, pred, visit, options.check_isomorph_free);
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    gen.descend(root(n));
    return gen.count();
  }

  // Expand level by level until there are enough independent subtrees.
  std::vector<Node> frontier{root(n)};
  while (!frontier.empty() && frontier.size() < static_cast<std::size_t>(8 * jobs)) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      gen.process(node);
      for (Node& child : gen.children(node)) next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }

  std::atomic<std::size_t> cursor{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        try {
          for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) gen.descend(frontier[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return gen.count();
}

std::vector<ExtremalReport> extremal_ep(int n, std::span<const int> ps, const SearchPredicate& pred,
                                        const EnumerateOptions& options) {
  for (int p : ps)
    if (p < 1) throw std::invalid_argument("extremal_ep: p must be >= 1");
  std::vector<ExtremalReport> reports(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    reports[i].n = n;
    reports[i].p = ps[i];
    reports[i].predicate = pred.describe();
  }
  std::mutex merge_mutex;
  auto visit = [&](const Graph& g, const CanonicalForm& form) {
    std::vector<ExactInt> values;
    values.reserve(ps.size());
    for (int p : ps) values.push_back(ep(g, p));
    std::lock_guard lock(merge_mutex);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      ExtremalReport& r = reports[i];
      if (!r.max_value || values[i] > *r.max_value) {
        r.max_value = values[i];
        r.witnesses.assign({form.graph6});
      } else if (values[i] == *r.max_value) {
        r.witnesses.push_back(form.graph6);
      }
    }
  };
  const std::uint64_t count = enumerate_graphs(n, pred, visit, options);
  for (ExtremalReport& r : reports) {
    r.graphs_examined = count;
    std::sort(r.witnesses.begin(), r.witnesses.end());
  }
  return reports;
}

ExtremalReport extremal_ep(int n, int p, const SearchPredicate& pred, const EnumerateOptions& options) {
  const int ps[] = {p};
  return std::move(extremal_ep(n, ps, pred, options).front());
}

}  // namespace degpow
