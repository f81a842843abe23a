#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degpow/exact_int.hpp"
#include "degpow/graph.hpp"

namespace degpow {

/// graph6 string of a canonical relabelling. Equal forms iff isomorphic.
///
/// The relabelling is the one whose upper-triangle bit string is smallest
/// among the leaves of an individualisation/refinement search, so the order
/// of forms agrees with the order of those bit strings.
struct CanonicalForm {
  std::string graph6;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  std::vector<int> position;  // vertex -> canonical label
  CanonicalForm form;
};

constexpr int kCanonicalDefaultLimit = 10;

/// Throws std::invalid_argument when g has more than max_n vertices.
CanonicalLabeling canonical_labeling(const Graph& g, int max_n = kCanonicalDefaultLimit);
CanonicalForm canonical_form(const Graph& g, int max_n = kCanonicalDefaultLimit);

/// Conjunction of filters.
///
/// Hereditary filters (c4_free, even_cycle_free, max_edges) survive edge
/// deletion and prune the generation tree. The rest are checked on each
/// generated graph only.
struct SearchPredicate {
  bool c4_free = false;
  bool even_cycle_free = false;
  std::optional<int> max_edges;

  std::optional<int> min_degree;
  std::optional<int> minimally_connected;       // t
  std::optional<int> minimally_edge_connected;  // t
  std::optional<int> degenerate;                // k: degeneracy <= k

  bool hereditary_ok(const Graph& g) const;
  bool leaf_ok(const Graph& g) const;
  bool accepts(const Graph& g) const { return hereditary_ok(g) && leaf_ok(g); }

  /// "c4_free,max_edges(6),min_degree(1)"; "all" when empty.
  std::string describe() const;
};

/// Orders up to 8 run by default; 9 and 10 need max_n raised explicitly.
constexpr int kEnumerationDefaultMaxN = 8;
constexpr int kEnumerationHardMaxN = 10;

struct EnumerateOptions {
  int jobs = 1;
  int max_n = kEnumerationDefaultMaxN;
  /// Keep every visited form and throw std::logic_error on a repeat.
  bool check_isomorph_free = false;
};

/// Reads DEGPOW_MAX_N, clamped to [default, hard max]; default when unset.
int enumeration_guard_from_env();

/// Called once per isomorphism class. With jobs > 1 calls are concurrent.
using GraphVisitor = std::function<void(const Graph&, const CanonicalForm&)>;

/// Visits one representative of every isomorphism class of graphs on n
/// vertices satisfying `pred`, by canonical edge augmentation. Returns the
/// number of classes visited. Visit order is deterministic when jobs == 1.
std::uint64_t enumerate_graphs(int n, const SearchPredicate& pred, const GraphVisitor& visit,
                               const EnumerateOptions& options = {});

struct ExtremalReport {
  int n = 0;
  int p = 0;
  std::string predicate;
  std::optional<ExactInt> max_value;  // empty when no graph qualifies
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  std::uint64_t graphs_examined = 0;  // isomorphism classes satisfying pred

  friend bool operator==(const ExtremalReport&, const ExtremalReport&) = default;
};

ExtremalReport extremal_ep(int n, int p, const SearchPredicate& pred,
                           const EnumerateOptions& options = {});

/// One enumeration, one report per exponent in `ps`.
std::vector<ExtremalReport> extremal_ep(int n, std::span<const int> ps, const SearchPredicate& pred,
                                        const EnumerateOptions& options = {});

}  // namespace degpow
