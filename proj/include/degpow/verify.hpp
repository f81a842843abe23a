#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degpow/enumerate.hpp"
#include "degpow/exact_int.hpp"
#include "degpow/int_tuple.hpp"

namespace degpow {

/// Outcome of one check. A failing record always carries a witness.
struct VerificationRecord {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::string value;
  std::string witness;
  std::string detail;

  /// "n=5;p=2"
  std::string params_text() const;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

/// Builds a record; throws std::logic_error for a failure without a witness.
VerificationRecord make_record(std::string check,
                               std::vector<std::pair<std::string, std::string>> params, bool pass,
                               std::string value, std::string witness, std::string detail = {});

// ---------------------------------------------------------------------------
// Majorizing tuples of the C4-free argument

enum class LemmaId { lemma1, lemma12 };

std::string_view to_string(LemmaId id);

struct LemmaTupleSpec {
  LemmaId lemma;
  int n;
  std::optional<int> q;  // needed only for the third tuple
};

struct LemmaTuples {
  IntTuple first;                 // friendship degree sequence
  IntTuple second;                // balanced competitor
  std::optional<IntTuple> third;  // large-first-degree competitor, when q given
  int r = 0;
  int epsilon = 0;
};

/// q values admitted for the third tuple: 2 <= q < (n-1)/2 for lemma1,
/// 2 <= q < n/2 - 1 for lemma12. May be empty.
std::vector<int> lemma_q_range(LemmaId lemma, int n);

/// Throws std::invalid_argument when n or q lies outside the lemma's range.
/// Asserts that all three tuples have the friendship edge total.
LemmaTuples lemma_tuple_build(const LemmaTupleSpec& spec);

/// Part (i) once, part (ii) for every admissible q; strictness per lemma
/// (lemma1 part (i) allows equality). Requires p > 1.
VerificationRecord lemma_tuple_check(LemmaId lemma, int n, int p);

// ---------------------------------------------------------------------------
// Brute-force theorem instances

enum class TheoremKind { t1, c1, t2i, t2ii, t3, t4 };

struct TheoremId {
  TheoremKind kind;
  int k = 0;  // degeneracy bound for t4
};

std::string to_string(const TheoremId& id);

/// Smallest n the theorem covers.
int theorem_min_n(const TheoremId& id);

/// Class searched for the theorem at order n.
SearchPredicate theorem_predicate(const TheoremId& id, int n);

struct TheoremExpectation {
  ExactInt max_value;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
};

/// Bound and extremal set claimed by the theorem. For t2ii the friendship
/// graph takes part only for odd n.
TheoremExpectation theorem_expectation(const TheoremId& id, int n, int p);

/// One enumeration, one record per exponent.
std::vector<VerificationRecord> brute_force_theorem(const TheoremId& id, int n,
                                                    std::span<const int> ps,
                                                    const EnumerateOptions& options = {});
VerificationRecord brute_force_theorem(const TheoremId& id, int n, int p,
                                       const EnumerateOptions& options = {});

// ---------------------------------------------------------------------------
// Closed-form scans

enum class ThresholdPair { F_vs_K2, W_vs_K3 };

std::string_view to_string(ThresholdPair pair);

/// Smallest n0 such that e_p(first) < e_p(second) for every scanned n in
/// [n0, n_max]. F_vs_K2 scans odd n from 5, W_vs_K3 all n from 4.
/// nullopt when the inequality fails at n_max. Requires p >= 2 and
/// n_max >= 2p + 4.
std::optional<int> threshold_scan(ThresholdPair pair, int p, int n_max);

/// Computer-verified thresholds reported for the pair, when tabulated
/// (W_vs_K3: p = 2..11; F_vs_K2: p = 2..4).
std::optional<int> threshold_reference(ThresholdPair pair, int p);

/// Scan plus comparison with the reference (or with the analytic tail bound
/// 2p-1 / 2p where no table entry exists).
VerificationRecord threshold_check(ThresholdPair pair, int p, int n_max);

enum class AppendixPart { i, ii };

/// (i): 2(n-2)^p - (n-1)^p - 2^p > 0 over odd n in [2p-1, n_max], p >= 5.
/// (ii): 3(n-3)^p - (n-1)^p - 2*3^p > 0 over n in [2p, n_max], p >= 12.
VerificationRecord appendix_a_scan(AppendixPart part, int p, int n_max);

/// Polarity graph identities at n = q^2+q+1. For q <= 7 the graph is also
/// constructed and its degrees, C4-freeness and e_p are checked directly.
VerificationRecord polarity_check(int q, int p);

// ---------------------------------------------------------------------------
// Structural facts over enumerated classes

enum class StructuralLemma {
  min_degree_of_minimally_connected,       // delta = t
  edge_bound_of_minimally_connected,       // m <= t(n-t), equality only K_{t,n-t}
  triangle_free_minimally_2_connected,     // n >= 4
  degree3_on_cycles_minimally_3_connected, // every cycle has two degree-3 vertices
  min_degree_of_minimally_2_edge_connected,  // delta = 2
  min_degree_of_maximal_degenerate,        // delta = k
  maximal_degenerate_edge_count,           // saturated iff k n - k(k+1)/2 edges
  chordless_minimally_2_edge_connected,    // no cycle has a chord
  edge_bound_of_minimally_2_edge_connected,  // n >= 6: m <= 2(n-2), equality only K_{2,n-2}
};

std::string_view to_string(StructuralLemma lemma);

/// `param` is t or k where the lemma has one (ignored otherwise).
VerificationRecord structural_lemma_check(StructuralLemma lemma, int n, int param,
                                          const EnumerateOptions& options = {});

/// Number of isomorphism classes on n vertices.
std::optional<std::uint64_t> known_graph_count(int n);

VerificationRecord class_count_check(int n, const EnumerateOptions& options = {});

// ---------------------------------------------------------------------------
// Suites

enum class SuiteId {
  thm1, cor1, thm2, thm3, thm4, lemma1, lemma12, appendixA, thresholds, polarity, structure,
  counts, all_desk
};

std::optional<SuiteId> parse_suite(std::string_view name);
std::string_view to_string(SuiteId id);

/// Grid overrides; unset fields use the suite's default grid.
struct SuiteGrid {
  std::optional<std::pair<int, int>> n_range;
  std::vector<int> ps;
  std::vector<int> ks;
  std::vector<int> qs;
  std::optional<ThresholdPair> pair;
  std::optional<int> p_max;
  std::optional<int> n_max;
};

/// Largest enumeration order the suite's grid needs.
int suite_max_order(SuiteId id, const SuiteGrid& grid);

/// Records in canonical order, independent of options.jobs.
std::vector<VerificationRecord> run_suite(SuiteId id, const SuiteGrid& grid,
                                          const EnumerateOptions& options = {});

}  // namespace degpow
