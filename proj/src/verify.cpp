#include "degpow/verify.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

#include "degpow/families.hpp"
#include "degpow/majorization.hpp"
#include "degpow/structure.hpp"

namespace degpow {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(int v) { return std::to_string(v); }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

int friendship_edge_bound(int n) { return 3 * (n - 1) / 2; }

}  // namespace

std::string VerificationRecord::params_text() const {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

VerificationRecord make_record(std::string check, Params params, bool pass, std::string value,
                               std::string witness, std::string detail) {
  if (!pass && witness.empty())
    throw std::logic_error("make_record: failing record for " + check + " lacks a witness");
  return {std::move(check), std::move(params), pass, std::move(value), std::move(witness),
          std::move(detail)};
}

// ---------------------------------------------------------------------------

std::string_view to_string(LemmaId id) { return id == LemmaId::lemma1 ? "lemma1" : "lemma12"; }

std::vector<int> lemma_q_range(LemmaId lemma, int n) {
  std::vector<int> qs;
  // lemma1: 2q < n - 1; lemma12: 2q < n - 2
  const int bound = lemma == LemmaId::lemma1 ? n - 1 : n - 2;
  for (int q = 2; 2 * q < bound; ++q) qs.push_back(q);
  return qs;
}

LemmaTuples lemma_tuple_build(const LemmaTupleSpec& spec) {
  const int n = spec.n;
  const bool odd_lemma = spec.lemma == LemmaId::lemma1;
  if (odd_lemma && (n < 7 || n % 2 == 0))
    throw std::invalid_argument("lemma1 needs odd n >= 7, got " + str(n));
  if (!odd_lemma && (n < 6 || n % 2 == 1))
    throw std::invalid_argument("lemma12 needs even n >= 6, got " + str(n));

  std::vector<int> first(n, 2);
  first[0] = n - 1;
  if (!odd_lemma) first[n - 1] = 1;

  std::vector<int> second(n, 1);
  if (odd_lemma) {
    second[0] = second[1] = second[2] = (n + 1) / 2;
    second[3] = (n - 1) / 2;
  } else {
    second[0] = n / 2 + 1;
    second[1] = second[2] = n / 2;
    second[3] = n / 2 - 1;
  }

  LemmaTuples out{IntTuple(first), IntTuple(second), std::nullopt, 0, 0};
  const long long total = odd_lemma ? 3LL * (n - 1) : 3LL * n - 4;

  if (spec.q) {
    const int q = *spec.q;
    const auto admissible = lemma_q_range(spec.lemma, n);
    if (std::find(admissible.begin(), admissible.end(), q) == admissible.end())
      throw std::invalid_argument(std::string(to_string(spec.lemma)) + ": q=" + str(q) +
                                  " outside the admissible range for n=" + str(n));
    const int excess = (q - 1) * (n - 2) + (odd_lemma ? 0 : 1);
    out.r = excess / q;
    out.epsilon = excess - q * out.r;
    std::vector<int> third;
    third.push_back(n - q);
    third.insert(third.end(), n - out.r - 2, q + 1);
    third.push_back(q + 1 - out.epsilon);
    third.insert(third.end(), out.r, 1);
    out.third = IntTuple(third);
    if (out.third->sum() != total)
      throw std::logic_error("lemma_tuple_build: third tuple sum " + str(int(out.third->sum())));
  }
  if (out.first.sum() != total || out.second.sum() != total)
    throw std::logic_error("lemma_tuple_build: tuple sums differ from " + str(int(total)));
  return out;
}

VerificationRecord lemma_tuple_check(LemmaId lemma, int n, int p) {
  if (p <= 1) throw std::invalid_argument("lemma_tuple_check: p must be > 1");
  const Params params{{"n", str(n)}, {"p", str(p)}};
  const auto base = lemma_tuple_build({lemma, n, std::nullopt});
  const ExactInt top = p_power_norm(base.first, p);
  const ExactInt second = p_power_norm(base.second, p);
  const ExactInt gap = top - second;
  const bool part_i = lemma == LemmaId::lemma1 ? second <= top : second < top;
  if (!part_i)
    return make_record(std::string(to_string(lemma)), params, false, to_string(gap),
                       base.second.to_string(), "part (i) fails");

  const auto qs = lemma_q_range(lemma, n);
  for (int q : qs) {
    const auto tuples = lemma_tuple_build({lemma, n, q});
    const ExactInt third = p_power_norm(*tuples.third, p);
    if (!(third < top))
      return make_record(std::string(to_string(lemma)), params, false, to_string(gap),
                         tuples.third->to_string(), "part (ii) fails at q=" + str(q));
  }
  std::string detail = gap == 0 ? "part (i) equality" : "part (i) strict";
  detail += qs.empty() ? "; part (ii) vacuous (no admissible q)"
                       : "; part (ii) q=" + str(qs.front()) + ".." + str(qs.back());
  return make_record(std::string(to_string(lemma)), params, true, to_string(gap), "", detail);
}

// ---------------------------------------------------------------------------

std::string to_string(const TheoremId& id) {
  switch (id.kind) {
    case TheoremKind::t1: return "thm1";
    case TheoremKind::c1: return "cor1";
    case TheoremKind::t2i: return "thm2i";
    case TheoremKind::t2ii: return "thm2ii";
    case TheoremKind::t3: return "thm3";
    case TheoremKind::t4: return "thm4";
  }
  return "?";
}

int theorem_min_n(const TheoremId& id) {
  switch (id.kind) {
    case TheoremKind::t3: return 8;
    case TheoremKind::t4: return id.k + 1;
    default: return 4;
  }
}

SearchPredicate theorem_predicate(const TheoremId& id, int n) {
  SearchPredicate pred;
  switch (id.kind) {
    case TheoremKind::t1:
      pred.c4_free = true;
      pred.max_edges = friendship_edge_bound(n);
      pred.min_degree = 1;
      break;
    case TheoremKind::c1:
      pred.even_cycle_free = true;
      break;
    case TheoremKind::t2i: pred.minimally_connected = 2; break;
    case TheoremKind::t2ii: pred.minimally_edge_connected = 2; break;
    case TheoremKind::t3: pred.minimally_connected = 3; break;
    case TheoremKind::t4: pred.degenerate = id.k; break;
  }
  return pred;
}

TheoremExpectation theorem_expectation(const TheoremId& id, int n, int p) {
  std::vector<std::pair<ExactInt, Graph>> candidates;
  auto add = [&](const FamilyId& f) { candidates.emplace_back(ep_closed_form(f, n, p), construct(f, n)); };
  switch (id.kind) {
    case TheoremKind::t1:
    case TheoremKind::c1: add({FamilyKind::friendship}); break;
    case TheoremKind::t2i: add({FamilyKind::complete_bipartite, 2}); break;
    case TheoremKind::t2ii:
      if (n % 2 == 1) add({FamilyKind::friendship});
      add({FamilyKind::complete_bipartite, 2});
      break;
    case TheoremKind::t3:
      add({FamilyKind::wheel});
      add({FamilyKind::complete_bipartite, 3});
      break;
    case TheoremKind::t4: add({FamilyKind::split, id.k}); break;
  }
  TheoremExpectation out;
  out.max_value = candidates.front().first;
  for (const auto& c : candidates) out.max_value = std::max(out.max_value, c.first);
  for (const auto& [value, graph] : candidates)
    if (value == out.max_value) out.witnesses.push_back(canonical_form(graph).graph6);
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());
  return out;
}

std::vector<VerificationRecord> brute_force_theorem(const TheoremId& id, int n,
                                                    std::span<const int> ps,
                                                    const EnumerateOptions& options) {
  if (n < theorem_min_n(id))
    throw std::invalid_argument(to_string(id) + ": n=" + str(n) + " below the theorem's range");
  const SearchPredicate pred = theorem_predicate(id, n);
  const auto reports = extremal_ep(n, ps, pred, options);

  // The even-cycle-free class is searched without an edge cap or a degree
  // floor; both facts are checked on what the search finds.
  std::string side_failure, side_witness;
  if (id.kind == TheoremKind::c1) {
    const int bound = friendship_edge_bound(n);
    enumerate_graphs(n, pred, [&](const Graph& g, const CanonicalForm& form) {
      if (g.size() > bound && side_witness.empty()) {
        side_failure = "even-cycle-free graph exceeds floor(3(n-1)/2) edges";
        side_witness = form.graph6;
      }
    }, options);
  }

  std::vector<VerificationRecord> records;
  for (const ExtremalReport& report : reports) {
    const Params params = id.kind == TheoremKind::t4
                              ? Params{{"k", str(id.k)}, {"n", str(n)}, {"p", str(report.p)}}
                              : Params{{"n", str(n)}, {"p", str(report.p)}};
    const TheoremExpectation expected = theorem_expectation(id, n, report.p);
    const std::string found = report.max_value ? to_string(*report.max_value) : "none";
    std::string detail = "bound " + to_string(expected.max_value) + "; witnesses " +
                         join(report.witnesses) + "; classes " +
                         std::to_string(report.graphs_examined);

    std::string witness;
    std::string failure;
    if (!report.max_value) {
      failure = "empty class";
      witness = "none";
    } else if (*report.max_value != expected.max_value || report.witnesses != expected.witnesses) {
      failure = "extremum differs from the theorem";
      std::vector<std::string> unexpected;
      std::set_symmetric_difference(report.witnesses.begin(), report.witnesses.end(),
                                    expected.witnesses.begin(), expected.witnesses.end(),
                                    std::back_inserter(unexpected));
      witness = unexpected.empty() ? report.witnesses.front() : unexpected.front();
    } else if (id.kind == TheoremKind::c1) {
      for (const auto& w : report.witnesses)
        if (from_graph6(w).min_degree() < 1) {
          failure = "extremal graph has an isolated vertex";
          witness = w;
        }
      if (failure.empty() && !side_failure.empty()) {
        failure = side_failure;
        witness = side_witness;
      }
    }
    if (!failure.empty()) detail = failure + "; " + detail;
    records.push_back(make_record(to_string(id), params, failure.empty(), found, witness, detail));
  }
  return records;
}

VerificationRecord brute_force_theorem(const TheoremId& id, int n, int p,
                                       const EnumerateOptions& options) {
  const int ps[] = {p};
  return std::move(brute_force_theorem(id, n, ps, options).front());
}

// ---------------------------------------------------------------------------

std::string_view to_string(ThresholdPair pair) {
  return pair == ThresholdPair::F_vs_K2 ? "F_vs_K2" : "W_vs_K3";
}

std::optional<int> threshold_scan(ThresholdPair pair, int p, int n_max) {
  if (p < 2) throw std::invalid_argument("threshold_scan: p must be >= 2");
  if (n_max < 2 * p + 4) throw std::invalid_argument("threshold_scan: n_max must be >= 2p+4");
  const bool friendship_pair = pair == ThresholdPair::F_vs_K2;
  const int first = friendship_pair ? 5 : 4;
  const int step = friendship_pair ? 2 : 1;
  const FamilyId lower = friendship_pair ? FamilyId{FamilyKind::friendship}
                                         : FamilyId{FamilyKind::wheel};
  const FamilyId upper{FamilyKind::complete_bipartite, friendship_pair ? 2 : 3};

  int last = n_max;
  if (friendship_pair && last % 2 == 0) --last;
  std::optional<int> n0;
  for (int n = last; n >= first; n -= step) {
    if (!(ep_closed_form(lower, n, p) < ep_closed_form(upper, n, p))) break;
    n0 = n;
  }
  return n0;
}

std::optional<int> threshold_reference(ThresholdPair pair, int p) {
  if (pair == ThresholdPair::W_vs_K3) {
    static constexpr std::array<int, 10> table{8, 9, 10, 12, 13, 15, 17, 19, 21, 23};
    if (p >= 2 && p <= 11) return table[p - 2];
    return std::nullopt;
  }
  if (p == 2 || p == 3) return 7;
  if (p == 4) return 9;
  return std::nullopt;
}

VerificationRecord threshold_check(ThresholdPair pair, int p, int n_max) {
  const Params params{{"pair", std::string(to_string(pair))}, {"p", str(p)}, {"n_max", str(n_max)}};
  const auto n0 = threshold_scan(pair, p, n_max);
  if (!n0)
    return make_record("threshold", params, false, "none", "n=" + str(n_max),
                       "inequality fails at the end of the scan");
  const auto reference = threshold_reference(pair, p);
  const int tail = pair == ThresholdPair::F_vs_K2 ? 2 * p - 1 : 2 * p;
  const bool pass = reference ? *n0 == *reference : *n0 <= tail;
  const std::string detail = reference ? "reference n>=" + str(*reference)
                                       : "analytic tail bound n>=" + str(tail);
  return make_record("threshold", params, pass, str(*n0), pass ? "" : "n0=" + str(*n0), detail);
}

VerificationRecord appendix_a_scan(AppendixPart part, int p, int n_max) {
  const bool first_part = part == AppendixPart::i;
  if (first_part && p < 5) throw std::invalid_argument("appendix_a_scan (i): p must be >= 5");
  if (!first_part && p < 12) throw std::invalid_argument("appendix_a_scan (ii): p must be >= 12");
  const Params params{{"part", first_part ? "i" : "ii"}, {"p", str(p)}, {"n_max", str(n_max)}};
  const int start = first_part ? 2 * p - 1 : 2 * p;
  const int step = first_part ? 2 : 1;
  int scanned = 0;
  std::optional<ExactInt> at_start;
  for (int n = start; n <= n_max; n += step, ++scanned) {
    const ExactInt h = first_part ? 2 * ipow(n - 2, p) - ipow(n - 1, p) - ipow(2, p)
                                  : 3 * ipow(n - 3, p) - ipow(n - 1, p) - 2 * ipow(3, p);
    if (!at_start) at_start = h;
    if (h <= 0)
      return make_record("appendixA", params, false, to_string(h), "n=" + str(n),
                         "difference not positive");
  }
  return make_record("appendixA", params, true, str(scanned), "",
                     at_start ? "h(" + str(start) + ")=" + to_string(*at_start) : "empty scan");
}

VerificationRecord polarity_check(int q, int p) {
  if (prime_power_decomposition(q).first == 0)
    throw std::invalid_argument("polarity_check: q=" + str(q) + " is not a prime power");
  if (p < 2) throw std::invalid_argument("polarity_check: p must be >= 2");
  const Params params{{"q", str(q)}, {"p", str(p)}};
  const int n = q * q + q + 1;
  const FamilyId polarity{FamilyKind::polarity};
  const FamilyId fan{FamilyKind::friendship};
  auto fail = [&](const std::string& why, const std::string& witness) {
    return make_record("polarity", params, false, "", witness, why);
  };

  const ExactInt e2_pg = ep_closed_form(polarity, q, 2);
  const ExactInt bound = ExactInt(q) * q * (q + 1) * (q + 2);
  if (e2_pg != bound) return fail("e_2(PG(q)) != q^2(q+1)(q+2)", to_string(e2_pg));

  ExactInt value;
  if (p == 2) {
    value = e2_pg - ep_closed_form(fan, n, 2);
    if (value != ExactInt(q) * (q + 1) * (q - 4))
      return fail("e_2 difference != q(q+1)(q-4)", to_string(value));
  } else {
    value = ep_closed_form(fan, n, p) - ep_closed_form(polarity, q, p);
    const ExactInt formula =
        ExactInt(q) * (q + 1) * ipow(2, p) +
        ExactInt(q) * q * (q + 1) * ((ipow(q, p - 2) - 1) * (ipow(q + 1, p - 1) - 1) - 1);
    if (value != formula) return fail("e_p difference != closed formula " + to_string(formula), to_string(value));
    if (value <= 0) return fail("e_p difference not positive", to_string(value));
  }

  std::string detail = "closed forms";
  if (n <= Graph::kMaxVertices) {
    const Graph g = polarity_graph(q);
    const std::string g6 = to_graph6(g);
    int low = 0, high = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == q) ++low;
      else if (g.degree(v) == q + 1) ++high;
    }
    if (g.order() != n) return fail("vertex count", g6);
    if (low != q + 1 || high != q * q) return fail("degree counts", g6);
    if (has_c4(g)) return fail("PG(q) contains C4", g6);
    if (ep(g, p) != ep_closed_form(polarity, q, p) || ep(g, 2) != e2_pg)
      return fail("constructed e_p differs from closed form", g6);
    if (ep(friendship(n), p) != ep_closed_form(fan, n, p))
      return fail("constructed friendship e_p differs", to_graph6(friendship(n)));
    detail += " + constructed graph";
  }
  return make_record("polarity", params, true, to_string(value), "", detail);
}

// ---------------------------------------------------------------------------

std::string_view to_string(StructuralLemma lemma) {
  switch (lemma) {
    case StructuralLemma::min_degree_of_minimally_connected: return "lemma2";
    case StructuralLemma::edge_bound_of_minimally_connected: return "lemma3";
    case StructuralLemma::triangle_free_minimally_2_connected: return "lemma4";
    case StructuralLemma::degree3_on_cycles_minimally_3_connected: return "lemma5";
    case StructuralLemma::min_degree_of_minimally_2_edge_connected: return "lemma6";
    case StructuralLemma::min_degree_of_maximal_degenerate: return "lemma7";
    case StructuralLemma::maximal_degenerate_edge_count: return "lemma8";
    case StructuralLemma::chordless_minimally_2_edge_connected: return "lemma9";
    case StructuralLemma::edge_bound_of_minimally_2_edge_connected: return "lemma10";
  }
  return "?";
}

VerificationRecord structural_lemma_check(StructuralLemma lemma, int n, int param,
                                          const EnumerateOptions& options) {
  using L = StructuralLemma;
  SearchPredicate pred;
  Params params{{"n", str(n)}};
  Graph extremal(1);  // the unique edge-maximal graph, where the lemma names one
  bool has_extremal = false;
  switch (lemma) {
    case L::min_degree_of_minimally_connected:
    case L::edge_bound_of_minimally_connected:
      pred.minimally_connected = param;
      params.insert(params.begin(), {"t", str(param)});
      if (lemma == L::edge_bound_of_minimally_connected) {
        if (n < 3 * param - 1) throw std::invalid_argument("lemma3 needs n >= 3t-1");
        extremal = complete_bipartite(param, n);
        has_extremal = true;
      }
      break;
    case L::triangle_free_minimally_2_connected:
      if (n < 4) throw std::invalid_argument("lemma4 needs n >= 4");
      pred.minimally_connected = 2;
      break;
    case L::degree3_on_cycles_minimally_3_connected: pred.minimally_connected = 3; break;
    case L::min_degree_of_minimally_2_edge_connected:
    case L::chordless_minimally_2_edge_connected: pred.minimally_edge_connected = 2; break;
    case L::edge_bound_of_minimally_2_edge_connected:
      if (n < 6) throw std::invalid_argument("lemma10 needs n >= 6");
      pred.minimally_edge_connected = 2;
      extremal = complete_bipartite(2, n);
      has_extremal = true;
      break;
    case L::min_degree_of_maximal_degenerate:
    case L::maximal_degenerate_edge_count:
      if (n < param + 1) throw std::invalid_argument("maximal k-degenerate lemmas need n >= k+1");
      pred.degenerate = param;
      params.insert(params.begin(), {"k", str(param)});
      break;
  }
  const std::string extremal_form = has_extremal ? canonical_form(extremal).graph6 : "";
  const int edge_bound = has_extremal ? extremal.size() : 0;

  std::mutex mutex;
  std::string witness;
  std::uint64_t relevant = 0;
  auto visit = [&](const Graph& g, const CanonicalForm& form) {
    bool ok = true;
    bool counted = true;
    switch (lemma) {
      case L::min_degree_of_minimally_connected: ok = g.min_degree() == param; break;
      case L::edge_bound_of_minimally_connected:
      case L::edge_bound_of_minimally_2_edge_connected:
        ok = g.size() < edge_bound || (g.size() == edge_bound && form.graph6 == extremal_form);
        break;
      case L::triangle_free_minimally_2_connected: ok = !has_triangle(g); break;
      case L::degree3_on_cycles_minimally_3_connected: {
        VertexSet degree3 = 0;
        for (int v = 0; v < g.order(); ++v)
          if (g.degree(v) == 3) degree3 |= bit(v);
        ok = !has_cycle_meeting_at_most_one(g, degree3);
        break;
      }
      case L::min_degree_of_minimally_2_edge_connected: ok = g.min_degree() == 2; break;
      case L::chordless_minimally_2_edge_connected: ok = !has_chorded_cycle(g); break;
      case L::min_degree_of_maximal_degenerate:
        counted = is_maximal_k_degenerate(g, param);
        ok = !counted || g.min_degree() == param;
        break;
      case L::maximal_degenerate_edge_count: {
        bool saturated = true;
        for (int v = 1; v < g.order() && saturated; ++v)
          for (int u = 0; u < v && saturated; ++u)
            if (!g.adjacent(u, v) && is_k_degenerate(g.with_edge(u, v), param)) saturated = false;
        ok = saturated == (g.size() == param * g.order() - param * (param + 1) / 2);
        break;
      }
    }
    std::lock_guard lock(mutex);
    if (counted) ++relevant;
    if (!ok && (witness.empty() || form.graph6 < witness)) witness = form.graph6;
  };
  enumerate_graphs(n, pred, visit, options);
  return make_record(std::string(to_string(lemma)), params, witness.empty(), std::to_string(relevant),
                     witness, pred.describe());
}

std::optional<std::uint64_t> known_graph_count(int n) {
  static constexpr std::array<std::uint64_t, 10> counts{1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
  if (n < 1 || n > 10) return std::nullopt;
  return counts[n - 1];
}

VerificationRecord class_count_check(int n, const EnumerateOptions& options) {
  const auto expected = known_graph_count(n);
  if (!expected) throw std::invalid_argument("class_count_check: n outside [1,10]");
  EnumerateOptions checked = options;
  checked.check_isomorph_free = true;
  const std::uint64_t count = enumerate_graphs(n, {}, nullptr, checked);
  return make_record("counts", {{"n", str(n)}}, count == *expected, std::to_string(count),
                     count == *expected ? "" : "expected " + std::to_string(*expected));
}

// ---------------------------------------------------------------------------

std::optional<SuiteId> parse_suite(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, SuiteId>, 13> names{{
      {"thm1", SuiteId::thm1}, {"cor1", SuiteId::cor1}, {"thm2", SuiteId::thm2},
      {"thm3", SuiteId::thm3}, {"thm4", SuiteId::thm4}, {"lemma1", SuiteId::lemma1},
      {"lemma12", SuiteId::lemma12}, {"appendixA", SuiteId::appendixA},
      {"thresholds", SuiteId::thresholds}, {"polarity", SuiteId::polarity},
      {"structure", SuiteId::structure}, {"counts", SuiteId::counts},
      {"all-desk", SuiteId::all_desk},
  }};
  for (auto [text, id] : names)
    if (text == name) return id;
  return std::nullopt;
}

std::string_view to_string(SuiteId id) {
  switch (id) {
    case SuiteId::thm1: return "thm1";
    case SuiteId::cor1: return "cor1";
    case SuiteId::thm2: return "thm2";
    case SuiteId::thm3: return "thm3";
    case SuiteId::thm4: return "thm4";
    case SuiteId::lemma1: return "lemma1";
    case SuiteId::lemma12: return "lemma12";
    case SuiteId::appendixA: return "appendixA";
    case SuiteId::thresholds: return "thresholds";
    case SuiteId::polarity: return "polarity";
    case SuiteId::structure: return "structure";
    case SuiteId::counts: return "counts";
    case SuiteId::all_desk: return "all-desk";
  }
  return "?";
}

namespace {

std::pair<int, int> n_range_or(const SuiteGrid& grid, int lo, int hi) {
  return grid.n_range.value_or(std::pair{lo, hi});
}

std::vector<int> list_or(const std::vector<int>& given, std::vector<int> fallback) {
  return given.empty() ? fallback : given;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

void append(std::vector<VerificationRecord>& out, std::vector<VerificationRecord> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<VerificationRecord> theorem_grid(const TheoremId& id, std::pair<int, int> ns,
                                             const std::vector<int>& ps,
                                             const EnumerateOptions& options) {
  std::vector<VerificationRecord> out;
  for (int n = std::max(ns.first, theorem_min_n(id)); n <= ns.second; ++n)
    append(out, brute_force_theorem(id, n, ps, options));
  return out;
}

}  // namespace

int suite_max_order(SuiteId id, const SuiteGrid& grid) {
  switch (id) {
    case SuiteId::thm1: return n_range_or(grid, 4, 9).second;
    case SuiteId::cor1:
    case SuiteId::thm2:
    case SuiteId::thm3:
    case SuiteId::thm4:
    case SuiteId::structure:
    case SuiteId::counts: return n_range_or(grid, 1, 8).second;
    case SuiteId::all_desk: return 9;
    default: return 0;
  }
}

std::vector<VerificationRecord> run_suite(SuiteId id, const SuiteGrid& grid,
                                          const EnumerateOptions& options) {
  std::vector<VerificationRecord> out;
  switch (id) {
    case SuiteId::thm1:
      return theorem_grid({TheoremKind::t1}, n_range_or(grid, 4, 9), list_or(grid.ps, {2, 3}), options);
    case SuiteId::cor1:
      return theorem_grid({TheoremKind::c1}, n_range_or(grid, 4, 8), list_or(grid.ps, {2, 3}), options);
    case SuiteId::thm2: {
      const auto ps = list_or(grid.ps, {2, 3, 4, 5});
      append(out, theorem_grid({TheoremKind::t2i}, n_range_or(grid, 4, 8), ps, options));
      append(out, theorem_grid({TheoremKind::t2ii}, n_range_or(grid, 4, 8), ps, options));
      return out;
    }
    case SuiteId::thm3:
      return theorem_grid({TheoremKind::t3}, n_range_or(grid, 8, 8), list_or(grid.ps, {2}), options);
    case SuiteId::thm4:
      for (int k : list_or(grid.ks, {1, 2, 3}))
        append(out, theorem_grid({TheoremKind::t4, k}, n_range_or(grid, k + 1, 8),
                                 list_or(grid.ps, {2, 3}), options));
      return out;
    case SuiteId::lemma1:
    case SuiteId::lemma12: {
      const bool odd = id == SuiteId::lemma1;
      const auto [lo, hi] = n_range_or(grid, odd ? 7 : 6, odd ? 61 : 60);
      for (int n = lo; n <= hi; ++n) {
        if ((n % 2 == 1) != odd || n < (odd ? 7 : 6)) continue;
        for (int p : list_or(grid.ps, range(2, 8)))
          out.push_back(lemma_tuple_check(odd ? LemmaId::lemma1 : LemmaId::lemma12, n, p));
      }
      return out;
    }
    case SuiteId::appendixA: {
      const int n_max = grid.n_max.value_or(401);
      for (int p : list_or(grid.ps, range(5, 12)))
        if (p >= 5) out.push_back(appendix_a_scan(AppendixPart::i, p, n_max));
      for (int p : list_or(grid.ps, range(12, 16)))
        if (p >= 12) out.push_back(appendix_a_scan(AppendixPart::ii, p, n_max));
      return out;
    }
    case SuiteId::thresholds: {
      std::vector<ThresholdPair> pairs;
      if (grid.pair) pairs = {*grid.pair};
      else pairs = {ThresholdPair::W_vs_K3, ThresholdPair::F_vs_K2};
      for (ThresholdPair pair : pairs) {
        const bool wheel_pair = pair == ThresholdPair::W_vs_K3;
        const int p_max = grid.p_max.value_or(wheel_pair ? 11 : 8);
        const int n_max = grid.n_max.value_or(wheel_pair ? 200 : 201);
        for (int p : list_or(grid.ps, range(2, p_max))) out.push_back(threshold_check(pair, p, n_max));
      }
      return out;
    }
    case SuiteId::polarity:
      for (int q : list_or(grid.qs, {2, 3, 4, 5, 7, 8, 9, 11}))
        for (int p : list_or(grid.ps, range(2, 6))) out.push_back(polarity_check(q, p));
      return out;
    case SuiteId::structure: {
      using L = StructuralLemma;
      const int top = n_range_or(grid, 1, 8).second;
      for (int t : {1, 2, 3})
        for (int n = t + 1; n <= top; ++n)
          out.push_back(structural_lemma_check(L::min_degree_of_minimally_connected, n, t, options));
      for (int t : {2, 3})
        for (int n = 3 * t - 1; n <= top; ++n)
          out.push_back(structural_lemma_check(L::edge_bound_of_minimally_connected, n, t, options));
      for (int n = 4; n <= top; ++n) {
        out.push_back(structural_lemma_check(L::triangle_free_minimally_2_connected, n, 0, options));
        out.push_back(structural_lemma_check(L::degree3_on_cycles_minimally_3_connected, n, 0, options));
      }
      for (int n = 3; n <= top; ++n) {
        out.push_back(structural_lemma_check(L::min_degree_of_minimally_2_edge_connected, n, 0, options));
        out.push_back(structural_lemma_check(L::chordless_minimally_2_edge_connected, n, 0, options));
      }
      for (int k : {1, 2, 3})
        for (int n = k + 1; n <= top; ++n) {
          out.push_back(structural_lemma_check(L::min_degree_of_maximal_degenerate, n, k, options));
          out.push_back(structural_lemma_check(L::maximal_degenerate_edge_count, n, k, options));
        }
      for (int n = 6; n <= top; ++n)
        out.push_back(structural_lemma_check(L::edge_bound_of_minimally_2_edge_connected, n, 0, options));
      return out;
    }
    case SuiteId::counts: {
      const auto [lo, hi] = n_range_or(grid, 1, 8);
      for (int n = lo; n <= hi; ++n) out.push_back(class_count_check(n, options));
      return out;
    }
    case SuiteId::all_desk: {
      EnumerateOptions wide = options;
      wide.max_n = std::max(wide.max_n, 9);
      const SuiteGrid defaults;
      for (SuiteId part : {SuiteId::thresholds, SuiteId::thm1, SuiteId::cor1, SuiteId::thm2,
                           SuiteId::thm3, SuiteId::thm4, SuiteId::lemma1, SuiteId::lemma12,
                           SuiteId::appendixA, SuiteId::polarity, SuiteId::counts, SuiteId::structure})
        append(out, run_suite(part, defaults, wide));
      return out;
    }
  }
  return out;
}

}  // namespace degpow
