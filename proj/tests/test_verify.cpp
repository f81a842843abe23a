#include <doctest.h>

#include "degpow/families.hpp"
#include "degpow/majorization.hpp"
#include "degpow/verify.hpp"

using namespace degpow;

TEST_CASE("make_record refuses a failure without witness") {
  CHECK_THROWS_AS(make_record("x", {}, false, "1", ""), std::logic_error);
  CHECK(make_record("x", {{"n", "5"}, {"p", "2"}}, true, "1", "").params_text() == "n=5;p=2");
}

TEST_CASE("lemma_tuple_build examples") {
  auto t = lemma_tuple_build({LemmaId::lemma1, 7, std::nullopt});
  CHECK(t.first == IntTuple{6, 2, 2, 2, 2, 2, 2});
  CHECK(t.second == IntTuple{4, 4, 4, 3, 1, 1, 1});
  CHECK_FALSE(t.third);

  t = lemma_tuple_build({LemmaId::lemma1, 9, 2});
  CHECK(t.third == IntTuple{7, 3, 3, 3, 3, 2, 1, 1, 1});
  CHECK(t.r == 3);
  CHECK(t.epsilon == 1);
  CHECK(t.third->sum() == 24);

  t = lemma_tuple_build({LemmaId::lemma12, 6, std::nullopt});
  CHECK(t.first == IntTuple{5, 2, 2, 2, 2, 1});
  CHECK(t.second == IntTuple{4, 3, 3, 2, 1, 1});
}

TEST_CASE("lemma_tuple_build range errors") {
  CHECK_THROWS_AS(lemma_tuple_build({LemmaId::lemma1, 8, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(lemma_tuple_build({LemmaId::lemma1, 5, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(lemma_tuple_build({LemmaId::lemma12, 7, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(lemma_tuple_build({LemmaId::lemma1, 9, 4}), std::invalid_argument);  // q >= (n-1)/2
  CHECK_THROWS_AS(lemma_tuple_build({LemmaId::lemma1, 9, 1}), std::invalid_argument);
  CHECK_THROWS_AS(lemma_tuple_build({LemmaId::lemma12, 8, 3}), std::invalid_argument);  // q >= n/2-1
}

TEST_CASE("lemma q ranges") {
  CHECK(lemma_q_range(LemmaId::lemma1, 7) == std::vector<int>{2});
  CHECK(lemma_q_range(LemmaId::lemma1, 9) == std::vector<int>{2, 3});
  CHECK(lemma_q_range(LemmaId::lemma12, 6).empty());
  CHECK(lemma_q_range(LemmaId::lemma12, 8) == std::vector<int>{2});
}

TEST_CASE("property: tuple sums and epsilon range over all parameters") {
  for (int n = 6; n <= 61; ++n) {
    const LemmaId lemma = n % 2 ? LemmaId::lemma1 : LemmaId::lemma12;
    const long long total = n % 2 ? 3LL * (n - 1) : 3LL * n - 4;
    for (int q : lemma_q_range(lemma, n)) {
      const auto t = lemma_tuple_build({lemma, n, q});
      REQUIRE(t.first.sum() == total);
      REQUIRE(t.second.sum() == total);
      REQUIRE(t.third->sum() == total);
      REQUIRE(t.third->size() == static_cast<std::size_t>(n));
      REQUIRE(t.epsilon >= 0);
      REQUIRE(t.epsilon < q);
    }
  }
}

TEST_CASE("lemma_tuple_check examples") {
  auto r = lemma_tuple_check(LemmaId::lemma1, 7, 2);
  CHECK(r.pass);
  CHECK(r.value == "0");
  CHECK(p_power_norm({6, 2, 2, 2, 2, 2, 2}, 2) == 60);

  r = lemma_tuple_check(LemmaId::lemma1, 9, 2);
  CHECK(r.pass);
  const auto t = lemma_tuple_build({LemmaId::lemma1, 9, 2});
  CHECK(p_power_norm(*t.third, 2) == 92);
  CHECK(p_power_norm(t.first, 2) == 96);

  r = lemma_tuple_check(LemmaId::lemma12, 6, 2);
  CHECK(r.pass);
  CHECK(r.value == "2");
  CHECK(p_power_norm({5, 2, 2, 2, 2, 1}, 2) == 42);
  CHECK(p_power_norm({4, 3, 3, 2, 1, 1}, 2) == 40);

  CHECK_THROWS_AS(lemma_tuple_check(LemmaId::lemma1, 7, 1), std::invalid_argument);
}

TEST_CASE("lemma1 part (i) is tight exactly at p = 2") {
  for (int n = 7; n <= 61; n += 2)
    for (int p = 2; p <= 8; ++p) {
      const auto r = lemma_tuple_check(LemmaId::lemma1, n, p);
      REQUIRE(r.pass);
      REQUIRE((r.value == "0") == (p == 2));
    }
}

TEST_CASE("brute_force_theorem examples") {
  auto r = brute_force_theorem({TheoremKind::t1}, 5, 2);
  CHECK(r.pass);
  CHECK(r.value == "32");
  r = brute_force_theorem({TheoremKind::t2i}, 6, 3);
  CHECK(r.pass);
  CHECK(r.value == "160");
  r = brute_force_theorem({TheoremKind::t3}, 8, 2);
  CHECK(r.pass);
  CHECK(r.value == "120");
  CHECK(ep(wheel(8), 2) == 112);

  CHECK_THROWS_AS(brute_force_theorem({TheoremKind::t3}, 7, 2), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_theorem({TheoremKind::t1}, 9, 2), std::invalid_argument);
  EnumerateOptions wide;
  wide.max_n = 9;
  CHECK(brute_force_theorem({TheoremKind::t1}, 9, 2, wide).pass);
}

TEST_CASE("theorem expectations") {
  auto e = theorem_expectation({TheoremKind::t2ii}, 7, 2);
  // odd n: F_7 gives 60 against K_{2,5} with 70
  CHECK(e.max_value == 70);
  e = theorem_expectation({TheoremKind::t2ii}, 5, 5);
  CHECK(e.max_value == ep(friendship(5), 5));
  CHECK(e.witnesses.size() == 1);
  e = theorem_expectation({TheoremKind::t2ii}, 4, 2);
  CHECK(e.max_value == 16);  // F_4 takes no part for even n
  e = theorem_expectation({TheoremKind::t3}, 7, 2);
  CHECK(e.max_value == 90);
  e = theorem_expectation({TheoremKind::t4, 2}, 6, 2);
  CHECK(e.max_value == 66);
}

TEST_CASE("theorem predicates encode the hypotheses") {
  auto pred = theorem_predicate({TheoremKind::t1}, 5);
  CHECK(pred.max_edges == 6);
  CHECK(pred.c4_free);
  CHECK(pred.min_degree == 1);
  CHECK(theorem_predicate({TheoremKind::t4, 3}, 8).degenerate == 3);
  CHECK(theorem_predicate({TheoremKind::c1}, 8).even_cycle_free);
}

TEST_CASE("threshold scans") {
  CHECK(threshold_scan(ThresholdPair::W_vs_K3, 2, 200) == 8);
  CHECK(threshold_scan(ThresholdPair::W_vs_K3, 11, 200) == 23);
  CHECK(threshold_scan(ThresholdPair::F_vs_K2, 4, 201) == 9);
  CHECK(threshold_scan(ThresholdPair::F_vs_K2, 2, 201) == 7);
  CHECK_THROWS_AS(threshold_scan(ThresholdPair::W_vs_K3, 1, 200), std::invalid_argument);
  CHECK_THROWS_AS(threshold_scan(ThresholdPair::W_vs_K3, 11, 25), std::invalid_argument);
  CHECK(threshold_check(ThresholdPair::F_vs_K2, 6, 201).pass);
}

TEST_CASE("appendix scans") {
  CHECK(appendix_a_scan(AppendixPart::i, 5, 401).pass);
  CHECK(appendix_a_scan(AppendixPart::ii, 12, 401).pass);
  CHECK(2 * ipow(7, 5) - ipow(8, 5) - ipow(2, 5) == 814);
  CHECK(ep_closed_form({FamilyKind::friendship}, 9, 5) == 33024);
  CHECK(ep_closed_form({FamilyKind::complete_bipartite, 2}, 9, 5) == 33838);
  CHECK_THROWS_AS(appendix_a_scan(AppendixPart::i, 4, 401), std::invalid_argument);
  CHECK_THROWS_AS(appendix_a_scan(AppendixPart::ii, 11, 401), std::invalid_argument);
}

TEST_CASE("polarity checks") {
  auto r = polarity_check(5, 2);
  CHECK(r.pass);
  CHECK(r.value == "30");
  CHECK(ep_closed_form({FamilyKind::polarity}, 5, 2) == 25 * 6 * 7);
  r = polarity_check(4, 2);
  CHECK(r.pass);
  CHECK(r.value == "0");
  r = polarity_check(2, 3);
  CHECK(r.pass);
  CHECK(r.value == "132");
  CHECK(ep(friendship(7), 3) == 264);
  CHECK(ep(polarity_graph(2), 3) == 132);
  CHECK(polarity_check(2, 2).value == "-12");
  CHECK(polarity_check(11, 6).pass);
  CHECK_THROWS_AS(polarity_check(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(polarity_check(5, 1), std::invalid_argument);
}

TEST_CASE("structural lemma checks on small classes") {
  using L = StructuralLemma;
  CHECK(structural_lemma_check(L::min_degree_of_minimally_connected, 6, 2).pass);
  CHECK(structural_lemma_check(L::edge_bound_of_minimally_connected, 6, 2).pass);
  CHECK(structural_lemma_check(L::chordless_minimally_2_edge_connected, 6, 0).pass);
  CHECK(structural_lemma_check(L::maximal_degenerate_edge_count, 6, 2).pass);
  CHECK_THROWS_AS(structural_lemma_check(L::edge_bound_of_minimally_2_edge_connected, 5, 0),
                  std::invalid_argument);
}

TEST_CASE("class counts") {
  CHECK(known_graph_count(8) == 12346u);
  CHECK_FALSE(known_graph_count(11));
  CHECK(class_count_check(6).pass);
}

TEST_CASE("suite names") {
  CHECK(parse_suite("all-desk") == SuiteId::all_desk);
  CHECK(parse_suite("appendixA") == SuiteId::appendixA);
  CHECK_FALSE(parse_suite("thm5"));
  for (SuiteId id : {SuiteId::thm1, SuiteId::counts, SuiteId::all_desk})
    CHECK(parse_suite(to_string(id)) == id);
}

TEST_CASE("suites are independent of worker count") {
  SuiteGrid grid;
  grid.n_range = std::pair{4, 8};
  EnumerateOptions one, three;
  three.jobs = 3;
  CHECK(run_suite(SuiteId::thm2, grid, one) == run_suite(SuiteId::thm2, grid, three));
}
