#include <doctest.h>

#include "oracles.hpp"
#include "shiftbribery/solvers.hpp"
#include "support.hpp"

using namespace sb;

namespace {

bool decide(const Reduction& r) {
  BruteForceOptions opts;
  opts.max_affected = r.max_affected;
  opts.limit = 1'000'000'000;
  return brute_force(r.instance, r.rule, opts).feasible;
}

int margin(const PairwiseMatrix& n, CandidateId a, CandidateId b) { return n(a, b) - n(b, a); }

}  // namespace

TEST_CASE("set cover reductions agree with a direct search on small universes") {
  for (auto rule : {RuleKind::borda, RuleKind::maximin, RuleKind::copeland})
    for (auto prices : {PriceVariant::unit, PriceVariant::all_or_nothing})
      for (int universe = 1; universe <= 2; ++universe)
        for (int k = 1; k <= 2; ++k)
          sbt::for_each_family(universe, 2, [&](const std::vector<std::vector<int>>& family) {
            SetCoverInstance sc{universe, family, k};
            auto r = reduce_setcover(sc, rule, prices);
            INFO(rule_name(rule), " ", price_variant_name(prices), " universe=", universe, " k=", k,
                 " sets=", family.size());
            CHECK(r.max_affected == k);
            CHECK(decide(r) == sbt::has_set_cover(sc));
          });
}

TEST_CASE("Borda set cover scores") {
  SetCoverInstance sc{3, {{0, 1}, {2}, {1, 2}}, 2};
  auto r = reduce_setcover(sc, RuleKind::borda, PriceVariant::unit);
  const auto& e = r.instance.election;
  auto s = scores(e, r.rule);
  const Rational l = s[e.id("p")];
  const std::int64_t b = 2 * 4;
  CHECK(*r.instance.budget == b);
  CHECK(s[e.id("d")] == l + b + 2);
  for (auto u : {"u1", "u2", "u3"}) CHECK(s[e.id(u)] == l + b + 1);
  CHECK(s[e.id("g")] <= l);
  for (int i = 1; i <= 2 * static_cast<int>(b) + 2; ++i) CHECK(s[e.id("f" + std::to_string(i))] <= l);

  auto aon = reduce_setcover(sc, RuleKind::borda, PriceVariant::all_or_nothing);
  CHECK(*aon.instance.budget == 2);
  CHECK(aon.instance.election == e);
}

TEST_CASE("Maximin set cover head-to-head table") {
  SetCoverInstance sc{3, {{0, 1}, {2}, {1, 2}, {0}}, 2};
  const int sets = 4, k = 2;
  auto r = reduce_setcover(sc, RuleKind::maximin, PriceVariant::unit);
  const auto& e = r.instance.election;
  PairwiseMatrix n(e);
  const auto p = e.id("p"), d = e.id("d"), g = e.id("g");
  CHECK(n(p, g) == sets + k);
  CHECK(n(p, d) == sets + 2 * k);
  CHECK(n(g, p) == sets + 3 * k);
  CHECK(n(d, g) == sets + 3 * k);
  for (auto name : {"u1", "u2", "u3"}) {
    CHECK(n(p, e.id(name)) == sets + 2 * k - 1);
    CHECK(n(d, e.id(name)) == sets + 4 * k - 1);
  }
  CHECK(n(g, d) == sets + k);
  CHECK(n(d, p) == sets + 2 * k);
  for (int c = 0; c < e.num_candidates(); ++c) {
    const auto& name = e.name(c);
    if (name[0] == 'u') {
      CHECK(n(g, c) == sets + 4 * k);
      CHECK(n(c, p) == sets + 2 * k + 1);
      CHECK(n(c, g) == sets);
      CHECK(n(c, d) == sets + 1);
    } else if (name[0] == 'f') {
      CHECK(n(p, c) >= sets + 2 * k);
      CHECK(n(g, c) == sets + 4 * k);
      CHECK(n(d, c) == sets + 3 * k);
      CHECK(n(c, g) == sets);
      CHECK(n(c, d) == sets + k);
      for (auto u : {"u1", "u2", "u3"}) {
        CHECK(n(e.id(u), c) == sets + 3 * k + 1);
        CHECK(n(c, e.id(u)) == sets + k - 1);
      }
    }
  }
  auto s = scores(e, r.rule);
  CHECK(s[p] == sets + k);
  CHECK(s[g] == sets + k);
  CHECK(s[d] == sets + 2 * k);
  for (int c = 0; c < e.num_candidates(); ++c)
    if (e.name(c)[0] == 'u' || e.name(c)[0] == 'f') CHECK(s[c] == sets);
  CHECK(winners(e, r.rule) == std::vector<CandidateId>{d});
}

TEST_CASE("Copeland set cover scores") {
  SetCoverInstance sc{3, {{0, 1}, {2}}, 2};
  auto r = reduce_setcover(sc, RuleKind::copeland, PriceVariant::unit);
  const auto& e = r.instance.election;
  CHECK(e.num_voters() % 2 == 1);
  auto s = scores(e, r.rule);
  const int fillers = 2 * 2 * 4 + 2, rounds = fillers + 1;
  CHECK(s[e.id("d")] == rounds + 1);
  for (auto u : {"u1", "u2", "u3"}) CHECK(s[e.id(u)] == rounds + 1);
  CHECK(s[e.id("p")] == rounds - 3);
  PairwiseMatrix n(e);
  CHECK(margin(n, e.id("d"), e.id("p")) == 3);
  // every structural voter keeps p and d far apart
  for (int v = 4; v < e.num_voters(); ++v) {
    if (e.voter(v).front() == e.id("p")) continue;
    CHECK(std::abs(e.position(v, e.id("p")) - e.position(v, e.id("d"))) > *r.instance.budget);
  }
}

TEST_CASE("set cover reduction rejects bad input") {
  CHECK_THROWS_AS(reduce_setcover({0, {}, 1}, RuleKind::borda, PriceVariant::unit), Error);
  CHECK_THROWS_AS(reduce_setcover({2, {{0, 2}}, 1}, RuleKind::borda, PriceVariant::unit), Error);
  CHECK_THROWS_AS(reduce_setcover({2, {{0}}, 0}, RuleKind::maximin, PriceVariant::unit), Error);
  CHECK(parse_price_variant("aon") == PriceVariant::all_or_nothing);
  CHECK_THROWS_AS(parse_price_variant("free"), Error);
}

TEST_CASE("clique reduction with all-or-nothing prices") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 2; k <= 3; ++k)
      sbt::for_each_graph(n, [&](const std::vector<std::pair<int, int>>& edges) {
        GraphInstance g{n, edges, k, std::nullopt};
        auto r = reduce_clique_copeland(g, PriceVariant::all_or_nothing);
        INFO("n=", n, " k=", k, " edges=", edges.size());
        CHECK(decide(r) == sbt::has_clique(g));
      });
  GraphInstance g{4, {{0, 1}}, 2, std::nullopt};
  auto r = reduce_clique_copeland(g, PriceVariant::all_or_nothing);
  CHECK(r.note == "padded with 3 isolated vertices");
  const auto& e = r.instance.election;
  auto s = scores(e, r.rule);
  CHECK(s[e.id("d")] == 14);
  CHECK(s[e.id("p")] == 12);
  CHECK(winners(e, r.rule) == std::vector<CandidateId>{e.id("d")});
}

TEST_CASE("clique reduction with unit prices") {
  GraphInstance triangle{3, {{0, 1}, {1, 2}, {0, 2}}, 3, std::nullopt};
  auto r = reduce_clique_copeland(triangle, PriceVariant::unit);
  const auto& e = r.instance.election;
  CHECK(*r.instance.budget == 9);
  auto s = scores(e, r.rule);
  CHECK(winners(e, r.rule) == std::vector<CandidateId>{e.id("d")});
  CHECK(s[e.id("d")] - s[e.id("p")] == 3 + 3);
  PairwiseMatrix n(e);
  for (auto v : {"v1", "v2", "v3"}) CHECK(margin(n, e.id(v), e.id("p")) == 2 * 3 - 3);
  for (auto q : {"q1-2", "q2-3", "q1-3"}) CHECK(margin(n, e.id(q), e.id("p")) == 1);

  for (int k = 2; k <= 3; ++k)
    sbt::for_each_graph(3, [&](const std::vector<std::pair<int, int>>& edges) {
      GraphInstance g{3, edges, k, std::nullopt};
      auto red = reduce_clique_copeland(g, PriceVariant::unit);
      INFO("k=", k, " edges=", edges.size());
      CHECK(decide(red) == sbt::has_clique(g));
    });
  CHECK_THROWS_AS(reduce_clique_copeland({3, {}, 1, std::nullopt}, PriceVariant::unit), Error);
}

TEST_CASE("multicolored clique toy instance") {
  // colors {v1,v2} and {v3,v4}, perfect matching v1-v3, v2-v4
  GraphInstance g{4, {{0, 2}, {1, 3}}, 2, std::vector<int>{0, 0, 1, 1}};
  auto r = reduce_mcc_copeland(g);
  const auto& e = r.instance.election;
  CHECK(e.num_voters() == 7);
  CHECK(e.num_candidates() == 2 + 2 * 3 * 3 * 64 + 2 + 3 * 1024);
  CHECK(*r.instance.budget == (4 + 2) * (3 * 64 + 1));
  PairwiseMatrix n(e);
  const auto p = e.id("p");
  for (auto edge : {"e1-3", "e2-4"}) CHECK(margin(n, e.id(edge), p) == 7);
  for (auto c : {"s1.1.1", "s1.3.64", "s2.2.7", "s2.3.1"}) CHECK(margin(n, e.id(c), p) == 1);
  for (auto c : {"f1.1.1", "f2.3.128"}) CHECK(margin(n, e.id(c), p) == -1);
  CHECK(winners(e, r.rule) == std::vector<CandidateId>{e.id("d")});

  CHECK_THROWS_AS(reduce_mcc_copeland({4, {{0, 1}}, 2, std::vector<int>{0, 0, 1, 1}}), Error);  // not proper
  CHECK_THROWS_AS(reduce_mcc_copeland({4, {{0, 2}}, 2, std::vector<int>{0, 0, 1, 1}}), Error);  // not regular
  CHECK_THROWS_AS(reduce_mcc_copeland({4, {}, 2, std::nullopt}), Error);
}
