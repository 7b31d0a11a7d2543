#include <doctest.h>

#include "shiftbribery/election.hpp"
#include "support.hpp"

using namespace sb;
using sbt::make_election;

TEST_CASE("pairwise counts read off a single voter") {
  auto e = make_election({"a>b>c"});
  PairwiseMatrix n(e);
  auto a = e.id("a"), b = e.id("b"), c = e.id("c");
  CHECK(n(a, b) == 1);
  CHECK(n(b, a) == 0);
  CHECK(n(a, c) == 1);
}

TEST_CASE("reversed pair ties every contest") {
  auto e = make_election({"a>b>c", "c>b>a"});
  PairwiseMatrix n(e);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != y) CHECK(n(x, y) == 1);
}

TEST_CASE("point pair orders give the expected counts") {
  // p>d>g>x>z and z>x>d>g>p
  auto e = make_election({"p>d>g>x>z", "z>x>d>g>p"});
  PairwiseMatrix n(e);
  CHECK(n(e.id("d"), e.id("g")) == 2);
  CHECK(n(e.id("d"), e.id("p")) == 1);
  CHECK(n(e.id("p"), e.id("d")) == 1);
}

TEST_CASE("scores for the three rules") {
  auto e = make_election({"a>b>c"});
  auto borda = scores(e, VotingRule::borda());
  CHECK((borda[e.id("a")] == 2));
  CHECK((borda[e.id("b")] == 1));
  CHECK((borda[e.id("c")] == 0));
  auto mm = scores(e, VotingRule::maximin());
  CHECK((mm[e.id("a")] == 1));
  CHECK((mm[e.id("b")] == 0));
  CHECK((mm[e.id("c")] == 0));

  auto tie = make_election({"a>b>c", "c>b>a"});
  for (auto s : scores(tie, VotingRule::copeland(Rational(1, 2)))) CHECK((s == 1));
}

TEST_CASE("winners") {
  auto e = make_election({"p>a>b"});
  for (auto rule : {VotingRule::borda(), VotingRule::maximin(), VotingRule::copeland()})
    CHECK(winners(e, rule) == std::vector<CandidateId>{e.id("p")});
  auto tie = make_election({"a>b>c", "c>b>a"});
  CHECK(winners(tie, VotingRule::borda()).size() == 3);
}

TEST_CASE("odd electorates never need alpha under Copeland") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int m = sbt::uniform(rng, 2, 6), n = 2 * sbt::uniform(rng, 0, 3) + 1;
    auto inst = sbt::random_instance(rng, m, n, sbt::Family::unit);
    auto s = scores(inst.election, VotingRule::copeland(Rational(1, 3)));
    for (auto w : winners(inst.election, VotingRule::copeland(Rational(1, 3))))
      CHECK(s[w].denominator() == 1);
  }
}

TEST_CASE("apply_shift moves p and clamps at the top") {
  auto e = make_election({"c1>c2>p>c3"});
  auto p = e.id("p");
  auto once = apply_shift(e, p, std::vector<int>{2});
  CHECK(sbt::order_string(once, 0) == "p>c1>c2>c3");
  auto clamped = apply_shift(e, p, std::vector<int>{10});
  CHECK(sbt::order_string(clamped, 0) == "p>c1>c2>c3");
  CHECK(apply_shift(e, p, std::vector<int>{0}) == e);
  CHECK_THROWS_AS(apply_shift(e, p, std::vector<int>{1, 1}), Error);
}

TEST_CASE("election construction rejects bad orders") {
  CHECK_THROWS_AS(Election({"a", "b"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(Election({"a", "b"}, {{0}}), Error);
  CHECK_THROWS_AS(Election({"a", "a"}, {{0, 1}}), Error);
}

TEST_CASE("shift composition matches a single combined shift") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int m = sbt::uniform(rng, 2, 6), n = sbt::uniform(rng, 1, 5);
    auto inst = sbt::random_instance(rng, m, n, sbt::Family::unit);
    ShiftAction s(n), t(n), st(n);
    for (int i = 0; i < n; ++i) {
      s[i] = sbt::uniform(rng, 0, m);
      t[i] = sbt::uniform(rng, 0, m);
      st[i] = s[i] + t[i];
    }
    auto twice = apply_shift(apply_shift(inst.election, 0, s), 0, t);
    CHECK(twice == apply_shift(inst.election, 0, st));
  }
}
