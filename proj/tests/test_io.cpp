#include <doctest.h>

#include <json.hpp>

#include "shiftbribery/io.hpp"
#include "support.hpp"

using namespace sb;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal file parses") {
  auto f = parse_instance("rule: borda\ncandidates: d,p\npreferred: p\nvoters: 1\nd>p ; unit\n");
  CHECK(f.rule.kind == RuleKind::borda);
  CHECK(f.instance.num_candidates() == 2);
  CHECK(f.instance.num_voters() == 1);
  CHECK(f.instance.preferred == 1);
  CHECK_FALSE(f.instance.budget);
  CHECK(f.instance.prices[0](1) == 1);
}

TEST_CASE("full file with comments, alpha and every price spec") {
  const char* text = R"(# a comment
rule: copeland   # trailing comment
alpha: 1/3
candidates: p, a, b
preferred: p
budget: 7

voters: 3
a>b>p ; list:2,5
b>p>a ; aon:4
p>a>b ; unit
)";
  auto f = parse_instance(text);
  CHECK(f.rule.alpha == Rational(1, 3));
  CHECK(*f.instance.budget == 7);
  CHECK(f.instance.prices[0].table() == std::vector<std::int64_t>{2, 5});
  CHECK(f.instance.prices[1].table() == std::vector<std::int64_t>{4, 4});
  CHECK(f.instance.prices[2].table() == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("errors name the line") {
  const std::string head = "rule: borda\ncandidates: a,b,p\npreferred: p\nvoters: 1\n";
  CHECK(error_of(head + "a>a>p ; unit\n") == "line 5: duplicate candidate 'a' in order");
  CHECK(error_of(head + "a>b>p ; list:1\n") == "line 5: list: expects 2 values (m-1), got 1");
  CHECK(error_of(head + "a>b>x ; unit\n") == "line 5: unknown candidate 'x'");
  CHECK(error_of(head + "a>b ; unit\n") == "line 5: order ranks 2 of 3 candidates");
  CHECK(error_of(head + "a>b>p ; list:3,1\n") == "line 5: price decreases at shift 2");
  CHECK(error_of(head + "a>b>p ; free\n").starts_with("line 5: price spec must be"));
  CHECK(error_of(head + "a>b>p ; unit\nb>a>p ; unit\n") == "line 6: unexpected line after 1 voters");
  CHECK(error_of(head) == "line 4: expected 1 voters, found 0");
  CHECK(error_of("rule: plurality\ncandidates: a\npreferred: a\nvoters: 1\na ; unit\n") ==
        "line 1: unknown rule 'plurality'");
  CHECK(error_of("rule: borda\nalpha: 1/2\ncandidates: a\npreferred: a\nvoters: 1\na ; unit\n") ==
        "line 2: alpha is only allowed with copeland");
  CHECK(error_of("rule: borda\ncandidates: a,a\npreferred: a\nvoters: 1\na>a ; unit\n") ==
        "line 2: duplicate candidate 'a'");
  CHECK(error_of("rule: borda\ncandidates: a\nvoters: 1\na ; unit\n") == "line 4: missing 'preferred:' line");
  CHECK(error_of("rule: borda\ncolour: red\n") == "line 2: unknown key 'colour'");
  CHECK(error_of("rule: borda\ncandidates: a,p\npreferred: p\nbudget: -1\nvoters: 1\na>p ; unit\n") ==
        "line 4: budget must be nonnegative");
  CHECK(error_of("rule: borda\ncandidates: a,p\npreferred: p\nvoters: two\n") ==
        "line 4: expected an integer for voters, got 'two'");
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937_64 rng(5);
  const sbt::Family families[] = {sbt::Family::unit, sbt::Family::convex, sbt::Family::all_or_nothing,
                                  sbt::Family::sortable, sbt::Family::arbitrary};
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = sbt::random_instance(rng, sbt::uniform(rng, 1, 6), sbt::uniform(rng, 1, 6), families[trial % 5]);
    if (trial % 2) inst.budget = sbt::uniform(rng, 0, 20);
    auto rule = trial % 3 == 0 ? VotingRule::borda()
                : trial % 3 == 1 ? VotingRule::maximin()
                                 : VotingRule::copeland(Rational(sbt::uniform(rng, 0, 3), 3));
    InstanceFile f{inst, rule};
    auto text = serialize_instance(f, "generated for a test\nsecond line");
    auto back = parse_instance(text);
    CHECK(back.instance.election == inst.election);
    CHECK(back.instance.prices == inst.prices);
    CHECK(back.instance.preferred == inst.preferred);
    CHECK(back.instance.budget == inst.budget);
    CHECK(back.rule.kind == rule.kind);
    CHECK(back.rule.alpha == rule.alpha);
    CHECK(serialize_instance(back, "generated for a test\nsecond line") == text);
  }
}

TEST_CASE("result documents") {
  ResultMeta meta{.solver = "bruteforce", .rule = RuleKind::borda};
  SolveResult zero{true, ShiftAction{0, 0, 0}, 0, Guarantee::exact(), 1};
  auto doc = nlohmann::json::parse(serialize_result(zero, meta));
  CHECK(doc["feasible"] == true);
  CHECK(doc["spent"] == 0);
  CHECK(doc["action"] == std::vector<int>{0, 0, 0});
  CHECK(doc["guarantee"] == "exact");

  meta.solver = "fptas-candidates";
  meta.epsilon = Rational(1);
  SolveResult approx{true, ShiftAction{1}, 3, Guarantee::within(Rational(1) + 2 * Rational(1) + Rational(1)), 0};
  doc = nlohmann::json::parse(serialize_result(approx, meta));
  CHECK(doc["guarantee"] == "factor:4/1");
  CHECK(doc["parameters"]["epsilon"] == "1/1");

  SolveResult none{false, std::nullopt, 0, Guarantee::exact(), 9};
  meta.budget = 2;
  auto text = serialize_result(none, meta);
  doc = nlohmann::json::parse(text);
  CHECK(doc["feasible"] == false);
  CHECK_FALSE(doc.contains("action"));
  CHECK(doc["parameters"]["budget"] == 2);
  // fixed key order
  CHECK(text.find("\"solver\"") < text.find("\"feasible\""));
  CHECK(text.find("\"feasible\"") < text.find("\"spent\""));
}
