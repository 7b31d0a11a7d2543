#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "shiftbribery/election.hpp"
#include "shiftbribery/pricing.hpp"

namespace sb {

struct Instance {
  Election election;
  PriceList prices;
  CandidateId preferred = 0;
  std::optional<std::int64_t> budget;  // present for the decision variant

  // Checks prices against the election and p; throws invalid.
  void validate() const;

  int num_voters() const { return election.num_voters(); }
  int num_candidates() const { return election.num_candidates(); }
};

struct Guarantee {
  enum class Kind { exact, factor, heuristic };
  Kind kind = Kind::exact;
  Rational factor{1};

  static Guarantee exact() { return {}; }
  static Guarantee within(Rational r) { return {Kind::factor, r}; }
  static Guarantee heuristic() { return {Kind::heuristic, Rational(0)}; }
};

std::string describe(const Guarantee& g);  // "exact" | "factor:4/1" | "heuristic"

struct SolveResult {
  bool feasible = false;
  std::optional<ShiftAction> action;
  std::int64_t spent = 0;
  Guarantee guarantee;
  std::int64_t explored = 0;  // solver-specific work counter
};

// Checks a solver's claim through the reference election code: the action
// must make p a winner and cost what the result says. Throws invalid otherwise.
void recheck(const Instance& inst, const VotingRule& rule, const SolveResult& r);

// Applies the budget of the decision variant to an optimization result:
// a result that costs more than the budget becomes infeasible.
SolveResult within_budget(const Instance& inst, SolveResult r);

}  // namespace sb
