#include "shiftbribery/instance.hpp"

namespace sb {

void Instance::validate() const {
  if (preferred < 0 || preferred >= election.num_candidates())
    fail(ErrorKind::invalid, "preferred candidate out of range");
  if (budget && *budget < 0) fail(ErrorKind::invalid, "negative budget");
  validate_prices(prices, election, preferred);
}

std::string describe(const Guarantee& g) {
  switch (g.kind) {
    case Guarantee::Kind::exact: return "exact";
    case Guarantee::Kind::factor: return "factor:" + format_rational(g.factor);
    case Guarantee::Kind::heuristic: return "heuristic";
  }
  return "?";
}

void recheck(const Instance& inst, const VotingRule& rule, const SolveResult& r) {
  if (!r.action) {
    if (r.feasible) fail(ErrorKind::invalid, "feasible result without an action");
    return;
  }
  const auto& s = *r.action;
  if (static_cast<int>(s.size()) != inst.num_voters())
    fail(ErrorKind::invalid, "action has the wrong length");
  if (!is_winner(apply_shift(inst.election, inst.preferred, s), rule, inst.preferred))
    fail(ErrorKind::invalid, "action does not make p a winner");
  if (cost(inst.prices, s) != r.spent) fail(ErrorKind::invalid, "reported cost is wrong");
}

SolveResult within_budget(const Instance& inst, SolveResult r) {
  if (r.feasible && inst.budget && r.spent > *inst.budget) {
    r.feasible = false;
    r.action.reset();
    r.spent = 0;
  }
  return r;
}

}  // namespace sb
