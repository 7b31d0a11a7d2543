#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "shiftbribery/evaluator.hpp"
#include "shiftbribery/flow.hpp"
#include "shiftbribery/solvers.hpp"

namespace sb {

SolveResult solve_all_or_nothing(const Instance& inst, const VotingRule& rule) {
  if (!classify(inst.prices, inst.election, inst.preferred).has(kAllOrNothing))
    fail(ErrorKind::invalid, "prices are not all-or-nothing");
  const int n = inst.num_voters();
  if (n > kMaxAllOrNothingVoters)
    fail(ErrorKind::capacity, "all-or-nothing solver handles at most 25 voters");
  ShiftEvaluator ev(inst.election, inst.preferred, rule);

  // Gray code: consecutive subsets differ in one voter.
  ShiftAction s(n, 0);
  bool found = false;
  std::int64_t best_cost = 0, c = 0, explored = 0;
  ShiftAction best;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (k > 0) {
      int i = std::countr_zero(k);
      if (s[i] == 0) {
        s[i] = ev.cap(i);
        ev.shift(i, s[i]);
        c = checked_add(c, inst.prices[i](s[i]));
      } else {
        ev.unshift(i, s[i]);
        c -= inst.prices[i](s[i]);
        s[i] = 0;
      }
    }
    ++explored;
    if (found && c > best_cost) continue;
    if (!ev.p_wins()) continue;
    if (!found || c < best_cost || s < best) {
      found = true;
      best_cost = c;
      best = s;
    }
  }
  SolveResult r;
  r.explored = explored;
  r.guarantee = Guarantee::exact();
  if (found) {
    r.feasible = true;
    r.spent = best_cost;
    r.action = std::move(best);
  }
  return within_budget(inst, std::move(r));
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = total; x >= 0; --x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SolveResult xp_flow_solve(const Instance& inst, const VotingRule& rule, std::int64_t guess_limit) {
  ShiftEvaluator ev(inst.election, inst.preferred, rule);
  std::map<PreferenceOrder, int> block_of;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < inst.num_voters(); ++i) {
    auto [it, fresh] = block_of.emplace(inst.election.voter(i), static_cast<int>(blocks.size()));
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }

  // Every voter of a block shares p's position, so amounts run 0..cap.
  std::vector<std::vector<std::vector<int>>> guesses(blocks.size());
  std::int64_t space = 1;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    int parts = ev.cap(blocks[b][0]) + 1;
    // C(size + cap, cap) guesses for this block
    std::int64_t g = 1;
    for (int k = 1; k < parts; ++k) {
      g = checked_mul(g, static_cast<std::int64_t>(blocks[b].size()) + k) / k;
      if (g > guess_limit) fail(ErrorKind::capacity, "guess space too large");
    }
    space = checked_mul(space, g);
    if (space > guess_limit) fail(ErrorKind::capacity, "guess space too large");
    std::vector<int> cur;
    compositions(static_cast<int>(blocks[b].size()), parts, cur, guesses[b]);
  }

  std::vector<std::map<std::vector<int>, Assignment>> memo(blocks.size());
  auto assignment = [&](std::size_t b, const std::vector<int>& q) -> const Assignment& {
    auto it = memo[b].find(q);
    if (it != memo[b].end()) return it->second;
    std::vector<PriceFunction> prices;
    for (int v : blocks[b]) prices.push_back(inst.prices[v]);
    auto a = cheapest_assignment(prices, q);
    if (!a) fail(ErrorKind::invalid, "internal: infeasible block guess");
    return memo[b].emplace(q, std::move(*a)).first->second;
  };

  bool found = false;
  std::int64_t best_cost = 0, explored = 0;
  ShiftAction best;
  std::vector<std::size_t> pick(blocks.size(), 0);
  for (;;) {
    ++explored;
    // Outcome depends only on how many voters of each block move how far.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& q = guesses[b][pick[b]];
      int v = 0;
      for (int j = 0; j < static_cast<int>(q.size()); ++j)
        for (int k = 0; k < q[j]; ++k) ev.shift(blocks[b][v++], j);
    }
    bool wins = ev.p_wins();
    ev.clear();
    if (wins) {
      std::int64_t c = 0;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        c = checked_add(c, assignment(b, guesses[b][pick[b]]).cost);
      if (!found || c < best_cost) {
        found = true;
        best_cost = c;
        best.assign(inst.num_voters(), 0);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          const auto& a = assignment(b, guesses[b][pick[b]]);
          for (std::size_t k = 0; k < blocks[b].size(); ++k) best[blocks[b][k]] = a.amounts[k];
        }
      }
    }
    std::size_t b = 0;
    while (b < blocks.size() && ++pick[b] == guesses[b].size()) pick[b++] = 0;
    if (b == blocks.size()) break;
  }

  SolveResult r;
  r.explored = explored;
  r.guarantee = Guarantee::exact();
  if (found) {
    r.feasible = true;
    r.spent = best_cost;
    r.action = std::move(best);
  }
  return within_budget(inst, std::move(r));
}

SolveResult greedy_convex(const Instance& inst, const VotingRule& rule) {
  if (!classify(inst.prices, inst.election, inst.preferred).has(kConvex))
    fail(ErrorKind::invalid, "prices are not convex");
  const int n = inst.num_voters();
  ShiftEvaluator ev(inst.election, inst.preferred, rule);
  ShiftAction s(n, 0);
  std::int64_t c = 0, explored = 0;
  bool wins = ev.p_wins();
  while (!wins) {
    int pick = -1;
    std::int64_t step = 0;
    for (int i = 0; i < n; ++i) {
      if (s[i] >= ev.cap(i)) continue;
      std::int64_t d = inst.prices[i](s[i] + 1) - inst.prices[i](s[i]);
      if (pick < 0 || d < step) pick = i, step = d;
    }
    if (pick < 0) break;
    ev.unshift(pick, s[pick]);
    ++s[pick];
    ev.shift(pick, s[pick]);
    c = checked_add(c, step);
    ++explored;
    wins = ev.p_wins();
  }
  SolveResult r;
  r.explored = explored;
  r.guarantee = rule.kind == RuleKind::borda ? Guarantee::within(2) : Guarantee::heuristic();
  if (wins) {
    r.feasible = true;
    r.spent = c;
    r.action = std::move(s);
  }
  return within_budget(inst, std::move(r));
}

}  // namespace sb
