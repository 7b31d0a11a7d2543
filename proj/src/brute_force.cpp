#include <algorithm>
#include <map>

#include "shiftbribery/evaluator.hpp"
#include "shiftbribery/solvers.hpp"

namespace sb {
namespace {

struct Best {
  bool found = false;
  std::int64_t cost = 0;
  ShiftAction action;

  void offer(std::int64_t c, const ShiftAction& s) {
    if (!found || c < cost || (c == cost && s < action)) {
      found = true;
      cost = c;
      action = s;
    }
  }
};

SolveResult finish(const Instance& inst, Best best, std::int64_t explored) {
  SolveResult r;
  r.explored = explored;
  if (best.found) {
    r.feasible = true;
    r.spent = best.cost;
    r.action = std::move(best.action);
  }
  return within_budget(inst, std::move(r));
}

// Plain odometer over every action, first voter most significant, so the
// first action reaching a new minimum is the lexicographically smallest one.
SolveResult enumerate_all(const Instance& inst, const VotingRule& rule, std::int64_t limit) {
  const int n = inst.num_voters();
  ShiftEvaluator ev(inst.election, inst.preferred, rule);
  std::int64_t space = 1;
  for (int i = 0; i < n; ++i) {
    space = checked_mul(space, ev.cap(i) + 1);
    if (space > limit) fail(ErrorKind::capacity, "brute force enumeration too large");
  }
  ShiftAction s(n, 0);
  Best best;
  std::int64_t c = 0, explored = 0;
  for (;;) {
    ++explored;
    if ((!best.found || c < best.cost) && ev.p_wins()) best.offer(c, s);
    int i = n - 1;
    while (i >= 0 && s[i] == ev.cap(i)) {
      ev.unshift(i, s[i]);
      c -= inst.prices[i](s[i]);
      s[i] = 0;
      --i;
    }
    if (i < 0) break;
    ev.unshift(i, s[i]);
    c -= inst.prices[i](s[i]);
    ++s[i];
    ev.shift(i, s[i]);
    c = checked_add(c, inst.prices[i](s[i]));
  }
  return finish(inst, std::move(best), explored);
}

// Capped search. A voter's effect depends only on the candidates p can pass in
// it and the prices of those shifts, up to the largest amount the caps allow.
// Voters agreeing on both are interchangeable; the lexicographically smallest
// optimum gives them nondecreasing amounts in index order, so within a group
// amounts are handed out from the last member backwards in nonincreasing order.
class CappedSearch {
 public:
  CappedSearch(const Instance& inst, const VotingRule& rule, const BruteForceOptions& opts)
      : inst_(inst), opts_(opts), ev_(inst.election, inst.preferred, rule),
        action_(inst.num_voters(), 0), reach_(inst.num_voters(), 0) {
    std::map<std::pair<std::vector<CandidateId>, std::vector<std::int64_t>>, int> index;
    for (int i = 0; i < inst.num_voters(); ++i) {
      int top = ev_.cap(i);
      if (opts_.max_total_shifts) top = std::min(top, *opts_.max_total_shifts);
      for (int a = 1; a <= top; ++a)
        if (!inst.budget || inst.prices[i](a) <= *inst.budget) reach_[i] = a;
      if (reach_[i] == 0) continue;
      auto ahead = ev_.ahead(i);
      std::vector<std::int64_t> prices;
      for (int a = 1; a <= reach_[i]; ++a) prices.push_back(inst.prices[i](a));
      auto key = std::make_pair(std::vector<CandidateId>(ahead.begin(), ahead.begin() + reach_[i]), prices);
      auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(groups_.size()));
      if (fresh) groups_.emplace_back();
      groups_[it->second].push_back(i);
    }
    for (auto& g : groups_) std::reverse(g.begin(), g.end());
  }

  SolveResult run() {
    visit(-1, 0, 0, 0, 0, 0);
    return finish(inst_, best_, explored_);
  }

 private:
  bool admissible(int affected, int shifts, std::int64_t c) const {
    if (opts_.max_affected && affected > *opts_.max_affected) return false;
    if (opts_.max_total_shifts && shifts > *opts_.max_total_shifts) return false;
    if (inst_.budget && c > *inst_.budget) return false;
    if (best_.found && c > best_.cost) return false;
    return true;
  }

  void visit(int group, int slot, int prev, int affected, int shifts, std::int64_t c) {
    if (++explored_ > opts_.limit) fail(ErrorKind::capacity, "brute force enumeration too large");
    if (ev_.p_wins()) {
      best_.offer(c, action_);
      return;  // every extension costs at least as much and is lexicographically larger
    }
    if (group >= 0 && slot < static_cast<int>(groups_[group].size()))
      for (int a = 1; a <= prev; ++a) descend(group, slot, a, affected, shifts, c);
    for (int g = group + 1; g < static_cast<int>(groups_.size()); ++g)
      for (int a = 1; a <= reach_[groups_[g][0]]; ++a) descend(g, 0, a, affected, shifts, c);
  }

  void descend(int group, int slot, int amount, int affected, int shifts, std::int64_t c) {
    int voter = groups_[group][slot];
    std::int64_t nc = checked_add(c, inst_.prices[voter](amount));
    if (!admissible(affected + 1, shifts + amount, nc)) return;
    action_[voter] = amount;
    ev_.shift(voter, amount);
    visit(group, slot + 1, amount, affected + 1, shifts + amount, nc);
    ev_.unshift(voter, amount);
    action_[voter] = 0;
  }

  const Instance& inst_;
  const BruteForceOptions& opts_;
  ShiftEvaluator ev_;
  std::vector<std::vector<int>> groups_;
  ShiftAction action_;
  std::vector<int> reach_;
  Best best_;
  std::int64_t explored_ = 0;
};

}  // namespace

SolveResult brute_force(const Instance& inst, const VotingRule& rule, const BruteForceOptions& opts) {
  SolveResult r;
  if (!opts.max_affected && !opts.max_total_shifts && !inst.budget)
    r = enumerate_all(inst, rule, opts.limit);
  else
    r = CappedSearch(inst, rule, opts).run();
  r.guarantee = Guarantee::exact();
  return r;
}

}  // namespace sb
