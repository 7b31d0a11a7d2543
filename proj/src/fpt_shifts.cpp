#include <algorithm>
#include <map>

#include "shiftbribery/evaluator.hpp"
#include "shiftbribery/solvers.hpp"
#include "relevant_voters.hpp"

namespace sb {

namespace detail {

std::vector<int> relevant_voters(const Instance& inst, const ShiftEvaluator& ev,
                                 const std::vector<char>& critical, int max_amount, int keep) {
  std::map<std::pair<std::vector<CandidateId>, int>, std::vector<std::pair<std::int64_t, int>>> buckets;
  for (int i = 0; i < inst.num_voters(); ++i) {
    std::vector<CandidateId> passed;
    auto ahead = ev.ahead(i);
    for (int j = 0; j <= std::min<int>(max_amount, ahead.size()); ++j) {
      if (j > 0 && critical[ahead[j - 1]]) passed.push_back(ahead[j - 1]);
      auto key = passed;
      std::sort(key.begin(), key.end());
      buckets[{key, j}].push_back({inst.prices[i](j), i});
    }
  }
  std::vector<char> chosen(inst.num_voters(), 0);
  for (auto& [key, list] : buckets) {
    std::sort(list.begin(), list.end());
    for (int k = 0; k < std::min<int>(keep, list.size()); ++k) chosen[list[k].second] = 1;
  }
  std::vector<int> out;
  for (int i = 0; i < inst.num_voters(); ++i)
    if (chosen[i] && ev.cap(i) > 0) out.push_back(i);
  return out;
}

}  // namespace detail

namespace {

using detail::relevant_voters;

struct Candidate {
  std::int64_t cost;
  ShiftAction action;
};

class AssignmentSearch {
 public:
  AssignmentSearch(const Instance& inst, ShiftEvaluator& ev, std::vector<int> voters,
                   int max_amount, int total, bool exact_total)
      : inst_(inst), ev_(ev), voters_(std::move(voters)), max_amount_(max_amount),
        total_(total), exact_(exact_total), action_(inst.num_voters(), 0) {}

  void run(std::optional<Candidate>& best, std::int64_t& explored) {
    best_ = &best;
    explored_ = &explored;
    go(0, total_, 0);
  }

 private:
  void go(std::size_t k, int left, std::int64_t c) {
    if (*best_ && c > (*best_)->cost) return;
    if (k == voters_.size()) {
      if (exact_ && left != 0) return;
      ++*explored_;
      if (ev_.p_wins()) {
        auto& b = *best_;
        if (!b || c < b->cost || (c == b->cost && action_ < b->action)) b = Candidate{c, action_};
      }
      return;
    }
    int v = voters_[k];
    int top = std::min({left, max_amount_, ev_.cap(v)});
    for (int a = 0; a <= top; ++a) {
      action_[v] = a;
      ev_.shift(v, a);
      go(k + 1, left - a, checked_add(c, inst_.prices[v](a)));
      ev_.unshift(v, a);
    }
    action_[v] = 0;
  }

  const Instance& inst_;
  ShiftEvaluator& ev_;
  std::vector<int> voters_;
  int max_amount_;
  int total_;
  bool exact_;
  ShiftAction action_;
  std::optional<Candidate>* best_ = nullptr;
  std::int64_t* explored_ = nullptr;
};

}  // namespace

SolveResult fpt_shifts(const Instance& inst, const VotingRule& rule, int max_shifts) {
  if (rule.kind == RuleKind::copeland)
    fail(ErrorKind::unsupported,
         "the shift-count algorithm covers Borda and Maximin only; Copeland is W[1]-hard here");
  if (max_shifts < 0) fail(ErrorKind::invalid, "negative shift bound");
  const int m = inst.num_candidates();
  const CandidateId p = inst.preferred;
  ShiftEvaluator ev(inst.election, p, rule);
  PairwiseMatrix n(inst.election);
  auto score = scores(n, inst.num_voters(), rule);

  std::optional<Candidate> best;
  std::int64_t explored = 0;
  for (int tp = 0; tp <= max_shifts; ++tp) {
    std::vector<char> critical(m, 0);
    int count = 0;
    if (rule.kind == RuleKind::borda) {
      // Exactly tp shifts lift p to score(p)+tp; anyone above must be passed.
      for (int c = 0; c < m; ++c)
        if (c != p && score[c] > score[p] + tp) critical[c] = 1, ++count;
      if (count > tp) continue;
      auto voters = relevant_voters(inst, ev, critical, tp, tp);
      AssignmentSearch(inst, ev, std::move(voters), tp, tp, true).run(best, explored);
    } else {
      // tp = points p gains. Candidates holding p's score down must be passed,
      // and so must candidates whose own score stays above p's new score.
      for (int c = 0; c < m; ++c)
        if (c != p && n(p, c) < score[p] + tp) critical[c] = 1, ++count;
      if (count > max_shifts - tp + 1) continue;
      for (int c = 0; c < m; ++c)
        if (c != p && !critical[c] && score[c] > score[p] + tp) critical[c] = 1, ++count;
      if (count > max_shifts) continue;
      auto voters = relevant_voters(inst, ev, critical, max_shifts, max_shifts);
      AssignmentSearch(inst, ev, std::move(voters), max_shifts, max_shifts, false).run(best, explored);
    }
  }

  SolveResult r;
  r.explored = explored;
  r.guarantee = Guarantee::exact();
  if (best) {
    r.feasible = true;
    r.spent = best->cost;
    r.action = std::move(best->action);
  }
  return within_budget(inst, std::move(r));
}

}  // namespace sb
