#include "shiftbribery/election.hpp"

#include <algorithm>

namespace sb {

Election::Election(std::vector<std::string> candidates, std::vector<PreferenceOrder> voters)
    : names_(std::move(candidates)), voters_(std::move(voters)) {
  if (names_.empty()) fail(ErrorKind::invalid, "election needs at least one candidate");
  if (voters_.empty()) fail(ErrorKind::invalid, "election needs at least one voter");
  if (static_cast<std::int64_t>(names_.size()) > kMaxCandidates)
    fail(ErrorKind::capacity, "too many candidates");
  if (static_cast<std::int64_t>(voters_.size()) > kMaxVoters)
    fail(ErrorKind::capacity, "too many voters");
  for (std::size_t c = 0; c < names_.size(); ++c) {
    if (!index_.emplace(names_[c], static_cast<CandidateId>(c)).second)
      fail(ErrorKind::invalid, "duplicate candidate '" + names_[c] + "'");
  }
  const int m = num_candidates();
  std::vector<char> seen(m);
  for (std::size_t i = 0; i < voters_.size(); ++i) {
    const auto& order = voters_[i];
    if (static_cast<int>(order.size()) != m)
      fail(ErrorKind::invalid, "voter " + std::to_string(i + 1) + " does not rank every candidate");
    std::fill(seen.begin(), seen.end(), 0);
    for (CandidateId c : order) {
      if (c < 0 || c >= m || seen[c])
        fail(ErrorKind::invalid, "voter " + std::to_string(i + 1) + " is not a permutation");
      seen[c] = 1;
    }
  }
}

CandidateId Election::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrorKind::invalid, "unknown candidate '" + name + "'");
  return it->second;
}

int Election::position(int voter, CandidateId c) const {
  const auto& order = voters_[voter];
  return static_cast<int>(std::find(order.begin(), order.end(), c) - order.begin()) + 1;
}

VotingRule VotingRule::copeland(Rational alpha) {
  if (alpha < 0 || alpha > 1) fail(ErrorKind::invalid, "alpha must lie in [0,1]");
  return {RuleKind::copeland, alpha};
}

std::string rule_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::borda: return "borda";
    case RuleKind::maximin: return "maximin";
    case RuleKind::copeland: return "copeland";
  }
  return "?";
}

RuleKind parse_rule(std::string_view name) {
  if (name == "borda") return RuleKind::borda;
  if (name == "maximin") return RuleKind::maximin;
  if (name == "copeland") return RuleKind::copeland;
  fail(ErrorKind::invalid, "unknown rule '" + std::string(name) + "'");
}

PairwiseMatrix::PairwiseMatrix(const Election& e)
    : m_(e.num_candidates()), counts_(static_cast<std::size_t>(m_) * m_, 0) {
  for (const auto& order : e.voters()) {
    for (int a = 0; a < m_; ++a) {
      std::int32_t* row = counts_.data() + static_cast<std::size_t>(order[a]) * m_;
      for (int b = a + 1; b < m_; ++b) ++row[order[b]];
    }
  }
}

PairwiseMatrix pairwise_matrix(const Election& e) { return PairwiseMatrix(e); }

std::vector<Rational> scores(const PairwiseMatrix& n, int num_voters, const VotingRule& rule) {
  const int m = n.size();
  std::vector<Rational> out(m);
  for (int c = 0; c < m; ++c) {
    switch (rule.kind) {
      case RuleKind::borda: {
        std::int64_t s = 0;
        for (int d = 0; d < m; ++d)
          if (d != c) s += n(c, d);
        out[c] = s;
        break;
      }
      case RuleKind::maximin: {
        // A lone candidate has no opponent; score it n so it wins.
        std::int64_t s = num_voters;
        for (int d = 0; d < m; ++d)
          if (d != c) s = std::min<std::int64_t>(s, n(c, d));
        out[c] = s;
        break;
      }
      case RuleKind::copeland: {
        std::int64_t wins = 0, ties = 0;
        for (int d = 0; d < m; ++d) {
          if (d == c) continue;
          if (n(c, d) > n(d, c)) ++wins;
          else if (n(c, d) == n(d, c)) ++ties;
        }
        out[c] = Rational(wins) + rule.alpha * ties;
        break;
      }
    }
  }
  return out;
}

std::vector<Rational> scores(const Election& e, const VotingRule& rule) {
  return scores(PairwiseMatrix(e), e.num_voters(), rule);
}

std::vector<CandidateId> winners(const Election& e, const VotingRule& rule) {
  auto s = scores(e, rule);
  Rational best = *std::max_element(s.begin(), s.end());
  std::vector<CandidateId> out;
  for (int c = 0; c < static_cast<int>(s.size()); ++c)
    if (s[c] == best) out.push_back(c);
  return out;
}

bool is_winner(const Election& e, const VotingRule& rule, CandidateId c) {
  auto w = winners(e, rule);
  return std::binary_search(w.begin(), w.end(), c);
}

Election apply_shift(const Election& e, CandidateId p, std::span<const int> shifts) {
  if (static_cast<int>(shifts.size()) != e.num_voters())
    fail(ErrorKind::invalid, "shift action length does not match the number of voters");
  std::vector<PreferenceOrder> orders = e.voters();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (shifts[i] < 0) fail(ErrorKind::invalid, "negative shift");
    auto& order = orders[i];
    auto at = std::find(order.begin(), order.end(), p);
    int room = static_cast<int>(at - order.begin());
    int k = std::min(shifts[i], room);
    std::rotate(at - k, at, at + 1);
  }
  return Election(e.candidates(), std::move(orders));
}

}  // namespace sb
