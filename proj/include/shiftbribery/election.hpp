#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "shiftbribery/common.hpp"

namespace sb {

// Candidates are referred to by their index into Election::candidates().
using CandidateId = int;
// Ranking from most preferred (position 1) to least preferred (position m).
using PreferenceOrder = std::vector<CandidateId>;
// Per-voter number of positions p moves forward.
using ShiftAction = std::vector<int>;

inline constexpr std::int64_t kMaxCandidates = 1'000'000;
inline constexpr std::int64_t kMaxVoters = 1'000'000;

class Election {
 public:
  Election(std::vector<std::string> candidates, std::vector<PreferenceOrder> voters);

  int num_candidates() const { return static_cast<int>(names_.size()); }
  int num_voters() const { return static_cast<int>(voters_.size()); }

  const std::vector<std::string>& candidates() const { return names_; }
  const std::string& name(CandidateId c) const { return names_[c]; }
  // Throws invalid for unknown names.
  CandidateId id(const std::string& name) const;
  bool has(const std::string& name) const { return index_.contains(name); }

  const std::vector<PreferenceOrder>& voters() const { return voters_; }
  const PreferenceOrder& voter(int i) const { return voters_[i]; }

  // 1-based position of c in voter i's order.
  int position(int voter, CandidateId c) const;

  friend bool operator==(const Election& a, const Election& b) {
    return a.names_ == b.names_ && a.voters_ == b.voters_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, CandidateId> index_;
  std::vector<PreferenceOrder> voters_;
};

enum class RuleKind { borda, maximin, copeland };

struct VotingRule {
  RuleKind kind = RuleKind::borda;
  Rational alpha{1, 2};  // only used by Copeland

  static VotingRule borda() { return {RuleKind::borda, Rational(1, 2)}; }
  static VotingRule maximin() { return {RuleKind::maximin, Rational(1, 2)}; }
  static VotingRule copeland(Rational alpha = Rational(1, 2));
};

std::string rule_name(RuleKind kind);
// "borda" | "maximin" | "copeland"
RuleKind parse_rule(std::string_view name);

// N(c, d): number of voters preferring c over d.
class PairwiseMatrix {
 public:
  explicit PairwiseMatrix(const Election& e);
  int operator()(CandidateId c, CandidateId d) const {
    return counts_[static_cast<std::size_t>(c) * m_ + d];
  }
  int size() const { return m_; }

 private:
  int m_;
  std::vector<std::int32_t> counts_;
};

PairwiseMatrix pairwise_matrix(const Election& e);

// Scores indexed by candidate id. Copeland scores are exact rationals.
std::vector<Rational> scores(const Election& e, const VotingRule& rule);
std::vector<Rational> scores(const PairwiseMatrix& n, int num_voters, const VotingRule& rule);

// All candidates attaining the maximum score, ascending by id.
std::vector<CandidateId> winners(const Election& e, const VotingRule& rule);
bool is_winner(const Election& e, const VotingRule& rule, CandidateId c);

// Moves p forward by min(s_i, position_i(p) - 1) in each voter's order.
Election apply_shift(const Election& e, CandidateId p, std::span<const int> shifts);

}  // namespace sb
