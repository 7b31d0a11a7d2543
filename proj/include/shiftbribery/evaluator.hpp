#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shiftbribery/election.hpp"

namespace sb {

// Incremental winner check for shifting a single candidate p. Shifting p only
// changes the pairwise counts between p and the candidates it passes, so each
// check costs O(m) instead of rescoring the whole election.
class ShiftEvaluator {
 public:
  ShiftEvaluator(const Election& e, CandidateId p, const VotingRule& rule);

  // Candidates ahead of p in voter i, nearest first.
  std::span<const CandidateId> ahead(int voter) const { return ahead_[voter]; }
  int cap(int voter) const { return static_cast<int>(ahead_[voter].size()); }

  void shift(int voter, int amount);
  void unshift(int voter, int amount);
  void clear();

  bool p_wins() const;
  // Convenience: evaluates a whole action from a clean state.
  bool wins(std::span<const int> shifts);

  int passes(CandidateId c) const { return passes_[c]; }

 private:
  std::int64_t contest(std::int64_t for_c, std::int64_t against_c) const {
    return for_c > against_c ? win_ : for_c == against_c ? tie_ : 0;
  }

  RuleKind kind_;
  int m_;
  int n_;
  CandidateId p_;
  std::vector<std::vector<CandidateId>> ahead_;
  std::vector<std::int64_t> base_;     // borda score / maximin min excluding p / copeland score excluding p
  std::vector<std::int64_t> n_p_over_;  // N(p, c)
  std::vector<std::int64_t> n_over_p_;  // N(c, p)
  std::vector<std::int64_t> passes_;
  std::int64_t gain_ = 0;
  std::int64_t win_ = 1, tie_ = 0;  // Copeland contest values scaled by denominator(alpha)
};

}  // namespace sb
