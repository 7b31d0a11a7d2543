#pragma once

#include <cstdint>
#include <vector>

#include "shiftbribery/instance.hpp"

namespace sb {

// Voters with identical preference orders, each block sorted by the price of
// moving p to the top (ties by voter index). Blocks appear in order of their
// first voter.
using VoterBlocks = std::vector<std::vector<int>>;

// mu[x][y-1]: number of voters of block x shifted by at least y positions,
// y = 1..m-1. Valid when nonincreasing in y and bounded by the block size.
using StepwiseShiftAction = std::vector<std::vector<int>>;
// b[x][y-1]: budget for moving voters of block x from y-1 to y shifts.
using StepwiseBudget = std::vector<std::vector<std::int64_t>>;

VoterBlocks sorted_blocks(const Instance& inst);

// The first mu[x][y-1] voters of block x get at least y shifts, clamped to
// p's position. Throws invalid on a malformed or non-monotone mu.
ShiftAction stepwise_to_shift(const Instance& inst, const VoterBlocks& blocks,
                              const StepwiseShiftAction& mu);
// Inverse of stepwise_to_shift for actions that are nonincreasing inside each block.
StepwiseShiftAction shift_to_stepwise(const Instance& inst, const VoterBlocks& blocks,
                                      const ShiftAction& s);

// Per block and step, the largest count of leading voters whose incremental
// cost fits the budget entry, never exceeding the previous step's count.
StepwiseShiftAction pi_s_shift(const Instance& inst, const VoterBlocks& blocks,
                               const StepwiseBudget& b);
// What mu actually spends per block and step.
StepwiseBudget stepwise_cost(const Instance& inst, const VoterBlocks& blocks,
                             const StepwiseShiftAction& mu);

// Price-rounding scheme over per-voter budget vectors; spent <= (1+eps)·OPT.
SolveResult fptas_voters(const Instance& inst, const VotingRule& rule, const Rational& eps);

struct CandidateSchemeOptions {
  // The recursive budget search runs literally (all M^depth leaves) when the
  // leaf count is at most this. Otherwise only the branch steered by a
  // cheapest successful stepwise action is followed.
  std::int64_t literal_leaves = 4096;
  // Limit on stepwise actions enumerated to find the steering action.
  std::int64_t steer_limit = 10'000'000;
};

// Stepwise budget search for sortable prices; spent <= (1+eps)^2·OPT.
SolveResult fptas_candidates(const Instance& inst, const VotingRule& rule, const Rational& eps,
                             const CandidateSchemeOptions& opts = {});

}  // namespace sb
