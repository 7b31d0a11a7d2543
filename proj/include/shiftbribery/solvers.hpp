#pragma once

#include <cstdint>
#include <optional>

#include "shiftbribery/instance.hpp"

namespace sb {

struct BruteForceOptions {
  std::optional<int> max_affected;      // at most this many voters shifted
  std::optional<int> max_total_shifts;  // at most this many unit shifts
  // Refuse when the search space (product of positions, or nodes visited
  // under caps) exceeds this.
  std::int64_t limit = 10'000'000;
};

// Exhaustive oracle. Minimum cost successful action, ties broken towards the
// lexicographically smallest action. With a budget, only actions within it are
// searched, so an optimum above the budget reports infeasible.
SolveResult brute_force(const Instance& inst, const VotingRule& rule,
                        const BruteForceOptions& opts = {});

// Borda and Maximin only: exact among actions with at most max_shifts unit shifts.
SolveResult fpt_shifts(const Instance& inst, const VotingRule& rule, int max_shifts);

// Every voter either moves p to the top or leaves it; 2^n subsets.
SolveResult solve_all_or_nothing(const Instance& inst, const VotingRule& rule);

// Guesses how many voters of each preference-order block receive each shift
// amount and realizes each guess by a min-cost assignment.
SolveResult xp_flow_solve(const Instance& inst, const VotingRule& rule,
                          std::int64_t guess_limit = 10'000'000);

// Repeatedly buys the cheapest single-position shift. Requires convex prices.
SolveResult greedy_convex(const Instance& inst, const VotingRule& rule);

inline constexpr int kMaxAllOrNothingVoters = 25;

}  // namespace sb
