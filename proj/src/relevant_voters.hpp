#pragma once

#include <vector>

#include "shiftbribery/evaluator.hpp"
#include "shiftbribery/instance.hpp"

namespace sb::detail {

// Voters worth considering when at most max_amount shifts go to one voter:
// per (set of critical candidates passed, amount), the `keep` cheapest voters,
// ties by index. Voters whose p is already on top are dropped.
std::vector<int> relevant_voters(const Instance& inst, const ShiftEvaluator& ev,
                                 const std::vector<char>& critical, int max_amount, int keep);

}  // namespace sb::detail
