#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftbribery/election.hpp"

namespace sb {

// Price of shifting p by l positions, for l = 1..m-1. The price of zero shifts is 0.
class PriceFunction {
 public:
  PriceFunction() = default;
  explicit PriceFunction(std::vector<std::int64_t> table);

  // Shift amounts beyond the table are clamped to its last entry.
  std::int64_t operator()(int shift) const {
    if (shift <= 0 || table_.empty()) return 0;
    return table_[std::min<std::size_t>(shift, table_.size()) - 1];
  }
  const std::vector<std::int64_t>& table() const { return table_; }
  int max_shift() const { return static_cast<int>(table_.size()); }

  friend bool operator==(const PriceFunction&, const PriceFunction&) = default;

  // pi(l) = min(l, position - 1)
  static PriceFunction unit(int num_candidates, int p_position);
  // pi(l) = c for l >= 1 (zero everywhere when p is already on top)
  static PriceFunction all_or_nothing(int num_candidates, int p_position, std::int64_t c);
  // Table built from values for l = 1..position-1, held constant afterwards.
  static PriceFunction from_prefix(int num_candidates, std::span<const std::int64_t> prefix);

 private:
  std::vector<std::int64_t> table_;
};

using PriceList = std::vector<PriceFunction>;

struct PriceViolation {
  int index;  // 1-based shift amount l where the table first goes wrong
  std::string reason;
};

// Checks nonnegativity, monotonicity and constancy from p's position on.
std::optional<PriceViolation> validate(const PriceFunction& pf, int p_position);
// Validates every voter's table against the election; throws invalid naming the voter.
void validate_prices(const PriceList& prices, const Election& e, CandidateId p);

// Sum of pi_i(s_i); throws capacity on overflow.
std::int64_t cost(const PriceList& prices, std::span<const int> shifts);

enum PriceFamily : unsigned {
  kUnit = 1u << 0,
  kConvex = 1u << 1,
  kAllOrNothing = 1u << 2,
  kSortable = 1u << 3,
};

struct PriceFamilies {
  unsigned bits = 0;
  bool has(PriceFamily f) const { return (bits & f) != 0; }
  friend bool operator==(PriceFamilies, PriceFamilies) = default;
};

PriceFamilies classify(const PriceList& prices, const Election& e, CandidateId p);
// e.g. "unit,convex,sortable"; empty string for no family.
std::string family_names(PriceFamilies f);

// Per voter, the largest t <= caps_i with pi_i(t) <= budget_i. caps_i is
// normally position_i(p) - 1.
ShiftAction budget_to_shifts(const PriceList& prices, std::span<const std::int64_t> budgets,
                             std::span<const int> caps);

// Per-voter position of p, 1-based.
std::vector<int> p_positions(const Election& e, CandidateId p);
// Per-voter position of p minus one: the most p can move.
std::vector<int> shift_caps(const Election& e, CandidateId p);

PriceList unit_prices(const Election& e, CandidateId p);

}  // namespace sb
