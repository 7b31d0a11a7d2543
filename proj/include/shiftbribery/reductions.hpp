#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftbribery/instance.hpp"

namespace sb {

// Elements are 0..universe-1.
struct SetCoverInstance {
  int universe = 0;
  std::vector<std::vector<int>> family;
  int k = 0;

  void validate() const;
};

// Vertices are 0..vertices-1. coloring[v] in 0..k-1 for Multicolored Clique.
struct GraphInstance {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int k = 0;
  std::optional<std::vector<int>> coloring;

  void validate() const;
};

enum class PriceVariant { unit, all_or_nothing };

std::string price_variant_name(PriceVariant v);
PriceVariant parse_price_variant(std::string_view name);

struct Reduction {
  Instance instance;
  VotingRule rule;
  std::optional<int> max_affected;  // affected-voter bound the equivalence relies on
  std::string note;                 // padding and other adjustments, human readable
};

// Set Cover (k distinct members of the family whose union is the universe)
// -> Shift Bribery with at most k affected voters.
Reduction reduce_setcover(const SetCoverInstance& sc, RuleKind rule, PriceVariant prices);

// Clique of size k -> Copeland Shift Bribery. Pads with isolated vertices to
// meet the parity and size assumptions of the construction.
Reduction reduce_clique_copeland(const GraphInstance& g, PriceVariant prices);

// Multicolored Clique on a regular, properly colored graph -> Copeland Shift
// Bribery with unit prices. Candidate count grows like n^5.
Reduction reduce_mcc_copeland(const GraphInstance& g);

}  // namespace sb
