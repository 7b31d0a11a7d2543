#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "shiftbribery/instance.hpp"

namespace sb {

// Line-oriented instance file, '#' starts a comment:
//
//   rule: copeland
//   alpha: 1/2            (copeland only, optional)
//   candidates: p,a,b
//   preferred: p
//   budget: 3             (optional)
//   voters: 2
//   a>p>b ; unit
//   b>a>p ; list:1,4
//
// Price specs: unit | aon:C | list:v1,...,v(m-1).
struct InstanceFile {
  Instance instance;
  VotingRule rule;
};

// Throws invalid with "line N: ..." on syntax and semantic errors.
InstanceFile parse_instance(std::string_view text);

// Canonical text: unit and aon tables are written in their short forms.
// Each header line is emitted as a comment at the top.
std::string serialize_instance(const InstanceFile& file, std::string_view header = {});

struct ResultMeta {
  std::string solver;
  RuleKind rule = RuleKind::borda;
  std::optional<int> t;
  std::optional<Rational> epsilon;
  std::optional<int> max_affected;
  std::optional<std::int64_t> budget;
  double wall_seconds = 0;
};

// JSON document with a fixed key order. The action is left out when infeasible.
std::string serialize_result(const SolveResult& r, const ResultMeta& meta);

}  // namespace sb
