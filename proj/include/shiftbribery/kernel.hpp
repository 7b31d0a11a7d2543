#pragma once

#include <cstdint>
#include <vector>

#include "shiftbribery/instance.hpp"

namespace sb {

enum class CandidateOrigin {
  preferred,
  critical,  // an input candidate kept under its own name
  dummy,     // partner of a critical candidate that carries its score offset
  filler,    // stands in for a non-critical candidate close ahead of p in one voter
  guard,     // fixes p's reachable score range and unmovable competitors
  input,     // kernel returned the input unchanged
};

enum class VoterOrigin {
  pair,      // offset gadget voter, priced out of reach
  retained,  // an input voter with its original price function
  reverse,   // mirror of a retained voter, priced out of reach
  input,     // kernel returned the input unchanged
};

struct CandidateTag {
  CandidateOrigin origin;
  CandidateId source = -1;  // input candidate for critical/dummy, input voter for filler
};

struct VoterTag {
  VoterOrigin origin;
  int source = -1;  // input voter for retained/reverse/input
};

struct KernelOutput {
  Instance instance;
  std::vector<CandidateTag> candidate_map;
  std::vector<VoterTag> voter_map;
  bool unchanged = false;
  // Set when the answer is already decided and the kernel is a fixed
  // two-candidate no-instance or the one-candidate yes-instance.
  bool trivial = false;
  int critical = 0;  // critical candidates kept
  int retained = 0;  // input voters kept
};

struct KernelOptions {
  // Return the input itself when it is within the size bounds below.
  bool keep_small = true;
};

// Equivalent instance for the question "is there a successful action with at
// most t unit shifts within the budget". Borda and Maximin; the budget must be set.
KernelOutput kernelize(const Instance& inst, const VotingRule& rule, int t, const KernelOptions& opts = {});

// Size guarantees of kernelize for n input voters.
std::int64_t kernel_candidate_bound(RuleKind rule, int t, std::int64_t n);
std::int64_t kernel_voter_bound(RuleKind rule, int t, std::int64_t n);
// min(n, t^3 2^t): how many input voters the kernel keeps at most.
std::int64_t kernel_retained_bound(int t, std::int64_t n);

}  // namespace sb
