#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "shiftbribery/election.hpp"

namespace sb {

// Sets are written in ascending identifier order; the mirrored order reverses them.

// p > A > d > g > B > z  and  z > rev(B) > d > g > rev(A) > p.
// Under Borda, d ends up one point above everyone in A, B, p, z and two above g.
std::array<PreferenceOrder, 2> point_pair(CandidateId p, std::span<const CandidateId> a, CandidateId d,
                                          CandidateId g, std::span<const CandidateId> b, CandidateId z);

// |A| = 2x+1. a_i > A_i > (A \ A_i) and rev(A \ A_i) > a_i > rev(A_i), where A_i
// holds the x candidates following a_i cyclically. a_i beats A_i, every other
// pair ties.
std::array<PreferenceOrder, 2> half_seq(std::span<const CandidateId> a, int i);

struct Separation {
  CandidateId p;
  CandidateId d;
  int gap;  // minimum distance between p and d in every emitted order
};

// margins[x][y] = N(x,y) - N(y,x) wanted from the emitted voters over
// candidates 0..m-1. All off-diagonal margins must share a parity; odd
// margins cost one extra base voter. Each remaining unit of 2 is one pair
// x > y > rest / rev(rest) > x > y. With a separation, p and d sit at opposite
// ends of rest, and a margin between p and d themselves uses the pair
// x > R > y / x > rev(R) > y plus pairs cancelling its side effects.
std::vector<PreferenceOrder> mcgarvey(int num_candidates, const std::vector<std::vector<int>>& margins,
                                      std::optional<Separation> separation = std::nullopt);

}  // namespace sb
