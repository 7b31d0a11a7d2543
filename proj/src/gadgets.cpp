#include "shiftbribery/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "shiftbribery/common.hpp"

namespace sb {
namespace {

std::vector<CandidateId> sorted(std::span<const CandidateId> s) {
  std::vector<CandidateId> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

// rest = everything except x and y. With a separation, p and d go to opposite
// ends so that the order and its mirror keep them apart: p first and d last,
// or p last when d is one of x, y.
std::vector<CandidateId> rest_of(int m, CandidateId x, CandidateId y, const std::optional<Separation>& sep) {
  std::vector<CandidateId> rest;
  for (int c = 0; c < m; ++c)
    if (c != x && c != y && !(sep && (c == sep->p || c == sep->d))) rest.push_back(c);
  if (sep) {
    const bool p_free = sep->p != x && sep->p != y, d_free = sep->d != x && sep->d != y;
    if (p_free && !d_free) rest.push_back(sep->p);
    else if (p_free) rest.insert(rest.begin(), sep->p);
    if (d_free) rest.push_back(sep->d);
  }
  return rest;
}

int distance(const PreferenceOrder& o, CandidateId a, CandidateId b) {
  auto pa = std::find(o.begin(), o.end(), a) - o.begin();
  auto pb = std::find(o.begin(), o.end(), b) - o.begin();
  return static_cast<int>(std::abs(pa - pb));
}

}  // namespace

std::array<PreferenceOrder, 2> point_pair(CandidateId p, std::span<const CandidateId> a, CandidateId d,
                                          CandidateId g, std::span<const CandidateId> b, CandidateId z) {
  std::set<CandidateId> seen;
  auto add = [&](CandidateId c) {
    if (!seen.insert(c).second) fail(ErrorKind::invalid, "point_pair: candidate sets overlap");
  };
  for (CandidateId c : {p, d, g, z}) add(c);
  for (CandidateId c : a) add(c);
  for (CandidateId c : b) add(c);
  auto sa = sorted(a), sb_ = sorted(b);
  PreferenceOrder first, second;
  first.push_back(p);
  first.insert(first.end(), sa.begin(), sa.end());
  first.push_back(d);
  first.push_back(g);
  first.insert(first.end(), sb_.begin(), sb_.end());
  first.push_back(z);
  second.push_back(z);
  second.insert(second.end(), sb_.rbegin(), sb_.rend());
  second.push_back(d);
  second.push_back(g);
  second.insert(second.end(), sa.rbegin(), sa.rend());
  second.push_back(p);
  return {first, second};
}

std::array<PreferenceOrder, 2> half_seq(std::span<const CandidateId> a, int i) {
  const int size = static_cast<int>(a.size());
  if (size % 2 == 0) fail(ErrorKind::invalid, "half_seq: the candidate set must have odd size");
  if (i < 0 || i >= size) fail(ErrorKind::invalid, "half_seq: index outside the candidate set");
  auto s = sorted(a);
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    fail(ErrorKind::invalid, "half_seq: repeated candidate");
  const int x = size / 2;
  std::vector<CandidateId> ai, others;
  for (int k = 1; k <= x; ++k) ai.push_back(s[(i + k) % size]);
  for (int k = x + 1; k < size; ++k) others.push_back(s[(i + k) % size]);
  std::sort(ai.begin(), ai.end());
  std::sort(others.begin(), others.end());
  PreferenceOrder first{s[i]}, second;
  first.insert(first.end(), ai.begin(), ai.end());
  first.insert(first.end(), others.begin(), others.end());
  second.insert(second.end(), others.rbegin(), others.rend());
  second.push_back(s[i]);
  second.insert(second.end(), ai.rbegin(), ai.rend());
  return {first, second};
}

std::vector<PreferenceOrder> mcgarvey(int m, const std::vector<std::vector<int>>& margins,
                                      std::optional<Separation> separation) {
  if (static_cast<int>(margins.size()) != m) fail(ErrorKind::invalid, "mcgarvey: margin matrix size");
  int parity = -1;
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(margins[x].size()) != m) fail(ErrorKind::invalid, "mcgarvey: margin matrix size");
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      if (margins[x][y] != -margins[y][x]) fail(ErrorKind::invalid, "mcgarvey: margins must be antisymmetric");
      int par = std::abs(margins[x][y]) % 2;
      if (parity >= 0 && par != parity) fail(ErrorKind::invalid, "mcgarvey: margins differ in parity");
      parity = par;
    }
  }
  if (separation) {
    const auto& s = *separation;
    if (s.p == s.d || s.p < 0 || s.d < 0 || s.p >= m || s.d >= m)
      fail(ErrorKind::invalid, "mcgarvey: bad separation pair");
  }

  std::vector<PreferenceOrder> out;
  std::vector<std::vector<int>> left = margins;
  if (parity == 1) {
    PreferenceOrder base = rest_of(m, -1, -1, separation);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        --left[base[a]][base[b]];
        ++left[base[b]][base[a]];
      }
    out.push_back(base);
  }
  if (separation) {
    // A margin between p and d itself: x > R > y and x > rev(R) > y keep them
    // at the two ends; the resulting x-over-R and R-over-y margins are paid back
    // by ordinary pairs below.
    CandidateId x = separation->p, y = separation->d;
    if (left[y][x] > 0) std::swap(x, y);
    std::vector<CandidateId> rest;
    for (int c = 0; c < m; ++c)
      if (c != x && c != y) rest.push_back(c);
    while (left[x][y] > 0) {
      PreferenceOrder first{x}, second{x};
      first.insert(first.end(), rest.begin(), rest.end());
      second.insert(second.end(), rest.rbegin(), rest.rend());
      first.push_back(y);
      second.push_back(y);
      out.push_back(first);
      out.push_back(second);
      left[x][y] -= 2, left[y][x] += 2;
      for (CandidateId r : rest) {
        left[x][r] -= 2, left[r][x] += 2;
        left[r][y] -= 2, left[y][r] += 2;
      }
    }
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || left[x][y] <= 0) continue;
      std::vector<CandidateId> rest = rest_of(m, x, y, separation);
      PreferenceOrder first{x, y}, second(rest.rbegin(), rest.rend());
      first.insert(first.end(), rest.begin(), rest.end());
      second.push_back(x);
      second.push_back(y);
      for (int k = 0; k < left[x][y] / 2; ++k) {
        out.push_back(first);
        out.push_back(second);
      }
    }
  if (separation)
    for (const auto& o : out)
      if (distance(o, separation->p, separation->d) < separation->gap)
        fail(ErrorKind::invalid, "mcgarvey: separation impossible for the candidate count");
  return out;
}

}  // namespace sb
