#include <doctest.h>

#include <random>

#include "shiftbribery/gadgets.hpp"
#include "support.hpp"

using namespace sb;

namespace {

// Borda points of every candidate over the given orders, counted by hand.
std::vector<int> borda_points(int m, const std::vector<PreferenceOrder>& orders) {
  std::vector<int> pts(m, 0);
  for (const auto& o : orders)
    for (int k = 0; k < static_cast<int>(o.size()); ++k) pts[o[k]] += m - 1 - k;
  return pts;
}

// wins[a][b] = number of orders ranking a above b
std::vector<std::vector<int>> head_to_head(int m, const std::vector<PreferenceOrder>& orders) {
  std::vector<std::vector<int>> w(m, std::vector<int>(m, 0));
  for (const auto& o : orders)
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) ++w[o[x]][o[y]];
  return w;
}

bool is_permutation(int m, const PreferenceOrder& o) {
  std::vector<int> seen(m, 0);
  if (static_cast<int>(o.size()) != m) return false;
  for (auto c : o)
    if (c < 0 || c >= m || seen[c]++) return false;
  return true;
}

}  // namespace

TEST_CASE("point_pair gives d one point over everyone and two over g") {
  // p=0, A={1,2}, d=3, g=4, B={5}, z=6
  const int m = 7;
  std::vector<CandidateId> a{2, 1}, b{5};
  auto pair = point_pair(0, a, 3, 4, b, 6);
  std::vector<PreferenceOrder> orders(pair.begin(), pair.end());
  CHECK(orders[0] == PreferenceOrder{0, 1, 2, 3, 4, 5, 6});
  CHECK(orders[1] == PreferenceOrder{6, 5, 3, 4, 2, 1, 0});
  auto pts = borda_points(m, orders);
  for (int c : {0, 1, 2, 5, 6}) CHECK(pts[3] - pts[c] == 1);
  CHECK(pts[3] - pts[4] == 2);
  // p needs |A|+1 positions to pass d in the first order
  auto pos = std::find(orders[0].begin(), orders[0].end(), 3) - orders[0].begin();
  CHECK(pos == static_cast<long>(a.size()) + 1);
  CHECK_THROWS_AS(point_pair(0, std::vector<CandidateId>{3}, 3, 4, b, 6), Error);
}

TEST_CASE("point_pair deltas hold for random splits") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = sbt::uniform(rng, 4, 9);
    PreferenceOrder ids(m);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    const int split = sbt::uniform(rng, 0, m - 4);
    std::vector<CandidateId> a(ids.begin() + 4, ids.begin() + 4 + split), b(ids.begin() + 4 + split, ids.end());
    auto pair = point_pair(ids[0], a, ids[1], ids[2], b, ids[3]);
    auto pts = borda_points(m, {pair[0], pair[1]});
    for (int c = 0; c < m; ++c) {
      if (c == ids[1]) continue;
      CHECK(pts[ids[1]] - pts[c] == (c == ids[2] ? 2 : 1));
    }
  }
}

TEST_CASE("half_seq: a_i beats A_i and every other pair ties") {
  for (int size : {1, 3, 5}) {
    std::vector<CandidateId> a(size);
    std::iota(a.begin(), a.end(), 0);
    for (int i = 0; i < size; ++i) {
      auto pair = half_seq(a, i);
      std::vector<PreferenceOrder> orders(pair.begin(), pair.end());
      for (const auto& o : orders) CHECK(is_permutation(size, o));
      auto w = head_to_head(size, orders);
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
          if (x == y) continue;
          // A_i: the size/2 candidates after a_i cyclically
          int gap = ((y - i) % size + size) % size;
          bool x_beats_y = x == i && gap >= 1 && gap <= size / 2;
          bool y_beats_x = y == i && ((x - i) % size + size) % size >= 1 && ((x - i) % size + size) % size <= size / 2;
          int want = x_beats_y ? 2 : y_beats_x ? 0 : 1;
          CHECK(w[x][y] == want);
        }
    }
  }
  std::vector<CandidateId> even{0, 1, 2, 3};
  CHECK_THROWS_AS(half_seq(even, 0), Error);
  std::vector<CandidateId> three{0, 1, 2};
  CHECK_THROWS_AS(half_seq(three, 3), Error);
}

TEST_CASE("mcgarvey realizes random tournaments and margins") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = sbt::uniform(rng, 2, 5);
    const int parity = sbt::uniform(rng, 0, 1);
    std::vector<std::vector<int>> margins(m, std::vector<int>(m, 0));
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        int v = 2 * sbt::uniform(rng, -3, 3) + parity;
        margins[x][y] = v;
        margins[y][x] = -v;
      }
    auto orders = mcgarvey(m, margins);
    for (const auto& o : orders) CHECK(is_permutation(m, o));
    auto w = head_to_head(m, orders);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (x != y) CHECK(w[x][y] - w[y][x] == margins[x][y]);
  }
}

TEST_CASE("mcgarvey edge cases") {
  std::vector<std::vector<int>> zero(3, std::vector<int>(3, 0));
  CHECK(mcgarvey(3, zero).empty());
  std::vector<std::vector<int>> mixed{{0, 1, 2}, {-1, 0, 0}, {-2, 0, 0}};
  CHECK_THROWS_AS(mcgarvey(3, mixed), Error);
  std::vector<std::vector<int>> skew{{0, 2}, {2, 0}};
  CHECK_THROWS_AS(mcgarvey(2, skew), Error);

  // p and d stay at least 3 apart when separated
  const int m = 6;
  std::vector<std::vector<int>> margins(m, std::vector<int>(m, 0));
  margins[0][3] = 2, margins[3][0] = -2;
  margins[1][2] = 4, margins[2][1] = -4;
  margins[4][5] = 2, margins[5][4] = -2;
  auto orders = mcgarvey(m, margins, Separation{0, 5, 3});
  auto w = head_to_head(m, orders);
  CHECK(w[0][3] - w[3][0] == 2);
  CHECK(w[1][2] - w[2][1] == 4);
  CHECK(w[4][5] - w[5][4] == 2);
  for (const auto& o : orders) {
    auto pp = std::find(o.begin(), o.end(), 0) - o.begin();
    auto pd = std::find(o.begin(), o.end(), 5) - o.begin();
    CHECK(std::abs(pp - pd) >= 3);
  }
  // a margin between p and d themselves, in either direction
  for (int dir : {1, -1}) {
    margins[0][5] = 4 * dir, margins[5][0] = -4 * dir;
    auto sep = mcgarvey(m, margins, Separation{0, 5, 3});
    auto ws = head_to_head(m, sep);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (x != y) CHECK(ws[x][y] - ws[y][x] == margins[x][y]);
    for (const auto& o : sep) {
      auto pp = std::find(o.begin(), o.end(), 0) - o.begin();
      auto pd = std::find(o.begin(), o.end(), 5) - o.begin();
      CHECK(std::abs(pp - pd) >= 3);
    }
  }
  CHECK_THROWS_AS(mcgarvey(m, margins, Separation{0, 5, 6}), Error);
}
