#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shiftbribery/instance.hpp"

namespace sbt {

using namespace sb;

// Orders written as "a>b>c"; candidates are taken from the first order.
inline Election make_election(const std::vector<std::string>& orders) {
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '>')) out.push_back(tok);
    return out;
  };
  auto names = split(orders.front());
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  std::vector<PreferenceOrder> voters;
  for (const auto& o : orders) {
    PreferenceOrder po;
    for (const auto& nm : split(o))
      po.push_back(static_cast<CandidateId>(std::lower_bound(sorted.begin(), sorted.end(), nm) - sorted.begin()));
    voters.push_back(po);
  }
  return Election(sorted, voters);
}

inline std::string order_string(const Election& e, int voter) {
  std::string s;
  for (CandidateId c : e.voter(voter)) {
    if (!s.empty()) s += '>';
    s += e.name(c);
  }
  return s;
}

enum class Family { unit, convex, all_or_nothing, sortable, arbitrary };

inline const char* family_label(Family f) {
  switch (f) {
    case Family::unit: return "unit";
    case Family::convex: return "convex";
    case Family::all_or_nothing: return "all_or_nothing";
    case Family::sortable: return "sortable";
    case Family::arbitrary: return "arbitrary";
  }
  return "?";
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random instance with candidate 0 = "p". Orders are drawn from a small pool
// so that identical-order blocks show up regularly.
inline Instance random_instance(std::mt19937_64& rng, int m, int n, Family family) {
  std::vector<std::string> names;
  names.push_back("p");
  for (int c = 1; c < m; ++c) names.push_back("c" + std::to_string(c));
  std::vector<PreferenceOrder> pool;
  int pool_size = uniform(rng, 1, n);
  for (int k = 0; k < pool_size; ++k) {
    PreferenceOrder o(m);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    pool.push_back(o);
  }
  std::vector<PreferenceOrder> voters;
  for (int i = 0; i < n; ++i) voters.push_back(pool[uniform(rng, 0, pool_size - 1)]);
  Election e(names, voters);

  // Per block shape for sortable lists: pi_i(l) = a_i * f(l).
  std::vector<std::int64_t> shape(m, 0);
  for (int l = 1; l < m; ++l) shape[l] = shape[l - 1] + uniform(rng, 1, 3);

  PriceList prices;
  for (int i = 0; i < n; ++i) {
    int pos = e.position(i, 0);
    std::vector<std::int64_t> prefix(pos - 1);
    switch (family) {
      case Family::unit:
        for (int l = 1; l < pos; ++l) prefix[l - 1] = l;
        break;
      case Family::convex: {
        std::int64_t d = uniform(rng, 0, 3), v = 0;
        for (int l = 1; l < pos; ++l) {
          v += d;
          prefix[l - 1] = v;
          d += uniform(rng, 0, 3);
        }
        break;
      }
      case Family::all_or_nothing: {
        std::int64_t c = uniform(rng, 1, 9);
        for (auto& x : prefix) x = c;
        break;
      }
      case Family::sortable: {
        std::int64_t a = uniform(rng, 1, 4);
        for (int l = 1; l < pos; ++l) prefix[l - 1] = a * shape[l];
        break;
      }
      case Family::arbitrary: {
        std::int64_t v = 0;
        for (int l = 1; l < pos; ++l) {
          v += uniform(rng, 0, 5);
          prefix[l - 1] = v;
        }
        break;
      }
    }
    prices.push_back(PriceFunction::from_prefix(m, prefix));
  }
  return Instance{std::move(e), std::move(prices), 0, std::nullopt};
}

}  // namespace sbt
