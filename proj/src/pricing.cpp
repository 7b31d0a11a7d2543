#include "shiftbribery/pricing.hpp"

#include <algorithm>
#include <map>

namespace sb {

PriceFunction::PriceFunction(std::vector<std::int64_t> table) : table_(std::move(table)) {}

PriceFunction PriceFunction::unit(int num_candidates, int p_position) {
  std::vector<std::int64_t> t(std::max(num_candidates - 1, 0));
  for (std::size_t l = 1; l <= t.size(); ++l) t[l - 1] = std::min<int>(l, p_position - 1);
  return PriceFunction(std::move(t));
}

PriceFunction PriceFunction::all_or_nothing(int num_candidates, int p_position, std::int64_t c) {
  return PriceFunction(
      std::vector<std::int64_t>(std::max(num_candidates - 1, 0), p_position > 1 ? c : 0));
}

PriceFunction PriceFunction::from_prefix(int num_candidates, std::span<const std::int64_t> prefix) {
  std::vector<std::int64_t> t(std::max(num_candidates - 1, 0));
  if (prefix.size() > t.size()) fail(ErrorKind::invalid, "price prefix longer than m-1");
  std::int64_t last = 0;
  for (std::size_t l = 0; l < t.size(); ++l) {
    if (l < prefix.size()) last = prefix[l];
    t[l] = last;
  }
  return PriceFunction(std::move(t));
}

std::optional<PriceViolation> validate(const PriceFunction& pf, int p_position) {
  const auto& t = pf.table();
  for (std::size_t l = 1; l <= t.size(); ++l) {
    std::int64_t v = t[l - 1];
    std::int64_t prev = l == 1 ? 0 : t[l - 2];
    int idx = static_cast<int>(l);
    if (v < 0) return PriceViolation{idx, "negative price"};
    if (v < prev) return PriceViolation{idx, "price decreases"};
    if (idx >= p_position && v != prev)
      return PriceViolation{idx, "price must stay constant once p reaches the top"};
  }
  return std::nullopt;
}

void validate_prices(const PriceList& prices, const Election& e, CandidateId p) {
  if (static_cast<int>(prices.size()) != e.num_voters())
    fail(ErrorKind::invalid, "price list length does not match the number of voters");
  for (int i = 0; i < e.num_voters(); ++i) {
    if (prices[i].max_shift() != e.num_candidates() - 1)
      fail(ErrorKind::invalid, "voter " + std::to_string(i + 1) + ": price table needs m-1 entries");
    if (auto v = validate(prices[i], e.position(i, p)))
      fail(ErrorKind::invalid, "voter " + std::to_string(i + 1) + ": " + v->reason + " at shift " +
                                   std::to_string(v->index));
  }
}

std::int64_t cost(const PriceList& prices, std::span<const int> shifts) {
  if (prices.size() != shifts.size())
    fail(ErrorKind::invalid, "shift action length does not match the price list");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < shifts.size(); ++i) total = checked_add(total, prices[i](shifts[i]));
  return total;
}

namespace {

bool is_convex(const PriceFunction& pf, int p_position) {
  // Increments only matter while p can still move.
  int last = std::min(pf.max_shift(), p_position - 1);
  for (int l = 0; l + 2 <= last; ++l)
    if (pf(l + 1) - pf(l) > pf(l + 2) - pf(l + 1)) return false;
  return true;
}

bool is_all_or_nothing(const PriceFunction& pf) {
  const auto& t = pf.table();
  return std::all_of(t.begin(), t.end(), [&](std::int64_t v) { return v == t.front(); });
}

bool consistent_pair(const PriceFunction& a, const PriceFunction& b, int m) {
  for (int l = 1; l <= m - 2; ++l) {
    if (a(l) > b(l) && !(a(l + 1) > b(l + 1))) return false;
    if (b(l) > a(l) && !(b(l + 1) > a(l + 1))) return false;
  }
  return true;
}

}  // namespace

PriceFamilies classify(const PriceList& prices, const Election& e, CandidateId p) {
  const int m = e.num_candidates();
  auto pos = p_positions(e, p);
  bool unit = true, convex = true, aon = true, sortable = true;
  std::map<PreferenceOrder, std::vector<int>> blocks;
  for (int i = 0; i < e.num_voters(); ++i) {
    unit = unit && prices[i] == PriceFunction::unit(m, pos[i]);
    convex = convex && is_convex(prices[i], pos[i]);
    aon = aon && is_all_or_nothing(prices[i]);
    blocks[e.voter(i)].push_back(i);
  }
  for (const auto& [order, members] : blocks) {
    for (std::size_t a = 0; a < members.size() && sortable; ++a)
      for (std::size_t b = a + 1; b < members.size() && sortable; ++b)
        sortable = consistent_pair(prices[members[a]], prices[members[b]], m);
  }
  PriceFamilies f;
  if (unit) f.bits |= kUnit;
  if (convex) f.bits |= kConvex;
  if (aon) f.bits |= kAllOrNothing;
  if (sortable) f.bits |= kSortable;
  return f;
}

std::string family_names(PriceFamilies f) {
  std::string out;
  auto add = [&](PriceFamily bit, const char* name) {
    if (!f.has(bit)) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(kUnit, "unit");
  add(kConvex, "convex");
  add(kAllOrNothing, "all_or_nothing");
  add(kSortable, "sortable");
  return out;
}

ShiftAction budget_to_shifts(const PriceList& prices, std::span<const std::int64_t> budgets,
                             std::span<const int> caps) {
  if (prices.size() != budgets.size() || prices.size() != caps.size())
    fail(ErrorKind::invalid, "budget vector length does not match the price list");
  ShiftAction out(prices.size(), 0);
  for (std::size_t i = 0; i < prices.size(); ++i) {
    int t = 0;
    while (t < caps[i] && prices[i](t + 1) <= budgets[i]) ++t;
    out[i] = t;
  }
  return out;
}

std::vector<int> p_positions(const Election& e, CandidateId p) {
  std::vector<int> out(e.num_voters());
  for (int i = 0; i < e.num_voters(); ++i) out[i] = e.position(i, p);
  return out;
}

std::vector<int> shift_caps(const Election& e, CandidateId p) {
  auto out = p_positions(e, p);
  for (int& x : out) --x;
  return out;
}

PriceList unit_prices(const Election& e, CandidateId p) {
  PriceList out;
  for (int i = 0; i < e.num_voters(); ++i)
    out.push_back(PriceFunction::unit(e.num_candidates(), e.position(i, p)));
  return out;
}

}  // namespace sb
