#include "shiftbribery/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "shiftbribery/evaluator.hpp"
#include "shiftbribery/gadgets.hpp"

namespace sb {
namespace {

// t^3 2^t, saturating well above any realistic voter count.
std::int64_t retained_cap(int t) {
  if (t >= 40) return INT64_MAX / 4;
  return static_cast<std::int64_t>(t) * t * t * (std::int64_t{1} << t);
}

class KernelBuilder {
 public:
  KernelBuilder(const Instance& inst, int t)
      : inst_(inst), t_(t), unreachable_(checked_add(*inst.budget, 1)) {}

  int add_candidate(std::string name, CandidateTag tag) {
    while (!used_.insert(name).second) name += '\'';
    names_.push_back(std::move(name));
    tags_.push_back(tag);
    return static_cast<int>(names_.size()) - 1;
  }
  int num_candidates() const { return static_cast<int>(names_.size()); }

  // Kernel candidates ahead of p for an input voter: every critical candidate
  // ahead of p plus a fresh filler for each other candidate at most t positions
  // ahead, in the voter's order.
  void retain(int voter, const std::vector<int>& critical_id) {
    const Election& e = inst_.election;
    const int pos = e.position(voter, inst_.preferred);
    std::vector<int> ahead;
    int fillers = 0;
    for (int k = 0; k < pos - 1; ++k) {
      CandidateId c = e.voter(voter)[k];
      if (critical_id[c] >= 0) {
        ahead.push_back(critical_id[c]);
      } else if (pos - 1 - k <= t_) {
        ahead.push_back(add_candidate("f" + std::to_string(voter + 1) + "." + std::to_string(++fillers),
                                      {CandidateOrigin::filler, voter}));
      }
    }
    retained_.push_back({voter, std::move(ahead)});
  }

  void add_out_of_reach(PreferenceOrder order, VoterTag tag) {
    gadget_orders_.push_back(std::move(order));
    gadget_tags_.push_back(tag);
  }

  const std::vector<std::pair<int, std::vector<int>>>& retained() const { return retained_; }

  KernelOutput finish(int critical) {
    const int m = num_candidates();
    const CandidateId p = 0;
    std::vector<PreferenceOrder> orders;
    PriceList prices;
    std::vector<VoterTag> vtags;
    auto out_of_reach = [&](const PreferenceOrder& o) {
      int pos = static_cast<int>(std::find(o.begin(), o.end(), p) - o.begin()) + 1;
      return PriceFunction::all_or_nothing(m, pos, unreachable_);
    };
    for (std::size_t k = 0; k < gadget_orders_.size(); ++k) {
      orders.push_back(gadget_orders_[k]);
      prices.push_back(out_of_reach(gadget_orders_[k]));
      vtags.push_back(gadget_tags_[k]);
    }
    for (const auto& [voter, ahead] : retained_) {
      PreferenceOrder o = ahead;
      o.push_back(p);
      std::vector<char> placed(m, 0);
      for (int c : o) placed[c] = 1;
      for (int c = 0; c < m; ++c)
        if (!placed[c]) o.push_back(c);
      std::vector<std::int64_t> prefix;
      for (int l = 1; l <= static_cast<int>(ahead.size()); ++l) prefix.push_back(inst_.prices[voter](l));
      orders.push_back(o);
      prices.push_back(PriceFunction::from_prefix(m, prefix));
      vtags.push_back({VoterOrigin::retained, voter});
      PreferenceOrder r(o.rbegin(), o.rend());
      orders.push_back(r);
      prices.push_back(out_of_reach(r));
      vtags.push_back({VoterOrigin::reverse, voter});
    }
    KernelOutput out{Instance{Election(names_, orders), std::move(prices), p, inst_.budget},
                     tags_, std::move(vtags)};
    out.critical = critical;
    out.retained = static_cast<int>(retained_.size());
    out.instance.validate();
    return out;
  }

 private:
  const Instance& inst_;
  int t_;
  std::int64_t unreachable_;
  std::vector<std::string> names_;
  std::vector<CandidateTag> tags_;
  std::set<std::string> used_;
  std::vector<std::pair<int, std::vector<int>>> retained_;
  std::vector<PreferenceOrder> gadget_orders_;
  std::vector<VoterTag> gadget_tags_;
};

KernelOutput trivial(const Instance& inst, bool yes) {
  const std::string p = inst.election.name(inst.preferred);
  if (yes) {
    KernelOutput out{Instance{Election({p}, {{0}}), {PriceFunction()}, 0, inst.budget},
                     {{CandidateOrigin::preferred, inst.preferred}},
                     {{VoterOrigin::pair}}};
    out.trivial = true;
    return out;
  }
  std::string other = p == "c" ? "d" : "c";
  KernelOutput out{Instance{Election({p, other}, {{1, 0}}),
                            {PriceFunction::all_or_nothing(2, 2, checked_add(*inst.budget, 1))}, 0,
                            inst.budget},
                   {{CandidateOrigin::preferred, inst.preferred}, {CandidateOrigin::guard}},
                   {{VoterOrigin::pair}}};
  out.trivial = true;
  return out;
}

// Input voters the kernel keeps. Small electorates are kept whole. Otherwise,
// per amount j in 1..t and set S of critical candidates passed by shifting p
// j positions, the t-j+1 cheapest voters: an action with at most t shifts that
// uses a dropped voter leaves one of them free for the same effect at no more
// cost. Shifts passing no critical candidate only matter for Borda.
std::vector<int> voters_to_keep(const Instance& inst, const VotingRule& rule, int t,
                                const std::vector<char>& critical) {
  const int n = inst.num_voters();
  std::vector<int> keep;
  if (n <= retained_cap(t)) {
    for (int i = 0; i < n; ++i) keep.push_back(i);
    return keep;
  }
  ShiftEvaluator ev(inst.election, inst.preferred, rule);
  std::map<std::pair<std::vector<CandidateId>, int>, std::vector<std::pair<std::int64_t, int>>> buckets;
  for (int i = 0; i < n; ++i) {
    auto ahead = ev.ahead(i);
    std::vector<CandidateId> passed;
    for (int j = 1; j <= std::min<int>(t, ahead.size()); ++j) {
      if (critical[ahead[j - 1]]) {
        passed.insert(std::upper_bound(passed.begin(), passed.end(), ahead[j - 1]), ahead[j - 1]);
      }
      if (passed.empty() && rule.kind != RuleKind::borda) continue;
      buckets[{passed, j}].push_back({inst.prices[i](j), i});
    }
  }
  std::vector<char> chosen(n, 0);
  for (auto& [key, list] : buckets) {
    std::sort(list.begin(), list.end());
    const int room = std::min<int>(t - key.second + 1, list.size());
    for (int k = 0; k < room; ++k) chosen[list[k].second] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (chosen[i]) keep.push_back(i);
  return keep;
}

KernelOutput borda_kernel(const Instance& inst, int t) {
  const Election& e = inst.election;
  const CandidateId p = inst.preferred;
  const int m = e.num_candidates();
  auto score = scores(e, VotingRule::borda());
  auto above = [&](int tp) {
    int count = 0;
    for (int c = 0; c < m; ++c)
      if (c != p && score[c] > score[p] + Rational(tp)) ++count;
    return count;
  };
  if (above(0) == 0) return trivial(inst, true);
  // Smallest gain t0 with at most t0 candidates left above p; no action with
  // fewer shifts can pass every candidate it has to.
  int t0 = -1;
  for (int tp = 0; tp <= t && t0 < 0; ++tp)
    if (above(tp) <= tp) t0 = tp;
  if (t0 < 0) return trivial(inst, false);

  std::vector<char> critical(m, 0);
  std::vector<std::int64_t> lead(m, 0);
  for (int c = 0; c < m; ++c) {
    if (c == p || score[c] <= score[p] + Rational(t0)) continue;
    critical[c] = 1;
    lead[c] = (score[c] - score[p]).numerator();
    // each shift passes one candidate once and lifts p by one
    if (lead[c] > 2 * static_cast<std::int64_t>(t)) return trivial(inst, false);
  }

  KernelBuilder kb(inst, t);
  kb.add_candidate(e.name(p), {CandidateOrigin::preferred, p});
  std::vector<int> critical_id(m, -1), dummy_id(m, -1);
  int num_critical = 0;
  for (int c = 0; c < m; ++c)
    if (critical[c]) critical_id[c] = kb.add_candidate(e.name(c), {CandidateOrigin::critical, c}), ++num_critical;
  for (int c = 0; c < m; ++c)
    if (critical[c]) dummy_id[c] = kb.add_candidate("d." + e.name(c), {CandidateOrigin::dummy, c});
  // The guard sits t0 points above p and can never be passed: it rules out
  // actions with fewer than t0 shifts, which fail in the input because of
  // candidates that are not kept.
  int guard = -1, guard_low = -1;
  if (t0 > 0) {
    guard = kb.add_candidate("z.guard", {CandidateOrigin::guard});
    guard_low = kb.add_candidate("g.guard", {CandidateOrigin::guard});
  }
  for (int i : voters_to_keep(inst, VotingRule::borda(), t, critical)) kb.retain(i, critical_id);
  if (t0 > 0 && kb.num_candidates() < 4) kb.add_candidate("h.guard", {CandidateOrigin::guard});

  const int mn = kb.num_candidates();
  auto others = [&](std::initializer_list<int> skip) {
    std::vector<CandidateId> out;
    for (int c = 0; c < mn; ++c)
      if (std::find(skip.begin(), skip.end(), c) == skip.end()) out.push_back(c);
    return out;
  };
  for (int c = 0; c < m; ++c) {
    if (!critical[c]) continue;
    int z = guard >= 0 ? guard : -1;
    if (z < 0) fail(ErrorKind::invalid, "kernel: critical candidate without a guard");
    auto rest = others({0, critical_id[c], dummy_id[c], z});
    auto pair = point_pair(0, {}, critical_id[c], dummy_id[c], rest, z);
    for (std::int64_t k = 0; k < lead[c]; ++k)
      for (const auto& o : pair) kb.add_out_of_reach(o, {VoterOrigin::pair, c});
  }
  if (guard >= 0) {
    int last = -1;
    for (int c = 1; c < mn && last < 0; ++c)
      if (c != guard && c != guard_low) last = c;
    auto rest = others({0, guard, guard_low, last});
    auto pair = point_pair(0, {}, guard, guard_low, rest, last);
    for (int k = 0; k < t0; ++k)
      for (const auto& o : pair) kb.add_out_of_reach(o, {VoterOrigin::pair});
  }
  return kb.finish(num_critical);
}

KernelOutput maximin_kernel(const Instance& inst, int t) {
  const Election& e = inst.election;
  const CandidateId p = inst.preferred;
  const int m = e.num_candidates();
  const std::int64_t n = e.num_voters();
  PairwiseMatrix nm(e);
  if (is_winner(e, VotingRule::maximin(), p)) return trivial(inst, true);

  std::int64_t s = INT64_MAX;
  for (int c = 0; c < m; ++c)
    if (c != p) s = std::min<std::int64_t>(s, nm(p, c));
  // g: the most p can gain with t shifts, ignoring where the voters are.
  int g = 0;
  for (int tp = 1; tp <= t; ++tp) {
    std::int64_t deficit = 0;
    for (int c = 0; c < m; ++c)
      if (c != p) deficit += std::max<std::int64_t>(0, s + tp - nm(p, c));
    if (deficit <= t) g = tp;
  }
  std::vector<std::int64_t> vp(m), vc(m), best_other(m), own(m);
  for (int c = 0; c < m; ++c) {
    if (c == p) continue;
    vp[c] = nm(p, c) - s;
    vc[c] = nm(c, p) - s;
    std::int64_t b = INT64_MAX;
    for (int d = 0; d < m; ++d)
      if (d != p && d != c) b = std::min<std::int64_t>(b, nm(c, d));
    best_other[c] = b;
    own[c] = std::min<std::int64_t>(b, nm(c, p));
  }
  // Smallest gain h with at most t competitors above s+h; each of those must
  // be passed at least once, so p ends at s+h or higher and competitors at or
  // below s+h are harmless.
  int h = -1;
  for (int tp = 0; tp <= g && h < 0; ++tp) {
    int above = 0;
    for (int c = 0; c < m; ++c)
      if (c != p && own[c] > s + tp) ++above;
    if (above <= t) h = tp;
  }
  if (h < 0) return trivial(inst, false);
  std::vector<char> relevant(m, 0);
  for (int c = 0; c < m; ++c)
    if (c != p && (vp[c] < g || own[c] > s + h)) relevant[c] = 1;
  auto kept = voters_to_keep(inst, VotingRule::maximin(), t, relevant);

  std::vector<char> passable(m, 0);
  for (int i : kept) {
    const int pos = e.position(i, p);
    for (int k = std::max(0, pos - 1 - t); k < pos - 1; ++k) passable[e.voter(i)[k]] = 1;
  }
  // Unpassable candidates only matter through two constants: the lowest
  // p-side count (caps p's score) and the highest competitor score.
  std::int64_t y_val = g, top = h;
  for (int c = 0; c < m; ++c) {
    if (c == p || passable[c]) continue;
    y_val = std::min(y_val, vp[c]);
    if (own[c] > s) top = std::max(top, own[c] - s);
  }
  if (top > g) return trivial(inst, false);

  KernelBuilder kb(inst, t);
  kb.add_candidate(e.name(p), {CandidateOrigin::preferred, p});
  std::vector<int> critical_id(m, -1), dummy_id(m, -1);
  std::vector<int> critical_list;
  for (int c = 0; c < m; ++c)
    if (relevant[c] && passable[c]) {
      critical_id[c] = kb.add_candidate(e.name(c), {CandidateOrigin::critical, c});
      critical_list.push_back(c);
    }
  for (int c : critical_list) dummy_id[c] = kb.add_candidate("d." + e.name(c), {CandidateOrigin::dummy, c});
  const int cap_guard = kb.add_candidate("y.guard", {CandidateOrigin::guard});
  const int cap_low = kb.add_candidate("y.low", {CandidateOrigin::guard});
  int top_guard = -1, top_low = -1;
  if (top > 0) {
    top_guard = kb.add_candidate("z.guard", {CandidateOrigin::guard});
    top_low = kb.add_candidate("z.low", {CandidateOrigin::guard});
  }
  for (int i : kept) kb.retain(i, critical_id);
  const int mn = kb.num_candidates();

  // Relative counts r(a,b) = N'(a,b) - s' with r(a,b) + r(b,a) = L. When
  // L0 = n - 2s is small the counts between p and the critical candidates are
  // copied; otherwise L is free and only comparisons against p's reachable
  // scores s..s+g (and s+g+t for the competitor side) are preserved.
  const std::int64_t l0 = n - 2 * s;
  const bool exact = l0 <= 2 * g + t + 1;
  const std::int64_t L = exact ? l0 : 2 * g + t + 2;
  const std::int64_t big = std::max<std::int64_t>(L, g);
  std::vector<std::vector<std::int64_t>> r(mn, std::vector<std::int64_t>(mn, 0));
  std::vector<char> fixed(mn * mn, 0);
  auto set = [&](int a, int b, std::int64_t v) {
    r[a][b] = v;
    r[b][a] = L - v;
    fixed[a * mn + b] = fixed[b * mn + a] = 1;
  };
  // Lowest count each candidate must keep against the others. Candidates
  // without one already score at most p's floor through their pair with p or
  // their partner.
  std::vector<std::int64_t> theta(mn, -(L + 2 * g + 4));
  for (int c : critical_list) {
    const int k = critical_id[c];
    // r(p,c); r(c,p) = L - r(p,c) follows
    std::int64_t u;
    if (exact) u = vp[c] >= g && vc[c] <= 0 ? std::max<std::int64_t>(g, l0) : vp[c];
    else if (vp[c] < g) u = vp[c];
    else if (vc[c] <= 0) u = L;
    else if (vc[c] <= g + t) u = L - vc[c];
    else u = g;
    set(0, k, u);
    // c's best count against the others; below p's floor it cannot matter and
    // -1 stands for any such value
    const std::int64_t real = best_other[c] == INT64_MAX ? g + 1 : best_other[c] - s;
    if (real < 0) {
      set(k, dummy_id[c], -1);
    } else {
      theta[k] = std::min<std::int64_t>(real, g + 1);
      set(k, dummy_id[c], theta[k]);
    }
  }
  for (int x = 1; x < mn; ++x)
    if (!fixed[x]) set(0, x, big);
  set(0, cap_guard, y_val);
  set(cap_guard, cap_low, 0);
  if (top_guard >= 0) {
    set(0, top_guard, L - top);
    set(top_guard, top_low, top);
    theta[top_guard] = top;
  }
  for (int a = 1; a < mn; ++a)
    for (int b = a + 1; b < mn; ++b) {
      if (fixed[a * mn + b]) continue;
      if (theta[a] + theta[b] > L) fail(ErrorKind::invalid, "kernel: inconsistent pairwise targets");
      set(a, b, std::clamp<std::int64_t>(L / 2, theta[a], L - theta[b]));
    }

  std::vector<std::vector<int>> margins(mn, std::vector<int>(mn, 0));
  for (int a = 0; a < mn; ++a)
    for (int b = 0; b < mn; ++b)
      if (a != b) margins[a][b] = static_cast<int>(r[a][b] - r[b][a]);
  for (auto& o : mcgarvey(mn, margins)) kb.add_out_of_reach(std::move(o), {VoterOrigin::pair});
  return kb.finish(static_cast<int>(critical_list.size()));
}

}  // namespace

std::int64_t kernel_retained_bound(int t, std::int64_t n) { return std::min(n, retained_cap(t)); }

std::int64_t kernel_candidate_bound(RuleKind rule, int t, std::int64_t n) {
  const std::int64_t v = kernel_retained_bound(t, n);
  if (rule == RuleKind::borda) return 2 * t + t * v + 4;
  return 4 * t + t * v + 5;
}

std::int64_t kernel_voter_bound(RuleKind rule, int t, std::int64_t n) {
  const std::int64_t v = kernel_retained_bound(t, n);
  if (rule == RuleKind::borda) return 4 * t * t + 2 * t + 2 * v + 1;
  const std::int64_t k = kernel_candidate_bound(rule, t, n);
  return 2 * v + 1 + k * (k - 1) * (5 * t + 3) / 2;
}

KernelOutput kernelize(const Instance& inst, const VotingRule& rule, int t, const KernelOptions& opts) {
  if (rule.kind != RuleKind::borda && rule.kind != RuleKind::maximin)
    fail(ErrorKind::unsupported, "kernelize supports borda and maximin only");
  if (!inst.budget) fail(ErrorKind::invalid, "kernelize needs a budget");
  if (t < 0) fail(ErrorKind::invalid, "shift bound must be nonnegative");
  inst.validate();
  if (opts.keep_small && inst.num_candidates() <= kernel_candidate_bound(rule.kind, t, inst.num_voters()) &&
      inst.num_voters() <= kernel_voter_bound(rule.kind, t, inst.num_voters())) {
    KernelOutput out{inst, {}, {}};
    out.unchanged = true;
    for (int c = 0; c < inst.num_candidates(); ++c) out.candidate_map.push_back({CandidateOrigin::input, c});
    for (int i = 0; i < inst.num_voters(); ++i) out.voter_map.push_back({VoterOrigin::input, i});
    out.retained = inst.num_voters();
    return out;
  }
  if (t == 0) return trivial(inst, is_winner(inst.election, rule, inst.preferred));
  return rule.kind == RuleKind::borda ? borda_kernel(inst, t) : maximin_kernel(inst, t);
}

}  // namespace sb
