#include "shiftbribery/reductions.hpp"

#include <algorithm>
#include <set>

#include "shiftbribery/gadgets.hpp"

namespace sb {
namespace {

using Ids = std::vector<CandidateId>;

Ids cat(std::initializer_list<Ids> parts) {
  Ids out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

Ids rev(Ids ids) {
  std::reverse(ids.begin(), ids.end());
  return ids;
}

Ids first(const Ids& ids, std::size_t count) {
  return Ids(ids.begin(), ids.begin() + static_cast<long>(std::min(count, ids.size())));
}

Ids drop(const Ids& ids, std::size_t count) {
  return Ids(ids.begin() + static_cast<long>(std::min(count, ids.size())), ids.end());
}

class Builder {
 public:
  CandidateId add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<CandidateId>(names_.size()) - 1;
  }

  Ids add_group(const std::string& prefix, std::int64_t count) {
    if (static_cast<std::int64_t>(names_.size()) + count > kMaxCandidates)
      fail(ErrorKind::capacity, "reduction needs more than " + std::to_string(kMaxCandidates) + " candidates");
    Ids ids;
    for (std::int64_t i = 1; i <= count; ++i) ids.push_back(add(prefix + std::to_string(i)));
    return ids;
  }

  int size() const { return static_cast<int>(names_.size()); }

  // Candidates outside the given groups, ascending.
  Ids except(std::initializer_list<Ids> groups) const {
    std::vector<char> out(names_.size(), 0);
    for (const auto& g : groups)
      for (auto c : g) out[c] = 1;
    Ids rest;
    for (int c = 0; c < size(); ++c)
      if (!out[c]) rest.push_back(c);
    return rest;
  }

  // flat == nullopt: unit prices, otherwise all-or-nothing at that price.
  void vote(PreferenceOrder order, std::optional<std::int64_t> flat) {
    orders_.push_back(std::move(order));
    flats_.push_back(flat);
  }

  Instance finish(CandidateId p, std::int64_t budget) {
    const int m = size();
    Election e(std::move(names_), std::move(orders_));
    PriceList prices;
    for (int i = 0; i < e.num_voters(); ++i) {
      const int pos = e.position(i, p);
      prices.push_back(flats_[i] ? PriceFunction::all_or_nothing(m, pos, *flats_[i]) : PriceFunction::unit(m, pos));
    }
    Instance inst{std::move(e), std::move(prices), p, budget};
    inst.validate();
    return inst;
  }

 private:
  std::vector<std::string> names_;
  std::vector<PreferenceOrder> orders_;
  std::vector<std::optional<std::int64_t>> flats_;
};

std::vector<Ids> normalized_sets(const SetCoverInstance& sc) {
  std::vector<Ids> sets;
  for (const auto& s : sc.family) {
    std::set<int> uniq(s.begin(), s.end());
    sets.emplace_back(uniq.begin(), uniq.end());
  }
  return sets;
}

std::vector<std::pair<int, int>> normalized_edges(const GraphInstance& g) {
  std::set<std::pair<int, int>> uniq;
  for (auto [x, y] : g.edges) uniq.insert({std::min(x, y), std::max(x, y)});
  return {uniq.begin(), uniq.end()};
}

// Shared candidate layout of the Borda and Copeland set cover constructions.
struct CoverLayout {
  CandidateId p, d, g;
  Ids u, f;
};

CoverLayout cover_layout(Builder& b, int n, std::int64_t fillers) {
  CoverLayout l;
  l.p = b.add("p");
  l.d = b.add("d");
  l.g = b.add("g");
  l.u = b.add_group("u", n);
  l.f = b.add_group("f", fillers);
  return l;
}

// d > S_i > F_i > p > rest and its reverse, for every set.
void set_voters(Builder& b, const CoverLayout& l, const std::vector<Ids>& sets, std::optional<std::int64_t> cheap,
                std::optional<std::int64_t> wall) {
  const auto n = l.u.size();
  for (const auto& s : sets) {
    Ids si;
    for (int e : s) si.push_back(l.u[e]);
    Ids fi = first(l.f, n - si.size());
    Ids order = cat({{l.d}, si, fi, {l.p}, b.except({{l.d, l.p}, si, fi})});
    b.vote(order, cheap);
    b.vote(rev(order), wall);
  }
}

Reduction setcover_borda(const SetCoverInstance& sc, PriceVariant prices) {
  const int n = sc.universe, k = sc.k;
  const std::int64_t bs = checked_mul(k, n + 1);
  const bool unit = prices == PriceVariant::unit;
  const std::int64_t budget = unit ? bs : k;
  const std::optional<std::int64_t> cheap = unit ? std::nullopt : std::optional<std::int64_t>(1);
  const std::optional<std::int64_t> wall = unit ? std::nullopt : std::optional<std::int64_t>(budget + 1);

  Builder b;
  auto l = cover_layout(b, n, 2 * bs + 2);
  set_voters(b, l, normalized_sets(sc), cheap, wall);
  for (auto u : l.u) {
    Ids rest = b.except({{u, l.g, l.p, l.d}});
    for (std::int64_t r = 0; r <= bs; ++r)
      for (auto& o : point_pair(l.p, {}, u, l.g, rest, l.d)) b.vote(o, wall);
  }
  Ids fp = first(l.f, bs + 1);
  const CandidateId z = l.f[bs + 1];
  Ids rest = b.except({{l.p, l.g, l.d, z}, fp});
  for (std::int64_t r = 0; r < bs + k; ++r)
    for (auto& o : point_pair(l.p, fp, l.d, l.g, rest, z)) b.vote(o, wall);
  return {b.finish(l.p, budget), VotingRule::borda(), k, ""};
}

Reduction setcover_maximin(const SetCoverInstance& sc, PriceVariant prices) {
  const int n = sc.universe, k = sc.k;
  const std::int64_t bs = checked_mul(k, n + 1);
  const bool unit = prices == PriceVariant::unit;
  const std::int64_t budget = unit ? bs : k;
  const std::optional<std::int64_t> cheap = unit ? std::nullopt : std::optional<std::int64_t>(1);
  const std::optional<std::int64_t> wall = unit ? std::nullopt : std::optional<std::int64_t>(budget + 1);

  Builder b;
  const CandidateId p = b.add("p"), d = b.add("d"), g = b.add("g");
  const Ids u = b.add_group("u", n);
  const Ids f = b.add_group("f", 2 * bs);
  const Ids x1 = first(f, bs), x2 = drop(f, bs);

  for (const auto& s : normalized_sets(sc)) {
    Ids si, rest_u;
    for (int e : s) si.push_back(u[e]);
    for (auto c : u)
      if (!std::binary_search(si.begin(), si.end(), c)) rest_u.push_back(c);
    Ids fi = first(f, n - si.size());
    Ids order = cat({{g}, si, fi, {p}, drop(f, fi.size()), rest_u, {d}});
    b.vote(order, cheap);
    b.vote(rev(order), wall);
  }
  for (int r = 0; r < k; ++r) b.vote(cat({{p, d, g}, u, x1, x2}), wall);
  for (int r = 0; r < k - 1; ++r) b.vote(cat({{g}, x1, {p}, x2, {d}, u}), wall);
  b.vote(cat({{g}, u, x1, {p}, x2, {d}}), wall);
  for (int r = 0; r < 2 * k; ++r) b.vote(cat({{d, g}, u, x2, {p}, x1}), wall);
  return {b.finish(p, budget), VotingRule::maximin(), k, ""};
}

Reduction setcover_copeland(const SetCoverInstance& sc, PriceVariant prices) {
  const int n = sc.universe, k = sc.k;
  const std::int64_t bs = checked_mul(k, n + 1);
  const bool unit = prices == PriceVariant::unit;
  const std::int64_t budget = unit ? bs : k;
  const std::optional<std::int64_t> cheap = unit ? std::nullopt : std::optional<std::int64_t>(1);
  const std::optional<std::int64_t> wall = unit ? std::nullopt : std::optional<std::int64_t>(budget + 1);

  Builder b;
  auto l = cover_layout(b, n, 2 * bs + 2);
  const int m = b.size();
  set_voters(b, l, normalized_sets(sc), cheap, wall);

  // Head-to-head margins over all voters. With the set voters cancelling
  // out, d and every u_i tie at r+1 wins and p has r-n.
  const Ids fg = cat({{l.g}, l.f});
  const int r = static_cast<int>(fg.size());
  std::vector<std::vector<int>> margin(m, std::vector<int>(m, 0));
  auto set = [&](CandidateId x, CandidateId y, int v) {
    margin[x][y] = v;
    margin[y][x] = -v;
  };
  set(l.d, l.p, 2 * k - 1);
  for (int j = 0; j < r; ++j) {
    const bool front = j < r - n;
    set(l.d, fg[j], front ? 1 : -1);
    set(l.p, fg[j], front ? 1 : -(2 * k + 1));
    for (int s = 1; s <= r / 2; ++s) set(fg[j], fg[(j + s) % r], 1);
  }
  for (int i = 0; i < n; ++i) {
    set(l.d, l.u[i], 1);
    set(l.p, l.u[i], -1);
    for (int j = 0; j < i; ++j) set(l.u[i], l.u[j], 1);
    for (int j = 0; j < r; ++j) set(l.u[i], fg[j], j < i ? -1 : 1);
  }

  const Ids single = cat({{l.p, l.d}, l.u, fg});
  b.vote(single, wall);
  for (int a = 0; a < m; ++a)
    for (int c = a + 1; c < m; ++c) {
      margin[single[a]][single[c]] -= 1;
      margin[single[c]][single[a]] += 1;
    }
  for (auto& o : mcgarvey(m, margin, Separation{l.p, l.d, static_cast<int>(bs + 1)})) b.vote(std::move(o), wall);
  return {b.finish(l.p, budget), VotingRule::copeland(), k, ""};
}

std::string padding_note(int added) {
  if (added == 0) return "";
  return "padded with " + std::to_string(added) + " isolated vertices";
}

Reduction clique_all_or_nothing(const GraphInstance& g) {
  const int k = g.k;
  int n = g.vertices;
  while (n % 2 == 0 || n < 7) ++n;
  const std::int64_t budget = static_cast<std::int64_t>(k) * (k - 1) / 2;
  const std::int64_t wall = budget + 1;

  Builder b;
  const CandidateId p = b.add("p"), d = b.add("d");
  const Ids v = b.add_group("v", n);
  const Ids dummies = b.add_group("x", 2 * n);

  for (auto [x, y] : normalized_edges(g)) {
    Ids order = cat({{v[x], v[y], p}, b.except({{v[x], v[y], p}})});
    b.vote(order, 1);
    b.vote(rev(order), wall);
  }
  const Ids vd = cat({v, dummies});
  const Ids d1 = first(dummies, k + 1), d_rest = drop(dummies, k + 1);
  b.vote(cat({vd, {p, d}}), wall);
  for (int r = 0; r < k - 2; ++r) {
    b.vote(cat({v, {p, d}, dummies}), wall);
    b.vote(cat({rev(dummies), {d}, rev(v), {p}}), wall);
  }
  b.vote(cat({{d}, dummies, {p}, v}), wall);
  b.vote(cat({rev(v), {p, d}, rev(dummies)}), wall);
  b.vote(cat({{p}, d_rest, d1, v, {d}}), wall);
  b.vote(cat({{d}, rev(v), rev(d1), {p}, rev(d_rest)}), wall);
  for (int i = 0; i < static_cast<int>(vd.size()); ++i) {
    auto hs = half_seq(vd, i);
    b.vote(cat({hs[0], {p, d}}), wall);
    b.vote(cat({{d, p}, hs[1]}), wall);
  }
  return {b.finish(p, budget), VotingRule::copeland(), std::nullopt, padding_note(n - g.vertices)};
}

Reduction clique_unit(const GraphInstance& g) {
  const int k = g.k;
  const auto edges = normalized_edges(g);
  const int m = static_cast<int>(edges.size());
  const std::int64_t pairs = static_cast<std::int64_t>(k) * (k - 1) / 2;
  const std::int64_t budget = 3 * pairs;
  const std::int64_t d2_size = pairs + k + 1;
  int n = g.vertices;
  if ((n + m) % 2 == 0) ++n;
  while (4 * static_cast<std::int64_t>(m + n) < d2_size) n += 2;

  Builder b;
  const CandidateId p = b.add("p"), d = b.add("d");
  const Ids v = b.add_group("v", n);
  const Ids d1 = b.add_group("x", 4 * static_cast<std::int64_t>(m + n) - d2_size);
  const Ids d2 = b.add_group("y", d2_size);
  const Ids f1 = b.add_group("f", budget);
  const Ids f2 = b.add_group("h", budget);
  Ids q;
  for (auto [x, y] : edges) q.push_back(b.add("q" + std::to_string(x + 1) + "-" + std::to_string(y + 1)));
  const Ids f = cat({f1, f2});
  const auto unit = std::nullopt;

  for (int e = 0; e < m; ++e) {
    const CandidateId x = v[edges[e].first], y = v[edges[e].second];
    Ids order = cat({{q[e], x, y, p}, f, b.except({{x, y, p, q[e]}, f})});
    b.vote(order, unit);
    b.vote(rev(order), unit);
  }
  b.vote(cat({q, v, {d}, d2, f, {p}, d1}), unit);
  const Ids x3 = b.except({{p, d}, f});
  b.vote(cat({{p, d}, f, x3}), unit);
  b.vote(cat({rev(x3), rev(f), {p, d}}), unit);
  const Ids x4 = b.except({{p}, f, v});
  for (int r = 0; r < k - 2; ++r) {
    b.vote(cat({v, f, {p}, x4}), unit);
    b.vote(cat({rev(x4), rev(v), rev(f), {p}}), unit);
  }
  const Ids x5 = b.except({{p}, f, d1});
  for (int r = 0; r < k - 1; ++r) {
    b.vote(cat({{p}, d1, f1, f2, x5}), unit);
    b.vote(cat({rev(x5), rev(f2), {p}, rev(d1), rev(f1)}), unit);
    b.vote(cat({{p}, d1, f2, f1, x5}), unit);
    b.vote(cat({rev(x5), rev(f1), {p}, rev(d1), rev(f2)}), unit);
  }
  const Ids a = cat({v, d1, d2, q});
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    auto hs = half_seq(a, i);
    b.vote(cat({hs[0], f, {p, d}}), unit);
    b.vote(cat({{d, p}, rev(f), hs[1]}), unit);
  }
  return {b.finish(p, budget), VotingRule::copeland(), std::nullopt, padding_note(n - g.vertices)};
}

}  // namespace

void SetCoverInstance::validate() const {
  if (universe < 1) fail(ErrorKind::invalid, "set cover: universe must be non-empty");
  if (k < 1) fail(ErrorKind::invalid, "set cover: k must be positive");
  for (const auto& s : family)
    for (int e : s)
      if (e < 0 || e >= universe) fail(ErrorKind::invalid, "set cover: element " + std::to_string(e) + " out of range");
}

void GraphInstance::validate() const {
  if (vertices < 0) fail(ErrorKind::invalid, "graph: negative vertex count");
  if (k < 0) fail(ErrorKind::invalid, "graph: negative k");
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= vertices || y >= vertices) fail(ErrorKind::invalid, "graph: edge endpoint out of range");
    if (x == y) fail(ErrorKind::invalid, "graph: self loop");
  }
  if (coloring) {
    if (static_cast<int>(coloring->size()) != vertices) fail(ErrorKind::invalid, "graph: coloring size mismatch");
    for (int c : *coloring)
      if (c < 0 || c >= k) fail(ErrorKind::invalid, "graph: color out of range");
  }
}

std::string price_variant_name(PriceVariant v) { return v == PriceVariant::unit ? "unit" : "aon"; }

PriceVariant parse_price_variant(std::string_view name) {
  if (name == "unit") return PriceVariant::unit;
  if (name == "aon" || name == "all-or-nothing") return PriceVariant::all_or_nothing;
  fail(ErrorKind::invalid, "unknown price variant: " + std::string(name));
}

Reduction reduce_setcover(const SetCoverInstance& sc, RuleKind rule, PriceVariant prices) {
  sc.validate();
  switch (rule) {
    case RuleKind::borda: return setcover_borda(sc, prices);
    case RuleKind::maximin: return setcover_maximin(sc, prices);
    case RuleKind::copeland: return setcover_copeland(sc, prices);
  }
  fail(ErrorKind::invalid, "unknown rule");
}

Reduction reduce_clique_copeland(const GraphInstance& g, PriceVariant prices) {
  g.validate();
  if (g.k < 2) fail(ErrorKind::invalid, "clique: k must be at least 2");
  return prices == PriceVariant::unit ? clique_unit(g) : clique_all_or_nothing(g);
}

Reduction reduce_mcc_copeland(const GraphInstance& g) {
  g.validate();
  if (!g.coloring) fail(ErrorKind::invalid, "multicolored clique: coloring required");
  if (g.k < 1) fail(ErrorKind::invalid, "multicolored clique: k must be positive");
  const auto edges = normalized_edges(g);
  const int ng = g.vertices, k = g.k;
  const auto& color = *g.coloring;
  std::vector<int> degree(ng, 0);
  for (auto [x, y] : edges) {
    if (color[x] == color[y]) fail(ErrorKind::invalid, "multicolored clique: coloring is not proper");
    ++degree[x], ++degree[y];
  }
  if (std::adjacent_find(degree.begin(), degree.end(), std::not_equal_to<>()) != degree.end())
    fail(ErrorKind::invalid, "multicolored clique: graph is not regular");
  const std::int64_t delta = ng ? degree[0] : 0;
  const std::int64_t n3 = checked_mul(checked_mul(ng, ng), ng);
  const std::int64_t n5 = checked_mul(checked_mul(n3, ng), ng);
  const std::int64_t total = checked_add(checked_add(checked_mul(3 * (k + ng), n3), static_cast<std::int64_t>(edges.size())),
                                         checked_mul(3, n5));
  if (total + 2 > kMaxCandidates)
    fail(ErrorKind::capacity, "multicolored clique: " + std::to_string(total + 2) + " candidates exceed the limit");

  // members[i] = vertices of color i in ascending order
  std::vector<std::vector<int>> members(k);
  for (int x = 0; x < ng; ++x) members[color[x]].push_back(x);

  Builder b;
  const CandidateId p = b.add("p"), d = b.add("d");
  // sel[i][j], fil[i][j] for j = 0..n_i (index j stands for the (j+1)th set)
  std::vector<std::vector<Ids>> sel(k), fil(k);
  Ids all_sel, all_fil;
  for (int i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= members[i].size(); ++j) {
      const std::string tag = std::to_string(i + 1) + "." + std::to_string(j + 1) + ".";
      sel[i].push_back(b.add_group("s" + tag, n3));
      all_sel.insert(all_sel.end(), sel[i].back().begin(), sel[i].back().end());
    }
  for (int i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= members[i].size(); ++j) {
      const std::string tag = std::to_string(i + 1) + "." + std::to_string(j + 1) + ".";
      fil[i].push_back(b.add_group("f" + tag, 2 * n3));
      all_fil.insert(all_fil.end(), fil[i].back().begin(), fil[i].back().end());
    }
  Ids edge_cands;
  std::vector<Ids> incident(ng);
  for (auto [x, y] : edges) {
    auto c = b.add("e" + std::to_string(x + 1) + "-" + std::to_string(y + 1));
    edge_cands.push_back(c);
    incident[x].push_back(c);
    incident[y].push_back(c);
  }
  const Ids d1 = b.add_group("x1.", n5), d2 = b.add_group("x2.", n5), d3 = b.add_group("x3.", n5);
  const Ids sel_edge = cat({all_sel, edge_cands});
  const Ids sel_fil = cat({all_sel, all_fil});

  for (int i = 0; i < k; ++i) {
    const int ni = static_cast<int>(members[i].size());
    Ids odd, even, own_sel_edge, own_fil;
    for (int j = 0; j < ni; ++j) odd = cat({odd, sel[i][j + 1], incident[members[i][j]], fil[i][j + 1]});
    for (int j = ni - 1; j >= 0; --j) even = cat({even, sel[i][j], incident[members[i][j]], fil[i][j]});
    for (int j = 0; j <= ni; ++j) {
      own_sel_edge = cat({own_sel_edge, sel[i][j]});
      own_fil = cat({own_fil, fil[i][j]});
    }
    for (int x : members[i]) own_sel_edge = cat({own_sel_edge, incident[x]});
    std::set<CandidateId> own(own_sel_edge.begin(), own_sel_edge.end());
    own.insert(own_fil.begin(), own_fil.end());
    Ids other_sel_edge, other_fil;
    for (auto c : sel_edge)
      if (!own.contains(c)) other_sel_edge.push_back(c);
    for (auto c : all_fil)
      if (!own.contains(c)) other_fil.push_back(c);

    b.vote(cat({{d}, sel[i][0], fil[i][0], d1, odd, {p}, d2, d3, other_sel_edge, other_fil}), std::nullopt);
    b.vote(cat({rev(other_sel_edge), sel[i][ni], fil[i][ni], rev(cat({d2, d3})), even, {p}, rev(d1), {d},
                rev(other_fil)}),
           std::nullopt);
  }
  const std::size_t pairs = static_cast<std::size_t>(k) * (k - 1) / 2;
  const Ids chosen = first(edge_cands, pairs), others = drop(edge_cands, pairs);
  b.vote(cat({{d}, edge_cands, d1, {p}, d2, d3, sel_fil}), std::nullopt);
  b.vote(cat({others, {d}, chosen, d2, {p}, d1, d3, sel_fil}), std::nullopt);
  b.vote(cat({sel_fil, edge_cands, d3, {p}, d1, d2, {d}}), std::nullopt);

  const std::int64_t budget = checked_mul(ng + k, checked_add(3 * n3, delta));
  return {b.finish(p, budget), VotingRule::copeland(), std::nullopt, ""};
}

}  // namespace sb
