#include "shiftbribery/approx.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "shiftbribery/evaluator.hpp"

namespace sb {
namespace {

std::int64_t increment(const PriceFunction& pf, int y) { return pf(y) - pf(y - 1); }

void check_shape(const VoterBlocks& blocks, std::size_t rows, const char* what) {
  if (rows != blocks.size())
    fail(ErrorKind::invalid, std::string(what) + ": expected one row per voter block");
}

mpq_class to_mpq(const Rational& r) {
  mpq_class q(mpz_class(static_cast<long>(r.numerator())), mpz_class(static_cast<long>(r.denominator())));
  q.canonicalize();
  return q;
}

std::int64_t floor_clamped(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (f < 0) return 0;
  if (!f.fits_slong_p()) return INT64_MAX;
  return f.get_si();
}

std::int64_t ceil_clamped(const mpq_class& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) return INT64_MAX;
  return c.get_si();
}

SolveResult finish(const Instance& inst, std::optional<ShiftAction> best, std::int64_t explored,
                   Guarantee g) {
  SolveResult r;
  r.explored = explored;
  r.guarantee = g;
  if (best) {
    r.feasible = true;
    r.spent = cost(inst.prices, *best);
    r.action = std::move(best);
  }
  return within_budget(inst, std::move(r));
}

}  // namespace

VoterBlocks sorted_blocks(const Instance& inst) {
  const Election& e = inst.election;
  std::map<PreferenceOrder, int> index;
  VoterBlocks blocks;
  for (int i = 0; i < e.num_voters(); ++i) {
    auto [it, fresh] = index.try_emplace(e.voter(i), static_cast<int>(blocks.size()));
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  auto caps = shift_caps(e, inst.preferred);
  for (auto& block : blocks)
    std::stable_sort(block.begin(), block.end(), [&](int a, int b) {
      return inst.prices[a](caps[a]) < inst.prices[b](caps[b]);
    });
  return blocks;
}

ShiftAction stepwise_to_shift(const Instance& inst, const VoterBlocks& blocks,
                              const StepwiseShiftAction& mu) {
  check_shape(blocks, mu.size(), "stepwise action");
  const int steps = inst.num_candidates() - 1;
  auto caps = shift_caps(inst.election, inst.preferred);
  ShiftAction s(inst.num_voters(), 0);
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    const auto& row = mu[x];
    const int size = static_cast<int>(blocks[x].size());
    if (static_cast<int>(row.size()) != steps)
      fail(ErrorKind::invalid, "stepwise action: each block needs m-1 entries");
    for (int y = 0; y < steps; ++y) {
      if (row[y] < 0 || row[y] > size)
        fail(ErrorKind::invalid, "stepwise action: entry outside 0..block size");
      if (y > 0 && row[y] > row[y - 1])
        fail(ErrorKind::invalid, "stepwise action: entries must not increase");
      for (int k = 0; k < row[y]; ++k) ++s[blocks[x][k]];
    }
  }
  for (int i = 0; i < inst.num_voters(); ++i) s[i] = std::min(s[i], caps[i]);
  return s;
}

StepwiseShiftAction shift_to_stepwise(const Instance& inst, const VoterBlocks& blocks,
                                      const ShiftAction& s) {
  const int steps = inst.num_candidates() - 1;
  StepwiseShiftAction mu(blocks.size(), std::vector<int>(steps, 0));
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (int y = 1; y <= steps; ++y)
      for (int v : blocks[x])
        if (s.at(v) >= y) ++mu[x][y - 1];
  return mu;
}

StepwiseShiftAction pi_s_shift(const Instance& inst, const VoterBlocks& blocks,
                               const StepwiseBudget& b) {
  check_shape(blocks, b.size(), "stepwise budget");
  const int steps = inst.num_candidates() - 1;
  StepwiseShiftAction mu(blocks.size(), std::vector<int>(steps, 0));
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    if (static_cast<int>(b[x].size()) != steps)
      fail(ErrorKind::invalid, "stepwise budget: each block needs m-1 entries");
    int prev = static_cast<int>(blocks[x].size());
    for (int y = 1; y <= steps; ++y) {
      std::int64_t spent = 0;
      int t = 0;
      while (t < prev) {
        std::int64_t next = checked_add(spent, increment(inst.prices[blocks[x][t]], y));
        if (next > b[x][y - 1]) break;
        spent = next;
        ++t;
      }
      mu[x][y - 1] = prev = t;
    }
  }
  return mu;
}

StepwiseBudget stepwise_cost(const Instance& inst, const VoterBlocks& blocks,
                             const StepwiseShiftAction& mu) {
  check_shape(blocks, mu.size(), "stepwise action");
  const int steps = inst.num_candidates() - 1;
  StepwiseBudget b(blocks.size(), std::vector<std::int64_t>(steps, 0));
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (int y = 1; y <= steps; ++y)
      for (int k = 0; k < mu[x].at(y - 1); ++k)
        b[x][y - 1] = checked_add(b[x][y - 1], increment(inst.prices[blocks[x][k]], y));
  return b;
}

SolveResult fptas_voters(const Instance& inst, const VotingRule& rule, const Rational& eps) {
  if (eps <= Rational(0)) fail(ErrorKind::invalid, "epsilon must be positive");
  const int n = inst.num_voters();
  const auto caps = shift_caps(inst.election, inst.preferred);
  ShiftEvaluator ev(inst.election, inst.preferred, rule);
  const std::int64_t num = eps.numerator(), den = eps.denominator();
  // ceil(n/eps) and the sentinel ceil(n(n+1)/eps) + 1
  const std::int64_t top = ceil_rational(Rational(n) / eps);
  const std::int64_t sentinel = ceil_rational(Rational(n) * Rational(n + 1) / eps) + 1;

  std::optional<ShiftAction> best;
  std::int64_t best_cost = 0, explored = 0;
  auto offer = [&](const ShiftAction& s, std::int64_t c) {
    if (!best || c < best_cost || (c == best_cost && s < *best)) best = s, best_cost = c;
  };

  // Zero-priced shifts: covers OPT = 0, where every guess of pi_max is 0.
  {
    ShiftAction free = budget_to_shifts(inst.prices, std::vector<std::int64_t>(n, 0), caps);
    ++explored;
    if (ev.wins(free)) offer(free, 0);
  }

  std::set<std::int64_t> guesses;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= caps[i]; ++j)
      if (inst.prices[i](j) > 0) guesses.insert(inst.prices[i](j));

  ShiftAction s(n, 0);
  for (std::int64_t pmax : guesses) {
    // pi'(l) = ceil(pi(l) / K) with K = eps * pmax / n
    auto rounded = [&](std::int64_t price) -> std::int64_t {
      if (price > pmax) return sentinel;
      __int128 a = static_cast<__int128>(price) * n * den, d = static_cast<__int128>(num) * pmax;
      return static_cast<std::int64_t>((a + d - 1) / d);
    };
    // Distinct outcomes of the per-voter budget b in 0..top; other budget
    // values repeat one of these shift amounts.
    std::vector<std::vector<int>> options(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::int64_t> table(caps[i] + 1);
      for (int j = 0; j <= caps[i]; ++j) table[j] = rounded(inst.prices[i](j));
      for (std::int64_t b = 0; b <= top; ++b) {
        int t = 0;
        while (t < caps[i] && table[t + 1] <= b) ++t;
        if (table[t] > b) continue;
        if (options[i].empty() || options[i].back() != t) options[i].push_back(t);
        if (t == caps[i]) break;
      }
    }
    std::function<void(int, std::int64_t)> visit = [&](int i, std::int64_t c) {
      if (best && c > best_cost) return;
      if (i == n) {
        ++explored;
        if (ev.p_wins()) offer(s, c);
        return;
      }
      for (int t : options[i]) {
        std::int64_t next = checked_add(c, inst.prices[i](t));
        if (best && next > best_cost) break;
        s[i] = t;
        ev.shift(i, t);
        visit(i + 1, next);
        ev.unshift(i, t);
      }
      s[i] = 0;
    };
    visit(0, 0);
  }
  return finish(inst, std::move(best), explored, Guarantee::within(Rational(1) + eps));
}

SolveResult fptas_candidates(const Instance& inst, const VotingRule& rule, const Rational& eps,
                             const CandidateSchemeOptions& opts) {
  if (eps <= Rational(0)) fail(ErrorKind::invalid, "epsilon must be positive");
  if (!classify(inst.prices, inst.election, inst.preferred).has(kSortable))
    fail(ErrorKind::invalid, "prices are not sortable");
  const int n = inst.num_voters();
  const int steps = inst.num_candidates() - 1;
  const auto caps = shift_caps(inst.election, inst.preferred);
  const Guarantee guarantee = Guarantee::within((Rational(1) + eps) * (Rational(1) + eps));
  ShiftEvaluator ev(inst.election, inst.preferred, rule);
  std::int64_t explored = 1;

  if (ev.p_wins()) return finish(inst, ShiftAction(n, 0), explored, guarantee);
  const ShiftAction all_top = caps;
  ++explored;
  if (!ev.wins(all_top)) return finish(inst, std::nullopt, explored, guarantee);
  const std::int64_t top_cost = cost(inst.prices, all_top);

  const VoterBlocks blocks = sorted_blocks(inst);
  // Zero trial budget: under sortable prices this is the largest zero-cost
  // action, so it succeeds exactly when OPT = 0.
  {
    ShiftAction free = stepwise_to_shift(
        inst, blocks, pi_s_shift(inst, blocks, StepwiseBudget(blocks.size(), std::vector<std::int64_t>(steps, 0))));
    ++explored;
    if (ev.wins(free)) return finish(inst, std::move(free), explored, guarantee);
  }
  const int M = static_cast<int>(blocks.size()) * steps;
  const mpq_class eps_q = to_mpq(eps);
  const double ratio = static_cast<double>(M) * eps.denominator() / eps.numerator();
  const int log_term = ratio <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log(ratio)));
  const int depth = M * log_term + 1;

  bool literal = true;
  {
    double leaves = std::pow(static_cast<double>(M), depth);
    literal = leaves <= static_cast<double>(opts.literal_leaves);
  }

  auto attempt = [&](const std::vector<mpq_class>& q, const mpq_class& bump) -> std::optional<ShiftAction> {
    StepwiseBudget b(blocks.size(), std::vector<std::int64_t>(steps));
    for (int k = 0; k < M; ++k) b[k / steps][k % steps] = floor_clamped(q[k] + bump);
    ShiftAction s = stepwise_to_shift(inst, blocks, pi_s_shift(inst, blocks, b));
    ++explored;
    if (ev.wins(s)) return s;
    return std::nullopt;
  };

  // Steering target for the non-literal mode: a cheapest successful stepwise
  // action. Steps beyond p's position cost nothing and repeat the last count.
  std::optional<StepwiseShiftAction> target;
  std::int64_t target_cost = 0;
  if (!literal) {
    StepwiseShiftAction mu(blocks.size(), std::vector<int>(steps, 0));
    std::int64_t nodes = 0;
    std::function<void(std::size_t, std::int64_t)> by_block;
    std::function<void(std::size_t, int, int, std::int64_t)> by_step =
        [&](std::size_t x, int y, int prev, std::int64_t c) {
          const auto& block = blocks[x];
          const int cap = caps[block.front()];
          if (y > cap) {
            for (int k = y; k <= steps; ++k) mu[x][k - 1] = prev;
            for (int k = 0; k < static_cast<int>(block.size()); ++k) {
              int amount = 0;
              for (int z = 1; z <= cap; ++z) amount += k < mu[x][z - 1];
              ev.shift(block[k], amount);
            }
            by_block(x + 1, c);
            for (int k = 0; k < static_cast<int>(block.size()); ++k) {
              int amount = 0;
              for (int z = 1; z <= cap; ++z) amount += k < mu[x][z - 1];
              ev.unshift(block[k], amount);
            }
            return;
          }
          std::int64_t step_cost = 0;
          for (int t = 0; t <= prev; ++t) {
            if (t > 0) step_cost = checked_add(step_cost, increment(inst.prices[block[t - 1]], y));
            std::int64_t next = checked_add(c, step_cost);
            if (target && next >= target_cost) break;
            mu[x][y - 1] = t;
            by_step(x, y + 1, t, next);
          }
        };
    by_block = [&](std::size_t x, std::int64_t c) {
      if (++nodes > opts.steer_limit)
        fail(ErrorKind::capacity, "stepwise search exceeds the enumeration limit");
      if (x == blocks.size()) {
        ++explored;
        if (ev.p_wins() && (!target || c < target_cost)) target = mu, target_cost = c;
        return;
      }
      by_step(x, 1, static_cast<int>(blocks[x].size()), c);
    };
    by_block(0, 0);
    ev.clear();
  }

  std::int64_t last = -1;
  mpq_class power = 1;
  const mpq_class growth = 1 + eps_q;
  for (;;) {
    const std::int64_t B = std::min(ceil_clamped(power), top_cost);
    power *= growth;
    if (B == last) continue;
    last = B;

    // chunk[k] = B (1 - 1/M)^k / M, the amount Search adds at level k
    std::vector<mpq_class> chunk(depth);
    mpq_class rest = B;
    for (int k = 0; k < depth; ++k) {
      chunk[k] = rest / M;
      rest -= chunk[k];
    }
    const mpq_class bump = eps_q * B / M;
    std::vector<mpq_class> q(M, mpq_class(0));
    std::optional<ShiftAction> found;

    if (literal) {
      std::function<bool(int)> search = [&](int level) {
        if (level == depth) return (found = attempt(q, bump)).has_value();
        for (int i = 0; i < M; ++i) {
          q[i] += chunk[level];
          bool done = search(level + 1);
          q[i] -= chunk[level];
          if (done) return true;
        }
        return false;
      };
      search(0);
    } else if (target && target_cost <= B) {
      // Follow the branch whose leaf stays below the target distribution
      // padded to sum B; some entry always has room for the next chunk.
      StepwiseBudget tb = stepwise_cost(inst, blocks, *target);
      std::vector<mpq_class> goal(M);
      for (int k = 0; k < M; ++k) goal[k] = mpq_class(static_cast<long>(tb[k / steps][k % steps]));
      goal[0] += B - target_cost;
      for (int level = 0; level < depth; ++level) {
        int i = 0;
        while (i < M && goal[i] - q[i] < chunk[level]) ++i;
        if (i == M) fail(ErrorKind::invalid, "budget search lost its target");
        q[i] += chunk[level];
      }
      found = attempt(q, bump);
    }
    if (found) return finish(inst, std::move(found), explored, guarantee);
    if (B == top_cost) return finish(inst, std::nullopt, explored, guarantee);
  }
}

}  // namespace sb
