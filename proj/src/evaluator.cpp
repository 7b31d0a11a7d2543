#include "shiftbribery/evaluator.hpp"

#include <algorithm>

namespace sb {

ShiftEvaluator::ShiftEvaluator(const Election& e, CandidateId p, const VotingRule& rule)
    : kind_(rule.kind),
      m_(e.num_candidates()),
      n_(e.num_voters()),
      p_(p),
      ahead_(e.num_voters()),
      base_(m_, 0),
      n_p_over_(m_, 0),
      n_over_p_(m_, 0),
      passes_(m_, 0) {
  for (int i = 0; i < n_; ++i) {
    const auto& order = e.voter(i);
    int pos = static_cast<int>(std::find(order.begin(), order.end(), p) - order.begin());
    ahead_[i].assign(order.rbegin() + (m_ - pos), order.rend());
  }
  PairwiseMatrix n(e);
  for (int c = 0; c < m_; ++c) {
    n_p_over_[c] = n(p, c);
    n_over_p_[c] = n(c, p);
  }
  if (kind_ == RuleKind::copeland) {
    win_ = rule.alpha.denominator();
    tie_ = rule.alpha.numerator();
  }
  for (int c = 0; c < m_; ++c) {
    switch (kind_) {
      case RuleKind::borda:
        for (int d = 0; d < m_; ++d)
          if (d != c) base_[c] += n(c, d);
        break;
      case RuleKind::maximin:
        base_[c] = n_;
        for (int d = 0; d < m_; ++d)
          if (d != c && d != p) base_[c] = std::min<std::int64_t>(base_[c], n(c, d));
        break;
      case RuleKind::copeland:
        for (int d = 0; d < m_; ++d)
          if (d != c && d != p) base_[c] += contest(n(c, d), n(d, c));
        break;
    }
  }
}

void ShiftEvaluator::shift(int voter, int amount) {
  const auto& a = ahead_[voter];
  amount = std::min<int>(amount, a.size());
  for (int k = 0; k < amount; ++k) ++passes_[a[k]];
  gain_ += amount;
}

void ShiftEvaluator::unshift(int voter, int amount) {
  const auto& a = ahead_[voter];
  amount = std::min<int>(amount, a.size());
  for (int k = 0; k < amount; ++k) --passes_[a[k]];
  gain_ -= amount;
}

void ShiftEvaluator::clear() {
  std::fill(passes_.begin(), passes_.end(), 0);
  gain_ = 0;
}

bool ShiftEvaluator::p_wins() const {
  switch (kind_) {
    case RuleKind::borda: {
      std::int64_t sp = base_[p_] + gain_;
      for (int c = 0; c < m_; ++c)
        if (c != p_ && base_[c] - passes_[c] > sp) return false;
      return true;
    }
    case RuleKind::maximin: {
      std::int64_t sp = n_;
      for (int c = 0; c < m_; ++c)
        if (c != p_) sp = std::min(sp, n_p_over_[c] + passes_[c]);
      for (int c = 0; c < m_; ++c)
        if (c != p_ && std::min(base_[c], n_over_p_[c] - passes_[c]) > sp) return false;
      return true;
    }
    case RuleKind::copeland: {
      std::int64_t sp = 0;
      for (int c = 0; c < m_; ++c)
        if (c != p_) sp += contest(n_p_over_[c] + passes_[c], n_over_p_[c] - passes_[c]);
      for (int c = 0; c < m_; ++c) {
        if (c == p_) continue;
        if (base_[c] + contest(n_over_p_[c] - passes_[c], n_p_over_[c] + passes_[c]) > sp)
          return false;
      }
      return true;
    }
  }
  return false;
}

bool ShiftEvaluator::wins(std::span<const int> shifts) {
  clear();
  for (std::size_t i = 0; i < shifts.size(); ++i) shift(static_cast<int>(i), shifts[i]);
  bool w = p_wins();
  clear();
  return w;
}

}  // namespace sb
