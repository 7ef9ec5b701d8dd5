#include "sgdepth/ring.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sgdepth {

bool norm_lex_less(const Vec& a, const Vec& b) {
  const auto na = norm1(a), nb = norm1(b);
  if (na != nb) return na < nb;
  return a < b;
}

SemigroupRing::SemigroupRing(Semigroup s, bool unit_weights)
    : s_(std::move(s)), order_(a_graded_order(s_, unit_weights)) {}

const GroebnerBasis& SemigroupRing::toric() const {
  std::lock_guard lock(mu_);
  if (!toric_) toric_ = std::make_unique<GroebnerBasis>(toric_ideal(s_, order_));
  return *toric_;
}

const GroebnerBasis& SemigroupRing::with_variables(std::vector<std::size_t> vars) const {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::lock_guard lock(mu_);
  auto it = models_.find(vars);
  if (it != models_.end()) return *it->second;
  const GroebnerBasis& t = toric();
  auto g = std::make_unique<GroebnerBasis>(vars.empty() ? t : add_variables(t, vars));
  return *models_.emplace(vars, std::move(g)).first->second;
}

bool SemigroupRing::member(const Vec& b) const {
  if (!is_nonnegative(b)) return false;
  {
    std::lock_guard lock(memo_mu_);
    auto it = member_memo_.find(b);
    if (it != member_memo_.end()) return it->second;
  }
  const bool r = sgdepth::member(s_, b);
  std::lock_guard lock(memo_mu_);
  if (member_memo_.size() > 4'000'000) member_memo_.clear();
  member_memo_.emplace(b, r);
  return r;
}

bool SemigroupRing::in_apery(const Vec& b, std::span<const std::size_t> idx) const {
  if (!member(b)) return false;
  return std::none_of(idx.begin(), idx.end(), [&](std::size_t i) { return member(b - s_.gen(i)); });
}

const std::vector<Vec>& SemigroupRing::apery_extremal() const {
  std::lock_guard lock(mu_);
  if (apery_e_) return *apery_e_;
  // Down-closed set: every nonzero element is a smaller element plus a generator.
  std::set<Vec> seen{Vec(s_.dim(), 0)};
  std::deque<Vec> todo{Vec(s_.dim(), 0)};
  const auto ext = s_.extremal();
  while (!todo.empty()) {
    Vec c = todo.front();
    todo.pop_front();
    for (auto k : s_.non_extremal()) {
      Vec n = c + s_.gen(k);
      if (seen.count(n)) continue;
      if (in_apery(n, ext)) {
        seen.insert(n);
        todo.push_back(n);
      }
    }
  }
  auto out = std::make_unique<std::vector<Vec>>(seen.begin(), seen.end());
  std::sort(out->begin(), out->end(), norm_lex_less);
  apery_e_ = std::move(out);
  return *apery_e_;
}

}  // namespace sgdepth
