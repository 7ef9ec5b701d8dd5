#include "sgdepth/binomial_gb.hpp"

#include <algorithm>

#include "sgdepth/detail/pair_queue.hpp"

namespace sgdepth {

std::optional<Binomial> make_oriented(std::optional<Monomial> p, std::optional<Monomial> q,
                                      const MonomialOrder& order) {
  if (!p && !q) return std::nullopt;
  if (!p) return Binomial::monomial(*q);
  if (!q) return Binomial::monomial(*p);
  const int c = order.compare(*p, *q);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial{*p, *q, true};
  return Binomial{*q, *p, true};
}

namespace {

struct Reducer {
  const std::vector<Binomial>& basis;
  const std::vector<std::size_t>* subset;  // nullptr means all elements

  std::optional<Monomial> operator()(Monomial m) const {
    while (true) {
      const Binomial* hit = nullptr;
      auto test = [&](const Binomial& g) {
        if (g.lead.divides(m)) {
          hit = &g;
          return true;
        }
        return false;
      };
      if (subset != nullptr) {
        for (auto i : *subset) {
          if (test(basis[i])) break;
        }
      } else {
        for (const auto& g : basis) {
          if (test(g)) break;
        }
      }
      if (hit == nullptr) return m;
      if (!hit->has_trail) return std::nullopt;
      m = (m / hit->lead) * hit->trail;
    }
  }
};

}  // namespace

std::optional<Monomial> reduce_monomial(const std::vector<Binomial>& basis, Monomial m) {
  return Reducer{basis, nullptr}(m);
}

std::optional<Binomial> normal_form(const std::vector<Binomial>& basis, const Binomial& f,
                                    const MonomialOrder& order) {
  Reducer r{basis, nullptr};
  auto p = r(f.lead);
  std::optional<Monomial> q;
  if (f.has_trail) q = r(f.trail);
  return make_oriented(p, q, order);
}

void sort_basis(std::vector<Binomial>& basis, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Binomial& a, const Binomial& b) {
    int c = order.compare(a.lead, b.lead);
    if (c != 0) return c < 0;
    if (a.has_trail != b.has_trail) return !a.has_trail;
    return order.less(a.trail, b.trail);
  });
}

std::vector<Binomial> binomial_buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                                          BuchbergerStats* stats) {
  std::vector<Binomial> all;
  std::vector<std::size_t> active;
  detail::PairQueue queue(order);
  BuchbergerStats local;

  auto reduce_against_active = [&](const std::optional<Monomial>& p, const std::optional<Monomial>& q) {
    Reducer r{all, &active};
    std::optional<Monomial> rp, rq;
    if (p) rp = r(*p);
    if (q) rq = r(*q);
    return make_oriented(rp, rq, order);
  };

  auto add = [&](const Binomial& h) {
    const std::size_t idx = queue.insert(h.lead);
    all.push_back(h);
    active.clear();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      if (queue.is_active(i)) active.push_back(i);
    }
    (void)idx;
  };

  // Seed the queue in a canonical order so the output does not depend on
  // the order of the input generators.
  std::vector<Binomial> seeds;
  for (const auto& g : gens) {
    auto o = make_oriented(g.lead, g.has_trail ? std::optional<Monomial>(g.trail) : std::nullopt, order);
    if (o) seeds.push_back(*o);
  }
  sort_basis(seeds, order);
  for (const auto& g : seeds) {
    auto h = reduce_against_active(g.lead, g.has_trail ? std::optional<Monomial>(g.trail) : std::nullopt);
    if (h) add(*h);
  }

  while (!queue.empty()) {
    auto [i, j] = queue.pop();
    ++local.pairs_considered;
    const Binomial& f = all[i];
    const Binomial& g = all[j];
    if (!f.has_trail && !g.has_trail) continue;
    const Monomial l = lcm(f.lead, g.lead);
    std::optional<Monomial> p, q;
    if (f.has_trail) p = (l / f.lead) * f.trail;
    if (g.has_trail) q = (l / g.lead) * g.trail;
    ++local.pairs_reduced;
    auto h = reduce_against_active(p, q);
    if (!h) {
      ++local.zero_reductions;
      continue;
    }
    add(*h);
  }

  // minimal basis is the active set; now interreduce trails
  std::vector<Binomial> result;
  result.reserve(active.size());
  for (auto i : active) result.push_back(all[i]);
  for (std::size_t k = 0; k < result.size(); ++k) {
    if (!result[k].has_trail) continue;
    auto t = reduce_monomial(result, result[k].trail);
    if (t) {
      result[k].trail = *t;
    } else {
      result[k].has_trail = false;
      result[k].trail = Monomial{};
    }
  }
  sort_basis(result, order);
  if (stats != nullptr) *stats = local;
  return result;
}

}  // namespace sgdepth
