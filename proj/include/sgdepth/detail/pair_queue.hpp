#pragma once

// Critical-pair bookkeeping shared by the binomial and polynomial engines.
// Only leading monomials matter here, so the engines register leads and get
// back index pairs to reduce.

#include <set>
#include <utility>
#include <vector>

#include "sgdepth/monomial.hpp"

namespace sgdepth::detail {

class PairQueue {
 public:
  explicit PairQueue(const MonomialOrder& order) : order_(&order), pairs_(PairLess{this}) {}

  /// Registers a new basis element (already reduced against the active set)
  /// and applies the Gebauer-Moeller update. Returns its index.
  std::size_t insert(const Monomial& lead) {
    const std::size_t h = leads_.size();
    leads_.push_back(lead);
    active_.push_back(true);

    // new pairs (h, g), pruned by the chain criterion among themselves
    struct Cand {
      std::size_t g;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> cand;
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g]) cand.push_back({g, lcm(lead, leads_[g]), lead.coprime(leads_[g])});
    }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      if (!cand[a].coprime) {
        for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
          if (b == a) continue;
          if (cand[b].l.divides(cand[a].l)) {
            // among equal lcms keep the first one only
            drop = !(cand[b].l == cand[a].l) || b < a;
          }
        }
      }
      if (!drop) kept.push_back(cand[a]);
    }

    // old pairs made redundant by h
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->l;
      if (lead.divides(l) && !(lcm(leads_[it->i], lead) == l) && !(lcm(lead, leads_[it->j]) == l)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& c : kept) {
      if (c.coprime) continue;  // product criterion
      pairs_.insert(Pair{c.g, h, c.l});
    }
    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lead.divides(leads_[g])) active_[g] = false;
    }
    return h;
  }

  [[nodiscard]] bool empty() const { return pairs_.empty(); }

  /// Pair with the smallest lcm (normal strategy).
  std::pair<std::size_t, std::size_t> pop() {
    auto it = pairs_.begin();
    auto p = std::make_pair(it->i, it->j);
    pairs_.erase(it);
    return p;
  }

  [[nodiscard]] bool is_active(std::size_t i) const { return active_[i]; }
  [[nodiscard]] std::size_t size() const { return leads_.size(); }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial l;
  };
  struct PairLess {
    const PairQueue* q;
    bool operator()(const Pair& a, const Pair& b) const {
      int c = q->order_->compare(a.l, b.l);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  const MonomialOrder* order_;
  std::vector<Monomial> leads_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace sgdepth::detail
