#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sgdepth/core.hpp"
#include "sgdepth/grobner.hpp"

namespace sgdepth {

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// A validated semigroup together with lazily computed, cached data: the
/// toric ideal, Apéry Q-models keyed by the set of killed variables, and
/// memoised membership. Safe to share between threads.
class SemigroupRing {
 public:
  explicit SemigroupRing(Semigroup s, bool unit_weights = false);

  [[nodiscard]] const Semigroup& semigroup() const { return s_; }
  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] std::size_t dim() const { return s_.dim(); }
  [[nodiscard]] std::size_t num_gens() const { return s_.num_gens(); }

  [[nodiscard]] const GroebnerBasis& toric() const;
  /// Basis of I_A + <x_i : i in vars> under order().
  [[nodiscard]] const GroebnerBasis& with_variables(std::vector<std::size_t> vars) const;

  /// Membership with a memo table. Negative coordinates give false.
  [[nodiscard]] bool member(const Vec& b) const;
  /// b in Ap(S, {a_i : i in idx}).
  [[nodiscard]] bool in_apery(const Vec& b, std::span<const std::size_t> idx) const;

  /// Ap(S, E), sorted by (1-norm, lex).
  [[nodiscard]] const std::vector<Vec>& apery_extremal() const;

 private:
  Semigroup s_;
  MonomialOrder order_;
  mutable std::recursive_mutex mu_;
  mutable std::mutex memo_mu_;
  mutable std::unique_ptr<GroebnerBasis> toric_;
  mutable std::map<std::vector<std::size_t>, std::unique_ptr<GroebnerBasis>> models_;
  mutable std::unordered_map<Vec, bool, VecHash> member_memo_;
  mutable std::unique_ptr<std::vector<Vec>> apery_e_;
};

/// (1-norm, lex) ordering used for deterministic output everywhere.
bool norm_lex_less(const Vec& a, const Vec& b);

}  // namespace sgdepth
