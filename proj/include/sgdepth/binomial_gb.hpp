#pragma once

#include <optional>
#include <vector>

#include "sgdepth/monomial.hpp"

namespace sgdepth {

/// lead - trail with unit coefficients, or the monomial `lead` when
/// has_trail is false.
struct Binomial {
  Monomial lead;
  Monomial trail;
  bool has_trail = true;

  static Binomial monomial(const Monomial& m) { return {m, Monomial{}, false}; }
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Difference p - q of two optional monomials (nullopt stands for 0),
/// oriented so that the larger term comes first. Returns nullopt for zero.
std::optional<Binomial> make_oriented(std::optional<Monomial> p, std::optional<Monomial> q,
                                      const MonomialOrder& order);

/// Reduces a single monomial modulo `basis` until no leading monomial divides
/// it. Every reduction step keeps its coefficient at 1, so the result is a
/// monomial or zero.
std::optional<Monomial> reduce_monomial(const std::vector<Binomial>& basis, Monomial m);

std::optional<Binomial> normal_form(const std::vector<Binomial>& basis, const Binomial& f,
                                    const MonomialOrder& order);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis of the ideal generated by `gens`.
/// Gebauer-Moeller pair management, normal selection strategy, final
/// interreduction and sorting by ascending leading monomial.
std::vector<Binomial> binomial_buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                                          BuchbergerStats* stats = nullptr);

/// Sorts reduced bases into canonical ascending order of leading monomials.
void sort_basis(std::vector<Binomial>& basis, const MonomialOrder& order);

}  // namespace sgdepth
