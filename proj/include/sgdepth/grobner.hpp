#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgdepth/binomial_gb.hpp"
#include "sgdepth/core.hpp"
#include "sgdepth/monomial.hpp"
#include "sgdepth/polynomial_gb.hpp"

namespace sgdepth {

/// Antichain of monomials under divisibility.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  /// Minimal generators in canonical (raw lexicographic) order.
  [[nodiscard]] const std::vector<Monomial>& generators() const { return gens_; }
  [[nodiscard]] bool contains(const Monomial& m) const;
  [[nodiscard]] std::string to_string() const;
  /// Largest exponent of x_v among the minimal generators.
  [[nodiscard]] std::int32_t max_exponent(std::size_t v) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Reduced Groebner basis of a binomial ideal. `grading` is a positive
/// weight vector for which every element is homogeneous; it is what lets the
/// colon and saturation routines use the reverse-lex trick.
struct GroebnerBasis {
  MonomialOrder order;
  std::size_t nvars = 0;
  std::vector<Binomial> elements;
  std::vector<std::int64_t> grading;
  bool reduced = true;

  [[nodiscard]] std::optional<Monomial> reduce(const Monomial& m) const { return reduce_monomial(elements, m); }
  [[nodiscard]] bool contains(const Binomial& f) const;
  [[nodiscard]] bool contains(const Monomial& m) const { return !reduce(m).has_value(); }
};

/// Weighted reverse lex where x_i weighs |a_i|_1 and the ranking puts the
/// non-extremal variables first (in index order), then the extremal ones.
/// With unit_weights every variable weighs 1 instead.
MonomialOrder a_graded_order(const Semigroup& s, bool unit_weights = false);

/// Groebner basis of the ideal generated by `gens`; all of them must be
/// homogeneous for `grading`.
GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order, std::size_t nvars,
                         std::vector<std::int64_t> grading);
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Toric ideal of S: lattice basis ideal of ker(A), saturated by every
/// variable, then a reduced basis under `order`.
GroebnerBasis toric_ideal(const Semigroup& s, const MonomialOrder& order);

/// Same ideal, new order.
GroebnerBasis change_order(const GroebnerBasis& g, const MonomialOrder& order);

/// G plus the variables x_i for i in `vars`.
GroebnerBasis add_variables(const GroebnerBasis& g, const std::vector<std::size_t>& vars);

MonomialIdeal initial_ideal(const GroebnerBasis& g);

/// Every monomial supported on `vars`, with u_v <= box[v], that lies outside m.
std::vector<Monomial> standard_monomials_in_box(const MonomialIdeal& m, const std::vector<std::size_t>& vars,
                                                const std::vector<std::int32_t>& box);

/// Standard monomials supported on `vars` of total degree at most `max_degree`.
std::vector<Monomial> standard_monomials_up_to_degree(const MonomialIdeal& m, const std::vector<std::size_t>& vars,
                                                      std::int32_t max_degree);

/// Standard monomials x^u supported on `vars` with x_v x^u in m for every v in vars.
std::vector<Monomial> socle_monomials(const MonomialIdeal& m, const std::vector<std::size_t>& vars);

/// (J : x_i) for the ideal J with basis g. The result is a basis under
/// reverse lex with x_i ranked least.
GroebnerBasis colon_by_variable(const GroebnerBasis& g, std::size_t i);
/// (J : x_i^infinity).
GroebnerBasis saturate_by_variable(const GroebnerBasis& g, std::size_t i);

/// True iff the ideals with these bases coincide.
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);
/// True iff every element of `sub` lies in the ideal of `super`.
bool ideal_contained(const GroebnerBasis& sub, const GroebnerBasis& super);

/// (J : f) for a polynomial basis of J under `order`; the result is a reduced
/// basis under `order`.
std::vector<Polynomial> colon_by_polynomial(const std::vector<Polynomial>& j, const Polynomial& f,
                                            const MonomialOrder& order);

std::vector<Polynomial> to_polynomials(const GroebnerBasis& g);

/// Exponent vector u mapped to A*u.
Vec monomial_degree(const Semigroup& s, const Monomial& m);

}  // namespace sgdepth
