#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sgdepth/binomial_gb.hpp"
#include "sgdepth/monomial.hpp"

namespace sgdepth {

struct Term {
  Monomial m;
  mpq_class c;
};

/// Polynomial over Q with terms kept in strictly descending order.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Term> terms, const MonomialOrder& order);
  static Polynomial from_binomial(const Binomial& b);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] const Monomial& lead() const { return terms_.front().m; }
  [[nodiscard]] const mpq_class& lead_coeff() const { return terms_.front().c; }

  void make_monic();
  /// this += c * m * other
  void add_scaled(const Polynomial& other, const mpq_class& c, const Monomial& m, const MonomialOrder& order);
  [[nodiscard]] Polynomial mul(const Polynomial& other, const MonomialOrder& order) const;
  [[nodiscard]] Polynomial mul_monomial(const Monomial& m) const;
  /// Exact division if the divisor divides; throws otherwise.
  [[nodiscard]] Polynomial exact_div(const Polynomial& divisor, const MonomialOrder& order) const;
  /// True iff no term involves variable v.
  [[nodiscard]] bool free_of(std::size_t v) const;
  [[nodiscard]] std::string to_string(std::size_t nvars) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

Polynomial normal_form(const std::vector<Polynomial>& basis, const Polynomial& f, const MonomialOrder& order);

/// Reduced Groebner basis over Q, monic, sorted ascending by leading monomial.
std::vector<Polynomial> polynomial_buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

}  // namespace sgdepth
