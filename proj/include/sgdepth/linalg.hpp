#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace sgdepth {

using Vec = std::vector<std::int64_t>;
using ZMatrix = std::vector<std::vector<mpz_class>>;

/// Row-style Hermite normal form of the lattice spanned by the rows of
/// `rows`. Zero rows are dropped, pivots are positive and entries above a
/// pivot are reduced into [0, pivot).
ZMatrix hermite_normal_form(const ZMatrix& rows);

/// Lattice given by a list of generators (not necessarily independent).
/// Membership is decided against the Hermite form by exact back-substitution.
class Lattice {
 public:
  Lattice() = default;
  Lattice(const std::vector<Vec>& generators, std::size_t ambient_dim);

  [[nodiscard]] bool contains(const Vec& v) const;
  /// Canonical representative of v + L: each pivot coordinate is brought
  /// into [0, pivot) in turn.
  [[nodiscard]] Vec reduce(const Vec& v) const;
  [[nodiscard]] std::size_t rank() const { return hnf_.size(); }
  [[nodiscard]] const ZMatrix& hermite_basis() const { return hnf_; }

 private:
  std::size_t dim_ = 0;
  ZMatrix hnf_;
  std::vector<std::size_t> pivots_;
};

/// Z-basis of {u in Z^e : A u = 0} where A is given by its d rows.
std::vector<Vec> integer_kernel_basis(const std::vector<Vec>& rows, std::size_t num_cols);

/// Exact rank over the rationals (fraction-free elimination).
std::size_t rank_rational(std::vector<std::vector<std::int64_t>> m);
std::size_t rank_rational(ZMatrix m);

/// Rank over the prime field F_p.
std::size_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& m, std::uint64_t p);

/// Determinant of a square integer matrix.
mpz_class determinant(const ZMatrix& m);

/// Adjugate of a square matrix: adj(M) * M = det(M) * I.
ZMatrix adjugate(const ZMatrix& m);

/// Solve x^T M = v^T over Q - that is, express v as a rational combination of
/// the rows of M. Returns nullopt if v is not in the rational row span.
std::optional<std::vector<mpq_class>> solve_row_combination(const ZMatrix& rows,
                                                            const std::vector<mpz_class>& v);

ZMatrix to_zmatrix(const std::vector<Vec>& rows);

}  // namespace sgdepth
