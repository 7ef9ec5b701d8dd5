#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgdepth/complex.hpp"
#include "sgdepth/ring.hpp"

namespace sgdepth {

/// Degree-b slice of K_p, the Koszul complex on t^{a_i} (i in E) over k[S].
struct KoszulPiece {
  Vec degree;
  std::size_t p = 0;
  /// Subsets F of E (generator masks) with |F| = p and b - sum(F) in S.
  std::vector<Face> basis;
  /// rows = basis of this piece, columns = basis of the (p-1)-piece.
  std::vector<std::vector<std::int64_t>> boundary_out;
};

KoszulPiece koszul_piece(const SemigroupRing& r, std::size_t p, const Vec& b);

std::size_t koszul_homology_dim(const SemigroupRing& r, std::size_t p, const Vec& b,
                                const Field& field = Field::rationals());

/// Element of K_2 in a single degree: sum of c_{ij} t^{degree - a_i - a_j} e_ij
/// with i < j generator indices.
struct KoszulCycle {
  Vec degree;
  std::map<std::pair<std::size_t, std::size_t>, mpq_class> terms;

  /// Adds c * t^{element} oriented e_pq (e_qp = -e_pq).
  void add(std::size_t p, std::size_t q, const mpq_class& c);
  [[nodiscard]] bool is_zero() const { return terms.empty(); }
  /// t-exponent attached to e_ij.
  [[nodiscard]] Vec element(const Semigroup& s, std::size_t i, std::size_t j) const;
};

/// t^{a+a_k-a_i} e_ij - t^{a+a_j-a_i} e_ik + t^a e_jk, of degree a + a_j + a_k.
/// Requires a in Ap(S,a_i) and both displaced elements in S.
KoszulCycle construct_cycle_3i(const SemigroupRing& r, std::size_t i, std::size_t j, std::size_t k, const Vec& a);

/// t^{b+a2-a1} e13 + t^{b+a3-a4} e24 - t^b e23 - t^{b+a2+a3-a1-a4} e14 for the
/// permutation (i1, i2, i3, i4). Requires b in Ap(S,a_{i1}) ∩ Ap(S,a_{i4}) and
/// the three displaced elements in S.
KoszulCycle construct_cycle_4i(const SemigroupRing& r, const std::vector<std::size_t>& perm, const Vec& b);

/// phi_2(f) as a map from extremal generator index to coefficient.
std::map<std::size_t, mpq_class> apply_phi2(const SemigroupRing& r, const KoszulCycle& f);

/// Throws NotACycle unless phi_2(f) = 0. Then true iff f is outside Im phi_3.
bool verify_cycle_not_boundary(const SemigroupRing& r, const KoszulCycle& f);

}  // namespace sgdepth
