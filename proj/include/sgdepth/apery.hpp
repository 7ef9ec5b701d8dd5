#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgdepth/grobner.hpp"
#include "sgdepth/polynomial_gb.hpp"
#include "sgdepth/ring.hpp"

namespace sgdepth {

/// Complete finite Apéry set Ap(S, B). Throws ConeMismatch unless every
/// extremal ray of S carries an element of B.
std::vector<Vec> apery_finite(const SemigroupRing& r, const std::vector<Vec>& b);

/// Initial ideal of I_A + <x_i : i in delta>. Its standard monomials in the
/// remaining variables are in bijection with the intersection of the Ap(S, a_i).
MonomialIdeal apery_Q_model(const SemigroupRing& r, const std::vector<std::size_t>& delta);

/// Variables not in delta, ascending.
std::vector<std::size_t> complement_vars(const SemigroupRing& r, const std::vector<std::size_t>& delta);

/// Standard monomials of the Q-model paired with their images, up to the
/// box 2 * max(generator exponent, 1) per variable (or `box` when given).
std::vector<std::pair<Monomial, Vec>> apery_elements_in_box(const SemigroupRing& r,
                                                            const std::vector<std::size_t>& delta,
                                                            std::optional<std::int32_t> box = std::nullopt);

enum class WitnessKind { Maximal, Member, None };
std::string to_string(WitnessKind k);

struct AperyWitness {
  std::vector<std::size_t> delta;
  WitnessKind kind = WitnessKind::None;
  Vec element;
  Factorization factorization;
  /// Every maximal element, sorted by (1-norm, lex).
  std::vector<Vec> all_maximal;
  /// Outcome of the independent local test: some b in the box with
  /// b + a_j outside Ap(S, E') for every extremal j outside E'.
  bool local_found = false;
  std::optional<Vec> local_witness;
  [[nodiscard]] bool routes_agree() const { return local_found == (kind == WitnessKind::Maximal); }
};

/// Componentwise maximum of the cone coordinates (times det) over Ap(S,E).
/// Every maximal element of Ap(S,E') with E' inside E lies below it.
Vec apery_join_bound(const SemigroupRing& r);

/// Standard monomials of the Q-model whose images lie below apery_join_bound,
/// sorted by image.
std::vector<std::pair<Monomial, Vec>> maximal_candidates(const SemigroupRing& r, const std::vector<std::size_t>& delta);

/// Maximal elements are the candidates x^u with x_v x^u in I_A + <x_delta>
/// for every other variable. The local route walks Ap(S,E') by membership
/// alone and applies the local criterion.
AperyWitness has_maximal_element(const SemigroupRing& r, const std::vector<std::size_t>& delta);

/// b in Ap(S,E') and, for every extremal j outside E', b + a_j - a_i in S for some i in E'.
bool local_maximality(const SemigroupRing& r, const Vec& b, const std::vector<std::size_t>& delta);

/// Direct check that b is maximal in Ap(S, E'): b in the set and b + a_k
/// outside it for every generator a_k.
bool is_maximal_direct(const SemigroupRing& r, const Vec& b, const std::vector<std::size_t>& delta);

struct CMResult {
  bool cohen_macaulay = false;
  std::size_t apery_size = 0;
  std::optional<std::pair<Vec, Vec>> counterexample;
};
CMResult is_cohen_macaulay(const SemigroupRing& r);

struct ZeroDivisorResult {
  bool zero_divisor = false;
  std::optional<Vec> witness;
};
/// Is x_j a zero-divisor modulo I_A + <x_i>?
ZeroDivisorResult is_zero_divisor(const SemigroupRing& r, std::size_t j, std::size_t i);

struct RegularPairResult {
  bool regular = false;
  /// Lattice criterion evaluated on the box enumeration of Ap(S,a_i) ∩ Ap(S,a_j).
  bool criterion_holds = false;
  std::size_t box_elements = 0;
  [[nodiscard]] bool agree() const { return !regular || criterion_holds; }
};
RegularPairResult is_regular_pair(const SemigroupRing& r, std::size_t i, std::size_t j);

struct RegularSequenceResult {
  bool regular = false;
  /// Index of the first element that is a zero-divisor, if any.
  std::optional<std::size_t> failed_at;
};
/// Checks f_1, ..., f_m sequentially: (J_k : f_{k+1}) = J_k with J_0 = I_A.
RegularSequenceResult regular_sequence_check(const SemigroupRing& r, const std::vector<Polynomial>& polys);

/// Linear form sum c_v x_v over the ring's variables.
Polynomial linear_form(const SemigroupRing& r, const std::vector<std::pair<std::size_t, int>>& coeffs);

struct DifferenceCheck {
  bool applies = false;  // x_j and x_k are both zero-divisors mod I + <x_i>
  bool nonzero_divisor = false;
};
/// For d = 3 and {i,j,k} = E: when x_j and x_k are both zero-divisors mod
/// I + <x_i>, is x_j - x_k a nonzero-divisor there?
DifferenceCheck difference_nonzero_divisor(const SemigroupRing& r, std::size_t i, std::size_t j, std::size_t k);

}  // namespace sgdepth
