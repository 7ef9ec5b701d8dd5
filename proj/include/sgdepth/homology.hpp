#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgdepth/complex.hpp"
#include "sgdepth/ring.hpp"

namespace sgdepth {

/// Delta_b: subsets F of A with b - sum(F) in S. Vertex pool = all generators.
SimplicialComplex delta_complex(const SemigroupRing& r, const Vec& b);
/// T_b: the same over the extremal generators only.
SimplicialComplex t_complex(const SemigroupRing& r, const Vec& b);

/// beta_{i,b} = dim H~_{i-1}(Delta_b).
std::size_t betti_number(const SemigroupRing& r, std::size_t i, const Vec& b, const Field& field = Field::rationals());

/// Degrees of the minimal generators of I_A, sorted by (1-norm, lex).
std::vector<Vec> betti_elements(const SemigroupRing& r);

/// Points of S with 1-norm at most `bound`, sorted by (1-norm, lex).
std::vector<Vec> semigroup_points(const SemigroupRing& r, std::int64_t bound);

/// Reduced homology of T_b for every b in a candidate set, and the derived
/// sets D(j) = {b : H~_j(T_b) != 0}.
struct DProfile {
  Field field;
  /// True when the candidates are the full join-closure of Ap(S,E) per
  /// coset, so that every D(j) is complete.
  bool certified = false;
  std::optional<std::int64_t> scan_bound;
  std::map<Vec, HomologyProfile> candidates;
  std::map<int, std::vector<Vec>> sets;

  [[nodiscard]] const std::vector<Vec>& D(int j) const;
  /// Largest j with D(j) nonempty (at least -1, since 0 lies in D(-1)).
  [[nodiscard]] int top() const;
};

/// Join-closure of Ap(S,E) inside each coset of the lattice spanned by E.
std::vector<Vec> koszul_support_candidates(const SemigroupRing& r);

DProfile certified_D(const SemigroupRing& r, const Field& field = Field::rationals());
DProfile scan_D_profile(const SemigroupRing& r, std::int64_t bound, const Field& field = Field::rationals());
std::vector<Vec> scan_D(const SemigroupRing& r, int j, std::int64_t bound, const Field& field = Field::rationals());

/// C_i = {b' + sum(F) : b' in D(j), F in A \ E, |F| = i - j}, sorted.
std::vector<Vec> build_C(const SemigroupRing& r, int i, const DProfile& d);

struct BettiEntry {
  std::size_t i = 0;
  Vec degree;
  std::size_t mult = 0;
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct GradedBettiTable {
  Field field;
  std::vector<BettiEntry> entries;  // sorted by (i, 1-norm, lex)
  bool certified = false;
  std::optional<std::int64_t> scan_bound;

  [[nodiscard]] std::size_t projective_dimension() const;
  [[nodiscard]] std::size_t total(std::size_t i) const;
  [[nodiscard]] std::vector<Vec> degrees(std::size_t i) const;
  [[nodiscard]] std::size_t at(std::size_t i, const Vec& b) const;
};

/// Without a bound the candidates are the sets C_i built from certified_D,
/// which is complete. With a bound every point of S up to that 1-norm is
/// examined instead and the table is marked heuristic. `threads` > 1
/// spreads the homology computations over a worker pool.
GradedBettiTable betti_table(const SemigroupRing& r, const Field& field = Field::rationals(),
                             std::optional<std::int64_t> scan_bound = std::nullopt, unsigned threads = 1);

struct LeftmostReport {
  Vec degree;
  /// degree - sum of the non-extremal generators.
  Vec displaced;
  int expected_j = 0;
  bool displaced_in_D = false;
  /// For depth d-1: subsets E' with displaced not in Ap(S,E') and
  /// displaced - sum(E \ E') in Ap(S,E'). Extremal positions, 0-based.
  std::vector<std::vector<std::size_t>> e_primes;
  struct Triple {
    std::size_t i, j, k;  // generator indices
    Vec c;
    bool c_maximal = false;
  };
  /// For d = 3, depth 2: all (i<j, k) with c = displaced - a_k in
  /// Ap(S,a_i) ∩ Ap(S,a_j) and c + a_k outside it.
  std::vector<Triple> triples;
};

LeftmostReport leftmost_betti_check(const SemigroupRing& r, int q, const Vec& b, const Field& field = Field::rationals());

enum class T4Shape { HollowTriangle, HollowTrianglePlusEdge, HollowTetraTwoMissing, SquarePlusDiagonal, Square,
                     TrianglePlusHollowTriangle, Other };
std::string to_string(T4Shape s);
/// Theorem-witness shapes are the first five.
bool is_witness_shape(T4Shape s);

struct T4Classification {
  T4Shape shape = T4Shape::Other;
  /// Generator indices (i, j, k, l) realising the shape; empty for Other.
  std::vector<std::size_t> labels;
};

/// Match a complex on four vertices against the shapes, trying every labelling.
T4Classification classify_T4(const SimplicialComplex& k, const std::vector<std::size_t>& vertices);
T4Classification classify_T4(const SemigroupRing& r, const Vec& c);

bool disconnected_with_isolated_vertex(const SimplicialComplex& k);
bool disconnected_with_isolated_vertex(const SemigroupRing& r, const Vec& b);

}  // namespace sgdepth
