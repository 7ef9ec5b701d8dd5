#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgdepth/linalg.hpp"

namespace sgdepth {

enum class ErrorKind {
  InvalidInput,
  NotSimplicial,
  RankDeficient,
  RedundantGenerator,
  DimensionMismatch,
  NotInSemigroup,
  ConeMismatch,
  VoidComplex,
  DimensionNot3,
  DimensionNot4,
  NotACycle,
  PreconditionFailed,
  NonDivisible,
  BoundExhausted,
  GenerationExhausted,
  Mismatch,
};

std::string to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}
  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Element of N^d (or a difference of two such elements).
using SElement = Vec;

struct Factorization {
  Vec multipliers;
  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, std::int64_t k);
std::int64_t norm1(const Vec& a);
bool is_nonnegative(const Vec& a);
std::string format_vec(const Vec& v);

/// Validated simplicial affine semigroup. Immutable once built; obtain one
/// through validate_simplicial().
class Semigroup {
 public:
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t num_gens() const { return gens_.size(); }
  [[nodiscard]] const Vec& gen(std::size_t i) const { return gens_[i]; }
  [[nodiscard]] const std::vector<Vec>& generators() const { return gens_; }
  /// Indices (into generators()) of the extremal generators E, ascending.
  [[nodiscard]] std::span<const std::size_t> extremal() const { return extremal_; }
  [[nodiscard]] bool is_extremal(std::size_t i) const { return extremal_pos_[i] >= 0; }
  /// Position of generator i inside extremal(), or -1.
  [[nodiscard]] int extremal_position(std::size_t i) const { return extremal_pos_[i]; }
  [[nodiscard]] std::span<const std::size_t> non_extremal() const { return interior_; }

  /// det * (coordinates of v in the basis E); det > 0. Exact for integer v.
  [[nodiscard]] Vec cone_coords(const Vec& v) const;
  [[nodiscard]] std::int64_t cone_det() const { return det_; }
  /// cone_coords(gen(i)), precomputed.
  [[nodiscard]] const Vec& gen_cone(std::size_t i) const { return gen_cone_[i]; }

  /// A * u.
  [[nodiscard]] Vec degree(std::span<const std::int64_t> u) const;

  /// d x e matrix, one row per coordinate.
  [[nodiscard]] std::vector<Vec> matrix_rows() const;

  friend Semigroup validate_simplicial(const std::vector<Vec>& generators);

 private:
  Semigroup() = default;
  std::size_t dim_ = 0;
  std::vector<Vec> gens_;
  std::vector<std::size_t> extremal_;
  std::vector<std::size_t> interior_;  // non-extremal, descending 1-norm
  std::vector<int> extremal_pos_;
  std::vector<Vec> adj_;  // adjugate of E (columns = extremal gens), sign-normalised
  std::int64_t det_ = 1;
  std::vector<Vec> gen_cone_;  // cone_coords of every generator
};

/// Detect the extremal rays and reject non-simplicial or redundant input.
Semigroup validate_simplicial(const std::vector<Vec>& generators);

/// Build from a d x e matrix (generators are the columns).
Semigroup semigroup_from_rows(const std::vector<Vec>& rows);

bool member(const Semigroup& s, const SElement& b);
std::vector<Factorization> factorizations(const Semigroup& s, const SElement& b);
/// One factorization if b is in S.
std::optional<Factorization> find_factorization(const Semigroup& s, const SElement& b);
bool precedes(const Semigroup& s, const SElement& a, const SElement& b);
bool in_lattice(const Vec& v, const std::vector<Vec>& basis);

/// Membership in the monoid generated by an arbitrary finite list of vectors
/// of N^d; plain branch-and-bound over all generators.
bool member_generic(const std::vector<Vec>& gens, const Vec& b);

/// Membership predicate, so that scans can substitute a precomputed point set.
using MemberFn = std::function<bool(const SElement&)>;
MemberFn direct_member(const Semigroup& s);

}  // namespace sgdepth
