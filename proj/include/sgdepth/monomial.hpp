#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sgdepth {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with a fixed capacity; unused slots stay zero so that
/// comparisons and hashing can ignore the number of variables.
struct Monomial {
  std::array<std::int32_t, kMaxVars> e{};

  Monomial() = default;
  explicit Monomial(const std::vector<std::int64_t>& exps);

  std::int32_t& operator[](std::size_t i) { return e[i]; }
  std::int32_t operator[](std::size_t i) const { return e[i]; }

  [[nodiscard]] bool is_one() const;
  [[nodiscard]] std::int64_t total_degree() const;
  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] bool coprime(const Monomial& other) const;
  /// Bit i set iff x_i occurs.
  [[nodiscard]] std::uint32_t support_mask() const;
  [[nodiscard]] std::vector<std::int64_t> to_vec(std::size_t nvars) const;
  [[nodiscard]] std::string to_string(std::size_t nvars) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial variable(std::size_t i, std::int32_t power = 1);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Lexicographic comparison of raw exponent arrays; used only for
/// deterministic tie-breaking in containers, never as a term order.
struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
};

class MonomialOrder {
 public:
  enum class Kind { WeightedRevlex, Lex, Elimination };

  /// Compare weighted degree first, then reverse lexicographically: among
  /// the variables ranked from least upward, the first one where the
  /// exponents differ decides, and the smaller exponent wins.
  /// `ranking` lists variables from greatest to least.
  static MonomialOrder weighted_revlex(std::vector<std::int64_t> weights, std::vector<std::size_t> ranking);
  static MonomialOrder lex(std::vector<std::size_t> ranking);
  /// Block order: total degree in `block` first, then `inner`.
  static MonomialOrder elimination(std::vector<std::size_t> block, const MonomialOrder& inner);

  /// Plain degree revlex with x_0 > x_1 > ... > x_{n-1}.
  static MonomialOrder grevlex(std::size_t nvars);

  [[nodiscard]] int compare(const Monomial& a, const Monomial& b) const;
  [[nodiscard]] bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  [[nodiscard]] std::size_t nvars() const { return ranking_.size(); }
  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::vector<std::int64_t>& weights() const { return weights_; }
  [[nodiscard]] const std::vector<std::size_t>& ranking() const { return ranking_; }
  [[nodiscard]] const std::vector<std::size_t>& block() const { return block_; }
  [[nodiscard]] std::string describe() const;

  /// Same order with one extra variable appended (ranked least, weight 1).
  [[nodiscard]] MonomialOrder with_extra_variable() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  Kind kind_ = Kind::WeightedRevlex;
  std::vector<std::int64_t> weights_;
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> block_;
  std::vector<MonomialOrder> inner_;  // holds at most one element
};

}  // namespace sgdepth
