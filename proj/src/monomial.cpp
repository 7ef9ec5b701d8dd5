#include "sgdepth/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgdepth/core.hpp"

namespace sgdepth {

Monomial::Monomial(const std::vector<std::int64_t>& exps) {
  if (exps.size() > kMaxVars) {
    throw Error(ErrorKind::InvalidInput, "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > INT32_MAX) throw Error(ErrorKind::InvalidInput, "exponent out of range");
    e[i] = static_cast<std::int32_t>(exps[i]);
  }
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

std::int64_t Monomial::total_degree() const {
  std::int64_t s = 0;
  for (auto x : e) s += x;
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] > other.e[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] != 0 && other.e[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] != 0) m |= 1u << i;
  }
  return m;
}

std::vector<std::int64_t> Monomial::to_vec(std::size_t nvars) const {
  return {e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nvars)};
}

std::string Monomial::to_string(std::size_t nvars) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    os << (any ? "*" : "") << 'x' << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

Monomial variable(std::size_t i, std::int32_t power) {
  Monomial m;
  m.e[i] = power;
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

void check_ranking(const std::vector<std::size_t>& ranking) {
  if (ranking.size() > kMaxVars) throw Error(ErrorKind::InvalidInput, "too many variables for a monomial order");
  std::vector<bool> seen(ranking.size(), false);
  for (auto v : ranking) {
    if (v >= ranking.size() || seen[v]) throw Error(ErrorKind::InvalidInput, "variable ranking is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

MonomialOrder MonomialOrder::weighted_revlex(std::vector<std::int64_t> weights, std::vector<std::size_t> ranking) {
  check_ranking(ranking);
  if (weights.size() != ranking.size()) throw Error(ErrorKind::InvalidInput, "weights and ranking differ in length");
  for (auto w : weights) {
    if (w <= 0) throw Error(ErrorKind::InvalidInput, "weights must be positive");
  }
  MonomialOrder o;
  o.kind_ = Kind::WeightedRevlex;
  o.weights_ = std::move(weights);
  o.ranking_ = std::move(ranking);
  return o;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> ranking) {
  check_ranking(ranking);
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.weights_.assign(ranking.size(), 1);
  o.ranking_ = std::move(ranking);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> block, const MonomialOrder& inner) {
  for (auto v : block) {
    if (v >= inner.nvars()) throw Error(ErrorKind::InvalidInput, "block variable out of range");
  }
  MonomialOrder o;
  o.kind_ = Kind::Elimination;
  o.weights_ = inner.weights_;
  o.ranking_ = inner.ranking_;
  std::sort(block.begin(), block.end());
  o.block_ = std::move(block);
  o.inner_.push_back(inner);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> ranking(nvars);
  for (std::size_t i = 0; i < nvars; ++i) ranking[i] = i;
  return weighted_revlex(std::vector<std::int64_t>(nvars, 1), std::move(ranking));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::WeightedRevlex: {
      std::int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        wa += weights_[i] * a.e[i];
        wb += weights_[i] * b.e[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
        if (a.e[*it] != b.e[*it]) return a.e[*it] > b.e[*it] ? -1 : 1;
      }
      return 0;
    }
    case Kind::Lex:
      for (auto v : ranking_) {
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
      }
      return 0;
    case Kind::Elimination: {
      std::int64_t da = 0, db = 0;
      for (auto v : block_) {
        da += a.e[v];
        db += b.e[v];
      }
      if (da != db) return da < db ? -1 : 1;
      return inner_.front().compare(a, b);
    }
  }
  return 0;
}

MonomialOrder MonomialOrder::with_extra_variable() const {
  const std::size_t n = nvars();
  if (n + 1 > kMaxVars) throw Error(ErrorKind::InvalidInput, "too many variables for a monomial order");
  MonomialOrder o = *this;
  o.weights_.push_back(1);
  o.ranking_.push_back(n);
  if (!o.inner_.empty()) o.inner_.front() = inner_.front().with_extra_variable();
  return o;
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  return a.kind_ == b.kind_ && a.weights_ == b.weights_ && a.ranking_ == b.ranking_ && a.block_ == b.block_ &&
         a.inner_ == b.inner_;
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  auto ranking_str = [&] {
    std::ostringstream r;
    for (std::size_t i = 0; i < ranking_.size(); ++i) r << (i ? ">" : "") << 'x' << ranking_[i] + 1;
    return r.str();
  };
  switch (kind_) {
    case Kind::WeightedRevlex:
      os << "wrevlex(w=[";
      for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
      os << "], " << ranking_str() << ')';
      break;
    case Kind::Lex:
      os << "lex(" << ranking_str() << ')';
      break;
    case Kind::Elimination:
      os << "elim({";
      for (std::size_t i = 0; i < block_.size(); ++i) os << (i ? "," : "") << 'x' << block_[i] + 1;
      os << "}, " << inner_.front().describe() << ')';
      break;
  }
  return os.str();
}

}  // namespace sgdepth
