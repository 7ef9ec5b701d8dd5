#include "sgdepth/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sgdepth {

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::RedundantGenerator: return "RedundantGenerator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::ConeMismatch: return "ConeMismatch";
    case ErrorKind::VoidComplex: return "VoidComplex";
    case ErrorKind::DimensionNot3: return "DimensionNot3";
    case ErrorKind::DimensionNot4: return "DimensionNot4";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::BoundExhausted: return "BoundExhausted";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec& a, std::int64_t k) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

std::int64_t norm1(const Vec& a) {
  std::int64_t s = 0;
  for (auto x : a) s += x < 0 ? -x : x;
  return s;
}

bool is_nonnegative(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 0; });
}

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

namespace {

constexpr std::int64_t kMaxEntry = std::int64_t{1} << 20;

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "entries too large for exact 64-bit cone coordinates");
  return z.get_si();
}

void check_dim(const Semigroup& s, const Vec& b) {
  if (b.size() != s.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected length " + std::to_string(s.dim()) + ", got " + std::to_string(b.size()));
  }
}

// Enumerates multipliers of the non-extremal generators; the extremal part is
// then forced, since E is a rational basis. visit returns true to stop.
template <class Visit>
bool search_factorizations(const Semigroup& s, const Vec& residual, std::size_t k,
                           std::vector<std::int64_t>& mult, Visit& visit) {
  const auto interior = s.non_extremal();
  const std::int64_t det = s.cone_det();
  if (k == interior.size()) {
    for (auto r : residual) {
      if (r % det != 0) return false;
    }
    return visit(mult, residual);
  }
  const Vec& w = s.gen_cone(interior[k]);
  std::int64_t tmax = INT64_MAX;
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (w[c] > 0) tmax = std::min(tmax, residual[c] / w[c]);
  }
  Vec next = residual;
  for (std::int64_t t = 0; t <= tmax; ++t) {
    mult[k] = t;
    if (search_factorizations(s, next, k + 1, mult, visit)) return true;
    for (std::size_t c = 0; c < w.size(); ++c) next[c] -= w[c];
  }
  mult[k] = 0;
  return false;
}

Factorization assemble(const Semigroup& s, const std::vector<std::int64_t>& mult, const Vec& residual) {
  Factorization f{Vec(s.num_gens(), 0)};
  const auto interior = s.non_extremal();
  for (std::size_t k = 0; k < interior.size(); ++k) f.multipliers[interior[k]] = mult[k];
  const auto ext = s.extremal();
  for (std::size_t c = 0; c < ext.size(); ++c) f.multipliers[ext[c]] = residual[c] / s.cone_det();
  return f;
}

bool generic_search(const std::vector<const Vec*>& gens, std::size_t k, Vec& residual) {
  if (std::all_of(residual.begin(), residual.end(), [](std::int64_t x) { return x == 0; })) return true;
  if (k == gens.size()) return false;
  const Vec& g = *gens[k];
  std::int64_t tmax = INT64_MAX;
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (g[c] > 0) tmax = std::min(tmax, residual[c] / g[c]);
  }
  if (k + 1 == gens.size()) {
    // last generator must finish the job exactly
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (residual[c] != tmax * g[c]) return false;
    }
    return true;
  }
  for (std::int64_t t = tmax; t >= 0; --t) {
    Vec next = residual;
    for (std::size_t c = 0; c < g.size(); ++c) next[c] -= t * g[c];
    if (generic_search(gens, k + 1, next)) return true;
  }
  return false;
}

}  // namespace

Vec Semigroup::cone_coords(const Vec& v) const {
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < dim_; ++j) acc += static_cast<__int128>(adj_[i][j]) * v[j];
    if (acc > INT64_MAX || acc < INT64_MIN) throw Error(ErrorKind::InvalidInput, "cone coordinate overflow");
    r[i] = static_cast<std::int64_t>(acc);
  }
  return r;
}

Vec Semigroup::degree(std::span<const std::int64_t> u) const {
  Vec b(dim_, 0);
  for (std::size_t i = 0; i < gens_.size() && i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) b[k] += u[i] * gens_[i][k];
  }
  return b;
}

std::vector<Vec> Semigroup::matrix_rows() const {
  std::vector<Vec> rows(dim_, Vec(gens_.size()));
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    for (std::size_t i = 0; i < dim_; ++i) rows[i][j] = gens_[j][i];
  }
  return rows;
}

bool member_generic(const std::vector<Vec>& gens, const Vec& b) {
  if (!is_nonnegative(b)) return false;
  std::vector<const Vec*> order;
  for (const auto& g : gens) {
    if (std::any_of(g.begin(), g.end(), [](std::int64_t x) { return x != 0; })) order.push_back(&g);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Vec* x, const Vec* y) { return norm1(*x) > norm1(*y); });
  Vec residual = b;
  return generic_search(order, 0, residual);
}

Semigroup validate_simplicial(const std::vector<Vec>& generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const std::size_t d = generators[0].size();
  if (d == 0) throw Error(ErrorKind::InvalidInput, "ambient dimension is zero");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.size() != d) throw Error(ErrorKind::DimensionMismatch, "generators have different lengths");
    for (auto x : g) {
      if (x < 0) throw Error(ErrorKind::InvalidInput, "generator " + format_vec(g) + " has a negative entry");
      if (x > kMaxEntry) throw Error(ErrorKind::InvalidInput, "generator entry exceeds 2^20");
    }
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) {
      throw Error(ErrorKind::InvalidInput, "zero generator");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[j] == g) throw Error(ErrorKind::InvalidInput, "duplicate generator " + format_vec(g));
    }
  }
  const std::size_t e = generators.size();

  ZMatrix rows(d, std::vector<mpz_class>(e));
  for (std::size_t j = 0; j < e; ++j) {
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = static_cast<long>(generators[j][i]);
  }
  if (rank_rational(rows) < d) throw Error(ErrorKind::RankDeficient, "generators span a sublattice of rank < d");

  for (std::size_t i = 0; i < e; ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < e; ++j) {
      if (j != i) others.push_back(generators[j]);
    }
    if (member_generic(others, generators[i])) {
      throw Error(ErrorKind::RedundantGenerator, format_vec(generators[i]) + " is a sum of other generators");
    }
  }

  // every d-subset that is a basis with all generators in its nonnegative span
  std::vector<std::size_t> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  struct Candidate {
    std::vector<std::size_t> subset;
    ZMatrix adj;
    mpz_class det;
  };
  std::vector<Candidate> valid;
  while (true) {
    ZMatrix basis(d, std::vector<mpz_class>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) basis[i][j] = static_cast<long>(generators[pick[j]][i]);
    }
    mpz_class det = determinant(basis);
    if (det != 0) {
      ZMatrix adj = adjugate(basis);
      if (det < 0) {
        det = -det;
        for (auto& r : adj) {
          for (auto& x : r) x = -x;
        }
      }
      bool inside = true;
      for (std::size_t g = 0; g < e && inside; ++g) {
        for (std::size_t i = 0; i < d && inside; ++i) {
          mpz_class acc = 0;
          for (std::size_t j = 0; j < d; ++j) acc += adj[i][j] * static_cast<long>(generators[g][j]);
          if (acc < 0) inside = false;
        }
      }
      if (inside) valid.push_back({pick, std::move(adj), det});
    }
    // next combination
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == e - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (valid.empty()) throw Error(ErrorKind::NotSimplicial, "the cone has more than d extremal rays");

  auto smallest_on_rays = [&](const Candidate& c) {
    for (std::size_t pos = 0; pos < d; ++pos) {
      const Vec& m = generators[c.subset[pos]];
      for (std::size_t g = 0; g < e; ++g) {
        // g lies on the ray of m iff its cone coordinates vanish off pos
        bool on_ray = true;
        for (std::size_t i = 0; i < d && on_ray; ++i) {
          if (i == pos) continue;
          mpz_class acc = 0;
          for (std::size_t j = 0; j < d; ++j) acc += c.adj[i][j] * static_cast<long>(generators[g][j]);
          if (acc != 0) on_ray = false;
        }
        if (!on_ray) continue;
        for (std::size_t k = 0; k < d; ++k) {
          if (m[k] > generators[g][k]) return false;
        }
      }
    }
    return true;
  };
  const Candidate* chosen = nullptr;
  for (const auto& c : valid) {
    if (smallest_on_rays(c)) {
      chosen = &c;
      break;
    }
  }
  if (chosen == nullptr) chosen = &valid.front();

  Semigroup s;
  s.dim_ = d;
  s.gens_ = generators;
  s.extremal_ = chosen->subset;
  s.extremal_pos_.assign(e, -1);
  for (std::size_t pos = 0; pos < d; ++pos) s.extremal_pos_[s.extremal_[pos]] = static_cast<int>(pos);
  s.det_ = to_i64(chosen->det);
  s.adj_.assign(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) s.adj_[i][j] = to_i64(chosen->adj[i][j]);
  }
  for (std::size_t g = 0; g < e; ++g) {
    if (!s.is_extremal(g)) s.interior_.push_back(g);
  }
  std::stable_sort(s.interior_.begin(), s.interior_.end(), [&](std::size_t x, std::size_t y) {
    return norm1(generators[x]) > norm1(generators[y]);
  });
  for (const auto& g : generators) s.gen_cone_.push_back(s.cone_coords(g));
  return s;
}

Semigroup semigroup_from_rows(const std::vector<Vec>& rows) {
  if (rows.empty() || rows[0].empty()) throw Error(ErrorKind::InvalidInput, "empty matrix");
  const std::size_t e = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != e) throw Error(ErrorKind::InvalidInput, "ragged matrix");
  }
  std::vector<Vec> gens(e, Vec(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < e; ++j) gens[j][i] = rows[i][j];
  }
  return validate_simplicial(gens);
}

namespace {

template <class Visit>
void run_search(const Semigroup& s, const SElement& b, Visit visit) {
  check_dim(s, b);
  if (!is_nonnegative(b)) return;
  Vec residual = s.cone_coords(b);
  if (!is_nonnegative(residual)) return;
  std::vector<std::int64_t> mult(s.non_extremal().size(), 0);
  search_factorizations(s, residual, 0, mult, visit);
}

}  // namespace

bool member(const Semigroup& s, const SElement& b) {
  bool found = false;
  run_search(s, b, [&](const auto&, const auto&) { return found = true; });
  return found;
}

std::optional<Factorization> find_factorization(const Semigroup& s, const SElement& b) {
  std::optional<Factorization> out;
  run_search(s, b, [&](const auto& mult, const auto& residual) {
    out = assemble(s, mult, residual);
    return true;
  });
  return out;
}

std::vector<Factorization> factorizations(const Semigroup& s, const SElement& b) {
  std::vector<Factorization> out;
  run_search(s, b, [&](const auto& mult, const auto& residual) {
    out.push_back(assemble(s, mult, residual));
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool precedes(const Semigroup& s, const SElement& a, const SElement& b) {
  check_dim(s, a);
  check_dim(s, b);
  Vec diff = b - a;
  return is_nonnegative(diff) && member(s, diff);
}

bool in_lattice(const Vec& v, const std::vector<Vec>& basis) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  return Lattice(basis, v.size()).contains(v);
}

MemberFn direct_member(const Semigroup& s) {
  return [&s](const SElement& b) { return member(s, b); };
}

}  // namespace sgdepth
