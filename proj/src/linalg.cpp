#include "sgdepth/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sgdepth {

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row-reduce the first `cols` columns of `m` with unimodular row operations
// into echelon form. Returns pivot columns; rows beyond the pivot count have
// zeros in those columns.
std::vector<std::size_t> echelonize(ZMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        if (best == m.size() || abs(m[i][c]) < abs(m[best][c])) best = i;
      }
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        mpz_class q = floor_div(m[i][c], m[r][c]);
        for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < m.size() && m[r][c] != 0) {
      if (m[r][c] < 0) {
        for (auto& x : m[r]) x = -x;
      }
      pivots.push_back(c);
      ++r;
    }
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> gram_schmidt(const ZMatrix& b, std::vector<mpq_class>& norms,
                                                 std::vector<std::vector<mpq_class>>& mu) {
  const std::size_t n = b.size();
  const std::size_t m = n == 0 ? 0 : b[0].size();
  std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(m));
  mu.assign(n, std::vector<mpq_class>(n));
  norms.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) star[i][k] = b[i][k];
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class dot = 0;
      for (std::size_t k = 0; k < m; ++k) dot += mpq_class(b[i][k]) * star[j][k];
      mu[i][j] = norms[j] == 0 ? mpq_class(0) : mpq_class(dot / norms[j]);
      for (std::size_t k = 0; k < m; ++k) star[i][k] -= mu[i][j] * star[j][k];
    }
    for (std::size_t k = 0; k < m; ++k) norms[i] += star[i][k] * star[i][k];
  }
  return star;
}

mpz_class round_nearest(const mpq_class& q) {
  mpq_class shifted = q + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

// Textbook LLL with delta = 3/4; dimensions here are tiny so Gram-Schmidt is
// recomputed after every swap.
void lll_reduce(ZMatrix& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  std::vector<mpq_class> norms;
  std::vector<std::vector<mpq_class>> mu;
  gram_schmidt(b, norms, mu);
  std::size_t k = 1;
  const mpq_class delta(3, 4);
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      mpz_class q = round_nearest(mu[k][jj]);
      if (q != 0) {
        for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[jj][t];
        gram_schmidt(b, norms, mu);
      }
    }
    if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt(b, norms, mu);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

struct Overflow {};

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

std::size_t bareiss_rank_i64(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::int64_t prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t piv = k;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 num = static_cast<__int128>(m[i][j]) * m[k][c] -
                       static_cast<__int128>(m[i][c]) * m[k][j];
        m[i][j] = checked(num / prev);
      }
      m[i][c] = 0;
    }
    prev = m[k][c];
    ++k;
  }
  return k;
}

}  // namespace

ZMatrix to_zmatrix(const std::vector<Vec>& rows) {
  ZMatrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<mpz_class> z;
    z.reserve(r.size());
    for (auto x : r) z.emplace_back(static_cast<long>(x));
    out.push_back(std::move(z));
  }
  return out;
}

ZMatrix hermite_normal_form(const ZMatrix& rows) {
  ZMatrix m = rows;
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  auto pivots = echelonize(m, cols);
  m.resize(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t c = pivots[r];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(m[i][c], m[r][c]);
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
  }
  return m;
}

Lattice::Lattice(const std::vector<Vec>& generators, std::size_t ambient_dim)
    : dim_(ambient_dim) {
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("lattice generator has wrong length");
  }
  hnf_ = hermite_normal_form(to_zmatrix(generators));
  for (const auto& row : hnf_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots_.push_back(c);
  }
}

bool Lattice::contains(const Vec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector has wrong length");
  std::vector<mpz_class> r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(static_cast<long>(x));
  for (std::size_t i = 0; i < hnf_.size(); ++i) {
    const std::size_t c = pivots_[i];
    // columns before this pivot must already be clear
    for (std::size_t j = (i == 0 ? 0 : pivots_[i - 1] + 1); j < c; ++j) {
      if (r[j] != 0) return false;
    }
    if (r[c] % hnf_[i][c] != 0) return false;
    mpz_class q = r[c] / hnf_[i][c];
    for (std::size_t j = c; j < dim_; ++j) r[j] -= q * hnf_[i][j];
  }
  return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
}

Vec Lattice::reduce(const Vec& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector has wrong length");
  std::vector<mpz_class> r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(static_cast<long>(x));
  for (std::size_t i = 0; i < hnf_.size(); ++i) {
    const std::size_t c = pivots_[i];
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r[c].get_mpz_t(), hnf_[i][c].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = c; j < dim_; ++j) r[j] -= q * hnf_[i][j];
  }
  Vec out(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!r[j].fits_slong_p()) throw std::overflow_error("lattice representative does not fit in 64 bits");
    out[j] = r[j].get_si();
  }
  return out;
}

std::vector<Vec> integer_kernel_basis(const std::vector<Vec>& rows, std::size_t num_cols) {
  const std::size_t d = rows.size();
  ZMatrix m(num_cols, std::vector<mpz_class>(d + num_cols));
  for (std::size_t j = 0; j < num_cols; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[j][i] = static_cast<long>(rows[i][j]);
    m[j][d + j] = 1;
  }
  auto pivots = echelonize(m, d);
  ZMatrix kernel;
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    kernel.emplace_back(m[r].begin() + static_cast<std::ptrdiff_t>(d), m[r].end());
  }
  lll_reduce(kernel);
  std::vector<Vec> out;
  for (const auto& k : kernel) {
    Vec v;
    for (const auto& x : k) {
      if (!x.fits_slong_p()) throw std::overflow_error("kernel vector entry exceeds 64 bits");
      v.push_back(x.get_si());
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_rational(ZMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  mpz_class prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t piv = k;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[k][c] - m[i][c] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[k][c];
    ++k;
  }
  return k;
}

std::size_t rank_rational(std::vector<std::vector<std::int64_t>> m) {
  try {
    return bareiss_rank_i64(m);
  } catch (const Overflow&) {
    ZMatrix z(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (auto x : m[i]) z[i].emplace_back(static_cast<long>(x));
    }
    return rank_rational(std::move(z));
  }
}

std::size_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& in, std::uint64_t p) {
  const std::size_t rows = in.size();
  if (rows == 0) return 0;
  const std::size_t cols = in[0].size();
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t x = in[i][j] % static_cast<std::int64_t>(p);
      m[i][j] = static_cast<std::uint64_t>(x < 0 ? x + static_cast<std::int64_t>(p) : x);
    }
  }
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t piv = k;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[k]);
    const std::uint64_t inv = powmod(m[k][c], p - 2);
    for (std::size_t i = k + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mulmod(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] + p - mulmod(f, m[k][j])) % p;
      }
    }
    ++k;
  }
  return k;
}

mpz_class determinant(const ZMatrix& in) {
  const std::size_t n = in.size();
  if (n == 0) return 1;
  ZMatrix m = in;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

ZMatrix adjugate(const ZMatrix& m) {
  const std::size_t n = m.size();
  ZMatrix adj(n, std::vector<mpz_class>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ZMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<mpz_class> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      mpz_class cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof;
    }
  }
  return adj;
}

std::optional<std::vector<mpq_class>> solve_row_combination(const ZMatrix& rows,
                                                            const std::vector<mpz_class>& v) {
  const std::size_t n = rows.size();
  const std::size_t m = v.size();
  // augmented system: m equations, n unknowns
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + 1));
  for (std::size_t eq = 0; eq < m; ++eq) {
    for (std::size_t i = 0; i < n; ++i) a[eq][i] = rows[i][eq];
    a[eq][n] = v[eq];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    const mpq_class inv = 1 / a[r][c];
    for (std::size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (a[i][n] != 0) return std::nullopt;
  }
  std::vector<mpq_class> x(n, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][n];
  return x;
}

}  // namespace sgdepth
