#include "sgdepth/koszul.hpp"

#include <algorithm>

namespace sgdepth {

namespace {

Vec face_sum(const Semigroup& s, Face f) {
  Vec out(s.dim(), 0);
  for (auto v : face_vertices(f)) out = out + s.gen(v);
  return out;
}

std::vector<Face> piece_basis(const SemigroupRing& r, std::size_t p, const Vec& b) {
  const Semigroup& s = r.semigroup();
  const auto ext = s.extremal();
  const std::size_t d = ext.size();
  std::vector<Face> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != p) continue;
    Face f = 0;
    for (std::size_t t = 0; t < d; ++t) {
      if (mask >> t & 1) f |= Face{1} << ext[t];
    }
    if (r.member(b - face_sum(s, f))) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t rank_of(const std::vector<std::vector<std::int64_t>>& m, const Field& field) {
  if (m.empty() || m.front().empty()) return 0;
  return field.rational ? rank_rational(m) : rank_mod_p(m, field.p);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::PreconditionFailed, what);
}

}  // namespace

KoszulPiece koszul_piece(const SemigroupRing& r, std::size_t p, const Vec& b) {
  if (!r.member(b)) throw Error(ErrorKind::NotInSemigroup, format_vec(b) + " is not in S");
  if (p > r.dim()) throw Error(ErrorKind::InvalidInput, "Koszul index exceeds d");
  KoszulPiece piece;
  piece.degree = b;
  piece.p = p;
  piece.basis = piece_basis(r, p, b);
  if (p == 0) return piece;
  const auto lower = piece_basis(r, p - 1, b);
  piece.boundary_out.assign(piece.basis.size(), std::vector<std::int64_t>(lower.size(), 0));
  for (std::size_t row = 0; row < piece.basis.size(); ++row) {
    // e_F -> sum over s in F of (-1)^{position of s} t^{a_s} e_{F \ s}
    int sign = 1;
    for (Face rest = piece.basis[row]; rest; rest &= rest - 1) {
      const Face bit = rest & -rest;
      const Face g = piece.basis[row] & ~bit;
      auto it = std::lower_bound(lower.begin(), lower.end(), g);
      if (it == lower.end() || *it != g) throw Error(ErrorKind::Mismatch, "Koszul face missing from lower piece");
      piece.boundary_out[row][static_cast<std::size_t>(it - lower.begin())] = sign;
      sign = -sign;
    }
  }
  return piece;
}

std::size_t koszul_homology_dim(const SemigroupRing& r, std::size_t p, const Vec& b, const Field& field) {
  const KoszulPiece here = koszul_piece(r, p, b);
  if (here.basis.empty()) return 0;
  const std::size_t out_rank = p == 0 ? 0 : rank_of(here.boundary_out, field);
  std::size_t in_rank = 0;
  if (p < r.dim()) in_rank = rank_of(koszul_piece(r, p + 1, b).boundary_out, field);
  return here.basis.size() - out_rank - in_rank;
}

void KoszulCycle::add(std::size_t p, std::size_t q, const mpq_class& c) {
  if (p == q) throw Error(ErrorKind::InvalidInput, "e_pp is zero");
  const auto key = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
  mpq_class& slot = terms[key];
  slot += p < q ? c : mpq_class(-c);
  if (slot == 0) terms.erase(key);
}

Vec KoszulCycle::element(const Semigroup& s, std::size_t i, std::size_t j) const { return degree - s.gen(i) - s.gen(j); }

KoszulCycle construct_cycle_3i(const SemigroupRing& r, std::size_t i, std::size_t j, std::size_t k, const Vec& a) {
  const Semigroup& s = r.semigroup();
  for (auto v : {i, j, k}) require(v < s.num_gens() && s.is_extremal(v), "3i indices must be extremal");
  require(i != j && j != k && i != k, "3i indices must be distinct");
  const std::vector<std::size_t> ai{i};
  require(r.in_apery(a, ai), format_vec(a) + " is not in Ap(S,a" + std::to_string(i + 1) + ")");
  require(r.member(a + s.gen(k) - s.gen(i)), "a + a_k - a_i is not in S");
  require(r.member(a + s.gen(j) - s.gen(i)), "a + a_j - a_i is not in S");
  KoszulCycle f;
  f.degree = a + s.gen(j) + s.gen(k);
  f.add(i, j, 1);
  f.add(i, k, -1);
  f.add(j, k, 1);
  return f;
}

KoszulCycle construct_cycle_4i(const SemigroupRing& r, const std::vector<std::size_t>& perm, const Vec& b) {
  const Semigroup& s = r.semigroup();
  require(perm.size() == 4, "4i needs four indices");
  for (auto v : perm) require(v < s.num_gens() && s.is_extremal(v), "4i indices must be extremal");
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "4i indices must be distinct");
  const Vec &a1 = s.gen(perm[0]), &a2 = s.gen(perm[1]), &a3 = s.gen(perm[2]), &a4 = s.gen(perm[3]);
  const std::vector<std::size_t> pair{perm[0], perm[3]};
  require(r.in_apery(b, pair), format_vec(b) + " is not in Ap(S,a_i1) ∩ Ap(S,a_i4)");
  require(r.member(b + a2 - a1), "b + a_i2 - a_i1 is not in S");
  require(r.member(b + a3 - a4), "b + a_i3 - a_i4 is not in S");
  require(r.member(b + a2 + a3 - a1 - a4), "b + a_i2 + a_i3 - a_i1 - a_i4 is not in S");
  KoszulCycle f;
  f.degree = b + a2 + a3;
  f.add(perm[0], perm[2], 1);
  f.add(perm[1], perm[3], 1);
  f.add(perm[1], perm[2], -1);
  f.add(perm[0], perm[3], -1);
  return f;
}

std::map<std::size_t, mpq_class> apply_phi2(const SemigroupRing& r, const KoszulCycle& f) {
  const Semigroup& s = r.semigroup();
  std::map<std::size_t, mpq_class> out;
  for (const auto& [pq, c] : f.terms) {
    const auto [p, q] = pq;
    const Vec coeff = f.element(s, p, q);
    if (!r.member(coeff)) throw Error(ErrorKind::NotACycle, "coefficient exponent " + format_vec(coeff) + " is not in S");
    // phi(e_pq) = t^{a_p} e_q - t^{a_q} e_p; all results lie in degree f.degree
    out[q] += c;
    out[p] -= c;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

bool verify_cycle_not_boundary(const SemigroupRing& r, const KoszulCycle& f) {
  if (!apply_phi2(r, f).empty()) throw Error(ErrorKind::NotACycle, "phi_2(f) is nonzero");
  if (f.is_zero()) return false;
  const KoszulPiece k2 = koszul_piece(r, 2, f.degree);
  const KoszulPiece k3 = koszul_piece(r, 3, f.degree);
  std::vector<mpz_class> target(k2.basis.size(), 0);
  mpz_class denom = 1;
  for (const auto& [pq, c] : f.terms) denom = lcm(denom, mpz_class(c.get_den()));
  for (const auto& [pq, c] : f.terms) {
    const Face g = (Face{1} << pq.first) | (Face{1} << pq.second);
    auto it = std::lower_bound(k2.basis.begin(), k2.basis.end(), g);
    if (it == k2.basis.end() || *it != g) throw Error(ErrorKind::NotACycle, "term outside the degree slice");
    mpq_class scaled_c = c * denom;
    target[static_cast<std::size_t>(it - k2.basis.begin())] = scaled_c.get_num();
  }
  if (k3.basis.empty()) return true;
  ZMatrix rows(k3.boundary_out.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (auto x : k3.boundary_out[i]) rows[i].emplace_back(static_cast<long>(x));
  }
  return !solve_row_combination(rows, target).has_value();
}

}  // namespace sgdepth
