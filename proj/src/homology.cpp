#include "sgdepth/homology.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

#include "sgdepth/apery.hpp"
#include "sgdepth/detail/parallel.hpp"

namespace sgdepth {

namespace {

Face generator_mask(const std::vector<std::size_t>& idx) { return face_of(idx); }

Vec face_sum(const Semigroup& s, Face f) {
  Vec out(s.dim(), 0);
  for (auto v : face_vertices(f)) out = out + s.gen(v);
  return out;
}

SimplicialComplex subtraction_complex(const SemigroupRing& r, const Vec& b, Face pool) {
  if (b.size() != r.dim()) throw Error(ErrorKind::DimensionMismatch, "degree has the wrong length");
  if (!r.member(b)) throw Error(ErrorKind::NotInSemigroup, format_vec(b) + " is not in S");
  const Semigroup& s = r.semigroup();
  return SimplicialComplex::from_predicate(pool, [&](Face f) { return r.member(b - face_sum(s, f)); });
}

std::vector<Vec> sorted(std::set<Vec> in) {
  std::vector<Vec> out(in.begin(), in.end());
  std::sort(out.begin(), out.end(), norm_lex_less);
  return out;
}

void fill_sets(DProfile& p) {
  for (const auto& [b, h] : p.candidates) {
    for (auto [j, n] : h.dims) p.sets[j].push_back(b);
  }
  for (auto& [j, v] : p.sets) std::sort(v.begin(), v.end(), norm_lex_less);
}

DProfile profile_of(const SemigroupRing& r, const std::vector<Vec>& cands, const Field& field) {
  DProfile p;
  p.field = field;
  for (const auto& b : cands) p.candidates.emplace(b, reduced_homology(t_complex(r, b), field));
  fill_sets(p);
  return p;
}

}  // namespace

SimplicialComplex delta_complex(const SemigroupRing& r, const Vec& b) {
  std::vector<std::size_t> all(r.num_gens());
  std::iota(all.begin(), all.end(), 0);
  return subtraction_complex(r, b, generator_mask(all));
}

SimplicialComplex t_complex(const SemigroupRing& r, const Vec& b) {
  const auto ext = r.semigroup().extremal();
  return subtraction_complex(r, b, generator_mask({ext.begin(), ext.end()}));
}

std::size_t betti_number(const SemigroupRing& r, std::size_t i, const Vec& b, const Field& field) {
  return reduced_homology_dim(delta_complex(r, b), static_cast<int>(i) - 1, field);
}

std::vector<Vec> betti_elements(const SemigroupRing& r) {
  std::set<Vec> cands;
  for (const auto& g : r.toric().elements) cands.insert(monomial_degree(r.semigroup(), g.lead));
  std::set<Vec> out;
  for (const auto& b : cands) {
    if (betti_number(r, 1, b) != 0) out.insert(b);
  }
  return sorted(std::move(out));
}

std::vector<Vec> semigroup_points(const SemigroupRing& r, std::int64_t bound) {
  const Semigroup& s = r.semigroup();
  std::set<Vec> seen{Vec(s.dim(), 0)};
  std::deque<Vec> todo{Vec(s.dim(), 0)};
  while (!todo.empty()) {
    Vec c = todo.front();
    todo.pop_front();
    for (const auto& g : s.generators()) {
      Vec n = c + g;
      if (norm1(n) <= bound && seen.insert(n).second) todo.push_back(std::move(n));
    }
  }
  return sorted(std::move(seen));
}

const std::vector<Vec>& DProfile::D(int j) const {
  static const std::vector<Vec> empty;
  auto it = sets.find(j);
  return it == sets.end() ? empty : it->second;
}

int DProfile::top() const { return sets.empty() ? -1 : sets.rbegin()->first; }

std::vector<Vec> koszul_support_candidates(const SemigroupRing& r) {
  const Semigroup& s = r.semigroup();
  const auto ext = s.extremal();
  std::vector<Vec> basis;
  for (auto i : ext) basis.push_back(s.gen(i));
  const Lattice lat(basis, s.dim());
  std::map<Vec, std::vector<Vec>> cosets;
  for (const auto& a : r.apery_extremal()) cosets[lat.reduce(a)].push_back(a);

  const std::int64_t det = s.cone_det();
  std::set<Vec> out;
  for (const auto& [key, elems] : cosets) {
    std::vector<Vec> coords;
    for (const auto& a : elems) coords.push_back(s.cone_coords(a));
    std::set<Vec> closed(coords.begin(), coords.end());
    std::vector<Vec> frontier(coords.begin(), coords.end());
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& x : frontier) {
        for (const auto& g : coords) {
          Vec m(x.size());
          for (std::size_t k = 0; k < x.size(); ++k) m[k] = std::max(x[k], g[k]);
          if (closed.insert(m).second) next.push_back(std::move(m));
        }
      }
      frontier = std::move(next);
    }
    const Vec& c0 = elems.front();
    const Vec& w0 = coords.front();
    for (const auto& m : closed) {
      Vec b = c0;
      for (std::size_t k = 0; k < m.size(); ++k) {
        const std::int64_t diff = m[k] - w0[k];
        if (diff % det != 0) throw Error(ErrorKind::Mismatch, "join left the coset of the extremal lattice");
        b = b + scaled(s.gen(ext[k]), diff / det);
      }
      out.insert(std::move(b));
    }
  }
  return sorted(std::move(out));
}

DProfile certified_D(const SemigroupRing& r, const Field& field) {
  DProfile p = profile_of(r, koszul_support_candidates(r), field);
  p.certified = true;
  return p;
}

DProfile scan_D_profile(const SemigroupRing& r, std::int64_t bound, const Field& field) {
  DProfile p = profile_of(r, semigroup_points(r, bound), field);
  p.scan_bound = bound;
  return p;
}

std::vector<Vec> scan_D(const SemigroupRing& r, int j, std::int64_t bound, const Field& field) {
  if (j < -1) throw Error(ErrorKind::InvalidInput, "D(j) needs j >= -1");
  return scan_D_profile(r, bound, field).D(j);
}

std::vector<Vec> build_C(const SemigroupRing& r, int i, const DProfile& d) {
  const Semigroup& s = r.semigroup();
  const auto inner = s.non_extremal();
  std::vector<std::size_t> pool(inner.begin(), inner.end());
  const std::size_t m = pool.size();
  std::set<Vec> out;
  for (int j = -1; j <= i; ++j) {
    const auto need = static_cast<std::size_t>(i - j);
    if (need > m) continue;
    const auto& dj = d.D(j);
    if (dj.empty()) continue;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != need) continue;
      Vec shift(s.dim(), 0);
      for (std::size_t t = 0; t < m; ++t) {
        if (mask >> t & 1) shift = shift + s.gen(pool[t]);
      }
      for (const auto& b : dj) out.insert(b + shift);
    }
  }
  return sorted(std::move(out));
}

std::size_t GradedBettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto& e : entries) pd = std::max(pd, e.i);
  return pd;
}

std::size_t GradedBettiTable::total(std::size_t i) const {
  std::size_t t = 0;
  for (const auto& e : entries) {
    if (e.i == i) t += e.mult;
  }
  return t;
}

std::vector<Vec> GradedBettiTable::degrees(std::size_t i) const {
  std::vector<Vec> out;
  for (const auto& e : entries) {
    if (e.i == i) out.push_back(e.degree);
  }
  return out;
}

std::size_t GradedBettiTable::at(std::size_t i, const Vec& b) const {
  for (const auto& e : entries) {
    if (e.i == i && e.degree == b) return e.mult;
  }
  return 0;
}

GradedBettiTable betti_table(const SemigroupRing& r, const Field& field, std::optional<std::int64_t> scan_bound,
                             unsigned threads) {
  GradedBettiTable t;
  t.field = field;
  const std::size_t e = r.num_gens();
  std::vector<Vec> cands;
  std::vector<std::set<Vec>> c_sets;
  if (scan_bound) {
    t.scan_bound = scan_bound;
    cands = semigroup_points(r, *scan_bound);
  } else {
    t.certified = true;
    const DProfile d = certified_D(r, field);
    std::set<Vec> all;
    for (std::size_t i = 0; i + 1 <= e; ++i) {
      auto ci = build_C(r, static_cast<int>(i), d);
      all.insert(ci.begin(), ci.end());
      c_sets.emplace_back(ci.begin(), ci.end());
    }
    cands = sorted(std::move(all));
  }

  std::vector<HomologyProfile> prof(cands.size());
  detail::parallel_for(cands.size(), threads,
                       [&](std::size_t k) { prof[k] = reduced_homology(delta_complex(r, cands[k]), field); });

  t.entries.push_back({0, Vec(r.dim(), 0), 1});
  for (std::size_t k = 0; k < cands.size(); ++k) {
    for (auto [j, n] : prof[k].dims) {
      if (j < 0) continue;
      const auto i = static_cast<std::size_t>(j);
      if (!c_sets.empty() && (i >= c_sets.size() || c_sets[i].count(cands[k]) == 0)) {
        throw Error(ErrorKind::Mismatch, "nonzero Betti number at " + format_vec(cands[k]) + " outside C_" + std::to_string(i));
      }
      t.entries.push_back({i + 1, cands[k], n});
    }
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    return norm_lex_less(a.degree, b.degree);
  });
  return t;
}

LeftmostReport leftmost_betti_check(const SemigroupRing& r, int q, const Vec& b, const Field& field) {
  const Semigroup& s = r.semigroup();
  const int d = static_cast<int>(s.dim());
  LeftmostReport rep;
  rep.degree = b;
  rep.displaced = b;
  for (auto k : s.non_extremal()) rep.displaced = rep.displaced - s.gen(k);
  rep.expected_j = d - q - 1;
  if (!r.member(rep.displaced)) return rep;
  rep.displaced_in_D = reduced_homology_dim(t_complex(r, rep.displaced), rep.expected_j, field) != 0;

  const auto ext = s.extremal();
  if (q == d - 1) {
    for (std::uint32_t mask = 0; mask + 1 < (1u << d); ++mask) {
      std::vector<std::size_t> eprime, eprime_pos;
      Vec rest = rep.displaced;
      for (int t = 0; t < d; ++t) {
        if (mask >> t & 1) {
          eprime.push_back(ext[static_cast<std::size_t>(t)]);
          eprime_pos.push_back(static_cast<std::size_t>(t));
        } else {
          rest = rest - s.gen(ext[static_cast<std::size_t>(t)]);
        }
      }
      if (!r.in_apery(rep.displaced, eprime) && r.in_apery(rest, eprime)) rep.e_primes.push_back(eprime_pos);
    }
  }
  if (d == 3 && q == 2) {
    for (std::size_t kk = 0; kk < 3; ++kk) {
      std::vector<std::size_t> pair;
      for (std::size_t t = 0; t < 3; ++t) {
        if (t != kk) pair.push_back(ext[t]);
      }
      const std::size_t k = ext[kk];
      const Vec c = rep.displaced - s.gen(k);
      if (r.in_apery(c, pair) && !r.in_apery(rep.displaced, pair)) {
        rep.triples.push_back({pair[0], pair[1], k, c, is_maximal_direct(r, c, pair)});
      }
    }
    std::sort(rep.triples.begin(), rep.triples.end(), [](const auto& x, const auto& y) {
      return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
    });
  }
  return rep;
}

std::string to_string(T4Shape s) {
  switch (s) {
    case T4Shape::HollowTriangle: return "hollow-triangle";
    case T4Shape::HollowTrianglePlusEdge: return "hollow-triangle-plus-edge";
    case T4Shape::HollowTetraTwoMissing: return "hollow-tetra-two-missing";
    case T4Shape::SquarePlusDiagonal: return "square-plus-diagonal";
    case T4Shape::Square: return "square";
    case T4Shape::TrianglePlusHollowTriangle: return "triangle-plus-hollow-triangle";
    case T4Shape::Other: return "other";
  }
  return "other";
}

bool is_witness_shape(T4Shape s) { return s != T4Shape::Other && s != T4Shape::TrianglePlusHollowTriangle; }

T4Classification classify_T4(const SimplicialComplex& k, const std::vector<std::size_t>& vertices) {
  if (vertices.size() != 4) throw Error(ErrorKind::DimensionNot4, "shape classification needs four vertices");
  const Face pool = face_of(vertices);
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  const std::array<T4Shape, 6> order{T4Shape::HollowTriangle,      T4Shape::HollowTrianglePlusEdge,
                                     T4Shape::HollowTetraTwoMissing, T4Shape::SquarePlusDiagonal,
                                     T4Shape::Square,               T4Shape::TrianglePlusHollowTriangle};
  for (T4Shape shape : order) {
    std::sort(perm.begin(), perm.end());
    do {
      const Face i = Face{1} << vertices[perm[0]], j = Face{1} << vertices[perm[1]];
      const Face kk = Face{1} << vertices[perm[2]], l = Face{1} << vertices[perm[3]];
      std::vector<std::vector<Face>> variants;
      switch (shape) {
        case T4Shape::HollowTriangle: variants = {{i | kk, kk | l, i | l}}; break;
        case T4Shape::HollowTrianglePlusEdge: variants = {{i | kk, kk | l, i | l, i | j}}; break;
        case T4Shape::HollowTetraTwoMissing: {
          const std::vector<Face> edges{i | j, i | kk, i | l, j | kk, j | l, kk | l};
          for (int tri = 0; tri < 4; ++tri) {
            auto v = edges;
            if (tri & 1) v.push_back(i | j | kk);
            if (tri & 2) v.push_back(i | j | l);
            variants.push_back(std::move(v));
          }
          break;
        }
        case T4Shape::SquarePlusDiagonal: variants = {{i | j, j | kk, kk | l, i | l, i | kk}}; break;
        case T4Shape::Square: variants = {{i | j, j | kk, kk | l, i | l}}; break;
        case T4Shape::TrianglePlusHollowTriangle: variants = {{i | j | kk, kk | l, l | i}}; break;
        case T4Shape::Other: break;
      }
      for (const auto& facets : variants) {
        if (SimplicialComplex::from_facets(pool, facets).faces() == k.faces()) {
          return {shape, {vertices[perm[0]], vertices[perm[1]], vertices[perm[2]], vertices[perm[3]]}};
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {};
}

T4Classification classify_T4(const SemigroupRing& r, const Vec& c) {
  if (r.dim() != 4) throw Error(ErrorKind::DimensionNot4, "shape classification is defined for d = 4");
  const auto ext = r.semigroup().extremal();
  return classify_T4(t_complex(r, c), {ext.begin(), ext.end()});
}

bool disconnected_with_isolated_vertex(const SimplicialComplex& k) {
  if (k.num_components() < 2) return false;
  const auto edges = k.faces_of_dim(1);
  for (auto v : k.vertices()) {
    const Face bit = Face{1} << v;
    if (std::none_of(edges.begin(), edges.end(), [&](Face e) { return (e & bit) != 0; })) return true;
  }
  return false;
}

bool disconnected_with_isolated_vertex(const SemigroupRing& r, const Vec& b) {
  return disconnected_with_isolated_vertex(t_complex(r, b));
}

}  // namespace sgdepth
