#include "sgdepth/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "sgdepth/core.hpp"
#include "sgdepth/linalg.hpp"

namespace sgdepth {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

bool face_less(Face a, Face b) {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (1ull << 62)) throw Error(ErrorKind::InvalidInput, "field characteristic must be a prime below 2^62");
  Field f;
  f.rational = false;
  f.p = p;
  return f;
}

Field Field::parse(const std::string& s) {
  if (s == "rational" || s == "Q") return rationals();
  if (s.rfind("p:", 0) == 0) {
    try {
      return prime(std::stoull(s.substr(2)));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorKind::InvalidInput, "field must be 'rational' or 'p:<prime>', got '" + s + "'");
}

std::string Field::to_string() const { return rational ? "rational" : "p:" + std::to_string(p); }

int popcount(Face f) { return std::popcount(f); }

std::vector<std::size_t> face_vertices(Face f) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; f; ++v, f >>= 1) {
    if (f & 1) out.push_back(v);
  }
  return out;
}

Face face_of(const std::vector<std::size_t>& vertices) {
  Face f = 0;
  for (auto v : vertices) {
    if (v >= 32) throw Error(ErrorKind::InvalidInput, "vertex index too large");
    f |= Face{1} << v;
  }
  return f;
}

SimplicialComplex SimplicialComplex::from_facets(Face pool, const std::vector<Face>& facets) {
  SimplicialComplex k;
  k.pool_ = pool;
  std::unordered_set<Face> all;
  for (Face f : facets) {
    if ((f & ~pool) != 0) throw Error(ErrorKind::InvalidInput, "facet outside the vertex pool");
    for (Face s = f;; s = (s - 1) & f) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  k.faces_.assign(all.begin(), all.end());
  std::sort(k.faces_.begin(), k.faces_.end(), face_less);
  return k;
}

SimplicialComplex SimplicialComplex::from_predicate(Face pool, const std::function<bool(Face)>& is_face) {
  SimplicialComplex k;
  k.pool_ = pool;
  if (!is_face(0)) return k;
  std::vector<Face> level{0};
  std::unordered_set<Face> known{0};
  k.faces_.push_back(0);
  while (!level.empty()) {
    std::vector<Face> next;
    for (Face f : level) {
      // extend only by vertices above the largest one, so each set is built once
      const int top = f ? 31 - std::countl_zero(f) : -1;
      for (int v = top + 1; v < 32; ++v) {
        const Face bit = Face{1} << v;
        if ((pool & bit) == 0) continue;
        const Face g = f | bit;
        bool boundary_ok = true;
        for (Face rest = f; rest && boundary_ok; rest &= rest - 1) {
          boundary_ok = known.count(g & ~(rest & -rest)) != 0;
        }
        if (boundary_ok && is_face(g)) next.push_back(g);
      }
    }
    for (Face g : next) {
      known.insert(g);
      k.faces_.push_back(g);
    }
    level = std::move(next);
  }
  std::sort(k.faces_.begin(), k.faces_.end(), face_less);
  return k;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f, face_less);
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
  std::vector<Face> out;
  for (Face f : faces_) {
    if (popcount(f) == k + 1) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) throw Error(ErrorKind::VoidComplex, "the void complex has no dimension");
  return popcount(faces_.back()) - 1;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (Face f : faces_) {
    bool maximal = std::none_of(faces_.begin(), faces_.end(), [&](Face g) { return g != f && (f & g) == f; });
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::vertices() const {
  std::vector<std::size_t> out;
  for (Face f : faces_) {
    if (popcount(f) == 1) out.push_back(static_cast<std::size_t>(std::countr_zero(f)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SimplicialComplex::num_components() const {
  std::vector<std::size_t> parent(32);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto verts = vertices();
  std::size_t comps = verts.size();
  for (Face f : faces_of_dim(1)) {
    auto ends = face_vertices(f);
    auto a = find(ends[0]), b = find(ends[1]);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const {
  std::int64_t chi = 0;
  for (Face f : faces_) chi += (popcount(f) % 2 == 1) ? 1 : -1;
  return chi;
}

std::string SimplicialComplex::to_string() const {
  if (faces_.empty()) return "void";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    os << (i ? ", " : "") << '{';
    auto vs = face_vertices(faces_[i]);
    for (std::size_t k = 0; k < vs.size(); ++k) os << (k ? "," : "") << vs[k] + 1;
    os << '}';
  }
  os << '}';
  return os.str();
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (auto [j, n] : dims) chi += (j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(n);
  return chi;
}

std::size_t boundary_rank(const SimplicialComplex& k, int dim, const Field& field) {
  if (dim < 0) return 0;
  const auto rows = k.faces_of_dim(dim);
  const auto cols = k.faces_of_dim(dim - 1);
  if (rows.empty() || cols.empty()) return 0;
  std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int sign = 1;
    for (Face rest = rows[r]; rest; rest &= rest - 1) {
      const Face bit = rest & -rest;
      const Face g = rows[r] & ~bit;
      const auto c = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), g, face_less) - cols.begin());
      m[r][c] = sign;
      sign = -sign;
    }
  }
  return field.rational ? rank_rational(std::move(m)) : rank_mod_p(m, field.p);
}

std::size_t reduced_homology_dim(const SimplicialComplex& k, int j, const Field& field) {
  if (k.is_void()) throw Error(ErrorKind::VoidComplex, "reduced homology of the void complex is undefined");
  const std::size_t cj = k.faces_of_dim(j).size();
  if (cj == 0) return 0;
  return cj - boundary_rank(k, j, field) - boundary_rank(k, j + 1, field);
}

HomologyProfile reduced_homology(const SimplicialComplex& k, const Field& field) {
  if (k.is_void()) throw Error(ErrorKind::VoidComplex, "reduced homology of the void complex is undefined");
  HomologyProfile h;
  h.field = field;
  const int top = k.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int j = 0; j <= top; ++j) ranks[static_cast<std::size_t>(j + 1)] = boundary_rank(k, j, field);
  for (int j = -1; j <= top; ++j) {
    const std::size_t cj = k.faces_of_dim(j).size();
    const std::size_t dim = cj - ranks[static_cast<std::size_t>(j + 1)] - ranks[static_cast<std::size_t>(j + 2)];
    if (dim) h.dims[j] = dim;
  }
  return h;
}

}  // namespace sgdepth
