#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sgdepth {

/// Faces are bitmasks over generator indices (bit i = generator i).
using Face = std::uint32_t;

struct Field {
  bool rational = true;
  std::uint64_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);
  /// "rational" or "p:<prime>".
  static Field parse(const std::string& s);
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Field&, const Field&) = default;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of `facets` inside `pool`. An empty facet list gives the void complex.
  static SimplicialComplex from_facets(Face pool, const std::vector<Face>& facets);
  /// Every F inside `pool` with is_face(F); the predicate must be down-closed.
  /// Generation is level by level so only extensions of faces are queried.
  static SimplicialComplex from_predicate(Face pool, const std::function<bool(Face)>& is_face);

  [[nodiscard]] Face pool() const { return pool_; }
  /// All faces sorted by (size, mask); includes the empty face unless void.
  [[nodiscard]] const std::vector<Face>& faces() const { return faces_; }
  [[nodiscard]] bool is_void() const { return faces_.empty(); }
  [[nodiscard]] bool contains(Face f) const;
  [[nodiscard]] std::vector<Face> faces_of_dim(int k) const;
  [[nodiscard]] int dimension() const;
  [[nodiscard]] std::vector<Face> facets() const;

  /// Vertices that are faces, as generator indices.
  [[nodiscard]] std::vector<std::size_t> vertices() const;
  [[nodiscard]] std::size_t num_components() const;

  /// Sum over faces of (-1)^dim F, counting the empty face in dimension -1.
  [[nodiscard]] std::int64_t reduced_euler_characteristic() const;

  /// e.g. "{{}, {1}, {2}, {1,2}}" with 1-based vertex labels.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  Face pool_ = 0;
  std::vector<Face> faces_;
};

struct HomologyProfile {
  Field field;
  std::map<int, std::size_t> dims;  // only nonzero entries are stored
  [[nodiscard]] std::size_t operator[](int j) const {
    auto it = dims.find(j);
    return it == dims.end() ? 0 : it->second;
  }
  [[nodiscard]] bool acyclic() const { return dims.empty(); }
  [[nodiscard]] std::int64_t euler_characteristic() const;
};

/// Rank of the boundary map from (k)-faces to (k-1)-faces.
std::size_t boundary_rank(const SimplicialComplex& k, int dim, const Field& field);

HomologyProfile reduced_homology(const SimplicialComplex& k, const Field& field = Field::rationals());
std::size_t reduced_homology_dim(const SimplicialComplex& k, int j, const Field& field = Field::rationals());

int popcount(Face f);
std::vector<std::size_t> face_vertices(Face f);
Face face_of(const std::vector<std::size_t>& vertices);

}  // namespace sgdepth
