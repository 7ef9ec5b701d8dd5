#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgdepth/complex.hpp"
#include "sgdepth/homology.hpp"

using namespace sgdepth;

namespace {

Face f(std::initializer_list<std::size_t> v) { return face_of(std::vector<std::size_t>(v)); }

std::int64_t alternating(const HomologyProfile& h) {
  std::int64_t s = 0;
  for (const auto& [j, n] : h.dims) s += (j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(n);
  return s;
}

}  // namespace

TEST_CASE("small complexes") {
  const Face pool = f({0, 1, 2, 3});
  const auto hollow = SimplicialComplex::from_facets(pool, {f({0, 1}), f({1, 2}), f({0, 2})});
  CHECK(reduced_homology(hollow)[1] == 1);
  CHECK(reduced_homology(hollow)[0] == 0);
  const auto two = SimplicialComplex::from_facets(pool, {f({0}), f({1, 2})});
  CHECK(reduced_homology(two)[0] == 1);
  const auto empty_face_only = SimplicialComplex::from_facets(pool, {Face{0}});
  CHECK(reduced_homology(empty_face_only)[-1] == 1);
  const auto v = SimplicialComplex::from_facets(pool, {});
  CHECK(v.is_void());
  CHECK_THROWS_AS((void)reduced_homology(v), Error);
  CHECK_THROWS_AS((void)v.dimension(), Error);
}

TEST_CASE("projective plane depends on the field") {
  // six-vertex triangulation
  const std::vector<Face> tri{f({0, 1, 3}), f({0, 1, 4}), f({0, 2, 3}), f({0, 2, 5}), f({0, 4, 5}),
                              f({1, 2, 4}), f({1, 2, 5}), f({1, 3, 5}), f({2, 3, 4}), f({3, 4, 5})};
  const auto rp2 = SimplicialComplex::from_facets(f({0, 1, 2, 3, 4, 5}), tri);
  CHECK(reduced_homology(rp2, Field::rationals()).acyclic());
  const auto mod2 = reduced_homology(rp2, Field::prime(2));
  CHECK(mod2[1] == 1);
  CHECK(mod2[2] == 1);
  CHECK(reduced_homology(rp2, Field::prime(3)).acyclic());
  CHECK(Field::parse("p:7") == Field::prime(7));
  CHECK_THROWS_AS(Field::parse("p:8"), Error);
}

TEST_CASE("Euler identity and components on every T-complex of a candidate set") {
  for (const char* id : {"d3-block-a", "d3-six-gens", "d4-eight-gens"}) {
    const SemigroupRing r(fixtures::example(id));
    for (const auto& b : koszul_support_candidates(r)) {
      const auto t = t_complex(r, b);
      const auto h = reduced_homology(t);
      CHECK(t.reduced_euler_characteristic() == oracle::euler_from_faces(t.faces()));
      CHECK(alternating(h) == t.reduced_euler_characteristic());
      if (!t.is_void() && !t.vertices().empty()) {
        CHECK(t.num_components() == oracle::components(t.faces()));
        CHECK(h[0] + 1 == t.num_components());
      }
    }
  }
}

TEST_CASE("Betti numbers through squarefree divisor complexes") {
  const SemigroupRing r(fixtures::example("d3-six-gens"));
  const auto t = betti_table(r);
  CHECK(t.certified);
  CHECK(t.total(4) == 6);
  CHECK(t.projective_dimension() == 4);
  CHECK(betti_number(r, 4, Vec{79, 80, 63}) == 1);
  CHECK(betti_number(r, 4, Vec{81, 55, 62}) == 0);
  CHECK(betti_number(r, 0, Vec{0, 0, 0}) == 1);
}

TEST_CASE("certified Betti table agrees with a full scan on small rings") {
  for (const auto& s : fixtures::random_corpus(2, 4, 4, 5, 707)) {
    const SemigroupRing r(s);
    const auto exact = betti_table(r);
    std::int64_t top = 0;
    for (const auto& e : exact.entries) top = std::max(top, norm1(e.degree));
    const auto scan = betti_table(r, Field::rationals(), top + 4);
    CHECK(scan.entries == exact.entries);
  }
}

TEST_CASE("D sets of the seven-generator ring") {
  const SemigroupRing r(fixtures::example("d4-seven-gens"));
  const DProfile d = certified_D(r);
  CHECK(d.certified);
  CHECK(d.top() == 0);  // depth 3 = 4 - 1 - 0
  for (const auto& b : d.D(0)) CHECK(t_complex(r, b).num_components() >= 2);
}

TEST_CASE("T-complex shapes") {
  const std::vector<std::size_t> v{0, 1, 2, 3};
  const Face pool = f({0, 1, 2, 3});
  auto shape = [&](const std::vector<Face>& facets) {
    return classify_T4(SimplicialComplex::from_facets(pool, facets), v).shape;
  };
  CHECK(shape({f({0, 1}), f({1, 2}), f({0, 2})}) == T4Shape::HollowTriangle);
  CHECK(shape({f({0, 1}), f({1, 2}), f({0, 2}), f({3})}) == T4Shape::Other);
  CHECK(shape({f({0, 1}), f({1, 2}), f({0, 2}), f({2, 3})}) == T4Shape::HollowTrianglePlusEdge);
  CHECK(shape({f({0, 1}), f({1, 2}), f({2, 3}), f({0, 3})}) == T4Shape::Square);
  CHECK(is_witness_shape(T4Shape::Square));
  CHECK(disconnected_with_isolated_vertex(SimplicialComplex::from_facets(pool, {f({0, 1, 2}), f({3})})));
  CHECK_FALSE(disconnected_with_isolated_vertex(SimplicialComplex::from_facets(pool, {f({0, 1}), f({2, 3})})));
  CHECK_THROWS_AS(classify_T4(SemigroupRing(fixtures::example("d3-block-a")), Vec{9, 7, 3}), Error);
}
