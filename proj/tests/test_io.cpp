#include <doctest.h>

#include "fixtures.hpp"
#include "sgdepth/depth.hpp"
#include "sgdepth/instances.hpp"
#include "sgdepth/io.hpp"
#include "sgdepth/reproduce.hpp"

using namespace sgdepth;

TEST_CASE("matrix formats") {
  const auto json = parse_matrix(R"({"matrix": [[2, 0, 9], [0, 2, 7]]})");
  const auto bare = parse_matrix("[[2, 0, 9], [0, 2, 7]]");
  const auto text = parse_matrix("# two rows\n2 0 9\n0 2 7\n\n");
  CHECK(json == bare);
  CHECK(json == text);
  CHECK_THROWS_AS(parse_matrix("2 0 x\n"), Error);
  CHECK_THROWS_AS(parse_matrix("2 0\n1\n"), Error);
  CHECK_THROWS_AS(parse_matrix("{\"matrix\": [[1.5]]}"), Error);
  CHECK_THROWS_AS(parse_matrix("   "), Error);
  CHECK(parse_vec("(1, 2,3)") == Vec{1, 2, 3});
  CHECK(parse_index_list("1,3") == std::vector<std::size_t>{0, 2});
}

TEST_CASE("random generator is deterministic and simplicial") {
  const Semigroup a = generate_random_simplicial(3, 6, 9, 42);
  const Semigroup b = generate_random_simplicial(3, 6, 9, 42);
  CHECK(a.matrix_rows() == b.matrix_rows());
  CHECK(a.num_gens() == 6);
  for (std::size_t i = 0; i < 3; ++i) CHECK(a.extremal()[i] == i);
  const Semigroup c = generate_random_simplicial(3, 6, 9, 43);
  CHECK(c.matrix_rows() != a.matrix_rows());
  // only four admissible interior points exist in [0,2]^2, so five distinct ones cannot be drawn
  CHECK_THROWS_AS(generate_random_simplicial(2, 7, 2, 1, 50), Error);
  try {
    (void)generate_random_simplicial(2, 7, 2, 1, 50);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GenerationExhausted);
  }
}

TEST_CASE("instance records round-trip") {
  const Semigroup s = generate_random_simplicial(3, 6, 7, instance_seed(5, 3));
  const SemigroupRing r(s);
  const DepthCertificate cert = compute_depth(r);
  InstanceRecord rec;
  rec.matrix = s.matrix_rows();
  rec.origin = {5, 3, 3, 6, 7};
  rec.certificate = to_json(cert, s);
  rec.conjecture = to_json(conjecture_check(r, cert.depth));
  rec.verified = true;
  rec.elapsed_ms = 12.5;
  const InstanceRecord back = parse_instance_record(serialize(rec));
  CHECK(back == rec);
  CHECK(serialize(back) == serialize(rec));
  CHECK(conjecture_from_json(back.conjecture).depth == cert.depth);
}

TEST_CASE("cycle dump carries coefficients and elements") {
  const Semigroup s = fixtures::example("d4-six-gens");
  KoszulCycle f;
  f.degree = s.gen(0) + s.gen(1) + s.gen(2);
  f.add(0, 1, 1);
  f.add(2, 0, mpq_class(1, 2));
  const Json j = to_json(f, s);
  CHECK(j.at("terms").at("1,3").at(0).at("coeff") == "-1/2");
  CHECK(j.at("terms").at("1,2").at(0).at("element") == Json(s.gen(2)));
  const KoszulCycle back = koszul_cycle_from_json(j);
  CHECK(back.terms == f.terms);
}

TEST_CASE("reproduction diff") {
  const ReproductionReport rep = reproduce_example(reference_example("d3-block-a"));
  CHECK(rep.ok());
  CHECK(rep.checks.size() > 5);
  ReferenceExample perturbed = reference_example("d3-block-a");
  perturbed.expected["has_maximal"][0]["element"][0] = 10;
  const ReproductionReport bad = reproduce_example(perturbed);
  CHECK_FALSE(bad.ok());
  CHECK(bad.mismatches() == 1);
  ReferenceExample shifted = reference_example("d3-block-b");
  shifted.expected["betti"]["degrees"][0][2] = 37;
  CHECK(reproduce_example(shifted).mismatches() == 1);
}
