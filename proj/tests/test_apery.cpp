#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgdepth/apery.hpp"

using namespace sgdepth;

namespace {

std::vector<std::size_t> ext_of(const Semigroup& s) { return {s.extremal().begin(), s.extremal().end()}; }

}  // namespace

TEST_CASE("standard monomials of the full Q-model enumerate Ap(S,E)") {
  for (const auto& s : fixtures::random_corpus(3, 5, 6, 6, 404)) {
    const SemigroupRing r(s);
    const auto& ap = r.apery_extremal();
    const auto ext = ext_of(s);
    const MonomialIdeal q = apery_Q_model(r, ext);
    std::set<Vec> images;
    const auto sm = standard_monomials_up_to_degree(q, complement_vars(r, ext), 64);
    for (const auto& m : sm) images.insert(monomial_degree(s, m));
    CHECK(images.size() == sm.size());
    CHECK(images == std::set<Vec>(ap.begin(), ap.end()));
    for (const auto& b : ap) CHECK(r.in_apery(b, ext));
  }
}

TEST_CASE("Apery membership against the DP oracle") {
  const Semigroup s = fixtures::example("d3-block-a");
  const SemigroupRing r(s);
  const oracle::BoxSemigroup box(s.generators(), Vec{20, 20, 20});
  for (std::int64_t x = 0; x <= 14; ++x) {
    for (std::int64_t y = 0; y <= 14; ++y) {
      for (std::int64_t z = 0; z <= 14; ++z) {
        const Vec b{x, y, z};
        const std::vector<std::size_t> pair{0, 2};
        const bool expected = box.member(b) && !box.member(b - s.gen(0)) && !box.member(b - s.gen(2));
        REQUIRE(r.in_apery(b, pair) == expected);
      }
    }
  }
}

TEST_CASE("maximal elements of the first d3 example") {
  const SemigroupRing r(fixtures::example("d3-block-a"));
  const auto w12 = has_maximal_element(r, {0, 1});
  CHECK(w12.kind == WitnessKind::Maximal);
  CHECK(w12.element == Vec{9, 7, 3});
  CHECK(w12.routes_agree());
  const auto w23 = has_maximal_element(r, {1, 2});
  CHECK(w23.kind == WitnessKind::Maximal);
  CHECK(w23.element == Vec{5, 9, 7});
  const auto w13 = has_maximal_element(r, {0, 2});
  CHECK(w13.kind != WitnessKind::Maximal);
  CHECK(w13.routes_agree());
}

TEST_CASE("maximal witnesses satisfy the direct definition") {
  for (const auto& s : fixtures::random_corpus(3, 6, 7, 10, 505)) {
    const SemigroupRing r(s);
    const auto ext = ext_of(s);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        const auto w = has_maximal_element(r, {ext[a], ext[b]});
        CHECK(w.routes_agree());
        for (const auto& m : w.all_maximal) CHECK(is_maximal_direct(r, m, {ext[a], ext[b]}));
        if (w.kind == WitnessKind::Maximal) CHECK(s.degree(w.factorization.multipliers) == w.element);
      }
    }
  }
}

TEST_CASE("maximality is not the socle of the initial ideal") {
  // x3 x4^2 x5^7 x6^4 is a socle monomial of in(I + <x1>) for this ring, yet its
  // image plus a2 stays inside Ap(S, a1).
  const Semigroup s = fixtures::example("d3-six-gens");
  const SemigroupRing r(s);
  const MonomialIdeal q = apery_Q_model(r, {0});
  Monomial m;
  m[2] = 1;
  m[3] = 2;
  m[4] = 7;
  m[5] = 4;
  CHECK_FALSE(q.contains(m));
  for (std::size_t v = 1; v < 6; ++v) CHECK(q.contains(m * variable(v)));
  const Vec img = monomial_degree(s, m);
  CHECK(r.in_apery(img + s.gen(1), std::vector<std::size_t>{0}));
  CHECK_FALSE(is_maximal_direct(r, img, {0}));
}

TEST_CASE("Cohen-Macaulay test") {
  const SemigroupRing free_ring(semigroup_from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(is_cohen_macaulay(free_ring).cohen_macaulay);
  const SemigroupRing seven(fixtures::example("d4-seven-gens"));
  const auto cm = is_cohen_macaulay(seven);
  CHECK_FALSE(cm.cohen_macaulay);
  REQUIRE(cm.counterexample.has_value());
}

TEST_CASE("zero-divisor witness in the seven-generator ring") {
  const Semigroup s = fixtures::example("d4-seven-gens");
  const SemigroupRing r(s);
  const auto z = is_zero_divisor(r, 3, 2);
  CHECK(z.zero_divisor);
  REQUIRE(z.witness.has_value());
  // witness w: w not in a3 + S, but w + a4 in a3 + S
  CHECK_FALSE(r.member(*z.witness - s.gen(2)));
  CHECK(r.member(*z.witness + s.gen(3) - s.gen(2)));
  CHECK_FALSE(is_zero_divisor(r, 1, 0).zero_divisor);
}

TEST_CASE("regular sequences") {
  const SemigroupRing r(fixtures::example("d4-seven-gens"));
  const auto good = regular_sequence_check(
      r, {linear_form(r, {{0, 1}}), linear_form(r, {{1, 1}}), linear_form(r, {{2, 1}, {3, 1}})});
  CHECK(good.regular);
  const auto printed = regular_sequence_check(
      r, {linear_form(r, {{2, 1}}), linear_form(r, {{3, 1}}), linear_form(r, {{0, 1}, {1, 1}})});
  CHECK_FALSE(printed.regular);
  REQUIRE(printed.failed_at.has_value());
  CHECK(*printed.failed_at == 1);
}

TEST_CASE("regular pair criterion agrees with the colon test") {
  for (const auto& s : fixtures::random_corpus(3, 5, 6, 6, 606)) {
    const SemigroupRing r(s);
    const auto ext = ext_of(s);
    const auto p = is_regular_pair(r, ext[0], ext[1]);
    CHECK(p.agree());
  }
}

TEST_CASE("Apery sets need every ray") {
  const SemigroupRing r(fixtures::example("d3-block-a"));
  CHECK_THROWS_AS(apery_finite(r, {Vec{2, 0, 0}}), Error);
  CHECK(apery_finite(r, {Vec{2, 0, 0}, Vec{0, 2, 0}, Vec{0, 0, 2}}).size() == r.apery_extremal().size());
}
