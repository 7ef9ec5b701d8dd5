#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgdepth/core.hpp"
#include "sgdepth/io.hpp"

namespace sgdepth {

/// d extremal generators c_i * e_i with small c_i, plus e - d generators
/// drawn from the box [0, coord_max]^d with at least two positive entries
/// (one when d = 1).
/// Draws are rejected until validate_simplicial accepts them and the
/// extremal generators are exactly the scaled unit vectors. The output
/// depends only on the arguments.
Semigroup generate_random_simplicial(std::size_t d, std::size_t e, std::int64_t coord_max, std::uint64_t seed,
                                     std::size_t max_attempts = 4096);

/// Seed for instance `index` of a batch started from `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

struct ReferenceExample {
  std::string id;
  std::string provenance;
  std::vector<Vec> matrix;
  Json expected;
  [[nodiscard]] Semigroup semigroup() const { return semigroup_from_rows(matrix); }
};

const std::vector<ReferenceExample>& reference_examples();
/// Throws InvalidInput for an unknown id.
const ReferenceExample& reference_example(const std::string& id);

namespace detail {
const char* embedded_examples_json();
}

}  // namespace sgdepth
