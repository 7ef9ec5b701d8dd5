#pragma once

#include <vector>

#include "sgdepth/instances.hpp"
#include "sgdepth/ring.hpp"

namespace fixtures {

inline sgdepth::Semigroup example(const char* id) { return sgdepth::reference_example(id).semigroup(); }

/// Small random simplicial instances with fixed seeds.
inline std::vector<sgdepth::Semigroup> random_corpus(std::size_t d, std::size_t e, std::int64_t coord_max,
                                                     std::size_t count, std::uint64_t seed) {
  std::vector<sgdepth::Semigroup> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(sgdepth::generate_random_simplicial(d, e, coord_max, sgdepth::instance_seed(seed, i)));
  }
  return out;
}

}  // namespace fixtures
