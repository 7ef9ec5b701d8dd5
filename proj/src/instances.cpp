#include "sgdepth/instances.hpp"

#include <algorithm>
#include <random>

namespace sgdepth {

namespace {

// Modulo reduction rather than std::uniform_int_distribution, whose output
// is not specified across standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

bool extremals_are_units(const Semigroup& s, std::size_t d) {
  if (s.extremal().size() != d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (s.extremal()[i] != i) return false;
  }
  return true;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Semigroup generate_random_simplicial(std::size_t d, std::size_t e, std::int64_t coord_max, std::uint64_t seed,
                                     std::size_t max_attempts) {
  if (d == 0 || e < d || e > kMaxVars) throw Error(ErrorKind::InvalidInput, "need 1 <= d <= e <= 16");
  if (coord_max < 2) throw Error(ErrorKind::InvalidInput, "coord_max must be at least 2");
  std::mt19937_64 rng(seed);
  const std::int64_t scale_max = std::min<std::int64_t>(coord_max, 3);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < d; ++i) {
      Vec g(d, 0);
      g[i] = draw(rng, 2, scale_max);
      gens.push_back(std::move(g));
    }
    while (gens.size() < e) {
      Vec g(d);
      for (auto& x : g) x = draw(rng, 0, coord_max);
      const auto positive = std::count_if(g.begin(), g.end(), [](std::int64_t x) { return x > 0; });
      if (static_cast<std::size_t>(positive) < std::min<std::size_t>(d, 2)) continue;
      gens.push_back(std::move(g));
    }
    try {
      Semigroup s = validate_simplicial(gens);
      if (extremals_are_units(s, d)) return s;
    } catch (const Error&) {
      // rank-deficient, duplicated or redundant draw
    }
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no valid instance after " + std::to_string(max_attempts) + " draws (d=" + std::to_string(d) +
                  ", e=" + std::to_string(e) + ", coord_max=" + std::to_string(coord_max) + ")");
}

const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> examples = [] {
    const Json root = Json::parse(detail::embedded_examples_json());
    std::vector<ReferenceExample> out;
    for (const auto& j : root.at("examples")) {
      ReferenceExample ex;
      ex.id = j.at("id").get<std::string>();
      ex.provenance = j.at("provenance").get<std::string>();
      ex.matrix = j.at("matrix").get<std::vector<Vec>>();
      ex.expected = j.at("expected");
      out.push_back(std::move(ex));
    }
    return out;
  }();
  return examples;
}

const ReferenceExample& reference_example(const std::string& id) {
  for (const auto& ex : reference_examples()) {
    if (ex.id == id) return ex;
  }
  throw Error(ErrorKind::InvalidInput, "unknown example '" + id + "'");
}

}  // namespace sgdepth
