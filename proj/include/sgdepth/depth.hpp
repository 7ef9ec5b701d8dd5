#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgdepth/apery.hpp"
#include "sgdepth/homology.hpp"
#include "sgdepth/koszul.hpp"

namespace sgdepth {

enum class DepthMethod { SocleDepth1, CMTest, D3Trichotomy, D4Theorem, KoszulSupport, KoszulScan };
std::string to_string(DepthMethod m);
DepthMethod depth_method_from_string(const std::string& s);

/// A condition of the d = 4 depth-two theorem holding at b for the labelling
/// (i, j, k, l) of the extremal generators (generator indices).
struct D4Witness {
  std::vector<std::size_t> perm;
  int condition = 1;  // 1 or 2
  Vec b;
  /// b + a_k + a_l, whose T-complex has one of the witness shapes.
  Vec c;
  T4Shape shape = T4Shape::Other;
  KoszulCycle cycle;
  bool cycle_verified = false;
  bool pair_has_maximal = false;
};

struct RegularSequenceWitness {
  /// Each entry is a linear form: (generator index, coefficient) pairs.
  std::vector<std::vector<std::pair<std::size_t, int>>> forms;
  [[nodiscard]] std::string to_string() const;
};

struct DepthCertificate {
  int depth = 0;
  DepthMethod method = DepthMethod::KoszulSupport;
  /// False only for scan-based results.
  bool certified = true;
  std::optional<std::int64_t> scan_bound;

  std::optional<AperyWitness> apery;  // depth 1, or the headline d = 3 pair
  std::vector<AperyWitness> pairs;    // d = 3: every pair with a maximal element
  std::optional<D4Witness> d4;
  std::optional<RegularSequenceWitness> regular_sequence;
  /// Degree of a nonvanishing top Koszul homology slice.
  std::optional<Vec> koszul_degree;
  /// Depth from the certified Koszul support, when computed as a cross-check.
  std::optional<int> koszul_depth;
  std::vector<std::string> notes;
};

struct Depth1Result {
  bool depth_one = false;
  AperyWitness witness;
};
Depth1Result depth1_test(const SemigroupRing& r);

DepthCertificate depth_exact_d3(const SemigroupRing& r);

struct D4SearchResult {
  std::optional<D4Witness> witness;
  /// Largest standard-monomial degree examined.
  std::int32_t bound_reached = 0;
  std::size_t elements_examined = 0;
};

/// Search b among standard monomials of the Q-models of the six pairs,
/// deepening the total-degree bound through `bounds`.
D4SearchResult depth2_test_d4(const SemigroupRing& r, const std::vector<std::int32_t>& bounds = {8, 16, 32});

/// Exhaustive version: b = c - a_k - a_l over the certified D(1).
std::optional<D4Witness> depth2_witness_complete(const SemigroupRing& r, const DProfile& d);

/// Tests whether b satisfies condition 1 or 2 for the labelling perm; on
/// success fills the witness (cycle not yet verified).
std::optional<D4Witness> check_d4_conditions(const SemigroupRing& r, const std::vector<std::size_t>& perm, const Vec& b);

/// Candidate depth-3 sequences for d = 4: x_i, x_j, then x_r, x_s, x_r + x_s, x_r - x_s.
std::optional<RegularSequenceWitness> find_depth3_sequence(const SemigroupRing& r);

DepthCertificate depth_exact_d4(const SemigroupRing& r);

/// Any d: D(j) from the certified candidate set; depth = d - 1 - max j.
DepthCertificate depth_via_koszul(const SemigroupRing& r, const Field& field = Field::rationals());

struct ScanDepth {
  int koszul_depth = 0;
  int betti_depth = 0;
  std::int64_t bound = 0;
  [[nodiscard]] bool agree() const { return koszul_depth == betti_depth; }
};
/// Scan over every point of S up to the bound; heuristic. The default bound
/// is (e - d + 1) times the largest 1-norm among the generators and the
/// degrees of the toric Groebner basis.
ScanDepth depth_via_scan(const SemigroupRing& r, std::optional<std::int64_t> bound = std::nullopt,
                         const Field& field = Field::rationals());

/// Dispatches on d.
DepthCertificate compute_depth(const SemigroupRing& r);

struct Depth3Report {
  bool maximal_side = false;
  std::vector<std::size_t> maximal_subset;  // generator indices
  std::optional<Vec> maximal_element;
  bool isolated_side = false;
  std::optional<Vec> isolated_degree;
  [[nodiscard]] bool agree() const { return maximal_side == isolated_side; }
};
/// d = 4 and depth 3: existence of a 3-subset E' whose Apéry set has a
/// maximal element versus existence of b with T_b disconnected and carrying
/// an isolated vertex. Both sides are decided exactly.
Depth3Report prop_depth3_equivalence(const SemigroupRing& r);

struct ConjectureRecord {
  int depth = 0;
  std::vector<std::vector<std::size_t>> subsets_tried;
  std::optional<AperyWitness> witness;
  bool counterexample_candidate = false;
};
ConjectureRecord conjecture_check(const SemigroupRing& r, int depth);

/// Independent re-validation using membership only.
struct VerifyResult {
  bool ok = true;
  std::vector<std::string> problems;
};
VerifyResult verify_certificate(const SemigroupRing& r, const DepthCertificate& c);

}  // namespace sgdepth
