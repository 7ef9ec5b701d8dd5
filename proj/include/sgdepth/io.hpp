#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgdepth/depth.hpp"
#include "sgdepth/grobner.hpp"
#include "sgdepth/homology.hpp"
#include "sgdepth/koszul.hpp"

namespace sgdepth {

using Json = nlohmann::ordered_json;

// Generator indices are 1-based everywhere in the JSON surface.

/// Accepts {"matrix": [[row], ...]}, a bare list of rows, or plain text with
/// one row per line ('#' starts a comment). Returns the d x e rows.
std::vector<Vec> parse_matrix(const std::string& text);
Semigroup parse_semigroup(const std::string& text);
/// "-" reads standard input.
std::string read_text(const std::string& path);

Json to_json(const Semigroup& s);
Json to_json(const MonomialOrder& o);
Json to_json(const GroebnerBasis& gb);
Json to_json(const MonomialIdeal& m);
Json to_json(const AperyWitness& w);
Json to_json(const GradedBettiTable& t);
Json to_json(const KoszulCycle& f, const Semigroup& s);
Json to_json(const D4Witness& w, const Semigroup& s);
Json to_json(const RegularSequenceWitness& w);
Json to_json(const DepthCertificate& c, const Semigroup& s);
Json to_json(const ConjectureRecord& c);
Json to_json(const HomologyProfile& h);
Json to_json(const DProfile& p);

AperyWitness apery_witness_from_json(const Json& j);
KoszulCycle koszul_cycle_from_json(const Json& j);
D4Witness d4_witness_from_json(const Json& j);
RegularSequenceWitness regular_sequence_from_json(const Json& j);
DepthCertificate certificate_from_json(const Json& j);
ConjectureRecord conjecture_from_json(const Json& j);

/// Monomials in the x1^2*x3 notation used by to_string.
Monomial parse_monomial(const std::string& text, std::size_t nvars);

std::vector<std::size_t> parse_index_list(const std::string& text);
Vec parse_vec(const std::string& text);

struct InstanceOrigin {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::size_t d = 0;
  std::size_t e = 0;
  std::int64_t coord_max = 0;
  friend bool operator==(const InstanceOrigin&, const InstanceOrigin&) = default;
};

/// One line of the conjecture-search log.
struct InstanceRecord {
  std::vector<Vec> matrix;
  InstanceOrigin origin;
  Json certificate;
  Json conjecture;
  bool verified = false;
  /// Wall-clock; excluded from equality and from deterministic diffs.
  double elapsed_ms = 0;

  friend bool operator==(const InstanceRecord& a, const InstanceRecord& b) {
    return a.matrix == b.matrix && a.origin == b.origin && a.certificate == b.certificate &&
           a.conjecture == b.conjecture && a.verified == b.verified;
  }
};

std::string serialize(const InstanceRecord& r);
InstanceRecord parse_instance_record(const std::string& line);

}  // namespace sgdepth
