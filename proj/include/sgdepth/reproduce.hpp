#pragma once

#include <string>
#include <vector>

#include "sgdepth/complex.hpp"
#include "sgdepth/instances.hpp"

namespace sgdepth {

struct FieldCheck {
  std::string example;
  std::string field;
  Json expected;
  Json actual;
  bool ok = false;
  /// Set when the expected value carries a recorded discrepancy; such a
  /// mismatch is reported but does not fail the run.
  std::string discrepancy;
  std::vector<std::string> notes;
};

struct ReproductionReport {
  std::vector<FieldCheck> checks;
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::size_t mismatches() const;
  [[nodiscard]] std::size_t documented_mismatches() const;
  [[nodiscard]] Json to_json() const;
};

/// Runs the pipeline on one example and compares every expected field.
ReproductionReport reproduce_example(const ReferenceExample& ex, const Field& field = Field::rationals());
ReproductionReport reproduce_paper(const Field& field = Field::rationals());

}  // namespace sgdepth
