#include "sgdepth/reproduce.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "sgdepth/apery.hpp"
#include "sgdepth/depth.hpp"
#include "sgdepth/homology.hpp"

namespace sgdepth {

namespace {

std::vector<std::size_t> zero_based(const Json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(x.get<std::size_t>() - 1);
  return out;
}

std::set<Vec> as_set(const Json& j) {
  std::set<Vec> out;
  for (const auto& x : j) out.insert(x.get<Vec>());
  return out;
}

Json set_json(const std::set<Vec>& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v);
  return out;
}

Json delta_json(const std::vector<std::size_t>& d) {
  Json out = Json::array();
  for (auto i : d) out.push_back(i + 1);
  return out;
}

class Runner {
 public:
  Runner(const ReferenceExample& ex, const Field& field) : ex_(ex), field_(field), r_(ex.semigroup()) {}

  ReproductionReport run() {
    const Json& e = ex_.expected;
    if (e.contains("depth")) check_depth(e.at("depth"));
    if (e.contains("cohen_macaulay")) check_cm(e.at("cohen_macaulay"));
    if (e.contains("initial_ideals")) check_initial_ideals(e.at("initial_ideals"));
    if (e.contains("has_maximal")) check_has_maximal(e.at("has_maximal"));
    if (e.contains("maximal_elements")) check_maximal_elements(e.at("maximal_elements"));
    if (e.contains("betti")) check_betti(e.at("betti"));
    if (e.contains("factorizations")) check_factorizations(e.at("factorizations"));
    if (e.contains("betti_zero")) check_betti_zero(e.at("betti_zero"));
    if (e.contains("leftmost")) check_leftmost(e.at("leftmost"));
    if (e.contains("pair_membership")) check_pair_membership(e.at("pair_membership"));
    if (e.contains("regular_sequence")) check_regular_sequence(e.at("regular_sequence"));
    if (e.contains("d4_search")) check_d4_search(e.at("d4_search"));
    if (e.contains("no_maximal_three_subsets")) check_three_subsets(e.at("no_maximal_three_subsets"));
    if (e.contains("depth3_equivalence")) check_depth3(e.at("depth3_equivalence"));
    return std::move(report_);
  }

 private:
  FieldCheck& add(const std::string& field, Json expected, Json actual) {
    FieldCheck c;
    c.example = ex_.id;
    c.field = field;
    c.ok = expected == actual;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    report_.checks.push_back(std::move(c));
    return report_.checks.back();
  }

  const GradedBettiTable& table() {
    if (!table_) table_ = betti_table(r_, field_);
    return *table_;
  }

  void check_depth(const Json& expected) {
    const DepthCertificate cert = compute_depth(r_);
    auto& c = add("depth", expected, cert.depth);
    c.notes.push_back("method " + to_string(cert.method));
    const VerifyResult v = verify_certificate(r_, cert);
    auto& cv = add("depth.certificate_verified", true, v.ok);
    for (const auto& p : v.problems) cv.notes.push_back(p);
    const GradedBettiTable& t = table();
    add("depth.auslander_buchsbaum",
        expected, static_cast<int>(r_.num_gens()) - static_cast<int>(t.projective_dimension()));
  }

  void check_cm(const Json& expected) { add("cohen_macaulay", expected, is_cohen_macaulay(r_).cohen_macaulay); }

  void check_initial_ideals(const Json& list) {
    const std::size_t n = r_.num_gens();
    for (const auto& item : list) {
      const auto delta = zero_based(item.at("delta"));
      std::vector<Monomial> gens;
      for (const auto& g : item.at("generators")) gens.push_back(parse_monomial(g.get<std::string>(), n));
      const MonomialIdeal expected(n, gens);
      const MonomialIdeal actual = apery_Q_model(r_, delta);
      auto& c = add("initial_ideal" + delta_json(delta).dump(), sgdepth::to_json(expected).at("text"),
                    sgdepth::to_json(actual).at("text"));
      if (!c.ok) {
        // Retry with every variable weighing 1 before reporting.
        const SemigroupRing unit(r_.semigroup(), true);
        const bool fallback = apery_Q_model(unit, delta) == expected;
        c.notes.push_back(std::string("unit-weight order ") + (fallback ? "matches" : "does not match either"));
      }
    }
  }

  void check_has_maximal(const Json& list) {
    for (const auto& item : list) {
      const auto delta = zero_based(item.at("delta"));
      const AperyWitness w = has_maximal_element(r_, delta);
      const std::string key = "has_maximal" + delta_json(delta).dump();
      const bool maximal = w.kind == WitnessKind::Maximal;
      add(key, item.at("value"), maximal);
      add(key + ".local_route", maximal, w.local_found);
      if (item.contains("element")) {
        const Vec b = item.at("element").get<Vec>();
        const bool listed = std::find(w.all_maximal.begin(), w.all_maximal.end(), b) != w.all_maximal.end();
        add(key + ".element" + Json(b).dump(), true, listed && is_maximal_direct(r_, b, delta));
      }
    }
  }

  void check_maximal_elements(const Json& list) {
    for (const auto& item : list) {
      const auto delta = zero_based(item.at("delta"));
      const Vec b = item.at("element").get<Vec>();
      const std::string key = "maximal" + delta_json(delta).dump() + Json(b).dump();
      if (item.contains("as_combination")) {
        add(key + ".combination", b, r_.semigroup().degree(item.at("as_combination").get<Vec>()));
      }
      add(key + ".direct", true, is_maximal_direct(r_, b, delta));
      const AperyWitness w = has_maximal_element(r_, delta);
      add(key + ".enumerated", true,
          std::find(w.all_maximal.begin(), w.all_maximal.end(), b) != w.all_maximal.end());
    }
  }

  void check_betti(const Json& item) {
    const auto i = item.at("i").get<std::size_t>();
    const GradedBettiTable& t = table();
    add("betti.total[" + std::to_string(i) + "]", item.at("total"), t.total(i));
    const auto d = t.degrees(i);
    add("betti.degrees[" + std::to_string(i) + "]", set_json(as_set(item.at("degrees"))),
        set_json(std::set<Vec>(d.begin(), d.end())));
    add("betti.certified", true, t.certified);
  }

  void check_factorizations(const Json& list) {
    for (const auto& item : list) {
      const Vec b = item.at("element").get<Vec>();
      std::set<Vec> actual;
      for (const auto& f : factorizations(r_.semigroup(), b)) actual.insert(f.multipliers);
      add("factorizations" + Json(b).dump(), set_json(as_set(item.at("factorizations"))), set_json(actual));
    }
  }

  void check_betti_zero(const Json& list) {
    for (const auto& item : list) {
      const auto i = item.at("i").get<std::size_t>();
      const Vec b = item.at("degree").get<Vec>();
      auto& c = add("betti_zero[" + std::to_string(i) + "]" + Json(b).dump(), 0, table().at(i, b));
      c.notes.push_back("direct " + std::to_string(betti_number(r_, i, b, field_)));
      if (betti_number(r_, i, b, field_) != table().at(i, b)) c.ok = false;
    }
  }

  void check_leftmost(const Json& item) {
    const Semigroup& s = r_.semigroup();
    const auto delta = zero_based(item.at("delta"));
    const std::size_t k = item.at("k").get<std::size_t>() - 1;
    Vec shift = s.gen(k);
    for (auto v : s.non_extremal()) shift = shift + s.gen(v);
    std::set<Vec> shifted;
    for (const auto& cj : item.at("c")) {
      const Vec c = cj.get<Vec>();
      add("leftmost.maximal" + delta_json(delta).dump() + Json(c).dump(), true, is_maximal_direct(r_, c, delta));
      shifted.insert(c + shift);
    }
    const auto top = table().degrees(s.num_gens() - 2);
    add("leftmost.shifted_equals_betti_degrees", set_json(shifted), set_json(std::set<Vec>(top.begin(), top.end())));
  }

  void check_pair_membership(const Json& list) {
    const Semigroup& s = r_.semigroup();
    const std::vector<std::size_t> ext(s.extremal().begin(), s.extremal().end());
    for (const auto& item : list) {
      const Vec b = item.at("element").get<Vec>();
      std::set<std::vector<std::size_t>> listed;
      for (const auto& p : item.at("pairs")) listed.insert(zero_based(p));
      Json expected = Json::array(), actual = Json::array();
      for (std::size_t x = 0; x < ext.size(); ++x) {
        for (std::size_t y = x + 1; y < ext.size(); ++y) {
          const std::vector<std::size_t> pair{ext[x], ext[y]};
          if (listed.count(pair)) expected.push_back(delta_json(pair));
          if (r_.in_apery(b, pair)) actual.push_back(delta_json(pair));
          if (listed.count(pair) && item.value("maximal", false)) {
            add("pair_membership.maximal" + delta_json(pair).dump() + Json(b).dump(), true,
                is_maximal_direct(r_, b, pair));
          }
        }
      }
      add("pair_membership" + Json(b).dump(), expected, actual);
    }
  }

  void check_regular_sequence(const Json& item) {
    std::vector<Polynomial> polys;
    RegularSequenceWitness w;
    for (const auto& form : item.at("forms")) {
      std::vector<std::pair<std::size_t, int>> f;
      for (const auto& t : form) f.emplace_back(t.at(0).get<std::size_t>() - 1, t.at(1).get<int>());
      polys.push_back(linear_form(r_, f));
      w.forms.push_back(f);
    }
    const RegularSequenceResult res = regular_sequence_check(r_, polys);
    auto& c = add("regular_sequence" + w.to_string(), item.at("regular"), res.regular);
    if (res.failed_at) c.notes.push_back("fails at position " + std::to_string(*res.failed_at + 1));
    if (!c.ok && item.contains("discrepancy")) c.discrepancy = item.at("discrepancy").get<std::string>();
  }

  void check_d4_search(const Json& item) {
    const auto bounds = item.at("bounds").get<std::vector<std::int32_t>>();
    const D4SearchResult res = depth2_test_d4(r_, bounds);
    auto& c = add("d4_search", item.at("witness"), res.witness.has_value());
    c.notes.push_back("bound reached " + std::to_string(res.bound_reached) + ", " +
                      std::to_string(res.elements_examined) + " elements examined");
  }

  void check_three_subsets(const Json& expected) {
    const Semigroup& s = r_.semigroup();
    const std::vector<std::size_t> ext(s.extremal().begin(), s.extremal().end());
    bool none = true;
    for (std::size_t skip = 0; skip < ext.size(); ++skip) {
      std::vector<std::size_t> sub;
      for (std::size_t t = 0; t < ext.size(); ++t) {
        if (t != skip) sub.push_back(ext[t]);
      }
      if (has_maximal_element(r_, sub).kind == WitnessKind::Maximal) none = false;
    }
    add("no_maximal_three_subsets", expected, none);
  }

  void check_depth3(const Json& item) {
    const Depth3Report rep = prop_depth3_equivalence(r_);
    add("depth3_equivalence.maximal_side", item.at("maximal_side"), rep.maximal_side);
    auto& c = add("depth3_equivalence.isolated_side", item.at("isolated_side"), rep.isolated_side);
    if (rep.isolated_degree) c.notes.push_back("degree " + format_vec(*rep.isolated_degree));
  }

  const ReferenceExample& ex_;
  Field field_;
  SemigroupRing r_;
  std::optional<GradedBettiTable> table_;
  ReproductionReport report_;
};

}  // namespace

bool ReproductionReport::ok() const { return mismatches() == 0; }

std::size_t ReproductionReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const FieldCheck& c) { return !c.ok && c.discrepancy.empty(); }));
}

std::size_t ReproductionReport::documented_mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const FieldCheck& c) { return !c.ok && !c.discrepancy.empty(); }));
}

Json ReproductionReport::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j{{"example", c.example}, {"field", c.field}, {"ok", c.ok}, {"expected", c.expected}, {"actual", c.actual}};
    if (!c.discrepancy.empty()) j["discrepancy"] = c.discrepancy;
    if (!c.notes.empty()) j["notes"] = c.notes;
    list.push_back(std::move(j));
  }
  return Json{{"checks", list},
              {"mismatches", mismatches()},
              {"documented_mismatches", documented_mismatches()},
              {"ok", ok()}};
}

ReproductionReport reproduce_example(const ReferenceExample& ex, const Field& field) { return Runner(ex, field).run(); }

ReproductionReport reproduce_paper(const Field& field) {
  ReproductionReport all;
  for (const auto& ex : reference_examples()) {
    auto one = reproduce_example(ex, field);
    for (auto& c : one.checks) all.checks.push_back(std::move(c));
  }
  return all;
}

}  // namespace sgdepth
