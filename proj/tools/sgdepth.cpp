#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "sgdepth/apery.hpp"
#include "sgdepth/depth.hpp"
#include "sgdepth/detail/parallel.hpp"
#include "sgdepth/homology.hpp"
#include "sgdepth/instances.hpp"
#include "sgdepth/io.hpp"
#include "sgdepth/koszul.hpp"
#include "sgdepth/reproduce.hpp"

using namespace sgdepth;

namespace {

constexpr int kVerified = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kInconclusive = 3;

struct Globals {
  std::string field = "rational";
  unsigned threads = 1;
  std::string format = "json";
};

struct Input {
  std::string path;
  std::string example;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "Matrix file (JSON or plain text), '-' for stdin");
    cmd->add_option("--example", example, "Use an embedded example by id");
  }

  Semigroup load() const {
    if (!example.empty()) return reference_example(example).semigroup();
    if (path.empty()) throw Error(ErrorKind::InvalidInput, "no input given (pass a file, '-' or --example)");
    return parse_semigroup(read_text(path));
  }
};

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  const bool scalar_array =
      j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !scalar_array) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Globals& g, const Json& j) {
  if (g.format == "text") {
    flatten(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

int koszul_depth_of(const SemigroupRing& r, const Field& f) {
  return static_cast<int>(r.dim()) - 1 - certified_D(r, f).top();
}

// ---- subcommands ---------------------------------------------------------

int cmd_validate(const Globals& g, const Input& in) {
  const Semigroup s = in.load();
  emit(g, Json{{"valid", true}, {"semigroup", to_json(s)}});
  return kVerified;
}

int cmd_depth(const Globals& g, const Input& in, bool scan, std::optional<std::int64_t> bound) {
  const SemigroupRing r(in.load());
  const Field field = Field::parse(g.field);
  const DepthCertificate cert = compute_depth(r);
  const VerifyResult v = verify_certificate(r, cert);
  Json out{{"certificate", to_json(cert, r.semigroup())}, {"verified", v.ok}, {"problems", v.problems}};
  bool agree = true;
  if (!field.rational) {
    const int kd = koszul_depth_of(r, field);
    out["koszul_depth_over_field"] = Json{{"field", field.to_string()}, {"depth", kd}};
    // characteristic can change the answer, so a difference is reported but not a failure
  }
  if (scan) {
    const ScanDepth sd = depth_via_scan(r, bound, field);
    out["scan"] = Json{{"bound", sd.bound}, {"koszul_depth", sd.koszul_depth}, {"betti_depth", sd.betti_depth}};
    agree = sd.agree() && sd.koszul_depth == cert.depth;
  }
  emit(g, out);
  if (!v.ok || !agree) return kMismatch;
  return cert.certified ? kVerified : kInconclusive;
}

int cmd_apery(const Globals& g, const Input& in, const std::string& delta_text, bool list) {
  const SemigroupRing r(in.load());
  const auto delta = parse_index_list(delta_text);
  const AperyWitness w = has_maximal_element(r, delta);
  Json out = to_json(w);
  out["routes_agree"] = w.routes_agree();
  if (list) {
    std::vector<Vec> b;
    for (auto i : delta) b.push_back(r.semigroup().gen(i));
    Json elems = Json::array();
    for (const auto& a : apery_finite(r, b)) elems.push_back(a);
    out["elements"] = elems;
  }
  emit(g, out);
  return w.routes_agree() ? kVerified : kMismatch;
}

int cmd_betti(const Globals& g, const Input& in, std::optional<std::int64_t> bound) {
  const SemigroupRing r(in.load());
  const GradedBettiTable t = betti_table(r, Field::parse(g.field), bound, g.threads);
  Json out = to_json(t);
  out["auslander_buchsbaum_depth"] = static_cast<int>(r.num_gens()) - static_cast<int>(t.projective_dimension());
  emit(g, out);
  return t.certified ? kVerified : kInconclusive;
}

int cmd_koszul(const Globals& g, const Input& in, const std::string& degree_text) {
  const SemigroupRing r(in.load());
  const Field field = Field::parse(g.field);
  if (degree_text.empty()) {
    const DProfile p = certified_D(r, field);
    Json out = to_json(p);
    out["koszul_depth"] = static_cast<int>(r.dim()) - 1 - p.top();
    emit(g, out);
    return p.certified ? kVerified : kInconclusive;
  }
  const Vec b = parse_vec(degree_text);
  const HomologyProfile t = reduced_homology(t_complex(r, b), field);
  Json dims = Json::object();
  bool bridge = true;
  for (std::size_t p = 0; p <= r.dim(); ++p) {
    const auto k = koszul_homology_dim(r, p, b, field);
    dims[std::to_string(p)] = k;
    if (p >= 1 && k != t[static_cast<int>(p) - 1]) bridge = false;
  }
  emit(g, Json{{"degree", b}, {"field", field.to_string()}, {"H", dims}, {"T_homology", to_json(t)},
               {"matches_T_complex", bridge}});
  return bridge ? kVerified : kMismatch;
}

int cmd_classify(const Globals& g, const Input& in, const std::string& degree_text) {
  const SemigroupRing r(in.load());
  const Vec b = parse_vec(degree_text);
  const SimplicialComplex t = t_complex(r, b);
  Json out{{"degree", b},
           {"complex", t.to_string()},
           {"facets", Json::array()},
           {"homology", to_json(reduced_homology(t, Field::parse(g.field)))},
           {"euler_characteristic", t.reduced_euler_characteristic()},
           {"components", t.is_void() ? 0 : t.num_components()},
           {"disconnected_with_isolated_vertex", disconnected_with_isolated_vertex(t)}};
  for (auto f : t.facets()) {
    Json v = Json::array();
    for (auto x : face_vertices(f)) v.push_back(x + 1);
    out["facets"].push_back(v);
  }
  if (r.dim() == 4) {
    const T4Classification c = classify_T4(r, b);
    Json labels = Json::array();
    for (auto x : c.labels) labels.push_back(x + 1);
    out["shape"] = Json{{"name", to_string(c.shape)}, {"labels", labels}, {"witness_shape", is_witness_shape(c.shape)}};
  }
  emit(g, out);
  return kVerified;
}

int cmd_check(const Globals& g, const Input& in, const std::string& which) {
  const SemigroupRing r(in.load());
  const int kd = koszul_depth_of(r, Field::rationals());
  Json out{{"check", which}, {"koszul_depth", kd}};
  bool consistent = true;
  if (which == "cm") {
    const CMResult cm = is_cohen_macaulay(r);
    out["cohen_macaulay"] = cm.cohen_macaulay;
    out["apery_size"] = cm.apery_size;
    if (cm.counterexample) out["counterexample"] = Json::array({cm.counterexample->first, cm.counterexample->second});
    consistent = cm.cohen_macaulay == (kd == static_cast<int>(r.dim()));
  } else if (which == "depth1") {
    const Depth1Result d1 = depth1_test(r);
    out["depth_one"] = d1.depth_one;
    out["witness"] = to_json(d1.witness);
    consistent = d1.depth_one == (kd == 1);
  } else if (which == "th-depth2-d3") {
    const DepthCertificate c = depth_exact_d3(r);
    Json pairs = Json::array();
    for (const auto& p : c.pairs) pairs.push_back(to_json(p));
    out["depth"] = c.depth;
    out["pairs_with_maximal"] = pairs;
    consistent = c.depth == kd && (c.depth != 2 || !c.pairs.empty());
  } else if (which == "th-depth2-d4") {
    const DepthCertificate c = depth_exact_d4(r);
    const auto complete = depth2_witness_complete(r, certified_D(r));
    const D4SearchResult q = depth2_test_d4(r);
    out["depth"] = c.depth;
    out["complete_witness"] = complete ? to_json(*complete, r.semigroup()) : Json(nullptr);
    out["q_search"] = Json{{"found", q.witness.has_value()}, {"bound_reached", q.bound_reached},
                           {"elements_examined", q.elements_examined}};
    const bool depth2 = kd == 2;
    consistent = c.depth == kd && complete.has_value() == depth2 && (!q.witness || depth2);
    if (complete && !complete->cycle_verified) consistent = false;
  } else if (which == "prop-depth3") {
    const Depth3Report rep = prop_depth3_equivalence(r);
    out["maximal_side"] = rep.maximal_side;
    out["maximal_subset"] = Json::array();
    for (auto x : rep.maximal_subset) out["maximal_subset"].push_back(x + 1);
    out["maximal_element"] = rep.maximal_element ? Json(*rep.maximal_element) : Json(nullptr);
    out["isolated_side"] = rep.isolated_side;
    out["isolated_degree"] = rep.isolated_degree ? Json(*rep.isolated_degree) : Json(nullptr);
    out["applies"] = kd == 3;
    consistent = kd != 3 || rep.agree();
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown check '" + which + "'");
  }
  out["consistent"] = consistent;
  emit(g, out);
  return consistent ? kVerified : kMismatch;
}

struct SearchOptions {
  std::size_t d = 3;
  std::size_t e = 6;
  std::int64_t coord_max = 9;
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  std::string out;
};

InstanceRecord run_instance(const SearchOptions& o, std::uint64_t index) {
  InstanceRecord rec;
  rec.origin = {o.seed, index, o.d, o.e, o.coord_max};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Semigroup s = generate_random_simplicial(o.d, o.e, o.coord_max, instance_seed(o.seed, index));
    rec.matrix = s.matrix_rows();
    const SemigroupRing r(s);
    const DepthCertificate cert = compute_depth(r);
    rec.certificate = to_json(cert, s);
    rec.verified = verify_certificate(r, cert).ok;
    rec.conjecture = to_json(conjecture_check(r, cert.depth));
  } catch (const Error& e) {
    rec.certificate = Json{{"error", e.what()}};
    rec.conjecture = nullptr;
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

int cmd_search(const Globals& g, const SearchOptions& o) {
  std::set<std::uint64_t> done;
  std::vector<InstanceRecord> records;
  if (!o.out.empty()) {
    std::ifstream existing(o.out);
    std::string line;
    while (std::getline(existing, line)) {
      if (line.empty()) continue;
      InstanceRecord rec = parse_instance_record(line);
      const auto& og = rec.origin;
      if (og.seed == o.seed && og.d == o.d && og.e == o.e && og.coord_max == o.coord_max && og.index < o.count) {
        if (done.insert(og.index).second) records.push_back(std::move(rec));
      }
    }
  }
  std::vector<std::uint64_t> pending;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    if (!done.count(i)) pending.push_back(i);
  }
  std::ofstream sink;
  if (!o.out.empty()) sink.open(o.out, std::ios::app);
  // Work in chunks so that a killed run loses at most one chunk; records
  // inside a chunk are written by this thread only, in index order.
  const std::size_t chunk = std::max<std::size_t>(1, 4 * g.threads);
  for (std::size_t start = 0; start < pending.size(); start += chunk) {
    const std::size_t n = std::min(chunk, pending.size() - start);
    std::vector<InstanceRecord> batch(n);
    detail::parallel_for(n, g.threads, [&](std::size_t k) { batch[k] = run_instance(o, pending[start + k]); });
    for (auto& rec : batch) {
      if (sink.is_open()) sink << serialize(rec) << '\n' << std::flush;
      records.push_back(std::move(rec));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const InstanceRecord& a, const InstanceRecord& b) { return a.origin.index < b.origin.index; });
  std::map<std::string, std::size_t> depths;
  Json candidates = Json::array(), unverified = Json::array(), errors = Json::array();
  for (const auto& rec : records) {
    if (rec.certificate.contains("error")) {
      errors.push_back(Json{{"index", rec.origin.index}, {"error", rec.certificate.at("error")}});
      continue;
    }
    ++depths[std::to_string(rec.certificate.at("depth").get<int>())];
    if (!rec.verified) unverified.push_back(rec.origin.index);
    if (rec.conjecture.at("counterexample_candidate").get<bool>()) {
      candidates.push_back(Json{{"index", rec.origin.index}, {"matrix", rec.matrix}});
    }
  }
  emit(g, Json{{"instances", records.size()},
               {"resumed", done.size()},
               {"depth_distribution", depths},
               {"counterexample_candidates", candidates},
               {"unverified", unverified},
               {"errors", errors}});
  if (!candidates.empty() || !unverified.empty()) return kMismatch;
  return errors.empty() ? kVerified : kInconclusive;
}

int cmd_reproduce(const Globals& g, bool verbose) {
  const ReproductionReport rep = reproduce_paper(Field::parse(g.field));
  Json out = rep.to_json();
  if (!verbose) {
    Json failing = Json::array();
    for (const auto& c : out.at("checks")) {
      if (!c.at("ok").get<bool>()) failing.push_back(c);
    }
    out["checks"] = failing;
    out["checks_run"] = rep.checks.size();
  }
  emit(g, out);
  return rep.ok() ? kVerified : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth invariants of simplicial affine semigroup rings"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "rational or p:<prime>")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_option("--format", g.format, "json or text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));

  Input in;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Validate a semigroup and print its extremal data");
  in.attach(validate);
  validate->callback([&] { action = [&] { return cmd_validate(g, in); }; });

  bool scan = false;
  std::optional<std::int64_t> scan_bound;
  auto* depth = app.add_subcommand("depth", "Compute the depth with a verified certificate");
  in.attach(depth);
  depth->add_flag("--scan", scan, "Also run the bounded scan and compare");
  depth->add_option("--bound", scan_bound, "Scan bound (1-norm)");
  depth->callback([&] { action = [&] { return cmd_depth(g, in, scan, scan_bound); }; });

  std::string delta;
  bool list = false;
  auto* apery = app.add_subcommand("apery", "Maximal elements of an intersection of Apery sets");
  in.attach(apery);
  apery->add_option("--delta", delta, "Comma-separated generator indices")->required();
  apery->add_flag("--list", list, "Also list the set (requires every extremal ray in delta)");
  apery->callback([&] { action = [&] { return cmd_apery(g, in, delta, list); }; });

  std::optional<std::int64_t> betti_bound;
  auto* betti = app.add_subcommand("betti", "Graded Betti numbers");
  in.attach(betti);
  betti->add_option("--bound", betti_bound, "Scan every point up to this 1-norm instead of the exact candidates");
  betti->callback([&] { action = [&] { return cmd_betti(g, in, betti_bound); }; });

  std::string kdegree;
  auto* koszul = app.add_subcommand("koszul", "Koszul homology support, or one graded slice with --degree");
  in.attach(koszul);
  koszul->add_option("--degree", kdegree, "Comma-separated degree");
  koszul->callback([&] { action = [&] { return cmd_koszul(g, in, kdegree); }; });

  std::string tdegree;
  auto* classify = app.add_subcommand("classify-t", "Describe T_b and, for d = 4, its shape");
  in.attach(classify);
  classify->add_option("--degree", tdegree, "Comma-separated degree")->required();
  classify->callback([&] { action = [&] { return cmd_classify(g, in, tdegree); }; });

  std::string which;
  auto* check = app.add_subcommand("check", "Cross-check a characterization against the Koszul depth");
  check->add_option("which", which, "th-depth2-d3 | th-depth2-d4 | prop-depth3 | cm | depth1")
      ->required()
      ->check(CLI::IsMember({"th-depth2-d3", "th-depth2-d4", "prop-depth3", "cm", "depth1"}));
  in.attach(check);
  check->callback([&] { action = [&] { return cmd_check(g, in, which); }; });

  SearchOptions so;
  auto* search = app.add_subcommand("conjecture-search", "Random search for depth-two instances without a pair witness");
  search->add_option("--d", so.d)->capture_default_str();
  search->add_option("--e", so.e)->capture_default_str();
  search->add_option("--coord-max", so.coord_max)->capture_default_str();
  search->add_option("--count", so.count)->capture_default_str();
  search->add_option("--seed", so.seed)->capture_default_str();
  search->add_option("--out", so.out, "Append-only JSONL log; existing records are reused");
  search->callback([&] { action = [&] { return cmd_search(g, so); }; });

  bool verbose = false;
  auto* reproduce = app.add_subcommand("reproduce-paper", "Run the embedded examples against their expected values");
  reproduce->add_flag("--all", verbose, "List every check, not only failures");
  reproduce->callback([&] { action = [&] { return cmd_reproduce(g, verbose); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return e.kind() == ErrorKind::Mismatch ? kMismatch : kUsage;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  }
}
