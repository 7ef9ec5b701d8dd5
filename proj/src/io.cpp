#include "sgdepth/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace sgdepth {

namespace {

Json indices_json(const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> indices_from(const Json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    const auto v = x.get<std::int64_t>();
    if (v < 1) throw Error(ErrorKind::InvalidInput, "generator indices start at 1");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

Vec vec_from(const Json& j) { return j.get<Vec>(); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

T4Shape shape_from_string(const std::string& s) {
  for (auto shape : {T4Shape::HollowTriangle, T4Shape::HollowTrianglePlusEdge, T4Shape::HollowTetraTwoMissing,
                     T4Shape::SquarePlusDiagonal, T4Shape::Square, T4Shape::TrianglePlusHollowTriangle,
                     T4Shape::Other}) {
    if (to_string(shape) == s) return shape;
  }
  throw Error(ErrorKind::InvalidInput, "unknown T-complex shape '" + s + "'");
}

WitnessKind witness_kind_from_string(const std::string& s) {
  for (auto k : {WitnessKind::Maximal, WitnessKind::Member, WitnessKind::None}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::InvalidInput, "unknown witness kind '" + s + "'");
}

std::vector<Vec> rows_from_json(const Json& j) {
  const Json& m = j.is_object() ? j.at("matrix") : j;
  if (!m.is_array()) throw Error(ErrorKind::InvalidInput, "matrix must be a list of rows");
  std::vector<Vec> rows;
  for (const auto& row : m) {
    if (!row.is_array()) throw Error(ErrorKind::InvalidInput, "matrix rows must be lists");
    Vec r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorKind::InvalidInput, "matrix entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Vec> rows_from_text(const std::string& text) {
  std::vector<Vec> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    Vec row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw Error(ErrorKind::InvalidInput, "not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<Vec> parse_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorKind::InvalidInput, "empty input");
  std::vector<Vec> rows;
  if (text[first] == '{' || text[first] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    rows = rows_from_json(j);
  } else {
    rows = rows_from_text(text);
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidInput, "matrix has no rows");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw Error(ErrorKind::DimensionMismatch, "matrix rows have different lengths");
  }
  return rows;
}

Semigroup parse_semigroup(const std::string& text) { return semigroup_from_rows(parse_matrix(text)); }

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json to_json(const Semigroup& s) {
  Json gens = Json::array();
  for (const auto& g : s.generators()) gens.push_back(g);
  std::vector<std::size_t> ext(s.extremal().begin(), s.extremal().end());
  return Json{{"dim", s.dim()},
              {"matrix", s.matrix_rows()},
              {"generators", gens},
              {"extremal", indices_json(ext)},
              {"cone_det", s.cone_det()}};
}

Json to_json(const MonomialOrder& o) {
  Json j;
  switch (o.kind()) {
    case MonomialOrder::Kind::WeightedRevlex: j["kind"] = "weighted-revlex"; break;
    case MonomialOrder::Kind::Lex: j["kind"] = "lex"; break;
    case MonomialOrder::Kind::Elimination: j["kind"] = "elimination"; break;
  }
  j["weights"] = o.weights();
  j["ranking"] = indices_json(o.ranking());
  if (!o.block().empty()) j["block"] = indices_json(o.block());
  j["description"] = o.describe();
  return j;
}

Json to_json(const GroebnerBasis& gb) {
  Json basis = Json::array();
  for (const auto& b : gb.elements) {
    Json e;
    e["lead"] = b.lead.to_vec(gb.nvars);
    e["trail"] = b.has_trail ? Json(b.trail.to_vec(gb.nvars)) : Json(nullptr);
    e["coeffs"] = b.has_trail ? Json::array({1, -1}) : Json::array({1});
    basis.push_back(std::move(e));
  }
  return Json{{"order", to_json(gb.order)}, {"nvars", gb.nvars}, {"basis", basis}};
}

Json to_json(const MonomialIdeal& m) {
  Json gens = Json::array();
  Json text = Json::array();
  for (const auto& g : m.generators()) {
    gens.push_back(g.to_vec(m.nvars()));
    text.push_back(g.to_string(m.nvars()));
  }
  return Json{{"nvars", m.nvars()}, {"generators", gens}, {"text", text}};
}

Json to_json(const AperyWitness& w) {
  Json witness = nullptr;
  if (w.kind != WitnessKind::None) {
    witness = Json{{"element", w.element}, {"factorization", w.factorization.multipliers}};
  }
  Json all = Json::array();
  for (const auto& m : w.all_maximal) all.push_back(m);
  return Json{{"apery",
               {{"delta", indices_json(w.delta)},
                {"maximal", w.kind == WitnessKind::Maximal},
                {"kind", to_string(w.kind)},
                {"witness", witness},
                {"all_maximal", all},
                {"local_route", {{"found", w.local_found}, {"witness", optional_json(w.local_witness)}}}}}};
}

AperyWitness apery_witness_from_json(const Json& outer) {
  const Json& j = outer.contains("apery") ? outer.at("apery") : outer;
  AperyWitness w;
  w.delta = indices_from(j.at("delta"));
  w.kind = j.contains("kind") ? witness_kind_from_string(j.at("kind").get<std::string>())
                              : (j.at("maximal").get<bool>() ? WitnessKind::Maximal : WitnessKind::None);
  if (!j.at("witness").is_null()) {
    w.element = vec_from(j.at("witness").at("element"));
    w.factorization.multipliers = vec_from(j.at("witness").at("factorization"));
  }
  if (j.contains("all_maximal")) {
    for (const auto& m : j.at("all_maximal")) w.all_maximal.push_back(vec_from(m));
  }
  if (j.contains("local_route")) {
    w.local_found = j.at("local_route").at("found").get<bool>();
    if (!j.at("local_route").at("witness").is_null()) w.local_witness = vec_from(j.at("local_route").at("witness"));
  }
  return w;
}

Json to_json(const GradedBettiTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) entries.push_back(Json{{"i", e.i}, {"degree", e.degree}, {"mult", e.mult}});
  return Json{{"betti", entries},
              {"field", t.field.to_string()},
              {"projective_dimension", t.projective_dimension()},
              {"scan_bound", optional_json(t.scan_bound)},
              {"certified", t.certified}};
}

Json to_json(const KoszulCycle& f, const Semigroup& s) {
  Json terms = Json::object();
  for (const auto& [pq, c] : f.terms) {
    const std::string key = std::to_string(pq.first + 1) + "," + std::to_string(pq.second + 1);
    terms[key] = Json::array({Json{{"coeff", c.get_str()}, {"element", f.element(s, pq.first, pq.second)}}});
  }
  return Json{{"degree", f.degree}, {"terms", terms}};
}

KoszulCycle koszul_cycle_from_json(const Json& j) {
  KoszulCycle f;
  f.degree = vec_from(j.at("degree"));
  for (const auto& [key, list] : j.at("terms").items()) {
    const auto idx = parse_index_list(key);
    if (idx.size() != 2) throw Error(ErrorKind::InvalidInput, "cycle term key must be 'i,j'");
    for (const auto& t : list) f.add(idx[0], idx[1], mpq_class(t.at("coeff").get<std::string>()));
  }
  return f;
}

Json to_json(const D4Witness& w, const Semigroup& s) {
  return Json{{"perm", indices_json(w.perm)},     {"condition", w.condition},
              {"b", w.b},                         {"c", w.c},
              {"shape", to_string(w.shape)},      {"cycle", to_json(w.cycle, s)},
              {"cycle_verified", w.cycle_verified}, {"pair_has_maximal", w.pair_has_maximal}};
}

D4Witness d4_witness_from_json(const Json& j) {
  D4Witness w;
  w.perm = indices_from(j.at("perm"));
  w.condition = j.at("condition").get<int>();
  w.b = vec_from(j.at("b"));
  w.c = vec_from(j.at("c"));
  w.shape = shape_from_string(j.at("shape").get<std::string>());
  w.cycle = koszul_cycle_from_json(j.at("cycle"));
  w.cycle_verified = j.at("cycle_verified").get<bool>();
  w.pair_has_maximal = j.at("pair_has_maximal").get<bool>();
  return w;
}

Json to_json(const RegularSequenceWitness& w) {
  Json forms = Json::array();
  for (const auto& f : w.forms) {
    Json form = Json::array();
    for (const auto& [v, c] : f) form.push_back(Json{{"var", v + 1}, {"coeff", c}});
    forms.push_back(std::move(form));
  }
  return Json{{"forms", forms}, {"text", w.to_string()}};
}

RegularSequenceWitness regular_sequence_from_json(const Json& j) {
  RegularSequenceWitness w;
  for (const auto& form : j.at("forms")) {
    std::vector<std::pair<std::size_t, int>> f;
    for (const auto& t : form) {
      const auto v = t.at("var").get<std::int64_t>();
      if (v < 1) throw Error(ErrorKind::InvalidInput, "variable indices start at 1");
      f.emplace_back(static_cast<std::size_t>(v - 1), t.at("coeff").get<int>());
    }
    w.forms.push_back(std::move(f));
  }
  return w;
}

Json to_json(const DepthCertificate& c, const Semigroup& s) {
  Json pairs = Json::array();
  for (const auto& p : c.pairs) pairs.push_back(to_json(p));
  return Json{{"depth", c.depth},
              {"method", to_string(c.method)},
              {"certified", c.certified},
              {"scan_bound", optional_json(c.scan_bound)},
              {"apery", c.apery ? to_json(*c.apery) : Json(nullptr)},
              {"pairs", pairs},
              {"d4", c.d4 ? to_json(*c.d4, s) : Json(nullptr)},
              {"regular_sequence", c.regular_sequence ? to_json(*c.regular_sequence) : Json(nullptr)},
              {"koszul_degree", optional_json(c.koszul_degree)},
              {"koszul_depth", optional_json(c.koszul_depth)},
              {"notes", c.notes}};
}

DepthCertificate certificate_from_json(const Json& j) {
  DepthCertificate c;
  c.depth = j.at("depth").get<int>();
  c.method = depth_method_from_string(j.at("method").get<std::string>());
  c.certified = j.at("certified").get<bool>();
  if (!j.at("scan_bound").is_null()) c.scan_bound = j.at("scan_bound").get<std::int64_t>();
  if (!j.at("apery").is_null()) c.apery = apery_witness_from_json(j.at("apery"));
  for (const auto& p : j.at("pairs")) c.pairs.push_back(apery_witness_from_json(p));
  if (!j.at("d4").is_null()) c.d4 = d4_witness_from_json(j.at("d4"));
  if (!j.at("regular_sequence").is_null()) c.regular_sequence = regular_sequence_from_json(j.at("regular_sequence"));
  if (!j.at("koszul_degree").is_null()) c.koszul_degree = vec_from(j.at("koszul_degree"));
  if (!j.at("koszul_depth").is_null()) c.koszul_depth = j.at("koszul_depth").get<int>();
  c.notes = j.at("notes").get<std::vector<std::string>>();
  return c;
}

Json to_json(const ConjectureRecord& c) {
  Json tried = Json::array();
  for (const auto& s : c.subsets_tried) tried.push_back(indices_json(s));
  return Json{{"depth", c.depth},
              {"subsets_tried", tried},
              {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)},
              {"counterexample_candidate", c.counterexample_candidate}};
}

ConjectureRecord conjecture_from_json(const Json& j) {
  ConjectureRecord c;
  c.depth = j.at("depth").get<int>();
  for (const auto& s : j.at("subsets_tried")) c.subsets_tried.push_back(indices_from(s));
  if (!j.at("witness").is_null()) c.witness = apery_witness_from_json(j.at("witness"));
  c.counterexample_candidate = j.at("counterexample_candidate").get<bool>();
  return c;
}

Json to_json(const HomologyProfile& h) {
  Json dims = Json::object();
  for (const auto& [j, n] : h.dims) dims[std::to_string(j)] = n;
  return dims;
}

Json to_json(const DProfile& p) {
  Json sets = Json::object();
  for (const auto& [j, list] : p.sets) {
    Json l = Json::array();
    for (const auto& b : list) l.push_back(b);
    sets[std::to_string(j)] = l;
  }
  return Json{{"field", p.field.to_string()},
              {"certified", p.certified},
              {"scan_bound", optional_json(p.scan_bound)},
              {"candidates", p.candidates.size()},
              {"top", p.top()},
              {"D", sets}};
}

Monomial parse_monomial(const std::string& text, std::size_t nvars) {
  Monomial m;
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s == "1") return m;
  std::istringstream in(s);
  std::string factor;
  while (std::getline(in, factor, '*')) {
    if (factor.size() < 2 || factor[0] != 'x') throw Error(ErrorKind::InvalidInput, "bad monomial factor '" + factor + "'");
    const auto caret = factor.find('^');
    const auto var = std::stoul(factor.substr(1, caret - 1));
    const auto power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    if (var < 1 || var > nvars || power < 0) throw Error(ErrorKind::InvalidInput, "bad monomial factor '" + factor + "'");
    m[var - 1] += power;
  }
  return m;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto v : parse_vec(text)) {
    if (v < 1) throw Error(ErrorKind::InvalidInput, "indices start at 1");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

Vec parse_vec(const std::string& text) {
  std::string s = text;
  std::replace_if(s.begin(), s.end(), [](char c) { return c == ',' || c == '(' || c == ')' || c == '[' || c == ']'; }, ' ');
  const auto rows = rows_from_text(s);
  if (rows.size() != 1) throw Error(ErrorKind::InvalidInput, "expected a comma-separated list, got '" + text + "'");
  return rows.front();
}

std::string serialize(const InstanceRecord& r) {
  Json j{{"matrix", r.matrix},
         {"origin",
          {{"seed", r.origin.seed},
           {"index", r.origin.index},
           {"d", r.origin.d},
           {"e", r.origin.e},
           {"coord_max", r.origin.coord_max}}},
         {"certificate", r.certificate},
         {"conjecture", r.conjecture},
         {"verified", r.verified},
         {"timings", {{"elapsed_ms", r.elapsed_ms}}}};
  return j.dump();
}

InstanceRecord parse_instance_record(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed record: ") + e.what());
  }
  InstanceRecord r;
  r.matrix = rows_from_json(j.at("matrix"));
  const Json& o = j.at("origin");
  r.origin.seed = o.at("seed").get<std::uint64_t>();
  r.origin.index = o.at("index").get<std::uint64_t>();
  r.origin.d = o.at("d").get<std::size_t>();
  r.origin.e = o.at("e").get<std::size_t>();
  r.origin.coord_max = o.at("coord_max").get<std::int64_t>();
  r.certificate = j.at("certificate");
  r.conjecture = j.at("conjecture");
  r.verified = j.at("verified").get<bool>();
  if (j.contains("timings")) r.elapsed_ms = j.at("timings").value("elapsed_ms", 0.0);
  return r;
}

}  // namespace sgdepth
