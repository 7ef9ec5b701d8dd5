#include "sgdepth/depth.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sgdepth {

namespace {

std::vector<std::size_t> extremal_list(const SemigroupRing& r) {
  const auto ext = r.semigroup().extremal();
  return {ext.begin(), ext.end()};
}

std::vector<std::vector<std::size_t>> subsets_of_size(const std::vector<std::size_t>& pool, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = pool.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<std::size_t> sub;
    for (std::size_t t = 0; t < n; ++t) {
      if (mask >> t & 1) sub.push_back(pool[t]);
    }
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> permutations_of(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

KoszulCycle cycle_for(const SemigroupRing& r, const D4Witness& w) {
  const auto& p = w.perm;
  if (w.condition == 1) return construct_cycle_3i(r, p[0], p[2], p[3], w.b);
  return construct_cycle_4i(r, {p[0], p[2], p[3], p[1]}, w.b);
}

void finish_witness(const SemigroupRing& r, D4Witness& w) {
  w.cycle = cycle_for(r, w);
  w.cycle_verified = verify_cycle_not_boundary(r, w.cycle);
  w.shape = classify_T4(r, w.c).shape;
  w.pair_has_maximal = has_maximal_element(r, {w.perm[0], w.perm[1]}).kind == WitnessKind::Maximal;
}

void attach_koszul(const SemigroupRing& r, DepthCertificate& c, const DProfile& d) {
  c.koszul_depth = static_cast<int>(r.dim()) - 1 - d.top();
  if (*c.koszul_depth != c.depth) {
    c.notes.push_back("Koszul support gives depth " + std::to_string(*c.koszul_depth));
  }
}

}  // namespace

std::string to_string(DepthMethod m) {
  switch (m) {
    case DepthMethod::SocleDepth1: return "socle-depth1";
    case DepthMethod::CMTest: return "CM-test";
    case DepthMethod::D3Trichotomy: return "d3-trichotomy";
    case DepthMethod::D4Theorem: return "d4-theorem";
    case DepthMethod::KoszulSupport: return "koszul-support";
    case DepthMethod::KoszulScan: return "koszul-scan";
  }
  return "koszul-support";
}

DepthMethod depth_method_from_string(const std::string& s) {
  for (auto m : {DepthMethod::SocleDepth1, DepthMethod::CMTest, DepthMethod::D3Trichotomy, DepthMethod::D4Theorem,
                 DepthMethod::KoszulSupport, DepthMethod::KoszulScan}) {
    if (to_string(m) == s) return m;
  }
  throw Error(ErrorKind::InvalidInput, "unknown depth method '" + s + "'");
}

std::string RegularSequenceWitness::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t f = 0; f < forms.size(); ++f) {
    os << (f ? ", " : "");
    for (std::size_t t = 0; t < forms[f].size(); ++t) {
      const auto [v, c] = forms[f][t];
      if (t) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << '-';
      if (std::abs(c) != 1) os << std::abs(c) << '*';
      os << 'x' << v + 1;
    }
  }
  os << ')';
  return os.str();
}

Depth1Result depth1_test(const SemigroupRing& r) {
  Depth1Result res;
  res.witness = has_maximal_element(r, {r.semigroup().extremal().front()});
  res.depth_one = res.witness.kind == WitnessKind::Maximal;
  return res;
}

DepthCertificate depth_exact_d3(const SemigroupRing& r) {
  if (r.dim() != 3) throw Error(ErrorKind::DimensionNot3, "the trichotomy needs d = 3");
  DepthCertificate c;
  auto d1 = depth1_test(r);
  if (d1.depth_one) {
    c.depth = 1;
    c.method = DepthMethod::SocleDepth1;
    c.apery = d1.witness;
  } else if (is_cohen_macaulay(r).cohen_macaulay) {
    c.depth = 3;
    c.method = DepthMethod::CMTest;
  } else {
    c.depth = 2;
    c.method = DepthMethod::D3Trichotomy;
    for (const auto& pair : subsets_of_size(extremal_list(r), 2)) {
      auto w = has_maximal_element(r, pair);
      if (w.kind == WitnessKind::Maximal) c.pairs.push_back(std::move(w));
    }
    if (c.pairs.empty()) {
      c.notes.push_back("depth two but no pair of extremal generators has a maximal Apery element");
    } else {
      c.apery = c.pairs.front();
    }
  }
  attach_koszul(r, c, certified_D(r));
  return c;
}

std::optional<D4Witness> check_d4_conditions(const SemigroupRing& r, const std::vector<std::size_t>& perm, const Vec& b) {
  const Semigroup& s = r.semigroup();
  const Vec &ai = s.gen(perm[0]), &aj = s.gen(perm[1]), &ak = s.gen(perm[2]), &al = s.gen(perm[3]);
  const std::vector<std::size_t> pair{perm[0], perm[1]};
  if (!r.in_apery(b, pair)) return std::nullopt;
  if (!r.member(b + ak - ai)) return std::nullopt;
  D4Witness w;
  w.perm = perm;
  w.b = b;
  w.c = b + ak + al;
  if (r.member(b + al - ai)) {
    w.condition = 1;
    return w;
  }
  if (r.member(b + al - aj) && r.member(b + ak + al - ai - aj)) {
    w.condition = 2;
    return w;
  }
  return std::nullopt;
}

D4SearchResult depth2_test_d4(const SemigroupRing& r, const std::vector<std::int32_t>& bounds) {
  if (r.dim() != 4) throw Error(ErrorKind::DimensionNot4, "the depth-two theorem search needs d = 4");
  D4SearchResult res;
  const auto ext = extremal_list(r);
  for (auto bound : bounds) {
    res.bound_reached = bound;
    for (const auto& pair : subsets_of_size(ext, 2)) {
      const MonomialIdeal m = apery_Q_model(r, pair);
      const auto vars = complement_vars(r, pair);
      std::vector<std::size_t> rest;
      for (auto v : ext) {
        if (v != pair[0] && v != pair[1]) rest.push_back(v);
      }
      for (const auto& u : standard_monomials_up_to_degree(m, vars, bound)) {
        ++res.elements_examined;
        const Vec b = monomial_degree(r.semigroup(), u);
        for (const auto& ij : {std::array{pair[0], pair[1]}, std::array{pair[1], pair[0]}}) {
          for (const auto& kl : {std::array{rest[0], rest[1]}, std::array{rest[1], rest[0]}}) {
            auto w = check_d4_conditions(r, {ij[0], ij[1], kl[0], kl[1]}, b);
            if (w) {
              finish_witness(r, *w);
              res.witness = std::move(w);
              return res;
            }
          }
        }
      }
    }
  }
  return res;
}

std::optional<D4Witness> depth2_witness_complete(const SemigroupRing& r, const DProfile& d) {
  if (r.dim() != 4) throw Error(ErrorKind::DimensionNot4, "the depth-two theorem search needs d = 4");
  const Semigroup& s = r.semigroup();
  const auto perms = permutations_of(extremal_list(r));
  for (const auto& c : d.D(1)) {
    for (const auto& p : perms) {
      const Vec b = c - s.gen(p[2]) - s.gen(p[3]);
      if (!r.member(b)) continue;
      auto w = check_d4_conditions(r, p, b);
      if (w) {
        finish_witness(r, *w);
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<RegularSequenceWitness> find_depth3_sequence(const SemigroupRing& r) {
  const auto ext = extremal_list(r);
  for (const auto& pair : subsets_of_size(ext, 2)) {
    const std::size_t i = pair[0], j = pair[1];
    if (is_zero_divisor(r, j, i).zero_divisor) continue;
    std::vector<std::size_t> rest;
    for (auto v : ext) {
      if (v != i && v != j) rest.push_back(v);
    }
    std::vector<std::vector<std::pair<std::size_t, int>>> thirds;
    for (auto v : rest) thirds.push_back({{v, 1}});
    for (std::size_t a = 0; a < rest.size(); ++a) {
      for (std::size_t b = a + 1; b < rest.size(); ++b) {
        thirds.push_back({{rest[a], 1}, {rest[b], 1}});
        thirds.push_back({{rest[a], 1}, {rest[b], -1}});
      }
    }
    for (const auto& third : thirds) {
      RegularSequenceWitness w;
      w.forms = {{{i, 1}}, {{j, 1}}, third};
      std::vector<Polynomial> polys;
      for (const auto& f : w.forms) polys.push_back(linear_form(r, f));
      if (regular_sequence_check(r, polys).regular) return w;
    }
  }
  return std::nullopt;
}

DepthCertificate depth_exact_d4(const SemigroupRing& r) {
  if (r.dim() != 4) throw Error(ErrorKind::DimensionNot4, "the d = 4 route needs d = 4");
  DepthCertificate c;
  auto d1 = depth1_test(r);
  const DProfile d = certified_D(r);
  if (d1.depth_one) {
    c.depth = 1;
    c.method = DepthMethod::SocleDepth1;
    c.apery = d1.witness;
  } else if (is_cohen_macaulay(r).cohen_macaulay) {
    c.depth = 4;
    c.method = DepthMethod::CMTest;
  } else if (auto w = depth2_witness_complete(r, d)) {
    c.depth = 2;
    c.method = DepthMethod::D4Theorem;
    c.d4 = std::move(w);
  } else if (auto seq = find_depth3_sequence(r)) {
    c.depth = 3;
    c.method = DepthMethod::D4Theorem;
    c.regular_sequence = std::move(seq);
  } else {
    c.depth = 3 - d.top();
    c.method = DepthMethod::KoszulSupport;
    if (!d.D(d.top()).empty()) c.koszul_degree = d.D(d.top()).front();
    c.notes.push_back(c.depth == 2 ? "D(1) is nonempty but no theorem witness was found"
                                   : "no regular sequence among the candidate forms; depth from Koszul support");
  }
  attach_koszul(r, c, d);
  return c;
}

DepthCertificate depth_via_koszul(const SemigroupRing& r, const Field& field) {
  const DProfile d = certified_D(r, field);
  DepthCertificate c;
  c.method = DepthMethod::KoszulSupport;
  c.depth = static_cast<int>(r.dim()) - 1 - d.top();
  c.koszul_depth = c.depth;
  c.koszul_degree = d.D(d.top()).front();
  return c;
}

ScanDepth depth_via_scan(const SemigroupRing& r, std::optional<std::int64_t> bound, const Field& field) {
  ScanDepth sd;
  if (bound) {
    sd.bound = *bound;
  } else {
    std::int64_t top = 0;
    for (const auto& b : betti_elements(r)) top = std::max(top, norm1(b));
    for (const auto& g : r.semigroup().generators()) top = std::max(top, norm1(g));
    sd.bound = top * static_cast<std::int64_t>(r.num_gens() - r.dim() + 1);
  }
  const DProfile d = scan_D_profile(r, sd.bound, field);
  sd.koszul_depth = static_cast<int>(r.dim()) - 1 - d.top();
  const GradedBettiTable t = betti_table(r, field, sd.bound);
  sd.betti_depth = static_cast<int>(r.num_gens()) - static_cast<int>(t.projective_dimension());
  return sd;
}

DepthCertificate compute_depth(const SemigroupRing& r) {
  const std::size_t d = r.dim();
  if (d == 3) return depth_exact_d3(r);
  if (d == 4) return depth_exact_d4(r);
  if (d >= 5) return depth_via_koszul(r);
  DepthCertificate c;
  if (d == 1) {
    c.depth = 1;
    c.method = DepthMethod::CMTest;
  } else {
    auto d1 = depth1_test(r);
    if (d1.depth_one) {
      c.depth = 1;
      c.method = DepthMethod::SocleDepth1;
      c.apery = d1.witness;
    } else {
      c.depth = 2;
      c.method = DepthMethod::CMTest;
      if (!is_cohen_macaulay(r).cohen_macaulay) c.notes.push_back("depth one ruled out but the CM test fails");
    }
  }
  attach_koszul(r, c, certified_D(r));
  return c;
}

Depth3Report prop_depth3_equivalence(const SemigroupRing& r) {
  if (r.dim() != 4) throw Error(ErrorKind::DimensionNot4, "the depth-three equivalence needs d = 4");
  Depth3Report rep;
  for (const auto& sub : subsets_of_size(extremal_list(r), 3)) {
    auto w = has_maximal_element(r, sub);
    if (w.kind == WitnessKind::Maximal) {
      rep.maximal_side = true;
      rep.maximal_subset = sub;
      rep.maximal_element = w.element;
      break;
    }
  }
  const DProfile d = certified_D(r);
  for (const auto& b : d.D(0)) {
    if (disconnected_with_isolated_vertex(r, b)) {
      rep.isolated_side = true;
      rep.isolated_degree = b;
      break;
    }
  }
  return rep;
}

ConjectureRecord conjecture_check(const SemigroupRing& r, int depth) {
  ConjectureRecord rec;
  rec.depth = depth;
  if (depth != 2) return rec;
  for (const auto& pair : subsets_of_size(extremal_list(r), 2)) {
    rec.subsets_tried.push_back(pair);
    auto w = has_maximal_element(r, pair);
    if (w.kind == WitnessKind::Maximal) {
      rec.witness = std::move(w);
      return rec;
    }
  }
  rec.counterexample_candidate = true;
  return rec;
}

VerifyResult verify_certificate(const SemigroupRing& r, const DepthCertificate& c) {
  VerifyResult v;
  auto fail = [&](const std::string& why) {
    v.ok = false;
    v.problems.push_back(why);
  };
  const Semigroup& s = r.semigroup();
  const int d = static_cast<int>(r.dim());
  if (c.depth < 1 || c.depth > d) fail("depth outside [1, d]");
  if (c.koszul_depth && *c.koszul_depth != c.depth) fail("Koszul support disagrees with the certificate");
  auto check_maximal = [&](const AperyWitness& w) {
    if (w.kind != WitnessKind::Maximal) return fail("witness is not a maximal element");
    if (!is_maximal_direct(r, w.element, w.delta)) fail(format_vec(w.element) + " is not maximal in its Apery set");
    if (s.degree(w.factorization.multipliers) != w.element) fail("witness factorization does not match");
  };
  switch (c.method) {
    case DepthMethod::SocleDepth1:
      if (c.depth != 1 || !c.apery) fail("depth-one certificate without witness");
      else check_maximal(*c.apery);
      break;
    case DepthMethod::CMTest:
      if (c.depth != d) fail("CM certificate with depth below d");
      if (d >= 2 && !is_cohen_macaulay(r).cohen_macaulay) fail("CM test fails on re-run");
      break;
    case DepthMethod::D3Trichotomy:
      if (c.depth != 2) fail("trichotomy certificate with depth other than two");
      if (c.pairs.empty()) fail("no pair witness");
      for (const auto& w : c.pairs) {
        if (w.delta.size() != 2) fail("pair witness of wrong size");
        check_maximal(w);
      }
      if (c.apery) check_maximal(*c.apery);
      if (depth1_test(r).depth_one) fail("ring has depth one");
      break;
    case DepthMethod::D4Theorem:
      if (c.d4) {
        const auto& w = *c.d4;
        auto again = check_d4_conditions(r, w.perm, w.b);
        if (!again || again->condition != w.condition) fail("theorem conditions do not hold at " + format_vec(w.b));
        if (!verify_cycle_not_boundary(r, w.cycle)) fail("witness cycle is a boundary");
        if (c.depth != 2) fail("theorem witness with depth other than two");
      } else if (c.regular_sequence) {
        std::vector<Polynomial> polys;
        for (const auto& f : c.regular_sequence->forms) polys.push_back(linear_form(r, f));
        if (!regular_sequence_check(r, polys).regular) fail("sequence is not regular on re-check");
        if (c.depth != 3) fail("regular-sequence certificate with depth other than three");
      } else {
        fail("d4 certificate without witness");
      }
      break;
    case DepthMethod::KoszulSupport:
      if (d - 1 - certified_D(r).top() != c.depth) fail("Koszul support gives a different depth");
      break;
    case DepthMethod::KoszulScan:
      fail("scan results are not certified");
      break;
  }
  return v;
}

}  // namespace sgdepth
