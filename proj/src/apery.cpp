#include "sgdepth/apery.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace sgdepth {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Maximal: return "maximal";
    case WitnessKind::Member: return "member";
    case WitnessKind::None: return "none";
  }
  return "none";
}

std::vector<Vec> apery_finite(const SemigroupRing& r, const std::vector<Vec>& b) {
  const Semigroup& s = r.semigroup();
  for (const auto& beta : b) {
    if (beta.size() != s.dim()) throw Error(ErrorKind::DimensionMismatch, "element of B has the wrong length");
    if (!r.member(beta)) throw Error(ErrorKind::NotInSemigroup, format_vec(beta) + " is not in S");
  }
  // pos(B) = pos(A) iff every extremal ray contains an element of B
  for (std::size_t c = 0; c < s.dim(); ++c) {
    bool covered = std::any_of(b.begin(), b.end(), [&](const Vec& beta) {
      Vec w = s.cone_coords(beta);
      for (std::size_t k = 0; k < w.size(); ++k) {
        if ((k == c) != (w[k] != 0)) return false;
      }
      return true;
    });
    if (!covered) throw Error(ErrorKind::ConeMismatch, "B does not span the cone of S; the Apery set is infinite");
  }
  auto in_ap = [&](const Vec& x) {
    return r.member(x) && std::none_of(b.begin(), b.end(), [&](const Vec& beta) { return r.member(x - beta); });
  };
  std::set<Vec> seen{Vec(s.dim(), 0)};
  std::deque<Vec> todo{Vec(s.dim(), 0)};
  while (!todo.empty()) {
    Vec c = todo.front();
    todo.pop_front();
    for (const auto& g : s.generators()) {
      Vec n = c + g;
      if (seen.count(n) == 0 && in_ap(n)) {
        seen.insert(n);
        todo.push_back(std::move(n));
      }
    }
  }
  std::vector<Vec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), norm_lex_less);
  return out;
}

MonomialIdeal apery_Q_model(const SemigroupRing& r, const std::vector<std::size_t>& delta) {
  return initial_ideal(r.with_variables(delta));
}

std::vector<std::size_t> complement_vars(const SemigroupRing& r, const std::vector<std::size_t>& delta) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < r.num_gens(); ++v) {
    if (std::find(delta.begin(), delta.end(), v) == delta.end()) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Monomial, Vec>> apery_elements_in_box(const SemigroupRing& r,
                                                            const std::vector<std::size_t>& delta,
                                                            std::optional<std::int32_t> box) {
  const MonomialIdeal m = apery_Q_model(r, delta);
  const auto vars = complement_vars(r, delta);
  std::vector<std::int32_t> bounds(kMaxVars, 0);
  for (auto v : vars) bounds[v] = box ? *box : 2 * std::max<std::int32_t>(m.max_exponent(v), 1);
  std::vector<std::pair<Monomial, Vec>> out;
  for (const auto& u : standard_monomials_in_box(m, vars, bounds)) {
    out.emplace_back(u, monomial_degree(r.semigroup(), u));
  }
  return out;
}

bool local_maximality(const SemigroupRing& r, const Vec& b, const std::vector<std::size_t>& delta) {
  const Semigroup& s = r.semigroup();
  if (!r.in_apery(b, delta)) return false;
  for (auto j : s.extremal()) {
    if (std::find(delta.begin(), delta.end(), j) != delta.end()) continue;
    const Vec up = b + s.gen(j);
    bool leaves = std::any_of(delta.begin(), delta.end(), [&](std::size_t i) { return r.member(up - s.gen(i)); });
    if (!leaves) return false;
  }
  return true;
}

bool is_maximal_direct(const SemigroupRing& r, const Vec& b, const std::vector<std::size_t>& delta) {
  if (!r.in_apery(b, delta)) return false;
  const Semigroup& s = r.semigroup();
  for (std::size_t k = 0; k < s.num_gens(); ++k) {
    if (r.in_apery(b + s.gen(k), delta)) return false;
  }
  return true;
}

Vec apery_join_bound(const SemigroupRing& r) {
  const Semigroup& s = r.semigroup();
  Vec bound(s.dim(), 0);
  for (const auto& w : r.apery_extremal()) {
    const Vec c = s.cone_coords(w);
    for (std::size_t k = 0; k < c.size(); ++k) bound[k] = std::max(bound[k], c[k]);
  }
  return bound;
}

std::vector<std::pair<Monomial, Vec>> maximal_candidates(const SemigroupRing& r, const std::vector<std::size_t>& delta) {
  const Semigroup& s = r.semigroup();
  const MonomialIdeal m = apery_Q_model(r, delta);
  const auto vars = complement_vars(r, delta);
  const Vec bound = apery_join_bound(r);
  std::vector<std::pair<Monomial, Vec>> out;
  Monomial cur;
  Vec coords(s.dim(), 0);
  auto fits = [&](const Vec& c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] > bound[k]) return false;
    }
    return true;
  };
  // cone coordinates only grow along the search, so the bound prunes whole branches
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == vars.size()) {
      out.emplace_back(cur, monomial_degree(s, cur));
      return;
    }
    const std::size_t v = vars[k];
    const Vec saved = coords;
    for (;;) {
      self(self, k + 1);
      cur[v] += 1;
      coords = coords + s.gen_cone(v);
      if (!fits(coords) || m.contains(cur)) break;
    }
    cur[v] = 0;
    coords = saved;
  };
  if (!m.contains(cur)) rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return norm_lex_less(a.second, b.second); });
  return out;
}

AperyWitness has_maximal_element(const SemigroupRing& r, const std::vector<std::size_t>& delta) {
  const Semigroup& s = r.semigroup();
  for (auto i : delta) {
    if (i >= s.num_gens() || !s.is_extremal(i)) {
      throw Error(ErrorKind::InvalidInput, "delta must consist of extremal generator indices");
    }
  }
  AperyWitness w;
  w.delta = delta;
  std::sort(w.delta.begin(), w.delta.end());
  w.delta.erase(std::unique(w.delta.begin(), w.delta.end()), w.delta.end());

  const GroebnerBasis& j = r.with_variables(w.delta);
  const auto vars = complement_vars(r, w.delta);
  for (const auto& [u, b] : maximal_candidates(r, w.delta)) {
    const bool top = std::all_of(vars.begin(), vars.end(), [&](std::size_t v) { return j.contains(u * variable(v)); });
    if (!top) continue;
    if (w.all_maximal.empty()) {
      w.kind = WitnessKind::Maximal;
      w.element = b;
      w.factorization.multipliers = u.to_vec(s.num_gens());
    }
    w.all_maximal.push_back(b);
  }

  // membership-only route: walk Ap(S, delta) under the same bound
  const Vec bound = apery_join_bound(r);
  auto fits = [&](const Vec& b) {
    const Vec c = s.cone_coords(b);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] > bound[k]) return false;
    }
    return true;
  };
  std::set<Vec> seen{Vec(s.dim(), 0)};
  std::deque<Vec> todo{Vec(s.dim(), 0)};
  std::vector<Vec> local;
  while (!todo.empty()) {
    Vec c = todo.front();
    todo.pop_front();
    if (local_maximality(r, c, w.delta)) local.push_back(c);
    for (auto k : vars) {
      Vec n = c + s.gen(k);
      if (seen.count(n) == 0 && fits(n) && r.in_apery(n, w.delta)) {
        seen.insert(n);
        todo.push_back(std::move(n));
      }
    }
  }
  if (!local.empty()) {
    std::sort(local.begin(), local.end(), norm_lex_less);
    w.local_found = true;
    w.local_witness = local.front();
  }
  return w;
}

CMResult is_cohen_macaulay(const SemigroupRing& r) {
  const Semigroup& s = r.semigroup();
  const auto& ap = r.apery_extremal();
  CMResult res;
  res.apery_size = ap.size();
  std::vector<Vec> basis;
  for (auto i : s.extremal()) basis.push_back(s.gen(i));
  const Lattice lat(basis, s.dim());
  std::map<Vec, Vec> coset;
  for (const auto& a : ap) {
    Vec key = lat.reduce(a);
    auto [it, fresh] = coset.emplace(key, a);
    if (!fresh) {
      if (!in_lattice(a - it->second, basis)) throw Error(ErrorKind::Mismatch, "coset representative disagrees with HNF test");
      res.counterexample = std::make_pair(it->second, a);
      return res;
    }
  }
  res.cohen_macaulay = true;
  return res;
}

ZeroDivisorResult is_zero_divisor(const SemigroupRing& r, std::size_t j, std::size_t i) {
  if (i == j) throw Error(ErrorKind::InvalidInput, "zero-divisor test needs i != j");
  const Semigroup& s = r.semigroup();
  const GroebnerBasis& jb = r.with_variables({i});
  const GroebnerBasis colon = colon_by_variable(jb, j);
  ZeroDivisorResult res;
  std::vector<Vec> witnesses;
  for (const auto& g : colon.elements) {
    auto nf = normal_form(jb.elements, g, jb.order);
    if (!nf) continue;
    res.zero_divisor = true;
    // graded pieces of k[x]/(I_A + x_i) have dimension at most one
    if (nf->has_trail) throw Error(ErrorKind::Mismatch, "normal form of a colon element is not a monomial");
    witnesses.push_back(monomial_degree(s, nf->lead));
  }
  if (res.zero_divisor) {
    std::sort(witnesses.begin(), witnesses.end(), norm_lex_less);
    const auto idx = std::vector<std::size_t>{i};
    const Vec& b = witnesses.front();
    if (!r.in_apery(b, idx) || r.in_apery(b + s.gen(j), idx)) {
      throw Error(ErrorKind::Mismatch, "zero-divisor witness " + format_vec(b) + " fails the Apery test");
    }
    res.witness = b;
  }
  return res;
}

RegularPairResult is_regular_pair(const SemigroupRing& r, std::size_t i, std::size_t j) {
  const Semigroup& s = r.semigroup();
  if (i == j || !s.is_extremal(i) || !s.is_extremal(j)) {
    throw Error(ErrorKind::InvalidInput, "regular pair test needs two distinct extremal indices");
  }
  RegularPairResult res;
  res.regular = !is_zero_divisor(r, j, i).zero_divisor;
  const Lattice lat({s.gen(i), s.gen(j)}, s.dim());
  std::set<Vec> keys;
  res.criterion_holds = true;
  const auto elems = apery_elements_in_box(r, {i, j});
  res.box_elements = elems.size();
  for (const auto& [u, b] : elems) {
    if (!keys.insert(lat.reduce(b)).second) {
      res.criterion_holds = false;
      break;
    }
  }
  return res;
}

Polynomial linear_form(const SemigroupRing& r, const std::vector<std::pair<std::size_t, int>>& coeffs) {
  std::vector<Term> t;
  for (auto [v, c] : coeffs) {
    if (v >= r.num_gens()) throw Error(ErrorKind::InvalidInput, "variable index out of range");
    t.push_back({variable(v), c});
  }
  return Polynomial(std::move(t), r.order());
}

namespace {

std::optional<std::size_t> as_variable(const Polynomial& f) {
  if (f.terms().size() != 1) return std::nullopt;
  const Monomial& m = f.terms().front().m;
  if (m.total_degree() != 1) return std::nullopt;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (m[v] == 1) return v;
  }
  return std::nullopt;
}

bool poly_contained(const std::vector<Polynomial>& sub, const std::vector<Polynomial>& basis,
                    const MonomialOrder& order) {
  return std::all_of(sub.begin(), sub.end(),
                     [&](const Polynomial& p) { return normal_form(basis, p, order).is_zero(); });
}

}  // namespace

RegularSequenceResult regular_sequence_check(const SemigroupRing& r, const std::vector<Polynomial>& polys) {
  RegularSequenceResult res;
  const MonomialOrder& order = r.order();
  std::optional<GroebnerBasis> binom = r.toric();
  std::vector<std::size_t> killed;
  std::vector<Polynomial> general;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto v = as_variable(polys[k]);
    if (binom && v) {
      const GroebnerBasis& cur = r.with_variables(killed);
      if (!ideal_contained(colon_by_variable(cur, *v), cur)) {
        res.failed_at = k;
        return res;
      }
      killed.push_back(*v);
      continue;
    }
    if (binom) {
      general = to_polynomials(r.with_variables(killed));
      binom.reset();
    }
    const Polynomial f(polys[k].terms(), order);
    if (!poly_contained(colon_by_polynomial(general, f, order), general, order)) {
      res.failed_at = k;
      return res;
    }
    general.push_back(f);
    general = polynomial_buchberger(general, order);
  }
  res.regular = true;
  return res;
}

DifferenceCheck difference_nonzero_divisor(const SemigroupRing& r, std::size_t i, std::size_t j, std::size_t k) {
  DifferenceCheck res;
  res.applies = is_zero_divisor(r, j, i).zero_divisor && is_zero_divisor(r, k, i).zero_divisor;
  if (!res.applies) return res;
  const auto basis = to_polynomials(r.with_variables({i}));
  const Polynomial f = linear_form(r, {{j, 1}, {k, -1}});
  res.nonzero_divisor = poly_contained(colon_by_polynomial(basis, f, r.order()), basis, r.order());
  return res;
}

}  // namespace sgdepth
