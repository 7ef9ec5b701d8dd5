#include "sgdepth/grobner.hpp"

#include <algorithm>
#include <sstream>

namespace sgdepth {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.e < b.e;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end(), MonomialLexLess{});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::int32_t MonomialIdeal::max_exponent(std::size_t v) const {
  std::int32_t best = 0;
  for (const auto& g : gens_) best = std::max(best, g[v]);
  return best;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string(nvars_);
  os << '>';
  return os.str();
}

bool GroebnerBasis::contains(const Binomial& f) const { return !normal_form(elements, f, order).has_value(); }

MonomialOrder a_graded_order(const Semigroup& s, bool unit_weights) {
  std::vector<std::int64_t> w(s.num_gens(), 1);
  if (!unit_weights) {
    for (std::size_t i = 0; i < s.num_gens(); ++i) w[i] = norm1(s.gen(i));
  }
  std::vector<std::size_t> ranking;
  for (std::size_t i = 0; i < s.num_gens(); ++i) {
    if (!s.is_extremal(i)) ranking.push_back(i);
  }
  for (auto i : s.extremal()) ranking.push_back(i);
  return MonomialOrder::weighted_revlex(std::move(w), std::move(ranking));
}

GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order, std::size_t nvars,
                         std::vector<std::int64_t> grading) {
  GroebnerBasis g;
  g.order = order;
  g.nvars = nvars;
  g.grading = std::move(grading);
  g.elements = binomial_buchberger(gens, order);
  return g;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  return polynomial_buchberger(gens, order);
}

GroebnerBasis change_order(const GroebnerBasis& g, const MonomialOrder& order) {
  if (g.order == order) return g;
  return buchberger(g.elements, order, g.nvars, g.grading);
}

GroebnerBasis add_variables(const GroebnerBasis& g, const std::vector<std::size_t>& vars) {
  std::vector<Binomial> gens = g.elements;
  for (auto v : vars) gens.push_back(Binomial::monomial(variable(v)));
  return buchberger(gens, g.order, g.nvars, g.grading);
}

MonomialIdeal initial_ideal(const GroebnerBasis& g) {
  std::vector<Monomial> leads;
  for (const auto& b : g.elements) leads.push_back(b.lead);
  return MonomialIdeal(g.nvars, std::move(leads));
}

std::vector<Monomial> standard_monomials_in_box(const MonomialIdeal& m, const std::vector<std::size_t>& vars,
                                                const std::vector<std::int32_t>& box) {
  std::vector<Monomial> out;
  // only generators supported on `vars` can divide such monomials
  std::uint32_t allowed = 0;
  for (auto v : vars) allowed |= 1u << v;
  std::vector<Monomial> relevant;
  for (const auto& g : m.generators()) {
    if ((g.support_mask() & ~allowed) == 0) relevant.push_back(g);
  }
  auto inside = [&](const Monomial& x) {
    return std::any_of(relevant.begin(), relevant.end(), [&](const Monomial& g) { return g.divides(x); });
  };
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == vars.size()) {
      out.push_back(cur);
      return;
    }
    const std::size_t v = vars[k];
    for (std::int32_t t = 0; t <= box[v]; ++t) {
      cur[v] = t;
      if (inside(cur)) break;
      self(self, k + 1);
    }
    cur[v] = 0;
  };
  if (!inside(cur)) rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.e < b.e;
  });
  return out;
}

std::vector<Monomial> standard_monomials_up_to_degree(const MonomialIdeal& m, const std::vector<std::size_t>& vars,
                                                      std::int32_t max_degree) {
  std::vector<std::int32_t> box(kMaxVars, 0);
  for (auto v : vars) box[v] = max_degree;
  std::uint32_t allowed = 0;
  for (auto v : vars) allowed |= 1u << v;
  std::vector<Monomial> relevant;
  for (const auto& g : m.generators()) {
    if ((g.support_mask() & ~allowed) == 0) relevant.push_back(g);
  }
  auto inside = [&](const Monomial& x) {
    return std::any_of(relevant.begin(), relevant.end(), [&](const Monomial& g) { return g.divides(x); });
  };
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t k, std::int32_t left) -> void {
    if (k == vars.size()) {
      out.push_back(cur);
      return;
    }
    const std::size_t v = vars[k];
    for (std::int32_t t = 0; t <= left; ++t) {
      cur[v] = t;
      if (inside(cur)) break;
      self(self, k + 1, left - t);
    }
    cur[v] = 0;
  };
  if (!inside(cur)) rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.e < b.e;
  });
  return out;
}

std::vector<Monomial> socle_monomials(const MonomialIdeal& m, const std::vector<std::size_t>& vars) {
  std::uint32_t allowed = 0;
  for (auto v : vars) allowed |= 1u << v;
  std::vector<std::int32_t> box(kMaxVars, 0);
  for (auto v : vars) {
    std::int32_t mx = 0;
    for (const auto& g : m.generators()) {
      if ((g.support_mask() & ~allowed) == 0) mx = std::max(mx, g[v]);
    }
    if (mx == 0) return {};
    box[v] = mx - 1;
  }
  std::vector<Monomial> out;
  for (const auto& u : standard_monomials_in_box(m, vars, box)) {
    bool socle = std::all_of(vars.begin(), vars.end(), [&](std::size_t v) { return m.contains(u * variable(v)); });
    if (socle) out.push_back(u);
  }
  return out;
}

namespace {

MonomialOrder revlex_with_least(const GroebnerBasis& g, std::size_t i) {
  std::vector<std::size_t> ranking;
  for (auto v : g.order.ranking()) {
    if (v != i) ranking.push_back(v);
  }
  ranking.push_back(i);
  std::vector<std::int64_t> w = g.grading;
  if (w.empty()) w.assign(g.nvars, 1);
  return MonomialOrder::weighted_revlex(std::move(w), std::move(ranking));
}

GroebnerBasis divide_out(const GroebnerBasis& g, std::size_t i, bool fully) {
  if (g.grading.empty()) throw Error(ErrorKind::PreconditionFailed, "colon by a variable needs a homogeneous basis");
  const MonomialOrder o = revlex_with_least(g, i);
  GroebnerBasis h = change_order(g, o);
  std::vector<Binomial> quotients;
  for (auto b : h.elements) {
    std::int32_t k = b.lead[i];
    if (b.has_trail) k = std::min(k, b.trail[i]);
    if (!fully) k = std::min<std::int32_t>(k, 1);
    b.lead[i] -= k;
    if (b.has_trail) b.trail[i] -= k;
    quotients.push_back(b);
  }
  return buchberger(quotients, o, g.nvars, g.grading);
}

}  // namespace

GroebnerBasis colon_by_variable(const GroebnerBasis& g, std::size_t i) { return divide_out(g, i, false); }

GroebnerBasis saturate_by_variable(const GroebnerBasis& g, std::size_t i) { return divide_out(g, i, true); }

bool ideal_contained(const GroebnerBasis& sub, const GroebnerBasis& super) {
  return std::all_of(sub.elements.begin(), sub.elements.end(), [&](const Binomial& b) { return super.contains(b); });
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) { return ideal_contained(a, b) && ideal_contained(b, a); }

GroebnerBasis toric_ideal(const Semigroup& s, const MonomialOrder& order) {
  const std::size_t e = s.num_gens();
  if (e > kMaxVars) throw Error(ErrorKind::InvalidInput, "too many generators for the Groebner engine");
  std::vector<std::int64_t> grading(e);
  for (std::size_t i = 0; i < e; ++i) grading[i] = norm1(s.gen(i));

  std::vector<Binomial> lattice;
  for (const auto& u : integer_kernel_basis(s.matrix_rows(), e)) {
    Monomial plus, minus;
    for (std::size_t i = 0; i < e; ++i) {
      if (u[i] > 0) plus[i] = static_cast<std::int32_t>(u[i]);
      if (u[i] < 0) minus[i] = static_cast<std::int32_t>(-u[i]);
    }
    lattice.push_back({plus, minus, true});
  }
  const MonomialOrder base = MonomialOrder::weighted_revlex(grading, order.ranking());
  GroebnerBasis g = buchberger(lattice, base, e, grading);
  for (std::size_t i = 0; i < e; ++i) g = saturate_by_variable(g, i);
  return change_order(g, order);
}

std::vector<Polynomial> to_polynomials(const GroebnerBasis& g) {
  std::vector<Polynomial> out;
  for (const auto& b : g.elements) out.push_back(Polynomial::from_binomial(b));
  return out;
}

std::vector<Polynomial> colon_by_polynomial(const std::vector<Polynomial>& j, const Polynomial& f,
                                            const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::PreconditionFailed, "colon by the zero polynomial");
  const std::size_t t = order.nvars();
  const MonomialOrder ext = order.with_extra_variable();
  const MonomialOrder elim = MonomialOrder::elimination({t}, ext);
  const Monomial tv = variable(t);

  std::vector<Polynomial> gens;
  for (const auto& g : j) gens.push_back(Polynomial(g.mul_monomial(tv).terms(), elim));
  Polynomial ff(f.terms(), elim);
  Polynomial one_minus_t({Term{Monomial{}, 1}, Term{tv, -1}}, elim);
  gens.push_back(ff.mul(one_minus_t, elim));

  const Polynomial fo(f.terms(), order);
  std::vector<Polynomial> quotients;
  for (const auto& g : polynomial_buchberger(gens, elim)) {
    if (!g.free_of(t)) continue;
    Polynomial go(g.terms(), order);
    quotients.push_back(go.exact_div(fo, order));
  }
  return polynomial_buchberger(quotients, order);
}

Vec monomial_degree(const Semigroup& s, const Monomial& m) {
  Vec b(s.dim(), 0);
  for (std::size_t i = 0; i < s.num_gens(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t k = 0; k < s.dim(); ++k) b[k] += static_cast<std::int64_t>(m[i]) * s.gen(i)[k];
  }
  return b;
}

}  // namespace sgdepth
