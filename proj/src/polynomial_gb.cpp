#include "sgdepth/polynomial_gb.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sgdepth/core.hpp"
#include "sgdepth/detail/pair_queue.hpp"

namespace sgdepth {

namespace {

void canonicalize(std::vector<Term>& t, const MonomialOrder& order) {
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.m, b.m) > 0; });
  std::vector<Term> out;
  for (auto& x : t) {
    if (!out.empty() && out.back().m == x.m) {
      out.back().c += x.c;
    } else {
      out.push_back(std::move(x));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& x) { return x.c == 0; }), out.end());
  t = std::move(out);
}

}  // namespace

Polynomial::Polynomial(std::vector<Term> terms, const MonomialOrder& order) : terms_(std::move(terms)) {
  canonicalize(terms_, order);
}

Polynomial Polynomial::from_binomial(const Binomial& b) {
  Polynomial p;
  p.terms_.push_back({b.lead, 1});
  if (b.has_trail) p.terms_.push_back({b.trail, -1});
  return p;
}

void Polynomial::make_monic() {
  if (terms_.empty() || terms_.front().c == 1) return;
  const mpq_class inv = 1 / terms_.front().c;
  for (auto& t : terms_) t.c *= inv;
}

void Polynomial::add_scaled(const Polynomial& other, const mpq_class& c, const Monomial& m,
                            const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial om = other.terms_[j].m * m;
    if (i == terms_.size()) {
      out.push_back({om, c * other.terms_[j++].c});
      continue;
    }
    int cmp = order.compare(terms_[i].m, om);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({om, c * other.terms_[j++].c});
    } else {
      mpq_class s = terms_[i].c + c * other.terms_[j].c;
      if (s != 0) out.push_back({om, s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::mul(const Polynomial& other, const MonomialOrder& order) const {
  Polynomial r;
  for (const auto& t : terms_) r.add_scaled(other, t.c, t.m, order);
  return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor, const MonomialOrder& order) const {
  if (divisor.is_zero()) throw Error(ErrorKind::NonDivisible, "division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quot;
  while (!rem.is_zero()) {
    if (!divisor.lead().divides(rem.lead())) throw Error(ErrorKind::NonDivisible, "polynomial division leaves a remainder");
    Monomial q = rem.lead() / divisor.lead();
    mpq_class c = rem.lead_coeff() / divisor.lead_coeff();
    quot.terms_.push_back({q, c});
    rem.add_scaled(divisor, -c, q, order);
  }
  return quot;
}

bool Polynomial::free_of(std::size_t v) const {
  return std::all_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.m[v] == 0; });
}

std::string Polynomial::to_string(std::size_t nvars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0) os << (t.c < 0 ? " - " : " + ");
    else if (t.c < 0) os << '-';
    mpq_class a = abs(t.c);
    if (a != 1 || t.m.is_one()) {
      os << a.get_str();
      if (!t.m.is_one()) os << '*';
    }
    if (!t.m.is_one()) os << t.m.to_string(nvars);
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

namespace {

Polynomial reduce_full(const std::vector<Polynomial>& basis, const std::vector<std::size_t>* subset, Polynomial f,
                       const MonomialOrder& order) {
  Polynomial rem;
  std::vector<Term> done;
  while (!f.is_zero()) {
    const Term& lt = f.terms().front();
    const Polynomial* hit = nullptr;
    auto try_one = [&](const Polynomial& g) {
      if (!g.is_zero() && g.lead().divides(lt.m)) {
        hit = &g;
        return true;
      }
      return false;
    };
    if (subset != nullptr) {
      for (auto i : *subset) {
        if (try_one(basis[i])) break;
      }
    } else {
      for (const auto& g : basis) {
        if (try_one(g)) break;
      }
    }
    if (hit != nullptr) {
      mpq_class c = lt.c / hit->lead_coeff();
      Monomial q = lt.m / hit->lead();
      f.add_scaled(*hit, -c, q, order);
    } else {
      done.push_back(lt);
      Polynomial single({lt}, order);
      f.add_scaled(single, -1, Monomial{}, order);
    }
  }
  return Polynomial(std::move(done), order);
}

}  // namespace

Polynomial normal_form(const std::vector<Polynomial>& basis, const Polynomial& f, const MonomialOrder& order) {
  return reduce_full(basis, nullptr, f, order);
}

std::vector<Polynomial> polynomial_buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<Polynomial> all;
  std::vector<std::size_t> active;
  detail::PairQueue queue(order);

  auto add = [&](Polynomial h) {
    h.make_monic();
    queue.insert(h.lead());
    all.push_back(std::move(h));
    active.clear();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      if (queue.is_active(i)) active.push_back(i);
    }
  };

  std::vector<Polynomial> seeds;
  for (const auto& g : gens) {
    Polynomial p(g.terms(), order);
    if (!p.is_zero()) seeds.push_back(std::move(p));
  }
  std::sort(seeds.begin(), seeds.end(),
            [&](const Polynomial& a, const Polynomial& b) { return order.less(a.lead(), b.lead()); });
  for (auto& g : seeds) {
    Polynomial h = reduce_full(all, &active, g, order);
    if (!h.is_zero()) add(std::move(h));
  }

  while (!queue.empty()) {
    auto [i, j] = queue.pop();
    const Polynomial& f = all[i];
    const Polynomial& g = all[j];
    const Monomial l = lcm(f.lead(), g.lead());
    Polynomial s;
    s.add_scaled(f, 1, l / f.lead(), order);
    s.add_scaled(g, -1, l / g.lead(), order);
    Polynomial h = reduce_full(all, &active, std::move(s), order);
    if (!h.is_zero()) add(std::move(h));
  }

  std::vector<Polynomial> result;
  for (auto i : active) result.push_back(all[i]);
  for (std::size_t k = 0; k < result.size(); ++k) {
    // reduce the tail only; the lead is not divisible by any other lead
    Polynomial tail(std::vector<Term>(result[k].terms().begin() + 1, result[k].terms().end()), order);
    Polynomial rt = reduce_full(result, nullptr, tail, order);
    Polynomial head({result[k].terms().front()}, order);
    head.add_scaled(rt, 1, Monomial{}, order);
    result[k] = std::move(head);
  }
  std::sort(result.begin(), result.end(),
            [&](const Polynomial& a, const Polynomial& b) { return order.less(a.lead(), b.lead()); });
  return result;
}

}  // namespace sgdepth
