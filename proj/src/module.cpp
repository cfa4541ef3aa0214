#include "wtate/module.hpp"

#include <algorithm>

namespace wtate {

ModuleElement ModuleElement::from_terms(std::vector<ModuleTerm> terms, const PrimeField& F,
                                        const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return order.compare(a.mono, a.pos, b.mono, b.pos) > 0;
  });
  ModuleElement v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().pos == t.pos && v.terms_.back().mono == t.mono) {
      v.terms_.back().coeff = F.add(v.terms_.back().coeff, t.coeff);
      if (v.terms_.back().coeff.is_zero()) v.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

ModuleElement ModuleElement::from_components(const std::vector<Polynomial>& comps, const PrimeField& F,
                                             const ModuleOrder& order) {
  std::vector<ModuleTerm> terms;
  for (std::size_t p = 0; p < comps.size(); ++p)
    for (const auto& t : comps[p].terms()) terms.push_back({t.mono, static_cast<int>(p), t.coeff});
  return from_terms(std::move(terms), F, order);
}

ModuleElement ModuleElement::basis_vector(int pos, int nvars, const PrimeField& F) {
  ModuleElement v;
  v.terms_.push_back({Monomial::one(nvars), pos, F.one()});
  return v;
}

Polynomial ModuleElement::component(int pos, const PrimeField& F) const {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : terms_)
    if (t.pos == pos) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(std::move(terms), F);
}

std::optional<int> ModuleElement::homogeneous_degree(const std::vector<int>& ambient_degrees) const {
  if (terms_.empty()) return std::nullopt;
  auto deg = [&](const ModuleTerm& t) { return t.mono.degree() + ambient_degrees.at(t.pos); };
  int d = deg(terms_.front());
  for (const auto& t : terms_)
    if (deg(t) != d) return std::nullopt;
  return d;
}

ModuleElement ModuleElement::add_multiple(FieldElement c, const Monomial& m, const ModuleElement& other,
                                          const PrimeField& F, const ModuleOrder& order) const {
  if (c.is_zero() || other.is_zero()) return *this;
  ModuleElement r;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial shifted = m * other.terms_[j].mono;
    int pj = other.terms_[j].pos;
    int cmp = i == terms_.size() ? -1 : order.compare(terms_[i].mono, terms_[i].pos, shifted, pj);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({std::move(shifted), pj, F.mul(c, other.terms_[j].coeff)});
      ++j;
    } else {
      FieldElement s = F.add(terms_[i].coeff, F.mul(c, other.terms_[j].coeff));
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, pj, s});
      ++i;
      ++j;
    }
  }
  return r;
}

ModuleElement ModuleElement::add(const ModuleElement& other, const PrimeField& F, const ModuleOrder& order) const {
  if (other.is_zero()) return *this;
  return add_multiple(F.one(), Monomial::one(other.lead().mono.num_vars()), other, F, order);
}

ModuleElement ModuleElement::scale(FieldElement c, const PrimeField& F) const {
  ModuleElement r;
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

ModuleElement ModuleElement::multiply(const Polynomial& f, const PrimeField& F, const ModuleOrder& order) const {
  ModuleElement r;
  for (const auto& t : f.terms()) r = r.add_multiple(t.coeff, t.mono, *this, F, order);
  return r;
}

ModuleElement ModuleElement::shift_positions(int delta, int limit, const PrimeField& F,
                                             const ModuleOrder& order) const {
  std::vector<ModuleTerm> terms;
  for (const auto& t : terms_) {
    int p = t.pos + delta;
    if (p >= 0 && p < limit) terms.push_back({t.mono, p, t.coeff});
  }
  return from_terms(std::move(terms), F, order);
}

ModuleElement ModuleElement::remove_position(int pos) const {
  ModuleElement r;
  for (const auto& t : terms_) {
    if (t.pos == pos) continue;
    r.terms_.push_back({t.mono, t.pos > pos ? t.pos - 1 : t.pos, t.coeff});
  }
  return r;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.pos != y.pos || x.coeff != y.coeff || !(x.mono == y.mono)) return false;
  }
  return true;
}

}  // namespace wtate
