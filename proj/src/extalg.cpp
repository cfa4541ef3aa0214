#include "wtate/extalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "wtate/linalg.hpp"

namespace wtate {

std::string to_string(Bidegree b) { return "(" + std::to_string(b.deg) + ";" + std::to_string(b.hom) + ")"; }

std::string to_string(Twist t) { return "w_E(" + std::to_string(t.c) + ";" + std::to_string(t.s) + ")"; }

ExtAlgebra::ExtAlgebra(const WeightedRing& R) : weights_(R.weights()), field_(R.field()) {
  for (int a : weights_) total_weight_ += a;
}

Bidegree ExtAlgebra::degree(Subset T) const {
  Bidegree b;
  for (int i = 0; i < num_vars(); ++i)
    if (T >> i & 1u) {
      b.deg -= weights_[i];
      b.hom -= 1;
    }
  return b;
}

int exterior_sign(Subset S, Subset T) {
  int inversions = 0;
  for (Subset s = S; s; s &= s - 1) {
    int i = std::countr_zero(s);
    inversions += std::popcount(T & ((Subset{1} << i) - 1));
  }
  return inversions % 2 ? -1 : 1;
}

ExtElement ExtElement::monomial(Subset T, FieldElement c) {
  ExtElement e;
  if (!c.is_zero()) e.terms_[T] = c;
  return e;
}

FieldElement ExtElement::coefficient(Subset T) const {
  auto it = terms_.find(T);
  return it == terms_.end() ? FieldElement() : it->second;
}

void ExtElement::add_term(Subset T, FieldElement c, const PrimeField& F) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(T, c);
  if (fresh) return;
  it->second = F.add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

ExtElement ExtElement::add(const ExtElement& o, const PrimeField& F) const {
  ExtElement r = *this;
  for (auto [T, c] : o.terms_) r.add_term(T, c, F);
  return r;
}

ExtElement ExtElement::scale(FieldElement c, const PrimeField& F) const {
  ExtElement r;
  if (c.is_zero()) return r;
  for (auto [T, v] : terms_) r.terms_[T] = F.mul(v, c);
  return r;
}

std::optional<Bidegree> ExtElement::homogeneous_degree(const ExtAlgebra& E) const {
  if (terms_.empty()) return std::nullopt;
  Bidegree d = E.degree(terms_.begin()->first);
  for (auto& [T, c] : terms_)
    if (E.degree(T) != d) return std::nullopt;
  return d;
}

ExtElement ext_multiply(const ExtElement& f, const ExtElement& g, const PrimeField& F) {
  ExtElement r;
  for (auto [S, a] : f.terms())
    for (auto [T, b] : g.terms()) {
      if (S & T) continue;
      FieldElement c = F.mul(a, b);
      r.add_term(S | T, exterior_sign(S, T) < 0 ? F.neg(c) : c, F);
    }
  return r;
}

Bidegree ExtFreeModule::generator_degree(std::size_t k) const {
  return E_.top() - Bidegree{summands_[k].c, summands_[k].s};
}

Twist ExtFreeModule::twist_with_generator_at(const ExtAlgebra& E, Bidegree x) {
  Bidegree t = E.top() - x;
  return {t.deg, t.hom};
}

std::vector<ExpandedBasisElement> expand_to_vector_space(const ExtFreeModule& F) {
  std::vector<ExpandedBasisElement> out;
  const auto& E = F.algebra();
  out.reserve(F.rank() * E.dimension());
  for (std::size_t g = 0; g < F.rank(); ++g)
    for (Subset T = 0; T < E.dimension(); ++T) out.push_back({g, T, F.generator_degree(g) + E.degree(T)});
  return out;
}

std::map<Bidegree, int> socle_counts(const ExtFreeModule& F) {
  const auto& E = F.algebra();
  const auto& K = E.field();
  auto basis = expand_to_vector_space(F);
  std::map<Bidegree, std::vector<std::size_t>> by_degree;
  for (std::size_t k = 0; k < basis.size(); ++k) by_degree[basis[k].degree].push_back(k);
  std::map<std::pair<std::size_t, Subset>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[{basis[k].gen, basis[k].subset}] = k;

  std::map<Bidegree, int> out;
  for (const auto& [x, members] : by_degree) {
    // Rows: coordinates of v * e_i for every i, all stacked.
    std::vector<std::map<std::size_t, std::size_t>> row_of(E.num_vars());
    std::size_t rows = 0;
    for (int i = 0; i < E.num_vars(); ++i) {
      auto it = by_degree.find(x + E.degree(Subset{1} << i));
      if (it == by_degree.end()) continue;
      for (std::size_t k : it->second) row_of[i][k] = rows++;
    }
    DenseMatrix A(rows, members.size());
    for (std::size_t c = 0; c < members.size(); ++c) {
      const auto& b = basis[members[c]];
      for (int i = 0; i < E.num_vars(); ++i) {
        Subset bit = Subset{1} << i;
        if (b.subset & bit) continue;
        std::size_t target = index.at({b.gen, b.subset | bit});
        A(row_of[i].at(target), c) = exterior_sign(b.subset, bit) < 0 ? K.neg(K.one()) : K.one();
      }
    }
    int kernel = static_cast<int>(members.size() - rank(K, A));
    if (kernel > 0) out[x] = kernel;
  }
  return out;
}

bool ExtMatrix::is_homogeneous(const ExtFreeModule& target, const ExtFreeModule& source, Bidegree declared) const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = (*this)(r, c);
      if (e.is_zero()) continue;
      auto d = e.homogeneous_degree(target.algebra());
      if (!d || *d != source.generator_degree(c) + declared - target.generator_degree(r)) return false;
    }
  return true;
}

std::string format_summands(const std::map<Twist, int>& counts) {
  std::vector<std::pair<Twist, int>> items;
  for (auto& [t, r] : counts)
    if (r > 0) items.push_back({t, r});
  if (items.empty()) return "0";
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.filtration() != b.first.filtration()) return a.first.filtration() > b.first.filtration();
    return a.first.c > b.first.c;
  });
  std::ostringstream os;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) os << " + ";
    os << to_string(items[k].first);
    if (items[k].second > 1) os << '^' << items[k].second;
  }
  return os.str();
}

}  // namespace wtate
