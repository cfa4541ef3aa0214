#include "wtate/resolution.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace wtate {

// ---------------------------------------------------------------------------
// Groebner bases

namespace {

struct PairItem {
  int degree;
  long seq;
  int kind;  // 0: input generator, 1: S-pair
  std::size_t a, b;
  bool operator>(const PairItem& o) const { return std::tie(degree, seq) > std::tie(o.degree, o.seq); }
};

ModuleElement make_monic(const ModuleElement& v, const PrimeField& F) {
  if (v.is_zero() || v.lead().coeff == F.one()) return v;
  return v.scale(F.inv(v.lead().coeff), F);
}

}  // namespace

GroebnerBasis::GroebnerBasis(const WeightedRing& R, std::vector<int> ambient_degrees,
                             const std::vector<ModuleElement>& gens, ModuleOrder order)
    : F_(R.field()), degrees_(std::move(ambient_degrees)), order_(order) {
  const int rank = static_cast<int>(degrees_.size());
  std::vector<ModuleElement> input;
  std::vector<int> input_deg;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms())
      if (t.pos < 0 || t.pos >= rank) throw Error("module element position out of range");
    auto d = g.homogeneous_degree(degrees_);
    if (!d) throw InhomogeneousError("Groebner basis input is not homogeneous");
    input.push_back(ModuleElement::from_terms(g.terms(), F_, order_));
    input_deg.push_back(*d);
  }

  std::priority_queue<PairItem, std::vector<PairItem>, std::greater<>> queue;
  long seq = 0;
  for (std::size_t i = 0; i < input.size(); ++i) queue.push({input_deg[i], seq++, 0, i, 0});

  auto& basis = gens_;
  const auto& weights = R.weights();
  while (!queue.empty()) {
    PairItem item = queue.top();
    queue.pop();
    ModuleElement h;
    if (item.kind == 0) {
      h = input[item.a];
    } else {
      const auto& f = basis[item.a];
      const auto& g = basis[item.b];
      Monomial l = f.lead().mono.lcm(g.lead().mono, weights);
      h = ModuleElement().add_multiple(F_.one(), l / f.lead().mono, f, F_, order_);
      h = h.add_multiple(F_.neg(F_.one()), l / g.lead().mono, g, F_, order_);
    }
    h = make_monic(reduce(std::move(h), false), F_);
    if (h.is_zero()) continue;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].lead().pos != h.lead().pos) continue;
      Monomial l = basis[k].lead().mono.lcm(h.lead().mono, weights);
      queue.push({l.degree() + degrees_[h.lead().pos], seq++, 1, k, basis.size()});
    }
    basis.push_back(std::move(h));
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<ModuleElement> minimal;
  // (basis aliases gens_ here)
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& li = basis[i].lead();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& lj = basis[j].lead();
      if (lj.pos == li.pos && lj.mono.divides(li.mono) && (!(lj.mono == li.mono) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  gens_ = minimal;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(gens_[j]);
    std::swap(gens_, others);
    ModuleElement tail = reduce(minimal[i], true);
    std::swap(gens_, others);
    gens_[i] = make_monic(tail, F_);
  }
  std::sort(gens_.begin(), gens_.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    return order_.compare(a.lead().mono, a.lead().pos, b.lead().mono, b.lead().pos) > 0;
  });
}

ModuleElement GroebnerBasis::reduce(ModuleElement v, bool full) const {
  std::vector<ModuleTerm> done;
  while (!v.is_zero()) {
    const ModuleTerm lt = v.lead();
    const ModuleElement* divisor = nullptr;
    for (const auto& g : gens_) {
      if (g.lead().pos == lt.pos && g.lead().mono.divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      FieldElement c = F_.neg(F_.div(lt.coeff, divisor->lead().coeff));
      v = v.add_multiple(c, lt.mono / divisor->lead().mono, *divisor, F_, order_);
      continue;
    }
    if (!full) break;
    done.push_back(lt);
    std::vector<ModuleTerm> rest(v.terms().begin() + 1, v.terms().end());
    v = ModuleElement::from_terms(std::move(rest), F_, order_);
  }
  if (done.empty()) return v;
  for (const auto& t : v.terms()) done.push_back(t);
  return ModuleElement::from_terms(std::move(done), F_, order_);
}

ModuleElement GroebnerBasis::normal_form(const ModuleElement& v) const {
  return reduce(ModuleElement::from_terms(v.terms(), F_, order_), true);
}

bool GroebnerBasis::is_standard(const Monomial& m, int pos) const {
  for (const auto& g : gens_)
    if (g.lead().pos == pos && g.lead().mono.divides(m)) return false;
  return true;
}

GroebnerBasis buchberger(const std::vector<ModuleElement>& relations, const WeightedRing& R,
                         const std::vector<int>& ambient_degrees) {
  return GroebnerBasis(R, ambient_degrees, relations);
}

std::vector<ModuleElement> syzygies(const WeightedRing& R, const std::vector<int>& target_degrees,
                                    const std::vector<ModuleElement>& columns,
                                    const std::vector<int>& column_degrees) {
  const PrimeField& F = R.field();
  const int t = static_cast<int>(target_degrees.size());
  const int m = static_cast<int>(columns.size());
  if (static_cast<int>(column_degrees.size()) != m) throw Error("syzygies: degree list length mismatch");
  std::vector<int> degrees = target_degrees;
  degrees.insert(degrees.end(), column_degrees.begin(), column_degrees.end());
  ModuleOrder elim = ModuleOrder::eliminate_first(t);

  std::vector<ModuleElement> graph;
  for (int k = 0; k < m; ++k) {
    std::vector<ModuleTerm> terms = columns[k].terms();
    terms.push_back({Monomial::one(R.num_vars()), t + k, F.one()});
    graph.push_back(ModuleElement::from_terms(std::move(terms), F, elim));
  }
  GroebnerBasis gb(R, degrees, graph, elim);
  std::vector<ModuleElement> out;
  for (const auto& g : gb.generators())
    if (g.lead().pos >= t) out.push_back(g.shift_positions(-t, m, F));
  return out;
}

// ---------------------------------------------------------------------------
// Presentations and graded pieces

ModulePresentation::ModulePresentation(WeightedRing R, std::vector<int> ambient_degrees,
                                       std::vector<ModuleElement> relations)
    : ring_(std::move(R)),
      ambient_degrees_(std::move(ambient_degrees)),
      gb_([&] {
        for (const auto& r : relations) {
          if (r.is_zero()) continue;
          if (!r.homogeneous_degree(ambient_degrees_))
            throw InhomogeneousError("relation is not homogeneous with respect to the ambient degrees");
        }
        return GroebnerBasis(ring_, ambient_degrees_, relations);
      }()) {
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    relation_degrees_.push_back(*r.homogeneous_degree(ambient_degrees_));
    relations_.push_back(ModuleElement::from_terms(r.terms(), ring_.field()));
  }
}

ModulePresentation ModulePresentation::quotient(WeightedRing R, const std::vector<Polynomial>& ideal_generators) {
  std::vector<ModuleElement> rels;
  for (const auto& f : ideal_generators) rels.push_back(ModuleElement::from_components({f}, R.field()));
  return ModulePresentation(std::move(R), {0}, std::move(rels));
}

int ModulePresentation::min_generator_degree() const {
  if (ambient_degrees_.empty()) return 0;
  return *std::min_element(ambient_degrees_.begin(), ambient_degrees_.end());
}

int ModulePresentation::max_generator_degree() const {
  if (ambient_degrees_.empty()) return 0;
  return *std::max_element(ambient_degrees_.begin(), ambient_degrees_.end());
}

std::vector<BasisMonomial> graded_piece_basis(const ModulePresentation& M, int d) {
  std::vector<BasisMonomial> out;
  const auto& degs = M.ambient_degrees();
  for (int p = 0; p < static_cast<int>(degs.size()); ++p) {
    for (auto& m : monomials_of_degree(M.ring(), d - degs[p]))
      if (M.groebner().is_standard(m, p)) out.push_back({std::move(m), p});
  }
  ModuleOrder order;
  std::stable_sort(out.begin(), out.end(), [&](const BasisMonomial& a, const BasisMonomial& b) {
    return order.compare(a.mono, a.pos, b.mono, b.pos) > 0;
  });
  return out;
}

namespace {

std::size_t index_of(const std::vector<BasisMonomial>& basis, const Monomial& m, int pos) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].pos == pos && basis[k].mono == m) return k;
  throw Error("internal: normal form produced a non-standard monomial");
}

}  // namespace

DenseMatrix multiplication_map(const ModulePresentation& M, int var, int d) {
  const WeightedRing& R = M.ring();
  const PrimeField& F = R.field();
  auto src = graded_piece_basis(M, d);
  auto tgt = graded_piece_basis(M, d + R.weight(var));
  DenseMatrix A(tgt.size(), src.size());
  Monomial x = Monomial::variable(var, R);
  for (std::size_t c = 0; c < src.size(); ++c) {
    ModuleElement v = ModuleElement::from_terms({{src[c].mono * x, src[c].pos, F.one()}}, F);
    ModuleElement nf = M.groebner().normal_form(v);
    for (const auto& t : nf.terms()) A(index_of(tgt, t.mono, t.pos), c) = t.coeff;
  }
  return A;
}

// ---------------------------------------------------------------------------
// Resolutions

namespace {

bool cancel_one_unit(FreeResolution& res, std::size_t level, const PrimeField& F) {
  auto& cols = res.maps[level];
  for (std::size_t q = 0; q < cols.size(); ++q) {
    for (const auto& t : cols[q].terms()) {
      if (!t.mono.is_one()) continue;
      const int p = t.pos;
      const FieldElement u = t.coeff;
      const FieldElement minus_inv = F.neg(F.inv(u));
      const ModuleElement pivot = cols[q];
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c == q) continue;
        Polynomial coef = cols[c].component(p, F);
        if (coef.is_zero()) continue;
        cols[c] = cols[c].add(pivot.multiply(coef.scale(minus_inv, F), F), F);
      }
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(q));
      res.degrees[level].erase(res.degrees[level].begin() + static_cast<std::ptrdiff_t>(q));
      for (auto& c : cols) c = c.remove_position(p);
      res.degrees[level - 1].erase(res.degrees[level - 1].begin() + p);
      if (level >= 2) res.maps[level - 1].erase(res.maps[level - 1].begin() + p);
      if (level + 1 < res.maps.size())
        for (auto& c : res.maps[level + 1]) c = c.remove_position(static_cast<int>(q));
      return true;
    }
  }
  return false;
}

}  // namespace

FreeResolution free_resolution(const ModulePresentation& M) {
  const WeightedRing& R = M.ring();
  const PrimeField& F = R.field();
  FreeResolution res;
  res.degrees.push_back(M.ambient_degrees());
  res.maps.emplace_back();
  res.degrees.push_back(M.relation_degrees());
  res.maps.push_back(M.relations());
  while (cancel_one_unit(res, 1, F)) {
  }

  const int max_len = R.num_vars() + 8;
  for (std::size_t i = 1;; ++i) {
    if (res.maps[i].empty()) break;
    auto syz = syzygies(R, res.degrees[i - 1], res.maps[i], res.degrees[i]);
    if (syz.empty()) break;
    if (static_cast<int>(i) + 1 > max_len) throw Error("internal: resolution did not terminate");
    std::vector<int> degs;
    for (const auto& s : syz) degs.push_back(*s.homogeneous_degree(res.degrees[i]));
    res.degrees.push_back(std::move(degs));
    res.maps.push_back(std::move(syz));
    while (cancel_one_unit(res, i + 1, F)) {
    }
  }
  while (res.degrees.size() > 1 && res.degrees.back().empty()) {
    res.degrees.pop_back();
    res.maps.pop_back();
  }
  return res;
}

BettiTable betti(const FreeResolution& res) {
  BettiTable b;
  for (std::size_t i = 0; i < res.degrees.size(); ++i)
    for (int d : res.degrees[i]) ++b[{static_cast<int>(i), d}];
  return b;
}

BettiTable betti(const ModulePresentation& M) { return betti(free_resolution(M)); }

int symonds_constant(const WeightedRing& R) {
  int s = 0;
  for (int a : R.weights()) s += a - 1;
  return s;
}

int regularity(const BettiTable& b, const WeightedRing& R) {
  if (b.empty()) throw ZeroModuleError();
  int best = 0;
  bool first = true;
  for (const auto& [key, rank] : b) {
    int v = key.second - key.first;
    if (first || v > best) best = v;
    first = false;
  }
  return best + R.num_vars() - R.total_weight();
}

int regularity(const ModulePresentation& M) { return regularity(betti(M), M.ring()); }

bool h0m_vanishes(const ModulePresentation& M, int reg) {
  const WeightedRing& R = M.ring();
  for (int d = M.min_generator_degree(); d <= reg; ++d) {
    std::size_t dim = graded_piece_basis(M, d).size();
    if (dim == 0) continue;
    std::vector<DenseMatrix> blocks;
    std::size_t rows = 0;
    for (int i = 0; i < R.num_vars(); ++i) {
      blocks.push_back(multiplication_map(M, i, d));
      rows += blocks.back().rows();
    }
    DenseMatrix stacked(rows, dim);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < dim; ++c) stacked(r0 + r, c) = b(r, c);
      r0 += b.rows();
    }
    if (rank(R.field(), stacked) < dim) return false;
  }
  return true;
}

bool h0m_vanishes(const ModulePresentation& M) {
  auto b = betti(M);
  if (b.empty()) return true;
  return h0m_vanishes(M, regularity(b, M.ring()));
}

ModulePresentation truncate(const ModulePresentation& M, int t) {
  const WeightedRing& R = M.ring();
  const PrimeField& F = R.field();
  const int top = std::max(t + R.max_weight() - 1, M.max_generator_degree());
  std::vector<ModuleElement> columns;
  std::vector<int> degrees;
  for (int d = t; d <= top; ++d)
    for (const auto& b : graded_piece_basis(M, d)) {
      columns.push_back(ModuleElement::from_terms({{b.mono, b.pos, F.one()}}, F));
      degrees.push_back(d);
    }
  const int g = static_cast<int>(columns.size());
  columns.insert(columns.end(), M.relations().begin(), M.relations().end());
  std::vector<int> all_degrees = degrees;
  all_degrees.insert(all_degrees.end(), M.relation_degrees().begin(), M.relation_degrees().end());
  std::vector<ModuleElement> rels;
  for (const auto& s : syzygies(R, M.ambient_degrees(), columns, all_degrees)) {
    auto proj = s.shift_positions(0, g, F);
    if (!proj.is_zero()) rels.push_back(std::move(proj));
  }
  return ModulePresentation(R, degrees, std::move(rels));
}

}  // namespace wtate
