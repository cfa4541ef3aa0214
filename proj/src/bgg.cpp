#include "wtate/bgg.hpp"

#include <algorithm>

namespace wtate {

std::size_t BGGWindow::generator_count(int d) const {
  if (d < lo || d > hi) return 0;
  return bases[d - lo].size();
}

std::size_t BGGWindow::offset(int d) const {
  const std::size_t block = module.algebra().dimension();
  std::size_t off = 0;
  for (int e = lo; e < d && e <= hi; ++e) off += bases[e - lo].size() * block;
  return off;
}

BGGWindow bgg_window(const ModulePresentation& M, int lo, int hi) {
  if (lo > hi) throw Error("bgg window: empty degree range");
  const WeightedRing& R = M.ring();
  const PrimeField& K = R.field();
  ExtAlgebra E(R);
  const std::size_t block = E.dimension();
  const int nv = R.num_vars();

  BGGWindow W{lo, hi, {}, {}, DifferentialModule(E)};
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (int d = lo; d <= hi; ++d) {
    W.bases.push_back(graded_piece_basis(M, d));
    offsets.push_back(total);
    total += W.bases.back().size() * block;
  }

  std::vector<Bidegree> degrees;
  degrees.reserve(total);
  for (int d = lo; d <= hi; ++d)
    for (std::size_t m = 0; m < W.bases[d - lo].size(); ++m)
      for (Subset T = 0; T < block; ++T) {
        W.labels.push_back({d, m, T});
        degrees.push_back(Bidegree{E.total_weight() + d, nv} + E.degree(T));
      }

  SparseMatrix diff(total, total);
  std::vector<SparseMatrix> actions(nv, SparseMatrix(total, total));
  auto index = [&](int d, std::size_t m, Subset T) { return offsets[d - lo] + m * block + T; };
  const FieldElement minus = K.neg(K.one());

  for (int d = lo; d <= hi; ++d) {
    const std::size_t dim = W.bases[d - lo].size();
    if (dim == 0) continue;
    // Multiplication maps into degrees that are still inside the window.
    std::vector<DenseMatrix> mult(nv);
    for (int i = 0; i < nv; ++i)
      if (d + R.weight(i) <= hi) mult[i] = multiplication_map(M, i, d);
    for (std::size_t m = 0; m < dim; ++m)
      for (Subset T = 0; T < block; ++T) {
        const std::size_t k = index(d, m, T);
        std::vector<std::pair<std::size_t, FieldElement>> col;
        for (int i = 0; i < nv; ++i) {
          const Subset bit = Subset{1} << i;
          if (T & bit) continue;
          actions[i].set_column(k, {{index(d, m, T | bit), exterior_sign(T, bit) < 0 ? minus : K.one()}});
          if (d + R.weight(i) > hi) continue;
          const bool negative = exterior_sign(bit, T) < 0;
          for (std::size_t r = 0; r < mult[i].rows(); ++r) {
            FieldElement c = mult[i](r, m);
            if (c.is_zero()) continue;
            col.push_back({index(d + R.weight(i), r, T | bit), negative ? K.neg(c) : c});
          }
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        diff.set_column(k, std::move(col));
      }
  }
  W.module = DifferentialModule(E, std::move(degrees), std::move(diff), std::move(actions));
  return W;
}

FinitePiece finite_piece_data(const ModulePresentation& M, int r, int extra) {
  const WeightedRing& R = M.ring();
  const PrimeField& K = R.field();
  const int sigma = symonds_constant(R);
  const int top = r + sigma + 1;
  BGGWindow ambient = bgg_window(M, r, top + R.max_weight() + extra);
  const DifferentialModule& A = ambient.module;
  std::vector<SparseVector> basis;
  const auto& pieces = A.pieces();

  // Per-bidegree echelon bases in local coordinates of the ambient pieces.
  std::map<Bidegree, EchelonBasis> spans;
  for (const auto& [x, members] : pieces) spans.emplace(x, EchelonBasis(K, members.size()));
  auto local_vector = [&](const SparseVector& v, Bidegree x) {
    Vector out(pieces.at(x).size());
    for (auto [k, c] : v) out[A.local_index(k)] = c;
    return out;
  };
  // Groups a global sparse vector by bidegree (it need not be homogeneous).
  auto split = [&](const SparseVector& v) {
    std::map<Bidegree, SparseVector> parts;
    for (auto e : v) parts[A.degrees()[e.first]].push_back(e);
    return parts;
  };

  const std::size_t n_end = ambient.offset(top + 1);
  std::vector<std::pair<Bidegree, std::size_t>> order;  // (piece, echelon row) in basis order
  for (std::size_t k = 0; k < n_end; ++k) {
    Bidegree x = A.degrees()[k];
    spans.at(x).insert(local_vector({{k, K.one()}}, x));
    order.push_back({x, spans.at(x).size() - 1});
  }
  std::vector<std::pair<Bidegree, Vector>> pending;
  for (std::size_t k = 0; k < n_end; ++k)
    for (auto& [x, part] : split(A.differential().column(k))) pending.push_back({x, local_vector(part, x)});
  // Close under d and the e_i; N is E-stable and d commutes with the action,
  // so this loop stops after the boundaries of N have been added.
  while (!pending.empty()) {
    std::vector<std::pair<Bidegree, Vector>> next;
    for (auto& [x, v] : pending) {
      if (!spans.at(x).insert(v)) continue;
      order.push_back({x, spans.at(x).size() - 1});
      SparseVector g;
      const auto& members = pieces.at(x);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) g.push_back({members[i], v[i]});
      std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (int i = 0; i < R.num_vars(); ++i)
        for (auto& [y, part] : split(A.action(i).apply(g, K))) next.push_back({y, local_vector(part, y)});
      for (auto& [y, part] : split(A.differential().apply(g, K))) next.push_back({y, local_vector(part, y)});
    }
    pending = std::move(next);
  }

  // Final basis vectors: the echelon rows, in insertion order.
  std::map<std::pair<Bidegree, std::size_t>, std::size_t> position;
  std::vector<Bidegree> degrees;
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto [x, row] = order[k];
    position[{x, row}] = k;
    degrees.push_back(x);
    const auto& members = pieces.at(x);
    const Vector& v = spans.at(x).row(row);
    SparseVector g;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) g.push_back({members[i], v[i]});
    std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(g));
  }

  auto restrict = [&](const SparseMatrix& m) {
    SparseMatrix out(order.size(), order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::vector<std::pair<std::size_t, FieldElement>> col;
      for (auto& [y, part] : split(m.apply(basis[k], K))) {
        Vector lv = local_vector(part, y);
        const EchelonBasis& S = spans.at(y);
        if (!S.contains(lv)) throw Error("internal: finite piece is not closed");
        Vector coords = S.coordinates(lv);
        for (std::size_t j = 0; j < coords.size(); ++j)
          if (!coords[j].is_zero()) col.push_back({position.at({y, j}), coords[j]});
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      out.set_column(k, std::move(col));
    }
    return out;
  };
  std::vector<SparseMatrix> actions;
  for (int i = 0; i < R.num_vars(); ++i) actions.push_back(restrict(A.action(i)));
  DifferentialModule module(A.algebra(), std::move(degrees), restrict(A.differential()), std::move(actions));
  return FinitePiece{r, top, std::move(ambient), std::move(basis), n_end, std::move(module)};
}

}  // namespace wtate
