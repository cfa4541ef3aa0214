#include "wtate/dmod.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace wtate {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({k, v[k]});
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector out(dim);
  for (auto [k, c] : v) out.at(k) = c;
  return out;
}

namespace {

/// Accumulates (index, value) pairs and returns a sorted sparse vector.
SparseVector normalize_entries(std::vector<std::pair<std::size_t, FieldElement>> entries, const PrimeField& F) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [k, c] : entries) {
    if (!out.empty() && out.back().first == k) {
      out.back().second = F.add(out.back().second, c);
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!c.is_zero()) {
      out.push_back({k, c});
    }
  }
  return out;
}

}  // namespace

FieldElement SparseMatrix::at(std::size_t r, std::size_t c) const {
  for (auto [k, v] : columns_[c])
    if (k == r) return v;
  return FieldElement();
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseVector SparseMatrix::apply(const SparseVector& v, const PrimeField& F) const {
  std::vector<std::pair<std::size_t, FieldElement>> acc;
  for (auto [c, x] : v)
    for (auto [r, y] : columns_.at(c)) acc.push_back({r, F.mul(x, y)});
  return normalize_entries(std::move(acc), F);
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& other, const PrimeField& F) const {
  SparseMatrix out(rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) out.columns_[c] = apply(other.columns_[c], F);
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n, const PrimeField& F) {
  SparseMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.columns_[k] = {{k, F.one()}};
  return m;
}

// ---------------------------------------------------------------------------

DifferentialModule::DifferentialModule(ExtAlgebra E, std::vector<Bidegree> degrees, SparseMatrix differential,
                                       std::vector<SparseMatrix> actions)
    : E_(std::move(E)),
      degrees_(std::move(degrees)),
      differential_(std::move(differential)),
      actions_(std::move(actions)),
      local_(degrees_.size()) {
  const std::size_t n = degrees_.size();
  if (differential_.rows() != n || differential_.cols() != n) throw Error("differential has the wrong size");
  if (static_cast<int>(actions_.size()) != E_.num_vars()) throw Error("one action matrix per variable expected");
  for (const auto& a : actions_)
    if (a.rows() != n || a.cols() != n) throw Error("action matrix has the wrong size");
  for (std::size_t k = 0; k < n; ++k) {
    auto& piece = pieces_[degrees_[k]];
    local_[k] = piece.size();
    piece.push_back(k);
  }
}

DifferentialModule::DifferentialModule(ExtAlgebra E)
    : DifferentialModule(E, {}, SparseMatrix(0, 0), std::vector<SparseMatrix>(E.num_vars(), SparseMatrix(0, 0))) {}

std::size_t DifferentialModule::piece_dimension(Bidegree x) const {
  auto it = pieces_.find(x);
  return it == pieces_.end() ? 0 : it->second.size();
}

DenseMatrix DifferentialModule::block(const SparseMatrix& m, Bidegree source, Bidegree target) const {
  auto s = pieces_.find(source);
  auto t = pieces_.find(target);
  std::size_t cols = s == pieces_.end() ? 0 : s->second.size();
  std::size_t rows = t == pieces_.end() ? 0 : t->second.size();
  DenseMatrix out(rows, cols);
  if (rows == 0 || cols == 0) return out;
  for (std::size_t c = 0; c < cols; ++c)
    for (auto [r, v] : m.column(s->second[c]))
      if (degrees_[r] == target) out(local_[r], c) = v;
  return out;
}

SparseVector DifferentialModule::act(const SparseVector& v, Subset T) const {
  SparseVector w = v;
  for (Subset t = T; t && !w.empty(); t &= t - 1) w = actions_[std::countr_zero(t)].apply(w, E_.field());
  return w;
}

DifferentialModule free_module(const ExtFreeModule& F) {
  const auto& E = F.algebra();
  const auto& K = E.field();
  auto basis = expand_to_vector_space(F);
  const std::size_t n = basis.size();
  const std::size_t block = E.dimension();
  std::vector<Bidegree> degrees;
  degrees.reserve(n);
  for (const auto& b : basis) degrees.push_back(b.degree);
  std::vector<SparseMatrix> actions(E.num_vars(), SparseMatrix(n, n));
  for (int i = 0; i < E.num_vars(); ++i) {
    Subset bit = Subset{1} << i;
    for (std::size_t k = 0; k < n; ++k) {
      Subset T = basis[k].subset;
      if (T & bit) continue;
      FieldElement s = exterior_sign(T, bit) < 0 ? K.neg(K.one()) : K.one();
      actions[i].set_column(k, {{basis[k].gen * block + (T | bit), s}});
    }
  }
  return DifferentialModule(E, std::move(degrees), SparseMatrix(n, n), std::move(actions));
}

// ---------------------------------------------------------------------------
// Diagnostics

namespace {

void report_nonzero(const SparseMatrix& m, const std::string& what, std::vector<std::string>& out) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.column(c).empty()) {
      out.push_back(what + " is nonzero at basis pair (" + std::to_string(m.column(c).front().first) + ", " +
                    std::to_string(c) + ")");
      return;
    }
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& F) {
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::vector<std::pair<std::size_t, FieldElement>> acc(a.column(c).begin(), a.column(c).end());
    acc.insert(acc.end(), b.column(c).begin(), b.column(c).end());
    out.set_column(c, normalize_entries(std::move(acc), F));
  }
  return out;
}

SparseMatrix negate(const SparseMatrix& a, const PrimeField& F) {
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    SparseVector v = a.column(c);
    for (auto& e : v) e.second = F.neg(e.second);
    out.set_column(c, std::move(v));
  }
  return out;
}

void check_degrees(const SparseMatrix& m, const std::vector<Bidegree>& src, const std::vector<Bidegree>& tgt,
                   Bidegree shift, const std::string& what, std::vector<std::string>& out) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (auto [r, v] : m.column(c))
      if (tgt[r] != src[c] + shift) {
        out.push_back(what + " entry (" + std::to_string(r) + ", " + std::to_string(c) + ") maps " +
                      to_string(src[c]) + " to " + to_string(tgt[r]) + ", expected shift " + to_string(shift));
        return;
      }
}

}  // namespace

std::vector<std::string> check(const DifferentialModule& D) {
  std::vector<std::string> out;
  const auto& F = D.algebra().field();
  const auto& E = D.algebra();
  const auto& deg = D.degrees();
  const auto& d = D.differential();
  check_degrees(d, deg, deg, {0, -1}, "differential", out);
  report_nonzero(d.compose(d, F), "d^2", out);
  for (int i = 0; i < E.num_vars(); ++i) {
    const auto& a = D.action(i);
    std::string ei = "e" + std::to_string(i);
    check_degrees(a, deg, deg, E.degree(Subset{1} << i), "action of " + ei, out);
    report_nonzero(add(d.compose(a, F), negate(a.compose(d, F), F), F), "d " + ei + " - " + ei + " d", out);
    report_nonzero(a.compose(a, F), ei + "^2", out);
    for (int j = i + 1; j < E.num_vars(); ++j) {
      const auto& b = D.action(j);
      report_nonzero(add(a.compose(b, F), b.compose(a, F), F),
                     ei + " e" + std::to_string(j) + " + e" + std::to_string(j) + " " + ei, out);
    }
  }
  return out;
}

std::vector<std::string> check(const DMMorphism& f) {
  std::vector<std::string> out;
  const auto& S = *f.source;
  const auto& T = *f.target;
  const auto& F = S.algebra().field();
  if (f.matrix.rows() != T.dimension() || f.matrix.cols() != S.dimension()) {
    out.push_back("morphism matrix has the wrong size");
    return out;
  }
  check_degrees(f.matrix, S.degrees(), T.degrees(), {0, 0}, "morphism", out);
  report_nonzero(add(T.differential().compose(f.matrix, F), negate(f.matrix.compose(S.differential(), F), F), F),
                 "d f - f d", out);
  for (int i = 0; i < S.algebra().num_vars(); ++i)
    report_nonzero(add(T.action(i).compose(f.matrix, F), negate(f.matrix.compose(S.action(i), F), F), F),
                   "f e" + std::to_string(i) + " - e" + std::to_string(i) + " f", out);
  return out;
}

// ---------------------------------------------------------------------------
// Homology

namespace {

/// Cycle spaces and boundary spaces per bidegree, in local coordinates.
struct CycleData {
  std::map<Bidegree, std::vector<Vector>> cycles;
  std::map<Bidegree, EchelonBasis> boundaries;
};

CycleData cycle_data(const DifferentialModule& D) {
  const auto& F = D.algebra().field();
  CycleData out;
  for (const auto& [x, members] : D.pieces()) {
    const Bidegree below = x + Bidegree{0, -1};
    const Bidegree above = x + Bidegree{0, 1};
    out.cycles[x] = kernel_basis(F, D.block(D.differential(), x, below));
    EchelonBasis B(F, members.size());
    DenseMatrix in = D.block(D.differential(), above, x);
    for (std::size_t c = 0; c < in.cols(); ++c) B.insert(in.column(c));
    out.boundaries.emplace(x, std::move(B));
  }
  return out;
}

SparseVector globalize(const DifferentialModule& D, Bidegree x, const Vector& local) {
  const auto& members = D.pieces().at(x);
  SparseVector out;
  for (std::size_t k = 0; k < local.size(); ++k)
    if (!local[k].is_zero()) out.push_back({members[k], local[k]});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::map<Bidegree, int> homology_dims(const CycleData& data) {
  std::map<Bidegree, int> dims;
  for (const auto& [x, Z] : data.cycles) {
    int h = static_cast<int>(Z.size()) - static_cast<int>(data.boundaries.at(x).size());
    if (h > 0) dims[x] = h;
  }
  return dims;
}

int min_group_of(const std::map<Bidegree, int>& dims) {
  int g = INT_MAX;
  for (const auto& [x, h] : dims) g = std::min(g, x.group());
  return g;
}

}  // namespace

int Homology::group_dimension(int g) const {
  int total = 0;
  for (const auto& [x, h] : dims)
    if (x.group() == g) total += h;
  return total;
}

int Homology::min_group() const { return min_group_of(dims); }

Homology homology(const DifferentialModule& D) {
  auto data = cycle_data(D);
  Homology H;
  H.dims = homology_dims(data);
  for (const auto& [x, h] : H.dims) {
    EchelonBasis Q = data.boundaries.at(x);
    auto& reps = H.representatives[x];
    for (const auto& z : data.cycles.at(x))
      if (Q.insert(z)) reps.push_back(globalize(D, x, z));
  }
  return H;
}

bool is_exact_below(const DifferentialModule& D, int bound) {
  auto data = cycle_data(D);
  return min_group_of(homology_dims(data)) >= bound;
}

DifferentialModule cone(const DMMorphism& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  const auto& F = T.algebra().field();
  if (!(S.algebra() == T.algebra())) throw Error("cone: source and target live over different algebras");
  if (f.matrix.rows() != T.dimension() || f.matrix.cols() != S.dimension())
    throw Error("cone: morphism matrix has the wrong size");
  for (std::size_t c = 0; c < f.matrix.cols(); ++c)
    for (auto [r, v] : f.matrix.column(c))
      if (T.degrees()[r] != S.degrees()[c])
        throw Error("cone: morphism does not preserve bidegrees at (" + std::to_string(r) + ", " +
                    std::to_string(c) + ")");

  const std::size_t nt = T.dimension(), ns = S.dimension(), n = nt + ns;
  std::vector<Bidegree> degrees = T.degrees();
  for (const auto& x : S.degrees()) degrees.push_back(x + Bidegree{0, 1});

  auto shifted = [&](const SparseVector& v, FieldElement scale) {
    SparseVector out;
    out.reserve(v.size());
    for (auto [k, c] : v) out.push_back({k + nt, F.mul(c, scale)});
    return out;
  };
  SparseMatrix d(n, n);
  for (std::size_t c = 0; c < nt; ++c) d.set_column(c, T.differential().column(c));
  const FieldElement minus = F.neg(F.one());
  for (std::size_t c = 0; c < ns; ++c) {
    SparseVector col = f.matrix.column(c);
    auto lower = shifted(S.differential().column(c), minus);
    col.insert(col.end(), lower.begin(), lower.end());
    d.set_column(nt + c, std::move(col));
  }
  std::vector<SparseMatrix> actions;
  for (int i = 0; i < T.algebra().num_vars(); ++i) {
    SparseMatrix a(n, n);
    for (std::size_t c = 0; c < nt; ++c) a.set_column(c, T.action(i).column(c));
    for (std::size_t c = 0; c < ns; ++c) a.set_column(nt + c, shifted(S.action(i).column(c), F.one()));
    actions.push_back(std::move(a));
  }
  return DifferentialModule(T.algebra(), std::move(degrees), std::move(d), std::move(actions));
}

// ---------------------------------------------------------------------------
// Twisted flag resolutions

FlagResolution resolve_twisted_flag(const DifferentialModule& D, int steps, const ResolveOptions& options) {
  const auto& E = D.algebra();
  const auto& K = E.field();
  const std::size_t block = E.dimension();

  DifferentialModule C = D;
  auto data = cycle_data(C);
  auto dims = homology_dims(data);
  if (dims.empty()) throw ZeroHomologyError();

  std::vector<Bidegree> gen_degrees;
  std::vector<int> groups;
  std::vector<SparseVector> images;          // y_g in cone coordinates at creation time
  std::vector<std::size_t> block_offsets;    // cone offset of each generator's expanded block
  std::vector<int> step_groups;

  for (int step = 0; step < steps && !dims.empty(); ++step) {
    const int n = min_group_of(dims);
    if (n > options.until_group) break;

    std::vector<Bidegree> new_degrees;
    std::vector<SparseVector> new_images;
    for (const auto& [x, h] : dims) {
      if (x.group() != n) continue;
      // Cycles already accounted for: boundaries and e_i-multiples of cycles.
      EchelonBasis Q = data.boundaries.at(x);
      for (int i = 0; i < E.num_vars(); ++i) {
        Bidegree y = x - E.degree(Subset{1} << i);
        auto it = data.cycles.find(y);
        if (it == data.cycles.end() || it->second.empty()) continue;
        DenseMatrix A = C.block(C.action(i), y, x);
        for (const auto& z : it->second) {
          Vector w(A.rows());
          for (std::size_t r = 0; r < A.rows(); ++r)
            for (std::size_t c = 0; c < A.cols(); ++c)
              if (!z[c].is_zero()) w[r] = K.add(w[r], K.mul(A(r, c), z[c]));
          Q.insert(w);
        }
      }
      std::vector<Vector> candidates = data.cycles.at(x);
      if (options.reverse_order) std::reverse(candidates.begin(), candidates.end());
      for (const auto& z : candidates)
        if (Q.insert(z)) {
          new_degrees.push_back(x);
          new_images.push_back(globalize(C, x, z));
        }
    }
    if (new_degrees.empty()) throw Error("internal: homology present but no new generators chosen");

    std::vector<Twist> twists;
    for (const auto& x : new_degrees) twists.push_back(ExtFreeModule::twist_with_generator_at(E, x));
    DifferentialModule S = free_module(ExtFreeModule(E, twists));
    if (C.dimension() + S.dimension() > options.max_dimension)
      throw ResourceLimit("resolution exceeds the resource cap of " + std::to_string(options.max_dimension) +
                          " expanded basis vectors");

    SparseMatrix eps(C.dimension(), S.dimension());
    for (std::size_t g = 0; g < new_images.size(); ++g)
      for (Subset T = 0; T < block; ++T) eps.set_column(g * block + T, C.act(new_images[g], T));

    const std::size_t offset = C.dimension();
    for (std::size_t g = 0; g < new_degrees.size(); ++g) {
      gen_degrees.push_back(new_degrees[g]);
      groups.push_back(n);
      images.push_back(new_images[g]);
      block_offsets.push_back(offset + g * block);
    }
    step_groups.push_back(n);

    C = cone(DMMorphism{&S, &C, std::move(eps)});
    data = cycle_data(C);
    dims = homology_dims(data);
  }

  // Differential of F: minus the F-components of each y.
  const std::size_t G = gen_degrees.size();
  ExtMatrix dF(G, G);
  for (std::size_t g = 0; g < G; ++g)
    for (auto [idx, v] : images[g]) {
      if (idx < D.dimension()) continue;
      auto it = std::upper_bound(block_offsets.begin(), block_offsets.end(), idx);
      std::size_t h = static_cast<std::size_t>(it - block_offsets.begin()) - 1;
      Subset U = static_cast<Subset>(idx - block_offsets[h]);
      dF(h, g).add_term(U, K.neg(v), K);
    }

  std::vector<Twist> twists;
  for (const auto& x : gen_degrees) twists.push_back(ExtFreeModule::twist_with_generator_at(E, x));
  FlagResolution out{ExtFreeModule(E, twists), gen_degrees, groups, std::move(dF), images, std::move(C), step_groups,
                     dims.empty(), min_group_of(dims)};
  return out;
}

std::map<int, std::map<Twist, int>> flag_pieces(const FlagResolution& F) {
  std::map<int, std::map<Twist, int>> out;
  for (std::size_t k = 0; k < F.free.rank(); ++k) {
    Twist t = F.free.summands()[k];
    ++out[F.groups[k]][{t.c, t.s - 1}];
  }
  return out;
}

std::string debug_dump(const FlagResolution& F) {
  std::ostringstream os;
  for (const auto& [g, counts] : flag_pieces(F)) os << "l=" << g << ": " << format_summands(counts) << '\n';
  return os.str();
}

}  // namespace wtate
