#include "wtate/tate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wtate {

int choose_r(const ModulePresentation& M) {
  auto b = betti(M);
  int reg = regularity(b, M.ring());
  return h0m_vanishes(M, reg) ? reg : reg + 1;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::DimensionCount:
      return "dimension-count";
    case Provenance::RegularityVanishing:
      return "regularity-vanishing";
    case Provenance::ResolutionSocle:
      return "resolution-socle";
  }
  return "unknown";
}

namespace {

int resolve_r(const ModulePresentation& M, std::optional<int> requested) {
  const int r0 = choose_r(M);
  if (!requested) return r0;
  if (*requested < r0)
    throw Error("truncation degree r = " + std::to_string(*requested) + " is below the admissible minimum " +
                std::to_string(r0));
  return *requested;
}

FinitePiece build_piece(const ModulePresentation& M, int r, std::size_t cap) {
  FinitePiece P = finite_piece_data(M, r);
  if (P.ambient.module.dimension() > cap)
    throw ResourceLimit("BGG window of dimension " + std::to_string(P.ambient.module.dimension()) +
                        " exceeds the resource cap of " + std::to_string(cap));
  return P;
}

bool has_homology(const DifferentialModule& D) { return !is_exact_below(D, INT_MAX); }

/// Summand of cone(F -> D) corresponding to summand k of F.
Twist cone_label(const FlagResolution& F, std::size_t k) {
  Twist t = F.free.summands()[k];
  return {t.c, t.s - 1};
}

}  // namespace

CohomologyTable sheaf_cohomology(const ModulePresentation& M, const CohomologyQuery& q) {
  const WeightedRing& R = M.ring();
  const int n = R.num_vars() - 1;
  const int sigma = symonds_constant(R);
  if (q.j_min > q.j_max) throw Error("empty twist range");
  const int i_max = q.i_max < 0 ? n : q.i_max;
  if (i_max > n) throw Error("cohomological index above the dimension n = " + std::to_string(n));

  CohomologyTable T;
  T.j_min = q.j_min;
  T.j_max = q.j_max;
  T.i_max = i_max;
  T.r_used = resolve_r(M, q.r);
  const int r = T.r_used;

  int max_filtration = INT_MIN;
  for (int i = 0; i <= i_max; ++i)
    for (int j = q.j_min; j <= q.j_max; ++j) {
      CohomologyEntry e;
      if (j >= r && i == 0) {
        e = {hilbert_function(M, j), Provenance::DimensionCount};
      } else if (r <= i + j) {
        e = {0, Provenance::RegularityVanishing};
      } else {
        e = {0, Provenance::ResolutionSocle};
        max_filtration = std::max(max_filtration, -i - j);
      }
      T.entries[{i, j}] = e;
    }
  if (max_filtration == INT_MIN) return T;

  FinitePiece P = build_piece(M, r, q.max_dimension);
  if (!has_homology(P.module)) return T;  // the sheaf is zero
  ResolveOptions opts;
  opts.reverse_order = q.reverse_order;
  opts.until_group = max_filtration - sigma - 1;
  opts.max_dimension = q.max_dimension;
  FlagResolution F = resolve_twisted_flag(P.module, INT_MAX, opts);

  // Generators in groups <= until_group are final; read the socle there.
  std::vector<Twist> final_summands;
  for (std::size_t k = 0; k < F.free.rank(); ++k)
    if (F.groups[k] <= opts.until_group) final_summands.push_back(F.free.summands()[k]);
  auto socle = socle_counts(ExtFreeModule(F.free.algebra(), final_summands));
  for (auto& [key, e] : T.entries) {
    if (e.provenance != Provenance::ResolutionSocle) continue;
    auto it = socle.find(Bidegree{key.second, -key.first - 1});
    e.value = it == socle.end() ? 0 : it->second;
  }
  return T;
}

TateWindow tate_window(const ModulePresentation& M, int steps, const TateOptions& options) {
  if (steps < 1) throw Error("at least one resolution step is required");
  const WeightedRing& R = M.ring();
  TateWindow w;
  w.r = resolve_r(M, options.r);
  w.sigma = symonds_constant(R);
  const int r = w.r;

  std::vector<int> dims;
  for (int d = r; d <= r + w.sigma + 1; ++d) {
    dims.push_back(hilbert_function(M, d));
    if (dims.back() > 0) w.r_side[-d][Twist{-d, 0}] = dims.back();
  }
  // Links inside the displayed R-side: x_i : M_d -> M_{d + a_i}.
  for (int d = r; d <= r + w.sigma + 1; ++d)
    for (int i = 0; i < R.num_vars(); ++i) {
      int e = d + R.weight(i);
      if (e > r + w.sigma + 1 || dims[d - r] == 0 || dims[e - r] == 0) continue;
      if (!multiplication_map(M, i, d).is_zero()) w.links.push_back({Twist{-d, 0}, Twist{-e, 0}, R.weight(i)});
    }

  FinitePiece P = build_piece(M, r, options.max_dimension);
  if (!has_homology(P.module)) return w;
  ResolveOptions opts;
  opts.reverse_order = options.reverse_order;
  opts.max_dimension = options.max_dimension;
  FlagResolution F = resolve_twisted_flag(P.module, steps, opts);
  const auto& K = R.field();

  for (std::size_t k = 0; k < F.free.rank(); ++k) {
    Twist t = cone_label(F, k);
    ++w.resolution_side[t.filtration()][t];
  }
  for (std::size_t g = 0; g < F.free.rank(); ++g)
    for (std::size_t h = 0; h < F.free.rank(); ++h)
      if (!F.differential(h, g).is_zero()) {
        Twist s = cone_label(F, g), t = cone_label(F, h);
        w.links.push_back({s, t, s.filtration() - t.filtration()});
      }
  // Augmentation entries: components of each image on the generators of R(M_{>=r}).
  const std::size_t dimD = P.module.dimension();
  for (std::size_t g = 0; g < F.free.rank(); ++g) {
    SparseVector ambient;
    std::vector<std::pair<std::size_t, FieldElement>> acc;
    for (auto [k, c] : F.images[g])
      if (k < dimD)
        for (auto [a, v] : P.basis[k]) acc.push_back({a, K.mul(c, v)});
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::map<std::size_t, FieldElement> summed;
    for (auto [a, v] : acc) summed[a] = K.add(summed[a], v);
    std::set<std::pair<int, std::size_t>> targets;
    for (auto [a, v] : summed)
      if (!v.is_zero()) targets.insert({P.ambient.labels[a].degree, P.ambient.labels[a].monomial});
    Twist s = cone_label(F, g);
    for (auto [d, m] : targets) w.links.push_back({s, Twist{-d, 0}, s.filtration() + d});
  }
  return w;
}

std::vector<std::string> validate_window(const TateWindow& w, int r, int sigma) {
  std::vector<std::string> out;
  for (const auto& [l, counts] : w.resolution_side)
    for (const auto& [t, m] : counts) {
      const int i = t.s, j = -t.c;
      if (!(-i - j > -r)) out.push_back("summand " + to_string(t) + " has -i-j = " + std::to_string(-i - j) +
                                        " <= -r = " + std::to_string(-r));
      if (i == 0 && j >= r) out.push_back("summand " + to_string(t) + " has i = 0 and j >= r");
    }
  for (const auto& link : w.links)
    if (link.drop < 1 || link.drop > sigma + 1)
      out.push_back("link " + to_string(link.source) + " -> " + to_string(link.target) + " drops the filtration by " +
                    std::to_string(link.drop) + ", outside [1, " + std::to_string(sigma + 1) + "]");
  return out;
}

std::string format_window(const TateWindow& w) {
  std::vector<std::string> parts;
  for (auto it = w.resolution_side.rbegin(); it != w.resolution_side.rend(); ++it)
    parts.push_back(format_summands(it->second));
  for (auto it = w.r_side.rbegin(); it != w.r_side.rend(); ++it) parts.push_back(format_summands(it->second));
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? " | " : "") << parts[k];
  if (!w.r_side.empty()) os << " | ...";
  return os.str();
}

}  // namespace wtate
