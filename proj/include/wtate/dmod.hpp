#pragma once

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wtate/extalg.hpp"
#include "wtate/linalg.hpp"

namespace wtate {

class ZeroHomologyError : public Error {
 public:
  ZeroHomologyError() : Error("differential module has zero homology; nothing to resolve") {}
};

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, FieldElement>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dim);

/// Column-oriented sparse matrix over F_p.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  /// Replaces column c; v must be sorted without zeros.
  void set_column(std::size_t c, SparseVector v) { columns_[c] = std::move(v); }
  FieldElement at(std::size_t r, std::size_t c) const;
  bool is_zero() const;

  SparseVector apply(const SparseVector& v, const PrimeField& F) const;
  /// this * other.
  SparseMatrix compose(const SparseMatrix& other, const PrimeField& F) const;

  static SparseMatrix identity(std::size_t n, const PrimeField& F);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Finite-dimensional bigraded vector space with a right E-action (one
/// matrix per e_i, v -> v * e_i of bidegree (-a_i; -1)) and a square-zero
/// differential of bidegree (0; -1) commuting with the action:
/// d(v * e_i) = d(v) * e_i.
class DifferentialModule {
 public:
  DifferentialModule(ExtAlgebra E, std::vector<Bidegree> degrees, SparseMatrix differential,
                     std::vector<SparseMatrix> actions);
  /// Zero module over E.
  explicit DifferentialModule(ExtAlgebra E);

  const ExtAlgebra& algebra() const { return E_; }
  std::size_t dimension() const { return degrees_.size(); }
  const std::vector<Bidegree>& degrees() const { return degrees_; }
  const SparseMatrix& differential() const { return differential_; }
  const SparseMatrix& action(int i) const { return actions_[i]; }
  const std::vector<SparseMatrix>& actions() const { return actions_; }

  /// Basis indices by bidegree, ascending.
  const std::map<Bidegree, std::vector<std::size_t>>& pieces() const { return pieces_; }
  /// Position of basis vector k inside its bidegree piece.
  std::size_t local_index(std::size_t k) const { return local_[k]; }
  std::size_t piece_dimension(Bidegree x) const;

  /// Dense block of `m` from the piece at `source` to the piece at `target`.
  DenseMatrix block(const SparseMatrix& m, Bidegree source, Bidegree target) const;

  /// v * e_T for T ascending, i.e. (...(v * e_{t1}) * e_{t2}...).
  SparseVector act(const SparseVector& v, Subset T) const;

 private:
  ExtAlgebra E_;
  std::vector<Bidegree> degrees_;
  SparseMatrix differential_;
  std::vector<SparseMatrix> actions_;
  std::map<Bidegree, std::vector<std::size_t>> pieces_;
  std::vector<std::size_t> local_;
};

/// Expanded free module with zero differential and the right action
/// (g e_T) * e_i = sign(T, {i}) g e_{T + i}.
DifferentialModule free_module(const ExtFreeModule& F);

/// Verifies d^2 = 0, d e_i = e_i d, e_i e_i = 0, e_i e_j = -e_j e_i and all
/// bidegree constraints. Returns human-readable violations (empty = valid).
std::vector<std::string> check(const DifferentialModule& D);

struct Homology {
  /// dim H at each bidegree with nonzero homology.
  std::map<Bidegree, int> dims;
  /// Cycles completing a basis of Z modulo B, chosen by scanning the RREF
  /// kernel basis in order.
  std::map<Bidegree, std::vector<SparseVector>> representatives;

  bool is_zero() const { return dims.empty(); }
  /// Total dimension in group j - d = g.
  int group_dimension(int g) const;
  /// Smallest group with nonzero homology (INT_MAX if none).
  int min_group() const;
};

Homology homology(const DifferentialModule& D);

/// True iff H vanishes in every group index < bound.
bool is_exact_below(const DifferentialModule& D, int bound);

/// Degree (0;0) map f: source -> target commuting with d and the action.
struct DMMorphism {
  const DifferentialModule* source;
  const DifferentialModule* target;
  SparseMatrix matrix;  // target.dimension() x source.dimension()
};

/// Violations of the morphism axioms (empty = valid).
std::vector<std::string> check(const DMMorphism& f);

/// cone(f) = target + source(0,-1) with differential [[d', f], [0, -d]];
/// source basis vectors move from (d; j) to (d; j + 1). Throws Error if f
/// does not preserve bidegrees.
DifferentialModule cone(const DMMorphism& f);

struct ResolveOptions {
  /// Scan candidate cycles in reverse order (gives a different but equally
  /// valid choice; used to check uniqueness of Betti numbers).
  bool reverse_order = false;
  /// Stop as soon as the remaining homology lives in groups > this bound.
  int until_group = INT_MAX;
  /// Resource cap on the expanded dimension of the running cone.
  std::size_t max_dimension = 100000;
};

/// Output of the twisted flag algorithm.
struct FlagResolution {
  /// F as a sum of twists of omega_E; summand k has E-generator in bidegree
  /// generator_degrees[k] and lies in flag piece groups[k] = j - d.
  ExtFreeModule free;
  std::vector<Bidegree> generator_degrees;
  std::vector<int> groups;
  /// Differential of F (entries in the maximal ideal of E).
  ExtMatrix differential;
  /// Image of each generator in the cone at the time it was adjoined; the
  /// first D.dimension() coordinates are the augmentation F -> D.
  std::vector<SparseVector> images;
  /// cone(F -> D), with D's basis first and then F(0,-1) expanded.
  DifferentialModule cone;
  /// Group index resolved at each step, in order.
  std::vector<int> step_groups;
  /// True iff cone is exact, i.e. the resolution is complete.
  bool complete = false;
  /// Lowest group of the remaining homology (INT_MAX when complete).
  int next_group = INT_MAX;
};

/// Runs at most `steps` iterations of the twisted flag algorithm on D.
/// Throws ZeroHomologyError if H(D) = 0 and ResourceLimit when the cone
/// exceeds options.max_dimension.
FlagResolution resolve_twisted_flag(const DifferentialModule& D, int steps, const ResolveOptions& options = {});

/// Generator multiplicities per flag piece, keyed by group. Summands are
/// labelled as they appear in cone(F -> D), where F sits shifted by (0,-1):
/// a summand w_E(c;s) of F is reported as w_E(c;s-1).
std::map<int, std::map<Twist, int>> flag_pieces(const FlagResolution& F);

/// One line per flag piece, lowest group first: `l=<group>: w_E(c;s)^r + ...`.
std::string debug_dump(const FlagResolution& F);

}  // namespace wtate
