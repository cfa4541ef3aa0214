#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wtate/linalg.hpp"
#include "wtate/module.hpp"

namespace wtate {

class InhomogeneousError : public Error {
 public:
  using Error::Error;
};

class ZeroModuleError : public Error {
 public:
  ZeroModuleError() : Error("the module is zero") {}
};

/// Reduced Groebner basis of a homogeneous submodule of a graded free module.
class GroebnerBasis {
 public:
  /// Buchberger's algorithm, processing pairs by degree. Throws
  /// InhomogeneousError if some generator is not homogeneous.
  GroebnerBasis(const WeightedRing& R, std::vector<int> ambient_degrees, const std::vector<ModuleElement>& gens,
                ModuleOrder order = {});

  const std::vector<ModuleElement>& generators() const { return gens_; }
  const std::vector<int>& ambient_degrees() const { return degrees_; }
  const ModuleOrder& order() const { return order_; }

  /// Fully reduced remainder of v.
  ModuleElement normal_form(const ModuleElement& v) const;
  /// True iff m*e_pos is not divisible by any lead term.
  bool is_standard(const Monomial& m, int pos) const;

 private:
  ModuleElement reduce(ModuleElement v, bool full) const;

  PrimeField F_;
  std::vector<int> degrees_;
  ModuleOrder order_;
  std::vector<ModuleElement> gens_;
};

GroebnerBasis buchberger(const std::vector<ModuleElement>& relations, const WeightedRing& R,
                         const std::vector<int>& ambient_degrees);

/// Generators of ker(S^m -> S^t), e_k -> columns[k], computed from a
/// Groebner basis of the graph module under an elimination order. The k-th
/// source generator has degree column_degrees[k].
std::vector<ModuleElement> syzygies(const WeightedRing& R, const std::vector<int>& target_degrees,
                                    const std::vector<ModuleElement>& columns,
                                    const std::vector<int>& column_degrees);

/// Cokernel of a homogeneous map F_1 -> F_0: ambient generator degrees and
/// relations (columns of the presentation matrix).
class ModulePresentation {
 public:
  ModulePresentation(WeightedRing R, std::vector<int> ambient_degrees, std::vector<ModuleElement> relations);
  /// S/I, one ambient generator of degree 0.
  static ModulePresentation quotient(WeightedRing R, const std::vector<Polynomial>& ideal_generators);

  const WeightedRing& ring() const { return ring_; }
  const std::vector<int>& ambient_degrees() const { return ambient_degrees_; }
  const std::vector<ModuleElement>& relations() const { return relations_; }
  const std::vector<int>& relation_degrees() const { return relation_degrees_; }
  const GroebnerBasis& groebner() const { return gb_; }
  int min_generator_degree() const;
  int max_generator_degree() const;

 private:
  WeightedRing ring_;
  std::vector<int> ambient_degrees_;
  std::vector<ModuleElement> relations_;
  std::vector<int> relation_degrees_;
  GroebnerBasis gb_;
};

/// Standard monomial m * e_pos.
struct BasisMonomial {
  Monomial mono;
  int pos = 0;
  friend bool operator==(const BasisMonomial& a, const BasisMonomial& b) {
    return a.pos == b.pos && a.mono == b.mono;
  }
};

/// k-basis of M_d by standard monomials, in descending module order.
std::vector<BasisMonomial> graded_piece_basis(const ModulePresentation& M, int d);

inline int hilbert_function(const ModulePresentation& M, int d) {
  return static_cast<int>(graded_piece_basis(M, d).size());
}

/// Matrix of x_var: M_d -> M_{d+a_var}; column c is the image of basis
/// element c of M_d in the basis of M_{d+a_var}.
DenseMatrix multiplication_map(const ModulePresentation& M, int var, int d);

/// Graded free resolution F_0 <- F_1 <- ... ; maps[i] holds the columns of
/// d_i : F_i -> F_{i-1} (maps[0] is empty).
struct FreeResolution {
  std::vector<std::vector<int>> degrees;
  std::vector<std::vector<ModuleElement>> maps;

  int length() const { return static_cast<int>(degrees.size()) - 1; }
};

/// Iterated syzygies, minimalized by cancelling unit entries level by level.
FreeResolution free_resolution(const ModulePresentation& M);

/// beta_{i,j}: (homological index i, internal degree j) -> rank.
using BettiTable = std::map<std::pair<int, int>, int>;

BettiTable betti(const FreeResolution& res);
BettiTable betti(const ModulePresentation& M);

int symonds_constant(const WeightedRing& R);
/// max{ j - i : beta_{i,j} != 0 } + n + 1 - a. Throws ZeroModuleError on an
/// empty table.
int regularity(const BettiTable& b, const WeightedRing& R);
int regularity(const ModulePresentation& M);

/// Degreewise test that the m-torsion of M vanishes: in each degree from
/// the lowest generator degree up to reg(M), no nonzero element is killed
/// by every variable.
bool h0m_vanishes(const ModulePresentation& M);
bool h0m_vanishes(const ModulePresentation& M, int reg);

/// Presentation of the truncation M_{>=t}: generators are the standard
/// monomials of degrees t .. max(t + a_n - 1, top generator degree), and the
/// relations are the induced syzygies.
ModulePresentation truncate(const ModulePresentation& M, int t);

}  // namespace wtate
