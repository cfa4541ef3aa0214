#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "wtate/polyring.hpp"

namespace wtate {

/// Monomial order on a free module S^k. Positions below `split` form the
/// first block, the rest the second; a term in the first block beats any
/// term in the second. Inside a block, terms compare by weighted grevlex on
/// the monomial and then by position (smaller index is larger).
/// With the default split every position is in the first block, which is
/// the term-over-position order used for all module computations except
/// syzygy elimination.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  static ModuleOrder term_over_position() { return {}; }
  static ModuleOrder eliminate_first(int split) {
    ModuleOrder o;
    o.split_ = split;
    return o;
  }

  int compare(const Monomial& a, int pa, const Monomial& b, int pb) const {
    int ba = pa >= split_, bb = pb >= split_;
    if (ba != bb) return ba < bb ? 1 : -1;
    if (int c = wtate::compare(a, b); c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;

 private:
  int split_ = INT_MAX;
};

struct ModuleTerm {
  Monomial mono;
  int pos = 0;
  FieldElement coeff;
};

/// Element of a free S-module S(-b_1) + ... + S(-b_k), stored as terms in
/// descending order for some ModuleOrder (term-over-position unless a caller
/// says otherwise). No zero coefficients are stored.
class ModuleElement {
 public:
  ModuleElement() = default;
  static ModuleElement from_terms(std::vector<ModuleTerm> terms, const PrimeField& F,
                                  const ModuleOrder& order = {});
  static ModuleElement from_components(const std::vector<Polynomial>& comps, const PrimeField& F,
                                       const ModuleOrder& order = {});
  static ModuleElement basis_vector(int pos, int nvars, const PrimeField& F);

  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& lead() const { return terms_.front(); }

  /// The polynomial in position `pos`.
  Polynomial component(int pos, const PrimeField& F) const;
  /// Degree of every term w.r.t. the given generator degrees, if homogeneous.
  std::optional<int> homogeneous_degree(const std::vector<int>& ambient_degrees) const;

  /// this + c * m * other, all in the same order.
  ModuleElement add_multiple(FieldElement c, const Monomial& m, const ModuleElement& other,
                             const PrimeField& F, const ModuleOrder& order = {}) const;
  ModuleElement add(const ModuleElement& other, const PrimeField& F, const ModuleOrder& order = {}) const;
  ModuleElement scale(FieldElement c, const PrimeField& F) const;
  /// f * this for a polynomial f.
  ModuleElement multiply(const Polynomial& f, const PrimeField& F, const ModuleOrder& order = {}) const;
  /// Shift every position by `delta`, dropping terms whose position leaves [0, limit).
  ModuleElement shift_positions(int delta, int limit, const PrimeField& F, const ModuleOrder& order = {}) const;
  /// Drop position `pos` and renumber later positions down by one.
  ModuleElement remove_position(int pos) const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

 private:
  std::vector<ModuleTerm> terms_;
};

}  // namespace wtate
