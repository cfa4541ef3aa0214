#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtate/polyring.hpp"

namespace wtate {

/// Bidegree (d; j) of the exterior algebra grading: internal degree d and
/// homological degree j.
struct Bidegree {
  int deg = 0;
  int hom = 0;

  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.deg + b.deg, a.hom + b.hom}; }
  friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.deg - b.deg, a.hom - b.hom}; }
  friend Bidegree operator-(Bidegree a) { return {-a.deg, -a.hom}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;

  /// The group index j - d used by the twisted flag.
  int group() const { return hom - deg; }
};

std::string to_string(Bidegree b);

/// Subset of {0, ..., n} encoded as a bit mask.
using Subset = std::uint32_t;

/// E = Lambda(e_0, ..., e_n) with deg(e_i) = (-a_i; -1).
class ExtAlgebra {
 public:
  explicit ExtAlgebra(const WeightedRing& R);

  int num_vars() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  int total_weight() const { return total_weight_; }
  int symonds() const { return total_weight_ - num_vars(); }
  const PrimeField& field() const { return field_; }
  std::size_t dimension() const { return std::size_t{1} << num_vars(); }
  Subset full_subset() const { return static_cast<Subset>(dimension() - 1); }

  /// Bidegree of e_T: (-sum_{i in T} a_i; -|T|).
  Bidegree degree(Subset T) const;
  /// Top bidegree (a; n+1), the generator degree of omega_E.
  Bidegree top() const { return {total_weight_, num_vars()}; }

  friend bool operator==(const ExtAlgebra& a, const ExtAlgebra& b) {
    return a.weights_ == b.weights_ && a.field_ == b.field_;
  }

 private:
  std::vector<int> weights_;
  int total_weight_ = 0;
  PrimeField field_;
};

/// Sign of e_S * e_T = sign * e_{S|T} for disjoint S, T: (-1)^(pairs s in S, t in T with s > t).
int exterior_sign(Subset S, Subset T);

/// Element of E as a sparse map subset -> coefficient (no zeros stored).
class ExtElement {
 public:
  ExtElement() = default;
  static ExtElement monomial(Subset T, FieldElement c);

  const std::map<Subset, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coefficient(Subset T) const;
  /// Constant term (coefficient of e_emptyset).
  FieldElement constant() const { return coefficient(0); }

  ExtElement add(const ExtElement& o, const PrimeField& F) const;
  ExtElement scale(FieldElement c, const PrimeField& F) const;
  void add_term(Subset T, FieldElement c, const PrimeField& F);

  /// Bidegree if every term has the same one; empty for zero or mixed.
  std::optional<Bidegree> homogeneous_degree(const ExtAlgebra& E) const;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;

 private:
  std::map<Subset, FieldElement> terms_;
};

ExtElement ext_multiply(const ExtElement& f, const ExtElement& g, const PrimeField& F);

/// The twist omega_E(c; s), with N(c;s)_x = N_{(c;s)+x}.
struct Twist {
  int c = 0;
  int s = 0;
  friend auto operator<=>(const Twist&, const Twist&) = default;
  /// Filtration index c - s (for omega_E(-j; i) this is -i-j).
  int filtration() const { return c - s; }
};

std::string to_string(Twist t);

/// Free E-module, a direct sum of twists of omega_E = E(-a; -n-1).
class ExtFreeModule {
 public:
  ExtFreeModule(ExtAlgebra E, std::vector<Twist> summands) : E_(std::move(E)), summands_(std::move(summands)) {}

  const ExtAlgebra& algebra() const { return E_; }
  const std::vector<Twist>& summands() const { return summands_; }
  std::size_t rank() const { return summands_.size(); }

  /// E-generator of omega_E(c;s): bidegree (a; n+1) - (c; s).
  Bidegree generator_degree(std::size_t k) const;
  /// Socle of omega_E(c;s): bidegree -(c; s).
  Bidegree socle_degree(std::size_t k) const { return -Bidegree{summands_[k].c, summands_[k].s}; }

  /// Summand with E-generator in bidegree x.
  static Twist twist_with_generator_at(const ExtAlgebra& E, Bidegree x);

 private:
  ExtAlgebra E_;
  std::vector<Twist> summands_;
};

/// Basis element gen * e_T of an expanded free module.
struct ExpandedBasisElement {
  std::size_t gen = 0;
  Subset subset = 0;
  Bidegree degree;
};

/// k-basis {gen_g * e_T}: generators in listed order, subsets ascending.
std::vector<ExpandedBasisElement> expand_to_vector_space(const ExtFreeModule& F);

/// dim {v : v * e_i = 0 for all i} per bidegree, by linear algebra on the
/// expanded basis.
std::map<Bidegree, int> socle_counts(const ExtFreeModule& F);

/// Matrix over E between two free modules. Entry (row, col) is the
/// coefficient of target generator `row` in the image of source generator
/// `col`; the map is right E-linear, so phi(g * x) = phi(g) * x.
class ExtMatrix {
 public:
  ExtMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ExtElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  ExtElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  /// Checks that entry (g, h) is zero or homogeneous of bidegree
  /// deg(source h) + declared - deg(target g).
  bool is_homogeneous(const ExtFreeModule& target, const ExtFreeModule& source, Bidegree declared) const;

 private:
  std::size_t rows_, cols_;
  std::vector<ExtElement> entries_;
};

/// `w_E(c;s)^r + ...` in decreasing filtration order (ties by decreasing c);
/// the exponent is omitted when r = 1. "0" for an empty list.
std::string format_summands(const std::map<Twist, int>& counts);

}  // namespace wtate
