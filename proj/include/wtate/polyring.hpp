#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wtate/field.hpp"

namespace wtate {

/// Syntax or lookup error in textual input, with a 1-based column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Arithmetic overflow in exponent or degree bookkeeping.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// S = k[x_0, ..., x_n] with deg(x_i) = a_i, a_0 <= ... <= a_n.
class WeightedRing {
 public:
  WeightedRing(std::vector<int> weights, PrimeField field, std::vector<std::string> names = {});

  int num_vars() const { return static_cast<int>(weights_.size()); }
  int weight(int i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  /// a = sum of the weights.
  int total_weight() const { return total_weight_; }
  /// sigma = sum (a_i - 1).
  int symonds() const { return total_weight_ - num_vars(); }
  int max_weight() const { return weights_.back(); }
  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  std::optional<int> var_index(std::string_view name) const;

  friend bool operator==(const WeightedRing& a, const WeightedRing& b) {
    return a.weights_ == b.weights_ && a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  std::vector<int> weights_;
  int total_weight_ = 0;
  PrimeField field_;
  std::vector<std::string> names_;
};

class Monomial {
 public:
  Monomial() = default;
  /// Throws OverflowError if the weighted degree does not fit in an int.
  Monomial(std::vector<int> exponents, const std::vector<int>& weights);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0), 0); }
  static Monomial variable(int i, const WeightedRing& R);

  int degree() const { return degree_; }
  int num_vars() const { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0 && total_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other, const std::vector<int>& weights) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  Monomial(std::vector<int> e, int degree);
  std::vector<int> exps_;
  int degree_ = 0;
  int total_ = 0;
};

/// Weighted graded reverse lexicographic comparison: weighted degree first,
/// then the monomial with the smaller exponent in the last differing variable
/// is larger. Returns <0, 0, >0.
int compare(const Monomial& a, const Monomial& b);

int weighted_degree(const Monomial& m, const WeightedRing& R);

/// All monomials of weighted degree d, in descending monomial order.
std::vector<Monomial> monomials_of_degree(const WeightedRing& R, int d);

/// A polynomial: terms sorted in descending monomial order, no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    FieldElement coeff;
  };

  Polynomial() = default;
  static Polynomial constant(FieldElement c, int nvars);
  static Polynomial monomial(Monomial m, FieldElement c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common weighted degree of all terms, if there is one. Zero has none.
  std::optional<int> homogeneous_degree() const;

  Polynomial add(const Polynomial& o, const PrimeField& F) const;
  Polynomial sub(const Polynomial& o, const PrimeField& F) const;
  Polynomial mul(const Polynomial& o, const PrimeField& F) const;
  Polynomial scale(FieldElement c, const PrimeField& F) const;
  Polynomial pow(long e, const PrimeField& F, int nvars) const;

  /// Sorts, combines like terms and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms, const PrimeField& F);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

/// Canonical text form, e.g. "x0^4 + x1^4 + x2^2" or "32002*x0*x1 + 5".
std::string to_string(const Polynomial& f, const WeightedRing& R);

/// Parses `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
/// `factor := ident | integer | factor '^' integer | '(' expr ')'`.
/// A leading sign on an expression is accepted as well.
Polynomial parse_polynomial(std::string_view text, const WeightedRing& R);

}  // namespace wtate
