#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wtate/field.hpp"

namespace wtate {

using Vector = std::vector<FieldElement>;

/// Row-major dense matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector column(std::size_t c) const;
  bool is_zero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

DenseMatrix multiply(const PrimeField& F, const DenseMatrix& a, const DenseMatrix& b);

/// Reduced row echelon form in place. Pivots are searched left to right,
/// rows top to bottom. Returns the pivot columns.
std::vector<std::size_t> rref(const PrimeField& F, DenseMatrix& m);

std::size_t rank(const PrimeField& F, DenseMatrix m);

/// Basis of the right kernel {v : m v = 0}, one vector per non-pivot column of
/// the RREF, with a 1 in that column.
std::vector<Vector> kernel_basis(const PrimeField& F, DenseMatrix m);

/// Incrementally maintained reduced echelon basis of a subspace of F_p^n.
/// insert() keeps the stored rows fully reduced, so the coordinate of any
/// member along stored row k is its entry at pivot(k).
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& F, std::size_t dim) : F_(F), dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t pivot(std::size_t k) const { return pivots_[k]; }
  const Vector& row(std::size_t k) const { return rows_[k]; }

  /// Reduce v against the stored rows.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Adds v if it is independent. Returns true iff the span grew.
  bool insert(const Vector& v);
  /// Coordinates of a member of the span in terms of the stored rows.
  Vector coordinates(const Vector& v) const;

 private:
  PrimeField F_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wtate
