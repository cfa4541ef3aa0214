#include "wtate/linalg.hpp"

#include <algorithm>

namespace wtate {

Vector DenseMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement x) { return x.is_zero(); });
}

DenseMatrix multiply(const PrimeField& F, const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch in multiply");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      FieldElement x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
    }
  return c;
}

std::vector<std::size_t> rref(const PrimeField& F, DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    FieldElement inv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      FieldElement f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) = F.sub_mul(m(i, j), f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const PrimeField& F, DenseMatrix m) { return rref(F, m).size(); }

std::vector<Vector> kernel_basis(const PrimeField& F, DenseMatrix m) {
  auto pivots = rref(F, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = F.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.neg(m(k, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector EchelonBasis::reduce(Vector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    FieldElement f = v[pivots_[k]];
    if (f.is_zero()) continue;
    const Vector& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!row[j].is_zero()) v[j] = F_.sub_mul(v[j], f, row[j]);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const {
  Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](FieldElement x) { return x.is_zero(); });
}

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](FieldElement x) { return !x.is_zero(); });
  if (it == r.end()) return false;
  std::size_t p = static_cast<std::size_t>(it - r.begin());
  FieldElement inv = F_.inv(r[p]);
  for (auto& x : r) x = F_.mul(x, inv);
  // Keep existing rows reduced with respect to the new pivot.
  for (auto& row : rows_) {
    FieldElement f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) row[j] = F_.sub_mul(row[j], f, r[j]);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

Vector EchelonBasis::coordinates(const Vector& v) const {
  Vector c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

}  // namespace wtate
