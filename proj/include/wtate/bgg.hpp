#pragma once

#include <vector>

#include "wtate/dmod.hpp"
#include "wtate/resolution.hpp"

namespace wtate {

/// Expanded basis vector m * e_T of M_d (x) omega_E(-d; 0), where m is the
/// monomial-th standard monomial of M_d.
struct WindowLabel {
  int degree = 0;
  std::size_t monomial = 0;
  Subset subset = 0;
};

/// The part of R(M) = sum_d M_d (x) omega_E(-d; 0) in degrees lo..hi, with
/// d(m (x) f) = sum_i x_i m (x) e_i f; terms leaving the window are dropped.
struct BGGWindow {
  int lo = 0;
  int hi = -1;
  /// Standard-monomial bases of M_lo, ..., M_hi.
  std::vector<std::vector<BasisMonomial>> bases;
  /// One label per basis vector of `module`, in basis order (degree, then
  /// monomial, then subset ascending).
  std::vector<WindowLabel> labels;
  DifferentialModule module;

  /// Number of omega_E(-d; 0) summands, i.e. dim M_d.
  std::size_t generator_count(int d) const;
  /// Index of the first basis vector of degree d.
  std::size_t offset(int d) const;
};

BGGWindow bgg_window(const ModulePresentation& M, int lo, int hi);

/// N + im(d|N) for N = sum_{d=r}^{r+sigma+1} M_d (x) omega_E(-d; 0), inside
/// the ambient window [r, r + sigma + 1 + a_n + extra].
struct FinitePiece {
  int r = 0;
  /// Top degree r + sigma + 1 of N.
  int top = 0;
  BGGWindow ambient;
  /// Basis of the subspace, in ambient coordinates; the first n_dimension
  /// vectors are the basis vectors of N itself.
  std::vector<SparseVector> basis;
  std::size_t n_dimension = 0;
  DifferentialModule module;
};

FinitePiece finite_piece_data(const ModulePresentation& M, int r, int extra = 0);

inline DifferentialModule finite_piece(const ModulePresentation& M, int r) {
  return finite_piece_data(M, r).module;
}

}  // namespace wtate
