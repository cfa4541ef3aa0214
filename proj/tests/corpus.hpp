// Modules shared by the test suites.
#pragma once

#include <string>
#include <vector>

#include "wtate/resolution.hpp"

namespace corpus {

using namespace wtate;

inline WeightedRing p112() { return WeightedRing({1, 1, 2}, PrimeField()); }
inline WeightedRing p11122() { return WeightedRing({1, 1, 1, 2, 2}, PrimeField()); }

inline ModulePresentation quotient(const WeightedRing& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, R));
  return ModulePresentation::quotient(R, polys);
}

inline ModulePresentation elliptic() { return quotient(p112(), {"x0^4+x1^4+x2^2"}); }
inline ModulePresentation rational() {
  // 2x2 minors of [[x0,x1,x2^2,x3],[x1,x2,x3,x4]]
  return quotient(p11122(), {"x0*x2-x1^2", "x0*x3-x1*x2^2", "x0*x4-x1*x3", "x1*x3-x2^3", "x1*x4-x2*x3",
                             "x2^2*x4-x3^2"});
}
inline ModulePresentation residue_field() { return quotient(p112(), {"x0", "x1", "x2"}); }
inline ModulePresentation free_rank_one() { return quotient(p112(), {}); }
inline ModulePresentation standard(int n) { return quotient(WeightedRing(std::vector<int>(n + 1, 1), PrimeField()), {}); }

inline ModuleElement vec(const WeightedRing& R, const std::string& f) {
  return ModuleElement::from_components({parse_polynomial(f, R)}, R.field());
}

/// Cokernel with two generators in different degrees.
inline ModulePresentation two_generator_cokernel() {
  auto R = p112();
  auto& F = R.field();
  std::vector<ModuleElement> rels = {
      ModuleElement::from_components({parse_polynomial("x1^2", R), parse_polynomial("x0", R)}, F),
      ModuleElement::from_components({parse_polynomial("x2", R), parse_polynomial("x1", R)}, F),
  };
  return ModulePresentation(R, {0, 1}, rels);
}

}  // namespace corpus
