#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "wtate/bgg.hpp"
#include "wtate/tate.hpp"

using namespace wtate;

namespace {

std::vector<ModulePresentation> all_modules() {
  return {corpus::elliptic(), corpus::rational(), corpus::free_rank_one(), corpus::standard(2),
          corpus::standard(1), corpus::two_generator_cokernel()};
}

std::map<int, int> homology_by_group(const DifferentialModule& D) {
  std::map<int, int> out;
  for (const auto& [x, h] : homology(D).dims) out[x.group()] += h;
  return out;
}

}  // namespace

TEST_CASE("window sizes follow the Hilbert function") {
  auto M = corpus::elliptic();
  auto W = bgg_window(M, 0, 4);
  std::vector<std::size_t> expected = {1, 2, 4, 6, 8};
  for (int d = 0; d <= 4; ++d) CHECK(W.generator_count(d) == expected[d]);
  CHECK(W.module.dimension() == 21 * 8);
  CHECK(W.offset(0) == 0);
  CHECK(W.offset(3) == 7 * 8);
  CHECK(W.labels.size() == W.module.dimension());
  CHECK(check(W.module).empty());
  // Generators of M_d (x) omega_E(-d;0) sit at (a + d; n + 1).
  for (std::size_t k = 0; k < W.labels.size(); ++k)
    if (W.labels[k].subset == 0) CHECK(W.module.degrees()[k] == Bidegree{4 + W.labels[k].degree, 3});
  CHECK_THROWS_AS(bgg_window(M, 3, 2), Error);
}

TEST_CASE("window of the residue field has zero differential") {
  auto k = corpus::residue_field();
  auto W = bgg_window(k, 0, 0);
  CHECK(W.module.dimension() == 8);
  CHECK(W.module.differential().is_zero());
  CHECK(bgg_window(k, 1, 3).module.dimension() == 0);
  CHECK(bgg_window(corpus::elliptic(), -3, -1).module.dimension() == 0);
}

TEST_CASE("window differential is built from multiplication maps") {
  // The block from M_d (x) 1 to M_{d+a_i} (x) e_i is the matrix of x_i.
  for (const auto& M : all_modules()) {
    const auto& R = M.ring();
    const int lo = std::max(0, M.min_generator_degree()), hi = lo + 3;
    auto W = bgg_window(M, lo, hi);
    REQUIRE(check(W.module).empty());
    for (int d = lo; d <= hi; ++d)
      for (int i = 0; i < R.num_vars(); ++i) {
        if (d + R.weight(i) > hi) continue;
        auto mult = multiplication_map(M, i, d);
        const std::size_t block = std::size_t{1} << R.num_vars();
        for (std::size_t c = 0; c < W.generator_count(d); ++c) {
          std::size_t src = W.offset(d) + c * block;
          for (std::size_t r = 0; r < W.generator_count(d + R.weight(i)); ++r) {
            std::size_t tgt = W.offset(d + R.weight(i)) + r * block + (std::size_t{1} << i);
            CHECK(W.module.differential().at(tgt, src) == mult(r, c));
          }
        }
      }
  }
}

TEST_CASE("finite piece N + im(d|N)") {
  auto M = corpus::elliptic();
  auto P = finite_piece_data(M, 2);
  CHECK(P.r == 2);
  CHECK(P.top == 4);
  CHECK(P.ambient.lo == 2);
  CHECK(P.ambient.hi == 6);
  // N = (M_2 + M_3 + M_4) (x) E.
  CHECK(P.n_dimension == (4 + 6 + 8) * 8);
  CHECK(P.module.dimension() == P.basis.size());
  CHECK(P.module.dimension() > P.n_dimension);
  for (std::size_t k = 0; k < P.n_dimension; ++k) {
    REQUIRE(P.basis[k].size() == 1);
    CHECK(P.basis[k][0].second == M.ring().field().one());
  }
  CHECK(check(P.module).empty());
  auto H = homology_by_group(P.module);
  CHECK(H == std::map<int, int>{{-3, 6}, {-2, 6}});
}

TEST_CASE("finite pieces are valid differential modules") {
  for (const auto& M : all_modules()) {
    int r = choose_r(M);
    auto P = finite_piece_data(M, r);
    CHECK(check(P.module).empty());
    std::size_t expected = 0;
    for (int d = r; d <= P.top; ++d) expected += hilbert_function(M, d);
    CHECK(P.n_dimension == expected * (std::size_t{1} << M.ring().num_vars()));
  }
}

TEST_CASE("enlarging the ambient window leaves the homology unchanged") {
  for (const auto& M : all_modules()) {
    const auto& w = M.ring().weights();
    int r = choose_r(M);
    for (int rr : {r, r + 1}) {
      auto small = finite_piece_data(M, rr, 0);
      auto large = finite_piece_data(M, rr, w.back());
      CHECK(large.ambient.hi == small.ambient.hi + w.back());
      CHECK(homology(small.module).dims == homology(large.module).dims);
      CHECK(small.module.dimension() == large.module.dimension());
    }
  }
}
