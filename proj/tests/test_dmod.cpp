#include <doctest.h>

#include <climits>

#include "corpus.hpp"
#include "wtate/bgg.hpp"
#include "wtate/dmod.hpp"

using namespace wtate;

namespace {

ExtAlgebra p1() { return ExtAlgebra(WeightedRing({1, 1}, PrimeField())); }

/// Right E-linear map between free modules sending the source generator to
/// (target generator) * e_T; the source must be the twist that makes the
/// map bidegree preserving.
DMMorphism multiplication_by(const DifferentialModule& S, const DifferentialModule& T, Subset U) {
  const auto& E = S.algebra();
  const auto& F = E.field();
  SparseMatrix m(T.dimension(), S.dimension());
  const std::size_t block = E.dimension();
  for (Subset V = 0; V < block; ++V) {
    if (U & V) continue;
    FieldElement s = exterior_sign(U, V) < 0 ? F.neg(F.one()) : F.one();
    m.set_column(V, {{U | V, s}});
  }
  return {&S, &T, m};
}

int total(const std::map<Bidegree, int>& dims) {
  int t = 0;
  for (const auto& [x, h] : dims) t += h;
  return t;
}

std::map<Twist, int> all_summands(const FlagResolution& F) {
  std::map<Twist, int> out;
  for (auto t : F.free.summands()) ++out[t];
  return out;
}

}  // namespace

TEST_CASE("free modules satisfy the axioms") {
  for (const auto& R : {corpus::p112(), corpus::p11122()}) {
    ExtAlgebra E(R);
    auto D = free_module(ExtFreeModule(E, {Twist{0, 0}, Twist{2, 1}, Twist{-1, 0}}));
    CHECK(D.dimension() == 3 * E.dimension());
    CHECK(check(D).empty());
    // Zero differential: everything is homology.
    CHECK(total(homology(D).dims) == static_cast<int>(D.dimension()));
  }
}

TEST_CASE("check reports broken axioms") {
  ExtAlgebra E = p1();
  const auto& F = E.field();
  SparseMatrix d(3, 3);
  d.set_column(0, {{1, F.one()}});
  d.set_column(1, {{2, F.one()}});
  std::vector<SparseMatrix> actions(2, SparseMatrix(3, 3));
  DifferentialModule D(E, {{0, 2}, {0, 1}, {0, 0}}, d, actions);
  auto issues = check(D);
  REQUIRE(!issues.empty());
  CHECK(issues.front().find("d^2") != std::string::npos);

  SparseMatrix wrong(2, 2);
  wrong.set_column(0, {{1, F.one()}});
  DifferentialModule bad_degree(E, {{0, 1}, {0, 1}}, wrong, std::vector<SparseMatrix>(2, SparseMatrix(2, 2)));
  CHECK(!check(bad_degree).empty());

  // e_0 acting without squaring to zero.
  SparseMatrix a(2, 2);
  a.set_column(0, {{1, F.one()}});
  a.set_column(1, {{0, F.one()}});
  DifferentialModule bad_action(E, {{0, 0}, {-1, -1}}, SparseMatrix(2, 2), {a, SparseMatrix(2, 2)});
  CHECK(!check(bad_action).empty());
}

TEST_CASE("cones") {
  ExtAlgebra E = p1();
  auto W = free_module(ExtFreeModule(E, {Twist{0, 0}}));

  SUBCASE("the cone of the identity is exact") {
    DMMorphism id{&W, &W, SparseMatrix::identity(W.dimension(), E.field())};
    CHECK(check(id).empty());
    auto C = cone(id);
    CHECK(check(C).empty());
    CHECK(homology(C).is_zero());
    CHECK(is_exact_below(C, INT_MAX));
  }

  SUBCASE("the cone of multiplication by e_0") {
    // Source generator in bidegree (2;2) + (-1;-1) = gen(omega_E(1;1)).
    auto S = free_module(ExtFreeModule(E, {Twist{1, 1}}));
    auto f = multiplication_by(S, W, 0b01);
    CHECK(check(f).empty());
    auto C = cone(f);
    CHECK(check(C).empty());
    // H = coker(e_0) + ker(e_0), each of dimension 2.
    CHECK(total(homology(C).dims) == 4);
  }

  SUBCASE("a morphism that moves bidegrees is rejected") {
    auto S = free_module(ExtFreeModule(E, {Twist{0, 0}}));
    auto f = multiplication_by(S, W, 0b01);
    CHECK(!check(f).empty());
    CHECK_THROWS_AS(cone(f), Error);
  }
}

TEST_CASE("resolving a free module with zero differential") {
  ExtAlgebra E(corpus::p112());
  auto W = free_module(ExtFreeModule(E, {Twist{-1, 0}, Twist{2, 1}}));
  auto F = resolve_twisted_flag(W, 10);
  CHECK(F.complete);
  CHECK(F.next_group == INT_MAX);
  CHECK(all_summands(F) == std::map<Twist, int>{{Twist{-1, 0}, 1}, {Twist{2, 1}, 1}});
  CHECK(check(F.cone).empty());
  CHECK(homology(F.cone).is_zero());
}

TEST_CASE("zero homology is an error") {
  ExtAlgebra E = p1();
  CHECK_THROWS_AS(resolve_twisted_flag(DifferentialModule(E), 1), ZeroHomologyError);
  auto W = free_module(ExtFreeModule(E, {Twist{0, 0}}));
  auto C = cone(DMMorphism{&W, &W, SparseMatrix::identity(W.dimension(), E.field())});
  CHECK_THROWS_AS(resolve_twisted_flag(C, 1), ZeroHomologyError);
}

TEST_CASE("resource cap") {
  auto D = finite_piece(corpus::elliptic(), 2);
  ResolveOptions opts;
  opts.max_dimension = 250;
  CHECK_THROWS_AS(resolve_twisted_flag(D, 3, opts), ResourceLimit);
}

TEST_CASE("twisted flag resolution of the elliptic curve window") {
  auto D = finite_piece(corpus::elliptic(), 2);
  REQUIRE(check(D).empty());
  auto F = resolve_twisted_flag(D, 3);

  std::map<int, std::map<Twist, int>> expected = {
      {-3, {{Twist{0, 1}, 1}, {Twist{-1, 0}, 2}}},
      {-2, {{Twist{1, 1}, 2}, {Twist{0, 0}, 1}}},
      {-1, {{Twist{2, 1}, 4}}},
  };
  CHECK(flag_pieces(F) == expected);
  CHECK(debug_dump(F) ==
        "l=-3: w_E(0;1) + w_E(-1;0)^2\n"
        "l=-2: w_E(1;1)^2 + w_E(0;0)\n"
        "l=-1: w_E(2;1)^4\n");
  CHECK(check(F.cone).empty());

  SUBCASE("flag structure") {
    // Steps resolve strictly increasing groups and leave everything below exact.
    for (std::size_t k = 1; k < F.step_groups.size(); ++k) CHECK(F.step_groups[k] > F.step_groups[k - 1]);
    CHECK(F.next_group > F.step_groups.back());
    CHECK(is_exact_below(F.cone, F.next_group));
    CHECK(!is_exact_below(F.cone, F.next_group + 1));
    // Each generator sits in the group of its step.
    for (std::size_t k = 0; k < F.groups.size(); ++k) CHECK(F.generator_degrees[k].group() == F.groups[k]);
  }

  SUBCASE("minimality and homogeneity") {
    for (std::size_t r = 0; r < F.differential.rows(); ++r)
      for (std::size_t c = 0; c < F.differential.cols(); ++c) {
        CHECK(F.differential(r, c).constant().is_zero());
        // The flag differential lands in strictly lower groups.
        if (!F.differential(r, c).is_zero()) CHECK(F.groups[r] < F.groups[c]);
      }
    CHECK(F.differential.is_homogeneous(F.free, F.free, Bidegree{0, -1}));
  }

  SUBCASE("socle counts equal generator counts") {
    std::map<Bidegree, int> expected_socle;
    for (std::size_t k = 0; k < F.free.rank(); ++k) ++expected_socle[F.free.socle_degree(k)];
    CHECK(socle_counts(F.free) == expected_socle);
  }

  SUBCASE("another choice of cycles gives the same Betti numbers") {
    ResolveOptions opts;
    opts.reverse_order = true;
    auto G = resolve_twisted_flag(D, 3, opts);
    CHECK(flag_pieces(G) == expected);
    CHECK(check(G.cone).empty());
  }

  SUBCASE("until_group stops early") {
    ResolveOptions opts;
    opts.until_group = -2;
    auto G = resolve_twisted_flag(D, 100, opts);
    CHECK(G.step_groups == std::vector<int>{-3, -2});
    CHECK(G.next_group > -2);
  }
}

TEST_CASE("twisted flag resolution of the rational curve window is minimal") {
  auto D = finite_piece(corpus::rational(), 1);
  REQUIRE(check(D).empty());
  auto F = resolve_twisted_flag(D, 3);
  CHECK(check(F.cone).empty());
  CHECK(F.step_groups.size() == 3);
  for (std::size_t r = 0; r < F.differential.rows(); ++r)
    for (std::size_t c = 0; c < F.differential.cols(); ++c) CHECK(F.differential(r, c).constant().is_zero());
  std::map<Bidegree, int> expected_socle;
  for (std::size_t k = 0; k < F.free.rank(); ++k) ++expected_socle[F.free.socle_degree(k)];
  CHECK(socle_counts(F.free) == expected_socle);
}
