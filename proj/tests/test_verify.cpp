#include "doctest.h"
#include "maxsemi/verify.hpp"

using namespace maxsemi;

namespace {
  Budgets small() {
    Budgets b;
    b.oracle = 20;
    b.jclass = 22;
    return b;
  }

  std::size_t exhaustive_count(Family f, int n) {
    auto M = FiniteMonoid::enumerate(f, n);
    return exhaustive_maximal(M, small()).size();
  }
}  // namespace

TEST_CASE("exhaustive oracle on tiny monoids") {
  CHECK(exhaustive_count(Family::PT, 1) == 2);
  CHECK(exhaustive_count(Family::PT, 2) == 3);
  CHECK(exhaustive_count(Family::T, 2) == 2);
  CHECK(exhaustive_count(Family::I, 2) == 2);
  CHECK(exhaustive_count(Family::J, 3) == 5);
  CHECK(exhaustive_count(Family::B, 3) == 5);
  CHECK(exhaustive_count(Family::P, 2) == 5);
}

TEST_CASE("trivial monoid has only the empty subsemigroup") {
  auto M    = FiniteMonoid::enumerate(Family::S, 1);
  auto sets = exhaustive_maximal(M, small());
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].none());
}

TEST_CASE("exhaustive oracle refuses large monoids") {
  auto M = FiniteMonoid::enumerate(Family::T, 3);
  CHECK_THROWS_AS(exhaustive_maximal(M, small()), CapacityError);
}

TEST_CASE("J-class oracle matches the exhaustive one") {
  for (Family f : all_families) {
    for (int n = 1; n <= 3; ++n) {
      FiniteMonoid M = [&] {
        try {
          return FiniteMonoid::enumerate(f, n);
        } catch (std::exception const&) {
          return FiniteMonoid::enumerate(Family::S, 1);
        }
      }();
      if (M.size() > 20 || M.size() < 2) {
        continue;
      }
      auto G = greens(M);
      auto a = exhaustive_maximal(M, small());
      auto b = jclass_restricted_maximal(M, G, small());
      INFO(M.name());
      auto report = compare_sets(M.name(), "exhaustive", a, b);
      CHECK(report.agreement);
      for (auto const& X : a) {
        CHECK(complement_in_one_j_class(G, X));
        CHECK(is_subsemigroup(M, X));
        CHECK(verify_maximal(M, G, X).ok());
      }
    }
  }
}

TEST_CASE("verdicts carry witnesses") {
  auto M = FiniteMonoid::enumerate(Family::T, 3);
  auto G = greens(M);
  Verifier V(M, G);

  CHECK(V.verify_maximal(M.full_set()).status == Verdict::Status::not_proper);

  // Only the identity and the constants: closed but far from maximal.
  ElementSet X(M.size());
  X.set(M.identity());
  for (index_t x = 0; x < M.size(); ++x) {
    if (M.rank(x) == 1) {
      X.set(x);
    }
  }
  CHECK(is_subsemigroup(M, X));
  auto v = V.verify_maximal(X);
  CHECK(v.status == Verdict::Status::not_maximal);
  REQUIRE(v.excluded_witness);
  CHECK(!X.test(*v.excluded_witness));

  // All rank-two maps without the constants: products of rank-two maps
  // fall to rank one.
  ElementSet Y = M.full_set();
  for (index_t x = 0; x < M.size(); ++x) {
    if (M.rank(x) == 1) {
      Y.reset(x);
    }
  }
  auto w = V.verify_maximal(Y);
  CHECK(w.status == Verdict::Status::not_closed);
  REQUIRE(w.product_witness);
  auto [a, b] = *w.product_witness;
  CHECK(Y.test(a));
  CHECK(Y.test(b));
  CHECK(!Y.test(M.product(a, b)));
}

TEST_CASE("removing one L-class of the top non-unit J-class of POI is not maximal") {
  auto M = FiniteMonoid::enumerate(Family::POI, 3);
  auto G = greens(M);
  auto j = G.j_of_rank(2);
  REQUIRE(j);
  auto const& L = G.l_members[G.l_of[G.j_classes[*j].elements.front()]];
  ElementSet  X = M.full_set();
  for (index_t x : L) {
    X.reset(x);
  }
  auto v = verify_maximal(M, G, X);
  CHECK_FALSE(v.ok());
}

TEST_CASE("verifier agrees with brute-force closedness") {
  auto M = FiniteMonoid::enumerate(Family::PO, 3);
  auto G = greens(M);
  for (auto const& X : jclass_restricted_maximal(M, G, small())) {
    CHECK(verify_maximal(M, G, X).ok());
    // Dropping one more element keeps it proper but never maximal.
    auto xs = members(X);
    ElementSet Y = X;
    Y.reset(xs.back());
    CHECK_FALSE(verify_maximal(M, G, Y).ok());
  }
}
