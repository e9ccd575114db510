#include <algorithm>
#include <map>

#include "doctest.h"
#include "maxsemi/classify.hpp"
#include "maxsemi/verify.hpp"

using namespace maxsemi;

namespace {
  Budgets small() {
    Budgets b;
    b.oracle = 20;
    b.jclass = 22;
    return b;
  }

  std::vector<ElementSet> materialize(FiniteMonoid const& M, GreensStructure const& G,
                                      std::vector<Descriptor> const& ds) {
    std::vector<ElementSet> out;
    for (auto const& d : ds) {
      out.push_back(d.materialize(M, G));
    }
    return out;
  }

  std::map<Kind, std::size_t> kind_counts(std::vector<Descriptor> const& ds) {
    std::map<Kind, std::size_t> out;
    for (auto const& d : ds) {
      ++out[d.kind];
    }
    return out;
  }

  bool max_j_class_fits(GreensStructure const& G, std::size_t limit) {
    for (auto const& J : G.j_classes) {
      if (J.elements.size() > limit) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("classification agrees with the J-class oracle") {
  std::size_t compared = 0;
  for (Family f : all_families) {
    for (int n = 1; n <= 4; ++n) {
      std::optional<FiniteMonoid> M;
      try {
        M = FiniteMonoid::enumerate(f, n);
      } catch (std::exception const&) {
        continue;
      }
      if (M->size() < 2 || M->size() > 3000) {
        continue;
      }
      auto G = greens(*M);
      if (!max_j_class_fits(G, 22)) {
        continue;
      }
      auto c = classify(*M, G, small());
      INFO(M->name(), " ", c.note);
      if (!c.complete) {
        MESSAGE("incomplete: ", M->name(), " ", c.note);
        continue;
      }
      auto report = compare_sets(M->name(), "jclass", jclass_restricted_maximal(*M, G, small()),
                                 materialize(*M, G, c.descriptors));
      CHECK(report.agreement);
      if (!report.agreement) {
        MESSAGE(M->name(), " oracle-only ", report.only_oracle.size(), " engine-only ",
                report.only_engine.size());
      }
      ++compared;
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("kinds of the order-preserving monoid of degree 3") {
  auto M = FiniteMonoid::enumerate(Family::PO, 3);
  auto G = greens(M);
  auto c = classify(M, G);
  REQUIRE(c.complete);
  auto k = kind_counts(c.descriptors);
  CHECK(k[Kind::M1] == 1);
  CHECK(k[Kind::M2] == 6);
  CHECK(k[Kind::M4] == 5);
  CHECK(k[Kind::M3] == 0);
}

TEST_CASE("rank n-1 of the partition monoid gives two of each removal") {
  for (int n = 2; n <= 3; ++n) {
    auto M = FiniteMonoid::enumerate(Family::P, n);
    auto G = greens(M);
    auto j = G.j_of_rank(static_cast<std::size_t>(n - 1));
    REQUIRE(j);
    auto c = classify_covered(M, G, *j);
    auto k = kind_counts(c.descriptors);
    CHECK(k[Kind::M3] == 2);
    CHECK(k[Kind::M4] == 2);
    CHECK(c.descriptors.size() == 4);
  }
}

TEST_CASE("rank n-1 of the full transformation monoid is removed whole") {
  for (int n = 2; n <= 4; ++n) {
    auto M = FiniteMonoid::enumerate(Family::T, n);
    auto G = greens(M);
    auto c = classify_covered(M, G, *G.j_of_rank(static_cast<std::size_t>(n - 1)));
    REQUIRE(c.descriptors.size() == 1);
    CHECK(c.descriptors[0].kind == Kind::M1);
  }
}

TEST_CASE("intersect-type sets do not depend on the chosen projection") {
  std::size_t tried = 0;
  for (Family f : all_families) {
    for (int n = 2; n <= 5; ++n) {
      std::optional<FiniteMonoid> M;
      try {
        M = FiniteMonoid::enumerate(f, n);
      } catch (CapacityError const&) {
        continue;
      }
      if (!M->has_star() || M->size() > 20000) {
        continue;
      }
      auto G = greens(*M);
      for (std::uint32_t j = 0; j < G.j_classes.size(); ++j) {
        auto base = regular_star_intersect(*M, G, j);
        if (!base.applies) {
          continue;
        }
        auto reference = materialize(*M, G, base.descriptors);
        std::sort(reference.begin(), reference.end());
        for (index_t e : G.j_classes[j].elements) {
          if (!G.idempotent[e] || e == *base.projection) {
            continue;
          }
          auto other = materialize(*M, G, regular_star_intersect(*M, G, j, Budgets::from_env(), e).descriptors);
          std::sort(other.begin(), other.end());
          INFO(M->name(), " rank ", G.j_classes[j].rank);
          CHECK(other == reference);
          ++tried;
        }
      }
    }
  }
  CHECK(tried > 10);
}

TEST_CASE("the involution swaps L- and R-class removals") {
  for (Family f : all_families) {
    for (int n = 1; n <= 4; ++n) {
      std::optional<FiniteMonoid> M;
      try {
        M = FiniteMonoid::enumerate(f, n);
      } catch (CapacityError const&) {
        continue;
      }
      if (!M->has_star() || M->size() > 20000) {
        continue;
      }
      auto G = greens(*M);
      auto c = classify(*M, G);
      INFO(M->name());
      std::map<Kind, std::vector<ElementSet>> by_kind;
      for (auto const& d : c.descriptors) {
        by_kind[d.kind].push_back(d.materialize(*M, G));
      }
      auto starred = [&](std::vector<ElementSet> v) {
        for (auto& X : v) {
          ElementSet Y(M->size());
          for (auto i = X.find_first(); i != ElementSet::npos; i = X.find_next(i)) {
            Y.set(M->star(static_cast<index_t>(i)));
          }
          X = Y;
        }
        std::sort(v.begin(), v.end());
        return v;
      };
      auto sorted = [](std::vector<ElementSet> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      CHECK(starred(by_kind[Kind::M3]) == sorted(by_kind[Kind::M4]));
      for (Kind k : {Kind::M1, Kind::M2, Kind::M5}) {
        CHECK(starred(by_kind[k]) == sorted(by_kind[k]));
      }
    }
  }
}
