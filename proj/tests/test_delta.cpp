#include <random>

#include "doctest.h"
#include "maxsemi/delta.hpp"

using namespace maxsemi;

namespace {
  // Every subset, keep the maximal independent ones.
  std::vector<std::vector<std::size_t>> brute_mis(Graph const& g) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t const                     n = g.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1) {
          s.push_back(v);
        }
      }
      if (is_maximal_independent(g, s)) {
        out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
}  // namespace

TEST_CASE("small graphs") {
  auto p5 = maximal_independent_sets(path_graph(5));
  CHECK(p5 == std::vector<std::vector<std::size_t>>{{0, 2, 4}, {0, 3}, {1, 3}, {1, 4}});
  Graph k33(6);
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) {
      k33.add_edge(a, b);
    }
  }
  CHECK(maximal_independent_sets(k33) == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(maximal_independent_sets(Graph(0)).size() == 1);
  CHECK(maximal_independent_sets(Graph(3)).size() == 1);
  CHECK(k33.edge_count() == 9);
}

TEST_CASE("enumeration against brute force") {
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 12;
    Graph       g(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rng() % 3 == 0) {
          g.add_edge(a, b);
        }
      }
    }
    CHECK(maximal_independent_sets(g) == brute_mis(g));
  }
}

TEST_CASE("sequences") {
  CHECK(padovan(1) == 1);
  CHECK(padovan(7) == 7);
  CHECK(fibonacci(10) == 55);
  for (std::size_t k = 1; k <= 25; ++k) {
    CHECK(maximal_independent_sets(path_graph(k)).size() == padovan(k));
  }
  for (int n = 3; n <= 12; ++n) {
    CHECK(maximal_independent_sets(jones_delta(n)).size() == 2 * fibonacci(n - 1));
  }
}

TEST_CASE("delta of monoids") {
  {
    auto M = FiniteMonoid::enumerate(Family::PT, 4);
    auto G = greens(M);
    auto D = build_delta(M, G, *G.j_of_rank(3));
    CHECK(D.l_vertices.size() == 1);
    CHECK(D.r_vertices.size() == 2);
    CHECK(D.graph.edge_count() == 2);
    CHECK_THROWS_AS(build_delta(M, G, *G.j_of_rank(2)), std::invalid_argument);
    CHECK_THROWS_AS(build_delta(M, G, G.units), std::invalid_argument);
  }
  for (int n = 2; n <= 5; ++n) {
    auto M = FiniteMonoid::enumerate(Family::O, n);
    auto G = greens(M);
    auto D = build_delta(M, G, *G.j_of_rank(n - 1));
    // Path graph of order 2n - 1: n - 1 edges from each inner vertex pair.
    CHECK(D.graph.size() == static_cast<std::size_t>(2 * n - 1));
    CHECK(D.graph.edge_count() == static_cast<std::size_t>(2 * n - 2));
    std::size_t leaves = 0;
    for (std::size_t v = 0; v < D.graph.size(); ++v) {
      CHECK(D.graph.degree(v) >= 1);
      CHECK(D.graph.degree(v) <= 2);
      leaves += D.graph.degree(v) == 1;
    }
    CHECK(leaves == 2);
    CHECK(maximal_independent_sets(D.graph).size() == padovan(2 * n - 1));
  }
  for (int n = 3; n <= 6; ++n) {
    auto M = FiniteMonoid::enumerate(Family::J, n);
    auto G = greens(M);
    auto D = build_delta(M, G, *G.j_of_rank(n - 2));
    CHECK(D.graph.size() == static_cast<std::size_t>(2 * (n - 1)));
    CHECK(D.graph.edge_count() == jones_delta(n).edge_count());
    CHECK(maximal_independent_sets(D.graph).size() == 2 * fibonacci(n - 1));
  }
  // No isolated vertices in regular J-classes; bicomponents are maximal.
  for (Family f : all_families) {
    for (int n = 2; n <= 4; ++n) {
      auto M = FiniteMonoid::enumerate(f, n);
      auto G = greens(M);
      for (std::uint32_t j = 0; j < G.j_classes.size(); ++j) {
        if (j == G.units || !G.covered_by_units(j)) {
          continue;
        }
        auto D = build_delta(M, G, j);
        for (std::size_t v = 0; v < D.graph.size(); ++v) {
          CHECK(D.graph.degree(v) >= 1);
        }
        std::vector<std::size_t> left, right;
        for (std::size_t v = 0; v < D.graph.size(); ++v) {
          (D.is_l_vertex(v) ? left : right).push_back(v);
        }
        CHECK(is_maximal_independent(D.graph, left));
        CHECK(is_maximal_independent(D.graph, right));
      }
    }
  }
}
