#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "maxsemi/monoid.hpp"
#include "maxsemi/partition.hpp"

using namespace maxsemi;

namespace {
  std::vector<Partition> all_partitions(int n) {
    return diagram_members(Family::P, n, 1u << 22);
  }

  // Product by brute force on the set of pairs: x ~ y in the product iff
  // they are joined by a path alternating through a and b over the middle row.
  Partition naive_product(Partition const& a, Partition const& b) {
    int const n = static_cast<int>(a.degree());
    // Vertices: 0..n-1 top, n..2n-1 bottom, 2n..3n-1 middle.
    std::vector<std::vector<bool>> adj(3 * n, std::vector<bool>(3 * n, false));
    auto a_node = [n](int p) { return p < n ? p : p + n; };
    auto b_node = [n](int p) { return p < n ? 2 * n + p : p; };
    for (int p = 0; p < 2 * n; ++p) {
      for (int q = 0; q < 2 * n; ++q) {
        if (a.block_of(p) == a.block_of(q)) {
          adj[a_node(p)][a_node(q)] = true;
        }
        if (b.block_of(p) == b.block_of(q)) {
          adj[b_node(p)][b_node(q)] = true;
        }
      }
    }
    // Warshall transitive closure.
    for (int k = 0; k < 3 * n; ++k) {
      for (int i = 0; i < 3 * n; ++i) {
        for (int j = 0; j < 3 * n; ++j) {
          if (adj[i][k] && adj[k][j]) {
            adj[i][j] = true;
          }
        }
      }
    }
    std::vector<int> labels(2 * n);
    for (int p = 0; p < 2 * n; ++p) {
      labels[p] = p;
      for (int q = 0; q < p; ++q) {
        if (adj[p][q]) {
          labels[p] = labels[q];
          break;
        }
      }
    }
    return Partition::from_labels(n, labels);
  }

  bool naive_planar(Partition const& a) {
    int const n   = static_cast<int>(a.degree());
    auto      pos = [n](int p) { return p < n ? n + p : n - 1 - (p - n); };
    for (int p1 = 0; p1 < 2 * n; ++p1) {
      for (int p2 = 0; p2 < 2 * n; ++p2) {
        for (int q1 = 0; q1 < 2 * n; ++q1) {
          for (int q2 = 0; q2 < 2 * n; ++q2) {
            if (a.block_of(p1) == a.block_of(p2) && a.block_of(q1) == a.block_of(q2)
                && a.block_of(p1) != a.block_of(q1) && pos(p1) < pos(q1)
                && pos(q1) < pos(p2) && pos(p2) < pos(q2)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::vector<Family> diagram_families() {
    std::vector<Family> out;
    for (Family f : all_families) {
      if (is_diagram_family(f)) {
        out.push_back(f);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("multiply") {
  for (int n = 1; n <= 3; ++n) {
    auto id = Partition::identity(n);
    for (auto const& x : all_partitions(n)) {
      CHECK(id * x == x);
      CHECK(x * id == x);
    }
  }
  auto r3 = rho(3);
  CHECK(r3 * r3 * r3 == Partition::identity(3));
  auto e1 = jones_projection(3, 1), e2 = jones_projection(3, 2);
  CHECK(e1 * e2 * e1 == e1);
  CHECK(e2 * e1 * e2 == e2);
  CHECK(e1 * e1 == e1);
  auto xs = all_partitions(2);
  for (auto const& a : xs) {
    for (auto const& b : xs) {
      CHECK(a * b == naive_product(a, b));
    }
  }
  std::mt19937 rng(7);
  auto         p3 = all_partitions(3);
  std::uniform_int_distribution<std::size_t> pick(0, p3.size() - 1);
  for (int t = 0; t < 400; ++t) {
    auto const& a = p3[pick(rng)];
    auto const& b = p3[pick(rng)];
    CHECK(a * b == naive_product(a, b));
  }
  CHECK_THROWS_AS(multiply(rho(2), rho(3)), std::invalid_argument);
}

TEST_CASE("regular star axioms on P3") {
  auto xs = all_partitions(3);
  CHECK(xs.size() == 203);
  for (auto const& x : xs) {
    CHECK(x.star().star() == x);
    CHECK(x * x.star() * x == x);
  }
  for (auto const& x : xs) {
    for (auto const& y : xs) {
      CHECK((x * y).star() == y.star() * x.star());
    }
  }
  for (int n = 3; n <= 6; ++n) {
    Partition r = Partition::identity(n);
    for (int k = 0; k < n - 1; ++k) {
      r = r * rho(n);
    }
    CHECK(rho(n).star() == r);
  }
}

TEST_CASE("attributes") {
  for (int n = 1; n <= 5; ++n) {
    auto id = Partition::identity(n);
    CHECK(id.rank() == static_cast<std::size_t>(n));
    CHECK(id.dom() == (1u << n) - 1);
    CHECK(id.codom() == (1u << n) - 1);
    std::vector<int> trivial(n);
    for (int i = 0; i < n; ++i) {
      trivial[i] = i;
    }
    CHECK(id.ker() == trivial);
    CHECK(id.coker() == trivial);
  }
  auto e1 = jones_projection(4, 1);
  CHECK(e1.rank() == 2);
  CHECK(e1.dom() == 0b1100);
  CHECK(e1.ker() == std::vector<int>{0, 0, 1, 2});
  for (auto const& x : diagram_members(Family::PB, 4, 1u << 20)) {
    if (x.rank() == 3) {
      int top_singletons = 0, bottom_singletons = 0;
      for (auto const& b : x.blocks()) {
        if (b.size() == 1) {
          (b[0] > 0 ? top_singletons : bottom_singletons)++;
        }
      }
      CHECK(top_singletons == 1);
      CHECK(bottom_singletons == 1);
    }
  }
  for (auto const& x : all_partitions(3)) {
    CHECK(x.codom() == x.star().dom());
    CHECK(x.coker() == x.star().ker());
  }
}

TEST_CASE("predicates") {
  for (int n = 1; n <= 4; ++n) {
    auto f = classify_predicates(Partition::identity(n));
    CHECK(f == 0b111111);
  }
  for (int n = 2; n <= 5; ++n) {
    auto f = classify_predicates(rho(n));
    CHECK((f & kAnnular));
    CHECK(!(f & kPlanar));
    CHECK((f & kBlocksExactly2));
    CHECK((f & kBlockBijection));
    CHECK((f & kUniform));
  }
  auto full = parse_partition("{1,2,3,1',2',3'}");
  CHECK(full.rank() == 1);
  auto f = classify_predicates(full);
  CHECK((f & kBlockBijection));
  CHECK((f & kUniform));
  CHECK((f & kPlanar));
  for (int n = 1; n <= 3; ++n) {
    for (auto const& x : all_partitions(n)) {
      CHECK(is_planar(x) == naive_planar(x));
    }
  }
}

TEST_CASE("family membership and sizes") {
  for (auto const& x : diagram_members(Family::J, 4, 1000)) {
    for (Family f : {Family::AJ, Family::B, Family::M, Family::PB, Family::PP, Family::P}) {
      CHECK(family_membership(x, f));
    }
  }
  CHECK(family_membership(rho(4), Family::AJ));
  CHECK(!family_membership(rho(4), Family::J));
  int jones3 = 0;
  for (auto const& x : all_partitions(3)) {
    jones3 += family_membership(x, Family::J);
  }
  CHECK(jones3 == 5);
  // Direct generation equals filtering every set partition.
  for (int n = 1; n <= 4; ++n) {
    auto all = all_partitions(n);
    for (Family f : diagram_families()) {
      std::vector<Partition> filtered;
      for (auto const& x : all) {
        if (family_membership(x, f)) {
          filtered.push_back(x);
        }
      }
      CHECK_MESSAGE(diagram_members(f, n, 1u << 20) == filtered, family_name(f), " ", n);
    }
  }
  // Catalan, Motzkin, double factorial, telephone numbers.
  std::map<Family, std::vector<std::size_t>> expected{
      {Family::J, {1, 2, 5, 14, 42, 132}},
      {Family::PP, {2, 14, 132, 1430}},
      {Family::M, {2, 9, 51, 323, 2188}},
      {Family::B, {1, 3, 15, 105, 945}},
      {Family::PB, {2, 10, 76, 764, 9496}},
      {Family::P, {2, 15, 203, 4140}}};
  for (auto const& [f, sizes] : expected) {
    for (std::size_t n = 1; n <= sizes.size(); ++n) {
      CHECK(diagram_members(f, static_cast<int>(n), 1u << 22).size() == sizes[n - 1]);
    }
  }
}

TEST_CASE("family closure under product and star") {
  for (Family f : diagram_families()) {
    for (int n = 1; n <= 3; ++n) {
      auto                xs = diagram_members(f, n, 1u << 20);
      std::set<Partition> in(xs.begin(), xs.end());
      for (auto const& x : xs) {
        CHECK(in.count(x.star()) == 1);
        for (auto const& y : xs) {
          CHECK(in.count(x * y) == 1);
        }
      }
    }
    std::mt19937 rng(11);
    for (int n = 4; n <= 5; ++n) {
      if (f == Family::P && n == 5) {
        continue;
      }
      auto                xs = diagram_members(f, n, 1u << 20);
      std::set<Partition> in(xs.begin(), xs.end());
      std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
      for (int t = 0; t < 300; ++t) {
        auto const& x = xs[pick(rng)];
        auto const& y = xs[pick(rng)];
        CHECK(in.count(x * y) == 1);
        CHECK(in.count(x.star()) == 1);
        CHECK((x * y).rank() <= std::min(x.rank(), y.rank()));
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    auto pp = diagram_members(Family::PP, n, 1u << 20);
    for (auto const& x : pp) {
      for (auto const& y : pp) {
        CHECK(is_planar(x * y));
      }
    }
  }
}

TEST_CASE("associativity on P4") {
  std::mt19937 rng(3);
  auto         xs = all_partitions(4);
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  for (int t = 0; t < 1000; ++t) {
    auto const& a = xs[pick(rng)];
    auto const& b = xs[pick(rng)];
    auto const& c = xs[pick(rng)];
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("embedding of partial permutations") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(embed_partial_perm(PartialTransformation::identity(n)) == Partition::identity(n));
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) {
      blocks.push_back({i, -(n - i + 1)});
    }
    CHECK(embed_partial_perm(gamma(n)) == Partition::from_blocks(n, blocks));
  }
  auto         i4 = transformation_members(Family::I, 4, 1u << 20);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, i4.size() - 1);
  for (int t = 0; t < 500; ++t) {
    auto const& a = i4[pick(rng)];
    auto const& b = i4[pick(rng)];
    CHECK(embed_partial_perm(a) * embed_partial_perm(b) == embed_partial_perm(a * b));
    CHECK(embed_partial_perm(a).rank() == a.rank());
    CHECK(family_membership(embed_partial_perm(a), Family::PB));
  }
  CHECK_THROWS_AS(embed_partial_perm(PartialTransformation({1, 1})), std::invalid_argument);
}

TEST_CASE("generators regenerate each family") {
  for (Family f : diagram_families()) {
    for (int n = 1; n <= 4; ++n) {
      auto closed = FiniteMonoid::closure(diagram_generators(f, n));
      CHECK_MESSAGE(closed.size() == diagram_members(f, n, 1u << 20).size(),
                    family_name(f), " ", n);
    }
  }
}

TEST_CASE("block notation") {
  auto x = parse_partition("{1,2'},{2,1'},{3,3'}");
  CHECK(to_string(x) == "{1,2'},{2,1'},{3,3'}");
  for (auto const& y : all_partitions(3)) {
    CHECK(parse_partition(to_string(y), 3) == y);
  }
  CHECK_THROWS(parse_partition("{1,2'},{1,1'}"));
}
