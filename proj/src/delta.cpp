#include "maxsemi/delta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace maxsemi {

  namespace {
    using Bits = boost::dynamic_bitset<>;

    // Bron-Kerbosch on the complement graph, pivoting on a vertex of P u X.
    void bron_kerbosch(Graph const& g, std::vector<std::size_t>& r, Bits p, Bits x,
                       std::vector<std::vector<std::size_t>>& out) {
      if (p.none() && x.none()) {
        auto s = r;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
        return;
      }
      Bits        px    = p | x;
      std::size_t pivot = px.find_first();
      // Candidates not independent-compatible with the pivot: the pivot
      // itself and its neighbours.
      Bits branch = p & (g.neighbours(pivot) | Bits(g.size()).set(pivot));
      for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
        Bits keep = ~g.neighbours(v);
        keep.reset(v);
        r.push_back(v);
        bron_kerbosch(g, r, p & keep, x & keep, out);
        r.pop_back();
        p.reset(v);
        x.set(v);
      }
    }
  }  // namespace

  std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (auto const& a : adj_) {
      total += a.count();
    }
    return total / 2;
  }

  std::vector<std::vector<std::size_t>> maximal_independent_sets(Graph const& g) {
    std::vector<std::vector<std::size_t>> out;
    if (g.size() == 0) {
      out.emplace_back();
      return out;
    }
    std::vector<std::size_t> r;
    Bits                     p(g.size());
    p.set();
    bron_kerbosch(g, r, p, Bits(g.size()), out);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_maximal_independent(Graph const& g, std::vector<std::size_t> const& s) {
    Bits in(g.size());
    for (auto v : s) {
      in.set(v);
    }
    for (auto v : s) {
      if (g.neighbours(v).intersects(in)) {
        return false;
      }
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!in.test(v) && !g.neighbours(v).intersects(in)) {
        return false;
      }
    }
    return true;
  }

  Graph path_graph(std::size_t order) {
    Graph g(order);
    for (std::size_t v = 0; v + 1 < order; ++v) {
      g.add_edge(v, v + 1);
    }
    return g;
  }

  std::uint64_t padovan(std::size_t k) {
    if (k == 0) {
      throw std::invalid_argument("padovan index starts at 1");
    }
    std::vector<std::uint64_t> a{0, 1, 2, 2};
    for (std::size_t i = 4; i <= k; ++i) {
      a.push_back(a[i - 2] + a[i - 3]);
    }
    return a[k];
  }

  std::uint64_t fibonacci(std::size_t k) {
    if (k == 0) {
      throw std::invalid_argument("fibonacci index starts at 1");
    }
    std::uint64_t a = 1, b = 1;
    for (std::size_t i = 3; i <= k; ++i) {
      std::uint64_t c = a + b;
      a               = b;
      b               = c;
    }
    return b;
  }

  DeltaGraph build_delta(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j) {
    auto const& J = G.j_classes.at(j);
    if (j == G.units) {
      throw std::invalid_argument("the group of units has no Delta graph");
    }
    for (std::uint32_t k : G.strictly_above(j)) {
      if (k != G.units) {
        throw std::invalid_argument("J-class of rank " + std::to_string(J.rank)
                                    + " is not covered by the units: J-class of rank "
                                    + std::to_string(G.j_classes[k].rank) + " lies between");
      }
    }
    if (!J.regular) {
      throw std::invalid_argument("J-class of rank " + std::to_string(J.rank) + " is not regular");
    }
    auto       orbits = unit_orbits(M, G, j);
    DeltaGraph D;
    D.j          = j;
    D.l_vertices = orbits.l_orbits;
    D.r_vertices = orbits.r_orbits;
    D.graph      = Graph(D.l_vertices.size() + D.r_vertices.size());
    std::vector<std::size_t> l_pos(G.l_members.size()), r_pos(G.r_members.size());
    for (std::size_t v = 0; v < D.l_vertices.size(); ++v) {
      for (auto l : D.l_vertices[v]) {
        l_pos[l] = v;
      }
    }
    for (std::size_t v = 0; v < D.r_vertices.size(); ++v) {
      for (auto r : D.r_vertices[v]) {
        r_pos[r] = D.l_vertices.size() + v;
      }
    }
    for (auto [l, r] : J.group_h) {
      D.graph.add_edge(l_pos[l], r_pos[r]);
    }
    return D;
  }

  Graph jones_delta(int n) {
    if (n < 2) {
      throw std::invalid_argument("jones_delta needs n >= 2");
    }
    std::size_t const k = static_cast<std::size_t>(n - 1);
    Graph             g(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i <= j + 1 && j <= i + 1) {
          g.add_edge(i, k + j);
        }
      }
    }
    return g;
  }

}  // namespace maxsemi
