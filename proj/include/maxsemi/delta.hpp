#ifndef MAXSEMI_DELTA_HPP_
#define MAXSEMI_DELTA_HPP_

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "maxsemi/greens.hpp"

namespace maxsemi {

  /// A simple undirected graph on vertices 0..size()-1.
  class Graph {
   public:
    explicit Graph(std::size_t n = 0) : adj_(n, boost::dynamic_bitset<>(n)) {}

    std::size_t size() const noexcept {
      return adj_.size();
    }
    void add_edge(std::size_t a, std::size_t b) {
      adj_[a].set(b);
      adj_[b].set(a);
    }
    bool adjacent(std::size_t a, std::size_t b) const {
      return adj_[a].test(b);
    }
    std::size_t degree(std::size_t v) const {
      return adj_[v].count();
    }
    boost::dynamic_bitset<> const& neighbours(std::size_t v) const {
      return adj_[v];
    }
    std::size_t edge_count() const;

   private:
    std::vector<boost::dynamic_bitset<>> adj_;
  };

  /// Every maximal independent set once, each sorted, in lexicographic order.
  std::vector<std::vector<std::size_t>> maximal_independent_sets(Graph const& g);

  bool is_maximal_independent(Graph const& g, std::vector<std::size_t> const& s);

  Graph path_graph(std::size_t order);

  /// Padovan-type sequence: A1 = 1, A2 = A3 = 2, Ak = A(k-2) + A(k-3).
  std::uint64_t padovan(std::size_t k);
  /// F1 = F2 = 1.
  std::uint64_t fibonacci(std::size_t k);

  /// Bipartite graph on unit orbits of L-classes (vertices 0..l-1) and of
  /// R-classes (vertices l..l+r-1) of a J-class; an edge joins two orbits
  /// when some L in the first meets some R in the second in a group H-class.
  struct DeltaGraph {
    std::uint32_t                           j = 0;
    std::vector<std::vector<std::uint32_t>> l_vertices;
    std::vector<std::vector<std::uint32_t>> r_vertices;
    Graph                                   graph;

    std::size_t l_count() const {
      return l_vertices.size();
    }
    bool is_l_vertex(std::size_t v) const {
      return v < l_vertices.size();
    }
  };

  /// Requires J regular and covered by the units; throws std::invalid_argument
  /// otherwise.
  DeltaGraph build_delta(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j);

  /// Delta of the Jones monoid of degree n at rank n-2 without building it:
  /// L_i ~ R_j iff |i - j| <= 1, for i, j in 1..n-1.
  Graph jones_delta(int n);

}  // namespace maxsemi

#endif  // MAXSEMI_DELTA_HPP_
