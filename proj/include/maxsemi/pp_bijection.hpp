#ifndef MAXSEMI_PP_BIJECTION_HPP_
#define MAXSEMI_PP_BIJECTION_HPP_

#include <vector>

#include "maxsemi/monoid.hpp"

namespace maxsemi {

  /// The isomorphism from the planar partition monoid of degree n onto the
  /// Jones monoid of degree 2n.  Point i is doubled to 2i - 1, 2i: cutting i
  /// maps to the projection e_{2i-1}, and joining i, i + 1 maps to e_{2i}.
  /// The map is extended along words in these generators; a clash between
  /// two words for the same element is an error.
  class PlanarJonesMap {
   public:
    PlanarJonesMap(FiniteMonoid const& planar, FiniteMonoid const& jones);

    index_t to_jones(index_t x) const {
      return forward_[x];
    }

    index_t to_planar(index_t y) const {
      return backward_[y];
    }

    /// f(xy) = f(x)f(y) for every pair.
    bool is_homomorphism() const;

    ElementSet to_planar(ElementSet const& jones_set) const;

   private:
    FiniteMonoid const&  planar_;
    FiniteMonoid const&  jones_;
    std::vector<index_t> forward_;
    std::vector<index_t> backward_;
  };

  /// Cut point i: blocks {i}, {i'}, identity elsewhere.
  Partition planar_cut(int n, int i);
  /// Join i, i + 1: block {i, i + 1, i', (i + 1)'}, identity elsewhere.
  Partition planar_join(int n, int i);

}  // namespace maxsemi

#endif  // MAXSEMI_PP_BIJECTION_HPP_
