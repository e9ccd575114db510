#ifndef MAXSEMI_GREENS_HPP_
#define MAXSEMI_GREENS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "maxsemi/monoid.hpp"

namespace maxsemi {

  struct JClassInfo {
    std::vector<index_t>       elements;
    std::vector<std::uint32_t> l_classes;
    std::vector<std::uint32_t> r_classes;
    std::size_t                rank = 0;
    bool                       regular = false;
    std::size_t                h_size  = 0;
    /// (L-class id, R-class id) of every group H-class.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> group_h;
    std::size_t                                          idempotents = 0;
  };

  /// Green's relations of a finite monoid.  Class ids are numbered by the
  /// least element index they contain; J-classes by decreasing rank, then by
  /// least element.
  struct GreensStructure {
    std::vector<std::uint32_t> l_of, r_of, h_of, j_of;
    std::vector<std::vector<index_t>> l_members, r_members, h_members;
    std::vector<std::uint32_t>        l_j, r_j;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> h_coords;
    std::vector<JClassInfo> j_classes;
    /// ge[j] has bit k set iff J_k >= J_j.
    std::vector<boost::dynamic_bitset<>> ge;
    std::vector<bool> idempotent;
    std::uint32_t     units = 0;
    /// True iff distinct J-classes have distinct ranks.
    bool rank_labels = false;

    bool leq(std::uint32_t j, std::uint32_t k) const {
      return ge[j].test(k);
    }

    std::vector<std::uint32_t> strictly_above(std::uint32_t j) const;

    /// The only J-class strictly above J is the group of units.
    bool covered_by_units(std::uint32_t j) const;

    std::optional<std::uint32_t> j_of_rank(std::size_t rank) const;

    /// H-class id of L_l n R_r, if nonempty.
    std::optional<std::uint32_t> h_of_pair(std::uint32_t l, std::uint32_t r) const;

    bool is_group_h_class(std::uint32_t h) const;

    /// Up-set of J: elements whose J-class is >= J.
    ElementSet up_set(std::uint32_t j) const;

    std::vector<index_t> const& units_members() const {
      return j_classes[units].elements;
    }
  };

  /// Left/right reachability through the generators.
  GreensStructure greens(FiniteMonoid const& M);

  /// Class labels from the attribute characterisations, where they apply.
  struct AttributeClasses {
    std::vector<std::uint64_t> l_key, r_key;
    std::vector<std::uint64_t> j_key;  // rank
    bool                       j_applies = true;
  };

  std::optional<AttributeClasses> attribute_classes(FiniteMonoid const& M);

  /// Empty if the generic and attribute computations agree, else a message.
  std::optional<std::string> greens_attribute_mismatch(FiniteMonoid const&    M,
                                                       GreensStructure const& G);

  struct UnitOrbits {
    std::vector<std::vector<std::uint32_t>> l_orbits;
    std::vector<std::vector<std::uint32_t>> r_orbits;
    bool                                    single_h_class = false;
  };

  /// Orbits of the L-classes of J under right multiplication by units and of
  /// its R-classes under left multiplication.
  UnitOrbits unit_orbits(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j);

  /// The same orbits from the action of units on image sets, domains and
  /// kernels; only for transformation monoids and partition monoids whose
  /// units are permutations.
  UnitOrbits unit_orbits_by_action(FiniteMonoid const& M, GreensStructure const& G,
                                   std::uint32_t j);

}  // namespace maxsemi

#endif  // MAXSEMI_GREENS_HPP_
