#ifndef MAXSEMI_REGISTRY_HPP_
#define MAXSEMI_REGISTRY_HPP_

#include <string>
#include <vector>

#include "maxsemi/descriptor.hpp"

namespace maxsemi {

  struct RegistryResult {
    /// False when no statement covers this family at this degree.
    bool applies = false;
    /// The small-degree exception list was used instead of the general
    /// construction.
    bool                    special_case = false;
    std::string             statement;
    std::vector<Descriptor> descriptors;
  };

  /// The explicit maximal subsemigroups for a family instance, built from
  /// the family's description rather than by search.  M must come from
  /// FiniteMonoid::enumerate.  Parts handed to part_removals are checked before
  /// their descriptors are emitted (std::runtime_error on rejection).
  RegistryResult theorem_registry(FiniteMonoid const& M, GreensStructure const& G,
                                  Budgets const& budgets = Budgets::from_env());

  /// Index sets for the two-orbit path constructions: the maximal
  /// independent sets of the path 1 - 2 - ... - k, found from the
  /// "exactly one of i + 2, i + 3" rule rather than by graph search.
  std::vector<std::vector<int>> path_maximal_independent_sets(int k);

  /// Vertex sequences of the Jones Delta graph (L_i as (true, i), R_i as
  /// (false, i)), from the same-side +1 / other-side +2 rule.
  std::vector<std::vector<std::pair<bool, int>>> jones_maximal_independent_sets(int n);

}  // namespace maxsemi

#endif  // MAXSEMI_REGISTRY_HPP_
