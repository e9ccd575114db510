#ifndef MAXSEMI_CLASSIFY_HPP_
#define MAXSEMI_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "maxsemi/delta.hpp"
#include "maxsemi/descriptor.hpp"
#include "maxsemi/group.hpp"

namespace maxsemi {

  struct Classification {
    std::vector<Descriptor> descriptors;
    bool                    complete = true;
    std::string             note;
  };

  /// (S \ G) u U for each maximal subgroup U of the units G, or S \ G when G
  /// is trivial.
  std::vector<Descriptor> classify_units(FiniteMonoid const& M, GreensStructure const& G,
                                         Budgets const& budgets = Budgets::from_env());

  /// Maximal subsemigroups arising from a regular J-class covered by the
  /// units: M2-M4 from the Delta graph, M5 from the regular-* intersection or
  /// a bounded search, M1 when nothing else exists.
  Classification classify_covered(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j,
                                  Budgets const& budgets = Budgets::from_env());

  struct StarIntersect {
    bool                    applies = false;
    std::string             reason;
    std::optional<index_t>  projection;
    std::vector<Descriptor> descriptors;
  };

  /// One M5 descriptor per maximal subgroup of H_e containing e Stab_G(H_e).
  /// Uses the least projection of J unless one is given.
  StarIntersect regular_star_intersect(FiniteMonoid const& M, GreensStructure const& G,
                                       std::uint32_t j, Budgets const& budgets = Budgets::from_env(),
                                       std::optional<index_t> projection = std::nullopt);

  struct PartRemovals {
    bool                    accepted = false;
    std::string             reason;
    /// A set meeting every part but not generating, or avoiding a part but
    /// generating, when the hypothesis fails.
    std::vector<index_t>    counterexample;
    std::vector<Descriptor> descriptors;
  };

  /// S \ X_i for each part, after checking that <S \ J, A> = S iff A meets
  /// every part: each S \ X_i must be closed, and transversals of the parts
  /// must generate J (all of them if few, else a sample).
  PartRemovals part_removals(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j,
                    std::vector<ElementSet> const& parts, std::vector<Kind> const& kinds,
                    Budgets const& budgets = Budgets::from_env());

  /// Units plus every regular J-class covered by them.  J-classes that are
  /// not covered but still meet every generating set are listed in the note
  /// and make the result incomplete.
  Classification classify(FiniteMonoid const& M, GreensStructure const& G,
                          Budgets const& budgets = Budgets::from_env());

  /// J-classes from which some maximal subsemigroup arises, i.e. those with
  /// <S \ J> != S.
  std::vector<std::uint32_t> contributing_j_classes(FiniteMonoid const& M, GreensStructure const& G,
                                                    Budgets const& budgets = Budgets::from_env());

}  // namespace maxsemi

#endif  // MAXSEMI_CLASSIFY_HPP_
