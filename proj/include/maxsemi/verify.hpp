#ifndef MAXSEMI_VERIFY_HPP_
#define MAXSEMI_VERIFY_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxsemi/greens.hpp"
#include "maxsemi/local_table.hpp"

namespace maxsemi {

  /// Brute force over all pairs of X.
  bool is_subsemigroup(FiniteMonoid const& M, ElementSet const& X);

  struct Verdict {
    enum class Status { maximal, not_proper, not_closed, not_maximal };
    Status status = Status::maximal;
    /// not_closed: a, b in X with ab outside X.
    std::optional<std::pair<index_t, index_t>> product_witness;
    /// not_maximal: x outside X with <X, x> != S.
    std::optional<index_t> excluded_witness;

    bool ok() const noexcept {
      return status == Status::maximal;
    }
  };

  std::string to_string(Verdict::Status s);

  /// Checks X against the definition.  Only products of elements above the
  /// J-classes meeting S \ X can land in S \ X, so work is confined to that
  /// up-set; local tables are cached per up-set.
  class Verifier {
   public:
    Verifier(FiniteMonoid const& M, GreensStructure const& G,
             Budgets const& budgets = Budgets::from_env());

    Verdict verify_maximal(ElementSet const& X);

    /// <X, extra> contains every element of `target` (all host sets).
    bool generates(ElementSet const& X, std::vector<index_t> const& extra,
                   ElementSet const& target);

    LocalTable const& table_for(ElementSet const& region);

   private:
    FiniteMonoid const&                                   M_;
    GreensStructure const&                                G_;
    Budgets                                               budgets_;
    std::map<std::vector<index_t>, std::unique_ptr<LocalTable>> cache_;
  };

  Verdict verify_maximal(FiniteMonoid const& M, GreensStructure const& G, ElementSet const& X);

  /// Inclusion-maximal proper subsemigroups by checking every subset.
  /// Requires |M| <= budgets.oracle.
  std::vector<ElementSet> exhaustive_maximal(FiniteMonoid const& M, Budgets const& budgets);

  /// For each J-class J and each Y in J, keeps (S \ J) u Y when closed and
  /// maximal.  Requires every |J| <= budgets.jclass.
  std::vector<ElementSet> jclass_restricted_maximal(FiniteMonoid const& M, GreensStructure const& G,
                                                    Budgets const& budgets);

  /// True if S \ X lies in one J-class.
  bool complement_in_one_j_class(GreensStructure const& G, ElementSet const& X);

  struct OracleReport {
    std::string             host;
    std::string             oracle;
    std::vector<ElementSet> oracle_sets;
    std::vector<ElementSet> engine_sets;
    bool                    agreement = false;
    std::vector<ElementSet> only_oracle;
    std::vector<ElementSet> only_engine;
  };

  OracleReport compare_sets(std::string host, std::string oracle, std::vector<ElementSet> oracle_sets,
                            std::vector<ElementSet> engine_sets);

}  // namespace maxsemi

#endif  // MAXSEMI_VERIFY_HPP_
