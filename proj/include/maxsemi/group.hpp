#ifndef MAXSEMI_GROUP_HPP_
#define MAXSEMI_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "maxsemi/budget.hpp"
#include "maxsemi/monoid.hpp"

namespace maxsemi {

  using Subgroup = boost::dynamic_bitset<>;

  /// A finite group given by its Cayley table over local indices 0..order-1.
  class GroupTable {
   public:
    static GroupTable cyclic(std::size_t m);
    /// The dihedral group of order 2m: index k is r^k, index m+k is r^k s.
    static GroupTable dihedral(std::size_t m);
    static GroupTable symmetric(int n);
    /// The group formed by \p elements of \p M, e.g. a group H-class.
    /// Throws std::invalid_argument if they do not form a group.
    static GroupTable from_monoid(FiniteMonoid const& M, std::vector<index_t> elements);

    std::size_t order() const noexcept {
      return order_;
    }
    std::size_t identity() const noexcept {
      return identity_;
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
      return table_[a * order_ + b];
    }
    std::size_t inverse(std::size_t a) const {
      return inverse_[a];
    }
    std::size_t element_order(std::size_t a) const;

    /// Host indices when built from a monoid, else empty.
    std::vector<index_t> const& host() const noexcept {
      return host_;
    }
    /// Local index of a host element.
    std::optional<std::size_t> local(index_t host_index) const;

    Subgroup generate(std::vector<std::size_t> const& gens) const;
    Subgroup whole() const;

   private:
    static GroupTable from_table(std::vector<std::size_t> table, std::size_t order);

    std::size_t              order_    = 0;
    std::size_t              identity_ = 0;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<index_t>     host_;
  };

  struct GroupShape {
    enum class Kind { trivial, cyclic, dihedral, other } kind = Kind::other;
    /// A generator for cyclic groups; the rotation for dihedral ones.
    std::size_t rotation = 0;
    /// A reflection for dihedral groups.
    std::size_t reflection = 0;
  };

  /// Cyclic if some element has order |G|; dihedral of order 2m (m >= 3) if
  /// some r has order m and an involution s outside <r> has srs = r^-1.
  GroupShape recognise(GroupTable const& G);

  std::vector<std::size_t> prime_divisors(std::size_t n);

  /// Every subgroup, as joins of cyclic subgroups.
  std::vector<Subgroup> all_subgroups(GroupTable const& G, Budgets const& budgets);

  /// Maximal subgroups by exhaustive search over all subgroups.
  std::vector<Subgroup> maximal_subgroups_by_search(GroupTable const& G, Budgets const& budgets);

  /// Maximal subgroups found by growing subgroups one element at a time; H is
  /// maximal iff <H, g> = G for every g outside H.
  std::vector<Subgroup> maximal_subgroups_by_growth(GroupTable const& G, Budgets const& budgets);

  /// Closed-form lists for cyclic and dihedral groups, search otherwise.
  /// Sorted; the trivial group has none.
  std::vector<Subgroup> maximal_subgroups(GroupTable const& G, Budgets const& budgets);

  /// The closed-form list, or nothing if G is neither cyclic nor dihedral.
  std::optional<std::vector<Subgroup>> closed_form_maximal_subgroups(GroupTable const& G);

  /// Number of maximal subgroups of the symmetric group of degree n, or
  /// nothing if n! exceeds the subgroup budget.
  std::optional<std::size_t> symmetric_maximal_count(int n, Budgets const& budgets);

}  // namespace maxsemi

#endif  // MAXSEMI_GROUP_HPP_
