#ifndef MAXSEMI_MONOID_HPP_
#define MAXSEMI_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "maxsemi/budget.hpp"
#include "maxsemi/family.hpp"
#include "maxsemi/partition.hpp"
#include "maxsemi/transformation.hpp"

namespace maxsemi {

  using index_t    = std::uint32_t;
  using ElementSet = boost::dynamic_bitset<std::uint64_t>;

  std::vector<index_t> members(ElementSet const& s);

  namespace detail {
    template <typename Element>
    struct Store {
      std::vector<Element>                  elements;
      std::unordered_map<Element, index_t> index;
    };
  }  // namespace detail

  /// An indexed finite monoid of partial transformations or of partitions.
  /// Elements are sorted by decreasing rank and then by representation, so
  /// the identity has index 0.
  class FiniteMonoid {
   public:
    static FiniteMonoid enumerate(Family f, int n, Budgets const& budgets = Budgets::from_env());

    /// The monoid generated by the elements and the identity.
    static FiniteMonoid closure(std::vector<PartialTransformation> const& gens,
                                Budgets const& budgets = Budgets::from_env());
    static FiniteMonoid closure(std::vector<Partition> const& gens,
                                Budgets const& budgets = Budgets::from_env());

    std::size_t size() const noexcept {
      return size_;
    }

    int degree() const noexcept {
      return degree_;
    }

    /// The family and degree, or nothing for a monoid built by closure.
    std::optional<FamilyInstance> const& instance() const noexcept {
      return instance_;
    }

    std::string name() const;

    bool is_transformation_monoid() const noexcept {
      return std::holds_alternative<detail::Store<PartialTransformation>>(store_);
    }

    index_t identity() const noexcept {
      return 0;
    }

    std::vector<index_t> const& generators() const noexcept {
      return generators_;
    }

    index_t product(index_t a, index_t b) const;

    bool has_table() const noexcept {
      return !table_.empty();
    }

    std::optional<index_t> find(PartialTransformation const& x) const;
    std::optional<index_t> find(Partition const& x) const;

    PartialTransformation const& transformation(index_t i) const;
    Partition const&             partition(index_t i) const;

    std::size_t rank(index_t i) const noexcept {
      return ranks_[i];
    }

    /// True when the monoid is closed under * (inverse for partial
    /// permutations, the flip for partitions).
    bool has_star() const noexcept {
      return !star_.empty();
    }

    index_t star(index_t i) const {
      return star_.at(i);
    }

    /// Single-line text form of element i.
    std::string element_string(index_t i) const;

    ElementSet empty_set() const {
      return ElementSet(size_);
    }

    ElementSet full_set() const {
      ElementSet s(size_);
      s.set();
      return s;
    }

   private:
    template <typename Element>
    static FiniteMonoid build(std::vector<Element>                 elements,
                              std::vector<Element> const&          gens,
                              std::optional<FamilyInstance> const& inst,
                              Budgets const&                       budgets);

    template <typename Element>
    static FiniteMonoid close_under(std::vector<Element> const& gens, Budgets const& budgets);

    std::variant<detail::Store<PartialTransformation>, detail::Store<Partition>> store_;
    std::size_t                   size_   = 0;
    int                           degree_ = 0;
    std::optional<FamilyInstance> instance_;
    std::vector<index_t>          generators_;
    std::vector<index_t>          table_;
    std::vector<index_t>          star_;
    std::vector<std::uint8_t>     ranks_;
  };

}  // namespace maxsemi

#endif  // MAXSEMI_MONOID_HPP_
