#ifndef MAXSEMI_LOCAL_TABLE_HPP_
#define MAXSEMI_LOCAL_TABLE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "maxsemi/monoid.hpp"

namespace maxsemi {

  /// Products of a monoid restricted to a region, usually an up-set of a
  /// J-class, in local indices.  Products leaving the region are `outside`.
  class LocalTable {
   public:
    static constexpr std::uint32_t outside = UINT32_MAX;

    LocalTable(FiniteMonoid const& M, ElementSet const& region, Budgets const& budgets);

    std::size_t size() const noexcept {
      return hosts_.size();
    }
    index_t host(std::uint32_t local) const {
      return hosts_[local];
    }
    std::uint32_t local(index_t host) const {
      return local_[host];
    }
    bool tabulated() const noexcept {
      return !table_.empty();
    }
    std::uint32_t product(std::uint32_t a, std::uint32_t b) const {
      if (!table_.empty()) {
        return table_[std::size_t(a) * hosts_.size() + b];
      }
      return local_[M_->product(hosts_[a], hosts_[b])];
    }
    FiniteMonoid const& monoid() const noexcept {
      return *M_;
    }

    using Bits = boost::dynamic_bitset<>;

    /// Closes `set` (local) under products staying in the region, assuming
    /// `set` minus `fresh` is already closed.  `on_new` may stop the
    /// computation early by returning true; then the function returns true.
    bool close(Bits& set, std::vector<std::uint32_t> fresh,
               std::function<bool(std::uint32_t)> const& on_new = {}) const;

    Bits to_local(ElementSet const& s) const;
    ElementSet to_host(Bits const& s) const;

   private:
    FiniteMonoid const*        M_;
    std::vector<index_t>       hosts_;
    std::vector<std::uint32_t> local_;
    std::vector<std::uint32_t> table_;
  };

}  // namespace maxsemi

#endif  // MAXSEMI_LOCAL_TABLE_HPP_
