#include "maxsemi/local_table.hpp"

namespace maxsemi {

  LocalTable::LocalTable(FiniteMonoid const& M, ElementSet const& region, Budgets const& budgets)
      : M_(&M), local_(M.size(), outside) {
    for (auto i = region.find_first(); i != ElementSet::npos; i = region.find_next(i)) {
      local_[i] = static_cast<std::uint32_t>(hosts_.size());
      hosts_.push_back(static_cast<index_t>(i));
    }
    std::size_t const k = hosts_.size();
    if (k * k <= budgets.table_entries) {
      table_.resize(k * k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          table_[a * k + b] = local_[M.product(hosts_[a], hosts_[b])];
        }
      }
    }
  }

  bool LocalTable::close(Bits& set, std::vector<std::uint32_t> fresh,
                         std::function<bool(std::uint32_t)> const& on_new) const {
    std::vector<std::uint32_t> members;
    for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i)) {
      members.push_back(static_cast<std::uint32_t>(i));
    }
    auto add = [&](std::uint32_t p) {
      if (p != outside && !set.test(p)) {
        set.set(p);
        members.push_back(p);
        fresh.push_back(p);
        return on_new && on_new(p);
      }
      return false;
    };
    for (std::size_t q = 0; q < fresh.size(); ++q) {
      std::uint32_t const y = fresh[q];
      for (std::size_t m = 0; m < members.size(); ++m) {
        std::uint32_t const z = members[m];
        if (add(product(y, z)) || add(product(z, y))) {
          return true;
        }
      }
    }
    return false;
  }

  LocalTable::Bits LocalTable::to_local(ElementSet const& s) const {
    Bits out(hosts_.size());
    for (std::size_t i = 0; i < hosts_.size(); ++i) {
      if (s.test(hosts_[i])) {
        out.set(i);
      }
    }
    return out;
  }

  ElementSet LocalTable::to_host(Bits const& s) const {
    ElementSet out(M_->size());
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
      out.set(hosts_[i]);
    }
    return out;
  }

}  // namespace maxsemi
