#ifndef MAXSEMI_BUDGET_HPP_
#define MAXSEMI_BUDGET_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxsemi {

  /// Thrown when a computation would exceed one of the configured budgets.
  class CapacityError : public std::runtime_error {
   public:
    CapacityError(std::string const& what_bound, std::size_t limit);

    std::string const& bound() const noexcept {
      return bound_;
    }
    std::size_t limit() const noexcept {
      return limit_;
    }

   private:
    std::string bound_;
    std::size_t limit_;
  };

  struct Budgets {
    std::size_t elements      = 200'000;
    std::size_t table_entries = std::size_t(1) << 24;
    std::size_t subgroup      = 720;
    std::size_t oracle        = 20;
    std::size_t jclass        = 22;
    // Node budget of the fallback search for type M5 sets; 0 disables it.
    std::size_t m5_fallback = 200'000;
    // Transversals tried when checking the hypothesis of part_removals.
    std::size_t transversal_samples = 24;

    /// Defaults overridden by MAXSEMI_BUDGETS, e.g. "elements=500000,oracle=18".
    static Budgets from_env();

    /// Parses "key=value,key=value" on top of \p base.
    static Budgets parse(std::string const& spec, Budgets base);
    static Budgets parse(std::string const& spec);
  };

}  // namespace maxsemi

#endif  // MAXSEMI_BUDGET_HPP_
