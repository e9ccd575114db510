#ifndef MAXSEMI_COUNT_FORMULA_HPP_
#define MAXSEMI_COUNT_FORMULA_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "maxsemi/budget.hpp"
#include "maxsemi/family.hpp"

namespace maxsemi {

  /// Closed-form number of maximal subsemigroups of a family at a degree.
  struct CountFormula {
    bool                         applies = false;
    /// Degrees handled by a separate statement rather than the general formula.
    bool                         special_case = false;
    /// Empty when the formula needs s_n and the symmetric group is too big.
    std::optional<std::uint64_t> value;
    std::string                  formula;
  };

  CountFormula count_formula(Family f, int n, Budgets const& budgets = Budgets::from_env());

  /// Number of distinct primes dividing n.
  std::size_t distinct_prime_count(std::size_t n);
  std::size_t prime_divisor_sum(std::size_t n);

}  // namespace maxsemi

#endif  // MAXSEMI_COUNT_FORMULA_HPP_
