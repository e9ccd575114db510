#include "maxsemi/budget.hpp"

#include <cstdlib>
#include <sstream>

namespace maxsemi {

  CapacityError::CapacityError(std::string const& what_bound, std::size_t limit)
      : std::runtime_error("capacity exceeded: " + what_bound + " limit is "
                           + std::to_string(limit)),
        bound_(what_bound),
        limit_(limit) {}

  Budgets Budgets::from_env() {
    char const* env = std::getenv("MAXSEMI_BUDGETS");
    if (env == nullptr) {
      return Budgets{};
    }
    return parse(env);
  }

  Budgets Budgets::parse(std::string const& spec) {
    return parse(spec, Budgets{});
  }

  Budgets Budgets::parse(std::string const& spec, Budgets base) {
    std::istringstream in(spec);
    std::string        item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) {
        continue;
      }
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("budget entry without '=': " + item);
      }
      std::string key   = item.substr(0, eq);
      std::size_t value = std::stoull(item.substr(eq + 1));
      if (key == "elements") {
        base.elements = value;
      } else if (key == "table") {
        base.table_entries = value;
      } else if (key == "subgroup") {
        base.subgroup = value;
      } else if (key == "oracle") {
        base.oracle = value;
      } else if (key == "jclass") {
        base.jclass = value;
      } else if (key == "m5_fallback") {
        base.m5_fallback = value;
      } else if (key == "transversal_samples") {
        base.transversal_samples = value;
      } else {
        throw std::invalid_argument("unknown budget key: " + key);
      }
    }
    if (base.elements == 0 || base.subgroup == 0 || base.oracle == 0
        || base.jclass == 0) {
      throw std::invalid_argument("budgets must be positive");
    }
    return base;
  }

}  // namespace maxsemi
