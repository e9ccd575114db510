#ifndef MAXSEMI_DESCRIPTOR_HPP_
#define MAXSEMI_DESCRIPTOR_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "maxsemi/greens.hpp"

namespace maxsemi {

  /// Shape of M n J for a maximal subsemigroup M arising from J.
  enum class Kind { M1, M2, M3, M4, M5 };

  std::string_view kind_name(Kind k);
  Kind             parse_kind(std::string_view s);

  using Materializer = std::function<ElementSet(FiniteMonoid const&, GreensStructure const&)>;

  /// A maximal subsemigroup described symbolically; the element set is built
  /// on demand.
  struct Descriptor {
    std::string    host;
    std::size_t    j_rank = 0;
    Kind           kind   = Kind::M1;
    std::string    origin;
    nlohmann::json payload = nlohmann::json::object();
    Materializer   materialize;
  };

  /// (S \ J) u {x in J : keep(x)}.
  ElementSet keep_in_j(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j,
                       std::function<bool(index_t)> const& keep);

  /// S minus the elements satisfying `drop`.
  ElementSet drop_where(FiniteMonoid const& M, std::function<bool(index_t)> const& drop);

  /// (S \ J) u GUG, with G the units.
  ElementSet units_sandwich(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j,
                            std::vector<index_t> const& U);

  /// The type of X n J if S \ X lies in J and X n J has one of the five
  /// shapes, else nothing.
  std::optional<Kind> intersection_type(GreensStructure const& G, std::uint32_t j, ElementSet const& X);

  /// A few elements of `group` (host indices) generating it inside M.
  std::vector<index_t> small_generating_set(FiniteMonoid const& M, std::vector<index_t> group);

}  // namespace maxsemi

#endif  // MAXSEMI_DESCRIPTOR_HPP_
