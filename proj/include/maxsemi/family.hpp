#ifndef MAXSEMI_FAMILY_HPP_
#define MAXSEMI_FAMILY_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace maxsemi {

  enum class Family {
    // partial transformations
    PT,
    T,
    I,
    S,
    PO,
    POD,
    POP,
    POR,
    O,
    OD,
    OP,
    OR,
    POI,
    PODI,
    POPI,
    PORI,
    // partitions
    P,
    PB,
    B,
    Istar,
    F,
    PP,
    M,
    J,
    AJ
  };

  inline constexpr std::array<Family, 25> all_families = {
      Family::PT,   Family::T,     Family::I,    Family::S,    Family::PO,
      Family::POD,  Family::POP,   Family::POR,  Family::O,    Family::OD,
      Family::OP,   Family::OR,    Family::POI,  Family::PODI, Family::POPI,
      Family::PORI, Family::P,     Family::PB,   Family::B,    Family::Istar,
      Family::F,    Family::PP,    Family::M,    Family::J,    Family::AJ};

  bool is_transformation_family(Family f) noexcept;

  inline bool is_diagram_family(Family f) noexcept {
    return !is_transformation_family(f);
  }

  std::string_view family_name(Family f) noexcept;

  /// Accepts the names produced by family_name plus "I*" for Istar.
  std::optional<Family> parse_family(std::string_view name);

  /// A family at a fixed degree.
  struct FamilyInstance {
    Family family;
    int    degree;

    bool operator==(FamilyInstance const&) const = default;
  };

  std::string to_string(FamilyInstance const& fi);

}  // namespace maxsemi

#endif  // MAXSEMI_FAMILY_HPP_
