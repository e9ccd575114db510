#include "maxsemi/family.hpp"

namespace maxsemi {

  bool is_transformation_family(Family f) noexcept {
    switch (f) {
      case Family::P:
      case Family::PB:
      case Family::B:
      case Family::Istar:
      case Family::F:
      case Family::PP:
      case Family::M:
      case Family::J:
      case Family::AJ:
        return false;
      default:
        return true;
    }
  }

  std::string_view family_name(Family f) noexcept {
    switch (f) {
      case Family::PT:
        return "PT";
      case Family::T:
        return "T";
      case Family::I:
        return "I";
      case Family::S:
        return "S";
      case Family::PO:
        return "PO";
      case Family::POD:
        return "POD";
      case Family::POP:
        return "POP";
      case Family::POR:
        return "POR";
      case Family::O:
        return "O";
      case Family::OD:
        return "OD";
      case Family::OP:
        return "OP";
      case Family::OR:
        return "OR";
      case Family::POI:
        return "POI";
      case Family::PODI:
        return "PODI";
      case Family::POPI:
        return "POPI";
      case Family::PORI:
        return "PORI";
      case Family::P:
        return "P";
      case Family::PB:
        return "PB";
      case Family::B:
        return "B";
      case Family::Istar:
        return "Istar";
      case Family::F:
        return "F";
      case Family::PP:
        return "PP";
      case Family::M:
        return "M";
      case Family::J:
        return "J";
      case Family::AJ:
        return "AJ";
    }
    return "?";
  }

  std::optional<Family> parse_family(std::string_view name) {
    if (name == "I*") {
      return Family::Istar;
    }
    for (Family f : all_families) {
      if (family_name(f) == name) {
        return f;
      }
    }
    return std::nullopt;
  }

  std::string to_string(FamilyInstance const& fi) {
    return std::string(family_name(fi.family)) + "_" + std::to_string(fi.degree);
  }

}  // namespace maxsemi
