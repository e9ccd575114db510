#include "maxsemi/descriptor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace maxsemi {

  std::string_view kind_name(Kind k) {
    switch (k) {
      case Kind::M1:
        return "M1";
      case Kind::M2:
        return "M2";
      case Kind::M3:
        return "M3";
      case Kind::M4:
        return "M4";
      case Kind::M5:
        return "M5";
    }
    return "?";
  }

  Kind parse_kind(std::string_view s) {
    for (Kind k : {Kind::M1, Kind::M2, Kind::M3, Kind::M4, Kind::M5}) {
      if (kind_name(k) == s) {
        return k;
      }
    }
    throw std::invalid_argument("unknown kind: " + std::string(s));
  }

  ElementSet keep_in_j(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j,
                       std::function<bool(index_t)> const& keep) {
    ElementSet s = M.full_set();
    for (index_t x : G.j_classes[j].elements) {
      if (!keep(x)) {
        s.reset(x);
      }
    }
    return s;
  }

  ElementSet drop_where(FiniteMonoid const& M, std::function<bool(index_t)> const& drop) {
    ElementSet s = M.full_set();
    for (index_t x = 0; x < M.size(); ++x) {
      if (drop(x)) {
        s.reset(x);
      }
    }
    return s;
  }

  ElementSet units_sandwich(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j,
                            std::vector<index_t> const& U) {
    ElementSet keep(M.size());
    for (index_t g : G.units_members()) {
      for (index_t u : U) {
        index_t gu = M.product(g, u);
        for (index_t h : G.units_members()) {
          keep.set(M.product(gu, h));
        }
      }
    }
    return keep_in_j(M, G, j, [&](index_t x) { return keep.test(x); });
  }

  std::optional<Kind> intersection_type(GreensStructure const& G, std::uint32_t j, ElementSet const& X) {
    ElementSet C = ~X;
    for (auto i = C.find_first(); i != ElementSet::npos; i = C.find_next(i)) {
      if (G.j_of[i] != j) {
        return std::nullopt;
      }
    }
    auto const& J = G.j_classes[j];
    std::size_t kept = 0;
    for (index_t x : J.elements) {
      kept += X.test(x);
    }
    if (kept == 0) {
      return Kind::M1;
    }
    if (kept == J.elements.size()) {
      return std::nullopt;
    }
    // Per H-class: fully kept, fully removed, or partial.
    std::set<std::uint32_t> hs;
    bool                    partial = false, every_h_met = true;
    for (index_t x : J.elements) {
      hs.insert(G.h_of[x]);
    }
    std::set<std::uint32_t> full_h;
    for (auto h : hs) {
      std::size_t in = 0;
      for (index_t x : G.h_members[h]) {
        in += X.test(x);
      }
      partial     = partial || (in != 0 && in != G.h_members[h].size());
      every_h_met = every_h_met && in != 0;
      if (in == G.h_members[h].size()) {
        full_h.insert(h);
      }
    }
    if (every_h_met) {
      return Kind::M5;
    }
    if (partial) {
      return std::nullopt;
    }
    auto l_full = [&](std::uint32_t l) {
      for (index_t x : G.l_members[l]) {
        if (!X.test(x)) {
          return false;
        }
      }
      return true;
    };
    auto r_full = [&](std::uint32_t r) {
      for (index_t x : G.r_members[r]) {
        if (!X.test(x)) {
          return false;
        }
      }
      return true;
    };
    std::vector<std::uint32_t> ls, rs;
    for (auto l : J.l_classes) {
      if (l_full(l)) {
        ls.push_back(l);
      }
    }
    for (auto r : J.r_classes) {
      if (r_full(r)) {
        rs.push_back(r);
      }
    }
    auto covered_by = [&](bool use_l, bool use_r) {
      for (auto h : full_h) {
        auto [l, r] = G.h_coords[h];
        bool ok     = (use_l && std::count(ls.begin(), ls.end(), l))
                  || (use_r && std::count(rs.begin(), rs.end(), r));
        if (!ok) {
          return false;
        }
      }
      return true;
    };
    bool const by_l = covered_by(true, false), by_r = covered_by(false, true);
    if (by_l && !by_r) {
      return Kind::M3;
    }
    if (by_r && !by_l) {
      return Kind::M4;
    }
    if (covered_by(true, true) && !ls.empty() && !rs.empty()) {
      return Kind::M2;
    }
    return std::nullopt;
  }

  std::vector<index_t> small_generating_set(FiniteMonoid const& M, std::vector<index_t> group) {
    std::sort(group.begin(), group.end());
    std::vector<index_t> gens;
    std::set<index_t>    reached;
    for (index_t g : group) {
      if (reached.count(g)) {
        continue;
      }
      gens.push_back(g);
      // Close under right multiplication by the generators.
      std::vector<index_t> queue(reached.begin(), reached.end());
      for (index_t x : gens) {
        if (reached.insert(x).second) {
          queue.push_back(x);
        }
      }
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (index_t x : gens) {
          index_t y = M.product(queue[i], x);
          if (reached.insert(y).second) {
            queue.push_back(y);
          }
        }
      }
    }
    return gens;
  }

}  // namespace maxsemi
