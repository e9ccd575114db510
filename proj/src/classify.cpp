#include "maxsemi/classify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "maxsemi/verify.hpp"

namespace maxsemi {

  namespace {
    using Bits = LocalTable::Bits;

    Descriptor make(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j, Kind kind,
                    std::string origin, Materializer mat) {
      Descriptor d;
      d.host        = M.name();
      d.j_rank      = G.j_classes[j].rank;
      d.kind        = kind;
      d.origin      = std::move(origin);
      d.materialize = std::move(mat);
      return d;
    }

    Materializer fixed(ElementSet s) {
      return [s = std::move(s)](FiniteMonoid const&, GreensStructure const&) { return s; };
    }

    nlohmann::json element_list(FiniteMonoid const& M, std::vector<index_t> const& xs) {
      nlohmann::json out = nlohmann::json::array();
      for (index_t x : xs) {
        out.push_back(M.element_string(x));
      }
      return out;
    }

    std::string rank_text(GreensStructure const& G, std::uint32_t j) {
      return "rank " + std::to_string(G.j_classes[j].rank);
    }

    bool has_generator_in(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j) {
      for (index_t g : M.generators()) {
        if (G.j_of[g] == j) {
          return true;
        }
      }
      return false;
    }

    // Maximal K in J with (S \ J) u K a subsemigroup meeting every H-class
    // of J, by depth-first growth from the closure of the idempotents.
    struct M5Search {
      LocalTable const&          T;
      Bits                       in_j;
      std::vector<std::uint32_t> h_of;  // per local index, H-class or -1
      std::size_t                budget;
      std::size_t                nodes = 0;
      bool                       exhausted = false;
      std::set<Bits>             seen{};
      std::vector<Bits>          found{};

      Bits add(Bits const& base, std::uint32_t x) {
        ++nodes;
        Bits set = base;
        set.set(x);
        T.close(set, {x});
        return set;
      }

      bool meets_every_h(Bits const& set, std::uint32_t& missing) const {
        std::set<std::uint32_t> met;
        std::set<std::uint32_t> all;
        for (auto i = in_j.find_first(); i != Bits::npos; i = in_j.find_next(i)) {
          all.insert(h_of[i]);
          if (set.test(i)) {
            met.insert(h_of[i]);
          }
        }
        for (auto h : all) {
          if (!met.count(h)) {
            missing = h;
            return false;
          }
        }
        return true;
      }

      void grow(Bits const& set) {
        if (exhausted || !seen.insert(set).second) {
          return;
        }
        if (nodes > budget) {
          exhausted = true;
          return;
        }
        std::uint32_t missing = 0;
        if (!meets_every_h(set, missing)) {
          for (auto i = in_j.find_first(); i != Bits::npos; i = in_j.find_next(i)) {
            if (h_of[i] == missing) {
              Bits next = add(set, static_cast<std::uint32_t>(i));
              if (!in_j.is_subset_of(next)) {
                grow(next);
              }
            }
          }
          return;
        }
        bool maximal = true;
        for (auto i = in_j.find_first(); i != Bits::npos; i = in_j.find_next(i)) {
          if (set.test(i)) {
            continue;
          }
          Bits next = add(set, static_cast<std::uint32_t>(i));
          if (!in_j.is_subset_of(next)) {
            maximal = false;
            grow(next);
          }
        }
        if (maximal) {
          found.push_back(set);
        }
      }
    };
  }  // namespace

  std::vector<Descriptor> classify_units(FiniteMonoid const& M, GreensStructure const& G,
                                         Budgets const& budgets) {
    std::vector<Descriptor> out;
    auto const&             units = G.units_members();
    std::uint32_t const     j     = G.units;
    if (units.size() == 1) {
      auto d = make(M, G, j, Kind::M1, "units", [](FiniteMonoid const& M2, GreensStructure const& G2) {
        return keep_in_j(M2, G2, G2.units, [](index_t) { return false; });
      });
      d.payload["group_order"] = 1;
      out.push_back(std::move(d));
      return out;
    }
    auto group = GroupTable::from_monoid(M, units);
    auto shape = recognise(group);
    for (auto const& sub : maximal_subgroups(group, budgets)) {
      std::vector<index_t> U;
      for (auto i = sub.find_first(); i != Subgroup::npos; i = sub.find_next(i)) {
        U.push_back(group.host()[i]);
      }
      auto d = make(M, G, j, Kind::M5, "units", [U](FiniteMonoid const& M2, GreensStructure const& G2) {
        ElementSet keep(M2.size());
        for (index_t u : U) {
          keep.set(u);
        }
        return keep_in_j(M2, G2, G2.units, [&](index_t x) { return keep.test(x); });
      });
      d.payload["group_order"]    = units.size();
      d.payload["subgroup_order"] = U.size();
      d.payload["group_shape"]    = shape.kind == GroupShape::Kind::cyclic     ? "cyclic"
                                    : shape.kind == GroupShape::Kind::dihedral ? "dihedral"
                                                                               : "other";
      d.payload["generators"] = element_list(M, small_generating_set(M, U));
      out.push_back(std::move(d));
    }
    return out;
  }

  StarIntersect regular_star_intersect(FiniteMonoid const& M, GreensStructure const& G,
                                       std::uint32_t j, Budgets const& budgets,
                                       std::optional<index_t> projection) {
    StarIntersect out;
    auto const&   J = G.j_classes.at(j);
    if (!M.has_star()) {
      out.reason = "no involution";
      return out;
    }
    if (!G.covered_by_units(j)) {
      out.reason = "J-class not covered by the units";
      return out;
    }
    auto orbits = unit_orbits(M, G, j);
    if (orbits.l_orbits.size() != 1 && orbits.r_orbits.size() != 1) {
      out.reason = "units act intransitively on both L- and R-classes";
      return out;
    }
    for (index_t x : J.elements) {
      if (G.idempotent[x] && M.star(x) != x) {
        out.reason = "idempotent " + M.element_string(x) + " is not a projection";
        return out;
      }
    }
    index_t e = 0;
    if (projection) {
      e = *projection;
      if (G.j_of[e] != j || !G.idempotent[e] || M.star(e) != e) {
        throw std::invalid_argument("not a projection of the J-class");
      }
    } else {
      auto it = std::find_if(J.elements.begin(), J.elements.end(),
                             [&](index_t x) { return G.idempotent[x]; });
      e = *it;
    }
    out.applies    = true;
    out.projection = e;
    auto const&          He = G.h_members[G.h_of[e]];
    std::vector<index_t> e_stab;
    for (index_t g : G.units_members()) {
      index_t eg = M.product(e, g);
      if (G.h_of[eg] == G.h_of[e]) {
        e_stab.push_back(eg);
      }
    }
    auto group = GroupTable::from_monoid(M, He);
    for (auto const& sub : maximal_subgroups(group, budgets)) {
      bool contains = true;
      for (index_t x : e_stab) {
        contains = contains && sub.test(*group.local(x));
      }
      if (!contains) {
        continue;
      }
      std::vector<index_t> U;
      for (auto i = sub.find_first(); i != Subgroup::npos; i = sub.find_next(i)) {
        U.push_back(group.host()[i]);
      }
      auto d = make(M, G, j, Kind::M5, "regular-star",
                    [U, j](FiniteMonoid const& M2, GreensStructure const& G2) {
                      return units_sandwich(M2, G2, j, U);
                    });
      d.payload["projection"]     = M.element_string(e);
      d.payload["subgroup_order"] = U.size();
      d.payload["h_class_order"]  = He.size();
      d.payload["generators"]     = element_list(M, small_generating_set(M, U));
      out.descriptors.push_back(std::move(d));
    }
    return out;
  }

  Classification classify_covered(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j,
                                  Budgets const& budgets) {
    Classification out;
    auto const&    J = G.j_classes.at(j);
    DeltaGraph     D = build_delta(M, G, j);
    std::size_t const nl = D.l_count(), nv = D.graph.size();

    auto orbit_reps = [&](std::vector<std::uint32_t> const& classes, bool is_l) {
      std::vector<index_t> reps;
      for (auto c : classes) {
        reps.push_back(is_l ? G.l_members[c].front() : G.r_members[c].front());
      }
      return element_list(M, reps);
    };

    for (auto const& s : maximal_independent_sets(D.graph)) {
      std::size_t l_in = 0;
      for (auto v : s) {
        l_in += D.is_l_vertex(v);
      }
      if ((l_in == nl && s.size() == nl) || (l_in == 0 && s.size() == nv - nl)) {
        continue;
      }
      std::set<std::uint32_t> ls, rs;
      nlohmann::json          lj = nlohmann::json::array(), rj = nlohmann::json::array();
      for (auto v : s) {
        if (D.is_l_vertex(v)) {
          ls.insert(D.l_vertices[v].begin(), D.l_vertices[v].end());
          lj.push_back(orbit_reps(D.l_vertices[v], true));
        } else {
          rs.insert(D.r_vertices[v - nl].begin(), D.r_vertices[v - nl].end());
          rj.push_back(orbit_reps(D.r_vertices[v - nl], false));
        }
      }
      auto d = make(M, G, j, Kind::M2, "delta", [ls, rs, j](FiniteMonoid const& M2, GreensStructure const& G2) {
        return keep_in_j(M2, G2, j, [&](index_t x) { return ls.count(G2.l_of[x]) || rs.count(G2.r_of[x]); });
      });
      d.payload["l_orbits"] = lj;
      d.payload["r_orbits"] = rj;
      out.descriptors.push_back(std::move(d));
    }

    auto removable = [&](std::size_t v) {
      std::size_t same_side = D.is_l_vertex(v) ? nl : nv - nl;
      if (same_side < 2) {
        return false;
      }
      auto const& nb = D.graph.neighbours(v);
      for (auto u = nb.find_first(); u != boost::dynamic_bitset<>::npos; u = nb.find_next(u)) {
        if (D.graph.degree(u) == 1) {
          return false;
        }
      }
      return true;
    };
    for (std::size_t v = 0; v < nv; ++v) {
      if (!removable(v)) {
        continue;
      }
      bool const is_l = D.is_l_vertex(v);
      auto const classes = is_l ? D.l_vertices[v] : D.r_vertices[v - nl];
      std::set<std::uint32_t> drop(classes.begin(), classes.end());
      auto d = make(M, G, j, is_l ? Kind::M3 : Kind::M4, "delta",
                    [drop, is_l, j](FiniteMonoid const& M2, GreensStructure const& G2) {
                      return keep_in_j(M2, G2, j, [&](index_t x) {
                        return !drop.count(is_l ? G2.l_of[x] : G2.r_of[x]);
                      });
                    });
      d.payload[is_l ? "removed_l_orbit" : "removed_r_orbit"] = orbit_reps(classes, is_l);
      out.descriptors.push_back(std::move(d));
    }
    // Sort M3 before M4 for stable output.
    std::stable_sort(out.descriptors.begin(), out.descriptors.end(),
                     [](Descriptor const& a, Descriptor const& b) { return a.kind < b.kind; });

    std::vector<index_t> idempotents;
    for (index_t x : J.elements) {
      if (G.idempotent[x]) {
        idempotents.push_back(x);
      }
    }
    Verifier     V(M, G, budgets);
    ElementSet   jset(M.size());
    for (index_t x : J.elements) {
      jset.set(x);
    }
    ElementSet units_set(M.size());
    for (index_t g : G.units_members()) {
      units_set.set(g);
    }
    std::string m5_reason;
    if (J.h_size == 1) {
      m5_reason = "H-trivial";
    } else if (V.generates(units_set, idempotents, jset)) {
      m5_reason = "generated by units and idempotents";
    } else {
      auto star = regular_star_intersect(M, G, j, budgets);
      if (star.applies) {
        m5_reason = "regular-star intersection";
        for (auto& d : star.descriptors) {
          out.descriptors.push_back(std::move(d));
        }
      } else if (budgets.m5_fallback == 0) {
        out.complete = false;
        out.note     = "type M5 undecided at " + rank_text(G, j) + " (" + star.reason
                   + ") and the fallback search is disabled";
      } else {
        auto const& T = V.table_for(G.up_set(j));
        M5Search    search{T, T.to_local(jset), std::vector<std::uint32_t>(T.size(), UINT32_MAX),
                         budgets.m5_fallback};
        for (index_t x : J.elements) {
          search.h_of[T.local(x)] = G.h_of[x];
        }
        Bits seed = T.to_local(~jset & G.up_set(j));
        std::vector<std::uint32_t> fresh;
        for (auto i = seed.find_first(); i != Bits::npos; i = seed.find_next(i)) {
          fresh.push_back(static_cast<std::uint32_t>(i));
        }
        for (index_t e : idempotents) {
          seed.set(T.local(e));
          fresh.push_back(T.local(e));
        }
        T.close(seed, fresh);
        if (!search.in_j.is_subset_of(seed)) {
          search.grow(seed);
        }
        if (search.exhausted) {
          out.complete = false;
          out.note     = "type M5 search at " + rank_text(G, j) + " exceeded the node budget";
        }
        std::sort(search.found.begin(), search.found.end());
        for (auto const& k : search.found) {
          ElementSet x = T.to_host(k) | ~G.up_set(j);
          auto       d = make(M, G, j, Kind::M5, "search", fixed(x));
          d.payload["kept_in_j"] = (x & jset).count();
          out.descriptors.push_back(std::move(d));
        }
        m5_reason = "search";
      }
    }
    if (out.descriptors.empty() && out.complete) {
      auto d = make(M, G, j, Kind::M1, "delta", [j](FiniteMonoid const& M2, GreensStructure const& G2) {
        return keep_in_j(M2, G2, j, [](index_t) { return false; });
      });
      out.descriptors.push_back(std::move(d));
    }
    if (out.note.empty()) {
      out.note = "M5: " + m5_reason;
    }
    return out;
  }

  PartRemovals part_removals(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j,
                    std::vector<ElementSet> const& parts, std::vector<Kind> const& kinds,
                    Budgets const& budgets) {
    PartRemovals out;
    if (parts.size() != kinds.size() || parts.empty()) {
      throw std::invalid_argument("part_removals: one kind per part");
    }
    ElementSet jset(M.size());
    for (index_t x : G.j_classes.at(j).elements) {
      jset.set(x);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].none() || !parts[i].is_subset_of(jset)) {
        out.reason = "part " + std::to_string(i) + " is empty or leaves the J-class";
        return out;
      }
      for (std::size_t k = 0; k < i; ++k) {
        if (parts[k] == parts[i]) {
          out.reason = "parts are not distinct";
          return out;
        }
      }
    }
    Verifier V(M, G, budgets);
    // Avoiding a part never generates: S \ X_i must be a (maximal) subsemigroup.
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto v = V.verify_maximal(~parts[i]);
      if (!v.ok()) {
        out.reason = "S minus part " + std::to_string(i) + " is " + to_string(v.status);
        if (v.product_witness) {
          out.counterexample = {v.product_witness->first, v.product_witness->second};
        } else if (v.excluded_witness) {
          out.counterexample = {*v.excluded_witness};
        }
        return out;
      }
    }
    // Meeting every part generates: every transversal if few, else a sample.
    std::vector<std::vector<index_t>> lists;
    std::size_t                       combos = 1;
    for (auto const& p : parts) {
      lists.push_back(members(p));
      combos = combos > budgets.transversal_samples ? combos : combos * lists.back().size();
    }
    ElementSet const rest = ~jset;
    std::mt19937     rng(1);
    std::size_t const trials = std::min(combos, budgets.transversal_samples);
    std::vector<std::size_t> digit(lists.size(), 0);
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<index_t> pick;
      for (std::size_t i = 0; i < lists.size(); ++i) {
        std::size_t k = combos <= budgets.transversal_samples ? digit[i] : rng() % lists[i].size();
        pick.push_back(lists[i][k]);
      }
      for (std::size_t i = 0; i < lists.size(); ++i) {
        if (++digit[i] < lists[i].size()) {
          break;
        }
        digit[i] = 0;
      }
      if (!V.generates(rest, pick, jset)) {
        out.reason         = "a transversal of the parts does not generate";
        out.counterexample = pick;
        return out;
      }
    }
    out.accepted = true;
    out.reason   = combos <= budgets.transversal_samples ? "all transversals checked"
                                                : std::to_string(trials) + " sampled transversals";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto d = make(M, G, j, kinds[i], "parts", fixed(~parts[i]));
      d.payload["part_size"] = parts[i].count();
      out.descriptors.push_back(std::move(d));
    }
    return out;
  }

  std::vector<std::uint32_t> contributing_j_classes(FiniteMonoid const& M, GreensStructure const& G,
                                                    Budgets const& budgets) {
    std::vector<std::uint32_t> out;
    Verifier                   V(M, G, budgets);
    for (std::uint32_t j = 0; j < G.j_classes.size(); ++j) {
      if (j == G.units || G.covered_by_units(j)) {
        out.push_back(j);
        continue;
      }
      if (!has_generator_in(M, G, j)) {
        continue;
      }
      ElementSet jset(M.size());
      for (index_t x : G.j_classes[j].elements) {
        jset.set(x);
      }
      if (!V.generates(~jset, {}, jset)) {
        out.push_back(j);
      }
    }
    return out;
  }

  Classification classify(FiniteMonoid const& M, GreensStructure const& G, Budgets const& budgets) {
    Classification out;
    out.descriptors = classify_units(M, G, budgets);
    std::vector<std::string> notes;
    for (std::uint32_t j : contributing_j_classes(M, G, budgets)) {
      if (j == G.units) {
        continue;
      }
      if (!G.covered_by_units(j) || !G.j_classes[j].regular) {
        out.complete = false;
        notes.push_back(rank_text(G, j) + " is not a regular J-class covered by the units; not examined");
        continue;
      }
      auto c = classify_covered(M, G, j, budgets);
      out.complete = out.complete && c.complete;
      notes.push_back(rank_text(G, j) + ": " + c.note);
      for (auto& d : c.descriptors) {
        out.descriptors.push_back(std::move(d));
      }
    }
    std::ostringstream s;
    for (std::size_t i = 0; i < notes.size(); ++i) {
      s << (i ? "; " : "") << notes[i];
    }
    out.note = s.str();
    return out;
  }

}  // namespace maxsemi
