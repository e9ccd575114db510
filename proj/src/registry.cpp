#include "maxsemi/registry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "maxsemi/classify.hpp"
#include "maxsemi/group.hpp"
#include "maxsemi/local_table.hpp"
#include "maxsemi/pp_bijection.hpp"

namespace maxsemi {

  std::vector<std::vector<int>> path_maximal_independent_sets(int k) {
    std::vector<std::vector<int>> out;
    if (k < 1) {
      return out;
    }
    std::vector<int> cur;
    auto             walk = [&](auto&& self, int i) -> void {
      cur.push_back(i);
      if (i >= k - 1) {
        out.push_back(cur);
      } else {
        for (int next : {i + 2, i + 3}) {
          if (next <= k) {
            self(self, next);
          }
        }
      }
      cur.pop_back();
    };
    for (int start : {1, 2}) {
      if (start <= k) {
        walk(walk, start);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<std::pair<bool, int>>> jones_maximal_independent_sets(int n) {
    std::vector<std::vector<std::pair<bool, int>>> out;
    if (n < 2) {
      return out;
    }
    std::vector<std::pair<bool, int>> cur;
    auto walk = [&](auto&& self, bool side, int i) -> void {
      cur.emplace_back(side, i);
      if (i == n - 1) {
        out.push_back(cur);
      } else {
        self(self, side, i + 1);
        if (i + 2 <= n - 1) {
          self(self, !side, i + 2);
        }
      }
      cur.pop_back();
    };
    walk(walk, true, 1);
    walk(walk, false, 1);
    return out;
  }

  namespace {
    using Pred = std::function<bool(FiniteMonoid const&, index_t)>;

    std::uint32_t j_at(GreensStructure const& G, std::size_t rank) {
      auto j = G.j_of_rank(rank);
      if (!j) {
        throw std::logic_error("no single J-class of rank " + std::to_string(rank));
      }
      return *j;
    }

    Descriptor make(FiniteMonoid const& M, std::size_t rank, Kind kind, std::string origin,
                    nlohmann::json payload, Materializer mat) {
      Descriptor d;
      d.host        = M.name();
      d.j_rank      = rank;
      d.kind        = kind;
      d.origin      = std::move(origin);
      d.payload     = std::move(payload);
      d.materialize = std::move(mat);
      return d;
    }

    /// (S \ J_rank) u {x in J_rank : keep(x)}.
    Materializer keep_at(std::size_t rank, Pred keep) {
      return [rank, keep](FiniteMonoid const& M, GreensStructure const& G) {
        return keep_in_j(M, G, j_at(G, rank), [&](index_t x) { return keep(M, x); });
      };
    }

    Materializer drop_at(std::size_t rank, Pred drop) {
      return keep_at(rank, [drop](FiniteMonoid const& M, index_t x) { return !drop(M, x); });
    }

    nlohmann::json one_based(std::vector<int> const& xs) {
      nlohmann::json out = nlohmann::json::array();
      for (int x : xs) {
        out.push_back(x + 1);
      }
      return out;
    }

    index_t must_find(FiniteMonoid const& M, PartialTransformation const& t) {
      auto i = M.find(t);
      if (!i) {
        throw std::logic_error("element missing: " + to_string(t));
      }
      return *i;
    }

    index_t must_find(FiniteMonoid const& M, Partition const& p) {
      auto i = M.find(p);
      if (!i) {
        throw std::logic_error("element missing: " + to_string(p));
      }
      return *i;
    }

    /// The group generated by `gens` (host indices) inside the units.
    std::vector<index_t> subgroup(FiniteMonoid const& M, std::vector<index_t> const& gens) {
      std::vector<index_t> out{M.identity()};
      ElementSet           seen(M.size());
      seen.set(M.identity());
      for (std::size_t k = 0; k < out.size(); ++k) {
        for (index_t g : gens) {
          index_t y = M.product(out[k], g);
          if (!seen.test(y)) {
            seen.set(y);
            out.push_back(y);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    Descriptor unit_descriptor(FiniteMonoid const& M, std::vector<index_t> const& gens,
                               nlohmann::json payload) {
      std::vector<index_t> U = subgroup(M, gens);
      nlohmann::json       g = nlohmann::json::array();
      for (index_t x : gens) {
        g.push_back(M.element_string(x));
      }
      payload["subgroup_generators"] = g;
      payload["subgroup_order"]      = U.size();
      return make(M, static_cast<std::size_t>(M.degree()), Kind::M5, "units", std::move(payload),
                  [U](FiniteMonoid const& M2, GreensStructure const& G2) {
                    ElementSet keep(M2.size());
                    for (index_t u : U) {
                      keep.set(u);
                    }
                    return keep_in_j(M2, G2, G2.units, [&](index_t x) { return keep.test(x); });
                  });
    }

    Descriptor remove_identity(FiniteMonoid const& M) {
      return make(M, static_cast<std::size_t>(M.degree()), Kind::M1, "units", nlohmann::json::object(),
                  [](FiniteMonoid const& M2, GreensStructure const&) {
                    ElementSet s = M2.full_set();
                    s.reset(M2.identity());
                    return s;
                  });
    }

    index_t power(FiniteMonoid const& M, index_t g, std::size_t k) {
      index_t x = M.identity();
      for (std::size_t i = 0; i < k; ++i) {
        x = M.product(x, g);
      }
      return x;
    }

    /// Maximal subgroups <g^p> of the cyclic group <g> of order m.
    std::vector<Descriptor> cyclic_units(FiniteMonoid const& M, index_t g, std::size_t m) {
      std::vector<Descriptor> out;
      if (m == 1) {
        out.push_back(remove_identity(M));
        return out;
      }
      for (std::size_t p : prime_divisors(m)) {
        out.push_back(unit_descriptor(M, {power(M, g, p)}, {{"prime", p}}));
      }
      return out;
    }

    /// Maximal subgroups of the dihedral group <c, s> with c of order m >= 3:
    /// <c> and <c^p, c^i s> for each prime p | m and 0 <= i < p.
    std::vector<Descriptor> dihedral_units(FiniteMonoid const& M, index_t c, index_t s, std::size_t m) {
      std::vector<Descriptor> out;
      out.push_back(unit_descriptor(M, {c}, {{"rotations", true}}));
      for (std::size_t p : prime_divisors(m)) {
        for (std::size_t i = 0; i < p; ++i) {
          out.push_back(unit_descriptor(M, {power(M, c, p), M.product(power(M, c, i), s)},
                                        {{"prime", p}, {"shift", i}}));
        }
      }
      return out;
    }

    /// Maximal subgroups of the full symmetric group of units, by search.
    std::vector<Descriptor> symmetric_units(FiniteMonoid const& M, GreensStructure const& G,
                                            Budgets const& budgets) {
      std::vector<Descriptor> out;
      auto const&             units = G.units_members();
      if (units.size() == 1) {
        out.push_back(remove_identity(M));
        return out;
      }
      auto group = GroupTable::from_monoid(M, units);
      for (auto const& sub : maximal_subgroups_by_search(group, budgets)) {
        std::vector<index_t> U;
        for (auto i = sub.find_first(); i != Subgroup::npos; i = sub.find_next(i)) {
          U.push_back(group.host()[i]);
        }
        out.push_back(unit_descriptor(M, small_generating_set(M, U), nlohmann::json::object()));
      }
      return out;
    }

    /// A group of units of order two: only the trivial subgroup.
    std::vector<Descriptor> order_two_units(FiniteMonoid const& M) {
      return {unit_descriptor(M, {}, nlohmann::json::object())};
    }

    std::vector<Descriptor> semilattice(FiniteMonoid const& M) {
      std::vector<Descriptor> out;
      for (index_t x = 0; x < M.size(); ++x) {
        out.push_back(make(M, M.rank(x), Kind::M1, "singleton", {{"removed", M.element_string(x)}},
                           [x](FiniteMonoid const& M2, GreensStructure const&) {
                             ElementSet s = M2.full_set();
                             s.reset(x);
                             return s;
                           }));
      }
      return out;
    }

    // Attributes of rank n - 1 partial transformations, 0-based; -1 if absent.
    int missing(std::uint32_t mask, int n) {
      if (std::popcount(mask) != n - 1) {
        return -1;
      }
      for (int i = 0; i < n; ++i) {
        if (!(mask >> i & 1U)) {
          return i;
        }
      }
      return -1;
    }

    int im_miss(FiniteMonoid const& M, index_t x) {
      return missing(M.transformation(x).im(), M.degree());
    }

    int dom_miss(FiniteMonoid const& M, index_t x) {
      return missing(M.transformation(x).dom(), M.degree());
    }

    /// Lower point of the non-trivial kernel class of a total map of rank n - 1.
    std::pair<int, int> kernel_pair(FiniteMonoid const& M, index_t x) {
      auto const& t = M.transformation(x);
      int const   n = M.degree();
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (t.defined(a) && t.defined(b) && t[a] == t[b]) {
            return {a, b};
          }
        }
      }
      return {-1, -1};
    }

    bool is_total(FiniteMonoid const& M, index_t x) {
      return std::popcount(M.transformation(x).dom()) == M.degree();
    }

    std::vector<std::vector<int>> proper_nonempty_subsets(int k) {
      std::vector<std::vector<int>> out;
      for (std::uint32_t mask = 1; mask + 1 < (1U << k); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i) {
          if (mask >> i & 1U) {
            s.push_back(i);
          }
        }
        out.push_back(s);
      }
      return out;
    }

    struct Builder {
      FiniteMonoid const&    M;
      GreensStructure const& G;
      Budgets const&         budgets;
      int                    n;
      RegistryResult         r;

      std::size_t top() const {
        return static_cast<std::size_t>(n - 1);
      }

      void add(Descriptor d) {
        r.descriptors.push_back(std::move(d));
      }

      void add(std::vector<Descriptor> ds) {
        for (auto& d : ds) {
          add(std::move(d));
        }
      }

      void drop_rank(std::size_t rank) {
        add(make(M, rank, Kind::M1, "rank", {{"removed_rank", rank}},
                 drop_at(rank, [](FiniteMonoid const&, index_t) { return true; })));
      }

      // Order-preserving families: L_i by missing image point, R_i by
      // missing domain point, R_{i,i+1} by kernel pair.
      void po_rectangles(int k, bool mirrored, bool kernels) {
        for (auto const& A : proper_nonempty_subsets(k)) {
          std::vector<bool> in(n, false);
          for (int a : A) {
            in[a] = true;
            if (mirrored) {
              in[n - 1 - a] = true;
            }
          }
          add(make(M, top(), Kind::M2, "rectangle", {{"A", one_based(A)}},
                   keep_at(top(), [in, kernels](FiniteMonoid const& M2, index_t x) {
                     int l = im_miss(M2, x);
                     if (l >= 0 && in[l]) {
                       return true;
                     }
                     int d = dom_miss(M2, x);
                     if (d >= 0) {
                       return !in[d];
                     }
                     if (!kernels) {
                       return false;
                     }
                     auto [a, b] = kernel_pair(M2, x);
                     return !in[a] && !in[b];
                   })));
        }
      }

      // Path-graph rectangles: odd vertex 2i - 1 is L_i (and its mirror),
      // even vertex 2i is R_{i,i+1} (and its mirror).
      void path_rectangles(int k, bool mirrored) {
        for (auto const& A : path_maximal_independent_sets(k)) {
          bool odd = false, even = false;
          for (int v : A) {
            (v % 2 ? odd : even) = true;
          }
          if (!odd || !even) {
            continue;
          }
          std::vector<bool> keep_l(n, false), keep_r(n, false);
          for (int v : A) {
            int i = v % 2 ? (v + 1) / 2 - 1 : v / 2 - 1;
            auto& side = v % 2 ? keep_l : keep_r;
            side[i] = true;
            if (mirrored) {
              side[v % 2 ? n - 1 - i : n - 2 - i] = true;
            }
          }
          nlohmann::json a = nlohmann::json::array();
          for (int v : A) {
            a.push_back(v);
          }
          add(make(M, top(), Kind::M2, "path", {{"vertices", a}},
                   keep_at(top(), [keep_l, keep_r](FiniteMonoid const& M2, index_t x) {
                     return keep_l[im_miss(M2, x)] || keep_r[kernel_pair(M2, x).first];
                   })));
        }
      }

      void drop_l(std::vector<int> const& points, std::string origin) {
        std::vector<bool> in(n, false);
        for (int p : points) {
          in[p] = true;
        }
        add(make(M, top(), Kind::M3, std::move(origin), {{"removed_l", one_based(points)}},
                 drop_at(top(), [in](FiniteMonoid const& M2, index_t x) {
                   int l = im_miss(M2, x);
                   return l >= 0 && in[l];
                 })));
      }

      /// Removes R_{i,i+1} for each lower point i given.
      void drop_kernel(std::vector<int> const& lows) {
        std::vector<bool> in(n, false);
        for (int p : lows) {
          in[p] = true;
        }
        add(make(M, top(), Kind::M4, "remove-r", {{"removed_kernel_lows", one_based(lows)}},
                 drop_at(top(), [in](FiniteMonoid const& M2, index_t x) {
                   if (!is_total(M2, x)) {
                     return false;
                   }
                   auto [a, b] = kernel_pair(M2, x);
                   return b == a + 1 && in[a];
                 })));
      }

      void drop_domain(std::vector<int> const& points) {
        std::vector<bool> in(n, false);
        for (int p : points) {
          in[p] = true;
        }
        add(make(M, top(), Kind::M4, "remove-r", {{"removed_domain_gaps", one_based(points)}},
                 drop_at(top(), [in](FiniteMonoid const& M2, index_t x) {
                   int d = dom_miss(M2, x);
                   return d >= 0 && in[d];
                 })));
      }

      /// Removes the rank n - 1 total maps, or the rank n - 1 partial perms.
      void drop_top(bool total, std::string what) {
        add(make(M, top(), Kind::M4, "remove-r", {{"removed", what}},
                 drop_at(top(), [total](FiniteMonoid const& M2, index_t x) {
                   return total ? is_total(M2, x) : M2.transformation(x).is_partial_perm();
                 })));
      }

      std::vector<Descriptor> dihedral() {
        auto c = must_find(M, cycle(n));
        auto s = must_find(M, gamma(n));
        return n >= 3 ? dihedral_units(M, c, s, n) : order_two_units(M);
      }

      /// <S \ J, extra> for each of the given extra sets.
      void generated_m5(std::vector<std::vector<index_t>> const& extras, std::vector<nlohmann::json> payloads) {
        for (std::size_t k = 0; k < extras.size(); ++k) {
          auto           gens = extras[k];
          nlohmann::json g    = nlohmann::json::array();
          for (index_t x : gens) {
            g.push_back(M.element_string(x));
          }
          payloads[k]["generators"] = g;
          std::size_t rank          = top();
          add(make(M, rank, Kind::M5, "generated", payloads[k],
                   [gens, rank](FiniteMonoid const& M2, GreensStructure const& G2) {
                     auto       j = j_at(G2, rank);
                     LocalTable T(M2, G2.up_set(j), Budgets::from_env());
                     LocalTable::Bits set(T.size());
                     std::vector<std::uint32_t> fresh;
                     for (index_t g : G2.units_members()) {
                       set.set(T.local(g));
                       fresh.push_back(T.local(g));
                     }
                     for (index_t g : gens) {
                       if (!set.test(T.local(g))) {
                         set.set(T.local(g));
                         fresh.push_back(T.local(g));
                       }
                     }
                     T.close(set, fresh);
                     ElementSet in_j(M2.size());
                     for (index_t x : G2.j_classes[j].elements) {
                       in_j.set(x);
                     }
                     return (T.to_host(set) & in_j) | ~in_j;
                   }));
        }
      }

      // Diagram attributes.
      Partition const& p(index_t x) const {
        return M.partition(x);
      }

      static bool trivial(std::vector<int> const& labels) {
        std::vector<int> seen;
        for (int l : labels) {
          if (std::count(seen.begin(), seen.end(), l)) {
            return false;
          }
          seen.push_back(l);
        }
        return true;
      }

      void parts(std::size_t rank, std::vector<std::pair<Pred, Kind>> const& parts,
              std::vector<nlohmann::json> payloads) {
        auto                    j = j_at(G, rank);
        std::vector<ElementSet> sets;
        std::vector<Kind>       kinds;
        for (auto const& [pred, kind] : parts) {
          ElementSet s(M.size());
          for (index_t x : G.j_classes[j].elements) {
            if (pred(M, x)) {
              s.set(x);
            }
          }
          sets.push_back(s);
          kinds.push_back(kind);
        }
        auto res = part_removals(M, G, j, sets, kinds, budgets);
        if (!res.accepted) {
          throw std::runtime_error("parts rejected for " + M.name() + ": " + res.reason);
        }
        for (std::size_t k = 0; k < parts.size(); ++k) {
          auto pred = parts[k].first;
          payloads[k]["check"] = res.reason;
          add(make(M, rank, kinds[k], "parts", payloads[k], drop_at(rank, pred)));
        }
      }
    };

    // Order-reversing/-preserving partial perms of degree n with the given
    // gaps (0-based).
    PartialTransformation gap_map(int n, int dom_gap, int im_gap, bool reversing) {
      std::vector<int> dom, im;
      for (int i = 0; i < n; ++i) {
        if (i != dom_gap) {
          dom.push_back(i);
        }
        if (i != im_gap) {
          im.push_back(i);
        }
      }
      if (reversing) {
        std::reverse(im.begin(), im.end());
      }
      std::vector<int> images(n, 0);
      for (std::size_t k = 0; k < dom.size(); ++k) {
        images[dom[k]] = im[k] + 1;
      }
      return PartialTransformation(images);
    }

    void transformation_family(Builder& b) {
      auto const& M = b.M;
      int const   n = b.n;
      auto&       r = b.r;
      Family const f = M.instance()->family;
      bool const semilattice_one =
          n == 1 && (f == Family::PT || f == Family::I || f == Family::PO || f == Family::POD || f == Family::POI
                     || f == Family::PODI || f == Family::POP || f == Family::POR || f == Family::POPI
                     || f == Family::PORI);
      if (semilattice_one) {
        r.applies = r.special_case = true;
        r.statement = "degree 1 is a semilattice of order 2: each singleton";
        b.add(semilattice(M));
        return;
      }
      switch (f) {
        case Family::PT:
        case Family::T:
        case Family::I:
          if (n < 2) {
            return;
          }
          r.statement = "units maximal subgroups plus the rank n-1 removals";
          b.add(symmetric_units(M, b.G, b.budgets));
          if (f == Family::PT) {
            b.drop_top(true, "rank n-1 transformations");
            b.drop_top(false, "rank n-1 partial permutations");
          } else {
            b.drop_rank(b.top());
          }
          break;
        case Family::PO:
          r.statement = "identity, rectangles over A, and single R-class removals";
          b.add(remove_identity(M));
          b.po_rectangles(n, false, true);
          for (int i = 0; i < n; ++i) {
            b.drop_domain({i});
          }
          for (int i = 0; i + 1 < n; ++i) {
            b.drop_kernel({i});
          }
          break;
        case Family::POD:
          r.statement = "reversal, mirrored rectangles, mirrored R-class pair removals";
          b.add(order_two_units(M));
          b.po_rectangles((n + 1) / 2, true, true);
          for (int i = 0; i < (n + 1) / 2; ++i) {
            b.drop_domain({i, n - 1 - i});
          }
          for (int i = 0; i < n / 2; ++i) {
            b.drop_kernel({i, n - 2 - i});
          }
          break;
        case Family::O:
          if (n < 2) {
            return;
          }
          r.statement = "identity, path rectangles, L-class removals, inner R-class removals";
          r.special_case = n == 2;
          b.add(remove_identity(M));
          b.path_rectangles(2 * n - 1, false);
          for (int i = 0; i < n; ++i) {
            b.drop_l({i}, "remove-l");
          }
          for (int i = 1; i + 2 < n; ++i) {
            b.drop_kernel({i});
          }
          break;
        case Family::OD:
          if (n < 2) {
            return;
          }
          if (n == 2) {
            // OD_2 = T_2.
            r.statement    = "equal to T_2";
            r.special_case = true;
            b.add(symmetric_units(M, b.G, b.budgets));
            b.drop_rank(b.top());
            break;
          }
          r.statement    = "reversal, mirrored path rectangles, parity-dependent removals";
          r.special_case = n == 3;
          b.add(order_two_units(M));
          b.path_rectangles(n, true);
          {
            int const l_hi = n % 2 ? (n + 1) / 2 : n / 2 - 1;
            int const r_hi = n % 2 ? (n - 3) / 2 : n / 2;
            for (int i = 1; i <= l_hi; ++i) {
              b.drop_l({i - 1, n - i}, "remove-l");
            }
            for (int i = 2; i <= r_hi; ++i) {
              b.drop_kernel({i - 1, n - 1 - i});
            }
          }
          break;
        case Family::POI:
          r.statement = "identity and rectangles over A";
          b.add(remove_identity(M));
          b.po_rectangles(n, false, false);
          break;
        case Family::PODI: {
          if (n == 2) {
            r.statement    = "equal to I_2";
            r.special_case = true;
            b.add(symmetric_units(M, b.G, b.budgets));
            b.drop_rank(b.top());
            break;
          }
          r.statement = "reversal, I_A sets for even n, mirrored rectangles";
          b.add(order_two_units(M));
          if (n % 2 == 0) {
            int const half = n / 2;
            for (std::uint32_t mask = 0; mask < (1U << (half - 1)); ++mask) {
              // A is a subset of {2, ..., n/2}, 1-based.
              std::vector<bool> in_a(n + 1, false);
              std::vector<int>  A;
              for (int k = 0; k < half - 1; ++k) {
                if (mask >> k & 1U) {
                  in_a[k + 2] = true;
                  A.push_back(k + 1);
                }
              }
              ElementSet keep(M.size());
              auto       alpha = [&](int i, int j) { return must_find(M, gap_map(n, i - 1, j - 1, false)); };
              auto       beta  = [&](int i, int j) { return must_find(M, gap_map(n, i - 1, j - 1, true)); };
              // i and j range over the lower half; the four images cover the rest.
              for (int i = 1; i <= half; ++i) {
                for (int j = 1; j <= half; ++j) {
                  if (in_a[i] == in_a[j]) {
                    keep.set(alpha(i, j));
                    keep.set(beta(i, n - j + 1));
                    keep.set(beta(n - i + 1, j));
                    keep.set(alpha(n - i + 1, n - j + 1));
                  } else {
                    keep.set(beta(i, j));
                    keep.set(alpha(i, n - j + 1));
                    keep.set(alpha(n - i + 1, j));
                    keep.set(beta(n - i + 1, n - j + 1));
                  }
                }
              }
              b.add(make(M, b.top(), Kind::M5, "I_A", {{"A", one_based(A)}, {"kept_in_j", keep.count()}},
                         keep_at(b.top(), [keep](FiniteMonoid const&, index_t x) { return keep.test(x); })));
            }
          }
          b.po_rectangles((n + 1) / 2, true, false);
          break;
        }
        case Family::POP:
          r.statement = "cyclic units, and removal of rank n-1 total maps or partial perms";
          b.add(cyclic_units(M, must_find(M, cycle(n)), n));
          b.drop_top(true, "rank n-1 orientation-preserving transformations");
          b.drop_top(false, "rank n-1 orientation-preserving partial permutations");
          break;
        case Family::POR:
          r.statement    = "dihedral units, and removal of rank n-1 total maps or partial perms";
          r.special_case = n == 2;
          b.add(b.dihedral());
          b.drop_top(true, "rank n-1 orientation-preserving or -reversing transformations");
          b.drop_top(false, "rank n-1 orientation-preserving or -reversing partial permutations");
          break;
        case Family::OP:
          if (n < 2) {
            return;
          }
          r.statement = "cyclic units and the rank n-1 class";
          b.add(cyclic_units(M, must_find(M, cycle(n)), n));
          b.drop_rank(b.top());
          break;
        case Family::OR:
          if (n < 2) {
            return;
          }
          r.statement = "dihedral units and the rank n-1 class";
          b.add(b.dihedral());
          b.drop_rank(b.top());
          break;
        case Family::POPI:
        case Family::PORI: {
          bool const dihedral = f == Family::PORI;
          if (n < (dihedral ? 4 : 3)) {
            // Equal to I_n.
            r.statement    = "equal to I_n";
            r.special_case = true;
            b.add(symmetric_units(M, b.G, b.budgets));
            b.drop_rank(b.top());
            break;
          }
          r.statement = dihedral ? "dihedral units and <S \\ J, zeta^p, tau> for p | n-1"
                                 : "cyclic units and <S \\ J, zeta^p> for p | n-1";
          b.add(dihedral ? b.dihedral() : cyclic_units(M, must_find(M, cycle(n)), n));
          index_t const                     z = must_find(M, zeta(n));
          std::vector<std::vector<index_t>> extras;
          std::vector<nlohmann::json>       payloads;
          for (std::size_t p : prime_divisors(n - 1)) {
            std::vector<index_t> gens{power(M, z, p)};
            if (dihedral) {
              gens.push_back(must_find(M, tau(n)));
            }
            extras.push_back(gens);
            payloads.push_back({{"prime", p}});
          }
          b.generated_m5(extras, payloads);
          break;
        }
        default:
          return;
      }
      r.applies = true;
    }

    void diagram_family(Builder& b) {
      auto const&  M = b.M;
      int const    n = b.n;
      auto&        r = b.r;
      Family const f = M.instance()->family;
      if (n == 1 && (f == Family::P || f == Family::PB || f == Family::M || f == Family::PP)) {
        r.applies = r.special_case = true;
        r.statement                = "degree 1 is a semilattice of order 2: each singleton";
        b.add(semilattice(M));
        return;
      }
      std::size_t const n1 = static_cast<std::size_t>(n - 1);
      switch (f) {
        case Family::P:
          r.statement = "symmetric units; rank n-1 removals by trivial kernel/full domain and duals";
          b.add(symmetric_units(M, b.G, b.budgets));
          b.add(make(M, n1, Kind::M4, "remove-r", {{"removed", "trivial kernel"}},
                     drop_at(n1, [](FiniteMonoid const& M2, index_t x) {
                       return Builder::trivial(M2.partition(x).ker());
                     })));
          b.add(make(M, n1, Kind::M4, "remove-r", {{"removed", "full domain"}},
                     drop_at(n1, [n](FiniteMonoid const& M2, index_t x) {
                       return std::popcount(M2.partition(x).dom()) == n;
                     })));
          b.add(make(M, n1, Kind::M3, "remove-l", {{"removed", "trivial cokernel"}},
                     drop_at(n1, [](FiniteMonoid const& M2, index_t x) {
                       return Builder::trivial(M2.partition(x).coker());
                     })));
          b.add(make(M, n1, Kind::M3, "remove-l", {{"removed", "full codomain"}},
                     drop_at(n1, [n](FiniteMonoid const& M2, index_t x) {
                       return std::popcount(M2.partition(x).codom()) == n;
                     })));
          break;
        case Family::PB: {
          r.statement = "symmetric units, rank n-1 class, rank n-2 kernel and cokernel parts";
          b.add(symmetric_units(M, b.G, b.budgets));
          b.drop_rank(n1);
          std::size_t const n2 = n1 - 1;
          Pred ker = [](FiniteMonoid const& M2, index_t x) { return !Builder::trivial(M2.partition(x).ker()); };
          Pred coker = [](FiniteMonoid const& M2, index_t x) {
            return !Builder::trivial(M2.partition(x).coker());
          };
          b.parts(n2, {{ker, Kind::M4}, {coker, Kind::M3}},
               {{{"removed", "non-trivial kernel"}}, {{"removed", "non-trivial cokernel"}}});
          break;
        }
        case Family::B:
          if (n < 2) {
            return;
          }
          r.statement = "symmetric units and the rank n-2 class";
          b.add(symmetric_units(M, b.G, b.budgets));
          b.drop_rank(static_cast<std::size_t>(n - 2));
          break;
        case Family::F:
        case Family::Istar:
          if (n < 2) {
            return;
          }
          b.add(symmetric_units(M, b.G, b.budgets));
          if (f == Family::Istar && n >= 3) {
            r.statement = "symmetric units and removal of non-uniform rank n-1 elements";
            b.add(make(M, n1, Kind::M5, "remove-non-uniform", {{"removed", "non-uniform"}},
                       drop_at(n1, [](FiniteMonoid const& M2, index_t x) {
                         return !family_membership(M2.partition(x), Family::F);
                       })));
          } else {
            r.statement    = "symmetric units and the rank n-1 class";
            r.special_case = f == Family::Istar;
            b.drop_rank(n1);
          }
          break;
        case Family::J: {
          if (n < 2) {
            return;
          }
          if (n == 2) {
            r.applies = r.special_case = true;
            r.statement                = "degree 2 is a semilattice of order 2: each singleton";
            b.add(semilattice(M));
            return;
          }
          r.statement = "identity, Delta rectangles, L- and R-class removals at rank n-2";
          std::size_t const n2 = static_cast<std::size_t>(n - 2);
          // R_i: {i, i+1} is a block; L_i: {i', (i+1)'} is a block (0-based i).
          auto r_index = [](Partition const& x) {
            for (int i = 0; i + 1 < static_cast<int>(x.degree()); ++i) {
              if (x.block_of(i) == x.block_of(i + 1)) {
                return i;
              }
            }
            return -1;
          };
          auto l_index = [r_index](Partition const& x) { return r_index(x.star()); };
          b.add(remove_identity(M));
          for (auto const& K : jones_maximal_independent_sets(n)) {
            bool has_l = false, has_r = false;
            std::vector<bool> keep_l(n, false), keep_r(n, false);
            nlohmann::json    v = nlohmann::json::array();
            for (auto [side, i] : K) {
              (side ? has_l : has_r) = true;
              (side ? keep_l : keep_r)[i - 1] = true;
              v.push_back(std::string(side ? "L" : "R") + std::to_string(i));
            }
            if (!has_l || !has_r) {
              continue;
            }
            b.add(make(M, n2, Kind::M2, "delta", {{"vertices", v}},
                       keep_at(n2, [=](FiniteMonoid const& M2, index_t x) {
                         auto const& px = M2.partition(x);
                         return keep_l[l_index(px)] || keep_r[r_index(px)];
                       })));
          }
          for (int i = 0; i + 1 < n; ++i) {
            b.add(make(M, n2, Kind::M3, "remove-l", {{"removed_l", i + 1}},
                       drop_at(n2, [=](FiniteMonoid const& M2, index_t x) {
                         return l_index(M2.partition(x)) == i;
                       })));
          }
          for (int i = 0; i + 1 < n; ++i) {
            b.add(make(M, n2, Kind::M4, "remove-r", {{"removed_r", i + 1}},
                       drop_at(n2, [=](FiniteMonoid const& M2, index_t x) {
                         return r_index(M2.partition(x)) == i;
                       })));
          }
          break;
        }
        case Family::AJ:
          if (n < 2) {
            return;
          }
          r.statement = "cyclic units <rho^d> and the rank n-2 class";
          b.add(cyclic_units(M, must_find(M, rho(n)), n));
          b.drop_rank(static_cast<std::size_t>(n - 2));
          break;
        case Family::M: {
          r.statement = "identity, rectangles over A at rank n-1, parts X_i and X_i* at rank n-2";
          b.add(remove_identity(M));
          // Rank n-1: singleton blocks {i} and {j'}.
          for (auto const& A : proper_nonempty_subsets(n)) {
            std::vector<bool> in(n, false);
            for (int a : A) {
              in[a] = true;
            }
            b.add(make(M, n1, Kind::M2, "rectangle", {{"A", one_based(A)}},
                       keep_at(n1, [in](FiniteMonoid const& M2, index_t x) {
                         auto const& px = M2.partition(x);
                         int const   k  = static_cast<int>(px.degree());
                         int         i = missing(px.dom(), k), j = missing(px.codom(), k);
                         return in[i] || !in[j];
                       })));
          }
          std::size_t const                   n2 = n1 - 1;
          std::vector<std::pair<Pred, Kind>>  parts;
          std::vector<nlohmann::json>         payloads;
          for (int i = 0; i + 1 < n; ++i) {
            parts.emplace_back(
                [i](FiniteMonoid const& M2, index_t x) {
                  auto const& px = M2.partition(x);
                  return px.block_of(i) == px.block_of(i + 1);
                },
                Kind::M4);
            payloads.push_back({{"removed_block", {i + 1, i + 2}}});
          }
          for (int i = 0; i + 1 < n; ++i) {
            parts.emplace_back(
                [i](FiniteMonoid const& M2, index_t x) {
                  auto const  px = M2.partition(x).star();
                  return px.block_of(i) == px.block_of(i + 1);
                },
                Kind::M3);
            payloads.push_back({{"removed_block", {std::to_string(i + 1) + "'", std::to_string(i + 2) + "'"}}});
          }
          b.parts(n2, parts, payloads);
          break;
        }
        case Family::PP: {
          r.statement = "transported from the Jones monoid of degree 2n";
          auto            jones = FiniteMonoid::enumerate(Family::J, 2 * n, b.budgets);
          auto            GJ    = greens(jones);
          PlanarJonesMap  map(M, jones);
          auto            inner = theorem_registry(jones, GJ, b.budgets);
          if (!inner.applies) {
            return;
          }
          r.special_case = inner.special_case;
          for (auto& d : inner.descriptors) {
            ElementSet     set = map.to_planar(d.materialize(jones, GJ));
            std::size_t    rank = 0;
            ElementSet     gone = ~set;
            if (gone.any()) {
              rank = M.rank(gone.find_first());
            }
            nlohmann::json payload = d.payload;
            payload["jones_kind"]  = kind_name(d.kind);
            b.add(make(M, rank, d.kind, "jones:" + d.origin, payload,
                       [set](FiniteMonoid const&, GreensStructure const&) { return set; }));
          }
          break;
        }
        default:
          return;
      }
      r.applies = true;
    }
  }  // namespace

  RegistryResult theorem_registry(FiniteMonoid const& M, GreensStructure const& G, Budgets const& budgets) {
    if (!M.instance()) {
      throw std::invalid_argument("theorem_registry needs an enumerated family instance");
    }
    Builder b{M, G, budgets, M.degree(), {}};
    if (is_transformation_family(M.instance()->family)) {
      transformation_family(b);
    } else {
      diagram_family(b);
    }
    if (!b.r.applies) {
      b.r.descriptors.clear();
      b.r.statement = "no statement for " + M.name();
    }
    return b.r;
  }

}  // namespace maxsemi
