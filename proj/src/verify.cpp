#include "maxsemi/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxsemi {

  namespace {
    using Bits = LocalTable::Bits;

    ElementSet region_above(GreensStructure const& G, ElementSet const& s) {
      std::vector<bool> seen(G.j_classes.size(), false);
      ElementSet        region(s.size());
      for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
        auto j = G.j_of[i];
        if (!seen[j]) {
          seen[j] = true;
          region |= G.up_set(j);
        }
      }
      return region;
    }

    void sort_sets(std::vector<ElementSet>& v) {
      std::sort(v.begin(), v.end());
    }
  }  // namespace

  bool is_subsemigroup(FiniteMonoid const& M, ElementSet const& X) {
    auto xs = members(X);
    for (index_t a : xs) {
      for (index_t b : xs) {
        if (!X.test(M.product(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  std::string to_string(Verdict::Status s) {
    switch (s) {
      case Verdict::Status::maximal:
        return "maximal";
      case Verdict::Status::not_proper:
        return "not_proper";
      case Verdict::Status::not_closed:
        return "not_closed";
      case Verdict::Status::not_maximal:
        return "not_maximal";
    }
    return "?";
  }

  Verifier::Verifier(FiniteMonoid const& M, GreensStructure const& G, Budgets const& budgets)
      : M_(M), G_(G), budgets_(budgets) {}

  LocalTable const& Verifier::table_for(ElementSet const& region) {
    auto key = members(region);
    auto it  = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(std::move(key), std::make_unique<LocalTable>(M_, region, budgets_)).first;
    }
    return *it->second;
  }

  Verdict Verifier::verify_maximal(ElementSet const& X) {
    Verdict    v;
    ElementSet C = ~X;
    if (C.none()) {
      v.status = Verdict::Status::not_proper;
      return v;
    }
    auto const& T  = table_for(region_above(G_, C));
    Bits        Xl = T.to_local(X);
    Bits        Cl = T.to_local(C);
    std::vector<std::uint32_t> xs;
    for (auto a = Xl.find_first(); a != Bits::npos; a = Xl.find_next(a)) {
      xs.push_back(static_cast<std::uint32_t>(a));
    }
    for (auto a : xs) {
      for (auto b : xs) {
        auto p = T.product(a, b);
        if (p != LocalTable::outside && Cl.test(p)) {
          v.status          = Verdict::Status::not_closed;
          v.product_witness = std::make_pair(T.host(a), T.host(b));
          return v;
        }
      }
    }
    std::size_t const total = Cl.count();
    Bits              done(T.size());
    for (auto x = Cl.find_first(); x != Bits::npos; x = Cl.find_next(x)) {
      Bits        set     = Xl;
      std::size_t covered = 1;
      set.set(x);
      bool const stopped = covered == total
                           || T.close(set, {static_cast<std::uint32_t>(x)}, [&](std::uint32_t p) {
                                if (done.test(p)) {
                                  return true;
                                }
                                return ++covered == total;
                              });
      if (!stopped) {
        v.status           = Verdict::Status::not_maximal;
        v.excluded_witness = T.host(static_cast<std::uint32_t>(x));
        return v;
      }
      done.set(x);
    }
    return v;
  }

  bool Verifier::generates(ElementSet const& X, std::vector<index_t> const& extra,
                           ElementSet const& target) {
    auto const&                T   = table_for(region_above(G_, target));
    Bits                       set = T.to_local(X);
    std::vector<std::uint32_t> fresh;
    for (auto a = set.find_first(); a != Bits::npos; a = set.find_next(a)) {
      fresh.push_back(static_cast<std::uint32_t>(a));
    }
    for (index_t e : extra) {
      auto l = T.local(e);
      if (l != LocalTable::outside && !set.test(l)) {
        set.set(l);
        fresh.push_back(l);
      }
    }
    Bits const  want = T.to_local(target);
    std::size_t missing = (want - set).count();
    if (missing == 0) {
      return true;
    }
    return T.close(set, std::move(fresh), [&](std::uint32_t p) {
      return want.test(p) && --missing == 0;
    });
  }

  Verdict verify_maximal(FiniteMonoid const& M, GreensStructure const& G, ElementSet const& X) {
    return Verifier(M, G).verify_maximal(X);
  }

  std::vector<ElementSet> exhaustive_maximal(FiniteMonoid const& M, Budgets const& budgets) {
    std::size_t const N = M.size();
    if (N > budgets.oracle || N > 24) {
      throw CapacityError("oracle", std::min<std::size_t>(budgets.oracle, 24));
    }
    std::uint32_t const full = (1u << N) - 1;
    // prod[mask]: every product of two (not necessarily distinct) members.
    std::vector<std::uint32_t> prod(std::size_t(1) << N, 0);
    std::vector<bool>          closed(std::size_t(1) << N, false);
    closed[0] = true;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::uint32_t const t    = static_cast<std::uint32_t>(__builtin_ctz(mask));
      std::uint32_t const rest = mask & (mask - 1);
      std::uint32_t       p    = prod[rest] | (1u << M.product(t, t));
      for (std::uint32_t r = rest; r != 0; r &= r - 1) {
        std::uint32_t s = static_cast<std::uint32_t>(__builtin_ctz(r));
        p |= (1u << M.product(t, s)) | (1u << M.product(s, t));
      }
      prod[mask]   = p;
      closed[mask] = (p & ~mask) == 0;
      if (mask == full) {
        break;
      }
    }
    // above[mask]: some proper closed set contains mask.
    std::vector<bool> above(std::size_t(1) << N, false);
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      above[mask] = closed[mask];
    }
    for (std::size_t i = 0; i < N; ++i) {
      for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!(mask >> i & 1) && (mask | (1u << i)) != full && above[mask | (1u << i)]) {
          above[mask] = true;
        }
      }
    }
    std::vector<ElementSet> out;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (!closed[mask]) {
        continue;
      }
      bool maximal = true;
      for (std::size_t i = 0; i < N && maximal; ++i) {
        std::uint32_t up = mask | (1u << i);
        if (up != mask && up != full && above[up]) {
          maximal = false;
        }
      }
      if (maximal) {
        ElementSet s(N);
        for (std::size_t i = 0; i < N; ++i) {
          if (mask >> i & 1) {
            s.set(i);
          }
        }
        out.push_back(std::move(s));
      }
    }
    sort_sets(out);
    return out;
  }

  std::vector<ElementSet> jclass_restricted_maximal(FiniteMonoid const& M, GreensStructure const& G,
                                                    Budgets const& budgets) {
    std::size_t const cap = std::min<std::size_t>(budgets.jclass, 24);
    for (auto const& J : G.j_classes) {
      if (J.elements.size() > cap) {
        throw CapacityError("jclass", cap);
      }
    }
    std::vector<ElementSet> out;
    for (std::uint32_t j = 0; j < G.j_classes.size(); ++j) {
      auto const&       Jel = G.j_classes[j].elements;
      std::size_t const k   = Jel.size();
      std::vector<int>  pos(M.size(), -1);
      for (std::size_t i = 0; i < k; ++i) {
        pos[Jel[i]] = static_cast<int>(i);
      }
      auto bit = [&](index_t x) -> std::uint32_t { return pos[x] < 0 ? 0u : 1u << pos[x]; };
      ElementSet          up = G.up_set(j);
      std::vector<index_t> rest;
      for (auto x = up.find_first(); x != ElementSet::npos; x = up.find_next(x)) {
        if (pos[x] < 0) {
          rest.push_back(static_cast<index_t>(x));
        }
      }
      std::uint32_t base = 0;
      for (index_t a : rest) {
        for (index_t b : rest) {
          base |= bit(M.product(a, b));
        }
      }
      std::vector<std::uint32_t> with_rest(k, 0);
      std::vector<std::uint32_t> pair(k * k, 0);
      for (std::size_t t = 0; t < k; ++t) {
        for (index_t u : rest) {
          with_rest[t] |= bit(M.product(Jel[t], u)) | bit(M.product(u, Jel[t]));
        }
        for (std::size_t s = 0; s < k; ++s) {
          pair[t * k + s] = bit(M.product(Jel[t], Jel[s])) | bit(M.product(Jel[s], Jel[t]));
        }
      }
      std::uint32_t const        full = (1u << k) - 1;
      std::vector<std::uint32_t> prod(std::size_t(1) << k);
      std::vector<bool>          closed(std::size_t(1) << k);
      prod[0]   = base;
      closed[0] = base == 0;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t const t    = static_cast<std::uint32_t>(__builtin_ctz(mask));
        std::uint32_t const prev = mask & (mask - 1);
        std::uint32_t       p    = prod[prev] | with_rest[t] | pair[t * k + t];
        for (std::uint32_t r = prev; r != 0; r &= r - 1) {
          p |= pair[t * k + static_cast<std::uint32_t>(__builtin_ctz(r))];
        }
        prod[mask]   = p;
        closed[mask] = (p & ~mask) == 0;
      }
      std::vector<bool> above(std::size_t(1) << k, false);
      for (std::uint32_t mask = 0; mask < full; ++mask) {
        above[mask] = closed[mask];
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::uint32_t mask = 0; mask < full; ++mask) {
          std::uint32_t up2 = mask | (1u << i);
          if (up2 != mask && up2 != full && above[up2]) {
            above[mask] = true;
          }
        }
      }
      ElementSet outside_j = ~ElementSet(M.size());
      for (index_t x : Jel) {
        outside_j.reset(x);
      }
      for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!closed[mask]) {
          continue;
        }
        bool maximal = true;
        for (std::size_t i = 0; i < k && maximal; ++i) {
          std::uint32_t up2 = mask | (1u << i);
          if (up2 != mask && up2 != full && above[up2]) {
            maximal = false;
          }
        }
        if (maximal) {
          ElementSet s = outside_j;
          for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) {
              s.set(Jel[i]);
            }
          }
          out.push_back(std::move(s));
        }
      }
    }
    sort_sets(out);
    return out;
  }

  bool complement_in_one_j_class(GreensStructure const& G, ElementSet const& X) {
    ElementSet  C = ~X;
    std::optional<std::uint32_t> j;
    for (auto i = C.find_first(); i != ElementSet::npos; i = C.find_next(i)) {
      if (j && *j != G.j_of[i]) {
        return false;
      }
      j = G.j_of[i];
    }
    return true;
  }

  OracleReport compare_sets(std::string host, std::string oracle, std::vector<ElementSet> oracle_sets,
                            std::vector<ElementSet> engine_sets) {
    OracleReport r;
    r.host   = std::move(host);
    r.oracle = std::move(oracle);
    sort_sets(oracle_sets);
    sort_sets(engine_sets);
    std::set_difference(oracle_sets.begin(), oracle_sets.end(), engine_sets.begin(),
                        engine_sets.end(), std::back_inserter(r.only_oracle));
    std::set_difference(engine_sets.begin(), engine_sets.end(), oracle_sets.begin(),
                        oracle_sets.end(), std::back_inserter(r.only_engine));
    r.oracle_sets = std::move(oracle_sets);
    r.engine_sets = std::move(engine_sets);
    r.agreement   = r.only_oracle.empty() && r.only_engine.empty()
                  && std::adjacent_find(r.engine_sets.begin(), r.engine_sets.end())
                         == r.engine_sets.end();
    return r;
  }

}  // namespace maxsemi
