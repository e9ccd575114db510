#include "maxsemi/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace maxsemi {

  namespace {
    std::vector<std::size_t> members_of(Subgroup const& s) {
      std::vector<std::size_t> out;
      for (auto i = s.find_first(); i != Subgroup::npos; i = s.find_next(i)) {
        out.push_back(i);
      }
      return out;
    }

    void sort_subgroups(std::vector<Subgroup>& v) {
      std::sort(v.begin(), v.end(), [](Subgroup const& a, Subgroup const& b) {
        return members_of(a) < members_of(b);
      });
    }

    void check_budget(GroupTable const& G, Budgets const& budgets) {
      if (G.order() > budgets.subgroup) {
        throw CapacityError("subgroup", budgets.subgroup);
      }
    }

    std::vector<Subgroup> inclusion_maximal_proper(std::vector<Subgroup> const& all,
                                                   std::size_t                  order) {
      std::vector<Subgroup> proper;
      for (auto const& h : all) {
        if (h.count() != order) {
          proper.push_back(h);
        }
      }
      std::vector<Subgroup> out;
      for (auto const& h : proper) {
        bool maximal = true;
        for (auto const& k : proper) {
          if (k != h && h.is_subset_of(k)) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          out.push_back(h);
        }
      }
      sort_subgroups(out);
      return out;
    }
  }  // namespace

  GroupTable GroupTable::from_table(std::vector<std::size_t> table, std::size_t order) {
    GroupTable G;
    G.order_ = order;
    G.table_ = std::move(table);
    G.identity_ = order;
    for (std::size_t e = 0; e < order && G.identity_ == order; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < order && ok; ++x) {
        ok = G.mul(e, x) == x && G.mul(x, e) == x;
      }
      if (ok) {
        G.identity_ = e;
      }
    }
    if (G.identity_ == order) {
      throw std::invalid_argument("no identity");
    }
    G.inverse_.assign(order, order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        if (G.mul(a, b) == G.identity_) {
          G.inverse_[a] = b;
          break;
        }
      }
      if (G.inverse_[a] == order || G.mul(G.inverse_[a], a) != G.identity_) {
        throw std::invalid_argument("element without inverse");
      }
    }
    return G;
  }

  GroupTable GroupTable::cyclic(std::size_t m) {
    if (m == 0) {
      throw std::invalid_argument("cyclic group of order 0");
    }
    std::vector<std::size_t> t(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        t[a * m + b] = (a + b) % m;
      }
    }
    return from_table(std::move(t), m);
  }

  GroupTable GroupTable::dihedral(std::size_t m) {
    if (m == 0) {
      throw std::invalid_argument("dihedral group of order 0");
    }
    std::size_t const        N = 2 * m;
    std::vector<std::size_t> t(N * N);
    // r^a s^x . r^b s^y = r^(a + (-1)^x b) s^(x+y)
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = 0; q < N; ++q) {
        std::size_t a = p % m, x = p / m, b = q % m, y = q / m;
        std::size_t k = x == 0 ? (a + b) % m : (a + m - b) % m;
        t[p * N + q] = ((x + y) % 2) * m + k;
      }
    }
    return from_table(std::move(t), N);
  }

  GroupTable GroupTable::symmetric(int n) {
    if (n < 1) {
      throw std::invalid_argument("symmetric group of degree < 1");
    }
    std::vector<std::vector<int>> perms;
    std::vector<int>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      index[perms[i]] = i;
    }
    std::size_t const        N = perms.size();
    std::vector<std::size_t> t(N * N);
    std::vector<int>         c(n);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        for (int i = 0; i < n; ++i) {
          c[i] = perms[b][perms[a][i]];
        }
        t[a * N + b] = index.at(c);
      }
    }
    return from_table(std::move(t), N);
  }

  GroupTable GroupTable::from_monoid(FiniteMonoid const& M, std::vector<index_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::size_t const                    N = elements.size();
    std::unordered_map<index_t, std::size_t> pos;
    for (std::size_t i = 0; i < N; ++i) {
      pos[elements[i]] = i;
    }
    std::vector<std::size_t> t(N * N);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        auto it = pos.find(M.product(elements[a], elements[b]));
        if (it == pos.end()) {
          throw std::invalid_argument("elements are not closed under the product");
        }
        t[a * N + b] = it->second;
      }
    }
    GroupTable G = from_table(std::move(t), N);
    G.host_      = std::move(elements);
    return G;
  }

  std::size_t GroupTable::element_order(std::size_t a) const {
    std::size_t k = 1, x = a;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  std::optional<std::size_t> GroupTable::local(index_t host_index) const {
    auto it = std::lower_bound(host_.begin(), host_.end(), host_index);
    if (it == host_.end() || *it != host_index) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - host_.begin());
  }

  Subgroup GroupTable::generate(std::vector<std::size_t> const& gens) const {
    Subgroup                 s(order_);
    std::vector<std::size_t> queue{identity_};
    s.set(identity_);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t g : gens) {
        std::size_t y = mul(queue[i], g);
        if (!s.test(y)) {
          s.set(y);
          queue.push_back(y);
        }
      }
    }
    return s;
  }

  Subgroup GroupTable::whole() const {
    Subgroup s(order_);
    s.set();
    return s;
  }

  GroupShape recognise(GroupTable const& G) {
    GroupShape shape;
    std::size_t const N = G.order();
    if (N == 1) {
      shape.kind = GroupShape::Kind::trivial;
      return shape;
    }
    std::vector<std::size_t> orders(N);
    for (std::size_t a = 0; a < N; ++a) {
      orders[a] = G.element_order(a);
    }
    for (std::size_t a = 0; a < N; ++a) {
      if (orders[a] == N) {
        shape.kind     = GroupShape::Kind::cyclic;
        shape.rotation = a;
        return shape;
      }
    }
    if (N % 2 != 0 || N / 2 < 3) {
      return shape;
    }
    std::size_t const m = N / 2;
    for (std::size_t r = 0; r < N; ++r) {
      if (orders[r] != m) {
        continue;
      }
      Subgroup rot = G.generate({r});
      for (std::size_t s = 0; s < N; ++s) {
        if (rot.test(s) || orders[s] != 2) {
          continue;
        }
        if (G.mul(G.mul(s, r), s) == G.inverse(r)) {
          shape.kind       = GroupShape::Kind::dihedral;
          shape.rotation   = r;
          shape.reflection = s;
          return shape;
        }
      }
      // Any other rotation of order m generates the same <r>.
      break;
    }
    return shape;
  }

  std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        out.push_back(p);
        while (n % p == 0) {
          n /= p;
        }
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  std::vector<Subgroup> all_subgroups(GroupTable const& G, Budgets const& budgets) {
    check_budget(G, budgets);
    struct Entry {
      Subgroup                 set;
      std::vector<std::size_t> gens;
    };
    std::vector<Entry> cyclic;
    std::set<Subgroup> seen;
    for (std::size_t a = 0; a < G.order(); ++a) {
      Subgroup c = G.generate({a});
      if (seen.insert(c).second) {
        cyclic.push_back({c, {a}});
      }
    }
    std::vector<Entry> all = cyclic;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (auto const& c : cyclic) {
        if (c.set.is_subset_of(all[i].set)) {
          continue;
        }
        auto gens = all[i].gens;
        gens.push_back(c.gens.front());
        Subgroup k = G.generate(gens);
        if (seen.insert(k).second) {
          all.push_back({k, std::move(gens)});
        }
      }
    }
    std::vector<Subgroup> out;
    for (auto& e : all) {
      out.push_back(std::move(e.set));
    }
    sort_subgroups(out);
    return out;
  }

  std::vector<Subgroup> maximal_subgroups_by_search(GroupTable const& G, Budgets const& budgets) {
    return inclusion_maximal_proper(all_subgroups(G, budgets), G.order());
  }

  std::vector<Subgroup> maximal_subgroups_by_growth(GroupTable const& G, Budgets const& budgets) {
    check_budget(G, budgets);
    struct Entry {
      Subgroup                 set;
      std::vector<std::size_t> gens;
    };
    std::set<Subgroup>    seen;
    std::vector<Entry>    stack{{G.generate({}), {}}};
    std::vector<Subgroup> out;
    seen.insert(stack.front().set);
    Subgroup const all = G.whole();
    while (!stack.empty()) {
      Entry h = std::move(stack.back());
      stack.pop_back();
      if (h.set == all) {
        continue;
      }
      bool     maximal = true;
      Subgroup done    = h.set;
      for (std::size_t g = 0; g < G.order(); ++g) {
        if (done.test(g)) {
          continue;
        }
        // <H, g> depends only on the coset Hg.
        for (auto x = h.set.find_first(); x != Subgroup::npos; x = h.set.find_next(x)) {
          done.set(G.mul(x, g));
        }
        auto gens = h.gens;
        gens.push_back(g);
        Subgroup k = G.generate(gens);
        if (k != all) {
          maximal = false;
        }
        if (seen.insert(k).second) {
          stack.push_back({std::move(k), std::move(gens)});
        }
      }
      if (maximal) {
        out.push_back(h.set);
      }
    }
    sort_subgroups(out);
    return out;
  }

  std::optional<std::vector<Subgroup>> closed_form_maximal_subgroups(GroupTable const& G) {
    auto                  shape = recognise(G);
    std::vector<Subgroup> out;
    auto                  power = [&G](std::size_t a, std::size_t k) {
      std::size_t x = G.identity();
      for (std::size_t i = 0; i < k; ++i) {
        x = G.mul(x, a);
      }
      return x;
    };
    switch (shape.kind) {
      case GroupShape::Kind::trivial:
        return out;
      case GroupShape::Kind::cyclic:
        for (std::size_t p : prime_divisors(G.order())) {
          out.push_back(G.generate({power(shape.rotation, p)}));
        }
        break;
      case GroupShape::Kind::dihedral: {
        std::size_t const m = G.order() / 2;
        out.push_back(G.generate({shape.rotation}));
        for (std::size_t p : prime_divisors(m)) {
          for (std::size_t i = 0; i < p; ++i) {
            out.push_back(G.generate(
                {power(shape.rotation, p), G.mul(power(shape.rotation, i), shape.reflection)}));
          }
        }
        break;
      }
      case GroupShape::Kind::other:
        return std::nullopt;
    }
    sort_subgroups(out);
    return out;
  }

  std::vector<Subgroup> maximal_subgroups(GroupTable const& G, Budgets const& budgets) {
    if (auto closed = closed_form_maximal_subgroups(G)) {
      return *closed;
    }
    return maximal_subgroups_by_search(G, budgets);
  }

  std::optional<std::size_t> symmetric_maximal_count(int n, Budgets const& budgets) {
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) {
      fact *= static_cast<std::size_t>(i);
      if (fact > budgets.subgroup) {
        return std::nullopt;
      }
    }
    return maximal_subgroups_by_search(GroupTable::symmetric(n), budgets).size();
  }

}  // namespace maxsemi
