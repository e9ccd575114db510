#include "maxsemi/greens.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>
#include <boost/graph/compressed_sparse_row_graph.hpp>
#include <boost/graph/strong_components.hpp>

namespace maxsemi {

  namespace {
    using Csr = boost::compressed_sparse_row_graph<boost::directedS>;

    // Strongly connected components of x -> mult(x, g) over the generators.
    std::vector<std::uint32_t> scc_ids(std::size_t N, std::vector<index_t> const& targets,
                                       std::size_t k) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      edges.reserve(N * k);
      for (std::size_t x = 0; x < N; ++x) {
        for (std::size_t i = 0; i < k; ++i) {
          edges.emplace_back(x, targets[x * k + i]);
        }
      }
      Csr                      g(boost::edges_are_sorted, edges.begin(), edges.end(), N);
      std::vector<std::size_t> comp(N);
      boost::strong_components(
          g, boost::make_iterator_property_map(comp.begin(), boost::get(boost::vertex_index, g)));
      // Renumber by least member.
      std::vector<std::uint32_t> relabel(N, UINT32_MAX), out(N);
      std::uint32_t              next = 0;
      for (std::size_t x = 0; x < N; ++x) {
        auto& r = relabel[comp[x]];
        if (r == UINT32_MAX) {
          r = next++;
        }
        out[x] = r;
      }
      return out;
    }

    template <typename Key>
    std::vector<std::uint32_t> renumber(std::vector<Key> const& keys) {
      std::map<Key, std::uint32_t> ids;
      std::vector<std::uint32_t>   out(keys.size());
      for (std::size_t x = 0; x < keys.size(); ++x) {
        auto [it, fresh] = ids.emplace(keys[x], static_cast<std::uint32_t>(ids.size()));
        out[x]           = it->second;
      }
      return out;
    }

    std::vector<std::vector<index_t>> members_of(std::vector<std::uint32_t> const& ids) {
      std::uint32_t count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
      std::vector<std::vector<index_t>> out(count);
      for (std::size_t x = 0; x < ids.size(); ++x) {
        out[ids[x]].push_back(static_cast<index_t>(x));
      }
      return out;
    }
  }  // namespace

  std::vector<std::uint32_t> GreensStructure::strictly_above(std::uint32_t j) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < j_classes.size(); ++k) {
      if (k != j && ge[j].test(k)) {
        out.push_back(k);
      }
    }
    return out;
  }

  bool GreensStructure::covered_by_units(std::uint32_t j) const {
    if (j == units) {
      return false;
    }
    auto above = strictly_above(j);
    return above.size() == 1 && above.front() == units;
  }

  std::optional<std::uint32_t> GreensStructure::j_of_rank(std::size_t rank) const {
    std::optional<std::uint32_t> out;
    for (std::uint32_t j = 0; j < j_classes.size(); ++j) {
      if (j_classes[j].rank == rank) {
        if (out) {
          return std::nullopt;
        }
        out = j;
      }
    }
    return out;
  }

  std::optional<std::uint32_t> GreensStructure::h_of_pair(std::uint32_t l,
                                                          std::uint32_t r) const {
    // L-classes are small relative to the monoid; scan the members of l.
    for (index_t x : l_members[l]) {
      if (r_of[x] == r) {
        return h_of[x];
      }
    }
    return std::nullopt;
  }

  bool GreensStructure::is_group_h_class(std::uint32_t h) const {
    for (index_t x : h_members[h]) {
      if (idempotent[x]) {
        return true;
      }
    }
    return false;
  }

  ElementSet GreensStructure::up_set(std::uint32_t j) const {
    ElementSet out(j_of.size());
    for (std::size_t x = 0; x < j_of.size(); ++x) {
      if (ge[j].test(j_of[x])) {
        out.set(x);
      }
    }
    return out;
  }

  GreensStructure greens(FiniteMonoid const& M) {
    std::size_t const N    = M.size();
    auto const&       gens = M.generators();
    std::size_t const k    = gens.size();
    std::vector<index_t> right(N * k), left(N * k);
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t i = 0; i < k; ++i) {
        right[x * k + i] = M.product(static_cast<index_t>(x), gens[i]);
        left[x * k + i]  = M.product(gens[i], static_cast<index_t>(x));
      }
    }
    {
      // The generators must generate: everything is reachable from 1.
      std::vector<bool>    seen(N, false);
      std::vector<index_t> stack{M.identity()};
      seen[M.identity()] = true;
      std::size_t reached = 1;
      while (!stack.empty()) {
        index_t x = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < k; ++i) {
          index_t y = right[x * k + i];
          if (!seen[y]) {
            seen[y] = true;
            ++reached;
            stack.push_back(y);
          }
        }
      }
      if (reached != N) {
        throw std::logic_error("generators of " + M.name() + " do not generate it");
      }
    }

    GreensStructure G;
    G.r_of = scc_ids(N, right, k);
    G.l_of = scc_ids(N, left, k);
    {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> lr(N);
      for (std::size_t x = 0; x < N; ++x) {
        lr[x] = {G.l_of[x], G.r_of[x]};
      }
      // First-appearance numbering of H-classes.
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
      G.h_of.resize(N);
      for (std::size_t x = 0; x < N; ++x) {
        auto [it, fresh] = ids.emplace(lr[x], static_cast<std::uint32_t>(ids.size()));
        if (fresh) {
          G.h_coords.push_back(lr[x]);
        }
        G.h_of[x] = it->second;
      }
    }
    G.l_members = members_of(G.l_of);
    G.r_members = members_of(G.r_of);
    G.h_members = members_of(G.h_of);

    std::size_t const nl = G.l_members.size(), nr = G.r_members.size();
    boost::disjoint_sets_with_storage<> uf(nl + nr);
    for (std::size_t x = 0; x < N; ++x) {
      uf.union_set(std::size_t{G.l_of[x]}, nl + G.r_of[x]);
    }
    {
      std::vector<std::size_t> roots(N);
      for (std::size_t x = 0; x < N; ++x) {
        roots[x] = uf.find_set(std::size_t{G.l_of[x]});
      }
      std::vector<std::uint32_t> relabel(nl + nr, UINT32_MAX);
      G.j_of.resize(N);
      std::uint32_t next = 0;
      for (std::size_t x = 0; x < N; ++x) {
        auto& r = relabel[roots[x]];
        if (r == UINT32_MAX) {
          r = next++;
        }
        G.j_of[x] = r;
      }
    }
    G.l_j.resize(nl);
    G.r_j.resize(nr);
    for (std::size_t x = 0; x < N; ++x) {
      G.l_j[G.l_of[x]] = G.j_of[x];
      G.r_j[G.r_of[x]] = G.j_of[x];
    }

    G.idempotent.resize(N);
    for (std::size_t x = 0; x < N; ++x) {
      auto i          = static_cast<index_t>(x);
      G.idempotent[x] = M.product(i, i) == i;
    }

    std::size_t const nj = *std::max_element(G.j_of.begin(), G.j_of.end()) + 1;
    G.j_classes.resize(nj);
    for (std::size_t x = 0; x < N; ++x) {
      G.j_classes[G.j_of[x]].elements.push_back(static_cast<index_t>(x));
    }
    for (std::uint32_t l = 0; l < nl; ++l) {
      G.j_classes[G.l_j[l]].l_classes.push_back(l);
    }
    for (std::uint32_t r = 0; r < nr; ++r) {
      G.j_classes[G.r_j[r]].r_classes.push_back(r);
    }
    for (std::uint32_t h = 0; h < G.h_members.size(); ++h) {
      auto& info = G.j_classes[G.j_of[G.h_members[h].front()]];
      if (info.h_size == 0) {
        info.h_size = G.h_members[h].size();
      } else if (info.h_size != G.h_members[h].size()) {
        throw std::logic_error("H-classes of one J-class differ in size");
      }
      if (G.is_group_h_class(h)) {
        info.group_h.push_back(G.h_coords[h]);
      }
    }
    for (auto& info : G.j_classes) {
      info.rank = M.rank(info.elements.front());
      for (index_t x : info.elements) {
        if (M.rank(x) != info.rank) {
          throw std::logic_error("J-class with elements of different ranks");
        }
        info.idempotents += G.idempotent[x] ? 1 : 0;
      }
      info.regular = info.idempotents > 0;
      std::sort(info.group_h.begin(), info.group_h.end());
    }
    G.units = G.j_of[M.identity()];

    // J-order: reach[k] holds the classes below J_k.
    std::vector<std::vector<std::uint32_t>> succ(nj);
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t i = 0; i < k; ++i) {
        for (index_t y : {right[x * k + i], left[x * k + i]}) {
          if (G.j_of[y] != G.j_of[x]) {
            succ[G.j_of[x]].push_back(G.j_of[y]);
          }
        }
      }
    }
    std::vector<boost::dynamic_bitset<>> reach(nj, boost::dynamic_bitset<>(nj));
    for (std::size_t j = 0; j < nj; ++j) {
      std::sort(succ[j].begin(), succ[j].end());
      succ[j].erase(std::unique(succ[j].begin(), succ[j].end()), succ[j].end());
      std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(j)};
      reach[j].set(j);
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : succ[v]) {
          if (!reach[j].test(w)) {
            reach[j].set(w);
            stack.push_back(w);
          }
        }
      }
    }
    G.ge.assign(nj, boost::dynamic_bitset<>(nj));
    for (std::size_t j = 0; j < nj; ++j) {
      for (std::size_t kk = 0; kk < nj; ++kk) {
        if (reach[kk].test(j)) {
          G.ge[j].set(kk);
        }
      }
    }
    std::map<std::size_t, int> per_rank;
    for (auto const& info : G.j_classes) {
      ++per_rank[info.rank];
    }
    G.rank_labels = std::all_of(per_rank.begin(), per_rank.end(),
                                [](auto const& kv) { return kv.second == 1; });
    return G;
  }

  namespace {
    std::vector<int> canonical(std::vector<int> const& labels) {
      std::vector<int> out(labels.size());
      std::map<int, int> ids;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) {
          out[i] = -1;
          continue;
        }
        auto [it, fresh] = ids.emplace(labels[i], static_cast<int>(ids.size()));
        out[i]           = it->second;
      }
      return out;
    }

    // Attribute keys: R from domain and kernel, L from image (or codomain and
    // cokernel for partitions).
    std::vector<int> r_attribute(FiniteMonoid const& M, index_t x) {
      if (M.is_transformation_monoid()) {
        return M.transformation(x).kernel();
      }
      auto const&      a   = M.partition(x);
      std::vector<int> out = a.ker();
      out.push_back(static_cast<int>(a.dom()));
      return out;
    }

    std::vector<int> l_attribute(FiniteMonoid const& M, index_t x) {
      if (M.is_transformation_monoid()) {
        return {static_cast<int>(M.transformation(x).im())};
      }
      auto const&      a   = M.partition(x);
      std::vector<int> out = a.coker();
      out.push_back(static_cast<int>(a.codom()));
      return out;
    }

    std::vector<int> permutation_of(FiniteMonoid const& M, index_t g) {
      int const        n = M.degree();
      std::vector<int> sigma(n);
      if (M.is_transformation_monoid()) {
        for (int i = 0; i < n; ++i) {
          sigma[i] = M.transformation(g)[i];
        }
      } else {
        auto const& a = M.partition(g);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (a.block_of(n + j) == a.block_of(i)) {
              sigma[i] = j;
            }
          }
        }
      }
      return sigma;
    }
  }  // namespace

  std::optional<AttributeClasses> attribute_classes(FiniteMonoid const& M) {
    if (!M.instance()) {
      return std::nullopt;
    }
    AttributeClasses out;
    std::size_t const N = M.size();
    std::vector<std::vector<int>> lk(N), rk(N);
    for (std::size_t x = 0; x < N; ++x) {
      lk[x] = l_attribute(M, static_cast<index_t>(x));
      rk[x] = r_attribute(M, static_cast<index_t>(x));
    }
    auto l = renumber(lk), r = renumber(rk);
    out.l_key.assign(l.begin(), l.end());
    out.r_key.assign(r.begin(), r.end());
    out.j_key.resize(N);
    for (std::size_t x = 0; x < N; ++x) {
      out.j_key[x] = M.rank(static_cast<index_t>(x));
    }
    out.j_applies = M.instance()->family != Family::F;
    return out;
  }

  namespace {
    // Do the two labellings induce the same partition of the indices listed?
    template <typename A, typename B>
    bool same_partition(std::vector<A> const& a, std::vector<B> const& b,
                        std::vector<std::size_t> const& where) {
      std::map<A, B> ab;
      std::map<B, A> ba;
      for (std::size_t x : where) {
        auto [i, f1] = ab.emplace(a[x], b[x]);
        auto [j, f2] = ba.emplace(b[x], a[x]);
        if (i->second != b[x] || j->second != a[x]) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::optional<std::string> greens_attribute_mismatch(FiniteMonoid const&    M,
                                                       GreensStructure const& G) {
    auto attr = attribute_classes(M);
    if (!attr) {
      return std::nullopt;
    }
    std::vector<std::size_t> all(M.size());
    std::iota(all.begin(), all.end(), 0);
    if (!same_partition(G.l_of, attr->l_key, all)) {
      return "L-classes differ from the image/codomain characterisation";
    }
    if (!same_partition(G.r_of, attr->r_key, all)) {
      return "R-classes differ from the kernel/domain characterisation";
    }
    std::vector<std::size_t> where;
    for (std::size_t x = 0; x < M.size(); ++x) {
      auto r = M.rank(static_cast<index_t>(x));
      if (attr->j_applies || r + 1 >= static_cast<std::size_t>(M.degree())) {
        where.push_back(x);
      }
    }
    if (!same_partition(G.j_of, attr->j_key, where)) {
      return "J-classes differ from the rank characterisation";
    }
    return std::nullopt;
  }

  namespace {
    std::vector<std::vector<std::uint32_t>> orbits_from_uf(
        std::vector<std::uint32_t> const&                         classes,
        std::vector<std::pair<std::uint32_t, std::uint32_t>> const& links) {
      std::map<std::uint32_t, std::size_t> pos;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        pos[classes[i]] = i;
      }
      boost::disjoint_sets_with_storage<> uf(classes.size());
      for (auto [a, b] : links) {
        uf.union_set(pos.at(a), pos.at(b));
      }
      std::map<std::size_t, std::vector<std::uint32_t>> groups;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        groups[uf.find_set(i)].push_back(classes[i]);
      }
      std::vector<std::vector<std::uint32_t>> out;
      for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(members);
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  UnitOrbits unit_orbits(FiniteMonoid const& M, GreensStructure const& G, std::uint32_t j) {
    auto const& info  = G.j_classes.at(j);
    auto const& units = G.units_members();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> l_links, r_links;
    for (auto l : info.l_classes) {
      index_t rep = G.l_members[l].front();
      for (index_t g : units) {
        l_links.emplace_back(l, G.l_of[M.product(rep, g)]);
      }
    }
    for (auto r : info.r_classes) {
      index_t rep = G.r_members[r].front();
      for (index_t g : units) {
        r_links.emplace_back(r, G.r_of[M.product(g, rep)]);
      }
    }
    UnitOrbits out;
    out.l_orbits       = orbits_from_uf(info.l_classes, l_links);
    out.r_orbits       = orbits_from_uf(info.r_classes, r_links);
    out.single_h_class = info.l_classes.size() == 1 && info.r_classes.size() == 1;
    return out;
  }

  UnitOrbits unit_orbits_by_action(FiniteMonoid const& M, GreensStructure const& G,
                                   std::uint32_t j) {
    auto const& info = G.j_classes.at(j);
    int const   n    = M.degree();
    std::map<std::vector<int>, std::uint32_t> l_by_attr, r_by_attr;
    for (auto l : info.l_classes) {
      l_by_attr[l_attribute(M, G.l_members[l].front())] = l;
    }
    for (auto r : info.r_classes) {
      r_by_attr[r_attribute(M, G.r_members[r].front())] = r;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> l_links, r_links;
    for (index_t g : G.units_members()) {
      auto sigma = permutation_of(M, g);
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) {
        inv[sigma[i]] = i;
      }
      for (auto l : info.l_classes) {
        auto attr = l_attribute(M, G.l_members[l].front());
        std::vector<int> moved;
        if (M.is_transformation_monoid()) {
          int im = 0;
          for (int i = 0; i < n; ++i) {
            if (attr[0] >> i & 1) {
              im |= 1 << sigma[i];
            }
          }
          moved = {im};
        } else {
          // Right action: bottom point k goes to k sigma.
          std::vector<int> labels(n);
          int              codom = 0;
          for (int m = 0; m < n; ++m) {
            labels[m] = attr[inv[m]];
            if (attr[n] >> inv[m] & 1) {
              codom |= 1 << m;
            }
          }
          moved = canonical(labels);
          moved.push_back(codom);
        }
        l_links.emplace_back(l, l_by_attr.at(moved));
      }
      for (auto r : info.r_classes) {
        auto             attr = r_attribute(M, G.r_members[r].front());
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) {
          labels[i] = attr[sigma[i]];
        }
        std::vector<int> moved = canonical(labels);
        if (!M.is_transformation_monoid()) {
          int dom = 0;
          for (int i = 0; i < n; ++i) {
            if (attr[n] >> sigma[i] & 1) {
              dom |= 1 << i;
            }
          }
          moved.push_back(dom);
        }
        r_links.emplace_back(r, r_by_attr.at(moved));
      }
    }
    UnitOrbits out;
    out.l_orbits       = orbits_from_uf(info.l_classes, l_links);
    out.r_orbits       = orbits_from_uf(info.r_classes, r_links);
    out.single_h_class = info.l_classes.size() == 1 && info.r_classes.size() == 1;
    return out;
  }

}  // namespace maxsemi
