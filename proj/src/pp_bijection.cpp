#include "maxsemi/pp_bijection.hpp"

#include <stdexcept>

namespace maxsemi {

  Partition planar_cut(int n, int i) {
    std::vector<std::vector<int>> blocks{{i}, {-i}};
    for (int j = 1; j <= n; ++j) {
      if (j != i) {
        blocks.push_back({j, -j});
      }
    }
    return Partition::from_blocks(n, blocks);
  }

  Partition planar_join(int n, int i) {
    std::vector<std::vector<int>> blocks{{i, i + 1, -i, -(i + 1)}};
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) {
        blocks.push_back({j, -j});
      }
    }
    return Partition::from_blocks(n, blocks);
  }

  PlanarJonesMap::PlanarJonesMap(FiniteMonoid const& planar, FiniteMonoid const& jones)
      : planar_(planar), jones_(jones) {
    int const n = planar.degree();
    if (planar.is_transformation_monoid() || jones.degree() != 2 * n || planar.size() != jones.size()) {
      throw std::invalid_argument("PlanarJonesMap: expects PP_n and J_2n");
    }
    std::vector<std::pair<index_t, index_t>> gens;
    auto find = [](FiniteMonoid const& M, Partition const& p) {
      auto i = M.find(p);
      if (!i) {
        throw std::logic_error("generator missing from monoid: " + to_string(p));
      }
      return *i;
    };
    for (int i = 1; i <= n; ++i) {
      gens.emplace_back(find(planar, planar_cut(n, i)), find(jones, jones_projection(2 * n, 2 * i - 1)));
    }
    for (int i = 1; i < n; ++i) {
      gens.emplace_back(find(planar, planar_join(n, i)), find(jones, jones_projection(2 * n, 2 * i)));
    }
    constexpr index_t unset = static_cast<index_t>(-1);
    forward_.assign(planar.size(), unset);
    backward_.assign(jones.size(), unset);
    forward_[planar.identity()] = jones.identity();
    backward_[jones.identity()] = planar.identity();
    std::vector<index_t> queue{planar.identity()};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      index_t x = queue[k];
      for (auto [g, h] : gens) {
        index_t y  = planar.product(x, g);
        index_t fy = jones.product(forward_[x], h);
        if (forward_[y] == unset) {
          if (backward_[fy] != unset) {
            throw std::logic_error("PlanarJonesMap: not injective");
          }
          forward_[y]   = fy;
          backward_[fy] = y;
          queue.push_back(y);
        } else if (forward_[y] != fy) {
          throw std::logic_error("PlanarJonesMap: not well defined");
        }
      }
    }
    if (queue.size() != planar.size()) {
      throw std::logic_error("PlanarJonesMap: generators do not reach every element");
    }
  }

  bool PlanarJonesMap::is_homomorphism() const {
    for (index_t x = 0; x < planar_.size(); ++x) {
      for (index_t y = 0; y < planar_.size(); ++y) {
        if (forward_[planar_.product(x, y)] != jones_.product(forward_[x], forward_[y])) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet PlanarJonesMap::to_planar(ElementSet const& jones_set) const {
    ElementSet out(planar_.size());
    for (auto i = jones_set.find_first(); i != ElementSet::npos; i = jones_set.find_next(i)) {
      out.set(backward_[i]);
    }
    return out;
  }

}  // namespace maxsemi
