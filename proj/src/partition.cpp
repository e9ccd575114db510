#include "maxsemi/partition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

#include "maxsemi/budget.hpp"

namespace maxsemi {

  namespace {
    void check_degree(std::size_t n) {
      if (n == 0) {
        throw std::invalid_argument("degree must be at least 1");
      }
      if (n > Partition::max_degree) {
        throw std::invalid_argument("degree exceeds "
                                    + std::to_string(Partition::max_degree));
      }
    }

    std::vector<int> first_appearance(std::vector<int> const& labels) {
      std::vector<int> out(labels.size());
      std::vector<int> seen;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find(seen.begin(), seen.end(), labels[i]);
        if (it == seen.end()) {
          out[i] = static_cast<int>(seen.size());
          seen.push_back(labels[i]);
        } else {
          out[i] = static_cast<int>(it - seen.begin());
        }
      }
      return out;
    }
  }  // namespace

  void Partition::canonicalize() noexcept {
    std::array<std::uint8_t, 2 * max_degree> relabel;
    relabel.fill(0xFF);
    std::uint8_t next = 0;
    for (std::size_t p = 0; p < 2u * degree_; ++p) {
      auto& r = relabel[block_of_[p]];
      if (r == 0xFF) {
        r = next++;
      }
      block_of_[p] = r;
    }
    block_count_ = next;
  }

  Partition Partition::from_labels(int n, std::vector<int> const& labels) {
    check_degree(n);
    if (labels.size() != 2 * static_cast<std::size_t>(n)) {
      throw std::invalid_argument("expected 2n labels");
    }
    auto      canon = first_appearance(labels);
    Partition a;
    a.degree_ = static_cast<std::uint8_t>(n);
    for (std::size_t p = 0; p < canon.size(); ++p) {
      a.block_of_[p] = static_cast<std::uint8_t>(canon[p]);
    }
    a.canonicalize();
    return a;
  }

  Partition Partition::from_blocks(int n, std::vector<std::vector<int>> const& blocks) {
    check_degree(n);
    std::vector<int> labels(2 * n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw std::invalid_argument("empty block");
      }
      for (int x : blocks[b]) {
        if (x == 0 || x > n || x < -n) {
          throw std::invalid_argument("point " + std::to_string(x) + " out of range");
        }
        int p = x > 0 ? x - 1 : n + (-x) - 1;
        if (labels[p] != -1) {
          throw std::invalid_argument("point listed twice");
        }
        labels[p] = static_cast<int>(b);
      }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
      throw std::invalid_argument("blocks do not cover every point");
    }
    return from_labels(n, labels);
  }

  Partition Partition::identity(int n) {
    check_degree(n);
    std::vector<int> labels(2 * n);
    for (int i = 0; i < n; ++i) {
      labels[i] = labels[n + i] = i;
    }
    return from_labels(n, labels);
  }

  std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(block_count_);
    for (std::size_t p = 0; p < 2u * degree_; ++p) {
      int x = p < degree_ ? static_cast<int>(p) + 1 : -static_cast<int>(p - degree_ + 1);
      out[block_of_[p]].push_back(x);
    }
    return out;
  }

  std::size_t Partition::rank() const noexcept {
    std::uint32_t top = 0, bottom = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      top |= std::uint32_t(1) << block_of_[i];
      bottom |= std::uint32_t(1) << block_of_[degree_ + i];
    }
    return static_cast<std::size_t>(std::popcount(top & bottom));
  }

  std::uint32_t Partition::dom() const noexcept {
    std::uint32_t bottom = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      bottom |= std::uint32_t(1) << block_of_[degree_ + i];
    }
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (bottom >> block_of_[i] & 1) {
        out |= std::uint32_t(1) << i;
      }
    }
    return out;
  }

  std::uint32_t Partition::codom() const noexcept {
    std::uint32_t top = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      top |= std::uint32_t(1) << block_of_[i];
    }
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (top >> block_of_[degree_ + i] & 1) {
        out |= std::uint32_t(1) << i;
      }
    }
    return out;
  }

  std::vector<int> Partition::ker() const {
    std::vector<int> top(block_of_.begin(), block_of_.begin() + degree_);
    return first_appearance(top);
  }

  std::vector<int> Partition::coker() const {
    std::vector<int> bottom(block_of_.begin() + degree_,
                            block_of_.begin() + 2 * degree_);
    return first_appearance(bottom);
  }

  Partition Partition::star() const {
    Partition a = *this;
    for (std::size_t i = 0; i < degree_; ++i) {
      a.block_of_[i]           = block_of_[degree_ + i];
      a.block_of_[degree_ + i] = block_of_[i];
    }
    a.canonicalize();
    return a;
  }

  std::size_t Partition::hash() const noexcept {
    return boost::hash_range(block_of_.begin(), block_of_.begin() + 2 * degree_);
  }

  Partition multiply(Partition const& a, Partition const& b) {
    if (a.degree_ != b.degree_) {
      throw std::invalid_argument("incompatible degrees "
                                  + std::to_string(a.degree_) + " and "
                                  + std::to_string(b.degree_));
    }
    std::size_t const n = a.degree_;
    // Nodes: [0, n) top of a, [n, 2n) bottom of b, [2n, 3n) the middle row.
    std::array<std::uint8_t, 3 * Partition::max_degree> parent;
    for (std::size_t v = 0; v < 3 * n; ++v) {
      parent[v] = static_cast<std::uint8_t>(v);
    }
    auto find = [&parent](std::uint8_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v         = parent[v];
      }
      return v;
    };
    auto unite = [&](std::uint8_t u, std::uint8_t v) {
      u = find(u);
      v = find(v);
      if (u != v) {
        parent[std::max(u, v)] = std::min(u, v);
      }
    };
    std::array<std::uint8_t, 2 * Partition::max_degree> first;
    first.fill(0xFF);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      auto node = static_cast<std::uint8_t>(p < n ? p : p + n);
      auto& f   = first[a.block_of_[p]];
      if (f == 0xFF) {
        f = node;
      } else {
        unite(f, node);
      }
    }
    first.fill(0xFF);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      auto node = static_cast<std::uint8_t>(p < n ? 2 * n + p : p);
      auto& f   = first[b.block_of_[p]];
      if (f == 0xFF) {
        f = node;
      } else {
        unite(f, node);
      }
    }
    Partition c;
    c.degree_ = a.degree_;
    for (std::size_t p = 0; p < 2 * n; ++p) {
      c.block_of_[p] = find(static_cast<std::uint8_t>(p));
    }
    c.canonicalize();
    return c;
  }

  bool is_planar(Partition const& a) {
    std::size_t const n = a.degree();
    // Walk n', ..., 1', 1, ..., n; a block seen again must be the most
    // recently opened block that is still open.
    std::array<int, 2 * Partition::max_degree> remaining{};
    for (std::size_t p = 0; p < 2 * n; ++p) {
      ++remaining[a.block_of(p)];
    }
    std::array<bool, 2 * Partition::max_degree> open{};
    std::vector<int>                             stack;
    for (std::size_t pos = 0; pos < 2 * n; ++pos) {
      std::size_t p = pos < n ? 2 * n - 1 - pos : pos - n;
      int         b = a.block_of(p);
      if (open[b]) {
        if (stack.back() != b) {
          return false;
        }
      } else if (remaining[b] > 1) {
        open[b] = true;
        stack.push_back(b);
      }
      if (--remaining[b] == 0 && open[b]) {
        open[b] = false;
        stack.pop_back();
      }
    }
    return true;
  }

  Partition rho(int n) {
    check_degree(n);
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) {
      blocks.push_back({i, -(i % n + 1)});
    }
    return Partition::from_blocks(n, blocks);
  }

  bool is_annular(Partition const& a) {
    int const              n = static_cast<int>(a.degree());
    std::vector<Partition> inv_powers{Partition::identity(n)};
    Partition const        r_inv = [&] {
      Partition x = Partition::identity(n);
      for (int i = 0; i < n - 1; ++i) {
        x = x * rho(n);
      }
      return x;
    }();
    for (int k = 1; k < n; ++k) {
      inv_powers.push_back(inv_powers.back() * r_inv);
    }
    for (int k = 0; k < n; ++k) {
      Partition left = inv_powers[k] * a;
      for (int l = 0; l < n; ++l) {
        if (is_planar(left * inv_powers[l])) {
          return true;
        }
      }
    }
    return false;
  }

  namespace {
    std::uint8_t shape_flags(Partition const& a) {
      std::size_t const                          n = a.degree();
      std::array<int, 2 * Partition::max_degree> top{}, bottom{};
      for (std::size_t i = 0; i < n; ++i) {
        ++top[a.block_of(i)];
        ++bottom[a.block_of(n + i)];
      }
      bool le2 = true, eq2 = true, bij = true, uni = true;
      for (std::size_t b = 0; b < a.block_count(); ++b) {
        int size = top[b] + bottom[b];
        le2      = le2 && size <= 2;
        eq2      = eq2 && size == 2;
        bij      = bij && top[b] > 0 && bottom[b] > 0;
        uni      = uni && top[b] == bottom[b];
      }
      std::uint8_t f = 0;
      f |= le2 ? kBlocksAtMost2 : 0;
      f |= eq2 ? kBlocksExactly2 : 0;
      f |= bij ? kBlockBijection : 0;
      f |= uni ? kUniform : 0;
      return f;
    }
  }  // namespace

  std::uint8_t classify_predicates(Partition const& a) {
    std::uint8_t f = shape_flags(a);
    if (is_planar(a)) {
      f |= kPlanar | kAnnular;
    } else if (is_annular(a)) {
      f |= kAnnular;
    }
    return f;
  }

  bool family_membership(Partition const& a, Family f) {
    if (is_transformation_family(f)) {
      throw std::invalid_argument("not a diagram family: "
                                  + std::string(family_name(f)));
    }
    std::uint8_t const s = shape_flags(a);
    switch (f) {
      case Family::P:
        return true;
      case Family::PB:
        return s & kBlocksAtMost2;
      case Family::B:
        return s & kBlocksExactly2;
      case Family::Istar:
        return s & kBlockBijection;
      case Family::F:
        return s & kUniform;
      case Family::PP:
        return is_planar(a);
      case Family::M:
        return (s & kBlocksAtMost2) && is_planar(a);
      case Family::J:
        return (s & kBlocksExactly2) && is_planar(a);
      case Family::AJ:
        return (s & kBlocksExactly2) && is_annular(a);
      default:
        return false;
    }
  }

  Partition jones_projection(int n, int i) {
    check_degree(n);
    if (i < 1 || i >= n) {
      throw std::invalid_argument("projection index out of range");
    }
    std::vector<std::vector<int>> blocks{{i, i + 1}, {-i, -(i + 1)}};
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) {
        blocks.push_back({j, -j});
      }
    }
    return Partition::from_blocks(n, blocks);
  }

  Partition embed_partial_perm(PartialTransformation const& t) {
    if (!t.is_partial_perm()) {
      throw std::invalid_argument("embedding needs a partial permutation");
    }
    int const                     n = static_cast<int>(t.degree());
    std::vector<std::vector<int>> blocks;
    std::uint32_t                 im = t.im();
    for (int i = 0; i < n; ++i) {
      if (t.defined(i)) {
        blocks.push_back({i + 1, -(t[i] + 1)});
      } else {
        blocks.push_back({i + 1});
      }
      if (!(im >> i & 1)) {
        blocks.push_back({-(i + 1)});
      }
    }
    return Partition::from_blocks(n, blocks);
  }

  std::vector<Partition> diagram_generators(Family f, int n) {
    check_degree(n);
    std::vector<Partition> out{Partition::identity(n)};
    auto                   sym = [&] {
      for (auto const& t : transformation_generators(Family::S, n)) {
        out.push_back(embed_partial_perm(t));
      }
    };
    auto singleton_pair = [n](int i) {
      // {i}, {i'}, rest identity.
      std::vector<std::vector<int>> blocks{{i}, {-i}};
      for (int j = 1; j <= n; ++j) {
        if (j != i) {
          blocks.push_back({j, -j});
        }
      }
      return Partition::from_blocks(n, blocks);
    };
    auto merged_pair = [n](int i) {
      // {i, i + 1, i', (i + 1)'}, rest identity.
      std::vector<std::vector<int>> blocks{{i, i + 1, -i, -(i + 1)}};
      for (int j = 1; j <= n; ++j) {
        if (j != i && j != i + 1) {
          blocks.push_back({j, -j});
        }
      }
      return Partition::from_blocks(n, blocks);
    };
    switch (f) {
      case Family::P:
        sym();
        out.push_back(singleton_pair(1));
        if (n >= 2) {
          out.push_back(merged_pair(1));
        }
        break;
      case Family::PB:
        sym();
        out.push_back(singleton_pair(1));
        if (n >= 2) {
          out.push_back(jones_projection(n, 1));
        }
        break;
      case Family::B:
        sym();
        if (n >= 2) {
          out.push_back(jones_projection(n, 1));
        }
        break;
      case Family::F:
        sym();
        if (n >= 2) {
          out.push_back(merged_pair(1));
        }
        break;
      case Family::Istar:
        sym();
        if (n >= 2) {
          out.push_back(merged_pair(1));
        }
        if (n >= 3) {
          std::vector<std::vector<int>> blocks{{1, 2, -1}, {3, -2, -3}};
          for (int j = 4; j <= n; ++j) {
            blocks.push_back({j, -j});
          }
          out.push_back(Partition::from_blocks(n, blocks));
        }
        break;
      case Family::PP:
        for (int i = 1; i <= n; ++i) {
          out.push_back(singleton_pair(i));
        }
        for (int i = 1; i < n; ++i) {
          out.push_back(merged_pair(i));
        }
        break;
      case Family::J:
        for (int i = 1; i < n; ++i) {
          out.push_back(jones_projection(n, i));
        }
        break;
      case Family::M:
        for (int i = 1; i < n; ++i) {
          out.push_back(jones_projection(n, i));
        }
        for (int i = 1; i <= n; ++i) {
          out.push_back(singleton_pair(i));
        }
        for (int i = 1; i < n; ++i) {
          // {i}, {(i + 1)'}, {i + 1, i'}, and the mirror image.
          std::vector<std::vector<int>> l{{i}, {-(i + 1)}, {i + 1, -i}};
          std::vector<std::vector<int>> r{{i + 1}, {-i}, {i, -(i + 1)}};
          for (int j = 1; j <= n; ++j) {
            if (j != i && j != i + 1) {
              l.push_back({j, -j});
              r.push_back({j, -j});
            }
          }
          out.push_back(Partition::from_blocks(n, l));
          out.push_back(Partition::from_blocks(n, r));
        }
        break;
      case Family::AJ:
        if (n >= 2) {
          out.push_back(rho(n));
        }
        if (n >= 2) {
          out.push_back(jones_projection(n, 1));
        }
        break;
      default:
        throw std::invalid_argument("not a diagram family");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  namespace {
    // Positions along n', ..., 1', 1, ..., n mapped to storage points.
    std::size_t point_at(std::size_t n, std::size_t pos) {
      return pos < n ? 2 * n - 1 - pos : pos - n;
    }

    class Collector {
     public:
      Collector(std::size_t n, std::size_t cap) : n_(n), cap_(cap) {}

      void add(std::vector<int> const& labels) {
        if (out_.size() == cap_) {
          throw CapacityError("elements", cap_);
        }
        out_.push_back(Partition::from_labels(static_cast<int>(n_), labels));
      }

      std::vector<Partition> take() {
        std::sort(out_.begin(), out_.end());
        out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
        return std::move(out_);
      }

     private:
      std::size_t            n_;
      std::size_t            cap_;
      std::vector<Partition> out_;
    };

    // Restricted growth strings of length 2n, filtered.
    void all_set_partitions(std::size_t n, Collector& out,
                            std::function<bool(Partition const&)> const& keep,
                            std::size_t scan_cap) {
      std::vector<int> labels(2 * n, 0);
      std::size_t      scanned = 0;
      std::function<void(std::size_t, int)> rec = [&](std::size_t p, int blocks) {
        if (p == 2 * n) {
          if (++scanned > scan_cap) {
            throw CapacityError("set partitions scanned", scan_cap);
          }
          Partition x = Partition::from_labels(static_cast<int>(n), labels);
          if (keep(x)) {
            out.add(labels);
          }
          return;
        }
        for (int b = 0; b <= blocks; ++b) {
          labels[p] = b;
          rec(p + 1, b == blocks ? blocks + 1 : blocks);
        }
      };
      rec(0, 0);
    }

    // Matchings with blocks of size 1 or 2; crossings allowed.
    void matchings(std::size_t n, bool singletons, Collector& out) {
      std::vector<int>                       labels(2 * n, -1);
      std::function<void(int)> rec = [&](int next_label) {
        auto it = std::find(labels.begin(), labels.end(), -1);
        if (it == labels.end()) {
          out.add(labels);
          return;
        }
        std::size_t p = it - labels.begin();
        labels[p]     = next_label;
        if (singletons) {
          rec(next_label + 1);
        }
        for (std::size_t q = p + 1; q < 2 * n; ++q) {
          if (labels[q] == -1) {
            labels[q] = next_label;
            rec(next_label + 1);
            labels[q] = -1;
          }
        }
        labels[p] = -1;
      };
      rec(0);
    }

    // Non-crossing matchings along the planarity order: each position
    // opens an arc, closes the innermost open arc, or (if allowed) is a
    // singleton.
    void planar_matchings(std::size_t n, bool singletons, Collector& out) {
      std::vector<int> labels(2 * n, -1);
      std::vector<int> stack;
      std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int next_label) {
        if (pos == 2 * n) {
          if (stack.empty()) {
            out.add(labels);
          }
          return;
        }
        if (stack.size() > 2 * n - pos) {
          return;
        }
        std::size_t p = point_at(n, pos);
        if (singletons) {
          labels[p] = next_label;
          rec(pos + 1, next_label + 1);
        }
        labels[p] = next_label;
        stack.push_back(next_label);
        rec(pos + 1, next_label + 1);
        stack.pop_back();
        if (!stack.empty()) {
          int b = stack.back();
          stack.pop_back();
          labels[p] = b;
          rec(pos + 1, next_label);
          stack.push_back(b);
        }
        labels[p] = -1;
      };
      rec(0, 0);
    }

    // Non-crossing set partitions along the planarity order: a position
    // starts a block or joins the innermost open block, and either keeps
    // that block open or closes it.
    void planar_partitions(std::size_t n, Collector& out) {
      std::vector<int> labels(2 * n, -1);
      std::vector<int> stack;
      std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int next_label) {
        if (pos == 2 * n) {
          if (stack.empty()) {
            out.add(labels);
          }
          return;
        }
        std::size_t p = point_at(n, pos);
        // New block, closed at once or left open.
        labels[p] = next_label;
        rec(pos + 1, next_label + 1);
        stack.push_back(next_label);
        rec(pos + 1, next_label + 1);
        stack.pop_back();
        if (!stack.empty()) {
          int b     = stack.back();
          labels[p] = b;
          rec(pos + 1, next_label);
          stack.pop_back();
          rec(pos + 1, next_label);
          stack.push_back(b);
        }
        labels[p] = -1;
      };
      rec(0, 0);
    }
  }  // namespace

  std::vector<Partition> diagram_members(Family f, int n, std::size_t cap) {
    check_degree(n);
    std::size_t const nn = n;
    Collector         out(nn, cap);
    switch (f) {
      case Family::P:
        all_set_partitions(nn, out, [](Partition const&) { return true; }, cap);
        break;
      case Family::Istar:
      case Family::F:
        all_set_partitions(
            nn, out, [f](Partition const& x) { return family_membership(x, f); },
            std::max<std::size_t>(cap, 5'000'000));
        break;
      case Family::PB:
        matchings(nn, true, out);
        break;
      case Family::B:
        matchings(nn, false, out);
        break;
      case Family::M:
        planar_matchings(nn, true, out);
        break;
      case Family::J:
        planar_matchings(nn, false, out);
        break;
      case Family::PP:
        planar_partitions(nn, out);
        break;
      case Family::AJ: {
        auto             jones = diagram_members(Family::J, n, cap);
        Partition const  r     = rho(n);
        std::vector<Partition> powers{Partition::identity(n)};
        for (int k = 1; k < n; ++k) {
          powers.push_back(powers.back() * r);
        }
        std::vector<Partition> all;
        for (auto const& x : jones) {
          for (auto const& left : powers) {
            Partition lx = left * x;
            for (auto const& right : powers) {
              all.push_back(lx * right);
            }
          }
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        if (all.size() > cap) {
          throw CapacityError("elements", cap);
        }
        return all;
      }
      default:
        throw std::invalid_argument("not a diagram family");
    }
    return out.take();
  }

  std::string to_string(Partition const& a) {
    std::string out;
    for (auto const& block : a.blocks()) {
      if (!out.empty()) {
        out += ',';
      }
      out += '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += block[i] > 0 ? std::to_string(block[i])
                            : std::to_string(-block[i]) + "'";
      }
      out += '}';
    }
    return out;
  }

  Partition parse_partition(std::string const& text, int degree) {
    std::vector<std::vector<int>> blocks;
    int                           largest = 0;
    std::size_t                   i       = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\n')) {
        ++i;
      }
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '{') {
        throw std::invalid_argument("expected '{' in block notation");
      }
      ++i;
      std::vector<int> block;
      while (true) {
        while (i < text.size() && text[i] == ' ') {
          ++i;
        }
        if (i < text.size() && text[i] == '}') {
          ++i;
          break;
        }
        std::size_t used = 0;
        int         v    = std::stoi(text.substr(i), &used);
        i += used;
        bool primed = i < text.size() && text[i] == '\'';
        if (primed) {
          ++i;
        }
        largest = std::max(largest, v);
        block.push_back(primed ? -v : v);
        while (i < text.size() && text[i] == ' ') {
          ++i;
        }
        if (i < text.size() && text[i] == ',') {
          ++i;
        }
      }
      blocks.push_back(block);
      skip();
    }
    return Partition::from_blocks(degree > 0 ? degree : largest, blocks);
  }

}  // namespace maxsemi
