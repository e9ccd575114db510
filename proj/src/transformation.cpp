#include "maxsemi/transformation.hpp"

#include <algorithm>
#include <bit>
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
      if (n > PartialTransformation::max_degree) {
        throw std::invalid_argument("degree exceeds "
                                    + std::to_string(PartialTransformation::max_degree));
      }
    }

    // Number of cyclic descents (or ascents when ascending is set) of the
    // image sequence read along the domain in increasing order.
    std::size_t cyclic_turns(std::uint8_t const* vals, std::size_t k, bool ascending) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < k; ++i) {
        auto a = vals[i];
        auto b = vals[(i + 1) % k];
        if (ascending ? a < b : a > b) {
          ++count;
        }
      }
      return count;
    }
  }  // namespace

  PartialTransformation::PartialTransformation(std::vector<int> const& images) {
    check_degree(images.size());
    degree_ = static_cast<std::uint8_t>(images.size());
    images_.fill(undefined);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int v = images[i];
      if (v < 0 || v > static_cast<int>(degree_)) {
        throw std::invalid_argument("image " + std::to_string(v) + " out of range");
      }
      images_[i] = v == 0 ? undefined : static_cast<std::uint8_t>(v - 1);
    }
    set_flags();
  }

  PartialTransformation PartialTransformation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) {
      im[i] = i + 1;
    }
    return PartialTransformation(im);
  }

  std::uint32_t PartialTransformation::dom() const noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (images_[i] != undefined) {
        m |= std::uint32_t(1) << i;
      }
    }
    return m;
  }

  std::uint32_t PartialTransformation::im() const noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (images_[i] != undefined) {
        m |= std::uint32_t(1) << images_[i];
      }
    }
    return m;
  }

  std::size_t PartialTransformation::rank() const noexcept {
    return std::popcount(im());
  }

  std::vector<int> PartialTransformation::kernel() const {
    std::vector<int> out(degree_, -1);
    std::array<int, max_degree> label;
    label.fill(-1);
    int next = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (images_[i] == undefined) {
        continue;
      }
      if (label[images_[i]] < 0) {
        label[images_[i]] = next++;
      }
      out[i] = label[images_[i]];
    }
    return out;
  }

  PartialTransformation PartialTransformation::inverse() const {
    if (!is_partial_perm()) {
      throw std::invalid_argument("inverse of a non-injective partial map");
    }
    std::vector<int> im(degree_, 0);
    for (std::size_t i = 0; i < degree_; ++i) {
      if (images_[i] != undefined) {
        im[images_[i]] = static_cast<int>(i) + 1;
      }
    }
    return PartialTransformation(im);
  }

  std::vector<int> PartialTransformation::one_line() const {
    std::vector<int> out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) {
      out[i] = images_[i] == undefined ? 0 : images_[i] + 1;
    }
    return out;
  }

  std::size_t PartialTransformation::hash() const noexcept {
    return boost::hash_range(images_.begin(), images_.begin() + degree_);
  }

  void PartialTransformation::set_flags() noexcept {
    std::array<std::uint8_t, max_degree> vals;
    std::size_t                          k = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (images_[i] != undefined) {
        vals[k++] = images_[i];
      }
    }
    std::uint8_t f = 0;
    if (std::is_sorted(vals.begin(), vals.begin() + k)) {
      f |= kOrderPreserving;
    }
    if (std::is_sorted(vals.begin(), vals.begin() + k, std::greater<>())) {
      f |= kOrderReversing;
    }
    if (cyclic_turns(vals.data(), k, false) <= 1) {
      f |= kOrientationPreserving;
    }
    if (cyclic_turns(vals.data(), k, true) <= 1) {
      f |= kOrientationReversing;
    }
    if (static_cast<std::size_t>(std::popcount(im())) == k) {
      f |= kPartialPerm;
    }
    if (k == degree_) {
      f |= kTotal;
    }
    flags_ = f;
  }

  PartialTransformation compose(PartialTransformation const& a,
                                PartialTransformation const& b) {
    if (a.degree_ != b.degree_) {
      throw std::invalid_argument("incompatible degrees "
                                  + std::to_string(a.degree_) + " and "
                                  + std::to_string(b.degree_));
    }
    PartialTransformation c;
    c.degree_ = a.degree_;
    c.images_.fill(PartialTransformation::undefined);
    for (std::size_t i = 0; i < a.degree_; ++i) {
      auto x = a.images_[i];
      if (x != PartialTransformation::undefined) {
        c.images_[i] = b.images_[x];
      }
    }
    c.set_flags();
    return c;
  }

  std::uint8_t classify_predicates(PartialTransformation const& a) noexcept {
    return a.flags();
  }

  bool family_membership(PartialTransformation const& a, Family f) {
    if (!is_transformation_family(f)) {
      throw std::invalid_argument("not a transformation family: "
                                  + std::string(family_name(f)));
    }
    auto const fl    = a.flags();
    bool const op    = fl & kOrderPreserving;
    bool const orv   = fl & kOrderReversing;
    bool const ope   = fl & kOrientationPreserving;
    bool const ore   = fl & kOrientationReversing;
    bool const pp    = fl & kPartialPerm;
    bool const total = fl & kTotal;
    switch (f) {
      case Family::PT:
        return true;
      case Family::T:
        return total;
      case Family::I:
        return pp;
      case Family::S:
        return pp && total;
      case Family::PO:
        return op;
      case Family::POD:
        return op || orv;
      case Family::POP:
        return ope;
      case Family::POR:
        return ope || ore;
      case Family::O:
        return op && total;
      case Family::OD:
        return (op || orv) && total;
      case Family::OP:
        return ope && total;
      case Family::OR:
        return (ope || ore) && total;
      case Family::POI:
        return op && pp;
      case Family::PODI:
        return (op || orv) && pp;
      case Family::POPI:
        return ope && pp;
      case Family::PORI:
        return (ope || ore) && pp;
      default:
        return false;
    }
  }

  PartialTransformation gamma(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) {
      im[i] = n - i;
    }
    return PartialTransformation(im);
  }

  PartialTransformation cycle(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) {
      im[i] = (i + 1) % n + 1;
    }
    return PartialTransformation(im);
  }

  PartialTransformation zeta(int n) {
    std::vector<int> im(n, 0);
    for (int i = 1; i <= n - 2; ++i) {
      im[i - 1] = i + 1;
    }
    if (n >= 2) {
      im[n - 2] = 1;
    }
    return PartialTransformation(im);
  }

  PartialTransformation tau(int n) {
    std::vector<int> im(n, 0);
    for (int i = 1; i < n; ++i) {
      im[i - 1] = n - i;
    }
    return PartialTransformation(im);
  }

  namespace {
    std::vector<PartialTransformation> symmetric_generators(int n) {
      std::vector<PartialTransformation> out;
      if (n >= 2) {
        out.push_back(cycle(n));
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) {
          im[i] = i + 1;
        }
        std::swap(im[0], im[n - 1]);
        out.push_back(PartialTransformation(im));
      }
      return out;
    }

    PartialTransformation partial_identity_missing(int n, int i) {
      std::vector<int> im(n);
      for (int j = 0; j < n; ++j) {
        im[j] = j == i ? 0 : j + 1;
      }
      return PartialTransformation(im);
    }

    // Idempotents of O_n of rank n - 1: i -> i + 1 and i + 1 -> i.
    std::vector<PartialTransformation> o_idempotents(int n) {
      std::vector<PartialTransformation> out;
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> up(n), down(n);
        for (int j = 0; j < n; ++j) {
          up[j] = down[j] = j + 1;
        }
        up[i]       = i + 2;
        down[i + 1] = i + 1;
        out.emplace_back(up);
        out.emplace_back(down);
      }
      return out;
    }

    // Order-preserving partial permutations of rank n - 1.
    std::vector<PartialTransformation> poi_corank_one(int n) {
      std::vector<PartialTransformation> out;
      if (n < 2) {
        out.push_back(partial_identity_missing(n, 0));
        return out;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          std::vector<int> im(n, 0);
          int              v = 0;
          for (int x = 0; x < n; ++x) {
            if (x == i) {
              continue;
            }
            if (v == j) {
              ++v;
            }
            im[x] = ++v;
          }
          out.emplace_back(im);
        }
      }
      return out;
    }
  }  // namespace

  std::vector<PartialTransformation> transformation_generators(Family f, int n) {
    check_degree(n);
    std::vector<PartialTransformation> out{PartialTransformation::identity(n)};
    auto add = [&out](std::vector<PartialTransformation> const& xs) {
      out.insert(out.end(), xs.begin(), xs.end());
    };
    auto collapse = [n]() {
      std::vector<int> im(n);
      for (int j = 0; j < n; ++j) {
        im[j] = j + 1;
      }
      im[1] = 1;
      return PartialTransformation(im);
    };
    std::vector<PartialTransformation> partial_ids;
    for (int i = 0; i < n; ++i) {
      partial_ids.push_back(partial_identity_missing(n, i));
    }
    switch (f) {
      case Family::S:
        add(symmetric_generators(n));
        break;
      case Family::PT:
        add(symmetric_generators(n));
        if (n >= 2) {
          out.push_back(collapse());
        }
        out.push_back(partial_identity_missing(n, 0));
        break;
      case Family::T:
        add(symmetric_generators(n));
        if (n >= 2) {
          out.push_back(collapse());
        }
        break;
      case Family::I:
        add(symmetric_generators(n));
        out.push_back(partial_identity_missing(n, 0));
        break;
      case Family::O:
      case Family::OD:
      case Family::OP:
      case Family::OR:
      case Family::PO:
      case Family::POD:
      case Family::POP:
      case Family::POR:
        add(o_idempotents(n));
        if (f == Family::PO || f == Family::POD || f == Family::POP
            || f == Family::POR) {
          add(partial_ids);
        }
        if (f == Family::OD || f == Family::OR || f == Family::POD
            || f == Family::POR) {
          out.push_back(gamma(n));
        }
        if (f == Family::OP || f == Family::OR || f == Family::POP
            || f == Family::POR) {
          out.push_back(cycle(n));
        }
        break;
      case Family::POI:
      case Family::PODI:
      case Family::POPI:
      case Family::PORI:
        add(poi_corank_one(n));
        if (f == Family::PODI || f == Family::PORI) {
          out.push_back(gamma(n));
        }
        if (f == Family::POPI || f == Family::PORI) {
          out.push_back(cycle(n));
          out.push_back(zeta(n));
        }
        if (f == Family::PORI) {
          out.push_back(tau(n));
        }
        break;
      default:
        throw std::invalid_argument("not a transformation family");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<PartialTransformation> transformation_members(Family f, int n,
                                                            std::size_t cap) {
    check_degree(n);
    if (!is_transformation_family(f)) {
      throw std::invalid_argument("not a transformation family");
    }
    // Odometer over image tuples in increasing byte order; undefined (0xFF)
    // is the last digit value, so the output comes out sorted.
    std::vector<int> digit(n, 0);
    std::vector<int> im(n);
    std::vector<PartialTransformation> out;
    while (true) {
      for (int i = 0; i < n; ++i) {
        im[i] = digit[i] == n ? 0 : digit[i] + 1;
      }
      PartialTransformation a(im);
      if (family_membership(a, f)) {
        if (out.size() == cap) {
          throw CapacityError("elements", cap);
        }
        out.push_back(a);
      }
      int pos = n - 1;
      while (pos >= 0 && digit[pos] == n) {
        digit[pos] = 0;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++digit[pos];
    }
    return out;
  }

  std::string to_string(PartialTransformation const& a) {
    std::ostringstream top, bottom;
    for (std::size_t i = 0; i < a.degree(); ++i) {
      std::string t = std::to_string(i + 1);
      std::string b = a.defined(i) ? std::to_string(a[i] + 1) : "-";
      auto        w = std::max(t.size(), b.size());
      if (i > 0) {
        top << ' ';
        bottom << ' ';
      }
      top << std::string(w - t.size(), ' ') << t;
      bottom << std::string(w - b.size(), ' ') << b;
    }
    return top.str() + "\n" + bottom.str();
  }

  PartialTransformation parse_transformation(std::string const& text) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ';', '\n');
    std::istringstream       in(s);
    std::string              line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        rows.push_back(line);
      }
    }
    if (rows.size() != 2) {
      throw std::invalid_argument("expected a two-row matrix");
    }
    auto tokens = [](std::string const& row) {
      std::istringstream       r(row);
      std::vector<std::string> out;
      std::string              tok;
      while (r >> tok) {
        out.push_back(tok);
      }
      return out;
    };
    auto top = tokens(rows[0]);
    auto bot = tokens(rows[1]);
    if (top.size() != bot.size() || top.empty()) {
      throw std::invalid_argument("rows of different lengths");
    }
    std::vector<int> im(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (std::stoi(top[i]) != static_cast<int>(i) + 1) {
        throw std::invalid_argument("top row must be 1 .. n");
      }
      im[i] = bot[i] == "-" ? 0 : std::stoi(bot[i]);
    }
    return PartialTransformation(im);
  }

}  // namespace maxsemi
