#include "maxsemi/monoid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace maxsemi {

  std::vector<index_t> members(ElementSet const& s) {
    std::vector<index_t> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
      out.push_back(static_cast<index_t>(i));
    }
    return out;
  }

  namespace {
    template <typename Element>
    bool by_rank_then_form(Element const& a, Element const& b) {
      auto ra = a.rank(), rb = b.rank();
      if (ra != rb) {
        return ra > rb;
      }
      return a < b;
    }

    template <typename Element>
    Element identity_of(std::size_t n) {
      return Element::identity(static_cast<int>(n));
    }

    template <typename Element>
    std::optional<Element> star_of(Element const& x) {
      if constexpr (std::is_same_v<Element, Partition>) {
        return x.star();
      } else {
        if (!x.is_partial_perm()) {
          return std::nullopt;
        }
        return x.inverse();
      }
    }
  }  // namespace

  template <typename Element>
  FiniteMonoid FiniteMonoid::build(std::vector<Element>                 elements,
                                   std::vector<Element> const&          gens,
                                   std::optional<FamilyInstance> const& inst,
                                   Budgets const&                       budgets) {
    std::sort(elements.begin(), elements.end(), by_rank_then_form<Element>);
    FiniteMonoid M;
    M.size_     = elements.size();
    M.degree_   = static_cast<int>(elements.front().degree());
    M.instance_ = inst;
    detail::Store<Element> store;
    store.index.reserve(elements.size() * 2);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      store.index.emplace(elements[i], static_cast<index_t>(i));
    }
    store.elements = std::move(elements);
    if (!(store.elements.front() == identity_of<Element>(M.degree_))) {
      throw std::logic_error("identity missing from monoid");
    }
    M.ranks_.resize(M.size_);
    for (std::size_t i = 0; i < M.size_; ++i) {
      M.ranks_[i] = static_cast<std::uint8_t>(store.elements[i].rank());
    }
    for (auto const& g : gens) {
      auto it = store.index.find(g);
      if (it == store.index.end()) {
        throw std::logic_error("generator outside the monoid");
      }
      M.generators_.push_back(it->second);
    }
    std::sort(M.generators_.begin(), M.generators_.end());
    M.generators_.erase(std::unique(M.generators_.begin(), M.generators_.end()),
                        M.generators_.end());
    std::vector<index_t> star(M.size_);
    bool                 closed = true;
    for (std::size_t i = 0; i < M.size_ && closed; ++i) {
      auto s = star_of(store.elements[i]);
      if (!s) {
        closed = false;
        break;
      }
      auto it = store.index.find(*s);
      if (it == store.index.end()) {
        closed = false;
      } else {
        star[i] = it->second;
      }
    }
    if (closed) {
      M.star_ = std::move(star);
    }
    M.store_ = std::move(store);
    if (M.size_ * M.size_ <= budgets.table_entries) {
      std::vector<index_t> table(M.size_ * M.size_);
      auto const&          st = std::get<detail::Store<Element>>(M.store_);
      for (std::size_t a = 0; a < M.size_; ++a) {
        for (std::size_t b = 0; b < M.size_; ++b) {
          auto it = st.index.find(st.elements[a] * st.elements[b]);
          if (it == st.index.end()) {
            throw std::logic_error("element set not closed under the product");
          }
          table[a * M.size_ + b] = it->second;
        }
      }
      M.table_ = std::move(table);
    }
    return M;
  }

  template <typename Element>
  FiniteMonoid FiniteMonoid::close_under(std::vector<Element> const& gens,
                                         Budgets const&              budgets) {
    if (gens.empty()) {
      throw std::invalid_argument("closure needs at least one generator");
    }
    std::size_t const n = gens.front().degree();
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw std::invalid_argument("generators of different degrees");
      }
    }
    std::vector<Element>        elements{identity_of<Element>(n)};
    std::unordered_set<Element> seen{elements.front()};
    for (auto const& g : gens) {
      if (seen.insert(g).second) {
        elements.push_back(g);
      }
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : gens) {
        Element y = elements[i] * g;
        if (seen.insert(y).second) {
          if (elements.size() == budgets.elements) {
            throw CapacityError("elements", budgets.elements);
          }
          elements.push_back(y);
        }
      }
    }
    return build(std::move(elements), gens, std::nullopt, budgets);
  }

  FiniteMonoid FiniteMonoid::enumerate(Family f, int n, Budgets const& budgets) {
    if (n < 1) {
      throw std::invalid_argument("degree must be at least 1");
    }
    FamilyInstance inst{f, n};
    if (is_transformation_family(f)) {
      return build(transformation_members(f, n, budgets.elements),
                   transformation_generators(f, n), inst, budgets);
    }
    return build(diagram_members(f, n, budgets.elements), diagram_generators(f, n),
                 inst, budgets);
  }

  FiniteMonoid FiniteMonoid::closure(std::vector<PartialTransformation> const& gens,
                                     Budgets const&                            budgets) {
    return close_under(gens, budgets);
  }

  FiniteMonoid FiniteMonoid::closure(std::vector<Partition> const& gens,
                                     Budgets const&                budgets) {
    return close_under(gens, budgets);
  }

  std::string FiniteMonoid::name() const {
    if (instance_) {
      return to_string(*instance_);
    }
    return "custom_" + std::to_string(degree_);
  }

  index_t FiniteMonoid::product(index_t a, index_t b) const {
    if (!table_.empty()) {
      return table_[std::size_t(a) * size_ + b];
    }
    return std::visit(
        [a, b](auto const& st) -> index_t {
          auto it = st.index.find(st.elements[a] * st.elements[b]);
          if (it == st.index.end()) {
            throw std::logic_error("product left the monoid");
          }
          return it->second;
        },
        store_);
  }

  std::optional<index_t> FiniteMonoid::find(PartialTransformation const& x) const {
    if (auto const* st = std::get_if<detail::Store<PartialTransformation>>(&store_)) {
      auto it = st->index.find(x);
      if (it != st->index.end()) {
        return it->second;
      }
    }
    return std::nullopt;
  }

  std::optional<index_t> FiniteMonoid::find(Partition const& x) const {
    if (auto const* st = std::get_if<detail::Store<Partition>>(&store_)) {
      auto it = st->index.find(x);
      if (it != st->index.end()) {
        return it->second;
      }
    }
    return std::nullopt;
  }

  PartialTransformation const& FiniteMonoid::transformation(index_t i) const {
    return std::get<detail::Store<PartialTransformation>>(store_).elements.at(i);
  }

  Partition const& FiniteMonoid::partition(index_t i) const {
    return std::get<detail::Store<Partition>>(store_).elements.at(i);
  }

  std::string FiniteMonoid::element_string(index_t i) const {
    // One line: two-row transformations are joined with "; ", which the
    // parser accepts.
    auto s = std::visit([i](auto const& st) { return to_string(st.elements.at(i)); }, store_);
    if (auto nl = s.find('\n'); nl != std::string::npos) {
      s.replace(nl, 1, "; ");
    }
    return s;
  }

}  // namespace maxsemi
