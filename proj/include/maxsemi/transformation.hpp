#ifndef MAXSEMI_TRANSFORMATION_HPP_
#define MAXSEMI_TRANSFORMATION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "maxsemi/family.hpp"

namespace maxsemi {

  /// Bit flags returned by classify_predicates.
  enum TransformationFlag : std::uint8_t {
    kOrderPreserving       = 1 << 0,
    kOrderReversing        = 1 << 1,
    kOrientationPreserving = 1 << 2,
    kOrientationReversing  = 1 << 3,
    kPartialPerm           = 1 << 4,
    kTotal                 = 1 << 5
  };

  /// A partial map of {0, ..., n - 1}; points are 0-based internally and
  /// 1-based in every textual form.
  class PartialTransformation {
   public:
    static constexpr std::size_t  max_degree = 16;
    static constexpr std::uint8_t undefined  = 0xFF;

    PartialTransformation() = default;

    /// One-line notation with 1-based images and 0 for undefined points.
    explicit PartialTransformation(std::vector<int> const& images);

    static PartialTransformation identity(int n);

    std::size_t degree() const noexcept {
      return degree_;
    }

    /// 0-based image of the 0-based point i, or undefined.
    std::uint8_t operator[](std::size_t i) const noexcept {
      return images_[i];
    }

    bool defined(std::size_t i) const noexcept {
      return images_[i] != undefined;
    }

    /// Bitmask of defined points.
    std::uint32_t dom() const noexcept;
    /// Bitmask of image points.
    std::uint32_t im() const noexcept;
    std::size_t   rank() const noexcept;

    /// Kernel labels: -1 off the domain, else the index of the kernel class
    /// in order of first appearance.
    std::vector<int> kernel() const;

    std::uint8_t flags() const noexcept {
      return flags_;
    }

    bool is_partial_perm() const noexcept {
      return flags_ & kPartialPerm;
    }

    bool is_total() const noexcept {
      return flags_ & kTotal;
    }

    /// Inverse of a partial permutation.
    PartialTransformation inverse() const;

    std::vector<int> one_line() const;

    auto operator<=>(PartialTransformation const& that) const noexcept {
      return std::lexicographical_compare_three_way(
          images_.begin(), images_.begin() + degree_, that.images_.begin(),
          that.images_.begin() + that.degree_);
    }

    bool operator==(PartialTransformation const& that) const noexcept {
      return degree_ == that.degree_ && images_ == that.images_;
    }

    std::size_t hash() const noexcept;

    friend PartialTransformation compose(PartialTransformation const&,
                                         PartialTransformation const&);

   private:
    void set_flags() noexcept;

    std::array<std::uint8_t, max_degree> images_{};
    std::uint8_t                         degree_ = 0;
    std::uint8_t                         flags_  = 0;
  };

  /// a then b: i(ab) = (ia)b.
  PartialTransformation compose(PartialTransformation const& a,
                                PartialTransformation const& b);

  inline PartialTransformation operator*(PartialTransformation const& a,
                                         PartialTransformation const& b) {
    return compose(a, b);
  }

  std::uint8_t classify_predicates(PartialTransformation const& a) noexcept;

  bool family_membership(PartialTransformation const& a, Family f);

  /// i -> n - i + 1.
  PartialTransformation gamma(int n);
  /// (1 2 ... n).
  PartialTransformation cycle(int n);
  /// 1 -> 2, ..., n - 2 -> n - 1, n - 1 -> 1, n undefined.
  PartialTransformation zeta(int n);
  /// i -> n - i for i < n, n undefined.
  PartialTransformation tau(int n);

  /// A generating set of the family at degree n.
  std::vector<PartialTransformation> transformation_generators(Family f, int n);

  /// Every member of the family, in increasing order.
  std::vector<PartialTransformation> transformation_members(Family f, int n,
                                                            std::size_t cap);

  /// Two-row matrix, e.g. "1 2 3\n2 - 1".
  std::string to_string(PartialTransformation const& a);

  /// Parses the two-row matrix; rows are separated by a newline or ';'.
  PartialTransformation parse_transformation(std::string const& text);

}  // namespace maxsemi

template <>
struct std::hash<maxsemi::PartialTransformation> {
  std::size_t operator()(maxsemi::PartialTransformation const& a) const noexcept {
    return a.hash();
  }
};

#endif  // MAXSEMI_TRANSFORMATION_HPP_
