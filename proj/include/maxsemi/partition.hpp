#ifndef MAXSEMI_PARTITION_HPP_
#define MAXSEMI_PARTITION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "maxsemi/family.hpp"
#include "maxsemi/transformation.hpp"

namespace maxsemi {

  enum PartitionFlag : std::uint8_t {
    kPlanar         = 1 << 0,
    kAnnular        = 1 << 1,
    kBlocksAtMost2  = 1 << 2,
    kBlocksExactly2 = 1 << 3,
    kBlockBijection = 1 << 4,
    kUniform        = 1 << 5
  };

  /// An equivalence on {1, ..., n} u {1', ..., n'}.  Point p < n stands for
  /// p + 1 and point n + i for (i + 1)'.  Blocks are numbered by first
  /// appearance in that order.
  class Partition {
   public:
    static constexpr std::size_t max_degree = 16;

    Partition() = default;

    /// Blocks of signed points: i > 0 is i, i < 0 is |i|'.
    static Partition from_blocks(int n, std::vector<std::vector<int>> const& blocks);

    /// Any labelling of the 2n points; relabelled canonically.
    static Partition from_labels(int n, std::vector<int> const& labels);

    static Partition identity(int n);

    std::size_t degree() const noexcept {
      return degree_;
    }

    std::size_t block_count() const noexcept {
      return block_count_;
    }

    std::uint8_t block_of(std::size_t point) const noexcept {
      return block_of_[point];
    }

    /// Signed blocks in canonical order.
    std::vector<std::vector<int>> blocks() const;

    std::size_t rank() const noexcept;
    /// Bitmask of i with i in a transverse block.
    std::uint32_t dom() const noexcept;
    /// Bitmask of i with i' in a transverse block.
    std::uint32_t codom() const noexcept;
    /// Restriction to {1, ..., n}, as first-appearance labels.
    std::vector<int> ker() const;
    /// Restriction to {1', ..., n'}, as first-appearance labels.
    std::vector<int> coker() const;

    Partition star() const;

    auto operator<=>(Partition const& that) const noexcept {
      return std::lexicographical_compare_three_way(
          block_of_.begin(), block_of_.begin() + 2 * degree_,
          that.block_of_.begin(), that.block_of_.begin() + 2 * that.degree_);
    }

    bool operator==(Partition const& that) const noexcept {
      return degree_ == that.degree_ && block_of_ == that.block_of_;
    }

    std::size_t hash() const noexcept;

    friend Partition multiply(Partition const&, Partition const&);

   private:
    void canonicalize() noexcept;

    std::array<std::uint8_t, 2 * max_degree> block_of_{};
    std::uint8_t                             degree_      = 0;
    std::uint8_t                             block_count_ = 0;
  };

  Partition multiply(Partition const& a, Partition const& b);

  inline Partition operator*(Partition const& a, Partition const& b) {
    return multiply(a, b);
  }

  inline Partition star(Partition const& a) {
    return a.star();
  }

  bool is_planar(Partition const& a);
  bool is_annular(Partition const& a);

  std::uint8_t classify_predicates(Partition const& a);

  bool family_membership(Partition const& a, Family f);

  /// Blocks {n, 1'} and {i, (i + 1)'}.
  Partition rho(int n);
  /// Jones projection with blocks {i, i + 1} and {i', (i + 1)'} (1-based i).
  Partition jones_projection(int n, int i);

  Partition embed_partial_perm(PartialTransformation const& t);

  std::vector<Partition> diagram_generators(Family f, int n);

  /// Every member of the family, in increasing order.
  std::vector<Partition> diagram_members(Family f, int n, std::size_t cap);

  /// Block notation, e.g. "{1,2'},{2,1'},{3,3'}".
  std::string to_string(Partition const& a);

  /// Parses block notation; the degree is the largest point mentioned unless
  /// given explicitly.
  Partition parse_partition(std::string const& text, int degree = 0);

}  // namespace maxsemi

template <>
struct std::hash<maxsemi::Partition> {
  std::size_t operator()(maxsemi::Partition const& a) const noexcept {
    return a.hash();
  }
};

#endif  // MAXSEMI_PARTITION_HPP_
