#pragma once

// Single-word representation of subsets for groups of order <= 64, used by
// the exhaustive searches. Translation by g is a product of block rotations,
// one per invariant factor, so it costs a handful of word operations.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "sumlab/group.hpp"

namespace sumlab::detail {

using Mask = std::uint64_t;

inline constexpr int kMaskOrder = 64;

/// Lexicographic order of ascending member lists.
inline bool mask_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

class MaskGroup {
 public:
  explicit MaskGroup(const GroupSpec& group);

  const GroupSpec& spec() const { return spec_; }
  int order() const { return n_; }
  Mask full() const { return full_; }

  Mask translate(Mask x, int g) const {
    const Recipe& r = recipes_[static_cast<std::size_t>(g)];
    for (int i = 0; i < r.count; ++i) {
      const Rotation& rot = r.steps[static_cast<std::size_t>(i)];
      x = ((x << rot.shift) & rot.hi) | ((x >> rot.back) & rot.lo);
    }
    return x;
  }

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * n_ + b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }

  /// Image of x under an element permutation.
  Mask map(const std::vector<std::uint8_t>& perm, Mask x) const {
    Mask out = 0;
    while (x != 0) {
      out |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(x))];
      x &= x - 1;
    }
    return out;
  }

  /// x -> -x
  Mask negate(Mask x) const { return map(neg_perm_, x); }

  /// Permutations x -> b*x for every unit b modulo the exponent; identity first.
  const std::vector<std::vector<std::uint8_t>>& unit_dilations() const { return dilations_; }
  /// Only the identity and negation (negation omitted when it is trivial).
  const std::vector<std::vector<std::uint8_t>>& sign_maps() const { return signs_; }

  static Mask from_set(const ElementSet& set);
  ElementSet to_set(Mask x) const;

 private:
  struct Rotation {
    int shift = 0;
    int back = 0;
    Mask hi = 0;
    Mask lo = 0;
  };
  struct Recipe {
    std::array<Rotation, 6> steps{};
    int count = 0;
  };

  GroupSpec spec_;
  int n_ = 0;
  Mask full_ = 0;
  std::vector<Recipe> recipes_;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<std::uint8_t> neg_perm_;
  std::vector<std::vector<std::uint8_t>> dilations_;
  std::vector<std::vector<std::uint8_t>> signs_;
};

/// Kernel policy over single-word masks.
struct MaskOps {
  using Set = Mask;
  const MaskGroup& group;

  Set empty_set() const { return 0; }
  Set zero_set() const { return 1; }
  Set translate(Set s, int g) const { return group.translate(s, g); }
  void merge(Set& into, Set from) const { into |= from; }
  bool is_empty(Set s) const { return s == 0; }
  int add(int a, int b) const { return group.add(a, b); }
  int neg(int a) const { return group.neg(a); }
};

/// Members of a mask as ascending indices, written into out; returns count.
inline int mask_elements(Mask x, std::array<int, 64>& out) {
  int count = 0;
  while (x != 0) {
    out[static_cast<std::size_t>(count++)] = std::countr_zero(x);
    x &= x - 1;
  }
  return count;
}

}  // namespace sumlab::detail
