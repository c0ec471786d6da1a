#include "sumlab/detail/mask_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumlab::detail {

MaskGroup::MaskGroup(const GroupSpec& group) : spec_(group), n_(group.order()) {
  if (n_ > kMaskOrder) throw std::invalid_argument("group order exceeds the 64-element search cap");
  full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;

  const auto& factors = group.invariant_factors();
  recipes_.resize(static_cast<std::size_t>(n_));
  for (int g = 0; g < n_; ++g) {
    Recipe& r = recipes_[static_cast<std::size_t>(g)];
    for (int i = 0; i < group.rank(); ++i) {
      const int digit = group.residue(g, i);
      if (digit == 0) continue;
      const int block = factors[static_cast<std::size_t>(i)] * group.weight(i);
      const int shift = digit * group.weight(i);
      Rotation rot;
      rot.shift = shift;
      rot.back = block - shift;
      for (int pos = 0; pos < n_; ++pos) {
        if (pos % block >= shift) {
          rot.hi |= Mask{1} << pos;
        } else {
          rot.lo |= Mask{1} << pos;
        }
      }
      r.steps[static_cast<std::size_t>(r.count++)] = rot;
    }
  }

  add_.resize(static_cast<std::size_t>(n_ * n_));
  neg_.resize(static_cast<std::size_t>(n_));
  neg_perm_.resize(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) {
    neg_[static_cast<std::size_t>(a)] = group.negate(a);
    neg_perm_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(group.negate(a));
    for (int b = 0; b < n_; ++b) add_[static_cast<std::size_t>(a * n_ + b)] = group.add(a, b);
  }

  const int e = group.exponent();
  for (int b = 1; b < std::max(e, 2); ++b) {
    if (std::gcd(b, e) != 1) continue;
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) perm[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(group.scale(b, x));
    dilations_.push_back(std::move(perm));
  }
  signs_.push_back(dilations_.front());
  if (e > 2) signs_.push_back(neg_perm_);
}

Mask MaskGroup::from_set(const ElementSet& set) {
  if (set.universe() > kMaskOrder) throw std::invalid_argument("set too large for a mask");
  return set.universe() == 0 ? 0 : set.words()[0];
}

ElementSet MaskGroup::to_set(Mask x) const {
  ElementSet s(n_);
  if (n_ > 0) s.words()[0] = x;
  return s;
}

}  // namespace sumlab::detail
