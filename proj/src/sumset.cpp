#include "sumlab/sumset.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumlab/detail/kernels.hpp"
#include "sumlab/numeric.hpp"

namespace sumlab {

namespace {

struct WideOps {
  using Set = ElementSet;
  const GroupSpec& group;

  Set empty_set() const { return Set(group.order()); }
  Set zero_set() const { return Set(group.order(), {0}); }
  Set translate(const Set& s, int g) const { return sumlab::translate(group, s, g); }
  void merge(Set& into, const Set& from) const { into |= from; }
  bool is_empty(const Set& s) const { return s.empty(); }
  int add(int a, int b) const { return group.add(a, b); }
  int neg(int a) const { return group.negate(a); }
};

void check_fold_count(const GroupSpec& group, const ElementSet& set, int h) {
  if (h < 0) throw std::invalid_argument("fold count must be non-negative");
  if (h > fold_cap(group, set.size())) {
    throw std::invalid_argument("fold count " + std::to_string(h) + " exceeds cap " +
                                std::to_string(fold_cap(group, set.size())));
  }
}

void check_member(const GroupSpec& group, const ElementSet& set) {
  if (set.universe() != group.order()) throw std::invalid_argument("set does not belong to group");
}

}  // namespace

int fold_cap(const GroupSpec& group, int set_size) {
  return std::max(group.order() + set_size, kMinFoldCap);
}

std::string_view to_string(SumsetKind kind) {
  switch (kind) {
    case SumsetKind::fold: return "fold";
    case SumsetKind::restricted: return "restricted";
    case SumsetKind::signed_: return "signed";
  }
  return "?";
}

SumsetKind parse_sumset_kind(std::string_view text) {
  if (text == "fold") return SumsetKind::fold;
  if (text == "restricted") return SumsetKind::restricted;
  if (text == "signed") return SumsetKind::signed_;
  throw std::invalid_argument("unknown sumset kind '" + std::string(text) + "'");
}

ElementSet h_fold_sumset(const GroupSpec& group, const ElementSet& set, int h) {
  check_member(group, set);
  check_fold_count(group, set, h);
  auto elems = set.indices();
  return detail::fold_sumset(WideOps{group}, elems, h);
}

ElementSet restricted_sumset(const GroupSpec& group, const ElementSet& set, int h) {
  check_member(group, set);
  if (h < 0) throw std::invalid_argument("fold count must be non-negative");
  auto elems = set.indices();
  return detail::restricted_sumset(WideOps{group}, elems, h);
}

ElementSet signed_sumset(const GroupSpec& group, const ElementSet& set, int h) {
  check_member(group, set);
  check_fold_count(group, set, h);
  auto elems = set.indices();
  return detail::signed_sumset(WideOps{group}, elems, h);
}

ElementSet sumset(const GroupSpec& group, const ElementSet& set, int h, SumsetKind kind) {
  switch (kind) {
    case SumsetKind::fold: return h_fold_sumset(group, set, h);
    case SumsetKind::restricted: return restricted_sumset(group, set, h);
    case SumsetKind::signed_: return signed_sumset(group, set, h);
  }
  throw std::logic_error("unreachable");
}

ElementSet sigma(const GroupSpec& group, const ElementSet& set, bool include_empty) {
  check_member(group, set);
  auto elems = set.indices();
  auto [all, nonempty] = detail::subset_sums(WideOps{group}, elems);
  return include_empty ? all : nonempty;
}

ElementSet span(const GroupSpec& group, const ElementSet& set) {
  check_member(group, set);
  auto elems = set.indices();
  return detail::generated_subgroup(WideOps{group}, elems);
}

ElementSet set_sum(const GroupSpec& group, const ElementSet& a, const ElementSet& b) {
  ElementSet out(group.order());
  b.for_each([&](int y) { out |= translate(group, a, y); });
  return out;
}

std::string_view to_string(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::symmetric: return "symmetric";
    case SymmetryClass::near_symmetric: return "near_symmetric";
    case SymmetryClass::asymmetric: return "asymmetric";
    case SymmetryClass::other: return "other";
  }
  return "?";
}

bool is_symmetric(const GroupSpec& group, const ElementSet& set) {
  return negate_set(group, set) == set;
}

bool is_near_symmetric(const GroupSpec& group, const ElementSet& set) {
  if (is_symmetric(group, set)) return false;
  bool found = false;
  set.for_each([&](int a) {
    if (found) return;
    ElementSet rest = set;
    rest.erase(a);
    found = is_symmetric(group, rest);
  });
  return found;
}

bool is_asymmetric(const GroupSpec& group, const ElementSet& set) {
  return !negate_set(group, set).intersects(set);
}

SymmetryClass symmetry_class(const GroupSpec& group, const ElementSet& set) {
  if (is_symmetric(group, set)) return SymmetryClass::symmetric;
  if (is_near_symmetric(group, set)) return SymmetryClass::near_symmetric;
  if (is_asymmetric(group, set)) return SymmetryClass::asymmetric;
  return SymmetryClass::other;
}

SignedView signed_view(int p, const ElementSet& set) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("signed view needs an odd prime modulus, got " + std::to_string(p));
  }
  if (set.universe() != p) throw std::invalid_argument("set is not a subset of Z_p");
  SignedView view;
  view.prime = p;
  const int half = (p - 1) / 2;
  set.for_each([&](int x) {
    if (x <= half) {
      view.positives.push_back(x);
      view.positive_sum += x;
      view.norm += x;
    } else {
      view.negatives.push_back(x - p);
      view.norm += p - x;
    }
  });
  return view;
}

}  // namespace sumlab
