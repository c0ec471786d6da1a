#pragma once

// The sumset operators on subsets of a finite abelian group:
//   hA      sums of h elements, repetition allowed
//   h^A     sums of h distinct elements
//   h(+-)A  sums  sum(l_i a_i)  with  sum |l_i| = h
//   Sigma A sums of all subsets (Sigma* A: nonempty subsets)
// and the set-level predicates built on them.

#include <string>
#include <string_view>
#include <vector>

#include "sumlab/group.hpp"

namespace sumlab {

enum class SumsetKind { fold, restricted, signed_ };

std::string_view to_string(SumsetKind kind);
/// Accepts "fold", "restricted", "signed".
SumsetKind parse_sumset_kind(std::string_view text);

/// Largest accepted fold count: max(order + |A|, kMinFoldCap).
inline constexpr int kMinFoldCap = 64;
int fold_cap(const GroupSpec& group, int set_size);

/// Fold counts above fold_cap are rejected with std::invalid_argument.
ElementSet h_fold_sumset(const GroupSpec& group, const ElementSet& set, int h);
ElementSet restricted_sumset(const GroupSpec& group, const ElementSet& set, int h);
ElementSet signed_sumset(const GroupSpec& group, const ElementSet& set, int h);
ElementSet sumset(const GroupSpec& group, const ElementSet& set, int h, SumsetKind kind);

/// Sigma A when include_empty, otherwise Sigma* A.
ElementSet sigma(const GroupSpec& group, const ElementSet& set, bool include_empty);
/// The subgroup generated by the set.
ElementSet span(const GroupSpec& group, const ElementSet& set);
/// A + B.
ElementSet set_sum(const GroupSpec& group, const ElementSet& a, const ElementSet& b);

enum class SymmetryClass { symmetric, near_symmetric, asymmetric, other };

std::string_view to_string(SymmetryClass cls);

bool is_symmetric(const GroupSpec& group, const ElementSet& set);
/// Not symmetric, but symmetric after removing one element.
bool is_near_symmetric(const GroupSpec& group, const ElementSet& set);
/// A and -A are disjoint.
bool is_asymmetric(const GroupSpec& group, const ElementSet& set);

/// First matching class in the order symmetric, near-symmetric, asymmetric.
/// Note a singleton {a} with 2a != 0 is near-symmetric by this priority.
SymmetryClass symmetry_class(const GroupSpec& group, const ElementSet& set);

/// Signed representatives of a subset of Z_p, p an odd prime.
struct SignedView {
  int prime = 0;
  std::vector<int> positives;  // representatives in [0, (p-1)/2]
  std::vector<int> negatives;  // representatives in [-(p-1)/2, -1]
  long norm = 0;               // sum of absolute values
  long positive_sum = 0;

  /// 1 + sum of positives; never in Sigma A when norm <= p - 2.
  long gap_witness() const { return 1 + positive_sum; }
};

SignedView signed_view(int p, const ElementSet& set);

}  // namespace sumlab
