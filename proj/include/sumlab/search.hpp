#pragma once

// Exhaustive, symmetry-reduced searches over the m-subsets of a group of
// order at most 64: minimum sumset sizes, critical numbers, sum-free maxima
// and structural classification of the extremal sets.
//
// Every answer is exact or refused. Orbit reduction only changes the cost:
// a reduction is accepted for an objective only if the objective value is
// constant on its orbits.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumlab/formulas.hpp"
#include "sumlab/group.hpp"
#include "sumlab/sumset.hpp"

namespace sumlab {

class SearchRefused : public std::runtime_error {
 public:
  SearchRefused(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  /// Estimated number of orbits (or candidates) that the search would visit.
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

class EmptySearchSpace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Reduction {
  automatic,  // the largest reduction valid for the objective
  none,
  translations,
  translations_negation,
  automorphisms,  // x -> b*x for units b of the exponent (includes negation)
  translations_automorphisms,
};

enum class SetFilter { all, symmetric, near_symmetric, asymmetric };

std::string_view to_string(Reduction r);
std::string_view to_string(SetFilter f);
SetFilter parse_set_filter(std::string_view text);
Reduction parse_reduction(std::string_view text);

struct SearchLimits {
  std::uint64_t budget = 50'000'000;  // maximum estimated orbit count
  std::size_t witness_cap = 10'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SearchTask {
  GroupSpec group;
  int m = 1;
  std::optional<int> h;  // unset: any number of terms
  SumsetKind kind = SumsetKind::fold;
  bool nonempty_sums = false;  // with kind restricted and h unset: Sigma* instead of Sigma
  SetFilter filter = SetFilter::all;
  Reduction reduction = Reduction::automatic;
  SearchLimits limits;
};

struct SearchResult {
  long value = 0;
  /// Minimizing orbit representatives, lexicographic, at most witness_cap.
  std::vector<ElementSet> witnesses;
  bool truncated = false;
  std::size_t witness_cap = 0;
  std::uint64_t representatives = 0;  // orbit representatives examined
  Reduction reduction = Reduction::none;
};

/// Minimum of |objective(A)| over m-subsets A passing the filter.
SearchResult min_size(const SearchTask& task);
SearchResult min_size_sigma(const GroupSpec& group, int m, bool include_empty,
                            SetFilter filter = SetFilter::all, SearchLimits limits = {});

/// The reduction that min_size would use for the task.
Reduction resolve_reduction(const SearchTask& task);

/// Orbit representatives (least member of each orbit), lexicographic.
std::vector<ElementSet> subset_stream(const GroupSpec& group, int m, Reduction reduction);
/// Visits orbit representatives until the callback returns false.
void for_each_representative(const GroupSpec& group, int m, Reduction reduction,
                             const std::function<bool(const ElementSet&)>& visit);
/// Every image of the set under the reduction's symmetry group, lexicographic.
std::vector<ElementSet> orbit(const GroupSpec& group, const ElementSet& set, Reduction reduction);
/// Least member of the orbit.
ElementSet canonical_form(const GroupSpec& group, const ElementSet& set, Reduction reduction);

struct CriticalResult {
  KnownValue value;
  /// A set of size value - 1 whose sumset misses part of the group.
  std::optional<ElementSet> witness;
};

CriticalResult critical_number(const GroupSpec& group, int h, SumsetKind kind,
                               SearchLimits limits = {});
/// Least m with Sigma A = G for every m-subset (of G \ {0} when exclude_zero).
CriticalResult critical_sigma(const GroupSpec& group, bool exclude_zero, SearchLimits limits = {});
/// Least m for which every m-subset generates G.
CriticalResult critical_span(const GroupSpec& group, SearchLimits limits = {});

struct CosetUnionProfile {
  int d = 0;
  int full_cosets = 0;
  int partial_cosets = 0;
  bool operator==(const CosetUnionProfile&) const = default;
};

struct WitnessClassification {
  bool is_ap = false;
  int ap_difference = 0;
  bool in_prime_coset = false;
  std::optional<CosetUnionProfile> coset_union_profile;
  bool is_cube = false;
  SymmetryClass symmetry = SymmetryClass::other;
};

WitnessClassification classify_witness(const GroupSpec& group, const ElementSet& set);
bool is_arithmetic_progression(const GroupSpec& group, const ElementSet& set, int* difference = nullptr);
bool in_prime_coset(const GroupSpec& group, const ElementSet& set);
bool is_cube(const GroupSpec& group, const ElementSet& set);
/// Proper divisor subgroup of Z_n with fewest partially filled cosets; ties
/// prefer more full cosets, then smaller d. Cyclic groups of composite order only.
std::optional<CosetUnionProfile> coset_union_profile(const GroupSpec& group, const ElementSet& set);

struct DilatedNorm {
  long value = 0;
  int best_b = 0;
};
/// min over b != 0 of the norm of b*A in Z_p; ties go to the smallest b.
DilatedNorm min_dilated_norm(int p, const ElementSet& set);

/// m-subsets of Z_p (up to dilation) with Sigma A != Z_p.
std::vector<ElementSet> sigma_noncovering_sets(int p, int m, SearchLimits limits = {});

struct SumFreeResult {
  int size = 0;
  std::vector<ElementSet> witnesses;
  bool truncated = false;
};
/// Largest A in Z_n with kA and lA disjoint.
SumFreeResult max_kl_sumfree(int n, int k, int l, SearchLimits limits = {});

}  // namespace sumlab
