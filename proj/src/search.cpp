#include "sumlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "sumlab/detail/kernels.hpp"
#include "sumlab/detail/mask_group.hpp"
#include "sumlab/numeric.hpp"

namespace sumlab {

namespace {

using detail::Mask;
using detail::mask_less;
using detail::MaskGroup;
using Perm = std::vector<std::uint8_t>;

Mask bit(int i) { return Mask{1} << i; }

struct PascalTable {
  std::uint64_t c[65][65] = {};
  PascalTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
};

std::uint64_t choose(int n, int k) {
  static const PascalTable table;
  if (k < 0 || n < 0 || k > n) return 0;
  return table.c[n][k];
}

bool uses_translations(Reduction r) {
  return r == Reduction::translations || r == Reduction::translations_negation ||
         r == Reduction::translations_automorphisms;
}

// ---------------------------------------------------------------------------
// Objectives on masks

enum class Objective { fold, restricted, signed_, span, sigma, sigma_star };

struct MaskObjective {
  const MaskGroup& g;
  Objective kind;
  int h = 0;

  Mask image(Mask set) const {
    std::array<int, 64> buf{};
    const int k = detail::mask_elements(set, buf);
    const std::span<const int> elems(buf.data(), static_cast<std::size_t>(k));
    const detail::MaskOps ops{g};
    switch (kind) {
      case Objective::fold: return detail::fold_sumset(ops, elems, h);
      case Objective::restricted: {
        if (h > k) return 0;
        if (2 * h <= k) return detail::restricted_sumset(ops, elems, h);
        // h^A = sigma(A) - (k-h)^A
        int total = 0;
        for (int a : elems) total = g.add(total, a);
        return g.translate(g.negate(detail::restricted_sumset(ops, elems, k - h)), total);
      }
      case Objective::signed_: return detail::signed_sumset(ops, elems, h);
      case Objective::span: return detail::generated_subgroup(ops, elems);
      case Objective::sigma: return detail::subset_sums(ops, elems).first;
      case Objective::sigma_star: return detail::subset_sums(ops, elems).second;
    }
    return 0;
  }

  long size(Mask set) const { return std::popcount(image(set)); }
};

bool passes(const MaskGroup& g, SetFilter filter, Mask set) {
  if (filter == SetFilter::all) return true;
  const Mask neg = g.negate(set);
  switch (filter) {
    case SetFilter::symmetric: return neg == set;
    // exactly one element whose negative is missing
    case SetFilter::near_symmetric: return std::popcount(set & ~neg) == 1;
    case SetFilter::asymmetric: return (set & neg) == 0;
    case SetFilter::all: break;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Orbit representatives

class Enumerator {
 public:
  Enumerator(const MaskGroup& g, int m, Reduction reduction, bool exclude_zero) : g_(g) {
    translations_ = uses_translations(reduction) && m >= 1;
    const std::vector<Perm>* maps = nullptr;
    if (reduction == Reduction::automorphisms || reduction == Reduction::translations_automorphisms) {
      maps = &g.unit_dilations();
    } else if (reduction == Reduction::translations_negation) {
      maps = &g.sign_maps();
    }
    if (maps != nullptr) {
      for (std::size_t i = 1; i < maps->size(); ++i) others_.push_back(&(*maps)[i]);
    }
    const int n = g.order();
    if (translations_) {
      fixed_ = 1;
      offset_ = 1;
      free_ = n - 1;
      pick_ = m - 1;
    } else {
      offset_ = exclude_zero ? 1 : 0;
      free_ = exclude_zero ? n - 1 : n;
      pick_ = m;
    }
    total_ = choose(free_, pick_);
    const std::uint64_t unreduced = choose(exclude_zero ? n - 1 : n, m);
    const std::uint64_t symmetries =
        static_cast<std::uint64_t>(others_.size() + 1) * static_cast<std::uint64_t>(translations_ ? n : 1);
    estimate_ = unreduced == 0 ? 0 : (unreduced + symmetries - 1) / symmetries;
  }

  std::uint64_t candidates() const { return total_; }
  std::uint64_t orbit_estimate() const { return estimate_; }

  bool canonical(Mask set) const {
    if (translations_) {
      for (Mask rest = set & ~Mask{1}; rest != 0; rest &= rest - 1) {
        const int a = std::countr_zero(rest);
        if (mask_less(g_.translate(set, g_.neg(a)), set)) return false;
      }
      for (const Perm* phi : others_) {
        const Mask image = g_.map(*phi, set);
        for (Mask rest = image; rest != 0; rest &= rest - 1) {
          const int a = std::countr_zero(rest);
          if (mask_less(g_.translate(image, g_.neg(a)), set)) return false;
        }
      }
      return true;
    }
    for (const Perm* phi : others_) {
      if (mask_less(g_.map(*phi, set), set)) return false;
    }
    return true;
  }

  /// Calls visit(rep) for the canonical candidates with colex rank in
  /// [begin, end), in rank order, until visit returns false.
  template <class Visit>
  void scan(std::uint64_t begin, std::uint64_t end, Visit&& visit) const {
    if (begin >= end) return;
    Mask combo = unrank(begin);
    for (std::uint64_t r = begin;;) {
      const Mask set = fixed_ | (combo << offset_);
      if (canonical(set) && !visit(set)) return;
      if (++r == end) return;
      combo = next(combo);
    }
  }

 private:
  Mask unrank(std::uint64_t rank) const {
    Mask x = 0;
    int c = free_ - 1;
    for (int i = pick_; i >= 1; --i) {
      while (choose(c, i) > rank) --c;
      x |= bit(c);
      rank -= choose(c, i);
      --c;
    }
    return x;
  }

  // Next mask with the same popcount (colex successor).
  static Mask next(Mask x) {
    const Mask low = x & (~x + 1);
    const Mask ripple = x + low;
    return (((ripple ^ x) >> 2) >> std::countr_zero(x)) | ripple;
  }

  const MaskGroup& g_;
  bool translations_ = false;
  std::vector<const Perm*> others_;
  Mask fixed_ = 0;
  int offset_ = 0;
  int free_ = 0;
  int pick_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t estimate_ = 0;
};

// ---------------------------------------------------------------------------
// Chunked scanning

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(worker, chunk, begin, end) over [0, total). Chunks are handed
/// out in increasing order; chunks above *cutoff are skipped.
template <class Body>
void for_chunks(std::uint64_t total, unsigned threads, const std::atomic<std::uint64_t>* cutoff,
                Body&& body) {
  if (total == 0) return;
  if (threads <= 1 || total < 4096) {
    body(0U, std::uint64_t{0}, std::uint64_t{0}, total);
    return;
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (std::uint64_t{threads} * 64));
  const std::uint64_t count = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next_chunk{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          while (true) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= count) break;
            if (cutoff != nullptr && c > cutoff->load()) break;
            body(w, c, c * chunk, std::min(total, (c + 1) * chunk));
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Least value seen plus the lexicographically smallest witnesses attaining it.
struct MinTracker {
  long best = LONG_MAX;
  std::vector<Mask> witnesses;
  bool truncated = false;
  std::uint64_t representatives = 0;
  std::size_t cap = 0;

  void offer(long value, Mask set) {
    if (value > best) return;
    if (value < best) {
      best = value;
      witnesses.clear();
      truncated = false;
    }
    witnesses.push_back(set);
    if (witnesses.size() >= 2 * cap + 256) compact();
  }

  void compact() {
    std::sort(witnesses.begin(), witnesses.end(), mask_less);
    if (witnesses.size() > cap) {
      witnesses.resize(cap);
      truncated = true;
    }
  }

  void absorb(MinTracker& other) {
    representatives += other.representatives;
    if (other.best > best) return;
    if (other.best < best) {
      best = other.best;
      witnesses = std::move(other.witnesses);
      truncated = other.truncated;
      return;
    }
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    truncated = truncated || other.truncated;
  }
};

/// value(rep) returns LONG_MAX for representatives that are filtered out.
template <class Value>
MinTracker scan_min(const Enumerator& e, unsigned threads, std::size_t cap, Value&& value) {
  threads = resolve_threads(threads);
  std::vector<MinTracker> local(threads);
  for (auto& t : local) t.cap = cap;
  for_chunks(e.candidates(), threads, nullptr,
             [&](unsigned w, std::uint64_t, std::uint64_t begin, std::uint64_t end) {
               MinTracker& t = local[w];
               e.scan(begin, end, [&](Mask set) {
                 ++t.representatives;
                 const long v = value(set);
                 if (v != LONG_MAX) t.offer(v, set);
                 return true;
               });
             });
  MinTracker total;
  total.cap = cap;
  for (auto& t : local) total.absorb(t);
  total.compact();
  return total;
}

/// First representative in enumeration order satisfying pred.
template <class Pred>
std::optional<Mask> scan_first(const Enumerator& e, unsigned threads, Pred&& pred) {
  threads = resolve_threads(threads);
  std::atomic<std::uint64_t> cutoff{UINT64_MAX};
  std::mutex mutex;
  std::optional<Mask> found;
  std::uint64_t found_chunk = UINT64_MAX;
  for_chunks(e.candidates(), threads, &cutoff,
             [&](unsigned, std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
               std::optional<Mask> hit;
               e.scan(begin, end, [&](Mask set) {
                 if (cutoff.load(std::memory_order_relaxed) < chunk) return false;
                 if (pred(set)) {
                   hit = set;
                   return false;
                 }
                 return true;
               });
               if (!hit) return;
               std::lock_guard lock(mutex);
               if (chunk < found_chunk) {
                 found_chunk = chunk;
                 found = hit;
                 cutoff.store(chunk);
               }
             });
  return found;
}

void check_budget(const Enumerator& e, const SearchLimits& limits, const std::string& what) {
  if (e.orbit_estimate() > limits.budget) {
    throw SearchRefused(what + ": about " + std::to_string(e.orbit_estimate()) +
                            " orbits exceed the budget of " + std::to_string(limits.budget),
                        e.orbit_estimate());
  }
}

Objective objective_of(const SearchTask& task) {
  if (!task.h) {
    if (task.kind == SumsetKind::restricted) return task.nonempty_sums ? Objective::sigma_star : Objective::sigma;
    return Objective::span;
  }
  switch (task.kind) {
    case SumsetKind::fold: return Objective::fold;
    case SumsetKind::restricted: return Objective::restricted;
    case SumsetKind::signed_: return Objective::signed_;
  }
  return Objective::fold;
}

bool translation_invariant(Objective obj) { return obj == Objective::fold || obj == Objective::restricted; }

std::vector<ElementSet> to_sets(const MaskGroup& g, const std::vector<Mask>& masks) {
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (Mask x : masks) out.push_back(g.to_set(x));
  return out;
}

/// Ascending scan for the least m at which no m-subset of the universe is
/// "open"; open sets form a down-set, so a witness at m - 1 is usually
/// extended by one element instead of searching again.
template <class Open>
CriticalResult ascending_critical(const MaskGroup& g, Mask universe, bool exclude_zero, Reduction reduction,
                                  const SearchLimits& limits, const std::string& label, Open&& open) {
  if (open(universe)) return {KnownValue::undefined("search"), std::nullopt};
  Mask witness = 0;
  if (!open(witness)) return {KnownValue::exact(0, "search"), std::nullopt};
  const int top = std::popcount(universe);
  for (int m = 1; m <= top; ++m) {
    std::optional<Mask> next;
    for (Mask rest = universe & ~witness; rest != 0; rest &= rest - 1) {
      const Mask candidate = witness | (rest & (~rest + 1));
      if (open(candidate)) {
        next = candidate;
        break;
      }
    }
    if (!next) {
      Enumerator e(g, m, reduction, exclude_zero);
      check_budget(e, limits, label + " at m = " + std::to_string(m));
      next = scan_first(e, limits.threads, open);
    }
    if (!next) return {KnownValue::exact(m, "search"), g.to_set(witness)};
    witness = *next;
  }
  return {KnownValue::undefined("search"), std::nullopt};
}

void check_search_group(const GroupSpec& group) {
  if (group.order() > detail::kMaskOrder) {
    throw SearchRefused("exhaustive search supports groups of order at most 64, got " + group.to_string(),
                        choose(64, 32));
  }
}

}  // namespace

std::string_view to_string(Reduction r) {
  switch (r) {
    case Reduction::automatic: return "auto";
    case Reduction::none: return "none";
    case Reduction::translations: return "translations";
    case Reduction::translations_negation: return "translations+negation";
    case Reduction::automorphisms: return "automorphisms";
    case Reduction::translations_automorphisms: return "translations+automorphisms";
  }
  return "?";
}

std::string_view to_string(SetFilter f) {
  switch (f) {
    case SetFilter::all: return "all";
    case SetFilter::symmetric: return "symmetric";
    case SetFilter::near_symmetric: return "near-symmetric";
    case SetFilter::asymmetric: return "asymmetric";
  }
  return "?";
}

SetFilter parse_set_filter(std::string_view text) {
  for (SetFilter f : {SetFilter::all, SetFilter::symmetric, SetFilter::near_symmetric, SetFilter::asymmetric}) {
    if (text == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown set filter '" + std::string(text) + "'");
}

Reduction parse_reduction(std::string_view text) {
  for (Reduction r : {Reduction::automatic, Reduction::none, Reduction::translations,
                      Reduction::translations_negation, Reduction::automorphisms,
                      Reduction::translations_automorphisms}) {
    if (text == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown reduction '" + std::string(text) + "'");
}

Reduction resolve_reduction(const SearchTask& task) {
  const bool translations_ok = translation_invariant(objective_of(task)) && task.filter == SetFilter::all;
  if (task.reduction == Reduction::automatic) {
    return translations_ok ? Reduction::translations_automorphisms : Reduction::automorphisms;
  }
  if (uses_translations(task.reduction) && !translations_ok) {
    throw std::invalid_argument("translation reduction is not valid for this objective or filter");
  }
  return task.reduction;
}

SearchResult min_size(const SearchTask& task) {
  const GroupSpec& group = task.group;
  check_search_group(group);
  if (task.m < 1 || task.m > group.order()) {
    throw std::invalid_argument("m must lie in [1, " + std::to_string(group.order()) + "]");
  }
  if (task.h && (*task.h < 0 || *task.h > fold_cap(group, task.m))) {
    throw std::invalid_argument("h must lie in [0, " + std::to_string(fold_cap(group, task.m)) + "]");
  }
  const Reduction reduction = resolve_reduction(task);
  const MaskGroup g(group);
  const MaskObjective objective{g, objective_of(task), task.h.value_or(0)};
  const Enumerator e(g, task.m, reduction, false);
  check_budget(e, task.limits, "search");

  MinTracker best = scan_min(e, task.limits.threads, task.limits.witness_cap, [&](Mask set) {
    if (!passes(g, task.filter, set)) return LONG_MAX;
    return objective.size(set);
  });
  if (best.best == LONG_MAX) {
    throw EmptySearchSpace("no " + std::string(to_string(task.filter)) + " subsets of size " +
                           std::to_string(task.m) + " in " + group.to_string());
  }
  SearchResult out;
  out.value = best.best;
  out.witnesses = to_sets(g, best.witnesses);
  out.truncated = best.truncated;
  out.witness_cap = task.limits.witness_cap;
  out.representatives = best.representatives;
  out.reduction = reduction;
  return out;
}

SearchResult min_size_sigma(const GroupSpec& group, int m, bool include_empty, SetFilter filter,
                            SearchLimits limits) {
  SearchTask task{group, m, std::nullopt, SumsetKind::restricted, !include_empty, filter,
                  Reduction::automatic, limits};
  return min_size(task);
}

std::vector<ElementSet> subset_stream(const GroupSpec& group, int m, Reduction reduction) {
  std::vector<ElementSet> out;
  for_each_representative(group, m, reduction, [&](const ElementSet& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

void for_each_representative(const GroupSpec& group, int m, Reduction reduction,
                             const std::function<bool(const ElementSet&)>& visit) {
  check_search_group(group);
  if (reduction == Reduction::automatic) throw std::invalid_argument("an explicit reduction is required");
  if (m < 0 || m > group.order()) throw std::invalid_argument("subset size out of range");
  const MaskGroup g(group);
  const Enumerator e(g, m, reduction, false);
  e.scan(0, e.candidates(), [&](Mask set) { return visit(g.to_set(set)); });
}

std::vector<ElementSet> orbit(const GroupSpec& group, const ElementSet& set, Reduction reduction) {
  if (reduction == Reduction::automatic) throw std::invalid_argument("an explicit reduction is required");
  const int e = group.exponent();
  std::vector<long> multipliers{1};
  if (reduction == Reduction::translations_negation && e > 2) multipliers.push_back(-1);
  if (reduction == Reduction::automorphisms || reduction == Reduction::translations_automorphisms) {
    for (int b = 2; b < e; ++b) {
      if (std::gcd(b, e) == 1) multipliers.push_back(b);
    }
  }
  std::set<ElementSet, LexLess> images;
  for (long b : multipliers) {
    const ElementSet scaled = set_dilate(group, b, set);
    if (!uses_translations(reduction)) {
      images.insert(scaled);
      continue;
    }
    for (int t = 0; t < group.order(); ++t) images.insert(translate(group, scaled, t));
  }
  return {images.begin(), images.end()};
}

ElementSet canonical_form(const GroupSpec& group, const ElementSet& set, Reduction reduction) {
  return orbit(group, set, reduction).front();
}

CriticalResult critical_number(const GroupSpec& group, int h, SumsetKind kind, SearchLimits limits) {
  check_search_group(group);
  if (h < 1) throw std::invalid_argument("h must be at least 1");
  if (group.order() < 2) throw std::invalid_argument("critical numbers need a nontrivial group");
  const MaskGroup g(group);
  SearchTask task{group, 1, h, kind, false, SetFilter::all, Reduction::automatic, limits};
  const MaskObjective objective{g, objective_of(task), h};
  const Reduction reduction = resolve_reduction(task);
  return ascending_critical(g, g.full(), false, reduction, limits, "critical search",
                            [&](Mask set) { return objective.image(set) != g.full(); });
}

CriticalResult critical_sigma(const GroupSpec& group, bool exclude_zero, SearchLimits limits) {
  check_search_group(group);
  if (group.order() < 2) throw std::invalid_argument("critical numbers need a nontrivial group");
  const MaskGroup g(group);
  const MaskObjective objective{g, Objective::sigma, 0};
  const Mask universe = exclude_zero ? g.full() & ~Mask{1} : g.full();
  return ascending_critical(g, universe, exclude_zero, Reduction::automorphisms, limits, "critical search",
                            [&](Mask set) { return objective.image(set) != g.full(); });
}

CriticalResult critical_span(const GroupSpec& group, SearchLimits limits) {
  check_search_group(group);
  if (group.order() < 2) throw std::invalid_argument("critical numbers need a nontrivial group");
  const MaskGroup g(group);
  const MaskObjective objective{g, Objective::span, 0};
  return ascending_critical(g, g.full(), false, Reduction::automorphisms, limits, "critical search",
                            [&](Mask set) { return objective.image(set) != g.full(); });
}

// ---------------------------------------------------------------------------
// Structure of extremal sets

bool is_arithmetic_progression(const GroupSpec& group, const ElementSet& set, int* difference) {
  const auto elems = set.indices();
  const int m = static_cast<int>(elems.size());
  if (m <= 1) {
    if (difference != nullptr) *difference = 0;
    return m == 1;
  }
  for (int d = 1; d < group.order(); ++d) {
    for (int a : elems) {
      int x = a;
      bool ok = true;
      for (int i = 1; i < m && ok; ++i) {
        x = group.add(x, d);
        ok = set.contains(x) && x != a;
      }
      if (ok) {
        if (difference != nullptr) *difference = d;
        return true;
      }
    }
  }
  return false;
}

bool in_prime_coset(const GroupSpec& group, const ElementSet& set) {
  if (set.empty() || group.order() < 2) return false;
  const ElementSet shifted = translate(group, set, group.negate(set.first()));
  for (const CosetDesc& h : prime_order_subgroups(group, group.smallest_prime())) {
    if (shifted.is_subset_of(h.subgroup)) return true;
  }
  return false;
}

bool is_cube(const GroupSpec& group, const ElementSet& set) {
  const auto e = set.indices();
  if (e.size() != 4) return false;
  return group.add(e[0], e[1]) == group.add(e[2], e[3]) || group.add(e[0], e[2]) == group.add(e[1], e[3]) ||
         group.add(e[0], e[3]) == group.add(e[1], e[2]);
}

std::optional<CosetUnionProfile> coset_union_profile(const GroupSpec& group, const ElementSet& set) {
  if (!group.is_cyclic()) return std::nullopt;
  const int n = group.order();
  std::optional<CosetUnionProfile> best;
  for (int d : divisors(n)) {
    if (d == 1 || d == n) continue;
    // cosets of the order-d subgroup are the residue classes mod n/d
    const int step = n / d;
    CosetUnionProfile p{d, 0, 0};
    for (int r = 0; r < step; ++r) {
      int hits = 0;
      for (int x = r; x < n; x += step) hits += set.contains(x) ? 1 : 0;
      if (hits == d) ++p.full_cosets;
      else if (hits > 0) ++p.partial_cosets;
    }
    if (!best || p.partial_cosets < best->partial_cosets ||
        (p.partial_cosets == best->partial_cosets && p.full_cosets > best->full_cosets)) {
      best = p;
    }
  }
  return best;
}

WitnessClassification classify_witness(const GroupSpec& group, const ElementSet& set) {
  WitnessClassification c;
  c.is_ap = is_arithmetic_progression(group, set, &c.ap_difference);
  c.in_prime_coset = in_prime_coset(group, set);
  c.coset_union_profile = coset_union_profile(group, set);
  c.is_cube = is_cube(group, set);
  c.symmetry = symmetry_class(group, set);
  return c;
}

DilatedNorm min_dilated_norm(int p, const ElementSet& set) {
  const GroupSpec group = GroupSpec::cyclic(p);
  DilatedNorm best{LONG_MAX, 0};
  for (int b = 1; b < p; ++b) {
    const long norm = signed_view(p, set_dilate(group, b, set)).norm;
    if (norm < best.value) best = {norm, b};
  }
  return best;
}

std::vector<ElementSet> sigma_noncovering_sets(int p, int m, SearchLimits limits) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const GroupSpec group = GroupSpec::cyclic(p);
  check_search_group(group);
  if (m < 0 || m > p) throw std::invalid_argument("subset size out of range");
  const MaskGroup g(group);
  const MaskObjective objective{g, Objective::sigma, 0};
  const Enumerator e(g, m, Reduction::automorphisms, false);
  check_budget(e, limits, "sigma classification");
  MinTracker found = scan_min(e, limits.threads, limits.witness_cap, [&](Mask set) {
    return objective.image(set) != g.full() ? 0L : LONG_MAX;
  });
  return to_sets(g, found.witnesses);
}

SumFreeResult max_kl_sumfree(int n, int k, int l, SearchLimits limits) {
  if (k < 1 || l < 1 || k == l) throw std::invalid_argument("need distinct positive k and l");
  const GroupSpec group = GroupSpec::cyclic(n);
  check_search_group(group);
  const MaskGroup g(group);
  const MaskObjective kfold{g, Objective::fold, k};
  const MaskObjective lfold{g, Objective::fold, l};
  auto free = [&](Mask set) { return (kfold.image(set) & lfold.image(set)) == 0; };

  const CriticalResult first_blocked =
      ascending_critical(g, g.full(), false, Reduction::automorphisms, limits, "sum-free search", free);
  SumFreeResult out;
  // every set is sum-free only in the degenerate case handled by the undefined status
  if (!first_blocked.value.value) {
    out.size = n;
    out.witnesses.push_back(ElementSet::full(n));
    return out;
  }
  out.size = static_cast<int>(*first_blocked.value.value) - 1;
  const Enumerator e(g, out.size, Reduction::automorphisms, false);
  check_budget(e, limits, "sum-free search");
  MinTracker all = scan_min(e, limits.threads, limits.witness_cap,
                            [&](Mask set) { return free(set) ? 0L : LONG_MAX; });
  out.witnesses = to_sets(g, all.witnesses);
  out.truncated = all.truncated;
  return out;
}

}  // namespace sumlab
