#pragma once

// Sumset kernels written once against a small set-operations policy so that
// the public ElementSet engine and the single-word search path share them.
//
// A policy provides:
//   using Set;
//   Set empty_set() const;   Set zero_set() const;           // {} and {0}
//   Set translate(const Set&, int g) const;                  // S + g
//   void merge(Set& into, const Set& from) const;            // into |= from
//   bool is_empty(const Set&) const;
//   int add(int, int) const;  int neg(int) const;

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace sumlab::detail {

template <class Ops>
typename Ops::Set fold_sumset(const Ops& ops, std::span<const int> elems, int h) {
  auto acc = ops.zero_set();
  for (int step = 0; step < h; ++step) {
    auto next = ops.empty_set();
    for (int a : elems) ops.merge(next, ops.translate(acc, a));
    acc = std::move(next);
    if (ops.is_empty(acc)) break;
  }
  return acc;
}

/// layers[t] holds the sums of exactly t distinct elements seen so far.
template <class Ops>
typename Ops::Set restricted_sumset(const Ops& ops, std::span<const int> elems, int h) {
  if (h < 0 || static_cast<std::size_t>(h) > elems.size()) return ops.empty_set();
  const std::size_t top = static_cast<std::size_t>(h);
  std::vector<typename Ops::Set> layers(top + 1, ops.empty_set());
  layers[0] = ops.zero_set();
  std::size_t seen = 0;
  for (int a : elems) {
    ++seen;
    for (std::size_t t = std::min(top, seen); t >= 1; --t) {
      ops.merge(layers[t], ops.translate(layers[t - 1], a));
    }
  }
  return layers[top];
}

/// layers[w] holds the signed combinations of total absolute weight w.
template <class Ops>
typename Ops::Set signed_sumset(const Ops& ops, std::span<const int> elems, int h) {
  if (h <= 0) return ops.zero_set();
  const std::size_t top = static_cast<std::size_t>(h);
  std::vector<typename Ops::Set> layers(top + 1, ops.empty_set());
  layers[0] = ops.zero_set();
  std::vector<int> plus(top + 1, 0), minus(top + 1, 0);
  for (int a : elems) {
    const int na = ops.neg(a);
    for (std::size_t t = 1; t <= top; ++t) {
      plus[t] = ops.add(plus[t - 1], a);
      minus[t] = ops.add(minus[t - 1], na);
    }
    for (std::size_t w = top; w >= 1; --w) {
      for (std::size_t t = 1; t <= w; ++t) {
        const auto& base = layers[w - t];
        if (ops.is_empty(base)) continue;
        ops.merge(layers[w], ops.translate(base, plus[t]));
        if (minus[t] != plus[t]) ops.merge(layers[w], ops.translate(base, minus[t]));
      }
    }
  }
  return layers[top];
}

/// Returns (sums over all subsets, sums over nonempty subsets).
template <class Ops>
std::pair<typename Ops::Set, typename Ops::Set> subset_sums(const Ops& ops,
                                                            std::span<const int> elems) {
  auto with_empty = ops.zero_set();
  auto nonempty = ops.empty_set();
  for (int a : elems) {
    auto shifted = ops.translate(with_empty, a);
    ops.merge(nonempty, shifted);
    ops.merge(with_empty, shifted);
  }
  return {std::move(with_empty), std::move(nonempty)};
}

template <class Ops>
typename Ops::Set generated_subgroup(const Ops& ops, std::span<const int> elems) {
  auto acc = ops.zero_set();
  while (true) {
    auto next = acc;
    for (int a : elems) ops.merge(next, ops.translate(acc, a));
    if (next == acc) return acc;
    acc = std::move(next);
  }
}

}  // namespace sumlab::detail
