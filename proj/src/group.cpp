#include "sumlab/group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>

#include "sumlab/numeric.hpp"

namespace sumlab {

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::make(std::vector<int> factors) {
  if (factors.empty()) throw std::invalid_argument("invalid group type: no invariant factors");
  long order = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) {
      throw std::invalid_argument("invalid group type: factor " + std::to_string(factors[i]) +
                                  " < 2");
    }
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw std::invalid_argument("invalid group type: " + std::to_string(factors[i - 1]) +
                                  " does not divide " + std::to_string(factors[i]));
    }
    order *= factors[i];
    if (order > kMaxOrder) {
      throw std::invalid_argument("invalid group type: order exceeds " +
                                  std::to_string(kMaxOrder));
    }
  }
  GroupSpec g;
  g.factors_ = std::move(factors);
  g.order_ = static_cast<int>(order);
  g.weights_.assign(g.factors_.size(), 1);
  for (int i = static_cast<int>(g.factors_.size()) - 2; i >= 0; --i) {
    g.weights_[i] = g.weights_[i + 1] * g.factors_[i + 1];
  }
  g.smallest_prime_ = static_cast<int>(smallest_prime_factor(g.order_));
  return g;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<int> factors;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected invariant factor", pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{}) throw ParseError("invariant factor out of range", start);
    factors.push_back(value);
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw ParseError("expected 'x' between factors", pos);
    ++pos;
  }
  return make(std::move(factors));
}

bool GroupSpec::is_elementary_abelian() const {
  return factors_.front() == factors_.back() && is_prime(factors_.front());
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += 'x';
    out += std::to_string(factors_[i]);
  }
  return out;
}

Element GroupSpec::element(int index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
  std::vector<int> residues(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) residues[i] = residue(index, static_cast<int>(i));
  return Element(std::move(residues), index);
}

Element GroupSpec::element(std::span<const int> residues) const {
  if (residues.size() != factors_.size()) {
    throw std::invalid_argument("element has wrong number of residues");
  }
  int index = 0;
  std::vector<int> reduced(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    reduced[i] = static_cast<int>(((residues[i] % factors_[i]) + factors_[i]) % factors_[i]);
    index += reduced[i] * weights_[i];
  }
  return Element(std::move(reduced), index);
}

int GroupSpec::add(int a, int b) const {
  if (factors_.size() == 1) {
    int s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  int out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int ci = static_cast<int>(i);
    int s = residue(a, ci) + residue(b, ci);
    if (s >= factors_[i]) s -= factors_[i];
    out += s * weights_[i];
  }
  return out;
}

int GroupSpec::negate(int a) const {
  int out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int r = residue(a, static_cast<int>(i));
    out += (r == 0 ? 0 : factors_[i] - r) * weights_[i];
  }
  return out;
}

int GroupSpec::scale(long k, int a) const {
  int out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long ni = factors_[i];
    long r = (k % ni) * residue(a, static_cast<int>(i)) % ni;
    if (r < 0) r += ni;
    out += static_cast<int>(r) * weights_[i];
  }
  return out;
}

Element GroupSpec::add(const Element& a, const Element& b) const {
  return element(add(a.index(), b.index()));
}
Element GroupSpec::negate(const Element& a) const { return element(negate(a.index())); }
Element GroupSpec::scale(long k, const Element& a) const { return element(scale(k, a.index())); }

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
  if (universe < 0 || universe > kMaxOrder) throw std::invalid_argument("bad set universe");
}

ElementSet::ElementSet(int universe, std::initializer_list<int> indices)
    : ElementSet(universe, std::span<const int>(indices.begin(), indices.size())) {}

ElementSet::ElementSet(int universe, std::span<const int> indices) : ElementSet(universe) {
  for (int i : indices) {
    if (i < 0 || i >= universe) throw std::out_of_range("set member out of range");
    insert(i);
  }
}

ElementSet ElementSet::full(int universe) {
  ElementSet s(universe);
  for (int i = 0; i < universe; ++i) s.insert(i);
  return s;
}

int ElementSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<int> ElementSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int i) { out.push_back(i); });
  return out;
}

int ElementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  }
  return -1;
}

void ElementSet::check_same_universe(const ElementSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("sets from different groups");
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool ElementSet::lex_less(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff != 0) return (words_[i] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

ElementSet CosetDesc::elements(const GroupSpec& group) const {
  return translate(group, subgroup, representative.index());
}

// ---------------------------------------------------------------------------
// Set maps and element structure

ElementSet translate(const GroupSpec& group, const ElementSet& set, int by) {
  ElementSet out(group.order());
  set.for_each([&](int x) { out.insert(group.add(x, by)); });
  return out;
}

ElementSet negate_set(const GroupSpec& group, const ElementSet& set) {
  ElementSet out(group.order());
  set.for_each([&](int x) { out.insert(group.negate(x)); });
  return out;
}

ElementSet set_dilate(const GroupSpec& group, long b, const ElementSet& set) {
  ElementSet out(group.order());
  set.for_each([&](int x) { out.insert(group.scale(b, x)); });
  return out;
}

int element_order(const GroupSpec& group, int index) {
  long ord = 1;
  for (int i = 0; i < group.rank(); ++i) {
    long ni = group.invariant_factors()[static_cast<std::size_t>(i)];
    long r = group.residue(index, i);
    long oi = ni / std::gcd(ni, r);
    ord = std::lcm(ord, oi);
  }
  return static_cast<int>(ord);
}

int element_order(const GroupSpec& group, const Element& a) {
  return element_order(group, a.index());
}

int involution_count(const GroupSpec& group) {
  int count = 0;
  for (int x = 1; x < group.order(); ++x) {
    if (group.add(x, x) == 0) ++count;
  }
  return count;
}

namespace {

void partitions_of(int e, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(e, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(e - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> abelian_groups_of_order(int n) {
  if (n < 2) throw std::invalid_argument("abelian_groups_of_order: n must be >= 2");
  auto primes = factorize(n);
  std::vector<std::vector<std::vector<int>>> choices;
  for (auto [p, e] : primes) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(e, e, cur, parts);
    choices.push_back(std::move(parts));
  }
  std::vector<std::vector<int>> types;
  std::vector<std::size_t> pick(choices.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      // Largest parts of every prime go into the exponent, and so on down.
      std::size_t rank = 0;
      for (std::size_t j = 0; j < choices.size(); ++j) rank = std::max(rank, choices[j][pick[j]].size());
      std::vector<int> factors(rank, 1);
      for (std::size_t j = 0; j < choices.size(); ++j) {
        const auto& parts = choices[j][pick[j]];
        for (std::size_t t = 0; t < parts.size(); ++t) {
          long pw = 1;
          for (int c = 0; c < parts[t]; ++c) pw *= primes[j].first;
          factors[rank - 1 - t] *= static_cast<int>(pw);
        }
      }
      types.push_back(std::move(factors));
      return;
    }
    for (pick[i] = 0; pick[i] < choices[i].size(); ++pick[i]) rec(i + 1);
  };
  rec(0);
  std::sort(types.begin(), types.end());
  std::vector<GroupSpec> out;
  out.reserve(types.size());
  for (auto& t : types) out.push_back(GroupSpec::make(std::move(t)));
  return out;
}

std::vector<GroupSpec> abelian_groups_up_to(int lo, int hi) {
  std::vector<GroupSpec> out;
  for (int n = std::max(lo, 2); n <= hi; ++n) {
    auto gs = abelian_groups_of_order(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

CosetDesc cyclic_divisor_subgroup(int n, int d) {
  if (d < 1 || n % d != 0) {
    throw std::invalid_argument("invalid divisor: " + std::to_string(d) + " does not divide " +
                                std::to_string(n));
  }
  auto group = GroupSpec::cyclic(n);
  ElementSet h(n);
  for (int j = 0; j < d; ++j) h.insert(j * (n / d));
  return CosetDesc{std::move(h), group.element(0)};
}

std::vector<CosetDesc> prime_order_subgroups(const GroupSpec& group, int p) {
  if (!is_prime(p) || group.order() % p != 0) {
    throw std::invalid_argument("no subgroup of order " + std::to_string(p));
  }
  std::vector<CosetDesc> out;
  std::vector<ElementSet> seen;
  for (int x = 1; x < group.order(); ++x) {
    if (element_order(group, x) != p) continue;
    ElementSet h(group.order());
    int cur = 0;
    for (int j = 0; j < p; ++j) {
      h.insert(cur);
      cur = group.add(cur, x);
    }
    if (std::find(seen.begin(), seen.end(), h) != seen.end()) continue;
    seen.push_back(h);
    out.push_back(CosetDesc{std::move(h), group.element(0)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool accept(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  long integer() {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{} || ptr != text.data() + pos) {
      throw ParseError("expected integer", start);
    }
    return value;
  }
  bool at_end() {
    skip_space();
    return pos == text.size();
  }
};

int read_element(const GroupSpec& group, Cursor& cur) {
  cur.skip_space();
  std::size_t start = cur.pos;
  std::vector<long> residues;
  if (cur.accept('(')) {
    do {
      residues.push_back(cur.integer());
    } while (cur.accept(','));
    cur.expect(')');
  } else {
    residues.push_back(cur.integer());
  }
  if (static_cast<int>(residues.size()) != group.rank()) {
    throw ParseError("element needs " + std::to_string(group.rank()) + " residue(s)", start);
  }
  int index = 0;
  for (int i = 0; i < group.rank(); ++i) {
    long ni = group.invariant_factors()[static_cast<std::size_t>(i)];
    if (residues[static_cast<std::size_t>(i)] < 0 || residues[static_cast<std::size_t>(i)] >= ni) {
      throw ParseError("residue outside [0," + std::to_string(ni) + ")", start);
    }
    index += static_cast<int>(residues[static_cast<std::size_t>(i)]) * group.weight(i);
  }
  return index;
}

}  // namespace

Element parse_element(const GroupSpec& group, std::string_view text) {
  Cursor cur{text};
  int index = read_element(group, cur);
  if (!cur.at_end()) throw ParseError("trailing characters", cur.pos);
  return group.element(index);
}

ElementSet parse_set(const GroupSpec& group, std::string_view text) {
  Cursor cur{text};
  cur.expect('{');
  ElementSet out(group.order());
  if (!cur.accept('}')) {
    do {
      out.insert(read_element(group, cur));
    } while (cur.accept(','));
    cur.expect('}');
  }
  if (!cur.at_end()) throw ParseError("trailing characters", cur.pos);
  return out;
}

std::string format_element(const GroupSpec& group, int index) {
  if (group.rank() == 1) return std::to_string(index);
  std::string out = "(";
  for (int i = 0; i < group.rank(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(group.residue(index, i));
  }
  return out + ")";
}

std::string format_set(const GroupSpec& group, const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](int x) {
    if (!first) out += ',';
    first = false;
    out += format_element(group, x);
  });
  return out + "}";
}

}  // namespace sumlab
