#pragma once

// Finite abelian groups Z_{n1} x ... x Z_{nr} with n1 | n2 | ... | nr,
// their elements, and subsets stored as flat bitsets.
//
// Elements are addressed by a mixed-radix index with the first residue as
// the most significant digit. Every bitset in the library uses this index.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sumlab {

/// Largest group order representable as an ElementSet.
inline constexpr int kMaxOrder = 4096;

/// Thrown by the literal parsers; position is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Element;

class GroupSpec {
 public:
  /// Validates the divisibility chain; throws std::invalid_argument.
  static GroupSpec make(std::vector<int> factors);
  static GroupSpec cyclic(int n) { return make({n}); }
  /// Parses "12", "2x6", "3x3".
  static GroupSpec parse(std::string_view text);

  const std::vector<int>& invariant_factors() const { return factors_; }
  int order() const { return order_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int exponent() const { return factors_.back(); }
  int smallest_prime() const { return smallest_prime_; }
  bool is_cyclic() const { return factors_.size() == 1; }
  /// Z_p^r for a prime p.
  bool is_elementary_abelian() const;

  std::string to_string() const;

  Element element(int index) const;
  Element element(std::span<const int> residues) const;

  // Index-level arithmetic, the form used by the engines.
  int add(int a, int b) const;
  int negate(int a) const;
  int scale(long k, int a) const;
  int residue(int index, int component) const {
    return (index / weights_[component]) % factors_[component];
  }
  int weight(int component) const { return weights_[component]; }

  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(long k, const Element& a) const;

  bool operator==(const GroupSpec& other) const { return factors_ == other.factors_; }

 private:
  GroupSpec() = default;

  std::vector<int> factors_;
  std::vector<int> weights_;
  int order_ = 1;
  int smallest_prime_ = 0;
};

class Element {
 public:
  const std::vector<int>& residues() const { return residues_; }
  int index() const { return index_; }

  bool operator==(const Element& other) const { return index_ == other.index_; }
  auto operator<=>(const Element& other) const { return index_ <=> other.index_; }

 private:
  friend class GroupSpec;
  Element(std::vector<int> residues, int index)
      : residues_(std::move(residues)), index_(index) {}

  std::vector<int> residues_;
  int index_ = 0;
};

/// A subset of a group of the given order, as a bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe);
  ElementSet(int universe, std::initializer_list<int> indices);
  ElementSet(int universe, std::span<const int> indices);

  static ElementSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int index) const {
    return (words_[static_cast<std::size_t>(index) >> 6] >> (index & 63)) & 1U;
  }
  void insert(int index) { words_[static_cast<std::size_t>(index) >> 6] |= bit(index); }
  void erase(int index) { words_[static_cast<std::size_t>(index) >> 6] &= ~bit(index); }

  /// Cardinality.
  int size() const;
  bool empty() const;
  bool is_full() const { return size() == universe_; }

  std::vector<int> indices() const;
  /// Smallest member; -1 when empty.
  int first() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  /// Set difference.
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const = default;
  /// Lexicographic order of the ascending member lists.
  bool lex_less(const ElementSet& other) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

 private:
  static std::uint64_t bit(int index) { return std::uint64_t{1} << (index & 63); }
  void check_same_universe(const ElementSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Strict weak order adaptor for containers of ElementSet.
struct LexLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const { return a.lex_less(b); }
};

/// A coset representative + subgroup.
struct CosetDesc {
  ElementSet subgroup;
  Element representative;

  ElementSet elements(const GroupSpec& group) const;
};

// Set-level maps.
ElementSet translate(const GroupSpec& group, const ElementSet& set, int by);
ElementSet negate_set(const GroupSpec& group, const ElementSet& set);
/// Image of the set under x -> b*x.
ElementSet set_dilate(const GroupSpec& group, long b, const ElementSet& set);

int element_order(const GroupSpec& group, const Element& a);
int element_order(const GroupSpec& group, int index);
/// Number of elements of order exactly 2.
int involution_count(const GroupSpec& group);

/// All invariant-factor types of order n, lexicographic in the factor lists.
std::vector<GroupSpec> abelian_groups_of_order(int n);
/// Every group type of order in [lo, hi].
std::vector<GroupSpec> abelian_groups_up_to(int lo, int hi);

/// The order-d subgroup {j*n/d} of Z_n with representative 0.
CosetDesc cyclic_divisor_subgroup(int n, int d);
/// Every subgroup of order p, each once, ordered by its smallest generator.
std::vector<CosetDesc> prime_order_subgroups(const GroupSpec& group, int p);

// Literal grammar: element "7" or "(1,3)", set "{0,5,10}" / "{(0,0),(1,2)}".
Element parse_element(const GroupSpec& group, std::string_view text);
ElementSet parse_set(const GroupSpec& group, std::string_view text);
std::string format_element(const GroupSpec& group, int index);
std::string format_set(const GroupSpec& group, const ElementSet& set);

}  // namespace sumlab
