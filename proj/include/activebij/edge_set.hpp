#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace activebij {

/** Set of edge identifiers (1-based ranks in the linear order), stored as a
 *  bitmask.  Rank e occupies bit e-1; at most 32 edges are supported, which
 *  covers the enumeration caps used throughout. */
class EdgeSet {
public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr EdgeSet single(int e) { return EdgeSet(bit(e)); }

  /// The full set {1, ..., n}.
  static constexpr EdgeSet full(int n) {
    return EdgeSet(n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ & bit(e)) != 0; }

  constexpr void insert(int e) { bits_ |= bit(e); }
  constexpr void erase(int e) { bits_ &= ~bit(e); }

  /// Smallest edge in the set; the set must be nonempty.
  int min() const {
    if (empty())
      throw std::domain_error("min of empty edge set");
    return std::countr_zero(bits_) + 1;
  }

  /// Greatest edge in the set; the set must be nonempty.
  int max() const {
    if (empty())
      throw std::domain_error("max of empty edge set");
    return 32 - std::countl_zero(bits_);
  }

  constexpr bool subset_of(EdgeSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
  friend constexpr EdgeSet operator^(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ ^ b.bits_); }
  /// Set difference a \ b.
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & ~b.bits_); }
  constexpr EdgeSet &operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }
  constexpr EdgeSet &operator&=(EdgeSet o) { bits_ &= o.bits_; return *this; }
  constexpr EdgeSet &operator^=(EdgeSet o) { bits_ ^= o.bits_; return *this; }

  friend constexpr bool operator==(EdgeSet a, EdgeSet b) = default;
  /// Lexicographic order on the sorted element lists: {1,2} < {1,2,3} < {1,3}.
  friend bool operator<(EdgeSet a, EdgeSet b) {
    std::uint32_t diff = a.bits_ ^ b.bits_;
    if (diff == 0)
      return false;
    int e = std::countr_zero(diff) + 1;  // smallest differing element
    if (a.contains(e))
      return (b.bits_ >> e) != 0;  // a has e; a wins unless b is a strict prefix
    return (a.bits_ >> e) == 0;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : to_vector()) {
      if (!first)
        s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  struct iterator {
    std::uint32_t rest;
    int operator*() const { return std::countr_zero(rest) + 1; }
    iterator &operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator &o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits_}; }
  iterator end() const { return {0}; }

private:
  static constexpr std::uint32_t bit(int e) { return 1u << (e - 1); }
  std::uint32_t bits_ = 0;
};

/// Invoke f(EdgeSet) for every subset of s (including empty and s itself).
template <class F>
void for_each_subset(EdgeSet s, F &&f) {
  std::uint32_t m = s.bits();
  std::uint32_t sub = m;
  while (true) {
    f(EdgeSet(sub));
    if (sub == 0)
      break;
    sub = (sub - 1) & m;
  }
}

/** Edge subset carrying a sign partition, used for signed cycles and
 *  cocycles.  Signs are relative to the stored reference direction of each
 *  edge. */
struct SignedEdgeSet {
  EdgeSet positive;
  EdgeSet negative;

  EdgeSet support() const { return positive | negative; }
  bool sign_positive(int e) const { return positive.contains(e); }
  friend bool operator==(const SignedEdgeSet &, const SignedEdgeSet &) = default;
};

}  // namespace activebij
