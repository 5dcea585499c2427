#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cyclocode {

/// Largest index range (q^m) a DefiningSet will materialize by default.
inline constexpr std::uint64_t kDefaultIndexCap = std::uint64_t{1} << 28;

/// Rotation orbit of a q-adic word. For s in [1, n-1] this is {s q^j mod n};
/// 0 and n = q^m - 1 are singleton orbits.
struct CyclotomicCoset {
  std::uint64_t leader = 0;
  std::vector<std::uint64_t> elements;  // sorted

  std::size_t size() const { return elements.size(); }
};

/// Exact subset of [0, q^m - 1] held as a bitmap.
class DefiningSet {
 public:
  /// Empty set over [0, q^m - 1]. ResourceError if q^m exceeds `cap`.
  DefiningSet(unsigned q, unsigned m, std::uint64_t cap = kDefaultIndexCap);

  static DefiningSet full(unsigned q, unsigned m, std::uint64_t cap = kDefaultIndexCap);

  unsigned radix() const { return q_; }
  unsigned length() const { return m_; }
  /// n = q^m - 1, the largest index.
  std::uint64_t n() const { return universe_ - 1; }
  std::uint64_t universe() const { return universe_; }

  bool contains(std::uint64_t s) const {
    return s < universe_ && ((bits_[s >> 6] >> (s & 63)) & 1U) != 0;
  }
  void insert(std::uint64_t s);
  void erase(std::uint64_t s);
  std::uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  std::vector<std::uint64_t> members() const;
  /// Smallest index not in the set, or universe() if the set is full.
  std::uint64_t first_missing() const;

  DefiningSet& operator|=(const DefiningSet& other);
  bool operator==(const DefiningSet& other) const;

  bool is_subset_of(const DefiningSet& other) const;

 private:
  void check_index(std::uint64_t s) const;
  void check_compatible(const DefiningSet& other) const;

  unsigned q_;
  unsigned m_;
  std::uint64_t universe_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rotation orbit of expand(s). Requires 0 <= s <= q^m - 1.
CyclotomicCoset coset_of(std::uint64_t s, unsigned q, unsigned m);

std::uint64_t leader(std::uint64_t s, unsigned q, unsigned m);

/// Union of the orbits of every seed.
DefiningSet union_cosets(std::span<const std::uint64_t> seeds, unsigned q, unsigned m,
                         std::uint64_t cap = kDefaultIndexCap);

/// True iff every s in [1, n-1] that is in D has its whole orbit in D.
bool is_rotation_closed(const DefiningSet& d);

}  // namespace cyclocode
