#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cyclocode {

using Digit = std::uint32_t;

/// Length-m digit sequence in radix q, lowest power first: digits()[i] is the
/// coefficient of q^i. Multiplication by q modulo q^m - 1 is a right rotation.
class QAdicWord {
 public:
  /// Throws ParameterError if q < 2, the word is empty, or a digit is >= q.
  QAdicWord(std::vector<Digit> digits, unsigned q);

  unsigned radix() const { return q_; }
  unsigned length() const { return static_cast<unsigned>(digits_.size()); }
  std::span<const Digit> digits() const { return digits_; }
  Digit operator[](unsigned i) const { return digits_[i]; }

  std::uint64_t value() const;

  bool operator==(const QAdicWord&) const = default;

 private:
  std::vector<Digit> digits_;
  unsigned q_;
};

/// Unique expansion s = sum s_i q^i with m digits. Requires 0 <= s <= q^m - 1.
QAdicWord expand(std::uint64_t s, unsigned q, unsigned m);

std::uint64_t word_value(const QAdicWord& w);

/// Circular right shift by j (mod m): result[(i + j) mod m] = w[i].
QAdicWord rotate(const QAdicWord& w, long long j);

/// True iff u_i <= v_i for every i, i.e. u is a descendant of v.
bool dominates(const QAdicWord& v, const QAdicWord& u);

/// Counts of head-plus-zero-run patterns, one per head position.
struct PatternProfile {
  unsigned k = 0;      // heads in [1, b] followed cyclically by t zeros
  unsigned ell = 0;    // heads in [b+1, a] followed cyclically by t+1 zeros
  bool digits_ok = true;  // every digit <= a

  bool operator==(const PatternProfile&) const = default;
};

/// Requires 1 <= b <= a <= q-1 and 0 <= t <= m-1.
PatternProfile pattern_profile(const QAdicWord& w, unsigned a, unsigned b, unsigned t);

/// True iff some rotation of w reads x_1..x_{m-t-1} y (q-1)^t with every
/// x_i >= q-1-a and y >= q-1-b. Requires 1 <= a, b <= q-1, 0 <= t <= m-1.
bool matches_dual_exclusion(const QAdicWord& w, unsigned a, unsigned b, unsigned t);

namespace detail {

// Allocation-free forms for hot loops; no validation.
void expand_into(std::uint64_t s, unsigned q, std::span<Digit> out);
PatternProfile profile_digits(std::span<const Digit> d, unsigned a, unsigned b, unsigned t);
bool dual_exclusion_digits(std::span<const Digit> d, unsigned q, unsigned a, unsigned b,
                           unsigned t);

}  // namespace detail

}  // namespace cyclocode
