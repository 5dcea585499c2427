#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclocode {

using Natural = boost::multiprecision::cpp_int;

/// The tuple (q, m, t, a, b) describing the word u = a...a b 0...0
/// (m-t-1 copies of a, then b, then t zeros) and the code family built on it.
struct CodeParams {
  unsigned q = 2;
  unsigned m = 1;
  unsigned t = 0;
  unsigned a = 1;
  unsigned b = 1;

  auto operator<=>(const CodeParams&) const = default;
};

/// Counting/dimension results need b <= a; the dual-distance machinery lets
/// a and b vary independently.
enum class Regime { counting, dual };

bool is_prime_power(std::uint64_t q);

/// Throws ParameterError when `p` is outside the regime.
void validate(const CodeParams& p, Regime regime);

std::string to_string(const CodeParams& p);

Natural pow_natural(std::uint64_t base, unsigned exp);

/// base^exp, or ResourceError if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// True iff base^exp <= limit.
bool pow_at_most(std::uint64_t base, unsigned exp, std::uint64_t limit);

}  // namespace cyclocode
