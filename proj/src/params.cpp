#include "cyclocode/params.hpp"

#include <sstream>

#include "cyclocode/error.hpp"

namespace cyclocode {

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

void validate(const CodeParams& p, Regime regime) {
  std::ostringstream why;
  if (!is_prime_power(p.q)) {
    why << "q = " << p.q << " is not a prime power";
  } else if (p.m < 1) {
    why << "m must be at least 1";
  } else if (p.t > p.m - 1) {
    why << "t = " << p.t << " must lie in [0, m-1] = [0, " << p.m - 1 << "]";
  } else if (p.a < 1 || p.a > p.q - 1) {
    why << "a = " << p.a << " must lie in [1, q-1]";
  } else if (p.b < 1 || p.b > p.q - 1) {
    why << "b = " << p.b << " must lie in [1, q-1]";
  } else if (regime == Regime::counting && p.b > p.a && p.t != p.m - 1) {
    why << "counting results require b <= a (got a = " << p.a << ", b = " << p.b << ")";
  } else if (regime == Regime::dual && p.m < 2) {
    why << "dual-distance results require m >= 2";
  }
  const auto msg = why.str();
  if (!msg.empty()) throw ParameterError(msg + " [" + to_string(p) + "]");
}

std::string to_string(const CodeParams& p) {
  std::ostringstream os;
  os << "q=" << p.q << " m=" << p.m << " t=" << p.t << " a=" << p.a << " b=" << p.b;
  return os.str();
}

Natural pow_natural(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(Natural(base), exp);
}

bool pow_at_most(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return false;
    acc *= base;
  }
  return acc <= limit;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  if (!pow_at_most(base, exp, UINT64_MAX)) {
    std::ostringstream os;
    os << base << "^" << exp << " exceeds 64 bits";
    throw ResourceError(os.str());
  }
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace cyclocode
