#include "cyclocode/qadic.hpp"

#include <sstream>

#include "cyclocode/error.hpp"
#include "cyclocode/params.hpp"

namespace cyclocode {

QAdicWord::QAdicWord(std::vector<Digit> digits, unsigned q) : digits_(std::move(digits)), q_(q) {
  if (q_ < 2) throw ParameterError("radix must be at least 2");
  if (digits_.empty()) throw ParameterError("word length must be at least 1");
  for (auto d : digits_) {
    if (d >= q_) {
      std::ostringstream os;
      os << "digit " << d << " out of range for radix " << q_;
      throw ParameterError(os.str());
    }
  }
}

std::uint64_t QAdicWord::value() const {
  std::uint64_t v = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * q_ + *it;
  return v;
}

QAdicWord expand(std::uint64_t s, unsigned q, unsigned m) {
  if (q < 2) throw ParameterError("radix must be at least 2");
  if (m < 1) throw ParameterError("word length must be at least 1");
  if (pow_at_most(q, m, UINT64_MAX) && s > checked_pow(q, m) - 1) {
    std::ostringstream os;
    os << s << " is outside [0, " << q << "^" << m << " - 1]";
    throw ParameterError(os.str());
  }
  std::vector<Digit> digits(m);
  detail::expand_into(s, q, digits);
  return QAdicWord(std::move(digits), q);
}

std::uint64_t word_value(const QAdicWord& w) { return w.value(); }

QAdicWord rotate(const QAdicWord& w, long long j) {
  const long long m = w.length();
  const auto shift = static_cast<unsigned>(((j % m) + m) % m);
  std::vector<Digit> out(w.length());
  for (unsigned i = 0; i < w.length(); ++i) out[(i + shift) % w.length()] = w[i];
  return QAdicWord(std::move(out), w.radix());
}

bool dominates(const QAdicWord& v, const QAdicWord& u) {
  if (v.radix() != u.radix() || v.length() != u.length())
    throw ParameterError("dominates: words differ in radix or length");
  for (unsigned i = 0; i < v.length(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

PatternProfile pattern_profile(const QAdicWord& w, unsigned a, unsigned b, unsigned t) {
  if (!(1 <= b && b <= a && a <= w.radix() - 1) || t > w.length() - 1)
    throw ParameterError("pattern_profile needs 1 <= b <= a <= q-1 and 0 <= t <= m-1");
  return detail::profile_digits(w.digits(), a, b, t);
}

bool matches_dual_exclusion(const QAdicWord& w, unsigned a, unsigned b, unsigned t) {
  const unsigned q = w.radix();
  if (a < 1 || a > q - 1 || b < 1 || b > q - 1 || t > w.length() - 1)
    throw ParameterError("dual exclusion needs 1 <= a, b <= q-1 and 0 <= t <= m-1");
  return detail::dual_exclusion_digits(w.digits(), q, a, b, t);
}

namespace detail {

void expand_into(std::uint64_t s, unsigned q, std::span<Digit> out) {
  for (auto& d : out) {
    d = static_cast<Digit>(s % q);
    s /= q;
  }
}

PatternProfile profile_digits(std::span<const Digit> d, unsigned a, unsigned b, unsigned t) {
  const auto m = static_cast<unsigned>(d.size());
  PatternProfile p;
  for (unsigned i = 0; i < m; ++i) {
    if (d[i] > a) {
      p.digits_ok = false;
      continue;
    }
    if (d[i] == 0) continue;
    // Length of the zero run following position i, capped at t+1. A run that
    // would wrap back onto the head stops there because the head is nonzero.
    unsigned run = 0;
    while (run < t + 1 && run < m - 1 && d[(i + 1 + run) % m] == 0) ++run;
    if (d[i] <= b) {
      if (run >= t) ++p.k;
    } else if (run >= t + 1) {
      ++p.ell;
    }
  }
  return p;
}

bool dual_exclusion_digits(std::span<const Digit> d, unsigned q, unsigned a, unsigned b,
                           unsigned t) {
  const auto m = static_cast<unsigned>(d.size());
  const Digit top = q - 1;
  const Digit x_min = q - 1 - a;
  const Digit y_min = q - 1 - b;
  // Rotation starting at r: positions r .. r+m-t-2 are the x's, r+m-t-1 is y,
  // and the last t positions must all be q-1.
  for (unsigned r = 0; r < m; ++r) {
    bool ok = true;
    for (unsigned j = m - t; j < m && ok; ++j) ok = d[(r + j) % m] == top;
    if (!ok) continue;
    if (d[(r + m - t - 1) % m] < y_min) continue;
    for (unsigned j = 0; j + t + 1 < m && ok; ++j) ok = d[(r + j) % m] >= x_min;
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

}  // namespace cyclocode
