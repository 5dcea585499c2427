#include "cyclocode/counting.hpp"

#include <sstream>

#include "cyclocode/error.hpp"

namespace cyclocode {

namespace {

Natural factorial(unsigned n) {
  Natural f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Natural binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Natural c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

bool admissible(unsigned k, unsigned ell, unsigned m, unsigned t) {
  const unsigned long long used =
      static_cast<unsigned long long>(k) * (t + 1) + static_cast<unsigned long long>(ell) * (t + 2);
  return (k != 0 || ell != 0) && used <= m;
}

void require_admissible(unsigned k, unsigned ell, unsigned m, unsigned t) {
  if (t > m - 1 || !admissible(k, ell, m, t)) {
    std::ostringstream os;
    os << "(" << k << ", " << ell << ") is not admissible for m=" << m << " t=" << t;
    throw ParameterError(os.str());
  }
}

}  // namespace

CodeParams normalized_for_counting(const CodeParams& p) {
  validate(p, Regime::counting);
  CodeParams out = p;
  if (out.t == out.m - 1) out.a = out.b;
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(unsigned m, unsigned t) {
  if (m < 1 || t > m - 1) throw ParameterError("admissible_pairs needs 0 <= t <= m-1");
  std::vector<AdmissiblePair> out;
  for (unsigned ell = 0; ell * (t + 2) <= m; ++ell)
    for (unsigned k = 0; k * (t + 1) + ell * (t + 2) <= m; ++k)
      if (k != 0 || ell != 0) out.push_back({k, ell});
  return out;
}

Natural count_pattern_words(unsigned k, unsigned ell, unsigned m, unsigned t) {
  require_admissible(k, ell, m, t);
  const unsigned blocks = m - k * t - ell * (t + 1);  // N: symbols once each block is fused
  const unsigned free_symbols = blocks - k - ell;
  const Natural arrangements = factorial(blocks) / (factorial(k) * factorial(ell) * factorial(free_symbols));
  const Natural scaled = arrangements * m;
  if (scaled % blocks != 0) {
    std::ostringstream os;
    os << "non-integral pattern count for (k, ell, m, t) = (" << k << ", " << ell << ", " << m
       << ", " << t << ")";
    throw ConsistencyError(os.str());
  }
  return scaled / blocks;
}

Natural count_matrix_entries(unsigned r, unsigned s, const CodeParams& params) {
  const auto p = normalized_for_counting(params);
  require_admissible(r, s, p.m, p.t);
  const unsigned free_symbols = p.m - r * (p.t + 1) - s * (p.t + 2);
  return pow_natural(p.b, r) * pow_natural(p.a - p.b, s) * pow_natural(p.a + 1, free_symbols) *
         count_pattern_words(r, s, p.m, p.t);
}

Natural count_class(unsigned k, unsigned ell, const CodeParams& params) {
  const auto p = normalized_for_counting(params);
  require_admissible(k, ell, p.m, p.t);
  Natural total = 0;
  for (const auto& rs : admissible_pairs(p.m, p.t)) {
    if (rs.k < k || rs.ell < ell) continue;
    Natural term = binomial(rs.k, k) * binomial(rs.ell, ell) * count_matrix_entries(rs.k, rs.ell, p);
    if ((rs.k + rs.ell - k - ell) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  if (total < 0) {
    std::ostringstream os;
    os << "negative class size for (" << k << ", " << ell << ") at " << to_string(p);
    throw ConsistencyError(os.str());
  }
  return total;
}

std::vector<ClassCount> class_breakdown(const CodeParams& params) {
  const auto p = normalized_for_counting(params);
  std::vector<ClassCount> out;
  for (const auto& pair : admissible_pairs(p.m, p.t))
    out.push_back({pair, count_matrix_entries(pair.k, pair.ell, p), count_class(pair.k, pair.ell, p)});
  return out;
}

Natural closed_size_T(const CodeParams& params) {
  Natural total = 1;
  for (const auto& c : class_breakdown(params)) total += c.class_size;
  return total;
}

std::vector<Natural> forward_matrix_totals(const std::vector<ClassCount>& classes) {
  std::vector<Natural> out;
  out.reserve(classes.size());
  for (const auto& rs : classes) {
    Natural a = 0;
    for (const auto& kl : classes)
      a += binomial(kl.pair.k, rs.pair.k) * binomial(kl.pair.ell, rs.pair.ell) * kl.class_size;
    out.push_back(a);
  }
  return out;
}

}  // namespace cyclocode
