#pragma once

#include <cstdint>
#include <vector>

#include "cyclocode/params.hpp"

namespace cyclocode::testing {

// Every (q, m, t, a, b) with q in `qs`, q^m <= max_universe, m <= max_m and
// b <= a (the counting regime; t = m-1 included with every b <= a).
inline std::vector<CodeParams> counting_grid(const std::vector<unsigned>& qs, std::uint64_t max_universe,
                                             unsigned max_m = 64) {
  std::vector<CodeParams> out;
  for (unsigned q : qs)
    for (unsigned m = 1; m <= max_m && pow_at_most(q, m, max_universe); ++m)
      for (unsigned t = 0; t < m; ++t)
        for (unsigned a = 1; a < q; ++a)
          for (unsigned b = 1; b <= a; ++b) out.push_back({q, m, t, a, b});
  return out;
}

// Every m >= 2 point with a, b independent, minus the zero code a = b = q-1, t = 0.
inline std::vector<CodeParams> dual_grid(const std::vector<unsigned>& qs, std::uint64_t max_universe,
                                         unsigned max_m = 64) {
  std::vector<CodeParams> out;
  for (unsigned q : qs)
    for (unsigned m = 2; m <= max_m && pow_at_most(q, m, max_universe); ++m)
      for (unsigned t = 0; t < m; ++t)
        for (unsigned a = 1; a < q; ++a)
          for (unsigned b = 1; b < q; ++b) {
            if (a == q - 1 && b == q - 1 && t == 0) continue;
            out.push_back({q, m, t, a, b});
          }
  return out;
}


}  // namespace cyclocode::testing
