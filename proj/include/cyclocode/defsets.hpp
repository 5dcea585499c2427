#pragma once

#include <vector>

#include "cyclocode/cosets.hpp"
#include "cyclocode/counting.hpp"
#include "cyclocode/params.hpp"

namespace cyclocode {

/// T = {0} together with every s whose word has digits_ok and a nonzero
/// pattern profile. Counting regime (b <= a).
DefiningSet build_T(const CodeParams& p, std::uint64_t cap = kDefaultIndexCap);

/// All descendants of all members. D is affine-invariant iff closure(D) == D.
DefiningSet descendant_closure(const DefiningSet& d);

/// {s in [0, n] : n - s not in D}.
DefiningSet dual_set(const DefiningSet& d);

/// T-perp straight from the forbidden-pattern description; a and b independent.
DefiningSet dual_set_pattern(const CodeParams& p, std::uint64_t cap = kDefaultIndexCap);

/// Union of cl(s) for 1 <= s < delta. Requires 2 <= delta <= n.
DefiningSet bch_set(unsigned q, unsigned m, std::uint64_t delta,
                    std::uint64_t cap = kDefaultIndexCap);

struct DimensionReport {
  CodeParams params;
  Natural length;         // n = q^m - 1 (the extended code has length q^m)
  Natural size_T;         // |T|, including 0
  Natural dimension;      // q^m - |T|, shared by the cyclic and extended codes
  bool is_bch = false;    // the cyclic code is the narrow-sense primitive BCH code
  Natural designed_distance;  // (b+1) q^(m-t-1), meaningful when is_bch
  std::vector<ClassCount> classes;
};

/// Closed-form dimension. ZeroCodeError when n itself lies in T
/// (t = 0 with b = q-1 and a = q-1 or m = 1), where the cyclic code is {0}.
DimensionReport dimension(const CodeParams& p);

/// n - |T \ {0}| computed from a materialized build_T; used by --verify.
Natural materialized_dimension(const CodeParams& p, std::uint64_t cap = kDefaultIndexCap);

}  // namespace cyclocode
