#pragma once

#include <compare>
#include <vector>

#include "cyclocode/params.hpp"

namespace cyclocode {

/// (k, ell) with k(t+1) + ell(t+2) <= m and (k, ell) != (0, 0).
struct AdmissiblePair {
  unsigned k = 0;
  unsigned ell = 0;

  auto operator<=>(const AdmissiblePair&) const = default;
};

/// All admissible pairs, ell-major then k ascending: for (m, t) = (4, 1)
/// this yields (1,0), (2,0), (0,1).
std::vector<AdmissiblePair> admissible_pairs(unsigned m, unsigned t);

/// Number of length-m cyclic symbol patterns with exactly k blocks x0^t,
/// ell blocks y0^(t+1), and every other position a free symbol z:
///   m/N * N! / (k! ell! (N-k-ell)!),  N = m - kt - ell(t+1).
Natural count_pattern_words(unsigned k, unsigned ell, unsigned m, unsigned t);

/// A_{r,s} = b^r (a-b)^s (a+1)^(m - r(t+1) - s(t+2)) * count_pattern_words(r, s, m, t).
Natural count_matrix_entries(unsigned r, unsigned s, const CodeParams& p);

/// Class size B_{k,ell} by binomial inversion of the A_{r,s} system.
Natural count_class(unsigned k, unsigned ell, const CodeParams& p);

/// |T| = sum of B_{k,ell} over admissible pairs, plus one for 0.
Natural closed_size_T(const CodeParams& p);

struct ClassCount {
  AdmissiblePair pair;
  Natural matrix_entries;  // A
  Natural class_size;      // B
};

/// A and B for every admissible pair, in admissible_pairs() order.
std::vector<ClassCount> class_breakdown(const CodeParams& p);

/// Forward identity: A_{r,s} = sum C(k,r) C(ell,s) B_{k,ell}, applied to `classes`.
std::vector<Natural> forward_matrix_totals(const std::vector<ClassCount>& classes);

/// Params with a replaced by b when t = m-1 (where a drops out of every formula).
CodeParams normalized_for_counting(const CodeParams& p);

}  // namespace cyclocode
