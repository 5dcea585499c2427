#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclocode/cosets.hpp"
#include "cyclocode/params.hpp"

namespace cyclocode {

/// The eleven mutually exclusive parameter regions of the dual-distance
/// bound. Cases 1-7 have a = q-1 > b, cases 8-10 have a = b = q-1 with t >= 1,
/// case 11 has a < q-1.
enum class BoundCase : int {
  case1 = 1,  // a=q-1, b<q-1, t>=1, m>=2t+5
  case2,      // a=q-1, b<q-1, t>=1, m=2t+4
  case3,      // a=q-1, b<q-1, t>=1, m=2t+3
  case4,      // a=q-1, b<q-1, t>=1, t+3<=m<=2t+2
  case5,      // a=q-1, b<q-1, m=t+2
  case6,      // a=q-1, b<q-1, m=t+1
  case7,      // a=q-1, b<q-1, t=0, m>=3
  case8,      // a=b=q-1, t>=1, m>=2t+2
  case9,      // a=b=q-1, t>=1, t+2<=m<=2t+1
  case10,     // a=b=q-1, t>=1, m=t+1
  case11,     // a<q-1
};

inline constexpr int kBoundCaseCount = 11;

int case_number(BoundCase c);
std::string_view case_condition(BoundCase c);

/// Validates the dual regime and, when t = m-1, replaces a by q-1: T does not
/// depend on a there, and every function below works on this form.
CodeParams normalized_for_bounds(const CodeParams& p);

/// ZeroCodeError for a = b = q-1, t = 0.
BoundCase classify_case(const CodeParams& p);

/// The v with [0, v) inside T-perp and v outside it, by the five-case formula.
Natural max_zero_prefix(const CodeParams& p);

/// The closed-form lower bound on the dual distance for the classified case.
Natural stated_bound(const CodeParams& p);

struct GridAxis {
  std::uint64_t weight = 1;
  std::uint64_t lo = 0;
  std::uint64_t count = 0;
};

/// A translate set S = { sum_j weight_j * (lo_j + i_j) : 0 <= i_j < count_j },
/// optionally without the all-lo-equals-zero origin. Axes are listed most
/// significant first and the weights keep the elements distinct and sorted by index.
struct TranslateGrid {
  std::vector<GridAxis> axes;
  bool exclude_origin = false;

  std::uint64_t size() const;
  /// The index-th element in increasing order. Requires index < size().
  std::uint64_t element(std::uint64_t index) const;
};

/// Roos-type witness (v, z, S) for the lower bound d >= v + |S| + 1.
struct BoundCertificate {
  BoundCase case_id = BoundCase::case11;
  std::uint64_t v = 0;
  std::uint64_t z = 1;
  TranslateGrid grid;
  std::uint64_t s_size = 0;
  bool enumerated = true;            // s_set holds all of S
  std::vector<std::uint64_t> s_set;  // sorted; empty when !enumerated
  std::uint64_t claimed_bound = 0;   // v + |S| + 1
};

inline constexpr std::uint64_t kDefaultTranslateCap = 1'000'000;

/// Builds the case's (z, S). S is listed explicitly up to `s_cap` elements and
/// kept in grid form beyond that. ResourceError if q^m does not fit in 63 bits.
BoundCertificate build_certificate(const CodeParams& p, std::uint64_t s_cap = kDefaultTranslateCap);

struct VerifyOptions {
  std::uint64_t sample_size = 4096;          // translates checked when S is not enumerated
  std::uint64_t membership_cap = 4'000'000'000;  // ResourceError above this many tests
};

struct CertificateVerdict {
  bool zero_free = true;      // 0 not in S and S inside [1, n]
  bool prefix_ok = true;      // [0, v) inside T-perp
  bool translates_ok = true;  // [sz, sz+v) mod n inside T-perp for each s in S
  bool gcd_ok = true;         // gcd(z, n) = 1
  bool gap_ok = true;         // max S - min S - |S| + 1 < v
  bool size_ok = true;        // claimed_bound = v + |S| + 1
  bool sampled = false;       // translates checked on a sample only
  std::string failure;        // first violation, empty on success
  std::optional<std::uint64_t> certified_bound;

  bool passed() const {
    return zero_free && prefix_ok && translates_ok && gcd_ok && gap_ok && size_ok;
  }
};

/// Checks the Roos conditions with T-perp membership decided by the forbidden
/// pattern on each residue's word.
CertificateVerdict verify_certificate(const BoundCertificate& cert, const CodeParams& p,
                                      const VerifyOptions& options = {});

/// Same checks against an explicitly materialized T-perp.
CertificateVerdict verify_certificate(const BoundCertificate& cert, const DefiningSet& t_perp,
                                      const VerifyOptions& options = {});

struct AuditRow {
  CodeParams params;
  BoundCase case_id = BoundCase::case11;
  Natural v;
  Natural stated;
  std::optional<std::uint64_t> certified;  // set when verification passed
  CertificateVerdict verdict;
  std::uint64_t s_size = 0;
  std::uint64_t z = 1;
  std::optional<Natural> mismatch;  // stated - certified, when certified

  bool verified_ok() const { return verdict.passed(); }
};

AuditRow audit(const CodeParams& p, const VerifyOptions& options = {});

}  // namespace cyclocode
