#include "cyclocode/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "cyclocode/error.hpp"
#include "cyclocode/parallel.hpp"
#include "cyclocode/qadic.hpp"

namespace cyclocode {

namespace {

Natural geometric_sum(unsigned q, int top) {  // sum_{i=0}^{top} q^i, 0 if top < 0
  Natural s = 0;
  for (int i = 0; i <= top; ++i) s += pow_natural(q, static_cast<unsigned>(i));
  return s;
}

Natural qp(unsigned q, int e) { return pow_natural(q, static_cast<unsigned>(e)); }

std::uint64_t to_u64(const Natural& x, const char* what) {
  if (x < 0 || x > Natural(UINT64_MAX)) throw ResourceError(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(x);
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % mod);
}

}  // namespace

int case_number(BoundCase c) { return static_cast<int>(c); }

std::string_view case_condition(BoundCase c) {
  switch (c) {
    case BoundCase::case1: return "a=q-1, b<q-1, t>=1, m>=2t+5";
    case BoundCase::case2: return "a=q-1, b<q-1, t>=1, m=2t+4";
    case BoundCase::case3: return "a=q-1, b<q-1, t>=1, m=2t+3";
    case BoundCase::case4: return "a=q-1, b<q-1, t>=1, t+3<=m<=2t+2";
    case BoundCase::case5: return "a=q-1, b<q-1, m=t+2";
    case BoundCase::case6: return "a=q-1, b<q-1, m=t+1";
    case BoundCase::case7: return "a=q-1, b<q-1, t=0, m>=3";
    case BoundCase::case8: return "a=b=q-1, t>=1, m>=2t+2";
    case BoundCase::case9: return "a=b=q-1, t>=1, t+2<=m<=2t+1";
    case BoundCase::case10: return "a=b=q-1, t>=1, m=t+1";
    case BoundCase::case11: return "a<q-1";
  }
  return "?";
}

CodeParams normalized_for_bounds(const CodeParams& p) {
  validate(p, Regime::dual);
  CodeParams out = p;
  if (p.t == p.m - 1) out.a = p.q - 1;
  return out;
}

BoundCase classify_case(const CodeParams& raw) {
  const auto p = normalized_for_bounds(raw);
  const unsigned top = p.q - 1;
  const unsigned m = p.m;
  const unsigned t = p.t;
  if (p.a != top) return BoundCase::case11;
  if (p.b == top) {
    if (t == 0) throw ZeroCodeError("a = b = q-1 with t = 0 gives the zero code [" + to_string(p) + "]");
    if (m >= 2 * t + 2) return BoundCase::case8;
    if (m >= t + 2) return BoundCase::case9;
    return BoundCase::case10;
  }
  if (t == 0) {
    if (m == 1) return BoundCase::case6;
    if (m == 2) return BoundCase::case5;
    return BoundCase::case7;
  }
  if (m >= 2 * t + 5) return BoundCase::case1;
  if (m == 2 * t + 4) return BoundCase::case2;
  if (m == 2 * t + 3) return BoundCase::case3;
  if (m >= t + 3) return BoundCase::case4;
  if (m == t + 2) return BoundCase::case5;
  return BoundCase::case6;
}

Natural max_zero_prefix(const CodeParams& raw) {
  const auto p = normalized_for_bounds(raw);
  classify_case(p);  // validates and rejects the zero code
  const unsigned q = p.q;
  const int m = static_cast<int>(p.m);
  const int t = static_cast<int>(p.t);
  const Natural a = p.a;
  const Natural b = p.b;
  if (p.a == q - 1 && p.b == q - 1) return qp(q, t) - 1;
  if (p.a == q - 1) {
    if (m >= t + 2) return qp(q, t + 1) - 1 - b;
    return qp(q, t + 1) - b * qp(q, t) - 1;
  }
  const Natural block = (q - 1 - a) * geometric_sum(q, m - t - 2) + 1;
  if (p.b >= p.a) return qp(q, t) * block + qp(q, m - 1) * (q - 1 - b) - 1;
  return qp(q, t + 1) * block - 1 - b;
}

Natural stated_bound(const CodeParams& raw) {
  const auto p = normalized_for_bounds(raw);
  const auto c = classify_case(p);
  const unsigned q = p.q;
  const int m = static_cast<int>(p.m);
  const int t = static_cast<int>(p.t);
  const Natural Q = q;
  const Natural a = p.a;
  const Natural b = p.b;
  switch (c) {
    case BoundCase::case1: return qp(q, t + 2) - Q * b - Q;
    case BoundCase::case2: return (Q - b) * (qp(q, t + 1) - 1 - b);
    case BoundCase::case3: return 2 * qp(q, t + 1) - (b + 1) * qp(q, t) - 1 - b;
    case BoundCase::case4: return (Q - 1 - b) * (Q - 1) * qp(q, m - t - 3) + qp(q, t + 1) - 1 - b;
    case BoundCase::case5: return qp(q, t + 1) + Q - 2 - 2 * b;
    case BoundCase::case6: return (Q - b) * qp(q, t);
    case BoundCase::case7: {
      const Natural ceil_ratio = (Q + b) / (b + 1);
      const Natural cap = Q - b;
      return (ceil_ratio < cap ? ceil_ratio : cap) * (Q - 1 - b);
    }
    case BoundCase::case8: return qp(q, t + 1) - Q + 1;
    case BoundCase::case9: return qp(q, m - t) - 2 * qp(q, m - t - 1) + qp(q, m - t - 2) + qp(q, t) - 1;
    case BoundCase::case10: return qp(q, t) + Q - 2;
    case BoundCase::case11: {
      const Natural block = (Q - 1 - a) * geometric_sum(q, m - t - 2) + 1;
      if (p.b >= p.a) return qp(q, t) * block + qp(q, m - 1) * (Q - 1 - b);
      return qp(q, t + 1) * block - b;
    }
  }
  throw ConsistencyError("unhandled bound case");
}

std::uint64_t TranslateGrid::size() const {
  if (axes.empty()) return 0;
  std::uint64_t total = 1;
  bool origin_present = true;
  for (const auto& ax : axes) {
    if (ax.count == 0) return 0;
    total *= ax.count;
    origin_present = origin_present && ax.lo == 0;
  }
  return exclude_origin && origin_present ? total - 1 : total;
}

std::uint64_t TranslateGrid::element(std::uint64_t index) const {
  bool origin_present = std::all_of(axes.begin(), axes.end(), [](const GridAxis& ax) { return ax.lo == 0; });
  if (exclude_origin && origin_present) ++index;
  std::uint64_t value = 0;
  for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
    value += it->weight * (it->lo + index % it->count);
    index /= it->count;
  }
  return value;
}

BoundCertificate build_certificate(const CodeParams& raw, std::uint64_t s_cap) {
  const auto p = normalized_for_bounds(raw);
  const auto c = classify_case(p);
  if (!pow_at_most(p.q, p.m, std::uint64_t{1} << 63))
    throw ResourceError("certificates need q^m below 2^63 [" + to_string(p) + "]");
  const std::uint64_t q = p.q;
  const unsigned m = p.m;
  const unsigned t = p.t;
  const std::uint64_t b = p.b;
  auto Q = [&](unsigned e) { return checked_pow(q, e); };

  BoundCertificate cert;
  cert.case_id = c;
  cert.v = to_u64(max_zero_prefix(p), "v");
  TranslateGrid& g = cert.grid;
  switch (c) {
    case BoundCase::case1:
      cert.z = Q(t + 2);
      g = {{{Q(t + 1), 0, q - 1}, {1, 0, Q(t + 1) - 1 - b}}, true};
      break;
    case BoundCase::case2:
      cert.z = Q(t + 2);
      g = {{{Q(t + 1), 0, q - 1 - b}, {1, 0, Q(t + 1) - 1 - b}}, true};
      break;
    case BoundCase::case3:
      cert.z = Q(t + 2);
      g = {{{Q(t), 0, q - 1 - b}, {1, 0, Q(t)}}, true};
      break;
    case BoundCase::case4:
      cert.z = Q(t + 1);
      g = {{{Q(m - t - 2), 0, q - 1 - b}, {q, 0, Q(m - t - 3)}, {1, 0, q - 1}}, true};
      break;
    case BoundCase::case5:
      cert.z = Q(t + 1);
      g = {{{1, 1, q - 2 - b}}, false};
      break;
    case BoundCase::case7: {
      cert.z = q;
      const std::uint64_t ceil_ratio = (q + b) / (b + 1);
      const std::uint64_t alpha = std::min(q - 2 - b, ceil_ratio - 2);
      g = {{{q, 0, alpha + 1}, {1, 0, q - 1 - b}}, true};
      break;
    }
    case BoundCase::case8:
      cert.z = Q(t + 1);
      g = {{{Q(t), 0, q - 1}, {1, 0, Q(t) - 1}}, true};
      break;
    case BoundCase::case9:
      cert.z = Q(t);
      g = {{{Q(m - t - 1), 0, q - 1}, {q, 0, Q(m - t - 2)}, {1, 0, q - 1}}, true};
      break;
    case BoundCase::case10:
      cert.z = Q(t);
      g = {{{1, 1, q - 2}}, false};
      break;
    case BoundCase::case6:
    case BoundCase::case11:
      cert.z = 1;
      g = {};
      break;
  }
  cert.s_size = g.size();
  cert.enumerated = cert.s_size <= s_cap;
  if (cert.enumerated) {
    cert.s_set.reserve(cert.s_size);
    for (std::uint64_t i = 0; i < cert.s_size; ++i) cert.s_set.push_back(g.element(i));
  }
  cert.claimed_bound = cert.v + cert.s_size + 1;
  return cert;
}

namespace {

struct PatternMembership {
  unsigned q, m, a, b, t;
  bool operator()(std::uint64_t s, std::span<Digit> scratch) const {
    detail::expand_into(s, q, scratch);
    return !detail::dual_exclusion_digits(scratch, q, a, b, t);
  }
};

struct SetMembership {
  const DefiningSet* set;
  bool operator()(std::uint64_t s, std::span<Digit>) const { return set->contains(s); }
};

template <typename Member>
CertificateVerdict verify_with(const BoundCertificate& cert, unsigned q, unsigned m, Member member,
                               const VerifyOptions& options) {
  CertificateVerdict verdict;
  const std::uint64_t n = checked_pow(q, m) - 1;
  const std::uint64_t v = cert.v;
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (verdict.failure.empty()) verdict.failure = why;
  };

  // Which elements of S get their translates checked.
  const std::uint64_t s_size = cert.enumerated ? cert.s_set.size() : cert.grid.size();
  auto s_at = [&](std::uint64_t i) { return cert.enumerated ? cert.s_set[i] : cert.grid.element(i); };
  std::vector<std::uint64_t> checked;
  if (cert.enumerated || s_size <= options.sample_size) {
    checked.resize(s_size);
    std::iota(checked.begin(), checked.end(), std::uint64_t{0});
  } else {
    verdict.sampled = true;
    const std::uint64_t stride = s_size / options.sample_size;
    for (std::uint64_t i = 0; i < s_size; i += stride) checked.push_back(i);
    if (checked.back() != s_size - 1) checked.push_back(s_size - 1);
  }
  const long double work = static_cast<long double>(v) * static_cast<long double>(checked.size() + 1);
  if (work > static_cast<long double>(options.membership_cap)) {
    std::ostringstream os;
    os << "certificate verification needs about " << static_cast<double>(work)
       << " membership tests, above the cap of " << options.membership_cap;
    throw ResourceError(os.str());
  }

  if (cert.claimed_bound != v + s_size + 1) fail(verdict.size_ok, "claimed bound differs from v + |S| + 1");
  if (v > n + 1) fail(verdict.prefix_ok, "v exceeds q^m");

  // Grid-form S is sorted by index, so its extremes are the first and last elements.
  std::uint64_t s_min = UINT64_MAX, s_max = 0;
  auto inspect = [&](std::uint64_t s) {
    if (s == 0) fail(verdict.zero_free, "zero in S");
    else if (s > n) fail(verdict.zero_free, "element of S exceeds n");
    s_min = std::min(s_min, s);
    s_max = std::max(s_max, s);
  };
  if (cert.enumerated) {
    for (auto s : cert.s_set) inspect(s);
  } else if (s_size > 0) {
    inspect(s_at(0));
    inspect(s_at(s_size - 1));
  }

  if (s_size > 0) {
    if (std::gcd(cert.z, n) != 1) fail(verdict.gcd_ok, "gcd(z, n) != 1");
    const auto spread = static_cast<long double>(s_max) - static_cast<long double>(s_min) -
                        static_cast<long double>(s_size) + 1;
    if (!(spread < static_cast<long double>(v))) fail(verdict.gap_ok, "max S - min S - |S| + 1 >= v");
  }

  // (i) [0, v) inside T-perp.
  if (verdict.prefix_ok) {
    std::vector<Digit> scratch(m);
    for (std::uint64_t w = 0; w < v; ++w) {
      if (!member(w, scratch)) {
        fail(verdict.prefix_ok, "prefix value " + std::to_string(w) + " outside T-perp");
        break;
      }
    }
  }

  // (ii) every translate [sz, sz + v) mod n inside T-perp.
  if (verdict.zero_free && !checked.empty()) {
    std::atomic<std::uint64_t> first_bad{UINT64_MAX};
    std::atomic<std::uint64_t> bad_residue{0};
    const std::uint64_t z = cert.z % n;
    constexpr std::uint64_t kBlock = 64;
    const auto blocks = (checked.size() + kBlock - 1) / kBlock;
    parallel_for(blocks, [&](std::uint64_t blk) {
      std::vector<Digit> scratch(m);
      const auto end = std::min<std::uint64_t>(checked.size(), (blk + 1) * kBlock);
      for (auto j = blk * kBlock; j < end; ++j) {
        if (j > first_bad.load()) return;
        std::uint64_t r = mul_mod(s_at(checked[j]) % n, z, n);
        for (std::uint64_t w = 0; w < v; ++w) {
          if (!member(r, scratch)) {
            auto cur = first_bad.load();
            while (j < cur && !first_bad.compare_exchange_weak(cur, j)) {
            }
            if (first_bad.load() == j) bad_residue.store(r);
            return;
          }
          if (++r == n) r = 0;
        }
      }
    });
    if (first_bad.load() != UINT64_MAX) {
      std::ostringstream os;
      os << "translate of s = " << s_at(checked[first_bad.load()]) << " leaves T-perp at residue "
         << bad_residue.load();
      fail(verdict.translates_ok, os.str());
    }
  }

  if (verdict.passed()) verdict.certified_bound = v + s_size + 1;
  return verdict;
}

}  // namespace

CertificateVerdict verify_certificate(const BoundCertificate& cert, const CodeParams& p,
                                      const VerifyOptions& options) {
  validate(p, Regime::dual);
  return verify_with(cert, p.q, p.m, PatternMembership{p.q, p.m, p.a, p.b, p.t}, options);
}

CertificateVerdict verify_certificate(const BoundCertificate& cert, const DefiningSet& t_perp,
                                      const VerifyOptions& options) {
  return verify_with(cert, t_perp.radix(), t_perp.length(), SetMembership{&t_perp}, options);
}

AuditRow audit(const CodeParams& p, const VerifyOptions& options) {
  AuditRow row;
  row.params = p;
  row.case_id = classify_case(p);
  row.v = max_zero_prefix(p);
  row.stated = stated_bound(p);
  const auto cert = build_certificate(p);
  row.s_size = cert.s_size;
  row.z = cert.z;
  row.verdict = verify_certificate(cert, p, options);
  if (row.verdict.certified_bound) {
    row.certified = *row.verdict.certified_bound;
    row.mismatch = row.stated - Natural(*row.certified);
  }
  return row;
}

}  // namespace cyclocode
