#include <map>
#include <sstream>

#include "cyclocode/bounds.hpp"
#include "cyclocode/cli.hpp"
#include "cyclocode/defsets.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/galois.hpp"
#include "cyclocode/oracle.hpp"
#include "cyclocode/parallel.hpp"

namespace cyclocode {

namespace {

enum Check {
  kSizeT,
  kBuildT,
  kClassSizes,
  kDimension,
  kBchSet,
  kDescendantClosed,
  kAffineProbe,
  kDualSet,
  kMaxPrefix,
  kCertificate,
  kDistanceSound,
  kExtendedEqualsCyclic,
  kCheckCount
};

constexpr const char* kCheckNames[kCheckCount] = {
    "size_T = |brute T|",       "build_T = brute T",         "class sizes = census",
    "dimension = n - deg g",    "T* = BCH set (a = q-1)",    "T descendant-closed",
    "affine probe",             "T-perp pattern = reflection", "v = brute prefix",
    "certificate verifies",     "certified <= exact d",      "extended d = cyclic d"};

// Probes and exhaustive distances stay this small inside the suite.
constexpr std::uint64_t kProbeUniverse = 256;
constexpr std::uint64_t kDistanceBudget = 1 << 16;
constexpr std::uint64_t kProbeTrials = 20;

struct Outcome {
  int check;
  bool ok;
  std::string detail;
};

void check_point(const CodeParams& p, const FieldContext& field, std::uint64_t seed, std::vector<Outcome>& out) {
  auto note = [&](int check, bool ok, const std::string& detail = {}) {
    out.push_back({check, ok, ok ? std::string() : to_string(p) + (detail.empty() ? "" : ": " + detail)});
  };
  const auto t = brute_T(p);
  const bool zero_code = t.contains(t.n());
  const bool counting = p.b <= p.a || p.t == p.m - 1;

  if (counting) {
    const auto closed = closed_size_T(p);
    note(kSizeT, closed == Natural(t.size()), "closed " + closed.str() + ", brute " + std::to_string(t.size()));
    note(kBuildT, build_T(p) == t);
    if (p.b <= p.a) {
      const auto census = brute_profile_census(p);
      bool ok = true;
      std::string bad;
      for (const auto& c : class_breakdown(p)) {
        const auto it = census.find(c.pair);
        const Natural brute = it == census.end() ? 0 : it->second;
        if (brute != c.class_size) {
          ok = false;
          bad = "B(" + std::to_string(c.pair.k) + "," + std::to_string(c.pair.ell) + ") = " + c.class_size.str() +
                ", census " + brute.str();
        }
      }
      note(kClassSizes, ok, bad);
    }
    if (!zero_code) {
      const auto closed_dim = dimension(p).dimension;
      const auto brute = brute_dimension(field, t);
      note(kDimension, closed_dim == Natural(brute), "closed " + closed_dim.str() + ", n - deg g " + std::to_string(brute));
    }
    if (p.a == p.q - 1 || p.t == p.m - 1) {
      const auto delta = (p.b + 1) * checked_pow(p.q, p.m - p.t - 1);
      if (delta >= 2 && delta <= t.n()) {
        auto star = t;
        star.erase(0);
        note(kBchSet, star == bch_set(p.q, p.m, delta), "delta " + std::to_string(delta));
      }
    }
    note(kDescendantClosed, descendant_closure(t) == t);
    if (!zero_code && t.universe() <= kProbeUniverse) {
      const auto probe = affine_invariance_probe(field, t, kProbeTrials, seed);
      note(kAffineProbe, probe.invariant, probe.violation);
    }
    if (p.m >= 2) note(kDualSet, dual_set_pattern(p) == dual_set(t));
  }

  if (p.m < 2 || (p.a == p.q - 1 && p.b == p.q - 1 && p.t == 0)) return;
  const auto tp = dual_set(t);
  const auto brute_v = brute_max_prefix(tp);
  const auto v = max_zero_prefix(p);
  note(kMaxPrefix, brute_v && Natural(*brute_v) == v,
       "formula " + v.str() + ", scan " + (brute_v ? std::to_string(*brute_v) : std::string("none")));

  const auto cert = build_certificate(p);
  const auto by_set = verify_certificate(cert, tp);
  const auto by_pattern = verify_certificate(cert, p);
  note(kCertificate, by_set.passed() && by_pattern.passed() && by_set.certified_bound == cert.v + cert.s_size + 1,
       by_set.failure.empty() ? by_pattern.failure : by_set.failure);

  if (!zero_code && pow_at_most(p.q, static_cast<unsigned>(t.size()), kDistanceBudget)) {
    const auto cyc = dual_min_distance(field, t, DualFamily::cyclic, kDistanceBudget);
    const auto ext = dual_min_distance(field, t, DualFamily::extended, kDistanceBudget);
    if (cyc.kind == DistanceKind::exact && by_set.certified_bound) {
      note(kDistanceSound, *by_set.certified_bound <= cyc.value,
           "certified " + std::to_string(*by_set.certified_bound) + " > exact " + std::to_string(cyc.value));
    }
    if (cyc.kind == DistanceKind::exact && ext.kind == DistanceKind::exact) {
      note(kExtendedEqualsCyclic, cyc.value == ext.value,
           "cyclic " + std::to_string(cyc.value) + ", extended " + std::to_string(ext.value));
    }
  }
}

}  // namespace

std::vector<CheckTally> run_oracle_suite(std::uint64_t max_n, std::uint64_t seed) {
  if (max_n > (std::uint64_t{1} << 20)) throw ResourceError("verify covers q^m up to 2^20");
  std::vector<CodeParams> points;
  std::map<std::pair<unsigned, unsigned>, FieldContext> fields;
  for (unsigned q : kSupportedFieldOrders)
    for (unsigned m = 1; pow_at_most(q, m, max_n); ++m) {
      fields.emplace(std::pair{q, m}, FieldContext::make(q, m));
      for (unsigned t = 0; t < m; ++t)
        for (unsigned a = 1; a < q; ++a)
          for (unsigned b = 1; b < q; ++b) points.push_back({q, m, t, a, b});
    }

  std::vector<std::vector<Outcome>> results(points.size());
  parallel_for(points.size(), [&](std::uint64_t i) {
    const auto& p = points[i];
    check_point(p, fields.at({p.q, p.m}), seed, results[i]);
  });

  std::vector<CheckTally> tallies(kCheckCount);
  for (int c = 0; c < kCheckCount; ++c) tallies[c].name = kCheckNames[c];
  for (const auto& rs : results)
    for (const auto& r : rs) {
      auto& tally = tallies[r.check];
      ++tally.points;
      if (r.ok) ++tally.passed;
      else tally.failures.push_back(r.detail);
    }
  return tallies;
}

}  // namespace cyclocode
