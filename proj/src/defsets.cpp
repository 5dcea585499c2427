#include "cyclocode/defsets.hpp"

#include <sstream>

#include "cyclocode/error.hpp"
#include "cyclocode/parallel.hpp"
#include "cyclocode/qadic.hpp"

namespace cyclocode {

namespace {

// Fills `out` with every s in [0, n] for which keep(digits of s) holds.
// The index range is split into 64-aligned chunks so workers touch disjoint words.
template <typename Pred>
void fill_by_digits(DefiningSet& out, Pred keep) {
  const auto universe = out.universe();
  const unsigned q = out.radix();
  const unsigned m = out.length();
  constexpr std::uint64_t kChunk = 1 << 14;
  const auto chunks = (universe + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> found(chunks);
  parallel_for(chunks, [&](std::uint64_t c) {
    std::vector<Digit> digits(m);
    const auto lo = c * kChunk;
    const auto hi = std::min(universe, lo + kChunk);
    detail::expand_into(lo, q, digits);
    for (auto s = lo; s < hi; ++s) {
      if (keep(std::span<const Digit>(digits))) found[c].push_back(s);
      for (unsigned i = 0; i < m; ++i) {  // odometer increment
        if (++digits[i] < q) break;
        digits[i] = 0;
      }
    }
  });
  for (const auto& chunk : found)
    for (auto s : chunk) out.insert(s);
}

bool n_in_T(const CodeParams& p) {
  return p.t == 0 && p.b == p.q - 1 && (p.a == p.q - 1 || p.m == 1);
}

}  // namespace

DefiningSet build_T(const CodeParams& params, std::uint64_t cap) {
  const auto p = normalized_for_counting(params);
  DefiningSet out(p.q, p.m, cap);
  fill_by_digits(out, [&](std::span<const Digit> d) {
    const auto prof = detail::profile_digits(d, p.a, p.b, p.t);
    return prof.digits_ok && (prof.k != 0 || prof.ell != 0);
  });
  out.insert(0);
  return out;
}

DefiningSet descendant_closure(const DefiningSet& d) {
  // Downward closure one digit at a time: after processing digit i, the set
  // is closed under lowering digit i by one (and hence to any smaller value).
  DefiningSet out = d;
  const unsigned q = d.radix();
  std::uint64_t weight = 1;
  for (unsigned i = 0; i < d.length(); ++i, weight *= q) {
    // Visit values in decreasing order so each lowering propagates in one pass.
    for (std::uint64_t s = out.universe(); s-- > 0;) {
      if (!out.contains(s)) continue;
      if ((s / weight) % q != 0) out.insert(s - weight);
    }
  }
  return out;
}

DefiningSet dual_set(const DefiningSet& d) {
  DefiningSet out(d.radix(), d.length(), d.universe());
  const auto n = d.n();
  for (std::uint64_t s = 0; s <= n; ++s)
    if (!d.contains(n - s)) out.insert(s);
  return out;
}

DefiningSet dual_set_pattern(const CodeParams& p, std::uint64_t cap) {
  validate(p, Regime::dual);
  DefiningSet out(p.q, p.m, cap);
  fill_by_digits(out, [&](std::span<const Digit> d) {
    return !detail::dual_exclusion_digits(d, p.q, p.a, p.b, p.t);
  });
  return out;
}

DefiningSet bch_set(unsigned q, unsigned m, std::uint64_t delta, std::uint64_t cap) {
  DefiningSet probe(q, m, cap);
  if (delta < 2 || delta > probe.n()) {
    std::ostringstream os;
    os << "designed distance " << delta << " outside [2, " << probe.n() << "]";
    throw ParameterError(os.str());
  }
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s < delta; ++s) seeds.push_back(s);
  return union_cosets(seeds, q, m, cap);
}

DimensionReport dimension(const CodeParams& params) {
  const auto p = normalized_for_counting(params);
  if (n_in_T(p)) throw ZeroCodeError("n lies in T, so the cyclic code is {0} [" + to_string(params) + "]");
  DimensionReport r;
  r.params = params;
  r.classes = class_breakdown(p);
  r.size_T = 1;
  for (const auto& c : r.classes) r.size_T += c.class_size;
  const Natural universe = pow_natural(p.q, p.m);
  r.length = universe - 1;
  r.dimension = universe - r.size_T;
  r.is_bch = params.a == params.q - 1 || params.t == params.m - 1;
  r.designed_distance = (params.b + 1) * pow_natural(params.q, params.m - params.t - 1);
  return r;
}

Natural materialized_dimension(const CodeParams& params, std::uint64_t cap) {
  const auto p = normalized_for_counting(params);
  if (n_in_T(p)) throw ZeroCodeError("n lies in T, so the cyclic code is {0} [" + to_string(params) + "]");
  const auto t_set = build_T(p, cap);
  if (t_set.contains(t_set.n()))
    throw ConsistencyError("materialized T contains n although the closed form excludes it");
  return Natural(t_set.n()) - (t_set.size() - 1);
}

}  // namespace cyclocode
