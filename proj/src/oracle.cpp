#include "cyclocode/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <sstream>

#include "cyclocode/error.hpp"
#include "cyclocode/parallel.hpp"
#include "cyclocode/qadic.hpp"

namespace cyclocode {

namespace {

void check_word_params(const CodeParams& p) {
  // Like validate(), but any order of a and b and any m >= 1.
  validate(p, p.b <= p.a || p.t + 1 == p.m ? Regime::counting : Regime::dual);
}

std::uint64_t position_of(const FieldContext& field, Element x) {
  return x == 0 ? field.n() : field.log(x);
}

// GF(p)-generators of a GF(q)-code: every basis row times every p^j, j < e.
std::vector<std::vector<unsigned>> prime_generators(const BaseField& f,
                                                    const std::vector<std::vector<unsigned>>& rows) {
  std::vector<std::vector<unsigned>> out;
  out.reserve(rows.size() * f.degree());
  for (const auto& r : rows) {
    unsigned lambda = 1;
    for (unsigned j = 0; j < f.degree(); ++j, lambda *= f.characteristic()) {
      std::vector<unsigned> g(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) g[i] = f.mul(lambda, r[i]);
      out.push_back(std::move(g));
    }
  }
  return out;
}

struct Sparse {
  std::vector<std::uint32_t> pos;
  std::vector<unsigned char> val;
};

// Walks combinations of GF(p)-generators in modular Gray order, one
// generator added per step. Word state is dense GF(q) or packed GF(2).
class GrayWalker {
 public:
  GrayWalker(const BaseField& f, const std::vector<std::vector<unsigned>>& gens, std::size_t width)
      : f_(f), width_(width), binary_(f.order() == 2) {
    for (const auto& g : gens) {
      if (binary_) {
        std::vector<std::uint64_t> bits((width + 63) / 64);
        for (std::size_t i = 0; i < width; ++i)
          if (g[i]) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
        packed_.push_back(std::move(bits));
      } else {
        Sparse s;
        for (std::size_t i = 0; i < width; ++i)
          if (g[i]) {
            s.pos.push_back(static_cast<std::uint32_t>(i));
            s.val.push_back(static_cast<unsigned char>(g[i]));
          }
        sparse_.push_back(std::move(s));
      }
    }
    reset();
  }

  void reset() {
    weight_ = 0;
    if (binary_)
      bits_.assign((width_ + 63) / 64, 0);
    else
      dense_.assign(width_, 0);
  }

  void add(std::size_t g) {
    if (binary_) {
      const auto& src = packed_[g];
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < bits_.size(); ++i) {
        bits_[i] ^= src[i];
        w += static_cast<std::uint64_t>(std::popcount(bits_[i]));
      }
      weight_ = w;
      return;
    }
    const auto& s = sparse_[g];
    for (std::size_t i = 0; i < s.pos.size(); ++i) {
      auto& c = dense_[s.pos[i]];
      const unsigned next = f_.add(c, s.val[i]);
      weight_ += (next != 0);
      weight_ -= (c != 0);
      c = static_cast<unsigned char>(next);
    }
  }

  std::uint64_t weight() const { return weight_; }

 private:
  const BaseField& f_;
  std::size_t width_;
  bool binary_;
  std::vector<std::vector<std::uint64_t>> packed_;
  std::vector<Sparse> sparse_;
  std::vector<std::uint64_t> bits_;
  std::vector<unsigned char> dense_;
  std::uint64_t weight_ = 0;
};

}  // namespace

DefiningSet brute_T(const CodeParams& p, std::uint64_t cap) {
  check_word_params(p);
  if (!pow_at_most(p.q, p.m, cap)) throw ResourceError("brute_T: q^m exceeds the index cap");
  std::vector<Digit> bound(p.m, 0);
  for (unsigned i = 0; i + p.t + 1 < p.m; ++i) bound[i] = p.a;
  bound[p.m - p.t - 1] = p.b;
  std::vector<std::uint64_t> weight(p.m, 1);
  for (unsigned i = 1; i < p.m; ++i) weight[i] = weight[i - 1] * p.q;

  std::vector<std::uint64_t> seeds;
  std::vector<Digit> d(p.m, 0);
  for (;;) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < p.m; ++i) v += d[i] * weight[i];
    seeds.push_back(v);
    unsigned i = 0;
    while (i < p.m && d[i] == bound[i]) d[i++] = 0;
    if (i == p.m) break;
    ++d[i];
  }
  return union_cosets(seeds, p.q, p.m, cap);
}

std::map<AdmissiblePair, std::uint64_t> brute_profile_census(const CodeParams& p) {
  check_word_params(p);
  if (p.b > p.a) throw ParameterError("profile census requires b <= a");
  const auto universe = checked_pow(p.q, p.m);
  std::map<AdmissiblePair, std::uint64_t> census;
  std::vector<Digit> d(p.m);
  for (std::uint64_t s = 0; s < universe; ++s) {
    detail::expand_into(s, p.q, d);
    const auto prof = detail::profile_digits(d, p.a, p.b, p.t);
    if (prof.digits_ok) ++census[AdmissiblePair{prof.k, prof.ell}];
  }
  return census;
}

std::uint64_t brute_dimension(const FieldContext& field, const DefiningSet& d) {
  const auto g = generator_polynomial(field, d);
  return field.n() - static_cast<std::uint64_t>(g.degree());
}

std::optional<std::uint64_t> brute_max_prefix(const DefiningSet& t_perp) {
  const auto v = t_perp.first_missing();
  if (v == t_perp.universe()) return std::nullopt;
  return v;
}

std::vector<std::vector<unsigned>> code_generator_matrix(const FieldContext& field, const DefiningSet& d,
                                                         bool extended) {
  const auto g = generator_polynomial(field, d);
  const auto n = field.n();
  const auto k = n - static_cast<std::uint64_t>(g.degree());
  const BaseField& f = field.base();
  std::vector<std::vector<unsigned>> rows;
  rows.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    std::vector<unsigned> r(extended ? n + 1 : n, 0);
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) r[i + j] = g.coeffs[j];
    if (extended) {
      unsigned sum = 0;
      for (std::uint64_t j = 0; j < n; ++j) sum = f.add(sum, r[j]);
      r[n] = f.neg(sum);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<unsigned>> null_space(const BaseField& f, std::vector<std::vector<unsigned>> rows,
                                              std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][col] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    const unsigned inv = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(inv, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const unsigned c = f.neg(rows[i][col]);
      for (std::size_t j = col; j < width; ++j) rows[i][j] = f.add(rows[i][j], f.mul(c, rows[rank][j]));
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(width, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<unsigned>> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    std::vector<unsigned> x(width, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) x[pivots[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<unsigned>> dual_generator_matrix(const FieldContext& field, const DefiningSet& d,
                                                         bool extended) {
  // The dual of the cyclic code generated by g is generated by the reciprocal
  // of h = (x^n - 1) / g. The extended dual adds the all-ones word.
  const BaseField& f = field.base();
  const auto n = field.n();
  const auto g = generator_polynomial(field, d);
  const auto h = poly_divmod(f, x_pow_minus_one(f, n), g).first;
  std::vector<unsigned> recip(h.coeffs.rbegin(), h.coeffs.rend());
  const auto rows_needed = static_cast<std::uint64_t>(g.degree());
  std::vector<std::vector<unsigned>> rows;
  rows.reserve(rows_needed + 1);
  for (std::uint64_t i = 0; i < rows_needed; ++i) {
    std::vector<unsigned> r(extended ? n + 1 : n, 0);
    for (std::size_t j = 0; j < recip.size(); ++j) r[i + j] = recip[j];
    rows.push_back(std::move(r));
  }
  if (extended) rows.emplace_back(n + 1, 1U);
  return rows;
}

DistanceResult dual_min_distance(const FieldContext& field, const DefiningSet& t, DualFamily family,
                                 std::uint64_t budget, std::uint64_t weight_floor) {
  if (weight_floor < 1) throw ParameterError("weight floor must be at least 1");
  const bool extended = family == DualFamily::extended;
  const std::size_t width = extended ? field.n() + 1 : field.n();
  const BaseField& f = field.base();
  const auto dual_rows = dual_generator_matrix(field, t, extended);

  DistanceResult res;
  res.dimension = dual_rows.size();
  if (dual_rows.empty()) return res;  // zero dual code: no nonzero weight, value 0

  const auto gens = prime_generators(f, dual_rows);
  const unsigned p = f.characteristic();
  const auto digits = static_cast<unsigned>(gens.size());

  if (!pow_at_most(p, digits, budget)) {
    // Partial scan of the first `budget` codewords in Gray order.
    GrayWalker walk(f, gens, width);
    std::vector<unsigned> cnt(digits, 0);
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t step = 0; step < budget; ++step) {
      unsigned j = 0;
      while (cnt[j] == p - 1) cnt[j++] = 0;
      ++cnt[j];
      walk.add(j);
      best = std::min(best, walk.weight());
      ++res.enumerated;
      if (best == weight_floor) {
        res.kind = DistanceKind::exact;
        res.value = best;
        return res;
      }
    }
    if (weight_floor > 1 && best > weight_floor) {
      res.kind = DistanceKind::lower_bound_only;
      res.value = weight_floor;
    } else {
      res.kind = DistanceKind::budget_exhausted;
      res.value = best;
    }
    return res;
  }

  // Full enumeration, partitioned over the top `high` generator digits.
  unsigned high = 0;
  std::uint64_t parts = 1;
  const std::uint64_t want = std::uint64_t{8} * worker_count();
  if (pow_at_most(p, digits, 1U << 14)) {
    high = 0;
  } else {
    while (high < digits && parts < want) {
      parts *= p;
      ++high;
    }
  }
  const unsigned low = digits - high;
  std::uint64_t steps = 1;
  for (unsigned i = 0; i < low; ++i) steps *= p;

  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::atomic<std::uint64_t> seen{0};
  std::atomic<bool> stop{false};
  auto note = [&](std::uint64_t w) {
    auto cur = best.load();
    while (w < cur && !best.compare_exchange_weak(cur, w)) {
    }
    if (w == weight_floor) stop.store(true);
  };

  parallel_for(parts, [&](std::uint64_t c) {
    if (stop.load()) return;
    GrayWalker walk(f, gens, width);
    auto rest = c;
    for (unsigned i = 0; i < high; ++i) {
      const auto coef = rest % p;
      rest /= p;
      for (std::uint64_t r = 0; r < coef; ++r) walk.add(low + i);
    }
    std::uint64_t local_best = UINT64_MAX;
    std::uint64_t local_seen = 0;
    if (c != 0) {
      local_best = walk.weight();
      ++local_seen;
    }
    std::vector<unsigned> cnt(low, 0);
    for (std::uint64_t s = 1; s < steps; ++s) {
      unsigned j = 0;
      while (cnt[j] == p - 1) cnt[j++] = 0;
      ++cnt[j];
      walk.add(j);
      local_best = std::min(local_best, walk.weight());
      ++local_seen;
      if ((s & 4095) == 0) {
        note(local_best);
        if (stop.load()) break;
      }
    }
    note(local_best);
    seen.fetch_add(local_seen);
  });

  res.kind = DistanceKind::exact;
  res.value = best.load();
  res.enumerated = seen.load();
  return res;
}

std::vector<unsigned> apply_affine(const FieldContext& field, std::span<const unsigned> word, Element u,
                                   Element v) {
  const auto n = field.n();
  if (word.size() != n + 1) throw ParameterError("affine maps act on extended words of length q^m");
  if (u == 0 || u >= field.order() || v >= field.order()) throw ParameterError("affine map needs u != 0");
  std::vector<unsigned> out(n + 1, 0);
  for (std::uint64_t i = 0; i <= n; ++i) {
    const Element g = i == n ? 0 : field.exp(i);
    out[position_of(field, field.add(field.mul(u, g), v))] = word[i];
  }
  return out;
}

namespace {

// rho_{qs} = rho_s^q for words over GF(q), so one exponent per orbit suffices.
std::vector<std::uint64_t> orbit_leaders(const DefiningSet& d) {
  std::vector<std::uint64_t> out;
  for (auto s : d.members())
    if (leader(s, d.radix(), d.length()) == s) out.push_back(s);
  return out;
}

}  // namespace

bool satisfies_zeros(const FieldContext& field, std::span<const unsigned> word, const DefiningSet& d) {
  for (auto s : orbit_leaders(d))
    if (syndrome(field, word, s) != 0) return false;
  return true;
}

ProbeResult affine_invariance_probe(const FieldContext& field, const DefiningSet& d, std::uint64_t trials,
                                    std::uint64_t seed) {
  const auto n = field.n();
  if (d.radix() != field.q() || d.length() != field.m())
    throw ParameterError("defining set and field disagree on q or m");
  if (d.contains(n)) throw ParameterError("affine probe needs n outside the defining set");
  const auto g = generator_polynomial(field, d);
  const auto k = n - static_cast<std::uint64_t>(g.degree());
  const BaseField& f = field.base();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> coef(0, f.order() - 1);
  std::uniform_int_distribution<std::uint64_t> exponent(0, n - 1);
  std::uniform_int_distribution<Element> element(0, field.order() - 1);

  ProbeResult res;
  res.seed = seed;
  const auto members = orbit_leaders(d);
  std::vector<unsigned> word(n + 1);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Polynomial msg;
    for (std::uint64_t i = 0; i < k; ++i) msg.coeffs.push_back(coef(rng));
    while (!msg.coeffs.empty() && msg.coeffs.back() == 0) msg.coeffs.pop_back();
    const auto c = poly_mul(f, msg, g);
    std::fill(word.begin(), word.end(), 0U);
    unsigned sum = 0;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      word[i] = c.coeffs[i];
      sum = f.add(sum, c.coeffs[i]);
    }
    word[n] = f.neg(sum);

    const auto ulog = exponent(rng);
    const Element u = field.exp(ulog);
    const Element v = element(rng);
    const auto image = apply_affine(field, word, u, v);
    ++res.trials;
    for (auto s : members) {
      if (syndrome(field, word, s) != 0)
        throw ConsistencyError("affine probe: sampled word is not a codeword");
      if (syndrome(field, image, s) != 0) {
        std::ostringstream os;
        os << "trial " << trial << ": u = alpha^" << ulog << ", v = " << v << ", rho_" << s << " != 0";
        res.invariant = false;
        res.violation = os.str();
        return res;
      }
    }
  }
  return res;
}

bool affine_invariance_probe(const FieldContext& field, const CodeParams& p, std::uint64_t trials,
                             std::uint64_t seed) {
  check_word_params(p);
  return affine_invariance_probe(field, brute_T(p), trials, seed).invariant;
}

std::optional<DefiningSet> drop_descendant_orbit(const DefiningSet& d) {
  const unsigned q = d.radix();
  const unsigned m = d.length();
  const auto n = d.n();
  for (auto s : d.members()) {
    if (s == 0 || s == n) continue;
    // An immediate ascendant (one digit raised by one) has a larger digit sum,
    // so it never lies in the orbit of s.
    std::uint64_t w = 1;
    bool found = false;
    for (unsigned i = 0; i < m && !found; ++i, w *= q) {
      if ((s / w) % q != q - 1 && d.contains(s + w)) found = true;
    }
    if (!found) continue;
    DefiningSet out = d;
    for (auto x : coset_of(s, q, m).elements) out.erase(x);
    return out;
  }
  return std::nullopt;
}

}  // namespace cyclocode
