#include "cyclocode/galois.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cyclocode/error.hpp"
#include "cyclocode/params.hpp"
#include "field_tables.hpp"

namespace cyclocode {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

const detail::BaseFieldEntry& base_entry(unsigned q) {
  for (const auto& e : detail::base_field_table())
    if (e.q == q) return e;
  std::ostringstream os;
  os << "GF(" << q << ") is not among the supported base fields";
  throw ParameterError(os.str());
}

void trim(Polynomial& p) {
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
}

}  // namespace

BaseField::BaseField(unsigned q) {
  const auto& entry = base_entry(q);
  q_ = entry.q;
  p_ = entry.p;
  e_ = entry.e;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  auto digits = [&](unsigned v) {
    std::vector<unsigned> d(e_);
    for (auto& x : d) {
      x = v % p_;
      v /= p_;
    }
    return d;
  };
  auto value = [&](const std::vector<unsigned>& d) {
    unsigned v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p_ + *it;
    return v;
  };
  for (unsigned x = 0; x < q_; ++x) {
    const auto dx = digits(x);
    for (unsigned y = 0; y < q_; ++y) {
      const auto dy = digits(y);
      std::vector<unsigned> sum(e_);
      for (unsigned i = 0; i < e_; ++i) sum[i] = (dx[i] + dy[i]) % p_;
      add_[x * q_ + y] = value(sum);
      std::vector<unsigned> prod(2 * e_ - 1, 0);
      for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
      for (unsigned k = 2 * e_ - 2; k >= e_; --k) {  // reduce by the monic modulus
        const unsigned c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i <= e_; ++i)
          prod[k - e_ + i] = (prod[k - e_ + i] + p_ * p_ - c * entry.modulus[i] % p_) % p_;
      }
      prod.resize(e_);
      mul_[x * q_ + y] = value(prod);
    }
  }
  for (unsigned x = 0; x < q_; ++x) {
    for (unsigned y = 0; y < q_; ++y) {
      if (add(x, y) == 0) neg_[x] = y;
      if (mul(x, y) == 1) inv_[x] = y;
    }
  }
}

FieldContext::FieldContext(BaseField base, unsigned m, std::vector<unsigned> modulus)
    : base_(std::move(base)), m_(m), order_(checked_pow(base_.order(), m)), modulus_(std::move(modulus)) {}

FieldContext FieldContext::make(unsigned q, unsigned m, std::uint64_t table_cap) {
  BaseField base(q);
  if (m < 1) throw ParameterError("extension degree must be at least 1");
  if (!pow_at_most(q, m, std::uint64_t{1} << 32)) {
    std::ostringstream os;
    os << "GF(" << q << "^" << m << ") exceeds the supported 2^32 elements";
    throw ResourceError(os.str());
  }
  std::vector<unsigned> modulus{0, 1};
  if (m >= 2) {
    const auto& table = detail::extension_table();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const detail::ExtensionEntry& e) { return e.q == q && e.m == m; });
    if (it == table.end()) throw ParameterError("no built-in modulus for this (q, m)");
    modulus = it->modulus;
  }
  FieldContext f(std::move(base), m, std::move(modulus));

  const auto n = f.n();
  const auto factors = prime_factors(n);
  for (Element x = 1; x < f.order_; ++x) {
    const bool generator = std::all_of(factors.begin(), factors.end(),
                                       [&](std::uint64_t p) { return f.poly_pow(x, n / p) != 1; });
    if (generator) {
      f.alpha_ = x;
      break;
    }
  }
  if (f.alpha_ == 0) throw ConsistencyError("no primitive element found; modulus is not irreducible");

  if (f.order_ <= table_cap) {
    f.exp_.resize(n);
    f.log_.assign(f.order_, kNoLog);
    Element x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      f.exp_[i] = static_cast<std::uint32_t>(x);
      f.log_[x] = static_cast<std::uint32_t>(i);
      x = f.poly_mul(x, f.alpha_);
    }
    if (x != 1) throw ConsistencyError("alpha^n != 1");
    f.zech_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto s = f.poly_add(1, f.exp_[i]);
      f.zech_[i] = s == 0 ? kNoLog : f.log_[s];
    }
  }
  return f;
}

Element FieldContext::poly_add(Element x, Element y) const {
  const unsigned q = base_.order();
  Element out = 0, weight = 1;
  for (unsigned i = 0; i < m_ && (x != 0 || y != 0); ++i, weight *= q) {
    out += weight * base_.add(static_cast<unsigned>(x % q), static_cast<unsigned>(y % q));
    x /= q;
    y /= q;
  }
  return out;
}

Element FieldContext::poly_mul(Element x, Element y) const {
  const unsigned q = base_.order();
  std::vector<unsigned> dx(m_), dy(m_), prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    dx[i] = static_cast<unsigned>(x % q);
    dy[i] = static_cast<unsigned>(y % q);
    x /= q;
    y /= q;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (dx[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(dx[i], dy[j]));
  }
  // x^m = -(modulus_0 + ... + modulus_{m-1} x^{m-1})
  for (unsigned k = 2 * m_ - 2; k >= m_ && k < 2 * m_; --k) {
    const unsigned c = prod[k];
    if (c == 0) continue;
    const unsigned nc = base_.neg(c);
    for (unsigned i = 0; i < m_; ++i) prod[k - m_ + i] = base_.add(prod[k - m_ + i], base_.mul(nc, modulus_[i]));
    prod[k] = 0;
  }
  Element out = 0;
  for (unsigned i = m_; i-- > 0;) out = out * q + prod[i];
  return out;
}

Element FieldContext::poly_pow(Element x, std::uint64_t e) const {
  Element result = 1;
  while (e != 0) {
    if (e & 1U) result = poly_mul(result, x);
    x = poly_mul(x, x);
    e >>= 1U;
  }
  return result;
}

Element FieldContext::add(Element x, Element y) const {
  if (!has_tables()) return poly_add(x, y);
  if (x == 0) return y;
  if (y == 0) return x;
  const std::uint64_t n = this->n();
  const std::uint64_t lx = log_[x], ly = log_[y];
  const std::uint64_t z = zech_[(ly + n - lx) % n];
  if (z == kNoLog) return 0;
  return exp_[(lx + z) % n];
}

Element FieldContext::neg(Element x) const {
  const unsigned q = base_.order();
  Element out = 0, weight = 1;
  for (unsigned i = 0; i < m_ && x != 0; ++i, weight *= q) {
    out += weight * base_.neg(static_cast<unsigned>(x % q));
    x /= q;
  }
  return out;
}

Element FieldContext::mul(Element x, Element y) const {
  if (!has_tables()) return poly_mul(x, y);
  if (x == 0 || y == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[x]) + log_[y]) % n()];
}

Element FieldContext::pow(Element x, std::uint64_t e) const {
  if (!has_tables()) return poly_pow(x, e);
  if (e == 0) return 1;
  if (x == 0) return 0;
  return exp_[static_cast<std::uint64_t>(static_cast<unsigned __int128>(log_[x]) * e % n())];
}

Element FieldContext::inv(Element x) const {
  if (x == 0) throw ParameterError("inverse of zero");
  if (!has_tables()) return poly_pow(x, n() - 1);
  return exp_[(n() - log_[x]) % n()];
}

Element FieldContext::scale(unsigned c, Element x) const {
  const unsigned q = base_.order();
  Element out = 0, weight = 1;
  for (unsigned i = 0; i < m_ && x != 0; ++i, weight *= q) {
    out += weight * base_.mul(c, static_cast<unsigned>(x % q));
    x /= q;
  }
  return out;
}

Element FieldContext::exp(std::uint64_t i) const {
  if (!has_tables()) return poly_pow(alpha_, i % n());
  return exp_[i % n()];
}

std::uint64_t FieldContext::log(Element x) const {
  if (x == 0 || x >= order_) throw ParameterError("log needs a nonzero field element");
  if (!has_tables()) throw ResourceError("discrete logarithms need table-backed fields");
  return log_[x];
}

Polynomial poly_mul(const BaseField& f, const Polynomial& x, const Polynomial& y) {
  Polynomial out;
  if (x.is_zero() || y.is_zero()) return out;
  out.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs.size(); ++j)
      out.coeffs[i + j] = f.add(out.coeffs[i + j], f.mul(x.coeffs[i], y.coeffs[j]));
  }
  trim(out);
  return out;
}

std::pair<Polynomial, Polynomial> poly_divmod(const BaseField& f, const Polynomial& x, const Polynomial& y) {
  if (y.is_zero()) throw ParameterError("polynomial division by zero");
  Polynomial rem = x;
  trim(rem);
  Polynomial quot;
  if (rem.degree() < y.degree()) return {quot, rem};
  quot.coeffs.assign(rem.coeffs.size() - y.coeffs.size() + 1, 0);
  const unsigned lead_inv = f.inv(y.coeffs.back());
  for (int k = rem.degree(); k >= y.degree(); --k) {
    const unsigned c = f.mul(rem.coeffs[k], lead_inv);
    if (c == 0) continue;
    const int shift = k - y.degree();
    quot.coeffs[shift] = c;
    for (std::size_t i = 0; i < y.coeffs.size(); ++i)
      rem.coeffs[shift + i] = f.sub(rem.coeffs[shift + i], f.mul(c, y.coeffs[i]));
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Polynomial x_pow_minus_one(const BaseField& f, std::uint64_t n) {
  Polynomial p;
  p.coeffs.assign(n + 1, 0);
  p.coeffs[0] = f.neg(1);
  p.coeffs[n] = 1;
  trim(p);
  return p;
}

Polynomial minimal_polynomial(const FieldContext& field, std::uint64_t s) {
  const auto n = field.n();
  if (s >= n && !(n == 0 && s == 0)) {
    std::ostringstream os;
    os << "minimal_polynomial: exponent " << s << " outside [0, " << (n == 0 ? 0 : n - 1) << "]";
    throw ParameterError(os.str());
  }
  // prod over the orbit of (x - alpha^j), computed in GF(q^m)[x].
  std::vector<Element> acc{1};
  auto j = s;
  do {
    const Element root = field.exp(j);
    std::vector<Element> next(acc.size() + 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], acc[i]);
      next[i] = field.sub(next[i], field.mul(root, acc[i]));
    }
    acc = std::move(next);
    j = n == 0 ? 0 : static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * field.q() % n);
  } while (j != s);
  Polynomial out;
  out.coeffs.reserve(acc.size());
  for (auto c : acc) {
    if (!FieldContext::in_base(c, field.q()))
      throw ConsistencyError("minimal polynomial coefficient outside GF(q)");
    out.coeffs.push_back(static_cast<unsigned>(c));
  }
  return out;
}

Polynomial generator_polynomial(const FieldContext& field, const DefiningSet& d) {
  if (d.radix() != field.q() || d.length() != field.m())
    throw ParameterError("defining set and field disagree on (q, m)");
  const auto n = field.n();
  Polynomial g{{1}};
  std::vector<bool> seen(n, false);
  for (auto s : d.members()) {
    if (s == 0 || s >= n || seen[s]) continue;
    auto j = s;
    do {
      if (!d.contains(j)) {
        std::ostringstream os;
        os << "defining set is not closed under multiplication by q: " << s << " in, " << j << " out";
        throw ParameterError(os.str());
      }
      seen[j] = true;
      j = static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * field.q() % n);
    } while (j != s);
    g = poly_mul(field.base(), g, minimal_polynomial(field, s));
  }
  // Index n stands for alpha^n = 1.
  if (d.contains(n)) g = poly_mul(field.base(), g, minimal_polynomial(field, 0));
  return g;
}

Element evaluate_at_power(const FieldContext& field, const Polynomial& g, std::uint64_t s) {
  const Element beta = field.exp(s);
  Element acc = 0;
  for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) acc = field.add(field.mul(acc, beta), *it);
  return acc;
}

Element syndrome(const FieldContext& field, std::span<const unsigned> codeword, std::uint64_t s) {
  const auto n = field.n();
  if (codeword.size() != n && codeword.size() != n + 1) {
    std::ostringstream os;
    os << "codeword length " << codeword.size() << " is neither n = " << n << " nor n + 1";
    throw ParameterError(os.str());
  }
  if (s > n) throw ParameterError("syndrome exponent outside [0, n]");
  const Element beta = field.exp(s);
  Element acc = 0;
  for (std::size_t i = n; i-- > 0;) acc = field.add(field.mul(acc, beta), codeword[i]);
  if (codeword.size() == n + 1 && s == 0) acc = field.add(acc, codeword[n]);
  return acc;
}

}  // namespace cyclocode
