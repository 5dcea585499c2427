#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclocode/cosets.hpp"

namespace cyclocode {

/// Base-field orders with built-in moduli.
inline constexpr unsigned kSupportedFieldOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

/// Fields up to this many elements get exp/log/Zech tables; larger ones use
/// polynomial arithmetic on the packed representation.
inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 20;

/// GF(q), q = p^e, with elements 0..q-1 (base-p coefficient vectors of the
/// built-in modulus) and full operation tables.
class BaseField {
 public:
  explicit BaseField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }

  unsigned add(unsigned x, unsigned y) const { return add_[x * q_ + y]; }
  unsigned mul(unsigned x, unsigned y) const { return mul_[x * q_ + y]; }
  unsigned neg(unsigned x) const { return neg_[x]; }
  unsigned sub(unsigned x, unsigned y) const { return add(x, neg(y)); }
  /// Requires x != 0.
  unsigned inv(unsigned x) const { return inv_[x]; }

 private:
  unsigned q_, p_, e_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

/// GF(q^m) element packed as sum c_i q^i, c_i in GF(q) the coefficient of x^i
/// modulo the built-in extension modulus. The packed value orders elements.
using Element = std::uint64_t;

class FieldContext {
 public:
  /// ParameterError for unsupported q or m < 1; ResourceError when q^m > 2^32.
  static FieldContext make(unsigned q, unsigned m, std::uint64_t table_cap = kDefaultTableCap);

  const BaseField& base() const { return base_; }
  unsigned q() const { return base_.order(); }
  unsigned m() const { return m_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t n() const { return order_ - 1; }
  /// Monic, low first, degree m (x itself when m = 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }
  /// Smallest packed value of multiplicative order n.
  Element primitive() const { return alpha_; }
  bool has_tables() const { return !exp_.empty(); }

  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element mul(Element x, Element y) const;
  Element pow(Element x, std::uint64_t e) const;
  /// Requires x != 0.
  Element inv(Element x) const;
  /// Base-field scalar c times x.
  Element scale(unsigned c, Element x) const;

  /// alpha^i for any i (reduced mod n).
  Element exp(std::uint64_t i) const;
  /// Discrete log base alpha. Requires x != 0.
  std::uint64_t log(Element x) const;

  static bool in_base(Element x, unsigned q) { return x < q; }

 private:
  FieldContext(BaseField base, unsigned m, std::vector<unsigned> modulus);

  Element poly_mul(Element x, Element y) const;
  Element poly_add(Element x, Element y) const;
  Element poly_pow(Element x, std::uint64_t e) const;

  BaseField base_;
  unsigned m_;
  std::uint64_t order_;
  std::vector<unsigned> modulus_;
  Element alpha_ = 0;
  std::vector<std::uint32_t> exp_;   // exp_[i] = alpha^i, i < n
  std::vector<std::uint32_t> log_;   // log_[x] for x != 0
  std::vector<std::uint32_t> zech_;  // log(1 + alpha^i), kNoLog when zero
};

/// Polynomial over GF(q), coefficients low first, no trailing zeros.
struct Polynomial {
  std::vector<unsigned> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const Polynomial&) const = default;
};

Polynomial poly_mul(const BaseField& f, const Polynomial& x, const Polynomial& y);
/// Quotient and remainder of x by a nonzero y.
std::pair<Polynomial, Polynomial> poly_divmod(const BaseField& f, const Polynomial& x, const Polynomial& y);
/// x^n - 1 over GF(q).
Polynomial x_pow_minus_one(const BaseField& f, std::uint64_t n);

/// Minimal polynomial of alpha^s over GF(q), degree |cl(s)|. Requires 0 <= s <= n-1.
Polynomial minimal_polynomial(const FieldContext& field, std::uint64_t s);

/// Product of the minimal polynomials over the cosets of D within [1, n-1],
/// times x - 1 when n is in D (alpha^n = 1); 0 is ignored. ParameterError if
/// D within [1, n-1] is not rotation-closed.
Polynomial generator_polynomial(const FieldContext& field, const DefiningSet& d);

/// Evaluates g at alpha^s.
Element evaluate_at_power(const FieldContext& field, const Polynomial& g, std::uint64_t s);

/// rho_s(c) = sum_i c_i alpha^(i s). A word of length n is cyclic; length n+1
/// adds the coordinate of the field element 0 at index n, which contributes
/// c_n * 0^s (so only at s = 0, with 0^0 = 1). Requires 0 <= s <= n.
Element syndrome(const FieldContext& field, std::span<const unsigned> codeword, std::uint64_t s);

}  // namespace cyclocode
