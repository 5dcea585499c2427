#include <doctest.h>

#include <random>

#include "cyclocode/defsets.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/galois.hpp"

using namespace cyclocode;

namespace {

Polynomial poly(std::vector<unsigned> c) { return Polynomial{std::move(c)}; }

std::uint64_t order_of(const FieldContext& f, Element x) {
  Element y = x;
  std::uint64_t k = 1;
  while (y != 1) {
    y = f.mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("field_make examples") {
  const auto f = FieldContext::make(2, 4);
  CHECK(f.modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});
  CHECK(f.primitive() == 2);  // the class of x
  CHECK(order_of(f, f.primitive()) == 15);

  const auto g = FieldContext::make(3, 4);
  CHECK(order_of(g, g.primitive()) == 80);

  const auto h = FieldContext::make(4, 2);
  CHECK(h.order() == 16);
  // Frobenius x -> x^4 over GF(4) has order m = 2 on GF(16).
  for (Element x = 0; x < 16; ++x) CHECK(h.pow(h.pow(x, 4), 4) == x);
  CHECK(h.pow(h.primitive(), 4) != h.primitive());
}

TEST_CASE("field_make errors") {
  CHECK_THROWS_AS(FieldContext::make(6, 2), ParameterError);
  CHECK_THROWS_AS(FieldContext::make(17, 2), ParameterError);
  CHECK_THROWS_AS(FieldContext::make(2, 0), ParameterError);
  CHECK_THROWS_AS(FieldContext::make(2, 33), ResourceError);
}

TEST_CASE("base fields are fields") {
  for (unsigned q : kSupportedFieldOrders) {
    const BaseField f(q);
    for (unsigned x = 0; x < q; ++x) {
      CHECK(f.add(x, f.neg(x)) == 0);
      CHECK(f.mul(x, 1) == x);
      if (x) CHECK(f.mul(x, f.inv(x)) == 1);
      for (unsigned y = 0; y < q; ++y) {
        CHECK(f.add(x, y) == f.add(y, x));
        for (unsigned z = 0; z < q; ++z) REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      }
    }
  }
}

TEST_CASE("extension fields: tables and polynomial fallback agree") {
  for (auto [q, m] : {std::pair{2U, 8U}, {3U, 5U}, {4U, 3U}, {9U, 2U}, {27U, 2U}, {5U, 4U}, {16U, 2U}}) {
    const auto tab = FieldContext::make(q, m);
    const auto poly_only = FieldContext::make(q, m, 0);
    REQUIRE(tab.has_tables());
    REQUIRE_FALSE(poly_only.has_tables());
    CHECK(tab.primitive() == poly_only.primitive());
    CHECK(order_of(tab, tab.primitive()) == tab.n());
    std::mt19937_64 rng(q * 100 + m);
    for (int i = 0; i < 500; ++i) {
      const Element x = rng() % tab.order(), y = rng() % tab.order();
      REQUIRE(tab.add(x, y) == poly_only.add(x, y));
      REQUIRE(tab.mul(x, y) == poly_only.mul(x, y));
      if (x) {
        REQUIRE(tab.exp(tab.log(x)) == x);
        REQUIRE(tab.mul(x, tab.inv(x)) == 1);
        REQUIRE(poly_only.mul(x, poly_only.inv(x)) == 1);
      }
      // Frobenius applied m times is the identity.
      Element z = x;
      for (unsigned j = 0; j < m; ++j) z = tab.pow(z, q);
      REQUIRE(z == x);
    }
  }
}

TEST_CASE("large fields use polynomial arithmetic") {
  const auto f = FieldContext::make(2, 24);
  CHECK_FALSE(f.has_tables());
  CHECK(f.pow(f.primitive(), f.n()) == 1);
  CHECK(f.pow(f.primitive(), f.n() / 3) != 1);
  CHECK_THROWS_AS(f.log(5), ResourceError);
}

TEST_CASE("minimal polynomials") {
  const auto f = FieldContext::make(2, 4);
  CHECK(minimal_polynomial(f, 1) == poly({1, 1, 0, 0, 1}));
  CHECK(minimal_polynomial(f, 5) == poly({1, 1, 1}));
  CHECK(minimal_polynomial(f, 3) == poly({1, 1, 1, 1, 1}));
  for (unsigned q : {2U, 3U, 4U, 5U}) {
    const auto g = FieldContext::make(q, 2);
    const BaseField& b = g.base();
    CHECK(minimal_polynomial(g, 0) == poly({b.neg(1), 1}));
  }
  CHECK_THROWS_AS(minimal_polynomial(f, 15), ParameterError);
}

TEST_CASE("minimal polynomials factor x^n - 1") {
  for (auto [q, m] : {std::pair{2U, 5U}, {3U, 3U}, {4U, 2U}, {5U, 2U}, {2U, 6U}}) {
    const auto f = FieldContext::make(q, m);
    const auto xn = x_pow_minus_one(f.base(), f.n());
    Polynomial prod{{1}};
    for (std::uint64_t s = 0; s < f.n(); ++s) {
      if (leader(s, q, m) != s) continue;
      const auto mp = minimal_polynomial(f, s);
      CHECK(static_cast<std::size_t>(mp.degree()) == coset_of(s, q, m).size());
      CHECK(poly_divmod(f.base(), xn, mp).second.is_zero());
      prod = poly_mul(f.base(), prod, mp);
    }
    CHECK(prod == xn);
  }
}

TEST_CASE("generator polynomials") {
  const auto f = FieldContext::make(2, 4);
  DefiningSet all(2, 4);
  for (std::uint64_t s = 1; s <= 14; ++s) all.insert(s);
  CHECK(generator_polynomial(f, all) == poly(std::vector<unsigned>(15, 1)));
  CHECK(generator_polynomial(f, DefiningSet(2, 4)) == poly({1}));
  CHECK(generator_polynomial(f, bch_set(2, 4, 2)) == poly({1, 1, 0, 0, 1}));
  DefiningSet broken(2, 4);
  broken.insert(1);
  CHECK_THROWS_AS(generator_polynomial(f, broken), ParameterError);
  auto with_ends = bch_set(2, 4, 2);
  with_ends.insert(0);
  CHECK(generator_polynomial(f, with_ends).degree() == 4);
  with_ends.insert(15);
  CHECK(generator_polynomial(f, with_ends) == poly({1, 0, 1, 0, 1, 1}));
  all.insert(15);
  CHECK(generator_polynomial(f, all) == poly({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));

  std::mt19937_64 rng(11);
  for (auto [q, m] : {std::pair{2U, 5U}, {3U, 4U}, {2U, 4U}, {3U, 5U}}) {
    const auto g = FieldContext::make(q, m);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint64_t> seeds;
      for (int i = 0; i < 4; ++i) seeds.push_back(1 + rng() % (g.n() - 1));
      const auto d = union_cosets(seeds, q, m);
      CHECK(static_cast<std::uint64_t>(generator_polynomial(g, d).degree()) == d.size());
    }
  }
}

TEST_CASE("syndromes") {
  const auto f = FieldContext::make(2, 4);
  const std::vector<unsigned> ones(15, 1);
  CHECK(syndrome(f, ones, 0) == 1);
  std::vector<unsigned> ext(16, 0);
  ext[15] = 1;
  CHECK(syndrome(f, ext, 0) == 1);
  CHECK(syndrome(f, ext, 3) == 0);
  CHECK_THROWS_AS(syndrome(f, std::vector<unsigned>(14, 0), 1), ParameterError);

  std::mt19937_64 rng(5);
  for (auto [q, m] : {std::pair{2U, 4U}, {3U, 3U}, {4U, 2U}, {5U, 2U}}) {
    const auto g = FieldContext::make(q, m);
    const auto d = build_T({q, m, m - 1 > 0 ? 1U : 0U, q - 1, 1});
    auto star = d;
    star.erase(0);
    const auto gen = generator_polynomial(g, star);
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial msg;
      for (std::uint64_t i = 0; i + gen.degree() < g.n(); ++i) msg.coeffs.push_back(rng() % q);
      while (!msg.coeffs.empty() && msg.coeffs.back() == 0) msg.coeffs.pop_back();
      auto c = poly_mul(g.base(), msg, gen).coeffs;
      c.resize(g.n(), 0);
      for (auto s : star.members()) REQUIRE(syndrome(g, c, s) == 0);
      std::vector<unsigned> word(g.n());
      for (auto& x : word) x = rng() % q;
      for (std::uint64_t s = 0; s < g.n(); ++s)
        REQUIRE(syndrome(g, word, s * q % g.n()) == g.pow(syndrome(g, word, s), q));
    }
  }
}
