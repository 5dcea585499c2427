#include <doctest.h>

#include "cyclocode/bounds.hpp"
#include "cyclocode/defsets.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/oracle.hpp"
#include "cyclocode/qadic.hpp"
#include "grid.hpp"

using namespace cyclocode;
using Set = std::vector<std::uint64_t>;

TEST_CASE("brute_T examples") {
  const auto t = brute_T({3, 4, 1, 2, 1});
  CHECK(t.size() == 47);
  CHECK(t.members().back() == 73);
  CHECK(brute_T({2, 4, 2, 1, 1}).members() == Set{0, 1, 2, 3, 4, 6, 8, 9, 12});
  // b > a is fine for the definition.
  const auto wide = brute_T({4, 3, 1, 1, 3});
  CHECK(wide.contains(word_value(expand(1 + 3 * 4, 4, 3))));
  CHECK(descendant_closure(wide) == wide);
  CHECK_THROWS_AS(brute_T({2, 30, 1, 1, 1}, 1 << 20), ResourceError);
}

TEST_CASE("brute_T always holds the orbit of u") {
  for (const auto& p : testing::counting_grid({2, 3, 4, 5}, 3000)) {
    std::uint64_t u = 0, w = 1;
    for (unsigned i = 0; i < p.m; ++i, w *= p.q) {
      if (i + p.t + 1 < p.m) u += p.a * w;
      if (i + p.t + 1 == p.m) u += p.b * w;
    }
    const auto t = brute_T(p);
    for (auto x : coset_of(u, p.q, p.m).elements) REQUIRE(t.contains(x));
  }
}

TEST_CASE("brute_T equals build_T") {
  for (const auto& p : testing::counting_grid({2, 3, 4, 5, 7}, 20000)) {
    CAPTURE(to_string(p));
    REQUIRE(brute_T(p) == build_T(p));
  }
}

TEST_CASE("profile census matches the class sizes") {
  for (const auto& p : testing::counting_grid({2, 3, 4, 5}, 5000)) {
    CAPTURE(to_string(p));
    const auto census = brute_profile_census(p);
    for (const auto& row : class_breakdown(p)) {
      const auto it = census.find(row.pair);
      REQUIRE(Natural(it == census.end() ? 0 : it->second) == row.class_size);
    }
    // Nothing outside the admissible region turns up, and 0 is the only empty profile.
    REQUIRE(census.size() <= admissible_pairs(p.m, p.t).size() + 1);
    REQUIRE(census.at(AdmissiblePair{0, 0}) >= 1);
  }
}

TEST_CASE("brute_dimension") {
  const auto f2 = FieldContext::make(2, 4);
  CHECK(brute_dimension(f2, build_T({2, 4, 2, 1, 1})) == 7);
  CHECK(brute_dimension(f2, build_T({2, 4, 1, 1, 1})) == 1);
  const auto f3 = FieldContext::make(3, 4);
  CHECK(brute_dimension(f3, build_T({3, 4, 1, 2, 1})) == 34);
  DefiningSet zero(3, 4);
  zero.insert(0);
  CHECK(brute_dimension(f3, zero) == 80);
}

TEST_CASE("brute_max_prefix") {
  CHECK(brute_max_prefix(dual_set(build_T({3, 4, 1, 2, 1}))) == 7);
  CHECK(brute_max_prefix(dual_set(build_T({3, 3, 0, 1, 1}))) == 13);
  CHECK(brute_max_prefix(dual_set(build_T({2, 4, 1, 1, 1}))) == 1);
  CHECK_FALSE(brute_max_prefix(DefiningSet::full(2, 3)));
}

TEST_CASE("null_space over GF(3)") {
  const BaseField f(3);
  const auto basis = null_space(f, {{1, 2, 0, 1}, {0, 1, 1, 2}}, 4);
  REQUIRE(basis.size() == 2);
  for (const auto& x : basis) {
    unsigned r0 = 0, r1 = 0;
    const std::vector<unsigned> a{1, 2, 0, 1}, b{0, 1, 1, 2};
    for (int i = 0; i < 4; ++i) {
      r0 = f.add(r0, f.mul(a[i], x[i]));
      r1 = f.add(r1, f.mul(b[i], x[i]));
    }
    CHECK(r0 == 0);
    CHECK(r1 == 0);
  }
}

TEST_CASE("dual generator matrices are orthogonal complements") {
  for (auto [q, m] : {std::pair{2U, 4U}, {3U, 3U}, {4U, 2U}, {2U, 5U}}) {
    const auto f = FieldContext::make(q, m);
    const BaseField& b = f.base();
    const auto t = build_T({q, m, 1, q - 1, 1});
    for (bool extended : {false, true}) {
      const auto g = code_generator_matrix(f, t, extended);
      const auto h = dual_generator_matrix(f, t, extended);
      const std::size_t width = g.front().size();
      CHECK(g.size() + h.size() == width);
      CHECK(null_space(b, g, width).size() == h.size());
      for (const auto& x : g)
        for (const auto& y : h) {
          unsigned dot = 0;
          for (std::size_t i = 0; i < width; ++i) dot = b.add(dot, b.mul(x[i], y[i]));
          REQUIRE(dot == 0);
        }
    }
  }
}

TEST_CASE("dual distances of tiny codes") {
  const auto f = FieldContext::make(2, 4);
  const auto rep = dual_min_distance(f, build_T({2, 4, 1, 1, 1}), DualFamily::cyclic, 1 << 20);
  CHECK(rep.kind == DistanceKind::exact);
  CHECK(rep.dimension == 14);
  CHECK(rep.value == 2);

  const auto t = build_T({2, 4, 2, 1, 1});
  const auto cyc = dual_min_distance(f, t, DualFamily::cyclic, 1 << 20);
  CHECK(cyc.kind == DistanceKind::exact);
  CHECK(cyc.dimension == 8);
  CHECK(cyc.enumerated == 255);
  CHECK(cyc.value == 4);
  const auto ext = dual_min_distance(f, t, DualFamily::extended, 1 << 20);
  CHECK(ext.dimension == 9);
  CHECK(ext.value == cyc.value);
  const auto cert = verify_certificate(build_certificate({2, 4, 2, 1, 1}), CodeParams{2, 4, 2, 1, 1});
  REQUIRE(cert.certified_bound);
  CHECK(*cert.certified_bound <= cyc.value);

  // Reed-Solomon style check over GF(4): the dual of an MDS code is MDS.
  const auto g = FieldContext::make(4, 1);
  DefiningSet d(4, 1);
  d.insert(1);
  const auto rs = dual_min_distance(g, d, DualFamily::cyclic, 1 << 10);
  CHECK(rs.dimension == 1);
  CHECK(rs.value == 3);
}

TEST_CASE("budget handling never reports a wrong exact value") {
  const auto f = FieldContext::make(2, 5);
  const auto t = build_T({2, 5, 1, 1, 1});
  const auto full = dual_min_distance(f, t, DualFamily::cyclic, 1 << 30);
  REQUIRE(full.kind == DistanceKind::exact);
  const auto cut = dual_min_distance(f, t, DualFamily::cyclic, 100);
  CHECK(full.value == 2);
  CHECK(cut.enumerated <= 100);
  if (cut.kind == DistanceKind::exact) {
    CHECK(cut.value == full.value);
  } else {
    CHECK(cut.kind == DistanceKind::budget_exhausted);
    CHECK(cut.value >= full.value);
  }
  const auto one = dual_min_distance(f, t, DualFamily::cyclic, 1);
  CHECK(one.enumerated == 1);
  CHECK(one.kind == DistanceKind::budget_exhausted);
  const auto wide = build_T({2, 5, 2, 1, 1});
  const auto floored = dual_min_distance(f, wide, DualFamily::cyclic, 3, 2);
  CHECK(floored.kind == DistanceKind::lower_bound_only);
  CHECK(floored.value == 2);
  const auto early = dual_min_distance(f, t, DualFamily::cyclic, 1 << 30, full.value);
  CHECK(early.kind == DistanceKind::exact);
  CHECK(early.value == full.value);
  CHECK(early.enumerated <= full.enumerated);
}

TEST_CASE("GF(3) enumeration agrees across families") {
  const auto f = FieldContext::make(3, 3);
  for (const CodeParams p : {CodeParams{3, 3, 1, 2, 1}, CodeParams{3, 3, 2, 2, 1}, CodeParams{3, 3, 2, 2, 2}}) {
    const auto t = build_T(p);
    const auto cyc = dual_min_distance(f, t, DualFamily::cyclic, 1 << 24);
    const auto ext = dual_min_distance(f, t, DualFamily::extended, 1 << 24);
    CAPTURE(to_string(p));
    CHECK(cyc.kind == DistanceKind::exact);
    CHECK(ext.kind == DistanceKind::exact);
    CHECK(cyc.dimension == t.size() - 1);
    CHECK(ext.dimension == t.size());
    CHECK(cyc.value == ext.value);
  }
}

TEST_CASE("affine invariance probe") {
  const auto f = FieldContext::make(2, 4);
  const auto t = build_T({2, 4, 2, 1, 1});
  std::vector<unsigned> word(16, 0);
  word[3] = word[7] = word[15] = 1;
  CHECK(apply_affine(f, word, 1, 0) == word);

  const auto res = affine_invariance_probe(f, t, 100);
  CHECK(res.invariant);
  CHECK(res.trials == 100);
  CHECK(res.seed == kDefaultSeed);
  CHECK(affine_invariance_probe(f, CodeParams{2, 4, 2, 1, 1}, 100));

  const auto broken = drop_descendant_orbit(t);
  REQUIRE(broken);
  CHECK(descendant_closure(*broken) != *broken);
  const auto bad = affine_invariance_probe(f, *broken, 100);
  CHECK_FALSE(bad.invariant);
  CHECK(!bad.violation.empty());

  const auto g = FieldContext::make(3, 3);
  CHECK(affine_invariance_probe(g, CodeParams{3, 3, 1, 2, 1}, 100));
  CHECK_FALSE(drop_descendant_orbit(DefiningSet(3, 3)));
}

TEST_CASE("t = m-1 with a < q-1 behaves like a = q-1") {
  const auto f = FieldContext::make(4, 2);
  const CodeParams p{4, 2, 1, 2, 1};
  const auto t = brute_T(p);
  CHECK(t == brute_T({4, 2, 1, 3, 1}));
  const auto d = dual_min_distance(f, t, DualFamily::cyclic, 1 << 20);
  REQUIRE(d.kind == DistanceKind::exact);
  CHECK(d.value == 12);
  const auto v = verify_certificate(build_certificate(p), p);
  REQUIRE(v.certified_bound);
  CHECK(*v.certified_bound <= d.value);
  CHECK(stated_bound(p) == 12);
}
