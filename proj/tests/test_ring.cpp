#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stieltjes/series.hpp"

#include <random>

using namespace stieltjes;

namespace {

template <CoefficientRing R>
Poly<R> random_poly(const R& ring, std::mt19937_64& rng, int max_degree, long lo, long hi) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> val(lo, hi);
  std::vector<typename R::value_type> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(ring.from_int(val(rng)));
  return Poly<R>(ring, std::move(c));
}

template <CoefficientRing R>
Series<R> random_series(const R& ring, std::mt19937_64& rng, std::size_t order, long lo, long hi) {
  std::uniform_int_distribution<long> val(lo, hi);
  Series<R> s(ring, order);
  for (std::size_t i = 0; i <= order; ++i) s.set_coefficient(i, ring.from_int(val(rng)));
  return s;
}

}  // namespace

TEST_CASE("coefficient domains") {
  CHECK(CoefficientDomain::integers().name() == "Z");
  CHECK(CoefficientDomain::residues(4).name() == "Z/4Z");
  CHECK(CoefficientDomain::rationals().name() == "Q");
  CHECK_THROWS(ResidueRing(1));

  const ResidueRing m4(4);
  CHECK(m4.from_int(-1) == 3);
  CHECK(m4.from_int(9) == 1);
  CHECK(m4.is_unit(3));
  CHECK_FALSE(m4.is_unit(2));
  CHECK(m4.inverse(3) == 3);
  CHECK_THROWS_AS(m4.inverse(2), std::domain_error);
  CHECK(m4.from_bigint(BigInt("-123456789012345678901")) == m4.from_int(-1));

  const RationalRing qq;
  CHECK(qq.parse("6/4") == Rational(3, 2));
  CHECK(qq.format(Rational(-1, 8)) == "-1/8");
  CHECK_THROWS(m4.parse("4"));
}

TEST_CASE("polynomial arithmetic examples") {
  const IntegerRing zz;
  const ResidueRing m4(4);
  using PZ = Poly<IntegerRing>;
  using P4 = Poly<ResidueRing>;

  CHECK(PZ::from_ints(zz, {1, 1}) * PZ::from_ints(zz, {1, 1}) == PZ::from_ints(zz, {1, 2, 1}));
  CHECK(P4::from_ints(m4, {1, 2}) * P4::from_ints(m4, {1, 2}) == P4::from_ints(m4, {1}));
  CHECK((PZ::from_ints(zz, {0, 1}) * PZ(zz)).degree() == -1);
  CHECK(PZ::from_ints(zz, {1, 2, 0, 0}).degree() == 1);
  CHECK_THROWS_AS(P4::from_ints(m4, {1}) + P4::from_ints(ResidueRing(3), {1}), DomainMismatch);
}

TEST_CASE("negate_argument") {
  const ResidueRing m4(4);
  using P4 = Poly<ResidueRing>;
  CHECK(negate_argument(P4::from_ints(m4, {0, 1})) == P4::from_ints(m4, {0, 3}));
  CHECK(negate_argument(P4::from_ints(m4, {1, 1, 1})) == P4::from_ints(m4, {1, 3, 1}));
  CHECK(negate_argument(P4::from_ints(m4, {1, 0, 1})) == P4::from_ints(m4, {1, 0, 1}));
}

TEST_CASE("series inverse examples") {
  const ResidueRing m4(4);
  using S4 = Series<ResidueRing>;
  CHECK(series_inverse(S4::from_ints(m4, 5, {1})) == S4::from_ints(m4, 5, {1}));
  CHECK(series_inverse(S4::from_ints(m4, 4, {1, 1})) == S4::from_ints(m4, 4, {1, 3, 1, 3, 1}));
  CHECK(series_inverse(S4::from_ints(m4, 3, {1, 2})) == S4::from_ints(m4, 3, {1, 2}));
  CHECK_THROWS_AS(series_inverse(S4::from_ints(m4, 3, {2, 1})), std::domain_error);
}

TEST_CASE("series square root examples") {
  const IntegerRing zz;
  const RationalRing qq;
  auto one = series_sqrt_exact(Series<IntegerRing>::from_ints(zz, 4, {1}));
  CHECK(one.integral);
  CHECK(one.root == Series<RationalRing>::from_ints(qq, 4, {1}));

  auto catalan_root = series_sqrt_exact(Series<IntegerRing>::from_ints(zz, 5, {1, -4}));
  CHECK(catalan_root.integral);
  CHECK(catalan_root.root == Series<RationalRing>::from_ints(qq, 5, {1, -2, -2, -4, -10, -28}));

  auto binomial = series_sqrt_exact(Series<IntegerRing>::from_ints(zz, 3, {1, 1}));
  CHECK_FALSE(binomial.integral);
  CHECK(binomial.root.coefficient(1) == Rational(1, 2));
  CHECK(binomial.root.coefficient(2) == Rational(-1, 8));
  CHECK(binomial.root.coefficient(3) == Rational(1, 16));

  CHECK_THROWS(series_sqrt_exact(Series<IntegerRing>::from_ints(zz, 3, {4, 1})));
}

TEST_CASE("substitute_power examples") {
  const IntegerRing zz;
  using SZ = Series<IntegerRing>;
  CHECK(substitute_power(SZ::from_ints(zz, 4, {0, 1, 1}), 2) == SZ::from_ints(zz, 4, {0, 0, 1, 0, 1}));
  SZ s3(zz, 16);
  for (std::size_t e : {1, 2, 4, 8}) s3.set_coefficient(e, 1);
  SZ expected(zz, 16);
  for (std::size_t e : {2, 4, 8, 16}) expected.set_coefficient(e, 1);
  CHECK(substitute_power(s3, 2) == expected);
  CHECK(substitute_power(SZ::from_ints(zz, 5, {1}), 5) == SZ::from_ints(zz, 5, {1}));
  CHECK_THROWS(substitute_power(SZ::from_ints(zz, 5, {1}), 1));
}

TEST_CASE("truncation order never grows") {
  const IntegerRing zz;
  using SZ = Series<IntegerRing>;
  const SZ a = SZ::from_ints(zz, 3, {1, 1});
  const SZ b = SZ::from_ints(zz, 6, {1, 1});
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK_THROWS(a.coefficient(4));
  CHECK_THROWS(a.with_order(5));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  const IntegerRing zz;
  const ResidueRing m4(4);
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(zz, rng, 6, -9, 9), b = random_poly(zz, rng, 6, -9, 9), c = random_poly(zz, rng, 6, -9, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a - a == Poly<IntegerRing>(zz));

    auto p = random_poly(m4, rng, 6, 0, 3), q = random_poly(m4, rng, 6, 0, 3), r = random_poly(m4, rng, 6, 0, 3);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("reduction mod 4 commutes with multiplication") {
  std::mt19937_64 rng(11);
  const IntegerRing zz;
  const ResidueRing m4(4);
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(zz, rng, 8, -50, 50), b = random_poly(zz, rng, 8, -50, 50);
    CHECK(change_ring(a * b, m4) == change_ring(a, m4) * change_ring(b, m4));
  }
}

TEST_CASE("series inverse round trip") {
  std::mt19937_64 rng(13);
  const ResidueRing m4(4);
  const auto one = Series<ResidueRing>::from_ints(m4, 64, {1});
  for (int t = 0; t < 200; ++t) {
    auto s = random_series(m4, rng, 64, 0, 3);
    s.set_coefficient(0, (rng() & 1) ? 1 : 3);
    CHECK(s * series_inverse(s) == one);
  }
}

TEST_CASE("series square root round trip") {
  std::mt19937_64 rng(17);
  const IntegerRing zz;
  const RationalRing qq;
  for (int t = 0; t < 50; ++t) {
    auto s = random_series(zz, rng, 32, -20, 20);
    s.set_coefficient(0, 1);
    const auto root = series_sqrt_exact(s);
    Series<RationalRing> s_q(qq, 32);
    for (std::size_t i = 0; i <= 32; ++i) s_q.set_coefficient(i, Rational(s.coefficient(i)));
    CHECK(root.root * root.root == s_q);
  }
}

TEST_CASE("substitute_power composes and negate_argument is an involution") {
  std::mt19937_64 rng(19);
  const ResidueRing m4(4);
  for (int t = 0; t < 100; ++t) {
    auto s = random_series(m4, rng, 40, 0, 3);
    CHECK(substitute_power(substitute_power(s, 2), 2) == substitute_power(s, 4));
    CHECK(negate_argument(negate_argument(s)) == s);
    auto p = random_poly(m4, rng, 10, 0, 3);
    CHECK(negate_argument(negate_argument(p)) == p);
  }
}

TEST_CASE("serialization round trips") {
  std::mt19937_64 rng(23);
  const IntegerRing zz;
  const ResidueRing m4(4);
  const RationalRing qq;
  CHECK(format_poly(Poly<IntegerRing>(zz)) == "degree=-1;");
  CHECK(format_series(Series<ResidueRing>::from_ints(m4, 3, {1, -1})) == "order=3; 1 3 0 0");
  for (int t = 0; t < 50; ++t) {
    auto p = random_poly(zz, rng, 12, -1000, 1000);
    CHECK(parse_poly(zz, format_poly(p)) == p);
    auto s = random_series(m4, rng, 20, 0, 3);
    CHECK(parse_series(m4, format_series(s)) == s);
  }
  const auto root = series_sqrt_exact(Series<IntegerRing>::from_ints(zz, 6, {1, 1})).root;
  CHECK(parse_series(qq, format_series(root)) == root);
  CHECK_THROWS(parse_series(m4, "order=2; 1 2"));
  CHECK_THROWS(parse_series(m4, "order=1; 1 7"));
}
