#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stieltjes/cfrac.hpp"

#include <random>

using namespace stieltjes;

namespace {

const IntegerRing zz;
const ResidueRing m4(4);
using PZ = Poly<IntegerRing>;

std::vector<int> random_signs(std::mt19937_64& rng, std::size_t len) {
  std::vector<int> out(len);
  for (auto& v : out) v = (rng() & 1) ? 1 : -1;
  return out;
}

}  // namespace

TEST_CASE("first convergents of the paperfolding sequence") {
  const auto p = SignSequence::paperfolding(8);
  auto c0 = convergent(p.values(), 0, zz);
  CHECK(c0.P == PZ::from_ints(zz, {0, 1}));
  CHECK(c0.Q == PZ::from_ints(zz, {1}));
  auto c1 = convergent(p.values(), 1, zz);
  CHECK(c1.P == PZ::from_ints(zz, {0, 1}));
  CHECK(c1.Q == PZ::from_ints(zz, {1, 1}));
  auto c2 = convergent(p.values(), 2, zz);
  CHECK(c2.Q == c1.Q + PZ::monomial(zz, p[2], 1) * c0.Q);
  CHECK(c2.Q == PZ::from_ints(zz, {1}));
  CHECK(c2.P == PZ::from_ints(zz, {0, 1, -1}));
  CHECK_THROWS_AS(convergent(p.values(), 8, zz), std::out_of_range);
}

TEST_CASE("matrix product against the recurrence") {
  const auto p = SignSequence::paperfolding(8);
  const auto m1 = matrix_product_convergents(p.values(), 1, zz);
  CHECK(m1.a == PZ::from_ints(zz, {0, 1}));
  CHECK(m1.b == PZ::from_ints(zz, {0, 1}));
  CHECK(m1.c == PZ::from_ints(zz, {1}));
  CHECK(m1.d == PZ::from_ints(zz, {1, 1}));
  const auto m2 = matrix_product_convergents(p.values(), 2, zz);
  CHECK(m2.d == PZ::from_ints(zz, {1}));
  CHECK(m2.c == PZ::from_ints(zz, {1, 1}));
  CHECK(m2.b == convergent(p.values(), 2, zz).P);
}

TEST_CASE("b-convergents") {
  CHECK_THROWS(b_convergents(SequenceKind::paperfolding, 1, zz));
  const std::vector<int> pf_block{1, -1, -1, 1};
  const std::vector<int> rs_block{1, 1, -1, 1};
  CHECK(sequence_prefix("paperfolding", 8) == std::vector<int>{1, 1, -1, 1, 1, -1, -1, 1});
  CHECK(b_convergents(SequenceKind::paperfolding, 2, zz) == block_product(std::span<const int>(pf_block), zz));
  CHECK(b_convergents(SequenceKind::rudin_shapiro, 2, zz) == block_product(std::span<const int>(rs_block), zz));
  for (std::size_t level = 2; level <= 8; ++level) {
    CHECK(b_convergents(SequenceKind::paperfolding, level, m4).d.coefficient(0) == 1);
    CHECK(b_convergents(SequenceKind::rudin_shapiro, level, zz).d.coefficient(0) == 1);
  }
}

TEST_CASE("expansion examples") {
  const auto p = SignSequence::paperfolding(20);
  const auto s = expand_stieltjes(p.values(), 8, zz);
  CHECK(s.coefficient(0) == 0);
  CHECK(s.coefficient(1) == p[0]);
  CHECK(s.coefficient(2) == -1);
  CHECK(expand_stieltjes(p.values(), 8, m4).coefficient(2) == 3);
  CHECK_THROWS(expand_stieltjes(p.values(), 19, zz));
}

TEST_CASE("coefficient table examples") {
  const auto p = SignSequence::paperfolding(65);
  const auto q = coefficient_table(p.values(), 64, 40, zz, Track::Q);
  for (std::size_t n = 0; n <= 64; ++n) CHECK(q.at(n, 0) == 1);
  for (std::size_t n = 3; n <= 64; ++n) {
    BigInt sum = 0;
    for (std::size_t j = 3; j <= n; ++j) sum += p[j];
    CHECK(q.at(n, 1) == q.at(2, 1) + q.at(1, 0) * sum);
  }
  for (std::size_t n = 0; n <= 64; ++n) {
    for (std::size_t i = (n + 1) / 2 + 1; i <= 40; ++i) CHECK(q.at(n, i) == 0);
  }
}

TEST_CASE("table rows reproduce the convergents") {
  const auto r = SignSequence::rudin_shapiro(40);
  const auto pt = coefficient_table(r.values(), 39, 25, zz, Track::P);
  const auto qt = coefficient_table(r.values(), 39, 25, zz, Track::Q);
  convergents(r.values(), 39, zz, [&](const ConvergentPair<IntegerRing>& pair) {
    for (std::size_t i = 0; i <= 25; ++i) {
      CHECK(pt.at(pair.index, i) == pair.P.coefficient(i));
      CHECK(qt.at(pair.index, i) == pair.Q.coefficient(i));
    }
  });
  CHECK(format_table(coefficient_table(r.values(), 2, 2, m4, Track::Q)) == "1 0 0\n1 1 0\n1 2 0\n");
}

TEST_CASE("convergent properties on random sequences") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> length(2, 64);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_signs(rng, length(rng));
    const std::size_t n_max = c.size() - 1;
    std::vector<ConvergentPair<IntegerRing>> pairs;
    convergents(c, n_max, zz, [&](const ConvergentPair<IntegerRing>& pair) { pairs.push_back(pair); });

    BigInt prod = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto& pn = pairs[n];
      prod *= c[n];
      CHECK(pn.Q.coefficient(0) == 1);
      CHECK(pn.P.coefficient(0) == 0);
      CHECK(pn.Q.degree() <= static_cast<long>((n + 1) / 2));
      CHECK(pn.P.degree() <= static_cast<long>((n + 2) / 2));

      const auto m = matrix_product_convergents(c, n, zz);
      CHECK(m.b == pn.P);
      CHECK(m.d == pn.Q);
      CHECK(m.determinant() == PZ::monomial(zz, 1, n + 1) * BigInt((n % 2 == 1 ? 1 : -1) * prod));

      if (n >= 1) {
        CHECK(pairs[n - 1].P * pn.Q - pn.P * pairs[n - 1].Q == m.determinant());
        const std::size_t order = n + 1;
        const auto before = expand_convergent(pairs[n - 1], order);
        const auto after = expand_convergent(pn, order);
        CHECK(first_difference(before, after) == std::optional<std::size_t>(n + 1));
      }

      const auto native = convergent(c, n, m4);
      CHECK(change_ring(pn.P, m4) == native.P);
      CHECK(change_ring(pn.Q, m4) == native.Q);
    }
  }
}

TEST_CASE("triangle mechanism") {
  // a constant run a_{n,i}, n1 <= n <= n1+n0, forces a_{n,i-1} = 0 for n1-1 <= n <= n1+n0-2
  std::mt19937_64 rng(5);
  std::vector<std::vector<int>> inputs{sequence_prefix("paperfolding", 257), sequence_prefix("rudin-shapiro", 257)};
  for (int t = 0; t < 200; ++t) inputs.push_back(random_signs(rng, 64));
  std::size_t runs = 0;
  for (const auto& c : inputs) {
    const std::size_t n_max = c.size() - 1;
    for (auto track : {Track::P, Track::Q}) {
      const auto table = coefficient_table(c, n_max, n_max / 2 + 1, m4, track);
      for (std::size_t i = 1; i <= table.i_max(); ++i) {
        std::size_t n1 = 2;
        while (n1 <= n_max) {
          std::size_t end = n1;
          while (end + 1 <= n_max && table.at(end + 1, i) == table.at(n1, i)) ++end;
          const std::size_t n0 = end - n1;
          if (n0 >= 1) {
            ++runs;
            for (std::size_t n = n1 - 1; n + 2 <= n1 + n0; ++n) CHECK(table.at(n, i - 1) == 0);
          }
          n1 = end + 1;
        }
      }
    }
  }
  CHECK(runs > 1000);
}

TEST_CASE("stream refuses to run past the prefix") {
  const std::vector<int> c{1, -1};
  ConvergentStream<IntegerRing> stream(c, zz);
  stream.next();
  stream.next();
  CHECK_FALSE(stream.has_next());
  CHECK_THROWS_AS(stream.next(), std::out_of_range);
}

TEST_CASE("tracks") {
  CHECK(parse_track("q") == Track::Q);
  CHECK(track_name(Track::P) == "P");
  CHECK_THROWS(parse_track("R"));
}
