#include "stieltjes/closedform.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stieltjes {

namespace {

const ResidueRing& mod4() {
  static const ResidueRing ring(4);
  return ring;
}

using Poly4 = Poly<ResidueRing>;
using Series4 = Series<ResidueRing>;

Poly4 ints(std::initializer_list<long> c) { return Poly4::from_ints(mod4(), c); }
Poly4 mono(std::uint64_t e) { return Poly4::monomial(mod4(), 1, e); }
Poly4 twice(const Poly4& p) { return p * mod4().from_int(2); }
Poly4 aux(AuxiliaryKind kind, long level) { return auxiliary_poly(kind, level, mod4()); }

Series4 twice(const Series4& s) { return s * mod4().from_int(2); }
Series4 aux(AuxiliaryKind kind, std::optional<long> level, std::size_t order) {
  return auxiliary_series(kind, level, order, mod4());
}
Series4 poly_series(std::initializer_list<long> c, std::size_t order) {
  return Series4::truncate(ints(c), order);
}

}  // namespace

int catalan_mod4(std::uint64_t n) {
  const std::uint64_t m = n + 1;
  switch (std::popcount(m)) {
    case 1: return 1;
    case 2: return 2;
    default: return 0;
  }
}

std::vector<BigInt> catalan_numbers(std::size_t count) {
  check_resource(count, "Catalan numbers");
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt c = 1;
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(c);
    c *= 2 * (2 * static_cast<unsigned long>(n) + 1);
    c /= static_cast<unsigned long>(n + 2);
  }
  return out;
}

std::string_view auxiliary_name(AuxiliaryKind kind) {
  switch (kind) {
    case AuxiliaryKind::S: return "S";
    case AuxiliaryKind::S_even: return "S_even";
    case AuxiliaryKind::S_odd: return "S_odd";
    case AuxiliaryKind::T: return "T";
  }
  return "?";
}

std::vector<std::uint64_t> auxiliary_exponents(AuxiliaryKind kind, long level, std::uint64_t max_exponent) {
  std::vector<std::uint64_t> out;
  auto pow2 = [](long i) { return std::uint64_t{1} << i; };
  switch (kind) {
    case AuxiliaryKind::S:
      for (long i = 0; i <= level && i < 63 && pow2(i) <= max_exponent; ++i) out.push_back(pow2(i));
      break;
    case AuxiliaryKind::S_even:
      for (long i = 0; i <= level && 2 * i < 63 && pow2(2 * i) <= max_exponent; ++i) out.push_back(pow2(2 * i));
      break;
    case AuxiliaryKind::S_odd:
      for (long i = 0; i <= level && 2 * i + 1 < 63 && pow2(2 * i + 1) <= max_exponent; ++i)
        out.push_back(pow2(2 * i + 1));
      break;
    case AuxiliaryKind::T:
      for (long i = 3; i <= level && i < 62; ++i) {
        for (long k = 2; k < i; ++k) {
          const std::uint64_t e = pow2(i) + pow2(k);
          if (e <= max_exponent) out.push_back(e);
        }
      }
      std::sort(out.begin(), out.end());
      break;
  }
  return out;
}

long infinite_level(std::size_t order) {
  if (order <= 1) return 1;
  return static_cast<long>(std::bit_width(order - 1)) + 1;
}

IdentityCheck compare_series(std::string name, const Series4& lhs, const Series4& rhs) {
  IdentityCheck out{std::move(name), first_difference(lhs, rhs), {}, {}};
  if (out.first_difference) {
    const std::size_t e = *out.first_difference;
    const auto& ring = lhs.ring();
    out.lhs_coefficient = e <= lhs.order() ? ring.format(lhs.coefficient(e)) : "-";
    out.rhs_coefficient = e <= rhs.order() ? ring.format(rhs.coefficient(e)) : "-";
  }
  return out;
}

BlockSumInputs block_sum_inputs(long n, std::size_t order) {
  if (n < 3) throw std::invalid_argument("the lacunary identities are stated for n >= 3");
  if (n >= 40 || order < (std::size_t{1} << (n + 1))) {
    throw std::invalid_argument("order must be at least 2^(n+1)");
  }
  return {n,
          aux(AuxiliaryKind::S, n - 1, order),
          aux(AuxiliaryKind::S, n, order),
          aux(AuxiliaryKind::S, n + 1, order),
          aux(AuxiliaryKind::T, n - 1, order),
          aux(AuxiliaryKind::T, n, order)};
}

std::vector<IdentityCheck> check_block_sum_identities(const BlockSumInputs& in) {
  const std::size_t order = in.s.order();
  const Series4 x = poly_series({0, 1}, order);
  const Series4 x_pow = Series4::truncate(mono(std::uint64_t{1} << in.n), order);
  std::vector<IdentityCheck> out;
  out.push_back(compare_series("2S_n^2", twice(in.s * in.s), twice(in.s_next - x)));
  out.push_back(
      compare_series("2S_{n-1}S_n", twice(in.s_prev * in.s), twice(in.s_next - x) + twice(x_pow * in.s)));
  out.push_back(compare_series("2T_n", twice(in.t),
                               twice(in.t_prev) + twice(x_pow * (in.s_prev - poly_series({0, 1, 1}, order)))));
  out.push_back(compare_series("S_n^2", in.s * in.s,
                               poly_series({0, 3, 2, 2, 2}, order) + twice(poly_series({0, 1, 1}, order) * in.s) +
                                   in.s_next + twice(in.t)));
  return out;
}

std::vector<IdentityCheck> verify_block_sum_identities(long n, std::size_t order) {
  return check_block_sum_identities(block_sum_inputs(n, order));
}

Series4 theorem1_rhs(std::size_t order) {
  const Series4 phi = phi_series(order, mod4());
  return poly_series({0, 2}, order) + ints({0, 3, 0, 2}) * phi;
}

Theorem2Routes theorem2_routes(std::size_t order) {
  // 1 - 4x phi over Z, then the exact root over Q
  const IntegerRing zz;
  const Series<IntegerRing> phi_z = phi_series(order, zz);
  const Series<IntegerRing> radicand =
      Series<IntegerRing>::from_ints(zz, order, {1}) - Poly<IntegerRing>::monomial(zz, 4, 1) * phi_z;
  const SqrtResult root = series_sqrt_exact(radicand);

  const Series4 phi = phi_series(order, mod4());
  const Series4 common = poly_series({0, 1, 2, 2}, order) + ints({0, 3, 0, 2}) * phi;

  Theorem2Routes out{common, common, root.integral};
  if (root.integral) {
    const auto root_z = integer_part_if_integral(root.root);
    out.via_sqrt = common + ints({0, 1}) * change_ring(*root_z, mod4());
  }
  const Series4 even_route = poly_series({1}, order) + twice(aux(AuxiliaryKind::S_even, std::nullopt, order));
  out.via_even_powers = common + ints({0, 1}) * even_route;
  return out;
}

Series4 theorem2_rhs(std::size_t order) {
  Theorem2Routes routes = theorem2_routes(order);
  if (!routes.sqrt_integral) throw std::logic_error("sqrt(1 - 4x phi) is not integral");
  if (auto diff = first_difference(routes.via_sqrt, routes.via_even_powers)) {
    throw std::logic_error("the two square-root routes disagree at x^" + std::to_string(*diff));
  }
  return std::move(routes.via_sqrt);
}

std::vector<IdentityCheck> s_infinity_identities(std::size_t order) {
  return s_infinity_identities(phi_series(order, mod4()));
}

std::vector<IdentityCheck> s_infinity_identities(const Series4& phi) {
  const std::size_t order = phi.order();
  if (order < 8) throw std::invalid_argument("S_inf identities need order >= 8");
  if (phi.ring() != mod4()) throw DomainMismatch();
  const Series4 s = aux(AuxiliaryKind::S, std::nullopt, order);
  const Series4 t = aux(AuxiliaryKind::T, std::nullopt, order);
  const Series4 x_phi = phi.shifted(1);
  const Series4 x_phi_sq = x_phi * x_phi;
  std::vector<IdentityCheck> out;
  out.push_back(compare_series("x*phi", x_phi,
                               s + twice(t) + twice(poly_series({0, 1, 1}, order) * s) +
                                   poly_series({0, 0, 2, 2, 2}, order)));
  out.push_back(compare_series("S^2", s * s, x_phi_sq));
  out.push_back(compare_series("S", s, x_phi_sq * x_phi_sq + poly_series({0, 1, 1}, order)));
  return out;
}

std::array<Poly4, 8> paperfolding_lemma_closed_forms(long n) {
  if (n < 4) throw std::invalid_argument("paperfolding closed forms are stated for n >= 4");
  const Poly4 s2 = aux(AuxiliaryKind::S, n - 2);
  const Poly4 s1 = aux(AuxiliaryKind::S, n - 1);
  const Poly4 t2 = aux(AuxiliaryKind::T, n - 2);
  return {
      ints({1, 2, 2, 2, 2}) + ints({2, 2, 2}) * s2 + twice(t2),
      ints({1}) + ints({1, 2}) * s2 + mono(std::uint64_t{1} << (n - 1)) * mod4().from_int(3),
      ints({0, 2}) * s2 + s1,
      ints({0, 3, 0, 0, 0, 2}) + ints({0, 2, 0, 2}) * s2 + twice(s1) + ints({2, 2}) * t2,
      ints({1, 2, 2, 2, 2}) + ints({0, 2, 2}) * s2 + twice(t2),
      ints({1, 2}) + ints({0, 2}) * s2 + s1,
      ints({0, 2}) + ints({2, 2}) * s2 + s1,
      ints({0, 3, 0, 0, 0, 2}) + ints({2, 0, 0, 2}) * s2 + ints({2, 2}) * t2,
  };
}

std::array<Poly4, 16> rudin_shapiro_lemma_closed_forms(long j) {
  if (j < 2) throw std::invalid_argument("Rudin-Shapiro closed forms are stated for j >= 2");
  const Poly4 sa = aux(AuxiliaryKind::S, 2 * j - 2);
  const Poly4 sb = aux(AuxiliaryKind::S, 2 * j - 1);
  const Poly4 ta = aux(AuxiliaryKind::T, 2 * j - 2);
  const Poly4 tb = aux(AuxiliaryKind::T, 2 * j - 1);
  const Poly4 odd_lo = aux(AuxiliaryKind::S_odd, j - 2);
  const Poly4 odd_hi = aux(AuxiliaryKind::S_odd, j - 1);
  const Poly4 even_hi = aux(AuxiliaryKind::S_even, j - 1);
  const Poly4 xa = mono(std::uint64_t{1} << (2 * j - 1));
  const Poly4 xb = mono(std::uint64_t{1} << (2 * j));
  const Poly4 two_x = ints({0, 2});
  const Poly4 two_x3 = ints({0, 0, 0, 2});
  const Poly4 two_one_x = ints({2, 2});
  const Poly4 head_q = ints({1, 0, 2, 0, 0, 2});
  const Poly4 head_p = ints({0, 0, 2, 0, 0, 2});
  const Poly4 q_factor = ints({3, 0, 0, 2});
  const Poly4 p_factor = ints({1, 0, 0, 2});
  return {
      ints({1, 2}) + two_one_x * sa,
      ints({1}) + two_one_x * sb,
      head_q + two_x * odd_lo + q_factor * sa + two_one_x * ta + xa,
      head_q + two_x * even_hi + q_factor * sb + two_one_x * tb + xb,
      head_p + p_factor * sa + two_one_x * ta + two_x * odd_lo + xa,
      head_p + p_factor * sb + two_one_x * tb + two_x * even_hi + xb,
      ints({0, 1, 2, 2, 2, 2}) + two_x3 * sa + two_x * ta + two_x * odd_lo,
      ints({0, 1, 0, 2, 2, 2}) + two_x3 * sb + two_x * tb + two_x * even_hi,
      ints({1}) + two_one_x * sa,
      ints({1, 2}) + two_one_x * sb,
      head_q + q_factor * sa + two_one_x * ta + two_x * even_hi + xa,
      head_q + q_factor * sb + two_one_x * tb + two_x * odd_hi + xb,
      head_p + p_factor * sa + two_one_x * ta + two_x * even_hi + xa,
      head_p + p_factor * sb + two_one_x * tb + two_x * odd_hi + xb,
      ints({0, 1, 0, 2, 2, 2}) + two_x * even_hi + two_x3 * sa + two_x * ta,
      ints({0, 1, 2, 2, 2, 2}) + two_x * odd_hi + two_x3 * sb + two_x * tb,
  };
}

}  // namespace stieltjes
