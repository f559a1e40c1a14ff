#pragma once

// Closed-form series: Catalan numbers and their generating function phi,
// the lacunary families S_n, S_n^e, S_n^o, T_n, and the right-hand sides of
// the two mod-4 congruences for Stiel_p and Stiel_r.

#include "stieltjes/seq.hpp"
#include "stieltjes/series.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stieltjes {

// C_n mod 4: 1 if n = 2^a - 1, 2 if n = 2^b + 2^a - 1 with b > a >= 0, else 0.
int catalan_mod4(std::uint64_t n);

// C_0..C_count-1 exactly, from C_{n+1} = C_n * 2(2n+1) / (n+2).
std::vector<BigInt> catalan_numbers(std::size_t count);

// phi(x) = sum C_n x^n to order N, computed over Z and then mapped into the ring.
template <CoefficientRing R>
Series<R> phi_series(std::size_t order, const R& ring) {
  auto cat = catalan_numbers(order + 1);
  std::vector<typename R::value_type> v;
  v.reserve(cat.size());
  for (const auto& c : cat) v.push_back(ring.from_bigint(c));
  return Series<R>(ring, order, std::move(v));
}

enum class AuxiliaryKind { S, S_even, S_odd, T };

std::string_view auxiliary_name(AuxiliaryKind kind);

// Exponents of the family at the given level that are <= max_exponent, ascending.
//   S_n   : 2^i,          0 <= i <= n
//   S_n^e : 2^{2i},       0 <= i <= n
//   S_n^o : 2^{2i+1},     0 <= i <= n
//   T_n   : 2^i + 2^k,    2 <= k < i <= n   (T_n = 0 for n <= 2)
std::vector<std::uint64_t> auxiliary_exponents(AuxiliaryKind kind, long level, std::uint64_t max_exponent);

// Smallest level that contains every exponent <= order: ceil(log2 order) + 1.
long infinite_level(std::size_t order);

template <CoefficientRing R>
Poly<R> auxiliary_poly(AuxiliaryKind kind, long level, const R& ring) {
  auto exps = auxiliary_exponents(kind, level, std::uint64_t{1} << 62);
  Poly<R> out(ring);
  if (exps.empty()) return out;
  std::vector<typename R::value_type> v(exps.back() + 1, ring.zero());
  for (auto e : exps) v[e] = ring.add(v[e], ring.one());
  return Poly<R>(ring, std::move(v));
}

// Level nullopt means the infinite sum truncated to the order.
template <CoefficientRing R>
Series<R> auxiliary_series(AuxiliaryKind kind, std::optional<long> level, std::size_t order, const R& ring) {
  const long lv = level.value_or(infinite_level(order));
  Series<R> out(ring, order);
  for (auto e : auxiliary_exponents(kind, lv, order)) out.set_coefficient(e, ring.add(out.coefficient(e), ring.one()));
  return out;
}

// One named congruence and where it first breaks.
struct IdentityCheck {
  std::string name;
  std::optional<std::size_t> first_difference;
  std::string lhs_coefficient;
  std::string rhs_coefficient;

  bool holds() const { return !first_difference.has_value(); }
};

IdentityCheck compare_series(std::string name, const Series<ResidueRing>& lhs, const Series<ResidueRing>& rhs);

// Inputs to the four lacunary identities at level n, as mod-4 series of one order.
struct BlockSumInputs {
  long n = 0;
  Series<ResidueRing> s_prev;  // S_{n-1}
  Series<ResidueRing> s;       // S_n
  Series<ResidueRing> s_next;  // S_{n+1}
  Series<ResidueRing> t_prev;  // T_{n-1}
  Series<ResidueRing> t;       // T_n
};

BlockSumInputs block_sum_inputs(long n, std::size_t order);

// mod 4:
//   2 S_n^2       = 2 (S_{n+1} - x)
//   2 S_{n-1} S_n = 2 (S_{n+1} - x) + 2 x^{2^n} S_n
//   2 T_n         = 2 T_{n-1} + 2 x^{2^n} (S_{n-1} - x - x^2)
//   S_n^2         = (3x + 2x^2 + 2x^3 + 2x^4) + 2 (x + x^2) S_n + S_{n+1} + 2 T_n
std::vector<IdentityCheck> check_block_sum_identities(const BlockSumInputs& in);
std::vector<IdentityCheck> verify_block_sum_identities(long n, std::size_t order);

// 2x + (3x + 2x^3) phi(x) mod 4
Series<ResidueRing> theorem1_rhs(std::size_t order);

struct Theorem2Routes {
  Series<ResidueRing> via_sqrt;         // sqrt(1 - 4x phi) taken over Q, then reduced
  Series<ResidueRing> via_even_powers;  // sqrt(1 - 4x phi) replaced by 1 + 2 S^e_inf
  bool sqrt_integral = false;
};

// x + 2x^2 + 2x^3 + (3x + 2x^3) phi(x) + x sqrt(1 - 4x phi(x)) mod 4, both ways.
Theorem2Routes theorem2_routes(std::size_t order);

// The route-checked right-hand side; throws std::logic_error when the two
// routes disagree or the square root is not integral.
Series<ResidueRing> theorem2_rhs(std::size_t order);

// mod 4, with the x^{-1} factors cleared:
//   x phi = S + 2T + 2(x + x^2) S + 2(x^2 + x^3 + x^4)
//   S^2   = (x phi)^2
//   S     = (x phi)^4 + x + x^2
std::vector<IdentityCheck> s_infinity_identities(std::size_t order);
std::vector<IdentityCheck> s_infinity_identities(const Series<ResidueRing>& phi);

// Closed forms of the sampled convergents, mod 4, in item order.
// Paperfolding, n >= 4: Q_{2^n-2}, Q_{2^n-1}, P_{2^n-2}, P_{2^n-1}, then the
// b-variants Q^b_{2^n-2}, Q^b_{2^n-1}, P^b_{2^n-2}, P^b_{2^n-1}.
std::array<Poly<ResidueRing>, 8> paperfolding_lemma_closed_forms(long n);

// Rudin-Shapiro, j >= 2: Q_{2^{2j}-2}, Q_{2^{2j+1}-2}, Q_{2^{2j}-1},
// Q_{2^{2j+1}-1}, P_{2^{2j}-2}, P_{2^{2j+1}-2}, P_{2^{2j}-1}, P_{2^{2j+1}-1},
// then the same eight for the b-variants.
std::array<Poly<ResidueRing>, 16> rudin_shapiro_lemma_closed_forms(long j);

}  // namespace stieltjes
