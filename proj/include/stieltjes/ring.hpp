#pragma once

// Coefficient rings for dense polynomials and truncated power series.
//
// A ring is a small value type that knows how to create, combine and print
// its elements. Poly<R> and Series<R> carry one by value, so residue rings
// keep their modulus next to the coefficients.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stieltjes {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class DomainKind { integers, residues, rationals };

struct CoefficientDomain {
  DomainKind kind = DomainKind::integers;
  std::int64_t modulus = 0;  // only meaningful for residues

  static CoefficientDomain integers() { return {DomainKind::integers, 0}; }
  static CoefficientDomain residues(std::int64_t m) { return {DomainKind::residues, m}; }
  static CoefficientDomain rationals() { return {DomainKind::rationals, 0}; }

  // "Z", "Z/4Z", "Q"
  std::string name() const;

  bool operator==(const CoefficientDomain&) const = default;
};

class IntegerRing {
 public:
  using value_type = BigInt;

  CoefficientDomain domain() const { return CoefficientDomain::integers(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_bigint(const BigInt& v) const { return v; }

  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  bool is_unit(const value_type& v) const { return v == 1 || v == -1; }
  value_type inverse(const value_type& v) const;

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }

  std::string format(const value_type& v) const { return v.get_str(); }
  value_type parse(std::string_view text) const;

  bool operator==(const IntegerRing&) const = default;
};

// Z/mZ with representatives normalized to 0..m-1.
class ResidueRing {
 public:
  using value_type = std::int64_t;

  explicit ResidueRing(std::int64_t modulus);

  std::int64_t modulus() const { return m_; }
  CoefficientDomain domain() const { return CoefficientDomain::residues(m_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % m_; }
  value_type from_int(long v) const { return reduce(v); }
  value_type from_bigint(const BigInt& v) const;

  bool is_zero(value_type v) const { return v == 0; }
  bool is_unit(value_type v) const;
  value_type inverse(value_type v) const;

  value_type add(value_type a, value_type b) const { return reduce(a + b); }
  value_type sub(value_type a, value_type b) const { return reduce(a - b); }
  value_type mul(value_type a, value_type b) const;
  value_type neg(value_type a) const { return reduce(-a); }

  std::string format(value_type v) const { return std::to_string(v); }
  value_type parse(std::string_view text) const;

  value_type reduce(std::int64_t v) const {
    v %= m_;
    return v < 0 ? v + m_ : v;
  }

  bool operator==(const ResidueRing&) const = default;

 private:
  std::int64_t m_;
};

// Q, always stored canonicalized (reduced, positive denominator).
class RationalRing {
 public:
  using value_type = Rational;

  CoefficientDomain domain() const { return CoefficientDomain::rationals(); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type from_bigint(const BigInt& v) const { return Rational(v); }

  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  bool is_unit(const value_type& v) const { return !is_zero(v); }
  value_type inverse(const value_type& v) const;

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }

  std::string format(const value_type& v) const { return v.get_str(); }
  value_type parse(std::string_view text) const;

  bool operator==(const RationalRing&) const = default;
};

template <class R>
concept CoefficientRing = std::equality_comparable<R> && requires(const R& r, const typename R::value_type& a) {
  { r.domain() } -> std::same_as<CoefficientDomain>;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.from_int(1L) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.is_unit(a) } -> std::same_as<bool>;
  { r.add(a, a) } -> std::same_as<typename R::value_type>;
  { r.mul(a, a) } -> std::same_as<typename R::value_type>;
  { r.format(a) } -> std::same_as<std::string>;
};

class DomainMismatch : public std::invalid_argument {
 public:
  DomainMismatch() : std::invalid_argument("coefficient domain mismatch") {}
};

template <CoefficientRing R>
void require_same_ring(const R& a, const R& b) {
  if (!(a == b)) throw DomainMismatch();
}

}  // namespace stieltjes
