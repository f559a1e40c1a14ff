#include "stieltjes/ring.hpp"

#include <charconv>
#include <numeric>

namespace stieltjes {

std::string CoefficientDomain::name() const {
  switch (kind) {
    case DomainKind::integers:
      return "Z";
    case DomainKind::residues:
      return "Z/" + std::to_string(modulus) + "Z";
    case DomainKind::rationals:
      return "Q";
  }
  return "?";
}

namespace {

BigInt parse_bigint(std::string_view text) {
  BigInt v;
  std::string s(text);
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return v;
}

}  // namespace

IntegerRing::value_type IntegerRing::inverse(const value_type& v) const {
  if (!is_unit(v)) throw std::domain_error("integer " + v.get_str() + " is not a unit");
  return v;
}

IntegerRing::value_type IntegerRing::parse(std::string_view text) const { return parse_bigint(text); }

ResidueRing::ResidueRing(std::int64_t modulus) : m_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
}

ResidueRing::value_type ResidueRing::from_bigint(const BigInt& v) const {
  BigInt r = v % BigInt(static_cast<long>(m_));
  if (sgn(r) < 0) r += static_cast<long>(m_);
  return r.get_si();
}

bool ResidueRing::is_unit(value_type v) const { return std::gcd(v, m_) == 1; }

ResidueRing::value_type ResidueRing::mul(value_type a, value_type b) const {
  return static_cast<value_type>(static_cast<__int128>(a) * b % m_);
}

ResidueRing::value_type ResidueRing::inverse(value_type v) const {
  // extended Euclid on (v, m)
  std::int64_t r0 = m_, r1 = reduce(v);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) {
    throw std::domain_error(std::to_string(v) + " is not a unit modulo " + std::to_string(m_));
  }
  return reduce(t0);
}

ResidueRing::value_type ResidueRing::parse(std::string_view text) const {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a residue: '" + std::string(text) + "'");
  }
  if (v < 0 || v >= m_) {
    throw std::invalid_argument("residue " + std::string(text) + " outside 0.." + std::to_string(m_ - 1));
  }
  return v;
}

RationalRing::value_type RationalRing::inverse(const value_type& v) const {
  if (is_zero(v)) throw std::domain_error("zero has no inverse");
  return 1 / v;
}

RationalRing::value_type RationalRing::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace stieltjes
