#pragma once

#include "stieltjes/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace stieltjes {

namespace detail {

// out[k] = sum_{i+j=k} a[i]*b[j] for k < limit.
template <CoefficientRing R>
std::vector<typename R::value_type> convolve(const R& ring, std::span<const typename R::value_type> a,
                                             std::span<const typename R::value_type> b, std::size_t limit) {
  using V = typename R::value_type;
  if (a.empty() || b.empty() || limit == 0) return {};
  std::size_t n = std::min(limit, a.size() + b.size() - 1);
  if constexpr (std::same_as<R, ResidueRing>) {
    // Delay the reduction while the column sums provably fit in 63 bits.
    const std::int64_t m = ring.modulus();
    const auto terms = static_cast<std::uint64_t>(std::min(a.size(), b.size()));
    const auto sq = static_cast<unsigned __int128>(m - 1) * static_cast<unsigned __int128>(m - 1);
    if (sq * terms < (static_cast<unsigned __int128>(1) << 62)) {
      std::vector<std::int64_t> acc(n, 0);
      for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        const std::int64_t ai = a[i];
        if (ai == 0) continue;
        const std::size_t jmax = std::min(b.size(), n - i);
        std::int64_t* dst = acc.data() + i;
        for (std::size_t j = 0; j < jmax; ++j) dst[j] += ai * b[j];
      }
      for (auto& v : acc) v %= m;
      return acc;
    }
  }
  std::vector<V> out(n, ring.zero());
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (ring.is_zero(a[i])) continue;
    const std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if constexpr (std::same_as<R, IntegerRing>) {
        mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      } else {
        out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
      }
    }
  }
  return out;
}

}  // namespace detail

// Dense univariate polynomial in canonical form (no trailing zeros).
template <CoefficientRing R>
class Poly {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  explicit Poly(R ring) : ring_(std::move(ring)) {}

  Poly(R ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if constexpr (std::same_as<R, ResidueRing>) {
      for (auto& c : coeffs_) c = ring_.reduce(c);
    }
    trim();
  }

  static Poly from_ints(R ring, std::initializer_list<long> coeffs) {
    std::vector<value_type> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(ring.from_int(c));
    return Poly(std::move(ring), std::move(v));
  }

  static Poly monomial(R ring, long c, std::size_t exponent) {
    std::vector<value_type> v(exponent + 1, ring.zero());
    v[exponent] = ring.from_int(c);
    return Poly(std::move(ring), std::move(v));
  }

  const R& ring() const { return ring_; }
  std::span<const value_type> coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  value_type coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }

  Poly& operator+=(const Poly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ring_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = ring_.add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ring_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = ring_.sub(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    coeffs_ = detail::convolve<R>(ring_, coeffs_, rhs.coeffs_, std::numeric_limits<std::size_t>::max());
    trim();
    return *this;
  }

  Poly& operator*=(const value_type& scalar) {
    for (auto& c : coeffs_) c = ring_.mul(c, scalar);
    trim();
    return *this;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const value_type& s) { return lhs *= s; }
  friend Poly operator*(const value_type& s, Poly rhs) { return rhs *= s; }

  Poly operator-() const {
    Poly out(*this);
    for (auto& c : out.coeffs_) c = ring_.neg(c);
    return out;
  }

  // this * x^k
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<value_type> v(k, ring_.zero());
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(ring_, std::move(v));
  }

  bool operator==(const Poly& rhs) const { return ring_ == rhs.ring_ && coeffs_ == rhs.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  R ring_;
  std::vector<value_type> coeffs_;
};

// p(-x)
template <CoefficientRing R>
Poly<R> negate_argument(const Poly<R>& p) {
  std::vector<typename R::value_type> v(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = p.ring().neg(v[i]);
  return Poly<R>(p.ring(), std::move(v));
}

// Image of an integer polynomial under Z -> target.
template <CoefficientRing R>
Poly<R> change_ring(const Poly<IntegerRing>& p, const R& target) {
  std::vector<typename R::value_type> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.push_back(target.from_bigint(c));
  return Poly<R>(target, std::move(v));
}

template <CoefficientRing R>
std::string format_poly(const Poly<R>& p) {
  std::ostringstream os;
  os << "degree=" << p.degree() << ";";
  for (const auto& c : p.coefficients()) os << ' ' << p.ring().format(c);
  return os.str();
}

template <CoefficientRing R>
Poly<R> parse_poly(const R& ring, std::string_view text) {
  std::string s(text);
  auto semi = s.find(';');
  if (s.rfind("degree=", 0) != 0 || semi == std::string::npos) {
    throw std::invalid_argument("malformed polynomial line: '" + s + "'");
  }
  long degree = std::stol(s.substr(7, semi - 7));
  std::istringstream is(s.substr(semi + 1));
  std::vector<typename R::value_type> v;
  std::string tok;
  while (is >> tok) v.push_back(ring.parse(tok));
  if (static_cast<long>(v.size()) != degree + 1) {
    throw std::invalid_argument("polynomial line has " + std::to_string(v.size()) + " coefficients, expected " +
                                std::to_string(degree + 1));
  }
  Poly<R> p(ring, std::move(v));
  if (p.degree() != degree) throw std::invalid_argument("polynomial line is not in canonical form");
  return p;
}

}  // namespace stieltjes
