#pragma once

// Truncated formal power series c_0 + c_1 x + ... + c_N x^N.
//
// Arithmetic never extends the truncation order: binary operations carry
// the minimum of the operand orders.

#include "stieltjes/poly.hpp"

#include <optional>
#include <stdexcept>

namespace stieltjes {

template <CoefficientRing R>
class Series {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  // The zero series of the given order.
  Series(R ring, std::size_t order) : ring_(std::move(ring)), coeffs_(order + 1, ring_.zero()) {}

  Series(R ring, std::size_t order, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) {
      throw std::invalid_argument("series of order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                                  " coefficients, got " + std::to_string(coeffs_.size()));
    }
    if constexpr (std::same_as<R, ResidueRing>) {
      for (auto& c : coeffs_) c = ring_.reduce(c);
    }
  }

  static Series truncate(const Poly<R>& p, std::size_t order) {
    Series s(p.ring(), order);
    auto c = p.coefficients();
    for (std::size_t i = 0; i < c.size() && i <= order; ++i) s.coeffs_[i] = c[i];
    return s;
  }

  static Series from_ints(R ring, std::size_t order, std::initializer_list<long> coeffs) {
    return truncate(Poly<R>::from_ints(std::move(ring), coeffs), order);
  }

  const R& ring() const { return ring_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const value_type> coefficients() const { return coeffs_; }

  const value_type& coefficient(std::size_t i) const {
    if (i > order()) throw std::out_of_range("coefficient beyond truncation order");
    return coeffs_[i];
  }
  void set_coefficient(std::size_t i, value_type v) {
    if (i > order()) throw std::out_of_range("coefficient beyond truncation order");
    coeffs_[i] = std::move(v);
  }

  Series with_order(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise the truncation order of a series");
    return Series(ring_, order, std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  Series& operator+=(const Series& rhs) {
    require_same_ring(ring_, rhs.ring_);
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.add(coeffs_[i], rhs.coeffs_[i]);
    return *this;
  }

  Series& operator-=(const Series& rhs) {
    require_same_ring(ring_, rhs.ring_);
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ring_.sub(coeffs_[i], rhs.coeffs_[i]);
    return *this;
  }

  Series& operator*=(const Series& rhs) {
    require_same_ring(ring_, rhs.ring_);
    std::size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
    auto prod = detail::convolve<R>(ring_, coeffs_, rhs.coeffs_, n);
    prod.resize(n, ring_.zero());
    coeffs_ = std::move(prod);
    return *this;
  }

  Series& operator*=(const value_type& scalar) {
    for (auto& c : coeffs_) c = ring_.mul(c, scalar);
    return *this;
  }

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Series& rhs) { return lhs *= rhs; }
  friend Series operator*(Series lhs, const value_type& s) { return lhs *= s; }
  friend Series operator*(const value_type& s, Series rhs) { return rhs *= s; }

  // Product with a polynomial, truncated to this series' order.
  friend Series operator*(const Poly<R>& p, const Series& s) { return truncate(p, s.order()) * s; }
  friend Series operator+(const Poly<R>& p, const Series& s) { return truncate(p, s.order()) + s; }

  Series operator-() const {
    Series out(*this);
    for (auto& c : out.coeffs_) c = ring_.neg(c);
    return out;
  }

  // this * x^k, keeping the order.
  Series shifted(std::size_t k) const {
    Series out(ring_, order());
    for (std::size_t i = 0; i + k <= order(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
  }

  bool operator==(const Series& rhs) const { return ring_ == rhs.ring_ && coeffs_ == rhs.coeffs_; }

 private:
  R ring_;
  std::vector<value_type> coeffs_;
};

// 1/s by the coefficient recurrence; the constant term must be a unit.
template <CoefficientRing R>
Series<R> series_inverse(const Series<R>& s) {
  const R& ring = s.ring();
  const auto c = s.coefficients();
  if (!ring.is_unit(c[0])) throw std::domain_error("series constant term is not a unit");
  const auto inv0 = ring.inverse(c[0]);
  const std::size_t n = s.order();
  std::vector<typename R::value_type> out(n + 1, ring.zero());
  out[0] = inv0;
  if constexpr (std::same_as<R, ResidueRing>) {
    const std::int64_t m = ring.modulus();
    const auto sq = static_cast<unsigned __int128>(m - 1) * static_cast<unsigned __int128>(m - 1);
    if (sq * (n + 1) < (static_cast<unsigned __int128>(1) << 62)) {
      for (std::size_t k = 1; k <= n; ++k) {
        std::int64_t acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += c[i] * out[k - i];
        out[k] = ring.mul(ring.neg(ring.reduce(acc)), inv0);
      }
      return Series<R>(ring, n, std::move(out));
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    auto acc = ring.zero();
    for (std::size_t i = 1; i <= k; ++i) acc = ring.add(acc, ring.mul(c[i], out[k - i]));
    out[k] = ring.mul(ring.neg(acc), inv0);
  }
  return Series<R>(ring, n, std::move(out));
}

// s(x^k) truncated to the order of s.
template <CoefficientRing R>
Series<R> substitute_power(const Series<R>& s, std::size_t k) {
  if (k < 2) throw std::invalid_argument("substitute_power needs k >= 2");
  Series<R> out(s.ring(), s.order());
  for (std::size_t i = 0; i * k <= s.order(); ++i) out.set_coefficient(i * k, s.coefficient(i));
  return out;
}

// s(-x)
template <CoefficientRing R>
Series<R> negate_argument(const Series<R>& s) {
  Series<R> out(s);
  for (std::size_t i = 1; i <= s.order(); i += 2) out.set_coefficient(i, s.ring().neg(s.coefficient(i)));
  return out;
}

template <CoefficientRing R>
Series<R> change_ring(const Series<IntegerRing>& s, const R& target) {
  std::vector<typename R::value_type> v;
  v.reserve(s.order() + 1);
  for (const auto& c : s.coefficients()) v.push_back(target.from_bigint(c));
  return Series<R>(target, s.order(), std::move(v));
}

// nullopt if some coefficient has a denominator other than 1.
std::optional<Series<IntegerRing>> integer_part_if_integral(const Series<RationalRing>& s);

struct SqrtResult {
  Series<RationalRing> root;
  bool integral = false;
};

// Square root of a series with constant term 1, over the rationals:
// c_n = (s_n - sum_{0<i<n} c_i c_{n-i}) / 2.
SqrtResult series_sqrt_exact(const Series<RationalRing>& s);
SqrtResult series_sqrt_exact(const Series<IntegerRing>& s);

// Lowest exponent where the two series differ (over the common order).
template <CoefficientRing R>
std::optional<std::size_t> first_difference(const Series<R>& a, const Series<R>& b) {
  require_same_ring(a.ring(), b.ring());
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i) {
    if (!(a.coefficient(i) == b.coefficient(i))) return i;
  }
  return std::nullopt;
}

template <CoefficientRing R>
std::optional<std::size_t> first_difference(const Poly<R>& a, const Poly<R>& b) {
  require_same_ring(a.ring(), b.ring());
  std::size_t n = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.coefficient(i) == b.coefficient(i))) return i;
  }
  return std::nullopt;
}

// "order=N; c0 c1 ... cN"
template <CoefficientRing R>
std::string format_series(const Series<R>& s) {
  std::ostringstream os;
  os << "order=" << s.order() << ";";
  for (const auto& c : s.coefficients()) os << ' ' << s.ring().format(c);
  return os.str();
}

template <CoefficientRing R>
Series<R> parse_series(const R& ring, std::string_view text) {
  std::string line(text);
  auto semi = line.find(';');
  if (line.rfind("order=", 0) != 0 || semi == std::string::npos) {
    throw std::invalid_argument("malformed series line: '" + line + "'");
  }
  std::size_t order = std::stoul(line.substr(6, semi - 6));
  std::istringstream is(line.substr(semi + 1));
  std::vector<typename R::value_type> v;
  std::string tok;
  while (is >> tok) v.push_back(ring.parse(tok));
  return Series<R>(ring, order, std::move(v));
}

}  // namespace stieltjes
