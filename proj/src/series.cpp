#include "stieltjes/series.hpp"

namespace stieltjes {

std::optional<Series<IntegerRing>> integer_part_if_integral(const Series<RationalRing>& s) {
  std::vector<BigInt> v;
  v.reserve(s.order() + 1);
  for (const auto& c : s.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return Series<IntegerRing>(IntegerRing{}, s.order(), std::move(v));
}

SqrtResult series_sqrt_exact(const Series<RationalRing>& s) {
  if (s.coefficient(0) != 1) throw std::domain_error("series_sqrt_exact needs constant term 1");
  const std::size_t n = s.order();
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  Rational acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc = s.coefficient(k);
    for (std::size_t i = 1; i < k; ++i) acc -= c[i] * c[k - i];
    c[k] = acc / 2;
  }
  SqrtResult out{Series<RationalRing>(RationalRing{}, n, std::move(c)), true};
  for (const auto& v : out.root.coefficients()) {
    if (v.get_den() != 1) {
      out.integral = false;
      break;
    }
  }
  return out;
}

SqrtResult series_sqrt_exact(const Series<IntegerRing>& s) {
  std::vector<Rational> v;
  v.reserve(s.order() + 1);
  for (const auto& c : s.coefficients()) v.emplace_back(c);
  return series_sqrt_exact(Series<RationalRing>(RationalRing{}, s.order(), std::move(v)));
}

}  // namespace stieltjes
