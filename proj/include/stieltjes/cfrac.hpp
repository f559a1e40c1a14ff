#pragma once

// Stieltjes continued fractions c_0 x / (1 + c_1 x / (1 + c_2 x / ...)).
//
// The n-th convergent P_n/Q_n is read off the matrix product
//
//   [P_{n-1} P_n]   [0 c_0 x]       [0 c_n x]
//   [Q_{n-1} Q_n] = [1   1  ] ... [1   1  ]
//
// which gives F_n = F_{n-1} + c_n x F_{n-2} for F = P, Q with
// P_{-2} = 1, P_{-1} = 0, Q_{-2} = 0, Q_{-1} = 1.

#include "stieltjes/seq.hpp"
#include "stieltjes/series.hpp"

#include <functional>
#include <sstream>

namespace stieltjes {

enum class Track { P, Q };

Track parse_track(std::string_view name);
std::string_view track_name(Track track);

template <CoefficientRing R>
struct PolyMatrix {
  Poly<R> a, b;  // top row
  Poly<R> c, d;  // bottom row

  static PolyMatrix identity(const R& ring) {
    return {Poly<R>::from_ints(ring, {1}), Poly<R>(ring), Poly<R>(ring), Poly<R>::from_ints(ring, {1})};
  }

  // [0 q x; 1 1]
  static PolyMatrix partial_quotient(const R& ring, int q) {
    return {Poly<R>(ring), Poly<R>::monomial(ring, q, 1), Poly<R>::from_ints(ring, {1}), Poly<R>::from_ints(ring, {1})};
  }

  friend PolyMatrix operator*(const PolyMatrix& l, const PolyMatrix& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }

  // a d - b c
  Poly<R> determinant() const { return a * d - b * c; }

  bool operator==(const PolyMatrix&) const = default;
};

template <CoefficientRing R>
struct ConvergentPair {
  std::size_t index = 0;
  Poly<R> P;
  Poly<R> Q;

  const R& ring() const { return P.ring(); }
};

namespace detail {

// f1 + q x f2
template <CoefficientRing R>
Poly<R> recurrence_step(const Poly<R>& f1, const Poly<R>& f2, int q) {
  const R& ring = f1.ring();
  const auto a = f1.coefficients();
  const auto b = f2.coefficients();
  std::vector<typename R::value_type> out(std::max(a.size(), b.size() + 1), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  const auto qv = ring.from_int(q);
  for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] = ring.add(out[i + 1], ring.mul(qv, b[i]));
  return Poly<R>(ring, std::move(out));
}

template <CoefficientRing R>
PolyMatrix<R> product_tree(std::span<const int> c, const R& ring) {
  if (c.empty()) return PolyMatrix<R>::identity(ring);
  if (c.size() == 1) return PolyMatrix<R>::partial_quotient(ring, c[0]);
  const std::size_t half = c.size() / 2;
  return product_tree(c.first(half), ring) * product_tree(c.subspan(half), ring);
}

inline void require_prefix(std::span<const int> c, std::size_t needed, std::string_view what) {
  if (c.size() < needed) {
    throw std::out_of_range(std::string(what) + " needs " + std::to_string(needed) + " partial quotients, only " +
                            std::to_string(c.size()) + " available");
  }
}

}  // namespace detail

// Walks the convergents P_0/Q_0, P_1/Q_1, ... by the three-term recurrence.
template <CoefficientRing R>
class ConvergentStream {
 public:
  ConvergentStream(std::span<const int> c, R ring)
      : c_(c), prev_p_(Poly<R>::from_ints(ring, {1})), prev_q_(ring), cur_{0, Poly<R>(ring), Poly<R>::from_ints(ring, {1})} {}

  bool has_next() const { return next_ < c_.size(); }

  const ConvergentPair<R>& next() {
    if (!has_next()) throw std::out_of_range("convergent stream ran past the sequence prefix");
    const int q = c_[next_];
    Poly<R> p = detail::recurrence_step(cur_.P, prev_p_, q);
    Poly<R> qq = detail::recurrence_step(cur_.Q, prev_q_, q);
    prev_p_ = std::move(cur_.P);
    prev_q_ = std::move(cur_.Q);
    cur_ = {next_, std::move(p), std::move(qq)};
    ++next_;
    return cur_;
  }

  const ConvergentPair<R>& current() const { return cur_; }
  const Poly<R>& previous_p() const { return prev_p_; }
  const Poly<R>& previous_q() const { return prev_q_; }

 private:
  std::span<const int> c_;
  std::size_t next_ = 0;
  Poly<R> prev_p_;
  Poly<R> prev_q_;
  ConvergentPair<R> cur_;
};

// Calls visit(pair) for n = 0..n_max.
template <CoefficientRing R, class Visitor>
void convergents(std::span<const int> c, std::size_t n_max, const R& ring, Visitor&& visit) {
  detail::require_prefix(c, n_max + 1, "convergents");
  ConvergentStream<R> stream(c.first(n_max + 1), ring);
  while (stream.has_next()) visit(stream.next());
}

template <CoefficientRing R>
ConvergentPair<R> convergent(std::span<const int> c, std::size_t n, const R& ring) {
  detail::require_prefix(c, n + 1, "convergent");
  ConvergentStream<R> stream(c.first(n + 1), ring);
  while (stream.has_next()) stream.next();
  return stream.current();
}

// Full 2x2 product over c_0..c_n, computed as a balanced product tree:
// [[P_{n-1}, P_n], [Q_{n-1}, Q_n]].
template <CoefficientRing R>
PolyMatrix<R> matrix_product_convergents(std::span<const int> c, std::size_t n, const R& ring) {
  detail::require_prefix(c, n + 1, "matrix product");
  return detail::product_tree(c.first(n + 1), ring);
}

// Product of the partial-quotient matrices over all of c.
template <CoefficientRing R>
PolyMatrix<R> block_product(std::span<const int> c, const R& ring) {
  return detail::product_tree(c, ring);
}

// [[P^b_{2^n-2}, P^b_{2^n-1}], [Q^b_{2^n-2}, Q^b_{2^n-1}]]: the product over
// partial quotients c_{2^n} .. c_{2^{n+1}-1}.
template <CoefficientRing R>
PolyMatrix<R> b_block(std::span<const int> c, std::size_t level, const R& ring) {
  const std::size_t begin = std::size_t{1} << level;
  detail::require_prefix(c, 2 * begin, "b-block");
  return block_product(c.subspan(begin, begin), ring);
}

template <CoefficientRing R>
PolyMatrix<R> b_convergents(SequenceKind kind, std::size_t level, const R& ring) {
  if (level < 2) throw std::invalid_argument("b-convergents are defined for level n >= 2");
  if (level >= 40) throw ResourceLimitExceeded("b-convergent level too large");
  const std::size_t len = std::size_t{2} << level;
  auto seq = SignSequence::named(kind, len);
  return b_block(seq.values(), level, ring);
}

// P/Q expanded to the given order; Q(0) must be a unit.
template <CoefficientRing R>
Series<R> expand_convergent(const ConvergentPair<R>& pair, std::size_t order) {
  return Series<R>::truncate(pair.P, order) * series_inverse(Series<R>::truncate(pair.Q, order));
}

class StabilizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Truncated expansion of Stiel_c(x) through x^order. Uses convergent N and
// cross-checks it against convergent N+1 before returning.
template <CoefficientRing R>
Series<R> expand_stieltjes(std::span<const int> c, std::size_t order, const R& ring) {
  detail::require_prefix(c, order + 2, "expand_stieltjes");
  ConvergentStream<R> stream(c.first(order + 2), ring);
  for (std::size_t n = 0; n <= order; ++n) stream.next();
  ConvergentPair<R> at_order = stream.current();
  const ConvergentPair<R>& after = stream.next();
  Series<R> result = expand_convergent(at_order, order);
  if (auto diff = first_difference(result, expand_convergent(after, order))) {
    throw StabilizationError("convergents " + std::to_string(order) + " and " + std::to_string(order + 1) +
                             " disagree at x^" + std::to_string(*diff));
  }
  return result;
}

// Two-dimensional coefficient sequence a_{n,i} of the P- or Q-track,
// rows n = 0..n_max, columns i = 0..i_max.
template <CoefficientRing R>
class CoefficientTable {
 public:
  using value_type = typename R::value_type;

  CoefficientTable(R ring, Track track, std::size_t n_max, std::size_t i_max)
      : ring_(std::move(ring)), track_(track), rows_(n_max + 1), cols_(i_max + 1), data_(rows_ * cols_, ring_.zero()) {}

  const R& ring() const { return ring_; }
  Track track() const { return track_; }
  std::size_t n_max() const { return rows_ - 1; }
  std::size_t i_max() const { return cols_ - 1; }

  const value_type& at(std::size_t n, std::size_t i) const { return data_.at(n * cols_ + i); }
  value_type& at(std::size_t n, std::size_t i) { return data_.at(n * cols_ + i); }

  std::vector<value_type> column(std::size_t i) const {
    std::vector<value_type> out;
    out.reserve(rows_);
    for (std::size_t n = 0; n < rows_; ++n) out.push_back(at(n, i));
    return out;
  }

 private:
  R ring_;
  Track track_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

// Filled entrywise by a_{n,0} = a_{n-1,0} and a_{n,i} = a_{n-1,i} + c_n a_{n-2,i-1},
// seeded with the track's F_{-2}, F_{-1}.
template <CoefficientRing R>
CoefficientTable<R> coefficient_table(std::span<const int> c, std::size_t n_max, std::size_t i_max, const R& ring,
                                      Track track) {
  detail::require_prefix(c, n_max + 1, "coefficient table");
  check_resource((n_max + 1) * (i_max + 1), "coefficient table");
  CoefficientTable<R> table(ring, track, n_max, i_max);
  using V = typename R::value_type;
  // F_{-2} and F_{-1} as dense rows
  std::vector<V> before_prev(i_max + 1, ring.zero());
  std::vector<V> prev(i_max + 1, ring.zero());
  if (track == Track::P) {
    before_prev[0] = ring.one();
  } else {
    prev[0] = ring.one();
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    const V q = ring.from_int(c[n]);
    const std::vector<V>* two_back = n >= 2 ? nullptr : (n == 0 ? &before_prev : &prev);
    for (std::size_t i = 0; i <= i_max; ++i) {
      const V& above = n >= 1 ? table.at(n - 1, i) : prev[i];
      if (i == 0) {
        table.at(n, i) = above;
        continue;
      }
      const V& lower = two_back ? (*two_back)[i - 1] : table.at(n - 2, i - 1);
      table.at(n, i) = ring.add(above, ring.mul(q, lower));
    }
  }
  return table;
}

// One row per n, entries separated by spaces.
template <CoefficientRing R>
std::string format_table(const CoefficientTable<R>& table) {
  std::ostringstream os;
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    for (std::size_t i = 0; i <= table.i_max(); ++i) {
      if (i) os << ' ';
      os << table.ring().format(table.at(n, i));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace stieltjes
