#pragma once

// Dense univariate polynomials over Rational with an optional negative low
// exponent, so Laurent-style intermediates (powers of 1/t) can be carried
// exactly until they cancel.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tuttex/linalg.hpp"
#include "tuttex/rational.hpp"

namespace tuttex {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT: implicit by design
    if (sgn(constant) != 0) coeff_ = {constant};
  }
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial monomial(const Rational& c, long degree) {
    Polynomial p;
    if (sgn(c) != 0) {
      p.low_ = degree;
      p.coeff_ = {c};
    }
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }
  // Lowest/highest exponent with nonzero coefficient; zero polynomial
  // reports the empty range low_degree() = 0, degree() = -1.
  long low_degree() const { return low_; }
  long degree() const { return low_ + static_cast<long>(coeff_.size()) - 1; }
  bool is_proper() const { return coeff_.empty() || low_ >= 0; }

  Rational coeff(long degree) const {
    if (degree < low_ || degree > this->degree()) return Rational(0);
    return coeff_[static_cast<std::size_t>(degree - low_)];
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long lo = std::min(low_, o.low_);
    long hi = std::max(degree(), o.degree());
    std::vector<Rational> sum(static_cast<std::size_t>(hi - lo + 1));
    for (long d = lo; d <= hi; ++d)
      sum[static_cast<std::size_t>(d - lo)] = coeff(d) + o.coeff(d);
    low_ = lo;
    coeff_ = std::move(sum);
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
  }

  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i)
      for (std::size_t j = 0; j < b.coeff_.size(); ++j)
        r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
    r.normalize();
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& f) const {
    Polynomial r;
    if (sgn(f) == 0 || is_zero()) return r;
    r = *this;
    for (auto& c : r.coeff_) c *= f;
    return r;
  }

  // multiply by t^d
  Polynomial shifted(long d) const {
    Polynomial r = *this;
    if (!r.is_zero()) r.low_ += d;
    return r;
  }

  Rational evaluate(const Rational& t) const {
    if (is_zero()) return Rational(0);
    if (low_ < 0 && sgn(t) == 0)
      throw inapplicable_error("evaluating a Laurent polynomial at 0");
    Rational acc(0);
    for (std::size_t i = coeff_.size(); i-- > 0;) acc = acc * t + coeff_[i];
    return acc * rational_pow(t, low_);
  }

  bool operator==(const Polynomial& o) const {
    return low_ == o.low_ && coeff_ == o.coeff_;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (long d = degree(); d >= low_; --d) {
      Rational c = coeff(d);
      if (sgn(c) == 0) continue;
      if (out.empty()) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      Rational a = abs(c);
      bool unit = a == 1;
      if (!unit || d == 0) out += a.get_str();
      if (d != 0) {
        if (!unit) out += "*";
        out += var;
        if (d != 1) out += "^" + std::to_string(d);
      }
    }
    return out;
  }

 private:
  long low_ = 0;
  std::vector<Rational> coeff_;  // nonzero first/last entries unless empty

  void normalize() {
    std::size_t front = 0;
    while (front < coeff_.size() && sgn(coeff_[front]) == 0) ++front;
    if (front == coeff_.size()) {
      coeff_.clear();
      low_ = 0;
      return;
    }
    std::size_t back = coeff_.size();
    while (sgn(coeff_[back - 1]) == 0) --back;
    coeff_ = std::vector<Rational>(coeff_.begin() + front, coeff_.begin() + back);
    low_ += static_cast<long>(front);
  }
};

// Exact interpolation: the unique polynomial of degree < points.size()
// through all (abscissa, value) pairs, via Gaussian elimination on the
// Vandermonde system.
inline Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: duplicated abscissa " +
                                    points[i].first.get_str());
  if (n == 0) return Polynomial();
  Matrix m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Rational p(1);
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = p;
      p *= points[i].first;
    }
    m[i][n] = points[i].second;
  }
  auto pivots = row_reduce(m, n);
  if (pivots.size() != n)
    throw std::logic_error("interpolate: singular Vandermonde system");
  Polynomial r;
  for (std::size_t i = 0; i < n; ++i)
    r += Polynomial::monomial(m[i][n], static_cast<long>(pivots[i]));
  return r;
}

}  // namespace tuttex
