#ifndef DYCKBIJ_SERIES_HPP
#define DYCKBIJ_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "dyckbij/errors.hpp"

namespace dyckbij {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Truncated power series with exact rational coefficients, tracked through
// x^order.  Arithmetic truncates to the smaller operand order.
class Series {
 public:
  explicit Series(int order);  // zero series
  static Series constant(const Rat& value, int order);
  static Series monomial(const Rat& value, int degree, int order);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const;
  void set_coeff(int k, Rat value);

  Series truncated(int new_order) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;
  Series scaled(const Rat& s) const;
  Series pow(int e) const;  // e >= 0

  // Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const;

  // Valuation-aware division: with v the valuation of den, requires the first
  // v coefficients of *this to vanish and returns a series of order
  // min(order, den.order) - v.
  Series divide_by(const Series& den) const;

  // Square root with constant term 1 (sqrt_domain otherwise).  Newton steps
  // double the trusted order; the result is verified by squaring.
  Series sqrt_one() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rat> c_;  // c_[k] = coefficient of x^k
};

// Coefficients as exact integers.  A non-integer coefficient means the
// caller's algebra is broken; reported as std::logic_error.
std::vector<Int> integer_coefficients(const Series& s);

// Bivariate series in x and y, truncated at x^order with y-degree capped at
// the same order (every use has y-degree <= x-degree).  Coefficients are
// stored as y-polynomials per x-power.
class Series2 {
 public:
  explicit Series2(int order);  // zero
  static Series2 constant(const Rat& value, int order);
  // c * x^dx * y^dy
  static Series2 monomial(const Rat& value, int dx, int dy, int order);

  int order() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  const Rat& coeff(int n, int k) const;  // x^n y^k
  void set_coeff(int n, int k, Rat value);

  friend Series2 operator+(const Series2& a, const Series2& b);
  friend Series2 operator-(const Series2& a, const Series2& b);
  friend Series2 operator*(const Series2& a, const Series2& b);
  Series2 scaled(const Rat& s) const;

  Series2 inverse() const;   // nonzero constant term
  Series2 sqrt_one() const;  // constant term 1; verified by squaring

  // Divide by x^k: requires the first k x-coefficients to vanish; the order
  // drops by k.
  Series2 shifted_down(int k) const;

  friend bool operator==(const Series2&, const Series2&) = default;

 private:
  // rows_[n][k] = coefficient of x^n y^k; row n has min(n, order)+1 slots.
  std::vector<std::vector<Rat>> rows_;
};

}  // namespace dyckbij

#endif
