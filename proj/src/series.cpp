#include "dyckbij/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyckbij {

namespace {

void check_order(int order) {
  if (order < 0) fail(errc::out_of_range, "series order must be >= 0");
}

}  // namespace

Series::Series(int order) {
  check_order(order);
  c_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

Series Series::constant(const Rat& value, int order) {
  Series s(order);
  s.c_[0] = value;
  return s;
}

Series Series::monomial(const Rat& value, int degree, int order) {
  if (degree < 0) fail(errc::out_of_range, "monomial degree must be >= 0");
  Series s(order);
  if (degree <= order) s.c_[static_cast<size_t>(degree)] = value;
  return s;
}

const Rat& Series::coeff(int k) const {
  if (k < 0 || k > order()) {
    fail(errc::out_of_range, "coefficient index " + std::to_string(k) +
                                 " outside order " + std::to_string(order()));
  }
  return c_[static_cast<size_t>(k)];
}

void Series::set_coeff(int k, Rat value) {
  if (k < 0 || k > order()) {
    fail(errc::out_of_range, "coefficient index " + std::to_string(k) +
                                 " outside order " + std::to_string(order()));
  }
  c_[static_cast<size_t>(k)] = std::move(value);
}

Series Series::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) {
    fail(errc::out_of_range, "cannot truncate order " + std::to_string(order()) + " to " +
                                 std::to_string(new_order));
  }
  Series out(new_order);
  std::copy_n(c_.begin(), static_cast<size_t>(new_order) + 1, out.c_.begin());
  return out;
}

Series operator+(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int k = 0; k <= out.order(); ++k) {
    out.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] + b.c_[static_cast<size_t>(k)];
  }
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int k = 0; k <= out.order(); ++k) {
    out.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] - b.c_[static_cast<size_t>(k)];
  }
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int k = 0; k <= out.order(); ++k) {
    Rat acc(0);
    for (int i = 0; i <= k; ++i) {
      acc += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(k - i)];
    }
    out.c_[static_cast<size_t>(k)] = std::move(acc);
  }
  return out;
}

Series Series::operator-() const {
  Series out = *this;
  for (Rat& v : out.c_) v = -v;
  return out;
}

Series Series::scaled(const Rat& s) const {
  Series out = *this;
  for (Rat& v : out.c_) v *= s;
  return out;
}

Series Series::pow(int e) const {
  if (e < 0) fail(errc::out_of_range, "exponent must be >= 0");
  Series out = Series::constant(1, order());
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Series Series::inverse() const {
  if (c_[0] == 0) fail(errc::out_of_range, "inverse needs a nonzero constant term");
  Series out(order());
  out.c_[0] = Rat(1) / c_[0];
  for (int k = 1; k <= order(); ++k) {
    Rat acc(0);
    for (int i = 1; i <= k; ++i) {
      acc += c_[static_cast<size_t>(i)] * out.c_[static_cast<size_t>(k - i)];
    }
    out.c_[static_cast<size_t>(k)] = -acc / c_[0];
  }
  return out;
}

Series Series::divide_by(const Series& den) const {
  int v = 0;
  while (v <= den.order() && den.c_[static_cast<size_t>(v)] == 0) ++v;
  if (v > den.order()) fail(errc::out_of_range, "division by the zero series");
  int m = std::min(order(), den.order()) - v;
  if (m < 0) fail(errc::out_of_range, "denominator valuation exceeds the tracked order");
  for (int k = 0; k < v && k <= order(); ++k) {
    if (c_[static_cast<size_t>(k)] != 0) {
      fail(errc::out_of_range, "numerator is not divisible: x^" + std::to_string(k) +
                                   " coefficient is nonzero");
    }
  }
  Series num(m);
  Series d(m);
  for (int k = 0; k <= m; ++k) {
    num.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k + v)];
    d.c_[static_cast<size_t>(k)] = den.c_[static_cast<size_t>(k + v)];
  }
  return num * d.inverse();
}

Series Series::sqrt_one() const {
  if (c_[0] != 1) fail(errc::sqrt_domain, "square root needs constant term 1");
  Series r = Series::constant(1, 0);
  while (r.order() < order()) {
    int t = std::min(order(), 2 * r.order() + 1);
    Series guess(t);
    std::copy(r.c_.begin(), r.c_.end(), guess.c_.begin());
    Series target = truncated(t);
    r = (guess + target * guess.inverse()).scaled(Rat(1, 2));
  }
  if (!(r * r == *this)) {
    throw std::logic_error("square root verification failed");
  }
  return r;
}

std::vector<Int> integer_coefficients(const Series& s) {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(s.order()) + 1);
  for (int k = 0; k <= s.order(); ++k) {
    const Rat& v = s.coeff(k);
    if (boost::multiprecision::denominator(v) != 1) {
      throw std::logic_error("non-integer coefficient at x^" + std::to_string(k));
    }
    out.push_back(boost::multiprecision::numerator(v));
  }
  return out;
}

namespace {

// y-polynomial helpers for Series2 rows.
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, int cap) {
  std::vector<Rat> out(static_cast<size_t>(cap) + 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(cap); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

void poly_add_to(std::vector<Rat>& acc, const std::vector<Rat>& a) {
  for (size_t i = 0; i < a.size() && i < acc.size(); ++i) acc[i] += a[i];
}

}  // namespace

Series2::Series2(int order) {
  check_order(order);
  rows_.resize(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    rows_[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, Rat(0));
  }
}

Series2 Series2::constant(const Rat& value, int order) {
  Series2 s(order);
  s.rows_[0][0] = value;
  return s;
}

Series2 Series2::monomial(const Rat& value, int dx, int dy, int order) {
  if (dx < 0 || dy < 0) fail(errc::out_of_range, "monomial degrees must be >= 0");
  if (dy > dx) fail(errc::out_of_range, "y-degree above x-degree is not representable");
  Series2 s(order);
  if (dx <= order) s.rows_[static_cast<size_t>(dx)][static_cast<size_t>(dy)] = value;
  return s;
}

const Rat& Series2::coeff(int n, int k) const {
  static const Rat zero(0);
  if (n < 0 || n > order() || k < 0) {
    fail(errc::out_of_range, "coefficient index (" + std::to_string(n) + ", " +
                                 std::to_string(k) + ") outside order " + std::to_string(order()));
  }
  if (k > n) return zero;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

void Series2::set_coeff(int n, int k, Rat value) {
  if (n < 0 || n > order() || k < 0 || k > n) {
    fail(errc::out_of_range, "coefficient index (" + std::to_string(n) + ", " +
                                 std::to_string(k) + ") outside order " + std::to_string(order()));
  }
  rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] = std::move(value);
}

Series2 operator+(const Series2& a, const Series2& b) {
  Series2 out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) {
    for (int k = 0; k <= n; ++k) {
      out.rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] =
          a.rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] +
          b.rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }
  }
  return out;
}

Series2 operator-(const Series2& a, const Series2& b) {
  Series2 out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) {
    for (int k = 0; k <= n; ++k) {
      out.rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] =
          a.rows_[static_cast<size_t>(n)][static_cast<size_t>(k)] -
          b.rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }
  }
  return out;
}

Series2 operator*(const Series2& a, const Series2& b) {
  Series2 out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) {
    std::vector<Rat> acc(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
      poly_add_to(acc, poly_mul(a.rows_[static_cast<size_t>(i)],
                                b.rows_[static_cast<size_t>(n - i)], n));
    }
    out.rows_[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

Series2 Series2::scaled(const Rat& s) const {
  Series2 out = *this;
  for (auto& row : out.rows_) {
    for (Rat& v : row) v *= s;
  }
  return out;
}

Series2 Series2::inverse() const {
  if (rows_[0][0] == 0) fail(errc::out_of_range, "inverse needs a nonzero constant term");
  Series2 out(order());
  Rat lead = Rat(1) / rows_[0][0];
  out.rows_[0][0] = lead;
  for (int n = 1; n <= order(); ++n) {
    std::vector<Rat> acc(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 1; i <= n; ++i) {
      poly_add_to(acc, poly_mul(rows_[static_cast<size_t>(i)],
                                out.rows_[static_cast<size_t>(n - i)], n));
    }
    for (Rat& v : acc) v = -v * lead;
    out.rows_[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

Series2 Series2::sqrt_one() const {
  if (rows_[0][0] != 1) fail(errc::sqrt_domain, "square root needs constant term 1");
  Series2 out(order());
  out.rows_[0][0] = 1;
  for (int n = 1; n <= order(); ++n) {
    std::vector<Rat> acc = rows_[static_cast<size_t>(n)];
    acc.resize(static_cast<size_t>(n) + 1, Rat(0));
    for (int i = 1; i < n; ++i) {
      std::vector<Rat> cross =
          poly_mul(out.rows_[static_cast<size_t>(i)], out.rows_[static_cast<size_t>(n - i)], n);
      for (size_t k = 0; k < acc.size(); ++k) acc[k] -= cross[k];
    }
    for (Rat& v : acc) v /= 2;
    out.rows_[static_cast<size_t>(n)] = std::move(acc);
  }
  if (!(out * out == *this)) {
    throw std::logic_error("square root verification failed");
  }
  return out;
}

Series2 Series2::shifted_down(int k) const {
  if (k < 0) fail(errc::out_of_range, "shift must be >= 0");
  if (k > order()) fail(errc::out_of_range, "shift exceeds the tracked order");
  for (int n = 0; n < k; ++n) {
    for (const Rat& v : rows_[static_cast<size_t>(n)]) {
      if (v != 0) {
        fail(errc::out_of_range, "series is not divisible by x^" + std::to_string(k));
      }
    }
  }
  Series2 out(order() - k);
  for (int n = 0; n <= out.order(); ++n) {
    const std::vector<Rat>& src = rows_[static_cast<size_t>(n + k)];
    for (size_t j = 0; j < src.size(); ++j) {
      if (j <= static_cast<size_t>(n)) {
        out.rows_[static_cast<size_t>(n)][j] = src[j];
      } else if (src[j] != 0) {
        throw std::logic_error("x^" + std::to_string(n + k) + " carries y-degree " +
                               std::to_string(j) + " past the quotient's diagonal");
      }
    }
  }
  return out;
}

}  // namespace dyckbij
