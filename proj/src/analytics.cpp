#include "dyckbij/analytics.hpp"

#include <stdexcept>
#include <string>

#include "dyckbij/bijection.hpp"
#include "dyckbij/lco.hpp"

namespace dyckbij {

Int binomial(int64_t a, int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int out = 1;
  for (int64_t i = 1; i <= b; ++i) {
    out *= a - b + i;
    out /= i;  // exact: out is binom(a-b+i, i)
  }
  return out;
}

Int catalan(int n) {
  if (n < 0) fail(errc::out_of_range, "index must be >= 0");
  return binomial(2 * int64_t{n}, n) / (n + 1);
}

Int motzkin(int n) {
  if (n < 0) fail(errc::out_of_range, "index must be >= 0");
  std::vector<Int> m(static_cast<size_t>(n) + 1);
  m[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Int acc = m[static_cast<size_t>(i - 1)];
    for (int j = 0; j <= i - 2; ++j) {
      acc += m[static_cast<size_t>(j)] * m[static_cast<size_t>(i - 2 - j)];
    }
    m[static_cast<size_t>(i)] = acc;
  }
  return m[static_cast<size_t>(n)];
}

Int gen_catalan(int j, int n) {
  if (j < 1 || n < 0) fail(errc::out_of_range, "need j >= 1 and n >= 0");
  Int numer = binomial(2 * int64_t{n} + j, n) * j;
  Int denom = 2 * int64_t{n} + j;
  if (numer % denom != 0) throw std::logic_error("convolution value is not an integer");
  return numer / denom;
}

namespace {

void check_series_args(int k, int order) {
  if (k < 0 || k > 64) fail(errc::out_of_range, "exponent must lie in [0, 64]");
  if (order < 0 || order > 64) fail(errc::out_of_range, "order must lie in [0, 64]");
}

// W = x (1 - (2x)^{2^k}) / (1 - 2x) = x * sum_{j < 2^k} (2x)^j, truncated.
Series geometric_weight(int k, int order) {
  Series w(order);
  bool all = k >= 7;  // 2^k beyond any admissible order
  Rat c = 1;
  for (int j = 0; j <= order && (all || j < (1 << k)); ++j) {
    if (j + 1 <= order) w.set_coeff(j + 1, c);
    c *= 2;
  }
  return w;
}

}  // namespace

Series series_fk(int k, int order) {
  check_series_args(k, order);
  Series w = geometric_weight(k, order);
  Series one = Series::constant(1, order);
  Series x = Series::monomial(1, 1, order);
  Series f = one;
  Series g(order);
  Series h(order);
  bool stalled = false;
  for (int round = 0; round < order + 2; ++round) {
    Series g2 = x + w * (x + (f - one) * h);
    Series h2 = g2 - x;
    Series f2 = one + g2 * f;
    if (f2 == f && g2 == g && h2 == h) {
      stalled = true;
      break;
    }
    f = std::move(f2);
    g = std::move(g2);
    h = std::move(h2);
  }
  if (!stalled &&
      !(f == one + g * f && g == x + w * (x + (f - one) * h) && h == g - x)) {
    throw std::logic_error("fixed-point iteration did not settle");
  }
  return f;
}

Series series_fk_closed(int k, int order) {
  check_series_args(k, order);
  int m = order + 1;  // the final division by a valuation-1 series costs one order
  Series one = Series::constant(1, m);
  Series x = Series::monomial(1, 1, m);
  Series a(m);
  if (k <= 6 && (1 << k) + 1 <= m) {
    int e = (1 << k) + 1;
    a = Series::monomial(Int(1) << e, e, m);
  }
  Series radicand =
      one - x.scaled(4) + a * (Series::constant(2, m) - a) * x * (one - x).inverse();
  Series numer = one - a - radicand.sqrt_one();
  Series denom = x.scaled(2) - a;
  return numer.divide_by(denom);
}

int64_t stat_x(const DyckPath& p) { return count_pattern(p, "DUD"); }

int64_t stat_y(const DyckPath& p) {
  return count_pattern(p, "DUDU") + count_pattern(p, "UU+DD") + (ends_with(p, "UD") ? 1 : 0);
}

int64_t motzkin_path_count(int n, int cap) {
  if (n < 0) fail(errc::out_of_range, "index must be >= 0");
  int64_t count = 0;
  for_each_path(
      n + 1,
      [&](const DyckPath& p) {
        if (ends_with(p, "DD") && count_pattern(p, "DUDU") == 0 &&
            count_pattern(p, "UU+DD") == 0) {
          ++count;
        }
      },
      cap);
  return count;
}

int64_t dud_avoiding_count(int n, int cap) {
  if (n < 0) fail(errc::out_of_range, "index must be >= 0");
  int64_t count = 0;
  for_each_path(
      n + 1, [&](const DyckPath& p) { if (count_pattern(p, "DUD") == 0) ++count; }, cap);
  return count;
}

int64_t lemma13_count(int n, int cap) {
  if (n < 0) fail(errc::out_of_range, "index must be >= 0");
  int64_t count = 0;
  for_each_path(
      n,
      [&](const DyckPath& p) {
        if (!ends_with(p, "DD")) return;
        int height = 0;
        for (int t = 0; t + 2 < p.length(); ++t) {
          height += p[t] == 'U' ? 1 : -1;
          if (p[t] == 'D' && height == 0 && p[t + 1] == 'U' && p[t + 2] == 'U') {
            ++count;
            return;
          }
        }
      },
      cap);
  return count;
}

CatalanSplitReport prop14_check(int n) {
  if (n < 1) fail(errc::out_of_range, "size must be >= 1, got " + std::to_string(n));
  CatalanSplitReport report;
  report.n = n;
  report.catalan_value = catalan(n);
  Rat sum = Rat(Int(1) << (n - 1));
  for (int k = 1; k <= n - 2; ++k) {
    sum += Rat(Int(1) << k, n - k) * Rat(binomial(2 * int64_t{n} - 2 * k, n - 2 - k));
  }
  if (boost::multiprecision::denominator(sum) != 1) {
    throw std::logic_error("split sum is not an integer");
  }
  report.split_sum = boost::multiprecision::numerator(sum);
  report.holds = report.split_sum == report.catalan_value;
  return report;
}

Int skeleton_size_count(int n, int k) {
  if (n < 1 || k < 1) fail(errc::out_of_range, "need n >= 1 and k >= 1");
  if (k == n + 1) return Int(1) << (n - 1);
  if (k <= n - 2) return (Int(1) << (k - 1)) * gen_catalan(4, n - k - 2);
  return 0;
}

std::map<int, int64_t> skeleton_size_census(int n, int cap) {
  if (n < 1) fail(errc::out_of_range, "size must be >= 1, got " + std::to_string(n));
  std::map<int, int64_t> census;
  for_each_primitive(
      n + 1,
      [&](const DyckPath& p) {
        int k = contains_duu(p) ? decompose(p).skeleton.size() : p.size();
        ++census[k];
      },
      cap);
  return census;
}

std::vector<std::vector<Int>> lco_leaf_table(int max_n) {
  if (max_n < 1 || max_n > 24) fail(errc::out_of_range, "rows must lie in [1, 24]");
  int m = max_n + 1;
  Series2 one = Series2::constant(1, m);
  Series2 climb = Series2::monomial(4, 1, 0, m) - Series2::monomial(4, 2, 0, m);
  Series2 lattice = (one - Series2::monomial(1, 1, 1, m)).inverse();
  Series2 root = (one - (one - climb * lattice).sqrt_one()).shifted_down(1).scaled(Rat(1, 2));
  std::vector<std::vector<Int>> table;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Int> row;
    for (int k = 1; k <= n; ++k) {
      const Rat& v = root.coeff(n, k);
      if (boost::multiprecision::denominator(v) != 1) {
        throw std::logic_error("leaf count is not an integer");
      }
      row.push_back(boost::multiprecision::numerator(v));
    }
    table.push_back(std::move(row));
  }
  return table;
}

std::vector<int64_t> leaf_census_row(int n, int cap) {
  if (n < 1) fail(errc::out_of_range, "size must be >= 1, got " + std::to_string(n));
  std::vector<int64_t> row(static_cast<size_t>(n), 0);
  for_each_path(
      n,
      [&](const DyckPath& p) {
        LcoForest f = path_to_forest(p);
        int64_t leaves = 0;
        std::vector<const LcoVertex*> stack;
        for (const LcoVertex& t : f.trees) stack.push_back(&t);
        while (!stack.empty()) {
          const LcoVertex* v = stack.back();
          stack.pop_back();
          if (v->children.empty()) {
            ++leaves;
          } else {
            for (const LcoVertex& child : v->children) stack.push_back(&child);
          }
        }
        ++row[static_cast<size_t>(leaves - 1)];
      },
      cap);
  return row;
}

}  // namespace dyckbij
