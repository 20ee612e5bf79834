#ifndef DYCKBIJ_ANALYTICS_HPP
#define DYCKBIJ_ANALYTICS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "dyckbij/path.hpp"
#include "dyckbij/series.hpp"

namespace dyckbij {

Int binomial(int64_t a, int64_t b);  // 0 when b < 0 or b > a
Int catalan(int n);
Int motzkin(int n);

// j-fold Catalan convolution: gen_catalan(j, n) = j/(2n+j) * binom(2n+j, n);
// gen_catalan(1, .) is catalan.
Int gen_catalan(int j, int n);

// Generating function F_k counting paths whose forward-orbit length is at
// most 2^k, obtained by solving the system
//   F = 1 + G F,
//   G = x + x (1-(2x)^{2^k})/(1-2x) (x + (F-1) H),
//   H = G - x
// by fixed-point iteration (at most order+2 rounds with a stall check).
// k = 0 counts fixed points.  Requires 0 <= k, order <= 64.
Series series_fk(int k, int order);

// The same series from its closed form
//   (1 - a - sqrt(1 - 4x + a(2-a)x/(1-x))) / (2x - a),  a = (2x)^{2^k + 1}.
Series series_fk_closed(int k, int order);

// Number of DUDs.
int64_t stat_x(const DyckPath& p);
// Number of DUDUs, plus factors UU w DD with w a nonempty Dyck path, plus 1
// if the path ends UD.  forward() carries stat_x to stat_y.
int64_t stat_y(const DyckPath& p);

// Dyck (n+1)-paths ending DD avoiding DUDU and UU(+)DD; equals motzkin(n)
// for n >= 1.
int64_t motzkin_path_count(int n, int cap = kDefaultEnumerationCap);
// Dyck (n+1)-paths avoiding DUD; equals motzkin(n) for n >= 1.
int64_t dud_avoiding_count(int n, int cap = kDefaultEnumerationCap);

// Dyck n-paths ending DD that contain a DUU with valley at ground level;
// equals gen_catalan(4, n-3) for n >= 3.
int64_t lemma13_count(int n, int cap = kDefaultEnumerationCap);

// The Catalan split along skeleton sizes:
//   catalan(n) = 2^{n-1} + sum_{k=1}^{n-2} 2^k/(n-k) binom(2n-2k, n-2-k).
struct CatalanSplitReport {
  int n = 0;
  Int catalan_value;
  Int split_sum;
  bool holds = false;
};

CatalanSplitReport prop14_check(int n);

// Predicted number of primitive (n+1)-paths whose skeleton has size k
// (k = n+1 collects the DUU-free ones).
Int skeleton_size_count(int n, int k);

// Brute-force census of the same statistic, keyed by skeleton size.
std::map<int, int64_t> skeleton_size_census(int n, int cap = kDefaultEnumerationCap);

// Rows n = 1..max_n of the leaf-count table: entry (n, k) counts Dyck
// n-paths whose forest, joined under a fresh root, has k leaves.  Expanded
// from (1 - sqrt(1 - 4x(1-x)/(1-xy))) / (2x); max_n <= 24.
std::vector<std::vector<Int>> lco_leaf_table(int max_n);

// Brute-force leaf census for one n: slot k-1 counts paths with k leaves.
std::vector<int64_t> leaf_census_row(int n, int cap = kDefaultEnumerationCap);

}  // namespace dyckbij

#endif
