#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "dyckbij/analytics.hpp"
#include "dyckbij/bijection.hpp"
#include "dyckbij/orbit.hpp"
#include "dyckbij/path.hpp"
#include "helpers.hpp"

using namespace dyckbij;
using dyckbij::testing::P;
using dyckbij::testing::thrown_code;

TEST_CASE("binomials and the classical sequences") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(3, 5) == 0);

  const int64_t cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
                         742900, 2674440};
  for (int n = 0; n <= 14; ++n) CHECK(catalan(n) == cat[n]);
  const int64_t mot[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798};
  for (int n = 0; n <= 11; ++n) CHECK(motzkin(n) == mot[n]);

  CHECK(gen_catalan(4, 0) == 1);
  CHECK(gen_catalan(4, 2) == 14);
  for (int n = 0; n <= 10; ++n) {
    CHECK(gen_catalan(1, n) == catalan(n));
    CHECK(gen_catalan(2, n) == catalan(n + 1));
  }
}

TEST_CASE("the orbit-length series counts fixed points at the base level") {
  Series f0 = series_fk(0, 8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(f0.coeff(n) == Rat(Int(fixed_points(n).size())));
  }
  const int64_t head[] = {1, 1, 2, 3, 6};
  for (int n = 0; n <= 4; ++n) CHECK(f0.coeff(n) == head[n]);
}

TEST_CASE("the system and the closed form produce the same series") {
  for (int k = 0; k <= 3; ++k) {
    CHECK(series_fk(k, 16) == series_fk_closed(k, 16));
  }
  CHECK(thrown_code([] { series_fk(-1, 8); }) == errc::out_of_range);
  CHECK(thrown_code([] { series_fk(0, 65); }) == errc::out_of_range);
  CHECK(thrown_code([] { series_fk_closed(65, 8); }) == errc::out_of_range);
}

TEST_CASE("the level series nest and exhaust the Catalan numbers") {
  int order = 12;
  std::vector<Series> fk;
  for (int k = 0; k <= 4; ++k) fk.push_back(series_fk(k, order));
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k + 1 <= 4; ++k) {
      CHECK(fk[static_cast<size_t>(k)].coeff(n) <= fk[static_cast<size_t>(k) + 1].coeff(n));
    }
    // 2^4 bounds every orbit length up to size 12, so the top level sees all
    CHECK(fk[4].coeff(n) == Rat(catalan(n)));
  }
}

TEST_CASE("level counts agree with the brute orbit census") {
  for (int n = 0; n <= 9; ++n) {
    std::map<int64_t, int64_t> hist = orbit_length_histogram(n);
    for (int k = 0; k <= 2; ++k) {
      int64_t expected = 0;
      for (const auto& [len, paths] : hist) {
        if (len <= (int64_t{1} << k)) expected += paths;
      }
      CHECK(series_fk(k, 9).coeff(n) == expected);
    }
  }
}

TEST_CASE("the map carries one statistic to the other") {
  CHECK(stat_x(P("UDUDUD")) == 2);
  CHECK(stat_y(P("UDUDUD")) == 2);
  CHECK(stat_x(P("UUDUDD")) == 1);
  CHECK(stat_y(P("UUUDDD")) == 1);
  CHECK(stat_x(P("UUUDDD")) == 0);
  CHECK(stat_y(P("UUDUDD")) == 0);
  CHECK(stat_y(P("UUDD")) == 0);
  CHECK(stat_y(P("UD")) == 1);  // the identity below starts at size 2

  for (int n = 2; n <= 9; ++n) {
    for_each_path(n, [](const DyckPath& p) { CHECK(stat_y(forward(p)) == stat_x(p)); });
  }
}

TEST_CASE("both Motzkin-sized families really have Motzkin counts") {
  CHECK(motzkin_path_count(1) == 1);
  CHECK(motzkin_path_count(3) == 4);
  CHECK(motzkin_path_count(5) == 21);
  for (int n = 1; n <= 9; ++n) {
    CHECK(motzkin(n) == motzkin_path_count(n));
    CHECK(motzkin(n) == dud_avoiding_count(n));
  }
}

TEST_CASE("ground-level window counts match the fourfold convolution") {
  CHECK(lemma13_count(2) == 0);
  CHECK(lemma13_count(3) == 1);
  CHECK(lemma13_count(5) == 14);
  for (int n = 3; n <= 11; ++n) {
    CHECK(gen_catalan(4, n - 3) == lemma13_count(n));
    Int conv = 0;
    for (int a = 1; a <= n - 2; ++a) conv += catalan(a) * catalan(n - 1 - a);
    CHECK(conv == lemma13_count(n));
  }
}

TEST_CASE("the Catalan split along skeleton sizes") {
  CatalanSplitReport r = prop14_check(4);
  CHECK(r.catalan_value == 14);
  CHECK(r.split_sum == 14);
  CHECK(r.holds);
  for (int n = 2; n <= 20; ++n) CHECK(prop14_check(n).holds);

  CHECK(skeleton_size_count(4, 1) == 4);
  CHECK(skeleton_size_count(4, 2) == 2);
  CHECK(skeleton_size_count(4, 5) == 8);
  CHECK(skeleton_size_count(4, 3) == 0);
  CHECK(skeleton_size_count(4, 4) == 0);
  CHECK(skeleton_size_census(4) == std::map<int, int64_t>{{1, 4}, {2, 2}, {5, 8}});

  for (int n = 2; n <= 9; ++n) {
    std::map<int, int64_t> census = skeleton_size_census(n);
    Int total = 0;
    for (int k = 1; k <= n + 1; ++k) {
      Int predicted = skeleton_size_count(n, k);
      total += predicted;
      int64_t actual = census.contains(k) ? census.at(k) : 0;
      CHECK(predicted == actual);
    }
    CHECK(total == catalan(n));
  }
}

TEST_CASE("the leaf table matches its closed generating function") {
  std::vector<std::vector<Int>> table = lco_leaf_table(8);
  REQUIRE(table.size() == 8);
  const std::vector<std::vector<int64_t>> frozen = {
      {1},
      {1, 1},
      {2, 2, 1},
      {4, 6, 3, 1},
      {8, 17, 12, 4, 1},
      {16, 46, 44, 20, 5, 1},
      {32, 120, 150, 90, 30, 6, 1},
      {64, 304, 482, 370, 160, 42, 7, 1},
  };
  for (size_t i = 0; i < frozen.size(); ++i) {
    REQUIRE(table[i].size() == frozen[i].size());
    for (size_t j = 0; j < frozen[i].size(); ++j) {
      CHECK(table[i][j] == frozen[i][j]);
    }
  }
  CHECK(table[7][2] == 482);

  std::vector<std::vector<Int>> big = lco_leaf_table(12);
  for (int n = 1; n <= 12; ++n) {
    const std::vector<Int>& row = big[static_cast<size_t>(n - 1)];
    CHECK(row.back() == 1);  // only the all-UD path splits into n leaves
    Int sum = 0;
    for (const Int& v : row) sum += v;
    CHECK(sum == catalan(n));
  }
  CHECK(thrown_code([] { lco_leaf_table(25); }) == errc::out_of_range);
  CHECK(thrown_code([] { lco_leaf_table(0); }) == errc::out_of_range);
}

TEST_CASE("the leaf census agrees with the table") {
  std::vector<std::vector<Int>> table = lco_leaf_table(9);
  for (int n = 1; n <= 9; ++n) {
    std::vector<int64_t> row = leaf_census_row(n);
    const std::vector<Int>& predicted = table[static_cast<size_t>(n - 1)];
    REQUIRE(row.size() == predicted.size());
    for (size_t k = 0; k < row.size(); ++k) {
      CHECK(predicted[k] == row[k]);
    }
  }
}
