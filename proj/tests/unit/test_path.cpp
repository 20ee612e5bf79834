#include <algorithm>
#include <cstdint>

#include "doctest.h"
#include "dyckbij/analytics.hpp"
#include "dyckbij/path.hpp"
#include "helpers.hpp"

using namespace dyckbij;
using dyckbij::testing::P;
using dyckbij::testing::thrown_code;

TEST_CASE("parse accepts valid step strings including the empty one") {
  CHECK(P("").empty());
  CHECK(P("UD").size() == 1);
  CHECK(P("UUDUDD").text() == "UUDUDD");
  CHECK(P("UUDD").length() == 4);
}

TEST_CASE("parse reports the first bad character before any shape problem") {
  CHECK(thrown_code([] { P("UDX"); }) == errc::bad_char);
  // The dip at step 2 is not reached: the whole string is scanned for bad
  // characters first.
  CHECK(thrown_code([] { P("UDD U"); }) == errc::bad_char);
  CHECK(thrown_code([] { P("uD"); }) == errc::bad_char);
}

TEST_CASE("parse reports dips before imbalance") {
  CHECK(thrown_code([] { P("UDDU"); }) == errc::dips_below_ground);
  CHECK(thrown_code([] { P("DU"); }) == errc::dips_below_ground);
  CHECK(thrown_code([] { P("UDU"); }) == errc::unbalanced);
  CHECK(thrown_code([] { P("UUUDD"); }) == errc::unbalanced);
}

TEST_CASE("lexicographic order puts U before D") {
  CHECK(lex_less(P("UUDD"), P("UDUD")));
  CHECK_FALSE(lex_less(P("UDUD"), P("UUDD")));
  CHECK_FALSE(lex_less(P("UD"), P("UD")));
}

TEST_CASE("enumeration is lexicographic and Catalan-counted") {
  std::vector<DyckPath> three = enumerate_paths(3);
  REQUIRE(three.size() == 5);
  CHECK(three[0].text() == "UUUDDD");
  CHECK(three[1].text() == "UUDUDD");
  CHECK(three[2].text() == "UUDDUD");
  CHECK(three[3].text() == "UDUUDD");
  CHECK(three[4].text() == "UDUDUD");
  CHECK(std::is_sorted(three.begin(), three.end(), lex_less));

  for (int n = 0; n <= 8; ++n) {
    CHECK(Int(enumerate_paths(n).size()) == catalan(n));
  }
  for (int n = 1; n <= 8; ++n) {
    CHECK(Int(enumerate_primitive(n).size()) == catalan(n - 1));
  }
}

TEST_CASE("enumeration refuses sizes beyond the cap") {
  CHECK(thrown_code([] { enumerate_paths(15); }) == errc::cap_exceeded);
  CHECK(thrown_code([] { for_each_path(4, [](const DyckPath&) {}, 3); }) == errc::cap_exceeded);
  CHECK(thrown_code([] { enumerate_primitive(0); }) == errc::out_of_range);
  CHECK(thrown_code([] { enumerate_paths(-1); }) == errc::out_of_range);
}

TEST_CASE("heights walk the path profile") {
  CHECK(heights(P("UUDD")) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(heights(P("")) == std::vector<int>{0});
}

TEST_CASE("primitivity means a single return to ground") {
  CHECK(is_primitive(P("UD")));
  CHECK(is_primitive(P("UUDD")));
  CHECK_FALSE(is_primitive(P("UDUD")));
  CHECK_FALSE(is_primitive(P("")));
}

TEST_CASE("components split at returns and concat rebuilds") {
  std::vector<DyckPath> parts = components(P("UDUUDDUD"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].text() == "UD");
  CHECK(parts[1].text() == "UUDD");
  CHECK(parts[2].text() == "UD");
  CHECK(concat(parts).text() == "UDUUDDUD");
  CHECK(components(P("")).empty());
}

TEST_CASE("matching downstep closes the shortest balanced window") {
  CHECK(match_downstep(P("UUDD"), 0) == 3);
  CHECK(match_downstep(P("UUDD"), 1) == 2);
  CHECK(match_downstep(P("UDUD"), 2) == 3);
  CHECK(thrown_code([] { match_downstep(P("UUDD"), 2); }) == errc::not_an_upstep);
  CHECK(thrown_code([] { match_downstep(P("UUDD"), 4); }) == errc::out_of_range);
  CHECK(thrown_code([] { match_downstep(P("UUDD"), -1); }) == errc::out_of_range);
}

TEST_CASE("pattern parsing keeps the atoms around a single wildcard") {
  PathPattern pat = parse_pattern("UU+DD");
  CHECK(pat.prefix == "UU");
  CHECK(pat.has_wildcard);
  CHECK(pat.suffix == "DD");
  CHECK_FALSE(parse_pattern("DUD").has_wildcard);
  CHECK(thrown_code([] { parse_pattern("U+D+"); }) == errc::bad_pattern);
  CHECK(thrown_code([] { parse_pattern("+"); }) == errc::bad_pattern);
  CHECK(thrown_code([] { parse_pattern(""); }) == errc::bad_pattern);
  CHECK(thrown_code([] { parse_pattern("UXD"); }) == errc::bad_char);
}

TEST_CASE("concrete patterns count overlapping factors") {
  CHECK(count_pattern(P("UDUDUD"), "DUD") == 2);
  CHECK(count_pattern(P("UUDUDUDD"), "DUDU") == 1);
  CHECK(count_pattern(P("UUUDUDDD"), "DUD") == 1);
  CHECK(count_pattern(P("UUUDDD"), "DUD") == 0);
  CHECK(count_pattern(P(""), "UD") == 0);
}

TEST_CASE("wildcard patterns count anchors that admit a nonempty gap") {
  CHECK(count_pattern(P("UUUDUDDD"), "UU+DD") == 1);
  CHECK(count_pattern(P("UUUDDUDD"), "UU+DD") == 0);
  CHECK(count_pattern(P("UUUDDD"), "UU+DD") == 1);
  CHECK(count_pattern(P("UUDD"), "UU+DD") == 0);  // the gap must be nonempty
  CHECK(count_pattern(P("UUUDDD"), "+DD") == 1);
  CHECK(count_pattern(P("UUDD"), "+DD") == 0);
  CHECK(count_pattern(P("UDUUDD"), "UU+") == 0);
  CHECK(count_pattern(P("UUUDUDDD"), "UU+UD") == 1);
}

TEST_CASE("factor helpers") {
  CHECK(contains_duu(P("UDUUDD")));
  CHECK_FALSE(contains_duu(P("UUUDDD")));
  CHECK(ends_with(P("UUDD"), "DD"));
  CHECK(ends_with(P("UUDD"), ""));
  CHECK_FALSE(ends_with(P("UD"), "UDUD"));
  CHECK(thrown_code([] { ends_with(P("UD"), "xD"); }) == errc::bad_char);
}
