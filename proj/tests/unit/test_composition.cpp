#include <cstdint>
#include <vector>

#include "doctest.h"
#include "dyckbij/analytics.hpp"
#include "dyckbij/composition.hpp"
#include "dyckbij/bijection.hpp"
#include "dyckbij/orbit.hpp"
#include "dyckbij/path.hpp"
#include "helpers.hpp"

using namespace dyckbij;
using dyckbij::testing::P;
using dyckbij::testing::thrown_code;

namespace {

// every composition of n, any last entry
std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  Composition prefix;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (int e = 1; e <= remaining; ++e) {
      prefix.push_back(e);
      self(self, remaining - e);
      prefix.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace

TEST_CASE("composition text form round-trips") {
  CHECK(parse_composition("3,1,3,2") == Composition{3, 1, 3, 2});
  CHECK(parse_composition(" 3 , 1 ") == Composition{3, 1});
  CHECK(format_composition({3, 1, 3, 2}) == "3,1,3,2");
  CHECK(format_composition({7}) == "7");
  CHECK(thrown_code([] { parse_composition(""); }) == errc::bad_char);
  CHECK(thrown_code([] { parse_composition("1,,2"); }) == errc::bad_char);
  CHECK(thrown_code([] { parse_composition("a"); }) == errc::bad_char);
  CHECK(thrown_code([] { parse_composition("1,2,"); }) == errc::bad_char);
  CHECK(thrown_code([] { parse_composition("0"); }) == errc::out_of_range);
  CHECK(thrown_code([] { parse_composition("-1"); }) == errc::out_of_range);
  CHECK(composition_size({3, 1, 3, 2}) == 9);
}

TEST_CASE("the path codec matches the frozen examples") {
  CHECK(composition_to_path({3, 1, 3, 2}).text() == "UUUUDUDUDDDUDUDDUD");
  CHECK(composition_to_path({2, 1}).text() == "UUDUDD");
  CHECK(composition_to_path({1, 1}).text() == "UUDD");
  CHECK(composition_to_path({1}).text() == "UD");
  CHECK(composition_to_path({1, 1, 1, 1, 1}).text() == "UUUUUDDDDD");
  CHECK(composition_to_path({1, 2, 1}).text() == "UUUDDUDD");
  CHECK(composition_to_path({2, 1, 1}).text() == "UUUDUDDD");
  CHECK(composition_to_path({3, 1}).text() == "UUDUDUDD");

  CHECK(path_to_composition_general(P("UUUUDUDUDDDUDUDDUD")) == Composition{3, 1, 3, 2});
  CHECK(path_to_composition(P("UUDUDD")) == Composition{2, 1});

  CHECK(thrown_code([] { path_to_composition(P("UUUUDUDUDDDUDUDDUD")); }) == errc::not_primitive);
  CHECK(thrown_code([] { path_to_composition(P("UDUD")); }) == errc::not_primitive);
  CHECK(thrown_code([] { path_to_composition_general(P("")); }) == errc::out_of_range);
  CHECK(thrown_code([] { path_to_composition_general(P("UUDUUDDD")); }) == errc::contains_duu);
  CHECK(thrown_code([] { composition_to_path({}); }) == errc::out_of_range);
  CHECK(thrown_code([] { composition_to_path({2, 0}); }) == errc::out_of_range);
}

TEST_CASE("the codec is a bijection between compositions and DUU-free paths") {
  for (int n = 1; n <= 8; ++n) {
    for (const Composition& c : all_compositions(n)) {
      DyckPath p = composition_to_path(c);
      CHECK(p.size() == n);
      CHECK_FALSE(contains_duu(p));
      CHECK(path_to_composition_general(p) == c);
    }
    int64_t seen = 0;
    for_each_path(n, [&](const DyckPath& p) {
      if (contains_duu(p)) return;
      ++seen;
      CHECK(composition_to_path(path_to_composition_general(p)) == p);
    });
    CHECK(seen == int64_t{1} << (n - 1));
  }
}

TEST_CASE("composition forward matches the frozen examples") {
  CHECK(forward(Composition{4, 2, 1, 5, 2, 3}) == Composition{1, 1, 1, 1, 3, 6, 1, 3});
  CHECK(forward(Composition{2, 1}) == Composition{1, 1, 1});
  CHECK(forward(Composition{1, 1, 1}) == Composition{2, 1});
  CHECK(forward(Composition{1, 1, 1, 1, 1}) == Composition{2, 2, 1});
  CHECK(forward(Composition{1}) == Composition{1});
  CHECK(forward(Composition{5}) == Composition{5});
  CHECK(forward(Composition{}).empty());

  // the size-4 primitive orbit, in composition form
  CHECK(forward(Composition{3, 1}) == Composition{1, 1, 1, 1});
  CHECK(forward(Composition{1, 1, 1, 1}) == Composition{1, 2, 1});
  CHECK(forward(Composition{1, 2, 1}) == Composition{2, 1, 1});
  CHECK(forward(Composition{2, 1, 1}) == Composition{3, 1});
}

TEST_CASE("the positional scan agrees with pair peeling everywhere") {
  CHECK(forward_scan(Composition{4, 2, 1, 5, 2, 3}) == Composition{1, 1, 1, 1, 3, 6, 1, 3});
  for (int n = 1; n <= 10; ++n) {
    for (const Composition& c : all_compositions(n)) {
      CHECK(forward_scan(c) == forward(c));
    }
  }
}

TEST_CASE("composition forward is the path map seen through the codec") {
  for (int n = 1; n <= 9; ++n) {
    for (const Composition& c : all_compositions(n)) {
      DyckPath image = forward(composition_to_path(c));
      CHECK(path_to_composition_general(image) == forward(c));
    }
  }
}

TEST_CASE("primitive composition enumeration is lexicographic and complete") {
  CHECK(all_cn(1) == std::vector<Composition>{{1}});
  CHECK(all_cn(2) == std::vector<Composition>{{1, 1}});
  CHECK(all_cn(4) ==
        std::vector<Composition>{{1, 1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {3, 1}});
  for (int n = 2; n <= 12; ++n) {
    std::vector<Composition> cn = all_cn(n);
    CHECK(static_cast<int64_t>(cn.size()) == int64_t{1} << (n - 2));
    for (const Composition& c : cn) {
      CHECK(c.back() == 1);
      CHECK(composition_size(c) == n);
    }
  }
  CHECK(thrown_code([] { all_cn(0); }) == errc::out_of_range);
  CHECK(thrown_code([] { all_cn(15); }) == errc::cap_exceeded);
  CHECK_NOTHROW(all_cn(15, 20));
}

TEST_CASE("augmenting flips parity exactly under prepending") {
  CHECK(augment({2, 1}, AugmentOp::prepend_one) == Composition{1, 2, 1});
  CHECK(augment({2, 1}, AugmentOp::increment_first) == Composition{3, 1});
  CHECK(flipped(AugmentOp::prepend_one) == AugmentOp::increment_first);
  CHECK(flipped(AugmentOp::increment_first) == AugmentOp::prepend_one);
  CHECK(thrown_code([] { augment({}, AugmentOp::prepend_one); }) == errc::out_of_range);
  for (int n = 1; n <= 10; ++n) {
    for (const Composition& c : all_cn(n)) {
      CHECK(parity(augment(c, AugmentOp::prepend_one)) == 1 - parity(c));
      CHECK(parity(augment(c, AugmentOp::increment_first)) == parity(c));
    }
  }
}

TEST_CASE("augmenting commutes with forward up to an operator flip") {
  for (int n = 1; n <= 10; ++n) {
    for (const Composition& c : all_cn(n)) {
      for (AugmentOp op : {AugmentOp::prepend_one, AugmentOp::increment_first}) {
        Composition lhs = augment(forward(c), op);
        AugmentOp used = parity(c) == 1 ? op : flipped(op);
        CHECK(lhs == forward(augment(c, used)));
      }
    }
  }
}

TEST_CASE("bumping the size-3 orbit yields both halves of the size-4 orbit") {
  std::vector<Composition> orbit{{2, 1}, {1, 1, 1}};
  BumpResult first = bump_orbit(orbit, AugmentOp::increment_first);
  CHECK(first.sequence == std::vector<Composition>{{3, 1}, {1, 1, 1, 1}});
  CHECK(first.next == AugmentOp::prepend_one);

  BumpResult second = bump_orbit(orbit, first.next);
  CHECK(second.sequence == std::vector<Composition>{{1, 2, 1}, {2, 1, 1}});
  CHECK(second.next == AugmentOp::increment_first);

  std::vector<Composition> glued = first.sequence;
  glued.insert(glued.end(), second.sequence.begin(), second.sequence.end());
  CHECK_NOTHROW(bump_orbit(glued, AugmentOp::prepend_one));  // a closed orbit again
}

TEST_CASE("bump rejects sequences that are not closed orbits") {
  CHECK(thrown_code([] { bump_orbit({}, AugmentOp::prepend_one); }) == errc::not_an_orbit);
  CHECK(thrown_code([] { bump_orbit({{2, 1}}, AugmentOp::prepend_one); }) == errc::not_an_orbit);
  CHECK(thrown_code([] {
          bump_orbit({{2, 1}, {1, 1, 1}, {2, 1}}, AugmentOp::prepend_one);
        }) == errc::not_an_orbit);
  CHECK(thrown_code([] { parity_vector({{2, 1}, {2, 1}}); }) == errc::not_an_orbit);
  // a chain need not close to have a parity vector
  CHECK(format_bits(parity_vector({{3, 1}, {1, 1, 1, 1}, {1, 2, 1}})) == "001");
}

TEST_CASE("bit vector helpers") {
  CHECK(format_bits(partial_sum(BitVector::ones(5))) == "10101");
  CHECK(format_bits(partial_sum(BitVector{{1, 0, 0, 1}})) == "1110");
  CHECK(bv_add(BitVector::ones(4), BitVector::ones(4)) == BitVector::zeros(4));
  CHECK(thrown_code([] { bv_add(BitVector::ones(3), BitVector::ones(4)); }) ==
        errc::size_mismatch);
}

TEST_CASE("bumped orbits have the predicted parity vectors") {
  // frozen: the size-4 orbit bumped with prepending gives parities 1000
  std::vector<Composition> c4{{3, 1}, {1, 1, 1, 1}, {1, 2, 1}, {2, 1, 1}};
  BumpResult bumped = bump_orbit(c4, AugmentOp::prepend_one);
  CHECK(format_bits(parity_vector(bumped.sequence)) == "1000");
  CHECK(bumped.next == AugmentOp::prepend_one);

  for (int n = 2; n <= 9; ++n) {
    for (const std::vector<Composition>& orbit : cn_orbit_partition(n)) {
      BitVector p = parity_vector(orbit);
      BitVector s_p = partial_sum(p);
      BitVector s_e = partial_sum(BitVector::ones(p.size()));
      for (AugmentOp op : {AugmentOp::prepend_one, AugmentOp::increment_first}) {
        BitVector expected = bv_add(s_p, s_e);
        if (op == AugmentOp::increment_first) {
          expected = bv_add(expected, BitVector::ones(p.size()));
        }
        CHECK(parity_vector(bump_orbit(orbit, op).sequence) == expected);
      }
    }
  }
}

TEST_CASE("parity matrix entries and block row sums") {
  CHECK(pascal_mod2(3, 1) == 0);
  CHECK(pascal_mod2(0, 0) == 1);
  CHECK(pascal_mod2(5, 2) == 1);
  for (int i = 0; i <= 12; ++i) {
    for (int j = 0; i + j <= 12; ++j) {
      CHECK(Int(pascal_mod2(i, j)) == binomial(i + j, i) % 2);
    }
  }

  CHECK(pascal_block_row_sum(1, 0) == 0);
  CHECK(pascal_block_row_sum(1, 1) == 1);
  CHECK(pascal_block_row_sum(3, 6) == 0);
  for (int k = 0; k <= 6; ++k) {
    int64_t side = int64_t{1} << k;
    for (int64_t i = 0; i < side; ++i) {
      CHECK(pascal_block_row_sum(k, i) == (i == side - 1 ? 1 : 0));
    }
  }
  CHECK(thrown_code([] { pascal_block_row_sum(21, 0); }) == errc::cap_exceeded);
  CHECK(thrown_code([] { pascal_block_row_sum(-1, 0); }) == errc::out_of_range);
  CHECK(thrown_code([] { pascal_block_row_sum(2, 4); }) == errc::out_of_range);
  CHECK(thrown_code([] { pascal_mod2(-1, 0); }) == errc::out_of_range);
}
