#ifndef DYCKBIJ_COMPOSITION_HPP
#define DYCKBIJ_COMPOSITION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyckbij/path.hpp"

namespace dyckbij {

// Ordered sequence of positive integers.  C_n below denotes the compositions
// of n whose last entry is 1; they encode the primitive DUU-avoiding paths of
// size n and form the combinatorial shadow of the bijection.
using Composition = std::vector<int>;

void check_composition(const Composition& c);  // entries >= 1, nonempty
int composition_size(const Composition& c);    // sum of entries

Composition parse_composition(std::string_view text);  // "4,2,1,5,2,3"
std::string format_composition(const Composition& c);

// Encoding of a primitive DUU-avoiding path of height h: entry i counts the
// downsteps ending at height h-i.  The strict form requires primitivity
// (composition ends 1); the general form accepts any nonempty DUU-avoiding
// path and yields an arbitrary composition (last entry = number of returns).
Composition path_to_composition(const DyckPath& p);
Composition path_to_composition_general(const DyckPath& p);

// Inverse: U^h then, per entry, a downstep followed by entry-1 UD pairs.
DyckPath composition_to_path(const Composition& c);

// The bijection transported to compositions: forward(comp) equals
// path_to_composition(forward(composition_to_path(comp))) on C_n, and is
// defined on every composition.  Identity on single entries.
Composition forward(const Composition& c);

// Second, independent implementation: entries in even position counted from
// the end are replaced by entry-1 ones while their left neighbor gains 1 (an
// absent left neighbor acts as 0 and the gained 1 is prepended); the final
// entry never changes.  forward() and forward_scan() agree everywhere.
Composition forward_scan(const Composition& c);

// C_n in lexicographic entry order.  |C_n| = 2^{n-2} for n >= 2.
std::vector<Composition> all_cn(int n, int cap = kDefaultEnumerationCap);

// Orbit-transfer operators: PrependOne maps (c_1,..) to (1,c_1,..) and flips
// the length parity; IncrementFirst maps to (c_1+1,..) and keeps it.
enum class AugmentOp : int { prepend_one = 0, increment_first = 1 };

AugmentOp flipped(AugmentOp op) noexcept;
Composition augment(const Composition& c, AugmentOp op);
int parity(const Composition& c) noexcept;  // length mod 2

// Mod-2 vector with checked elementwise addition.
struct BitVector {
  std::vector<uint8_t> bits;

  static BitVector ones(int m);
  static BitVector zeros(int m);
  int size() const noexcept { return static_cast<int>(bits.size()); }
  friend bool operator==(const BitVector&, const BitVector&) = default;
};

BitVector bv_add(const BitVector& a, const BitVector& b);  // size_mismatch if lengths differ
BitVector partial_sum(const BitVector& v);                 // prefix XOR, same length
std::string format_bits(const BitVector& v);

// Lifts a forward-orbit of C_n to C_{n+1}: d_1 = A_1(c_1), d_{i+1} =
// forward(d_i); the operator row flips after even-length entries.  When
// next != A_1 the sequence is half of an orbit and the other half is the bump
// with the flipped start operator.
struct BumpResult {
  std::vector<Composition> sequence;
  AugmentOp next;  // A_{m+1}
};

BumpResult bump_orbit(const std::vector<Composition>& orbit, AugmentOp a1);

// Length parities of a forward-chain (consecutive elements must map to each
// other; closure is not required, so bumped half-orbits are accepted).
// The parity vector of bump_orbit(orbit, A) equals
//   partial_sum(parity_vector(orbit)) + partial_sum(ones) + A * ones  (mod 2).
BitVector parity_vector(const std::vector<Composition>& chain);

// Entry (i, j) of the mod-2 Pascal matrix: binom(i+j, i) mod 2, which is 1
// exactly when i and j have disjoint binary digits.
int pascal_mod2(int64_t i, int64_t j);

// Row sum of the leading 2^k x 2^k block, mod 2: 1 only in the last row.
int pascal_block_row_sum(int k, int64_t i);

}  // namespace dyckbij

#endif
