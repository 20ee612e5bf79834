#ifndef DYCKBIJ_ORBIT_HPP
#define DYCKBIJ_ORBIT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "dyckbij/composition.hpp"
#include "dyckbij/path.hpp"

namespace dyckbij {

enum class Universe { all, primitive, primitive_duu_avoiding };

// Cycle of p under forward(), starting at p.  Guarded against runaway
// iteration (non_returning after 2^20 steps; never reached in practice).
std::vector<DyckPath> orbit_of(const DyckPath& p);
std::vector<Composition> orbit_of(const Composition& c);

// All orbits of the chosen universe of size-n paths.  Each orbit starts at
// its lexicographically least element; orbits are ordered by those
// representatives.
std::vector<std::vector<DyckPath>> orbit_partition(int n, Universe universe,
                                                   int cap = kDefaultEnumerationCap);

// Orbits of C_n under the composition form, least representative first.
std::vector<std::vector<Composition>> cn_orbit_partition(int n, int cap = kDefaultEnumerationCap);

// Histogram orbit length -> number of paths of size n in orbits of that
// length (universe = all paths).
std::map<int64_t, int64_t> orbit_length_histogram(int n, int cap = kDefaultEnumerationCap);

// Checks that every orbit of C_n has the same length 2^power and the same
// parity (sum of element lengths mod 2), and that both match the closed
// schedule: power = bits(n-2) for n >= 2 (0 at n=1), parity = 1 exactly for
// n = 1 and n = 2^k + 1 with k >= 1.  Any violation throws theorem_violated
// with a counterexample; the report is returned on success.
struct Theorem6Report {
  int n = 0;
  int64_t orbit_count = 0;
  int64_t orbit_length = 0;
  int power = 0;
  int parity = 0;
};

Theorem6Report verify_theorem6(int n, int cap = kDefaultEnumerationCap);

// Same uniform-power check over the primitive DUU-avoiding paths themselves
// (n >= 2); returns the common power.  Throws theorem_violated on violation.
int verify_uniform_primitive_duu_orbits(int n, int cap = kDefaultEnumerationCap);

// All size-n paths fixed by forward(), lexicographic order.
std::vector<DyckPath> fixed_points(int n, int cap = kDefaultEnumerationCap);

std::vector<DyckPath> universe_paths(int n, Universe universe, int cap = kDefaultEnumerationCap);

}  // namespace dyckbij

#endif
