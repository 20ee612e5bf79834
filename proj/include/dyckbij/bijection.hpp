#ifndef DYCKBIJ_BIJECTION_HPP
#define DYCKBIJ_BIJECTION_HPP

#include "dyckbij/path.hpp"

namespace dyckbij {

// The size-preserving bijection at the heart of this library.  It acts
// componentwise; on a primitive path it peels the trailing run of UD pairs
// inside the outer arch and rebuilds, which sends U^3D^3 to U^2DUD^2 and
// leaves every path of size < 3 fixed.  Iterating forward() partitions paths
// into orbits whose lengths are powers of two (see orbit.hpp).
//
// Both directions run on an explicit work stack: paths of size 10^4 and
// beyond transform without recursion-depth limits, in linear time.
DyckPath forward(const DyckPath& p);
DyckPath inverse(const DyckPath& p);

// forward/inverse iterated k >= 0 times.
DyckPath forward_iter(const DyckPath& p, long k);
DyckPath inverse_iter(const DyckPath& p, long k);

}  // namespace dyckbij

#endif
