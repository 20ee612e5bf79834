#ifndef DYCKBIJ_TEST_HELPERS_HPP
#define DYCKBIJ_TEST_HELPERS_HPP

#include <functional>

#include "doctest.h"
#include "dyckbij/errors.hpp"
#include "dyckbij/path.hpp"

namespace dyckbij::testing {

// Runs fn, which must throw a dyckbij::error, and returns its code.
inline errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a dyckbij::error");
  return errc::bad_char;
}

inline DyckPath P(std::string_view text) { return DyckPath::parse(text); }

}  // namespace dyckbij::testing

#endif
