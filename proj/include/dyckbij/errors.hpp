#ifndef DYCKBIJ_ERRORS_HPP
#define DYCKBIJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyckbij {

// Failure categories; CLI maps these to process exit codes (input problems -> 2,
// cap violations -> 3).
enum class errc {
  bad_char,
  unbalanced,
  dips_below_ground,
  bad_pattern,
  cap_exceeded,
  out_of_range,
  not_an_upstep,
  not_primitive,
  contains_duu,
  no_duu,
  invalid_body,
  bot_with_unit_skeleton,
  invalid_forest,
  not_an_orbit,
  size_mismatch,
  sqrt_domain,
  non_returning,
  theorem_violated,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace dyckbij

#endif
