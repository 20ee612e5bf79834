#ifndef DYCKBIJ_PATH_HPP
#define DYCKBIJ_PATH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dyckbij/errors.hpp"

namespace dyckbij {

// Enumeration over path sizes is refused above this bound unless the caller
// passes an explicit larger cap.
inline constexpr int kDefaultEnumerationCap = 14;

// A balanced U/D step sequence that never dips below its start.  The text is
// validated on construction, so a DyckPath value is always well formed.
class DyckPath {
 public:
  DyckPath() = default;

  // Validates and wraps a step string.  Character check runs first over the
  // whole input, then the prefix-height scan, then the balance check, so
  // "UDD U" reports the bad character rather than the dip before it.
  static DyckPath parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  int length() const noexcept { return static_cast<int>(text_.size()); }
  int size() const noexcept { return length() / 2; }  // semilength
  bool empty() const noexcept { return text_.empty(); }
  char operator[](int i) const { return text_[static_cast<size_t>(i)]; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  explicit DyckPath(std::string text) : text_(std::move(text)) {}
  std::string text_;

  friend DyckPath unchecked_path(std::string&&);
};

// Internal constructor for step strings already known to be valid.
DyckPath unchecked_path(std::string&& text);

// Step order U < D, then by the step text; used everywhere a deterministic
// path order is needed.  (Plain string compare would order D before U.)
bool lex_less(const DyckPath& a, const DyckPath& b) noexcept;

// Vertex heights, length()+1 entries starting and ending at 0.
std::vector<int> heights(const DyckPath& p);

bool is_primitive(const DyckPath& p) noexcept;

// Maximal split into primitive factors, in path order.
std::vector<DyckPath> components(const DyckPath& p);

DyckPath concat(const std::vector<DyckPath>& parts);

// Index of the downstep closing the shortest balanced window that starts at
// upstep i.
int match_downstep(const DyckPath& p, int i);

// All Dyck paths of semilength n in lexicographic order (U < D).  n above the
// cap is refused; pass a larger cap explicitly to go beyond the default.
std::vector<DyckPath> enumerate_paths(int n, int cap = kDefaultEnumerationCap);

// All primitive Dyck paths of semilength n (n >= 1), lexicographic order.
std::vector<DyckPath> enumerate_primitive(int n, int cap = kDefaultEnumerationCap);

// Streaming variants; the callback sees each path in lexicographic order.
void for_each_path(int n, const std::function<void(const DyckPath&)>& fn,
                   int cap = kDefaultEnumerationCap);
void for_each_primitive(int n, const std::function<void(const DyckPath&)>& fn,
                        int cap = kDefaultEnumerationCap);

// A factor pattern: concrete steps with at most one '+' wildcard standing for
// a nonempty Dyck path.
struct PathPattern {
  std::string prefix;          // concrete steps before the wildcard
  bool has_wildcard = false;
  std::string suffix;          // concrete steps after the wildcard; empty unless has_wildcard
};

// Accepts strings over {U, D, +} with at most one '+'.
PathPattern parse_pattern(std::string_view text);

// Number of occurrences of the pattern as a factor of p, counted with overlap.
// A wildcard occurrence is anchored at the position of the concrete atoms; for
// a fixed anchor the wildcard matches if some nonempty balanced nonnegative
// window completes the factor (counted once even if several lengths would).
int64_t count_pattern(const DyckPath& p, const PathPattern& pattern);
int64_t count_pattern(const DyckPath& p, std::string_view pattern);

bool contains_duu(const DyckPath& p);

// True when suffix (a concrete U/D string) is a suffix of p's step text.  The
// empty suffix matches every path.
bool ends_with(const DyckPath& p, std::string_view suffix);

}  // namespace dyckbij

#endif
