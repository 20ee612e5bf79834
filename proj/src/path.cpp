#include "dyckbij/path.hpp"

#include <algorithm>

namespace dyckbij {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::bad_char: return "bad character";
    case errc::unbalanced: return "unbalanced";
    case errc::dips_below_ground: return "dips below ground";
    case errc::bad_pattern: return "bad pattern";
    case errc::cap_exceeded: return "cap exceeded";
    case errc::out_of_range: return "out of range";
    case errc::not_an_upstep: return "not an upstep";
    case errc::not_primitive: return "not primitive";
    case errc::contains_duu: return "contains DUU";
    case errc::no_duu: return "no DUU";
    case errc::invalid_body: return "invalid body";
    case errc::bot_with_unit_skeleton: return "bot with unit skeleton";
    case errc::invalid_forest: return "invalid forest";
    case errc::not_an_orbit: return "not an orbit";
    case errc::size_mismatch: return "size mismatch";
    case errc::sqrt_domain: return "sqrt domain";
    case errc::non_returning: return "non returning";
    case errc::theorem_violated: return "theorem violated";
  }
  return "unknown";
}

DyckPath unchecked_path(std::string&& text) { return DyckPath(std::move(text)); }

DyckPath DyckPath::parse(std::string_view text) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'U' && text[i] != 'D') {
      fail(errc::bad_char, "step " + std::to_string(i) + " is '" + std::string(1, text[i]) +
                               "', expected 'U' or 'D'");
    }
  }
  int h = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    h += text[i] == 'U' ? 1 : -1;
    if (h < 0) {
      fail(errc::dips_below_ground, "height -1 after step " + std::to_string(i));
    }
  }
  if (h != 0) {
    fail(errc::unbalanced, std::to_string(h) + " more U than D");
  }
  return DyckPath(std::string(text));
}

bool lex_less(const DyckPath& a, const DyckPath& b) noexcept {
  const std::string& s = a.text();
  const std::string& t = b.text();
  size_t m = std::min(s.size(), t.size());
  for (size_t i = 0; i < m; ++i) {
    if (s[i] != t[i]) return s[i] == 'U';  // U before D
  }
  return s.size() < t.size();
}

std::vector<int> heights(const DyckPath& p) {
  std::vector<int> h(static_cast<size_t>(p.length()) + 1, 0);
  for (int i = 0; i < p.length(); ++i) {
    h[static_cast<size_t>(i) + 1] = h[static_cast<size_t>(i)] + (p[i] == 'U' ? 1 : -1);
  }
  return h;
}

bool is_primitive(const DyckPath& p) noexcept {
  if (p.empty()) return false;
  int h = 0;
  for (int i = 0; i < p.length() - 1; ++i) {
    h += p[i] == 'U' ? 1 : -1;
    if (h == 0) return false;
  }
  return true;
}

std::vector<DyckPath> components(const DyckPath& p) {
  std::vector<DyckPath> out;
  int h = 0;
  int start = 0;
  for (int i = 0; i < p.length(); ++i) {
    h += p[i] == 'U' ? 1 : -1;
    if (h == 0) {
      out.push_back(unchecked_path(p.text().substr(static_cast<size_t>(start),
                                                   static_cast<size_t>(i - start + 1))));
      start = i + 1;
    }
  }
  return out;
}

DyckPath concat(const std::vector<DyckPath>& parts) {
  std::string text;
  for (const DyckPath& part : parts) text += part.text();
  return unchecked_path(std::move(text));
}

int match_downstep(const DyckPath& p, int i) {
  if (i < 0 || i >= p.length()) {
    fail(errc::out_of_range, "index " + std::to_string(i) + " in a path of " +
                                 std::to_string(p.length()) + " steps");
  }
  if (p[i] != 'U') fail(errc::not_an_upstep, "step " + std::to_string(i) + " is D");
  int h = 0;
  for (int j = i; j < p.length(); ++j) {
    h += p[j] == 'U' ? 1 : -1;
    if (h == 0) return j;
  }
  // Unreachable on a valid path: every upstep closes.
  fail(errc::unbalanced, "upstep " + std::to_string(i) + " never closes");
}

namespace {

void check_cap(int n, int cap) {
  if (n < 0) fail(errc::out_of_range, "negative size " + std::to_string(n));
  if (n > cap) {
    fail(errc::cap_exceeded,
         "size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

void gen_paths(std::string& buf, int ups, int downs, int n,
               const std::function<void(const DyckPath&)>& fn) {
  if (ups == n && downs == n) {
    DyckPath p = unchecked_path(std::string(buf));
    fn(p);
    return;
  }
  if (ups < n) {
    buf.push_back('U');
    gen_paths(buf, ups + 1, downs, n, fn);
    buf.pop_back();
  }
  if (downs < ups) {
    buf.push_back('D');
    gen_paths(buf, ups, downs + 1, n, fn);
    buf.pop_back();
  }
}

}  // namespace

void for_each_path(int n, const std::function<void(const DyckPath&)>& fn, int cap) {
  check_cap(n, cap);
  std::string buf;
  buf.reserve(static_cast<size_t>(2 * n));
  gen_paths(buf, 0, 0, n, fn);
}

void for_each_primitive(int n, const std::function<void(const DyckPath&)>& fn, int cap) {
  check_cap(n, cap);
  if (n < 1) fail(errc::out_of_range, "primitive paths have size >= 1");
  for_each_path(n - 1,
                [&](const DyckPath& inner) {
                  fn(unchecked_path("U" + inner.text() + "D"));
                },
                cap);
}

std::vector<DyckPath> enumerate_paths(int n, int cap) {
  std::vector<DyckPath> out;
  for_each_path(n, [&](const DyckPath& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<DyckPath> enumerate_primitive(int n, int cap) {
  std::vector<DyckPath> out;
  for_each_primitive(n, [&](const DyckPath& p) { out.push_back(p); }, cap);
  return out;
}

PathPattern parse_pattern(std::string_view text) {
  PathPattern pat;
  bool seen_plus = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '+') {
      if (seen_plus) fail(errc::bad_pattern, "more than one '+' wildcard");
      seen_plus = true;
      continue;
    }
    if (ch != 'U' && ch != 'D') {
      fail(errc::bad_char, "pattern atom " + std::to_string(i) + " is '" +
                               std::string(1, ch) + "', expected 'U', 'D' or '+'");
    }
    (seen_plus ? pat.suffix : pat.prefix).push_back(ch);
  }
  pat.has_wildcard = seen_plus;
  if (pat.prefix.empty() && pat.suffix.empty()) {
    fail(errc::bad_pattern, "pattern has no concrete atoms");
  }
  return pat;
}

namespace {

bool matches_at(const std::string& text, size_t pos, const std::string& block) {
  if (pos + block.size() > text.size()) return false;
  return text.compare(pos, block.size(), block) == 0;
}

// Window [pos, pos+len) is a nonempty balanced nonnegative step sequence.
bool dyck_window(const std::string& text, size_t pos, size_t len) {
  if (len == 0 || pos + len > text.size()) return false;
  int h = 0;
  for (size_t i = pos; i < pos + len; ++i) {
    h += text[i] == 'U' ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

}  // namespace

int64_t count_pattern(const DyckPath& p, const PathPattern& pattern) {
  const std::string& text = p.text();
  int64_t count = 0;
  if (!pattern.has_wildcard) {
    const std::string& block = pattern.prefix;
    if (block.empty()) return 0;
    for (size_t s = 0; s + block.size() <= text.size(); ++s) {
      if (matches_at(text, s, block)) ++count;
    }
    return count;
  }
  // Anchor at the concrete atoms; for each anchor admit at most one gap.  With
  // an empty prefix the suffix position is the anchor instead.
  if (!pattern.prefix.empty()) {
    for (size_t s = 0; s + pattern.prefix.size() <= text.size(); ++s) {
      if (!matches_at(text, s, pattern.prefix)) continue;
      size_t gap_at = s + pattern.prefix.size();
      for (size_t g = 2; gap_at + g + pattern.suffix.size() <= text.size(); g += 2) {
        if (!dyck_window(text, gap_at, g)) continue;
        if (matches_at(text, gap_at + g, pattern.suffix)) {
          ++count;
          break;
        }
      }
    }
    return count;
  }
  for (size_t t = 0; t + pattern.suffix.size() <= text.size(); ++t) {
    if (!matches_at(text, t, pattern.suffix)) continue;
    for (size_t g = 2; g <= t; g += 2) {
      if (dyck_window(text, t - g, g)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

int64_t count_pattern(const DyckPath& p, std::string_view pattern) {
  return count_pattern(p, parse_pattern(pattern));
}

bool contains_duu(const DyckPath& p) {
  const std::string& text = p.text();
  return text.find("DUU") != std::string::npos;
}

bool ends_with(const DyckPath& p, std::string_view suffix) {
  for (size_t i = 0; i < suffix.size(); ++i) {
    if (suffix[i] != 'U' && suffix[i] != 'D') {
      fail(errc::bad_char, "suffix atom " + std::to_string(i) + " is '" +
                               std::string(1, suffix[i]) + "', expected 'U' or 'D'");
    }
  }
  const std::string& text = p.text();
  if (suffix.size() > text.size()) return false;
  return text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace dyckbij
