#include "dyckbij/composition.hpp"

#include <charconv>

#include "dyckbij/errors.hpp"

namespace dyckbij {

namespace {

void check_entries(const Composition& c) {
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) {
      fail(errc::out_of_range,
           "composition entry " + std::to_string(i) + " is " + std::to_string(c[i]) +
               "; entries must be >= 1");
    }
  }
}

void check_enumeration(int n, int cap) {
  if (n < 1) fail(errc::out_of_range, "size must be >= 1, got " + std::to_string(n));
  if (n > cap) {
    fail(errc::cap_exceeded, "size " + std::to_string(n) + " exceeds enumeration cap " +
                                 std::to_string(cap));
  }
}

}  // namespace

void check_composition(const Composition& c) {
  if (c.empty()) fail(errc::out_of_range, "composition must be nonempty");
  check_entries(c);
}

int composition_size(const Composition& c) {
  int total = 0;
  for (int e : c) total += e;
  return total;
}

Composition parse_composition(std::string_view text) {
  Composition out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                              : comma - pos);
    size_t lo = token.find_first_not_of(" \t");
    if (lo == std::string_view::npos) {
      fail(errc::bad_char, "empty entry in composition \"" + std::string(text) + "\"");
    }
    size_t hi = token.find_last_not_of(" \t");
    token = token.substr(lo, hi - lo + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(errc::bad_char, "bad composition entry \"" + std::string(token) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  check_composition(out);
  return out;
}

std::string format_composition(const Composition& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Composition path_to_composition_general(const DyckPath& p) {
  if (p.empty()) fail(errc::out_of_range, "the empty path has no composition");
  if (contains_duu(p)) {
    fail(errc::contains_duu, "path contains DUU and has no composition encoding");
  }
  const std::string& text = p.text();
  int h = 0;
  while (h < p.length() && text[static_cast<size_t>(h)] == 'U') ++h;
  Composition c(static_cast<size_t>(h), 0);
  int height = 0;
  for (char step : text) {
    if (step == 'U') {
      ++height;
    } else {
      --height;
      // downstep ends at `height`; entry i counts those ending at h - i
      ++c[static_cast<size_t>(h - 1 - height)];
    }
  }
  return c;
}

Composition path_to_composition(const DyckPath& p) {
  Composition c = path_to_composition_general(p);
  if (c.back() != 1) {
    fail(errc::not_primitive, "path returns to ground " + std::to_string(c.back()) +
                                  " times; the strict encoding needs a primitive path");
  }
  return c;
}

DyckPath composition_to_path(const Composition& c) {
  check_composition(c);
  std::string text(c.size(), 'U');
  for (int e : c) {
    text += 'D';
    for (int r = 1; r < e; ++r) text += "UD";
  }
  return unchecked_path(std::move(text));
}

// Peels pairs off an accumulator: with T covering the first entries, appending
// the pair (x, y) yields IncrementLast(T) ++ (x-1 ones) ++ (y), where
// IncrementLast on an empty accumulator produces (1).
Composition forward(const Composition& c) {
  check_entries(c);
  size_t r = c.size();
  Composition out;
  size_t i = 0;
  if (r % 2 == 1) out.push_back(c[i++]);
  for (; i < r; i += 2) {  // r - i is even from here on
    if (out.empty()) {
      out.push_back(1);
    } else {
      ++out.back();
    }
    out.insert(out.end(), static_cast<size_t>(c[i] - 1), 1);
    out.push_back(c[i + 1]);
  }
  return out;
}

Composition forward_scan(const Composition& c) {
  check_entries(c);
  int r = static_cast<int>(c.size());
  Composition out;
  for (int i = 0; i < r; ++i) {
    int pos = r - i;  // position counted from the end, last entry = 1
    if (pos % 2 == 0) {
      if (i == 0) out.push_back(1);  // the absent left neighbor gains the 1
      out.insert(out.end(), static_cast<size_t>(c[static_cast<size_t>(i)] - 1), 1);
    } else if (i == r - 1) {
      out.push_back(c[static_cast<size_t>(i)]);
    } else {
      out.push_back(c[static_cast<size_t>(i)] + 1);
    }
  }
  return out;
}

namespace {

void gen_cn(int remaining, Composition& prefix, std::vector<Composition>& out) {
  if (remaining == 1) {
    prefix.push_back(1);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = 1; e < remaining; ++e) {
    prefix.push_back(e);
    gen_cn(remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> all_cn(int n, int cap) {
  check_enumeration(n, cap);
  std::vector<Composition> out;
  Composition prefix;
  gen_cn(n, prefix, out);
  return out;
}

AugmentOp flipped(AugmentOp op) noexcept {
  return op == AugmentOp::prepend_one ? AugmentOp::increment_first : AugmentOp::prepend_one;
}

Composition augment(const Composition& c, AugmentOp op) {
  check_composition(c);
  Composition out = c;
  if (op == AugmentOp::prepend_one) {
    out.insert(out.begin(), 1);
  } else {
    ++out.front();
  }
  return out;
}

int parity(const Composition& c) noexcept { return static_cast<int>(c.size() % 2); }

BitVector BitVector::ones(int m) {
  return BitVector{std::vector<uint8_t>(static_cast<size_t>(m), 1)};
}

BitVector BitVector::zeros(int m) {
  return BitVector{std::vector<uint8_t>(static_cast<size_t>(m), 0)};
}

BitVector bv_add(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    fail(errc::size_mismatch, "bit vectors have sizes " + std::to_string(a.size()) + " and " +
                                  std::to_string(b.size()));
  }
  BitVector out = a;
  for (size_t i = 0; i < out.bits.size(); ++i) out.bits[i] ^= b.bits[i];
  return out;
}

BitVector partial_sum(const BitVector& v) {
  BitVector out = v;
  for (size_t i = 1; i < out.bits.size(); ++i) out.bits[i] ^= out.bits[i - 1];
  return out;
}

std::string format_bits(const BitVector& v) {
  std::string out;
  out.reserve(v.bits.size());
  for (uint8_t b : v.bits) out += b ? '1' : '0';
  return out;
}

namespace {

void check_chain(const std::vector<Composition>& chain, bool closed) {
  if (chain.empty()) fail(errc::not_an_orbit, "empty sequence");
  for (const Composition& c : chain) check_composition(c);
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (forward(chain[i]) != chain[i + 1]) {
      fail(errc::not_an_orbit, "entry " + std::to_string(i + 1) +
                                   " is not the image of entry " + std::to_string(i));
    }
  }
  if (closed && forward(chain.back()) != chain.front()) {
    fail(errc::not_an_orbit, "the last entry does not map back to the first");
  }
}

}  // namespace

BumpResult bump_orbit(const std::vector<Composition>& orbit, AugmentOp a1) {
  check_chain(orbit, /*closed=*/true);
  BumpResult result;
  result.sequence.reserve(orbit.size());
  AugmentOp op = a1;
  for (const Composition& c : orbit) {
    result.sequence.push_back(augment(c, op));
    if (parity(c) == 0) op = flipped(op);
  }
  result.next = op;
  return result;
}

BitVector parity_vector(const std::vector<Composition>& chain) {
  check_chain(chain, /*closed=*/false);
  BitVector out = BitVector::zeros(static_cast<int>(chain.size()));
  for (size_t i = 0; i < chain.size(); ++i) {
    out.bits[i] = static_cast<uint8_t>(parity(chain[i]));
  }
  return out;
}

int pascal_mod2(int64_t i, int64_t j) {
  if (i < 0 || j < 0) fail(errc::out_of_range, "matrix indices must be >= 0");
  return (i & j) == 0 ? 1 : 0;
}

int pascal_block_row_sum(int k, int64_t i) {
  if (k < 0 || k > 20) {
    fail(k < 0 ? errc::out_of_range : errc::cap_exceeded,
         "block exponent must lie in [0, 20], got " + std::to_string(k));
  }
  int64_t side = int64_t{1} << k;
  if (i < 0 || i >= side) {
    fail(errc::out_of_range, "row " + std::to_string(i) + " is outside the " +
                                 std::to_string(side) + "-row block");
  }
  int acc = 0;
  for (int64_t j = 0; j < side; ++j) acc ^= pascal_mod2(i, j);
  return acc;
}

}  // namespace dyckbij
