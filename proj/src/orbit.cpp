#include "dyckbij/orbit.hpp"

#include <string>
#include <unordered_set>

#include "dyckbij/bijection.hpp"
#include "dyckbij/errors.hpp"

namespace dyckbij {

namespace {

constexpr int64_t kOrbitGuard = int64_t{1} << 20;

int bits_of(int x) {
  int b = 0;
  while (x > 0) {
    ++b;
    x >>= 1;
  }
  return b;
}

int expected_power(int n) { return n < 2 ? 0 : bits_of(n - 2); }

// 1 exactly for n = 1 and n = 2^k + 1, k >= 1.
int expected_parity(int n) {
  if (n == 1) return 1;
  int m = n - 1;
  return (m >= 2 && (m & (m - 1)) == 0) ? 1 : 0;
}

}  // namespace

std::vector<DyckPath> orbit_of(const DyckPath& p) {
  std::vector<DyckPath> orbit{p};
  for (DyckPath q = forward(p); !(q == p); q = forward(q)) {
    orbit.push_back(q);
    if (static_cast<int64_t>(orbit.size()) > kOrbitGuard) {
      fail(errc::non_returning, "no return to the start within " + std::to_string(kOrbitGuard) +
                                    " steps");
    }
  }
  return orbit;
}

std::vector<Composition> orbit_of(const Composition& c) {
  std::vector<Composition> orbit{c};
  for (Composition d = forward(c); d != c; d = forward(d)) {
    orbit.push_back(d);
    if (static_cast<int64_t>(orbit.size()) > kOrbitGuard) {
      fail(errc::non_returning, "no return to the start within " + std::to_string(kOrbitGuard) +
                                    " steps");
    }
  }
  return orbit;
}

std::vector<DyckPath> universe_paths(int n, Universe universe, int cap) {
  if (universe == Universe::all) return enumerate_paths(n, cap);
  std::vector<DyckPath> out = enumerate_primitive(n, cap);
  if (universe == Universe::primitive_duu_avoiding) {
    std::erase_if(out, [](const DyckPath& p) { return contains_duu(p); });
  }
  return out;
}

// The universes are closed under forward(), and the paths arrive in
// lexicographic order, so the first unseen path of each orbit is its least
// element and orbits come out sorted by representative.
std::vector<std::vector<DyckPath>> orbit_partition(int n, Universe universe, int cap) {
  std::vector<std::vector<DyckPath>> orbits;
  std::unordered_set<std::string> seen;
  for (const DyckPath& p : universe_paths(n, universe, cap)) {
    if (seen.contains(p.text())) continue;
    std::vector<DyckPath> orbit = orbit_of(p);
    for (const DyckPath& q : orbit) seen.insert(q.text());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::vector<Composition>> cn_orbit_partition(int n, int cap) {
  std::vector<std::vector<Composition>> orbits;
  std::unordered_set<std::string> seen;
  for (const Composition& c : all_cn(n, cap)) {
    if (seen.contains(format_composition(c))) continue;
    std::vector<Composition> orbit = orbit_of(c);
    for (const Composition& d : orbit) seen.insert(format_composition(d));
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::map<int64_t, int64_t> orbit_length_histogram(int n, int cap) {
  std::map<int64_t, int64_t> hist;
  for (const auto& orbit : orbit_partition(n, Universe::all, cap)) {
    hist[static_cast<int64_t>(orbit.size())] += static_cast<int64_t>(orbit.size());
  }
  return hist;
}

Theorem6Report verify_theorem6(int n, int cap) {
  if (n < 1) fail(errc::out_of_range, "size must be >= 1, got " + std::to_string(n));
  Theorem6Report report;
  report.n = n;
  report.power = expected_power(n);
  report.parity = expected_parity(n);
  report.orbit_length = int64_t{1} << report.power;
  for (const auto& orbit : cn_orbit_partition(n, cap)) {
    ++report.orbit_count;
    if (static_cast<int64_t>(orbit.size()) != report.orbit_length) {
      fail(errc::theorem_violated,
           "orbit of " + format_composition(orbit.front()) + " has length " +
               std::to_string(orbit.size()) + ", expected " + std::to_string(report.orbit_length));
    }
    int par = 0;
    for (const Composition& c : orbit) par ^= parity(c);
    if (par != report.parity) {
      fail(errc::theorem_violated, "orbit of " + format_composition(orbit.front()) +
                                       " has parity " + std::to_string(par) + ", expected " +
                                       std::to_string(report.parity));
    }
  }
  return report;
}

int verify_uniform_primitive_duu_orbits(int n, int cap) {
  if (n < 2) fail(errc::out_of_range, "size must be >= 2, got " + std::to_string(n));
  int power = expected_power(n);
  int64_t want = int64_t{1} << power;
  for (const auto& orbit : orbit_partition(n, Universe::primitive_duu_avoiding, cap)) {
    if (static_cast<int64_t>(orbit.size()) != want) {
      fail(errc::theorem_violated, "orbit of " + orbit.front().text() + " has length " +
                                       std::to_string(orbit.size()) + ", expected " +
                                       std::to_string(want));
    }
  }
  return power;
}

std::vector<DyckPath> fixed_points(int n, int cap) {
  std::vector<DyckPath> out;
  for_each_path(
      n, [&](const DyckPath& p) { if (forward(p) == p) out.push_back(p); }, cap);
  return out;
}

}  // namespace dyckbij
