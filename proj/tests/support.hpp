#pragma once

// Shared fixtures and deterministic random generation for the test suites.
// Random values come from a fixed-seed mt19937_64 through plain modular
// arithmetic, so runs are byte-identical across platforms.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cnc/foliation.hpp"
#include "cnc/oracle.hpp"
#include "cnc/representation.hpp"
#include "cnc/space.hpp"

namespace testsupport {

using cnc::ConnectivitySpace;
using cnc::GroundSet;
using cnc::SetMap;
using cnc::Subset;

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t bound) {  // uniform-ish in [0, bound)
  return static_cast<std::size_t>(rng() % bound);
}

inline bool coin(Rng& rng) { return (rng() & 1u) != 0; }

inline GroundSet numbered_ground(std::size_t n, const std::string& prefix = "p") {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return GroundSet(std::move(labels));
}

inline Subset random_subset(Rng& rng, std::size_t n) {
  if (n == 0) return Subset();
  return Subset(rng() & Subset::full(n).bits());
}

inline Subset random_nonempty_subset(Rng& rng, std::size_t n) {
  Subset s = random_subset(rng, n);
  if (s.empty()) s = Subset::single(pick(rng, n));
  return s;
}

/// A random generator-backed space: up to `max_generators` random nonempty
/// generators, random integral flag.
inline ConnectivitySpace random_space(Rng& rng, std::size_t n, std::size_t max_generators = 4) {
  GroundSet ground = numbered_ground(n);
  std::vector<Subset> gens;
  if (n > 0) {
    std::size_t count = pick(rng, max_generators + 1);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_nonempty_subset(rng, n));
  }
  return ConnectivitySpace(std::move(ground), std::move(gens), coin(rng));
}

inline ConnectivitySpace random_integral_space(Rng& rng, std::size_t n,
                                               std::size_t max_generators = 4) {
  GroundSet ground = numbered_ground(n);
  std::vector<Subset> gens;
  if (n > 0) {
    std::size_t count = pick(rng, max_generators + 1);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_nonempty_subset(rng, n));
  }
  return ConnectivitySpace(std::move(ground), std::move(gens), true);
}

inline SetMap random_map(Rng& rng, const GroundSet& from, const GroundSet& to) {
  std::vector<std::size_t> images(from.size());
  for (auto& v : images) v = pick(rng, to.size());
  return SetMap(from, to, std::move(images));
}

inline SetMap random_permutation(Rng& rng, const GroundSet& g) {
  std::vector<std::size_t> images(g.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  for (std::size_t i = images.size(); i > 1; --i) std::swap(images[i - 1], images[pick(rng, i)]);
  return SetMap(g, g, std::move(images));
}

// Named fixtures used throughout the worked examples.

/// The Borromean space: three points, connected globally but not pairwise.
inline ConnectivitySpace borromean3() {
  return ConnectivitySpace(GroundSet({"1", "2", "3"}), {Subset::of({0, 1, 2})}, true);
}

/// The path space on {a,b,c}: generators {a,b} and {b,c}.
inline ConnectivitySpace path3() {
  return ConnectivitySpace(GroundSet({"a", "b", "c"}),
                           {Subset::of({0, 1}), Subset::of({1, 2})}, true);
}

/// Integral space with no connected pair: only the singletons.
inline ConnectivitySpace discrete_integral(std::size_t n) {
  return ConnectivitySpace(numbered_ground(n), {}, true);
}

/// Every subset connected.
inline ConnectivitySpace coarse(std::size_t n) {
  std::vector<Subset> gens;
  if (n > 0) gens.push_back(Subset::full(n));
  // The full set alone does not connect the pairs; take all pairs too.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(Subset::single(i) | Subset::single(j));
  return ConnectivitySpace(numbered_ground(n), std::move(gens), true);
}

/// Desintegrated: only the empty set is connected.
inline ConnectivitySpace desintegrated(std::size_t n) {
  return ConnectivitySpace(numbered_ground(n), {}, false);
}

/// A random foliation; the external structure joins the internal one with
/// extra generators, so the result is always regular.
inline cnc::foliation::Foliation random_regular_foliation(Rng& rng, std::size_t n) {
  auto internal = random_space(rng, n);
  auto extra = random_space(rng, n);
  return cnc::foliation::Foliation(internal, cnc::join(internal, extra));
}

/// A random foliation with independent structures (often not regular).
inline cnc::foliation::Foliation random_foliation(Rng& rng, std::size_t n) {
  return cnc::foliation::Foliation(random_space(rng, n), random_space(rng, n));
}

/// Every valid representation from x to y, enumerated over all image
/// tuples. Intended for tiny carriers.
inline std::vector<cnc::representation::Representation> all_representations(
    const ConnectivitySpace& x, const ConnectivitySpace& y) {
  std::vector<cnc::representation::Representation> out;
  const std::size_t nx = x.size();
  const std::uint64_t options = y.size() == 0 ? 0 : (std::uint64_t{1} << y.size()) - 1;
  if (nx == 0) {
    out.push_back(cnc::representation::Representation::validate(x, y, {}));
    return out;
  }
  if (options == 0) return out;  // no nonempty image available
  std::vector<std::uint64_t> choice(nx, 1);
  for (;;) {
    std::vector<Subset> images;
    images.reserve(nx);
    for (std::uint64_t c : choice) images.push_back(Subset(c));
    try {
      out.push_back(cnc::representation::Representation::validate(x, y, std::move(images)));
    } catch (const cnc::InvariantViolation&) {
    }
    std::size_t pos = nx;
    while (pos > 0) {
      --pos;
      if (++choice[pos] <= options) break;
      choice[pos] = 1;
      if (pos == 0) return out;
    }
  }
}

}  // namespace testsupport
