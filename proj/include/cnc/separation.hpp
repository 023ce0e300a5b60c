#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cnc/space.hpp"

namespace cnc::separation {

/// An unordered pair {S,T} of nonempty disjoint subsets. Normalized so the
/// canonically lesser side comes first.
struct SeparatingPair {
  Subset s;
  Subset t;

  bool operator==(const SeparatingPair&) const = default;
};

/// A family of separating pairs over one ground set. The sets it fails to
/// separate form an integral connectivity structure.
class SeparationDevice {
 public:
  SeparationDevice(GroundSet ground, std::vector<SeparatingPair> pairs);

  const GroundSet& ground() const { return ground_; }
  const std::vector<SeparatingPair>& pairs() const { return pairs_; }

 private:
  GroundSet ground_;
  std::vector<SeparatingPair> pairs_;
};

/// True iff some pair covers `a` while both sides meet it.
bool separated(const SeparationDevice& device, Subset a);

/// The integral space whose connected sets are exactly the unseparated
/// sets. Membership is delegated; materialize explicitly if needed.
ConnectivitySpace structure_of_device(const SeparationDevice& device);

/// The maximal device defining an integral structure: all pairs {A,B} of
/// disjoint nonempty subsets such that every component of A∪B lies inside A
/// or inside B. Round-trips through structure_of_device. Requires an
/// integral space; n <= 16.
SeparationDevice device_of_structure(const ConnectivitySpace& space);

/// A permutation group given by bijective generators of one ground set.
class PermutationGroup {
 public:
  PermutationGroup(GroundSet ground, std::vector<SetMap> generators);

  const GroundSet& ground() const { return ground_; }
  const std::vector<SetMap>& generators() const { return generators_; }

 private:
  GroundSet ground_;
  std::vector<SetMap> generators_;
};

/// Every group element, by breadth-first closure of the generators under
/// composition. Hard cap of 10^5 elements.
std::vector<SetMap> elements(const PermutationGroup& group);

/// The device of all pairs {phi(S), phi(T)} for phi in the group. A set is
/// separated by the orbit device iff some group element moves it onto a set
/// separated by the original device.
SeparationDevice orbit_device(const PermutationGroup& group, const SeparationDevice& device);

/// A finite topology: a family of opens containing the empty set and the
/// carrier, closed under pairwise union and intersection. Validated at
/// construction.
class FiniteTopology {
 public:
  FiniteTopology(GroundSet ground, std::vector<Subset> opens);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& opens() const { return opens_; }

 private:
  GroundSet ground_;
  std::vector<Subset> opens_;
};

/// Closes a family of subsets under union and intersection (adding the
/// empty set and the carrier) and returns the resulting topology. Explicit
/// helper: parsing never silently completes an unclosed family.
FiniteTopology close_topology(const GroundSet& ground, std::vector<Subset> opens);

/// Classical topological connectivity, computed on traces: k is connected
/// iff no two opens cut k into two disjoint nonempty relatively-open parts.
ConnectivitySpace u_t(const FiniteTopology& top);

/// The separation-device structure of the topology: the device of all
/// disjoint pairs of nonempty opens. Coarser than (or equal to) u_t.
ConnectivitySpace v_t(const FiniteTopology& top);

}  // namespace cnc::separation
