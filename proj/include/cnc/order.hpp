#pragma once

#include <cstddef>
#include <vector>

#include "cnc/foliation.hpp"
#include "cnc/space.hpp"

namespace cnc::order {

/// The inclusion poset of the irreducible connected parts.
struct GenericGraph {
  std::vector<Subset> elements;  // canonical order

  bool operator==(const GenericGraph&) const = default;
};

/// The irreducible connected parts: nonempty connected sets that the other
/// connected sets do not regenerate. A set is reducible exactly when the
/// overlap blocks of its proper connected subsets rebuild it. n <= 16.
GenericGraph irreducibles(const ConnectivitySpace& space);

/// The number of elements of a longest chain, by dynamic programming over
/// the inclusion DAG in cardinality order.
std::size_t poset_height(const GenericGraph& g);

/// The connectivity order: longest chain length in the generic graph minus
/// one, clamped at zero (the finite reading of the double predecessor of
/// the poset height ordinal). n <= 16.
std::size_t connectivity_order(const ConnectivitySpace& space);

/// The connectivity order of the induced leaf space. Leaf count <= 16.
std::size_t foliation_order(const foliation::Foliation& z);

}  // namespace cnc::order
