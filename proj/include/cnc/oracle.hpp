#pragma once

#include <cstddef>
#include <vector>

#include "cnc/space.hpp"

namespace cnc::oracle {

/// Definition-level reference implementations. Everything here works on an
/// explicit kappa and is meant for cross-checking the fast paths and for
/// generating expected values; size guards are hard errors.

/// A structure in extenso: the full family of connected sets.
struct MaterializedStructure {
  GroundSet ground;
  std::vector<Subset> kappa;  // canonical order, always contains the empty set

  bool contains(Subset a) const;
  bool operator==(const MaterializedStructure&) const = default;
};

/// Least family containing the empty set, the generators and (when
/// integral) all singletons, closed under union of two intersecting
/// members. Fixpoint iteration until no new set appears; n <= 16.
MaterializedStructure closure(const GroundSet& ground, const std::vector<Subset>& generators,
                              bool integral);

/// Membership in closure(...); ground truth for membership on spaces.
bool closure_membership(const GroundSet& ground, const std::vector<Subset>& generators,
                        bool integral, Subset a);

/// The space carrying a materialized structure: generator-backed with the
/// whole kappa as generator family and the semantically correct integral
/// flag.
ConnectivitySpace as_space(const MaterializedStructure& m);

/// All total maps |x| -> |y| that are connective morphisms, in lexicographic
/// order of their image tuples. Guarded by |y|^|x| <= 10^6.
std::vector<SetMap> enumerate_morphisms(const ConnectivitySpace& x, const ConnectivitySpace& y);

/// All distinct connectivity structures on the ground set, enumerated as
/// closures of every generator family and deduplicated. With integral_only,
/// only integral structures ([.]_1 closures). n <= 4.
std::vector<MaterializedStructure> enumerate_structures(const GroundSet& ground,
                                                        bool integral_only);

/// Nonempty connected sets k with k not in the structure generated by the
/// other connected sets ([kappa \ {k}]_0). n <= 10.
std::vector<Subset> irreducibles_by_definition(const ConnectivitySpace& space);

/// Connectivity order computed entirely from the materialized kappa:
/// longest inclusion chain among the definitional irreducibles, minus one,
/// clamped at zero. n <= 10.
std::size_t order_by_definition(const ConnectivitySpace& space);

}  // namespace cnc::oracle
