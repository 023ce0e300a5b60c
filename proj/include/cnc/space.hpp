#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cnc/errors.hpp"
#include "cnc/ground.hpp"
#include "cnc/subset.hpp"

namespace cnc {

/// Explicit materialization of a structure (2^n scan) is only allowed up to
/// this many points.
inline constexpr std::size_t kMaterializeLimit = 16;

/// Verdict of comparing two structures over one ground set. Finer means
/// every connected set of the first is connected in the second.
enum class StructureRelation { Equal, Finer, Coarser, Incomparable };

const char* to_string(StructureRelation r);

/// A total map between two ground sets, one target index per source point.
class SetMap {
 public:
  SetMap(GroundSet source, GroundSet target, std::vector<std::size_t> images);

  static SetMap identity(const GroundSet& g);

  const GroundSet& source() const { return source_; }
  const GroundSet& target() const { return target_; }
  const std::vector<std::size_t>& images() const { return images_; }
  std::size_t operator()(std::size_t i) const { return images_[i]; }

  /// Direct image f^P of a subset of the source.
  Subset image_of(Subset a) const;
  /// Preimage of a subset of the target.
  Subset preimage_of(Subset b) const;

  bool is_permutation() const;

  bool operator==(const SetMap&) const = default;
 private:
  GroundSet source_;
  GroundSet target_;
  std::vector<std::size_t> images_;
};

/// g after f.
SetMap compose(const SetMap& g, const SetMap& f);

/// A connectivity structure on a ground set, given either by a family of
/// generators or by a delegated membership predicate. The connected sets of
/// the space are exactly what membership() answers; kappa is never
/// materialized unless explicitly asked (and n is small).
///
/// Conventions: the empty set is connected in every structure; a singleton
/// is connected iff the integral flag says so or a singleton generator
/// contains it.
class ConnectivitySpace {
 public:
  using Membership = std::function<bool(Subset)>;

  /// Generator-backed space. Generators are deduplicated, the empty set is
  /// dropped, and the family is stored in canonical order.
  ConnectivitySpace(GroundSet ground, std::vector<Subset> generators, bool integral);

  /// Predicate-backed space. The predicate must define a genuine
  /// connectivity structure (contain the empty set and be closed under
  /// unions of families with a common point); `integral` must agree with it
  /// on singletons.
  static ConnectivitySpace delegated(GroundSet ground, bool integral, Membership membership);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  bool integral() const { return integral_; }
  bool generator_backed() const { return !membership_; }
  /// Only meaningful on generator-backed spaces.
  const std::vector<Subset>& generators() const { return generators_; }

  friend bool membership(const ConnectivitySpace& space, Subset a);

 private:
  ConnectivitySpace() = default;

  GroundSet ground_;
  std::vector<Subset> generators_;
  bool integral_ = false;
  Membership membership_;  // empty on generator-backed spaces
};

/// Decides a ∈ κ(space). On generator-backed spaces this is a union-find
/// over the generators contained in `a` (plus singletons when integral),
/// never an enumeration of kappa.
bool membership(const ConnectivitySpace& space, Subset a);

/// Whether every singleton is connected (the semantic reading of
/// "integral", independent of the stored flag). At finite cardinality this
/// is also the diffeologizability criterion.
bool is_integral_semantically(const ConnectivitySpace& space);

/// The maximal nonempty connected subsets of `a`, pairwise disjoint, in
/// canonical order. Points of `a` lying in no nonempty connected subset
/// appear in no component.
std::vector<Subset> components(const ConnectivitySpace& space, Subset a);

/// The induced structure on `a`: a space on the sub-ground whose connected
/// sets are exactly the connected subsets of `a`. Membership is delegated
/// to the parent space.
ConnectivitySpace induced(const ConnectivitySpace& space, Subset a);

/// True iff the direct image of every connected set of x is connected in y.
/// Decided on a generating family of x.
bool is_morphism(const SetMap& f, const ConnectivitySpace& x, const ConnectivitySpace& y);

StructureRelation compare(const ConnectivitySpace& a, const ConnectivitySpace& b);

/// One direction of compare: every connected set of `a` is connected in `b`.
bool finer_or_equal(const ConnectivitySpace& a, const ConnectivitySpace& b);

/// Lattice operations on structures over one ground set. join is generated
/// by the union of the generator families; meet delegates membership to the
/// conjunction of the two memberships.
ConnectivitySpace meet(const ConnectivitySpace& a, const ConnectivitySpace& b);
ConnectivitySpace join(const ConnectivitySpace& a, const ConnectivitySpace& b);

struct ObstructionWitness {
  Subset a;
  Subset b;
  std::size_t x;
};

/// Searches for nonempty connected a, b and a point x outside both with
/// a∪{x} and b∪{x} not connected but a∪b∪{x} connected. Such a witness
/// rules out every topological realization of the structure; its absence
/// proves nothing. Scans connected pairs in canonical order.
std::optional<ObstructionWitness> topological_obstruction_witness(const ConnectivitySpace& space);

/// All connected sets of the space including the empty set, canonical
/// order. Guarded by kMaterializeLimit.
std::vector<Subset> materialize_kappa(const ConnectivitySpace& space);

/// A family whose generated structure is κ(space), suitable for
/// quantifying "for all connected sets" checks: the stored generators plus
/// all singletons when integral, or a full materialization for delegated
/// spaces (guarded). Never contains the empty set.
std::vector<Subset> checking_family(const ConnectivitySpace& space);

}  // namespace cnc
