#include "cnc/space.hpp"

#include <algorithm>
#include <utility>

namespace cnc {

const char* to_string(StructureRelation r) {
  switch (r) {
    case StructureRelation::Equal: return "EQUAL";
    case StructureRelation::Finer: return "FINER";
    case StructureRelation::Coarser: return "COARSER";
    case StructureRelation::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

SetMap::SetMap(GroundSet source, GroundSet target, std::vector<std::size_t> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw InvariantViolation("map must assign exactly one image per source point");
  for (std::size_t v : images_)
    if (v >= target_.size())
      throw CarrierMismatch("map image index outside the target carrier");
}

SetMap SetMap::identity(const GroundSet& g) {
  std::vector<std::size_t> images(g.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return SetMap(g, g, std::move(images));
}

Subset SetMap::image_of(Subset a) const {
  Subset out;
  a.for_each([&](std::size_t i) { out |= Subset::single(images_[i]); });
  return out;
}

Subset SetMap::preimage_of(Subset b) const {
  Subset out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (b.contains(images_[i])) out |= Subset::single(i);
  return out;
}

bool SetMap::is_permutation() const {
  if (!(source_ == target_)) return false;
  return image_of(source_.full()) == source_.full();
}

SetMap compose(const SetMap& g, const SetMap& f) {
  require_same_ground(f.target(), g.source(), "compose");
  std::vector<std::size_t> images(f.source().size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = g(f(i));
  return SetMap(f.source(), g.target(), std::move(images));
}

ConnectivitySpace::ConnectivitySpace(GroundSet ground, std::vector<Subset> generators,
                                     bool integral)
    : ground_(std::move(ground)), integral_(integral) {
  for (Subset g : generators) {
    require_carrier(ground_, g, "generator");
    if (!g.empty()) generators_.push_back(g);
  }
  canonical_sort(generators_);
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

ConnectivitySpace ConnectivitySpace::delegated(GroundSet ground, bool integral,
                                               Membership membership) {
  ConnectivitySpace s;
  s.ground_ = std::move(ground);
  s.integral_ = integral;
  s.membership_ = std::move(membership);
  return s;
}

namespace {

// Pieces of the generated structure that lie inside `a`: generators
// contained in a, plus the singletons of a when the space is integral.
// Membership and components both reduce to overlap-merging these.
std::vector<Subset> pieces_within(const ConnectivitySpace& space, Subset a) {
  std::vector<Subset> pieces;
  for (Subset g : space.generators())
    if (g.subset_of(a)) pieces.push_back(g);
  if (space.integral())
    a.for_each([&](std::size_t i) { pieces.push_back(Subset::single(i)); });
  return pieces;
}

std::vector<Subset> connected_subsets_of(const ConnectivitySpace& space, Subset a) {
  if (a.count() > kMaterializeLimit)
    throw SizeGuard("enumerating connected subsets of a set with more than 16 points");
  std::vector<Subset> out;
  std::uint64_t bits = a.bits();
  for (std::uint64_t s = bits; s; s = (s - 1) & bits)
    if (membership(space, Subset(s))) out.push_back(Subset(s));
  canonical_sort(out);
  return out;
}

}  // namespace

bool membership(const ConnectivitySpace& space, Subset a) {
  require_carrier(space.ground(), a, "membership");
  if (space.membership_) return space.membership_(a);
  if (a.empty()) return true;
  std::vector<Subset> blocks = overlap_blocks(pieces_within(space, a));
  return blocks.size() == 1 && blocks.front() == a;
}

bool is_integral_semantically(const ConnectivitySpace& space) {
  if (space.generator_backed() && space.integral()) return true;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (!membership(space, Subset::single(i))) return false;
  return true;
}

std::vector<Subset> components(const ConnectivitySpace& space, Subset a) {
  require_carrier(space.ground(), a, "components");
  if (space.generator_backed()) return overlap_blocks(pieces_within(space, a));
  // Delegated structure: merge all connected subsets of `a` by overlap.
  // Each block is a union of an overlap-chained family of connected sets,
  // hence connected, and every connected subset lies inside one block.
  return overlap_blocks(connected_subsets_of(space, a));
}

ConnectivitySpace induced(const ConnectivitySpace& space, Subset a) {
  require_carrier(space.ground(), a, "induced");
  std::vector<std::string> labels;
  std::vector<std::size_t> parent_index;
  a.for_each([&](std::size_t i) {
    labels.push_back(space.ground().label(i));
    parent_index.push_back(i);
  });
  GroundSet sub(std::move(labels));
  auto lift = [parent_index](Subset k) {
    Subset out;
    k.for_each([&](std::size_t j) { out |= Subset::single(parent_index[j]); });
    return out;
  };
  ConnectivitySpace parent = space;
  return ConnectivitySpace::delegated(
      sub, space.integral(),
      [parent, lift](Subset k) { return membership(parent, lift(k)); });
}

bool is_morphism(const SetMap& f, const ConnectivitySpace& x, const ConnectivitySpace& y) {
  require_same_ground(f.source(), x.ground(), "is_morphism: map source");
  require_same_ground(f.target(), y.ground(), "is_morphism: map target");
  for (Subset g : checking_family(x))
    if (!membership(y, f.image_of(g))) return false;
  return true;
}

bool finer_or_equal(const ConnectivitySpace& a, const ConnectivitySpace& b) {
  require_same_ground(a.ground(), b.ground(), "compare");
  for (Subset g : checking_family(a))
    if (!membership(b, g)) return false;
  return true;
}

StructureRelation compare(const ConnectivitySpace& a, const ConnectivitySpace& b) {
  bool le = finer_or_equal(a, b);
  bool ge = finer_or_equal(b, a);
  if (le && ge) return StructureRelation::Equal;
  if (le) return StructureRelation::Finer;
  if (ge) return StructureRelation::Coarser;
  return StructureRelation::Incomparable;
}

ConnectivitySpace meet(const ConnectivitySpace& a, const ConnectivitySpace& b) {
  require_same_ground(a.ground(), b.ground(), "meet");
  ConnectivitySpace left = a, right = b;
  return ConnectivitySpace::delegated(
      a.ground(), a.integral() && b.integral(),
      [left, right](Subset k) { return membership(left, k) && membership(right, k); });
}

ConnectivitySpace join(const ConnectivitySpace& a, const ConnectivitySpace& b) {
  require_same_ground(a.ground(), b.ground(), "join");
  std::vector<Subset> generators = checking_family(a);
  for (Subset g : checking_family(b)) generators.push_back(g);
  return ConnectivitySpace(a.ground(), std::move(generators), a.integral() || b.integral());
}

std::optional<ObstructionWitness> topological_obstruction_witness(
    const ConnectivitySpace& space) {
  std::vector<Subset> kappa = materialize_kappa(space);
  std::vector<Subset> connected;
  for (Subset k : kappa)
    if (!k.empty()) connected.push_back(k);
  const Subset full = space.ground().full();
  for (std::size_t i = 0; i < connected.size(); ++i) {
    for (std::size_t j = i; j < connected.size(); ++j) {
      Subset a = connected[i], b = connected[j];
      Subset rest = full.minus(a | b);
      bool found = false;
      ObstructionWitness w;
      rest.for_each([&](std::size_t x) {
        if (found) return;
        Subset px = Subset::single(x);
        if (membership(space, a | px)) return;
        if (membership(space, b | px)) return;
        if (!membership(space, a | b | px)) return;
        w = ObstructionWitness{a, b, x};
        found = true;
      });
      if (found) return w;
    }
  }
  return std::nullopt;
}

std::vector<Subset> materialize_kappa(const ConnectivitySpace& space) {
  if (space.size() > kMaterializeLimit)
    throw SizeGuard("materializing kappa above 16 points");
  std::vector<Subset> out;
  std::uint64_t full = space.ground().full().bits();
  for (std::uint64_t s = 0;; s = (s - full) & full) {
    if (membership(space, Subset(s))) out.push_back(Subset(s));
    if (s == full) break;
  }
  canonical_sort(out);
  return out;
}

std::vector<Subset> checking_family(const ConnectivitySpace& space) {
  std::vector<Subset> family;
  if (space.generator_backed()) {
    family = space.generators();
    if (space.integral())
      for (std::size_t i = 0; i < space.size(); ++i)
        family.push_back(Subset::single(i));
    canonical_sort(family);
    family.erase(std::unique(family.begin(), family.end()), family.end());
  } else {
    for (Subset k : materialize_kappa(space))
      if (!k.empty()) family.push_back(k);
  }
  return family;
}

}  // namespace cnc
