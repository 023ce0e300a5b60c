#include "cnc/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace cnc::oracle {

namespace {

constexpr std::size_t kClosureLimit = 16;
constexpr std::size_t kStructureEnumLimit = 4;
constexpr std::size_t kIrreducibleLimit = 10;
constexpr std::size_t kMorphismBudget = 1'000'000;

}  // namespace

bool MaterializedStructure::contains(Subset a) const {
  return std::binary_search(kappa.begin(), kappa.end(), a,
                            [](Subset x, Subset y) { return canonical_less(x, y); });
}

MaterializedStructure closure(const GroundSet& ground, const std::vector<Subset>& generators,
                              bool integral) {
  if (ground.size() > kClosureLimit)
    throw SizeGuard("oracle closure above 16 points");
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> members{0};
  std::vector<std::uint64_t> worklist;

  auto push = [&](std::uint64_t b) {
    if (seen.insert(b).second) worklist.push_back(b);
  };
  for (Subset g : generators) {
    require_carrier(ground, g, "oracle closure generator");
    if (!g.empty()) push(g.bits());
  }
  if (integral)
    for (std::size_t i = 0; i < ground.size(); ++i) push(std::uint64_t{1} << i);

  while (!worklist.empty()) {
    std::uint64_t u = worklist.back();
    worklist.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::uint64_t v = members[i];
      if ((u & v) != 0) {
        std::uint64_t w = u | v;
        if (!seen.count(w)) {
          seen.insert(w);
          worklist.push_back(w);
        }
      }
    }
    members.push_back(u);
  }

  MaterializedStructure out;
  out.ground = ground;
  out.kappa.reserve(members.size());
  for (std::uint64_t b : members) out.kappa.push_back(Subset(b));
  canonical_sort(out.kappa);
  return out;
}

bool closure_membership(const GroundSet& ground, const std::vector<Subset>& generators,
                        bool integral, Subset a) {
  require_carrier(ground, a, "oracle closure_membership");
  return closure(ground, generators, integral).contains(a);
}

ConnectivitySpace as_space(const MaterializedStructure& m) {
  bool integral = true;
  for (std::size_t i = 0; i < m.ground.size(); ++i)
    if (!m.contains(Subset::single(i))) integral = false;
  return ConnectivitySpace(m.ground, m.kappa, integral);
}

std::vector<SetMap> enumerate_morphisms(const ConnectivitySpace& x, const ConnectivitySpace& y) {
  const std::size_t nx = x.size(), ny = y.size();
  if (nx == 0) return {SetMap(x.ground(), y.ground(), {})};
  if (ny == 0) return {};

  double budget = 1.0;
  for (std::size_t i = 0; i < nx; ++i) {
    budget *= static_cast<double>(ny);
    if (budget > static_cast<double>(kMorphismBudget))
      throw SizeGuard("morphism enumeration above 10^6 candidate maps");
  }

  std::vector<SetMap> out;
  std::vector<std::size_t> images(nx, 0);
  for (;;) {
    SetMap f(x.ground(), y.ground(), images);
    if (is_morphism(f, x, y)) out.push_back(std::move(f));
    std::size_t pos = nx;
    while (pos > 0) {
      --pos;
      if (++images[pos] < ny) break;
      images[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<MaterializedStructure> enumerate_structures(const GroundSet& ground,
                                                        bool integral_only) {
  const std::size_t n = ground.size();
  if (n > kStructureEnumLimit)
    throw SizeGuard("structure enumeration above 4 points");

  // Candidate generators: all nonempty subsets, or only those of size >= 2
  // when every singleton is forced in anyway.
  std::vector<Subset> candidates;
  std::uint64_t full = ground.full().bits();
  for (std::uint64_t s = full; s; s = (s - 1) & full) {
    Subset c(s);
    if (integral_only && c.count() < 2) continue;
    candidates.push_back(c);
  }

  std::map<std::vector<std::uint64_t>, MaterializedStructure> distinct;

  const std::uint64_t families = std::uint64_t{1} << candidates.size();
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    std::vector<Subset> gens;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if ((pick >> i) & 1u) gens.push_back(candidates[i]);
    MaterializedStructure m = closure(ground, gens, integral_only);
    std::vector<std::uint64_t> key;
    key.reserve(m.kappa.size());
    for (Subset k : m.kappa) key.push_back(k.bits());
    distinct.emplace(std::move(key), std::move(m));
  }

  std::vector<MaterializedStructure> out;
  out.reserve(distinct.size());
  for (auto& [key, m] : distinct) out.push_back(std::move(m));
  return out;
}

std::vector<Subset> irreducibles_by_definition(const ConnectivitySpace& space) {
  if (space.size() > kIrreducibleLimit)
    throw SizeGuard("definitional irreducibles above 10 points");
  std::vector<Subset> kappa = materialize_kappa(space);
  std::vector<Subset> out;
  for (Subset k : kappa) {
    if (k.empty()) continue;
    std::vector<Subset> rest;
    for (Subset other : kappa)
      if (!(other == k)) rest.push_back(other);
    if (!closure(space.ground(), rest, false).contains(k)) out.push_back(k);
  }
  return out;
}

std::size_t order_by_definition(const ConnectivitySpace& space) {
  std::vector<Subset> irr = irreducibles_by_definition(space);
  // Longest inclusion chain, counted in elements: plain DP in cardinality
  // order, kept independent of the fast path in module order.
  std::vector<std::size_t> height(irr.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (!(irr[j] == irr[i]) && irr[j].subset_of(irr[i]))
        height[i] = std::max(height[i], height[j] + 1);
    best = std::max(best, height[i]);
  }
  return best > 1 ? best - 1 : 0;
}

}  // namespace cnc::oracle
