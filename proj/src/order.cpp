#include "cnc/order.hpp"

#include <algorithm>

namespace cnc::order {

GenericGraph irreducibles(const ConnectivitySpace& space) {
  std::vector<Subset> kappa = materialize_kappa(space);
  GenericGraph g;
  for (Subset k : kappa) {
    if (k.empty()) continue;
    std::vector<Subset> pieces;
    for (Subset c : kappa)
      if (!c.empty() && !(c == k) && c.subset_of(k)) pieces.push_back(c);
    std::vector<Subset> blocks = overlap_blocks(pieces);
    bool rebuilt = blocks.size() == 1 && blocks.front() == k;
    if (!rebuilt) g.elements.push_back(k);
  }
  return g;
}

std::size_t poset_height(const GenericGraph& g) {
  // Elements are in canonical order, so proper subsets come first.
  std::vector<std::size_t> height(g.elements.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!(g.elements[j] == g.elements[i]) && g.elements[j].subset_of(g.elements[i]))
        height[i] = std::max(height[i], height[j] + 1);
    }
    best = std::max(best, height[i]);
  }
  return best;
}

std::size_t connectivity_order(const ConnectivitySpace& space) {
  std::size_t h = poset_height(irreducibles(space));
  return h > 1 ? h - 1 : 0;
}

std::size_t foliation_order(const foliation::Foliation& z) {
  foliation::LeafSpace ls = foliation::induced_leaf_space(z);
  if (ls.leaves.size() > kMaterializeLimit)
    throw SizeGuard("foliation_order above 16 leaves");
  return connectivity_order(ls.space);
}

}  // namespace cnc::order
