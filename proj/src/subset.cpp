#include "cnc/subset.hpp"

#include <algorithm>

namespace cnc {

void canonical_sort(std::vector<Subset>& family) {
  std::sort(family.begin(), family.end(),
            [](Subset a, Subset b) { return canonical_less(a, b); });
}

std::vector<Subset> overlap_blocks(const std::vector<Subset>& pieces) {
  std::vector<Subset> blocks;
  for (Subset piece : pieces) {
    if (piece.empty()) continue;
    Subset merged = piece;
    std::size_t keep = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].intersects(merged)) {
        merged |= blocks[i];
      } else {
        blocks[keep++] = blocks[i];
      }
    }
    blocks.resize(keep);
    blocks.push_back(merged);
  }
  canonical_sort(blocks);
  return blocks;
}

}  // namespace cnc
