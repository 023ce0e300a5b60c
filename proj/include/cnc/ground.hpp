#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnc/subset.hpp"

namespace cnc {

/// An ordered list of distinct point names. The index of a label is its
/// position and is stable; at most 64 points so that any subset fits one
/// machine word.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Subset full() const { return Subset::full(size()); }
  bool carries(Subset a) const { return a.subset_of(full()); }

  /// Renders a subset as "{a,b,c}" in index order.
  std::string render(Subset a) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Throws CarrierMismatch unless `a` lives over `ground`.
void require_carrier(const GroundSet& ground, Subset a, const char* what);

/// Throws CarrierMismatch unless the two grounds are the same.
void require_same_ground(const GroundSet& a, const GroundSet& b, const char* what);

}  // namespace cnc
