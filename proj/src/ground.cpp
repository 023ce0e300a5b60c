#include "cnc/ground.hpp"

#include <unordered_set>

#include "cnc/errors.hpp"

namespace cnc {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 64)
    throw InvariantViolation("ground set has " + std::to_string(labels_.size()) +
                             " points, the cap is 64");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvariantViolation("empty point label");
    if (!seen.insert(l).second)
      throw InvariantViolation("duplicate point label '" + l + "'");
  }
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::string GroundSet::render(Subset a) const {
  std::string out = "{";
  bool first = true;
  a.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  });
  out += '}';
  return out;
}

void require_carrier(const GroundSet& ground, Subset a, const char* what) {
  if (!ground.carries(a))
    throw CarrierMismatch(std::string(what) + ": subset has points outside the carrier");
}

void require_same_ground(const GroundSet& a, const GroundSet& b, const char* what) {
  if (!(a == b))
    throw CarrierMismatch(std::string(what) + ": ground sets differ");
}

}  // namespace cnc
