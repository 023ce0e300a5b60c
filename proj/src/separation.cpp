#include "cnc/separation.hpp"

#include <algorithm>
#include <unordered_set>

namespace cnc::separation {

namespace {

constexpr std::size_t kDeviceLimit = 16;
constexpr std::size_t kGroupCap = 100'000;

SeparatingPair normalized(Subset s, Subset t) {
  if (canonical_less(t, s)) std::swap(s, t);
  return SeparatingPair{s, t};
}

bool pair_less(const SeparatingPair& a, const SeparatingPair& b) {
  if (!(a.s == b.s)) return canonical_less(a.s, b.s);
  return canonical_less(a.t, b.t);
}

}  // namespace

SeparationDevice::SeparationDevice(GroundSet ground, std::vector<SeparatingPair> pairs)
    : ground_(std::move(ground)) {
  for (const SeparatingPair& p : pairs) {
    require_carrier(ground_, p.s, "separating pair");
    require_carrier(ground_, p.t, "separating pair");
    if (p.s.empty() || p.t.empty())
      throw InvariantViolation("separating pair with an empty side");
    if (p.s.intersects(p.t))
      throw InvariantViolation("separating pair with intersecting sides");
    pairs_.push_back(normalized(p.s, p.t));
  }
  std::sort(pairs_.begin(), pairs_.end(), pair_less);
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool separated(const SeparationDevice& device, Subset a) {
  require_carrier(device.ground(), a, "separated");
  for (const SeparatingPair& p : device.pairs())
    if (a.subset_of(p.s | p.t) && a.intersects(p.s) && a.intersects(p.t)) return true;
  return false;
}

ConnectivitySpace structure_of_device(const SeparationDevice& device) {
  SeparationDevice d = device;
  return ConnectivitySpace::delegated(device.ground(), true,
                                      [d](Subset k) { return !separated(d, k); });
}

SeparationDevice device_of_structure(const ConnectivitySpace& space) {
  if (!is_integral_semantically(space))
    throw PreconditionError("device_of_structure requires an integral space");
  if (space.size() > kDeviceLimit)
    throw SizeGuard("device_of_structure above 16 points");

  std::vector<SeparatingPair> pairs;
  const std::uint64_t full = space.ground().full().bits();
  for (std::uint64_t a = full; a; a = (a - 1) & full) {
    const std::uint64_t rest = full & ~a;
    for (std::uint64_t b = rest; b; b = (b - 1) & rest) {
      if (b > a) continue;  // unordered pairs once
      Subset sa(a), sb(b);
      bool splits = true;
      for (Subset c : components(space, sa | sb)) {
        if (!c.subset_of(sa) && !c.subset_of(sb)) {
          splits = false;
          break;
        }
      }
      if (splits) pairs.push_back(normalized(sa, sb));
    }
  }
  return SeparationDevice(space.ground(), std::move(pairs));
}

PermutationGroup::PermutationGroup(GroundSet ground, std::vector<SetMap> generators)
    : ground_(std::move(ground)), generators_(std::move(generators)) {
  for (const SetMap& g : generators_) {
    require_same_ground(g.source(), ground_, "group generator source");
    require_same_ground(g.target(), ground_, "group generator target");
    if (!g.is_permutation())
      throw InvariantViolation("group generator is not a permutation");
  }
}

std::vector<SetMap> elements(const PermutationGroup& group) {
  std::vector<SetMap> out{SetMap::identity(group.ground())};
  std::unordered_set<std::string> seen;
  auto key = [](const SetMap& f) {
    std::string k;
    for (std::size_t v : f.images()) {
      k += std::to_string(v);
      k += ',';
    }
    return k;
  };
  seen.insert(key(out.front()));
  for (std::size_t head = 0; head < out.size(); ++head) {
    SetMap current = out[head];
    for (const SetMap& g : group.generators()) {
      SetMap next = compose(g, current);
      if (seen.insert(key(next)).second) {
        if (out.size() >= kGroupCap)
          throw SizeGuard("permutation group closure above 10^5 elements");
        out.push_back(std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SetMap& a, const SetMap& b) {
    return a.images() < b.images();
  });
  return out;
}

SeparationDevice orbit_device(const PermutationGroup& group, const SeparationDevice& device) {
  require_same_ground(group.ground(), device.ground(), "orbit_device");
  std::vector<SeparatingPair> pairs;
  for (const SetMap& phi : elements(group))
    for (const SeparatingPair& p : device.pairs())
      pairs.push_back(normalized(phi.image_of(p.s), phi.image_of(p.t)));
  return SeparationDevice(device.ground(), std::move(pairs));
}

FiniteTopology::FiniteTopology(GroundSet ground, std::vector<Subset> opens)
    : ground_(std::move(ground)), opens_(std::move(opens)) {
  for (Subset u : opens_) require_carrier(ground_, u, "open");
  opens_.push_back(Subset());
  opens_.push_back(ground_.full());
  canonical_sort(opens_);
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (Subset u : opens_) {
    for (Subset v : opens_) {
      auto find = [&](Subset w) {
        return std::binary_search(opens_.begin(), opens_.end(), w,
                                  [](Subset x, Subset y) { return canonical_less(x, y); });
      };
      if (!find(u | v))
        throw InvariantViolation("topology not closed under union: missing " +
                                 ground_.render(u | v));
      if (!find(u & v))
        throw InvariantViolation("topology not closed under intersection: missing " +
                                 ground_.render(u & v));
    }
  }
}

FiniteTopology close_topology(const GroundSet& ground, std::vector<Subset> opens) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Subset> family;
  auto add = [&](Subset u) {
    if (seen.insert(u.bits()).second) family.push_back(u);
  };
  add(Subset());
  add(ground.full());
  for (Subset u : opens) {
    require_carrier(ground, u, "open");
    add(u);
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add(family[i] | family[j]);
      add(family[i] & family[j]);
    }
  }
  return FiniteTopology(ground, std::move(family));
}

ConnectivitySpace u_t(const FiniteTopology& top) {
  FiniteTopology t = top;
  return ConnectivitySpace::delegated(top.ground(), true, [t](Subset k) {
    // Disconnected iff two opens trace a partition of k into nonempty parts.
    for (Subset u : t.opens()) {
      Subset tu = u & k;
      if (tu.empty() || tu == k) continue;
      for (Subset v : t.opens()) {
        Subset tv = v & k;
        if (tv.empty() || tv.intersects(tu)) continue;
        if ((tu | tv) == k) return false;
      }
    }
    return true;
  });
}

ConnectivitySpace v_t(const FiniteTopology& top) {
  std::vector<SeparatingPair> pairs;
  for (Subset u : top.opens()) {
    if (u.empty()) continue;
    for (Subset v : top.opens()) {
      if (v.empty() || v.intersects(u)) continue;
      pairs.push_back(normalized(u, v));
    }
  }
  return structure_of_device(SeparationDevice(top.ground(), std::move(pairs)));
}

}  // namespace cnc::separation
