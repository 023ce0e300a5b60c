#include "cnc/representation.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace cnc::representation {

namespace {

constexpr std::size_t kPstarLimit = 4;

}  // namespace

Subset Representation::union_image(Subset a) const {
  Subset out;
  a.for_each([&](std::size_t p) { out |= images_[p]; });
  return out;
}

Representation trusted_representation(ConnectivitySpace object, ConnectivitySpace space,
                                      std::vector<Subset> images) {
  return Representation(std::move(object), std::move(space), std::move(images));
}

Representation Representation::validate(ConnectivitySpace object, ConnectivitySpace space,
                                        std::vector<Subset> images) {
  if (images.size() != object.size())
    throw InvariantViolation("representation must assign an image to every object point");
  for (std::size_t p = 0; p < images.size(); ++p) {
    require_carrier(space.ground(), images[p], "representation image");
    if (images[p].empty())
      throw InvariantViolation("empty image for point '" + object.ground().label(p) + "'");
  }
  Representation rep(std::move(object), std::move(space), std::move(images));
  for (Subset g : checking_family(rep.object())) {
    if (!membership(rep.space(), rep.union_image(g)))
      throw InvariantViolation(
          "representation is not a morphism into the power space: connected set " +
          rep.object().ground().render(g) + " has non-connected image union " +
          rep.space().ground().render(rep.union_image(g)));
  }
  return rep;
}

bool pstar_membership(const ConnectivitySpace& space, const std::vector<Subset>& family) {
  Subset u;
  for (Subset m : family) {
    require_carrier(space.ground(), m, "pstar_membership");
    if (m.empty())
      throw InvariantViolation("pstar_membership: the empty set is not a point of P*");
    u |= m;
  }
  return membership(space, u);
}

Representation epsilon(const ConnectivitySpace& space) {
  std::vector<Subset> images;
  images.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) images.push_back(Subset::single(i));
  return Representation::validate(space, space, std::move(images));
}

bool is_clear(const Representation& rep) {
  const std::size_t n = rep.object().size();
  if (n > kClearLimit) throw SizeGuard("is_clear above 20 object points");
  const std::uint64_t full = rep.object().ground().full().bits();
  for (std::uint64_t a = 0;; a = (a - full) & full) {
    Subset s(a);
    if (!membership(rep.object(), s) && membership(rep.space(), rep.union_image(s)))
      return false;
    if (a == full) break;
  }
  return true;
}

bool is_distinct(const Representation& rep) {
  Subset used;
  for (Subset img : rep.images()) {
    if (used.intersects(img)) return false;
    used |= img;
  }
  return true;
}

Representation kleisli_compose(const Representation& tau, const Representation& rho) {
  require_same_ground(rho.space().ground(), tau.object().ground(), "kleisli_compose");
  if (compare(rho.space(), tau.object()) != StructureRelation::Equal)
    throw PreconditionError(
        "kleisli_compose: the space of the inner and the object of the outer "
        "representation carry different structures");
  std::vector<Subset> images;
  images.reserve(rho.images().size());
  for (Subset r : rho.images()) images.push_back(tau.union_image(r));
  return Representation::validate(rho.object(), tau.space(), std::move(images));
}

bool is_rep_morphism(const SetMap& alpha, const SetMap& beta, const Representation& rho,
                     const Representation& rho_prime) {
  if (!is_morphism(alpha, rho.object(), rho_prime.object())) return false;
  if (!is_morphism(beta, rho.space(), rho_prime.space())) return false;
  for (std::size_t a = 0; a < rho.images().size(); ++a)
    if (!beta.image_of(rho.image(a)).subset_of(rho_prime.image(alpha(a)))) return false;
  return true;
}

RepMorphism validate_rep_morphism(SetMap alpha, SetMap beta, const Representation& rho,
                                  const Representation& rho_prime) {
  require_same_ground(alpha.source(), rho.object().ground(), "rep morphism alpha source");
  require_same_ground(alpha.target(), rho_prime.object().ground(), "rep morphism alpha target");
  require_same_ground(beta.source(), rho.space().ground(), "rep morphism beta source");
  require_same_ground(beta.target(), rho_prime.space().ground(), "rep morphism beta target");
  if (!is_morphism(alpha, rho.object(), rho_prime.object()))
    throw InvariantViolation("rep morphism: alpha is not connective");
  if (!is_morphism(beta, rho.space(), rho_prime.space()))
    throw InvariantViolation("rep morphism: beta is not connective");
  for (std::size_t a = 0; a < rho.images().size(); ++a) {
    if (!beta.image_of(rho.image(a)).subset_of(rho_prime.image(alpha(a))))
      throw InvariantViolation("rep morphism: beta(rho(a)) not within rho'(alpha(a)) at point '" +
                               rho.object().ground().label(a) + "'");
  }
  return RepMorphism{std::move(alpha), std::move(beta)};
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  return RepMorphism{compose(g.alpha, f.alpha), compose(g.beta, f.beta)};
}

std::vector<std::pair<std::size_t, std::size_t>> rep_points(const Representation& rep) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < rep.object().size(); ++p) {
    if (!membership(rep.object(), Subset::single(p))) continue;
    rep.image(p).for_each([&](std::size_t q) {
      if (membership(rep.space(), Subset::single(q))) out.emplace_back(p, q);
    });
  }
  return out;
}

Representation canonical_representation(const ConnectivitySpace& x) {
  if (x.size() > kClearLimit)
    throw SizeGuard("canonical_representation above 20 points");

  std::vector<std::string> labels;
  std::unordered_set<std::string> taken;
  auto fresh = [&](std::string candidate) {
    while (taken.count(candidate)) candidate += '\'';
    taken.insert(candidate);
    labels.push_back(candidate);
    return labels.size() - 1;
  };

  std::vector<Subset> rho(x.size());
  std::vector<bool> doubled(x.size());
  for (std::size_t p = 0; p < x.size(); ++p)
    doubled[p] = !membership(x, Subset::single(p));
  for (std::size_t p = 0; p < x.size(); ++p) {
    const std::string& base = x.ground().label(p);
    if (!doubled[p]) {
      rho[p] = Subset::single(fresh(base));
    } else {
      std::size_t c0 = fresh(base + ".0");
      std::size_t c1 = fresh(base + ".1");
      rho[p] = Subset::single(c0) | Subset::single(c1);
    }
  }
  GroundSet y_ground(std::move(labels));

  std::vector<Subset> y_generators;
  for (Subset k : checking_family(x)) {
    Subset u;
    k.for_each([&](std::size_t p) { u |= rho[p]; });
    y_generators.push_back(u);
  }
  ConnectivitySpace y(std::move(y_ground), std::move(y_generators), true);

  Representation rep = Representation::validate(x, std::move(y), std::move(rho));
  if (!is_distinct(rep))
    throw InvariantViolation("canonical_representation produced a non-distinct result");
  if (!is_clear(rep))
    throw InvariantViolation("canonical_representation produced a non-clear result");
  return rep;
}

std::size_t PowerSpace::index_of(Subset a) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == a) return i;
  throw CarrierMismatch("subset is not a point of this power space");
}

PowerSpace pstar_space(const ConnectivitySpace& x) {
  if (x.size() > kPstarLimit)
    throw SizeGuard("materialized power space above 4 points");
  PowerSpace out{ConnectivitySpace(GroundSet(), {}, false), {}};
  std::vector<std::string> labels;
  const std::uint64_t full = x.ground().full().bits();
  for (std::uint64_t s = full; s; s = (s - 1) & full) {
    out.points.push_back(Subset(s));
  }
  canonical_sort(out.points);
  for (Subset p : out.points) labels.push_back(x.ground().render(p));
  std::vector<Subset> points = out.points;
  ConnectivitySpace base = x;
  out.space = ConnectivitySpace::delegated(
      GroundSet(std::move(labels)), false, [base, points](Subset family) {
        Subset u;
        family.for_each([&](std::size_t i) { u |= points[i]; });
        return membership(base, u);
      });
  return out;
}

}  // namespace cnc::representation
