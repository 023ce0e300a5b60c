#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cnc/representation.hpp"
#include "cnc/space.hpp"

namespace cnc::foliation {

using representation::RepMorphism;
using representation::Representation;

/// One ground set carrying an internal structure (whose components are the
/// leaves) and an external structure.
class Foliation {
 public:
  Foliation(ConnectivitySpace internal, ConnectivitySpace external);

  const ConnectivitySpace& internal() const { return internal_; }
  const ConnectivitySpace& external() const { return external_; }
  const GroundSet& ground() const { return internal_.ground(); }

 private:
  ConnectivitySpace internal_;
  ConnectivitySpace external_;
};

/// Regular: every internally connected set is externally connected.
bool is_regular(const Foliation& z);

/// The leaves: nonempty components of the internal structure over the full
/// carrier. Canonical order.
std::vector<Subset> leaves(const Foliation& z);

/// The present part of the internal structure: the union of the leaves.
Subset domain_of(const Foliation& z);

/// Connective for the internal structures and for the external structures.
bool is_foliation_morphism(const SetMap& f, const Foliation& z, const Foliation& z_prime);

/// A morphism that maps every leaf onto (exactly) a leaf.
bool is_strict(const SetMap& f, const Foliation& z, const Foliation& z_prime);

/// The induced space of leaves: leaves as points, a set of leaves connected
/// iff the union of its members is externally connected. The space is
/// integral iff every leaf is externally connected.
struct LeafSpace {
  std::vector<Subset> leaves;
  ConnectivitySpace space;
};

LeafSpace induced_leaf_space(const Foliation& z);

/// The induced representation R^(down): the leaf space represented in the
/// external space by rho(F) = F. Clear and distinct by construction;
/// re-checked when the leaf count is within the size guard.
Representation r_down(const Foliation& z);

/// R^(down) on morphisms: alpha sends a leaf F to the leaf of z' containing
/// f^P(F); beta is f itself.
RepMorphism r_down_on_morphism(const SetMap& f, const Foliation& z, const Foliation& z_prime);

/// The three functorial structures, ordered desintegrated < identity <
/// coarse (kappa_D, kappa, kappa_G).
enum class FunctorialStructure { Desintegrated, Identity, Coarse };

const char* to_string(FunctorialStructure g);

/// Phi_(gamma0,gamma1): the foliation over the space of rho whose external
/// structure is the space's and whose internal structure is generated,
/// inside each image rho(a), by gamma0 (when the point a is non-connected)
/// or gamma1 (when connected). Requires gamma0 <= gamma1.
Foliation phi(FunctorialStructure gamma0, FunctorialStructure gamma1, const Representation& rho);

/// Exhaustive verification of the adjunction R^(down) -| Phi_kappa on one
/// instance: enumerates both hom-sets, checks the projection, uniqueness
/// and unique-lift statements and the bijection. Requires z regular and
/// rho clear, distinct, with integral object.
struct AdjunctionReport {
  std::vector<std::pair<SetMap, SetMap>> rep_homs;  // (alpha, beta), deterministic order
  std::vector<SetMap> foliation_homs;
  bool projection_into_foliation_homs = false;  // every beta of a pair is a foliation hom
  bool beta_determines_alpha = false;           // no beta with two different alphas
  bool every_beta_lifts_once = false;           // each foliation morphism lifts exactly once
  bool bijection = false;                       // the two hom-sets have equal size

  bool ok() const {
    return projection_into_foliation_homs && beta_determines_alpha &&
           every_beta_lifts_once && bijection;
  }
};

AdjunctionReport check_adjunction(const Foliation& z, const Representation& rho);

/// The isomorphism rho = rho^(down)_G of clear distinct representations:
/// alpha(a) = rho(a), beta the identity, both composites checked to be
/// identities. Returns (forward, backward).
std::pair<RepMorphism, RepMorphism> iso_rho_down_g(const Representation& rho);

}  // namespace cnc::foliation
