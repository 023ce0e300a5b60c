#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cnc/space.hpp"

namespace cnc::representation {

/// is_clear quantifies over all subsets of the object; capped rather than
/// approximated.
inline constexpr std::size_t kClearLimit = 20;

/// A point-to-nonempty-subset map between two spaces, a Kleisli arrow of
/// the nonempty-powerset monad. Invariants (checked by validate): every
/// image is nonempty, and the union of images over any connected set of the
/// object is connected in the space.
class Representation {
 public:
  static Representation validate(ConnectivitySpace object, ConnectivitySpace space,
                                 std::vector<Subset> images);

  const ConnectivitySpace& object() const { return object_; }
  const ConnectivitySpace& space() const { return space_; }
  const std::vector<Subset>& images() const { return images_; }
  Subset image(std::size_t point) const { return images_[point]; }

  /// ^mu rho: the union of images over a subset of the object.
  Subset union_image(Subset a) const;

 private:
  friend Representation trusted_representation(ConnectivitySpace, ConnectivitySpace,
                                               std::vector<Subset>);
  Representation(ConnectivitySpace object, ConnectivitySpace space, std::vector<Subset> images)
      : object_(std::move(object)), space_(std::move(space)), images_(std::move(images)) {}

  ConnectivitySpace object_;
  ConnectivitySpace space_;
  std::vector<Subset> images_;
};

/// Builds a representation without re-checking the morphism law. Reserved
/// for constructions that guarantee it (r_down past the size guard).
Representation trusted_representation(ConnectivitySpace object, ConnectivitySpace space,
                                      std::vector<Subset> images);

/// Membership in the power structure P*(space): a family of nonempty
/// subsets is connected iff its union is. Members need not be connected.
bool pstar_membership(const ConnectivitySpace& space, const std::vector<Subset>& family);

/// The unit of the monad: x -> {x}.
Representation epsilon(const ConnectivitySpace& space);

/// Clear: non-connected sets of the object have non-connected image
/// unions. Quantified over all subsets of the object; n(object) <= 20.
bool is_clear(const Representation& rep);

/// Distinct: images of distinct points are disjoint.
bool is_distinct(const Representation& rep);

/// Kleisli composition (tau . rho)(x) = union of tau over rho(x). The space
/// of rho and the object of tau must carry equal structures.
Representation kleisli_compose(const Representation& tau, const Representation& rho);

/// A morphism of representations: connective maps on objects and spaces
/// with beta^P(rho(a)) contained in rho'(alpha(a)) at every point.
struct RepMorphism {
  SetMap alpha;
  SetMap beta;

  bool operator==(const RepMorphism&) const = default;
};

/// Non-throwing check of the three morphism clauses.
bool is_rep_morphism(const SetMap& alpha, const SetMap& beta, const Representation& rho,
                     const Representation& rho_prime);

/// Checked constructor; reports the violated clause with a witness point.
RepMorphism validate_rep_morphism(SetMap alpha, SetMap beta, const Representation& rho,
                                  const Representation& rho_prime);

RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

/// The points of a representation: pairs (p, q) with {p} connected in the
/// object, q in rho(p), and {q} connected in the space.
std::vector<std::pair<std::size_t, std::size_t>> rep_points(const Representation& rep);

/// A clear and distinct representation of x in an integral space: one copy
/// of every connected point, two copies of every non-connected one, with
/// the space generated by the image unions of the connected sets of x. The
/// result is re-verified (valid, clear, distinct, integral space). n <= 20.
Representation canonical_representation(const ConnectivitySpace& x);

/// A materialized power space P*(x) for naturality checks: points are the
/// nonempty subsets of |x|, and a set of points is connected iff the union
/// of the corresponding subsets is connected in x. n <= 4.
struct PowerSpace {
  ConnectivitySpace space;
  std::vector<Subset> points;  // points[i] = subset of |x| behind point i

  std::size_t index_of(Subset a) const;
};

PowerSpace pstar_space(const ConnectivitySpace& x);

}  // namespace cnc::representation
