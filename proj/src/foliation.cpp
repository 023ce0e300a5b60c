#include "cnc/foliation.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cnc/oracle.hpp"

namespace cnc::foliation {

Foliation::Foliation(ConnectivitySpace internal, ConnectivitySpace external)
    : internal_(std::move(internal)), external_(std::move(external)) {
  require_same_ground(internal_.ground(), external_.ground(), "foliation");
}

bool is_regular(const Foliation& z) {
  return finer_or_equal(z.internal(), z.external());
}

std::vector<Subset> leaves(const Foliation& z) {
  return components(z.internal(), z.ground().full());
}

Subset domain_of(const Foliation& z) {
  Subset out;
  for (Subset leaf : leaves(z)) out |= leaf;
  return out;
}

bool is_foliation_morphism(const SetMap& f, const Foliation& z, const Foliation& z_prime) {
  return is_morphism(f, z.internal(), z_prime.internal()) &&
         is_morphism(f, z.external(), z_prime.external());
}

bool is_strict(const SetMap& f, const Foliation& z, const Foliation& z_prime) {
  if (!is_foliation_morphism(f, z, z_prime)) return false;
  std::vector<Subset> target_leaves = leaves(z_prime);
  for (Subset leaf : leaves(z)) {
    Subset img = f.image_of(leaf);
    bool hit = false;
    for (Subset tl : target_leaves)
      if (tl == img) { hit = true; break; }
    if (!hit) return false;
  }
  return true;
}

namespace {

std::string leaf_label(const GroundSet& ground, Subset leaf) {
  return ground.render(leaf);
}

}  // namespace

LeafSpace induced_leaf_space(const Foliation& z) {
  LeafSpace out{leaves(z), ConnectivitySpace(GroundSet(), {}, false)};
  std::vector<std::string> labels;
  labels.reserve(out.leaves.size());
  for (Subset leaf : out.leaves) labels.push_back(leaf_label(z.ground(), leaf));

  bool integral = true;
  ConnectivitySpace external = z.external();
  for (Subset leaf : out.leaves)
    if (!membership(external, leaf)) integral = false;

  std::vector<Subset> leaf_sets = out.leaves;
  out.space = ConnectivitySpace::delegated(
      GroundSet(std::move(labels)), integral, [external, leaf_sets](Subset chosen) {
        Subset u;
        chosen.for_each([&](std::size_t i) { u |= leaf_sets[i]; });
        return membership(external, u);
      });
  return out;
}

Representation r_down(const Foliation& z) {
  LeafSpace ls = induced_leaf_space(z);
  std::vector<Subset> images = ls.leaves;
  if (ls.leaves.size() <= kMaterializeLimit) {
    Representation rep =
        Representation::validate(ls.space, z.external(), std::move(images));
    if (!is_distinct(rep) || !is_clear(rep))
      throw InvariantViolation("r_down produced a non-clear or non-distinct representation");
    return rep;
  }
  return representation::trusted_representation(ls.space, z.external(), std::move(images));
}

RepMorphism r_down_on_morphism(const SetMap& f, const Foliation& z, const Foliation& z_prime) {
  if (!is_foliation_morphism(f, z, z_prime))
    throw PreconditionError("r_down_on_morphism: map is not a foliation morphism");
  Representation source = r_down(z);
  Representation target = r_down(z_prime);
  std::vector<Subset> target_leaves = leaves(z_prime);
  std::vector<Subset> source_leaves = leaves(z);

  std::vector<std::size_t> alpha_images;
  alpha_images.reserve(source_leaves.size());
  for (Subset leaf : source_leaves) {
    Subset img = f.image_of(leaf);
    std::size_t found = target_leaves.size();
    for (std::size_t i = 0; i < target_leaves.size(); ++i)
      if (img.subset_of(target_leaves[i])) { found = i; break; }
    if (found == target_leaves.size())
      throw InvariantViolation("r_down_on_morphism: image of a leaf lies in no leaf");
    alpha_images.push_back(found);
  }
  SetMap alpha(source.object().ground(), target.object().ground(), std::move(alpha_images));
  return validate_rep_morphism(std::move(alpha), f, source, target);
}

const char* to_string(FunctorialStructure g) {
  switch (g) {
    case FunctorialStructure::Desintegrated: return "desintegrated";
    case FunctorialStructure::Identity: return "identity";
    case FunctorialStructure::Coarse: return "coarse";
  }
  return "?";
}

Foliation phi(FunctorialStructure gamma0, FunctorialStructure gamma1,
              const Representation& rho) {
  if (static_cast<int>(gamma0) > static_cast<int>(gamma1))
    throw PreconditionError("phi requires gamma0 <= gamma1");

  ConnectivitySpace space = rho.space();
  std::vector<Subset> images = rho.images();
  std::vector<FunctorialStructure> gamma(images.size());
  for (std::size_t a = 0; a < images.size(); ++a)
    gamma[a] = membership(rho.object(), Subset::single(a)) ? gamma1 : gamma0;

  // Internal membership: k lies in the structure generated by the
  // gamma-connected subsets of the images iff the maximal such pieces
  // inside k cover it and overlap-merge into k itself.
  auto internal_membership = [space, images, gamma](Subset k) {
    if (k.empty()) return true;
    std::vector<Subset> pieces;
    for (std::size_t a = 0; a < images.size(); ++a) {
      Subset part = images[a] & k;
      if (part.empty()) continue;
      switch (gamma[a]) {
        case FunctorialStructure::Desintegrated:
          break;
        case FunctorialStructure::Coarse:
          pieces.push_back(part);
          break;
        case FunctorialStructure::Identity:
          for (Subset c : components(space, part)) pieces.push_back(c);
          break;
      }
    }
    std::vector<Subset> blocks = overlap_blocks(pieces);
    return blocks.size() == 1 && blocks.front() == k;
  };

  bool integral = true;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (!internal_membership(Subset::single(i))) integral = false;

  ConnectivitySpace internal =
      ConnectivitySpace::delegated(space.ground(), integral, internal_membership);
  return Foliation(std::move(internal), rho.space());
}

AdjunctionReport check_adjunction(const Foliation& z, const Representation& rho) {
  if (!is_regular(z)) throw PreconditionError("check_adjunction: foliation is not regular");
  if (!is_distinct(rho))
    throw PreconditionError("check_adjunction: representation is not distinct");
  if (!is_clear(rho)) throw PreconditionError("check_adjunction: representation is not clear");
  if (!is_integral_semantically(rho.object()))
    throw PreconditionError("check_adjunction: representation object is not integral");

  Representation rdz = r_down(z);
  Foliation phik = phi(FunctorialStructure::Identity, FunctorialStructure::Identity, rho);

  AdjunctionReport report;

  // Morphisms of representations R^(down)Z -> rho: pairs of connective maps
  // image inclusion.
  std::vector<SetMap> alphas = oracle::enumerate_morphisms(rdz.object(), rho.object());
  std::vector<SetMap> betas = oracle::enumerate_morphisms(rdz.space(), rho.space());
  for (const SetMap& alpha : alphas) {
    for (const SetMap& beta : betas) {
      bool included = true;
      for (std::size_t a = 0; a < rdz.images().size() && included; ++a)
        included = beta.image_of(rdz.image(a)).subset_of(rho.image(alpha(a)));
      if (included) report.rep_homs.emplace_back(alpha, beta);
    }
  }

  // Foliation morphisms Z -> Phi_kappa(rho).
  for (const SetMap& beta : oracle::enumerate_morphisms(z.external(), phik.external()))
    if (is_morphism(beta, z.internal(), phik.internal())) report.foliation_homs.push_back(beta);

  auto foliation_homs_contain = [&](const SetMap& beta) {
    for (const SetMap& b : report.foliation_homs)
      if (b.images() == beta.images()) return true;
    return false;
  };

  report.projection_into_foliation_homs = true;
  for (const auto& [alpha, beta] : report.rep_homs)
    if (!foliation_homs_contain(beta)) report.projection_into_foliation_homs = false;

  std::map<std::vector<std::size_t>, std::size_t> lifts;
  for (const auto& [alpha, beta] : report.rep_homs) ++lifts[beta.images()];
  report.beta_determines_alpha = true;
  for (const auto& [images, count] : lifts)
    if (count > 1) report.beta_determines_alpha = false;

  report.every_beta_lifts_once = true;
  for (const SetMap& beta : report.foliation_homs) {
    auto it = lifts.find(beta.images());
    if (it == lifts.end() || it->second != 1) report.every_beta_lifts_once = false;
  }

  report.bijection = report.rep_homs.size() == report.foliation_homs.size();
  return report;
}

std::pair<RepMorphism, RepMorphism> iso_rho_down_g(const Representation& rho) {
  if (!is_distinct(rho))
    throw PreconditionError("iso_rho_down_g: representation is not distinct");
  if (!is_clear(rho)) throw PreconditionError("iso_rho_down_g: representation is not clear");

  Foliation zg = phi(FunctorialStructure::Coarse, FunctorialStructure::Coarse, rho);
  Representation rho_down_g = r_down(zg);
  const std::vector<Subset>& leaf_sets = rho_down_g.images();

  // Distinctness makes a -> rho(a) a bijection onto the leaves of Phi_G.
  std::vector<std::size_t> forward_images(rho.images().size());
  std::vector<std::size_t> backward_images(leaf_sets.size());
  for (std::size_t a = 0; a < rho.images().size(); ++a) {
    std::size_t found = leaf_sets.size();
    for (std::size_t i = 0; i < leaf_sets.size(); ++i)
      if (leaf_sets[i] == rho.image(a)) { found = i; break; }
    if (found == leaf_sets.size())
      throw InvariantViolation("iso_rho_down_g: rho(a) is not a leaf of Phi_G(rho)");
    forward_images[a] = found;
    backward_images[found] = a;
  }

  SetMap alpha(rho.object().ground(), rho_down_g.object().ground(), std::move(forward_images));
  SetMap alpha_inv(rho_down_g.object().ground(), rho.object().ground(),
                   std::move(backward_images));
  SetMap id_sp = SetMap::identity(rho.space().ground());

  RepMorphism forward = validate_rep_morphism(alpha, id_sp, rho, rho_down_g);
  RepMorphism backward = validate_rep_morphism(alpha_inv, id_sp, rho_down_g, rho);

  SetMap round_object = compose(backward.alpha, forward.alpha);
  SetMap round_leaves = compose(forward.alpha, backward.alpha);
  if (!(round_object == SetMap::identity(rho.object().ground())) ||
      !(round_leaves == SetMap::identity(rho_down_g.object().ground())))
    throw InvariantViolation("iso_rho_down_g: composites are not identities");
  return {std::move(forward), std::move(backward)};
}

}  // namespace cnc::foliation
