#include <doctest.h>

#include "cnc/foliation.hpp"
#include "cnc/oracle.hpp"
#include "cnc/separation.hpp"
#include "support.hpp"

using namespace cnc;
using namespace cnc::foliation;
using namespace cnc::representation;
using namespace testsupport;

namespace {

bool same_family(std::vector<Subset> a, std::vector<Subset> b) {
  canonical_sort(a);
  canonical_sort(b);
  return a == b;
}

/// Two leaves {1,2} and {3,4} inside a coarse external structure.
Foliation two_leaf_example() {
  GroundSet g = numbered_ground(4);
  ConnectivitySpace internal(g, {Subset::of({0, 1}), Subset::of({2, 3})}, true);
  ConnectivitySpace external(coarse(4));
  return Foliation(internal, external);
}

std::vector<SetMap> all_foliation_morphisms(const Foliation& z, const Foliation& z2) {
  std::vector<SetMap> out;
  for (const SetMap& f : oracle::enumerate_morphisms(z.external(), z2.external()))
    if (is_morphism(f, z.internal(), z2.internal())) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("foliations require one carrier") {
  CHECK_THROWS_AS(Foliation(borromean3(), path3()), CarrierMismatch);
}

TEST_CASE("leaves of the two-leaf example") {
  auto z = two_leaf_example();
  CHECK(same_family(leaves(z), {Subset::of({0, 1}), Subset::of({2, 3})}));
  CHECK(domain_of(z) == Subset::full(4));
  CHECK(is_regular(z));
}

TEST_CASE("a desintegrated internal structure has no leaves") {
  Foliation z(desintegrated(3), coarse(3));
  CHECK(leaves(z).empty());
  CHECK(domain_of(z).empty());
}

TEST_CASE("a coarse internal structure has one leaf") {
  Foliation z(coarse(3), coarse(3));
  CHECK(same_family(leaves(z), {Subset::full(3)}));
}

TEST_CASE("regularity matches the structure comparison") {
  Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    auto z = random_foliation(rng, 1 + pick(rng, 4));
    auto rel = compare(z.internal(), z.external());
    bool fine = rel == StructureRelation::Equal || rel == StructureRelation::Finer;
    CHECK(is_regular(z) == fine);
  }
  for (int i = 0; i < 20; ++i)
    CHECK(is_regular(random_regular_foliation(rng, 1 + pick(rng, 4))));
}

TEST_CASE("every leaf is internally connected and maximal") {
  Rng rng(62);
  for (int i = 0; i < 30; ++i) {
    auto z = random_foliation(rng, 1 + pick(rng, 5));
    auto m = oracle::closure(z.internal().ground(), z.internal().generators(),
                             z.internal().integral());
    for (Subset leaf : leaves(z)) {
      CHECK(m.contains(leaf));
      for (Subset k : m.kappa)
        CHECK_FALSE((leaf.subset_of(k) && !(leaf == k)));  // nothing connected above a leaf
    }
  }
}

TEST_CASE("identity is a strict foliation morphism") {
  auto z = two_leaf_example();
  SetMap id = SetMap::identity(z.ground());
  CHECK(is_foliation_morphism(id, z, z));
  CHECK(is_strict(id, z, z));
}

TEST_CASE("refining the internal structure gives a morphism that is not strict") {
  auto z2 = two_leaf_example();
  Foliation finer(discrete_integral(4), coarse(4));
  SetMap id = SetMap::identity(finer.ground());
  CHECK(is_foliation_morphism(id, finer, z2));
  CHECK_FALSE(is_strict(id, finer, z2));  // singleton leaves land inside, not onto
}

TEST_CASE("collapsing a leaf into a strictly larger one is not strict") {
  auto z = two_leaf_example();
  Foliation merged(coarse(4), coarse(4));
  SetMap id = SetMap::identity(z.ground());
  CHECK(is_foliation_morphism(id, z, merged));
  CHECK_FALSE(is_strict(id, z, merged));
}

TEST_CASE("induced leaf space of the two-leaf example is the coarse pair") {
  auto ls = induced_leaf_space(two_leaf_example());
  CHECK(ls.leaves.size() == 2);
  CHECK(membership(ls.space, Subset::of({0, 1})));
  CHECK(is_integral_semantically(ls.space));
}

TEST_CASE("a leaf that is not externally connected is a non-connected point") {
  Foliation z(coarse(2), discrete_integral(2));
  auto ls = induced_leaf_space(z);
  REQUIRE(ls.leaves.size() == 1);
  CHECK_FALSE(membership(ls.space, Subset::of({0})));
  CHECK_FALSE(is_integral_semantically(ls.space));
}

TEST_CASE("single-point foliation with integral structures") {
  ConnectivitySpace one(GroundSet({"x"}), {}, true);
  auto ls = induced_leaf_space(Foliation(one, one));
  CHECK(ls.leaves.size() == 1);
  CHECK(is_integral_semantically(ls.space));
}

TEST_CASE("r_down of the two-leaf example is clear and distinct") {
  auto rep = r_down(two_leaf_example());
  CHECK(rep.images().size() == 2);
  CHECK(is_clear(rep));
  CHECK(is_distinct(rep));
  CHECK(is_integral_semantically(rep.object()));  // regular z gives an integral object
}

TEST_CASE("r_down keeps non-connected leaf points") {
  Foliation z(coarse(2), discrete_integral(2));
  auto rep = r_down(z);
  CHECK_FALSE(is_integral_semantically(rep.object()));
}

TEST_CASE("r_down on random regular foliations is clear and distinct with integral object") {
  Rng rng(63);
  for (int i = 0; i < 40; ++i) {
    auto z = random_regular_foliation(rng, 1 + pick(rng, 5));
    auto rep = r_down(z);
    CHECK(is_clear(rep));
    CHECK(is_distinct(rep));
    CHECK(is_integral_semantically(rep.object()));
  }
  for (int i = 0; i < 40; ++i) {
    auto rep = r_down(random_foliation(rng, 1 + pick(rng, 5)));
    CHECK(is_clear(rep));
    CHECK(is_distinct(rep));
  }
}

TEST_CASE("r_down on the identity morphism is the identity pair") {
  auto z = two_leaf_example();
  auto m = r_down_on_morphism(SetMap::identity(z.ground()), z, z);
  CHECK(m.alpha == SetMap::identity(m.alpha.source()));
  CHECK(m.beta == SetMap::identity(z.ground()));
}

TEST_CASE("r_down maps a leaf-merging morphism to the containing leaf") {
  auto z = two_leaf_example();
  Foliation merged(coarse(4), coarse(4));
  auto m = r_down_on_morphism(SetMap::identity(z.ground()), z, merged);
  CHECK(m.alpha.images() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("r_down is functorial on composable morphisms") {
  Rng rng(64);
  int done = 0;
  while (done < 25) {
    std::size_t n = 1 + pick(rng, 3);
    auto z1 = random_regular_foliation(rng, n);
    auto z2 = random_regular_foliation(rng, n);
    auto z3 = random_regular_foliation(rng, n);
    auto fs = all_foliation_morphisms(z1, z2);
    auto gs = all_foliation_morphisms(z2, z3);
    if (fs.empty() || gs.empty()) continue;
    const SetMap& f = fs[pick(rng, fs.size())];
    const SetMap& g = gs[pick(rng, gs.size())];
    auto composite = r_down_on_morphism(compose(g, f), z1, z3);
    auto expected = representation::compose(r_down_on_morphism(g, z2, z3),
                                            r_down_on_morphism(f, z1, z2));
    CHECK(composite.alpha == expected.alpha);
    CHECK(composite.beta == expected.beta);
    ++done;
  }
}

TEST_CASE("phi rejects a decreasing gamma pair") {
  CHECK_THROWS_AS(
      phi(FunctorialStructure::Coarse, FunctorialStructure::Identity, epsilon(borromean3())),
      PreconditionError);
}

TEST_CASE("phi_kappa of epsilon on the Borromean space") {
  auto z = phi(FunctorialStructure::Identity, FunctorialStructure::Identity,
               epsilon(borromean3()));
  CHECK(same_family(materialize_kappa(z.internal()),
                    {Subset(), Subset::of({0}), Subset::of({1}), Subset::of({2})}));
  CHECK(same_family(leaves(z), {Subset::of({0}), Subset::of({1}), Subset::of({2})}));
}

TEST_CASE("phi internal structure matches its definitional closure") {
  Rng rng(65);
  const FunctorialStructure gammas[] = {FunctorialStructure::Desintegrated,
                                        FunctorialStructure::Identity,
                                        FunctorialStructure::Coarse};
  for (int i = 0; i < 40; ++i) {
    std::size_t nx = 1 + pick(rng, 3), ny = 1 + pick(rng, 3);
    auto x = random_space(rng, nx);
    auto y = random_space(rng, ny);
    auto reps = all_representations(x, y);
    if (reps.empty()) continue;
    const auto& rho = reps[pick(rng, reps.size())];
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) {
        auto z = phi(gammas[a], gammas[b], rho);
        // The defining family, materialized: every gamma-connected subset of
        // every image, closed without singletons.
        std::vector<Subset> pieces;
        for (std::size_t p = 0; p < rho.images().size(); ++p) {
          FunctorialStructure gamma =
              membership(x, Subset::single(p)) ? gammas[b] : gammas[a];
          std::uint64_t img = rho.image(p).bits();
          for (std::uint64_t s = img; s; s = (s - 1) & img) {
            bool inside = false;
            switch (gamma) {
              case FunctorialStructure::Desintegrated: inside = false; break;
              case FunctorialStructure::Identity: inside = membership(y, Subset(s)); break;
              case FunctorialStructure::Coarse: inside = true; break;
            }
            if (inside) pieces.push_back(Subset(s));
          }
        }
        auto expected = oracle::closure(y.ground(), pieces, false);
        std::uint64_t full = y.ground().full().bits();
        for (std::uint64_t s = 0;; s = (s - full) & full) {
          CHECK(membership(z.internal(), Subset(s)) == expected.contains(Subset(s)));
          if (s == full) break;
        }
      }
    }
  }
}

TEST_CASE("phi_kappa is always regular") {
  Rng rng(66);
  for (int i = 0; i < 60; ++i) {
    std::size_t nx = 1 + pick(rng, 3), ny = 1 + pick(rng, 3);
    auto reps = all_representations(random_space(rng, nx), random_space(rng, ny));
    if (reps.empty()) continue;
    const auto& rho = reps[pick(rng, reps.size())];
    CHECK(is_regular(phi(FunctorialStructure::Identity, FunctorialStructure::Identity, rho)));
  }
}

TEST_CASE("leaves of phi_kappa of a distinct representation with integral object") {
  Rng rng(67);
  int done = 0;
  while (done < 40) {
    std::size_t nx = 1 + pick(rng, 3), ny = 1 + pick(rng, 4);
    auto x = random_integral_space(rng, nx);
    auto y = random_space(rng, ny);
    auto reps = all_representations(x, y);
    std::vector<Representation> distinct;
    for (const auto& r : reps)
      if (is_distinct(r)) distinct.push_back(r);
    if (distinct.empty()) continue;
    const auto& rho = distinct[pick(rng, distinct.size())];
    auto z = phi(FunctorialStructure::Identity, FunctorialStructure::Identity, rho);
    std::vector<Subset> expected = rho.images();
    CHECK(same_family(leaves(z), expected));
    ++done;
  }
}

TEST_CASE("phi works over a delegated space") {
  // Representations into predicate-backed structures arise from devices.
  GroundSet g({"1", "2", "3"});
  separation::SeparationDevice device(
      g, {{Subset::of({0}), Subset::of({1})},
          {Subset::of({0}), Subset::of({2})},
          {Subset::of({1}), Subset::of({2})}});
  auto delegated_b3 = separation::structure_of_device(device);
  auto rho = epsilon(delegated_b3);
  auto z = phi(FunctorialStructure::Identity, FunctorialStructure::Identity, rho);
  CHECK(same_family(leaves(z), {Subset::of({0}), Subset::of({1}), Subset::of({2})}));
  CHECK(is_regular(z));
}

TEST_CASE("phi is functorial: beta carries representation morphisms to foliations") {
  Rng rng(68);
  const FunctorialStructure gammas[] = {FunctorialStructure::Desintegrated,
                                        FunctorialStructure::Identity,
                                        FunctorialStructure::Coarse};
  int done = 0;
  while (done < 20) {
    std::size_t n = 1 + pick(rng, 2);
    auto x1 = random_space(rng, n);
    auto y1 = random_space(rng, 1 + pick(rng, 2));
    auto x2 = random_space(rng, 1 + pick(rng, 2));
    auto y2 = random_space(rng, 1 + pick(rng, 2));
    auto reps1 = all_representations(x1, y1);
    auto reps2 = all_representations(x2, y2);
    if (reps1.empty() || reps2.empty()) continue;
    const auto& rho = reps1[pick(rng, reps1.size())];
    const auto& rho2 = reps2[pick(rng, reps2.size())];
    bool any = false;
    for (const SetMap& alpha : oracle::enumerate_morphisms(rho.object(), rho2.object())) {
      for (const SetMap& beta : oracle::enumerate_morphisms(rho.space(), rho2.space())) {
        if (!is_rep_morphism(alpha, beta, rho, rho2)) continue;
        any = true;
        for (int a = 0; a < 3; ++a)
          for (int b = a; b < 3; ++b)
            CHECK(is_foliation_morphism(beta, phi(gammas[a], gammas[b], rho),
                                        phi(gammas[a], gammas[b], rho2)));
      }
    }
    if (any) ++done;
  }
}

TEST_CASE("adjunction on the two-leaf example against epsilon on the coarse pair") {
  auto report = check_adjunction(two_leaf_example(), epsilon(coarse(2)));
  CHECK(report.ok());
  CHECK(report.rep_homs.size() == report.foliation_homs.size());
  CHECK(report.foliation_homs.size() == 4);  // enumerated: one beta per choice of leaf values
}

TEST_CASE("adjunction on the one-point instance") {
  ConnectivitySpace one(GroundSet({"x"}), {}, true);
  auto report = check_adjunction(Foliation(one, one), epsilon(one));
  CHECK(report.ok());
  CHECK(report.rep_homs.size() == 1);
  CHECK(report.foliation_homs.size() == 1);
}

TEST_CASE("adjunction preconditions") {
  auto z = two_leaf_example();
  Foliation irregular(coarse(2), discrete_integral(2));
  CHECK_THROWS_AS(check_adjunction(irregular, epsilon(coarse(2))), PreconditionError);
  auto constant = Representation::validate(
      coarse(2), coarse(2), {Subset::of({0, 1}), Subset::of({0, 1})});
  CHECK_THROWS_AS(check_adjunction(z, constant), PreconditionError);
}

TEST_CASE("adjunction holds on random regular instances") {
  Rng rng(69);
  int done = 0;
  while (done < 30) {
    auto z = random_regular_foliation(rng, 1 + pick(rng, 3));
    auto x = random_integral_space(rng, 1 + pick(rng, 3));
    auto rho = canonical_representation(x);
    auto report = check_adjunction(z, rho);
    CHECK(report.ok());
    ++done;
  }
}

TEST_CASE("iso_rho_down_g on epsilon of the Borromean space") {
  auto [fwd, bwd] = iso_rho_down_g(epsilon(borromean3()));
  CHECK(compose(bwd.alpha, fwd.alpha) == SetMap::identity(fwd.alpha.source()));
  CHECK(fwd.beta == SetMap::identity(borromean3().ground()));
}

TEST_CASE("iso_rho_down_g on canonical representations of random spaces") {
  Rng rng(70);
  for (int i = 0; i < 40; ++i) {
    auto x = random_space(rng, 1 + pick(rng, 4));
    auto rho = canonical_representation(x);
    CHECK_NOTHROW(iso_rho_down_g(rho));
  }
}

TEST_CASE("a foliation with no leaves yields the empty representation") {
  Foliation z(desintegrated(3), coarse(3));
  CHECK(is_regular(z));
  auto rep = r_down(z);
  CHECK(rep.object().size() == 0);
  CHECK(rep.images().empty());
  CHECK(is_clear(rep));
  CHECK(is_distinct(rep));
  // The adjunction instance still makes sense: one empty alpha per beta.
  ConnectivitySpace one(GroundSet({"x"}), {}, true);
  auto report = check_adjunction(z, epsilon(one));
  CHECK(report.ok());
  CHECK(report.foliation_homs.size() == 1);  // the constant map is the only candidate
}

TEST_CASE("iso_rho_down_g rejects a non-distinct representation") {
  auto constant = Representation::validate(
      coarse(2), coarse(2), {Subset::of({0, 1}), Subset::of({0, 1})});
  CHECK_THROWS_AS(iso_rho_down_g(constant), PreconditionError);
}
