#include "rsl/suites.hpp"

#include <gtest/gtest.h>

using namespace rsl;

namespace {

const CoendData& sw() { return coend_of(instance_sweedler()); }
const CoendData& e2() { return coend_of(instance_e2()); }

std::vector<SlicedDiagram> samples(std::uint64_t seed, int count, int n_max, int crossings, int extra) {
  Rng rng(seed);
  RandomLinkOptions ro;
  ro.max_crossings = crossings;
  ro.max_extra_width = extra;
  std::vector<SlicedDiagram> out;
  for (int k = 0; k < count; ++k) out.push_back(random_string_link(rng, 1 + k % n_max, ro));
  return out;
}

SlicedDiagram sl(std::vector<Event> ev, int n) { return validate(ev, DiagramType::StringLink, n); }

} // namespace

TEST(Phi, IdentityIsConvolutionUnit) {
  for (auto* C : {&sw(), &e2()})
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(phi(*C, identity_link(n)), conv_identity(*C, n));
}

// with v = 1 and R21 R = 1 a kink is invisible
TEST(Phi, KinkOverTriangularAlgebra) {
  auto kp = sl(kink(true, true, 0, true), 1), kn = sl(kink(false, true, 0, true), 1);
  EXPECT_EQ(phi(sw(), kp), conv_identity(sw(), 1));
  EXPECT_EQ(phi(sw(), kn), conv_identity(sw(), 1));
  EXPECT_NE(phi(e2(), kp), conv_identity(e2(), 1));
  EXPECT_NE(phi(e2(), kp), phi(e2(), kn));
}

TEST(Phi, SeparatesClaspOverE2) {
  auto clasp = sl({xpos(0), xpos(0)}, 2);
  EXPECT_NE(phi(e2(), clasp), phi(e2(), identity_link(2)));
}

TEST(Phi, LiteralRouteEqualsFastRoute) {
  for (auto& T : samples(41, 30, 2, 6, 1))
    EXPECT_EQ(phi(sw(), T, PhiRoute::Literal), phi(sw(), T, PhiRoute::Fast)) << print_diagram(T);
  for (auto& T : samples(43, 6, 2, 4, 0))
    EXPECT_EQ(phi(e2(), T, PhiRoute::Literal), phi(e2(), T, PhiRoute::Fast)) << print_diagram(T);
}

TEST(Phi, ValuesAreAdInvariant) {
  for (auto& T : samples(47, 20, 2, 6, 1)) EXPECT_TRUE(check_ad_invariant(sw(), phi(sw(), T)));
  for (auto& T : samples(53, 4, 2, 4, 0)) EXPECT_TRUE(check_ad_invariant(e2(), phi(e2(), T)));
}

TEST(Convolution, UnitAndAssociativity) {
  auto ts = samples(59, 12, 1, 6, 1);
  for (std::size_t k = 0; k + 2 < ts.size(); k += 3) {
    auto f = phi(sw(), ts[k]), g = phi(sw(), ts[k + 1]), h = phi(sw(), ts[k + 2]);
    auto id = conv_identity(sw(), 1);
    EXPECT_EQ(convolution(sw(), f, id), f);
    EXPECT_EQ(convolution(sw(), id, f), f);
    EXPECT_EQ(convolution(sw(), convolution(sw(), f, g), h), convolution(sw(), f, convolution(sw(), g, h)));
  }
  EXPECT_THROW(convolution(sw(), conv_identity(sw(), 1), conv_identity(sw(), 2)), ArityError);
}

TEST(Functoriality, FiftyPairs) {
  auto rep = run_functoriality(sw(), 50, 61, 6, 2);
  EXPECT_TRUE(rep.ok()) << rep.to_json().dump(1);
  EXPECT_GE(rep.checked, 100);
  auto r2 = run_functoriality(e2(), 6, 67, 4, 1);
  EXPECT_TRUE(r2.ok()) << r2.to_json().dump(1);
}

TEST(AlgebraicOps, SimplicialIdentities) {
  for (auto& T : samples(71, 10, 2, 6, 1)) {
    auto f = phi(sw(), T);
    for (int i = 0; i <= f.n; ++i) {
      auto g = alg_coface(sw(), f, i);
      EXPECT_EQ(g.n, f.n + 1);
      if (i < f.n) {
        EXPECT_EQ(alg_codegeneracy(sw(), g, i), f);
      }
      if (i > 0) {
        EXPECT_EQ(alg_codegeneracy(sw(), g, i - 1), f);
      }
    }
    EXPECT_EQ(alg_cocyclic_inv(sw(), alg_cocyclic(sw(), f)), f);
    for (int j = 0; j < f.n; ++j) EXPECT_EQ(alg_face(sw(), alg_degeneracy(sw(), f, j), j), f);
  }
  EXPECT_THROW(alg_coface(sw(), conv_identity(sw(), 1), 3), std::out_of_range);
  EXPECT_THROW(alg_codegeneracy(sw(), conv_identity(sw(), 1), 0), ArityError);
}

TEST(AlgebraicOps, RelationSuite) {
  SuiteOptions o;
  o.max_level = 2;
  auto rep = run_algebraic_relations(sw(), o, 3);
  EXPECT_TRUE(rep.ok()) << rep.to_json().dump(1);
}

TEST(TwistedCyclicity, UpToTwoStrands) {
  for (int n = 0; n <= 2; ++n) {
    EXPECT_TRUE(check_twisted_cyclicity(sw(), n)) << n;
    EXPECT_TRUE(check_twisted_cyclicity(e2(), n)) << n;
  }
}

TEST(PhiCompatibility, GeometricMatchesAlgebraicSmall) {
  auto rep = check_phi_compatibility(sw(), 2, 12, 73, 6);
  EXPECT_TRUE(rep.ok()) << rep.to_json().dump(1);
  EXPECT_GT(rep.checked, 50);
}

TEST(HandleRotation, FramedIdentityAndRandom) {
  for (auto* H : {&instance_sweedler(), &instance_e2()}) {
    auto r = handle_rotation_check(*H, frame_f(identity_link(2)));
    EXPECT_TRUE(r.ok()) << H->name;
  }
  auto rep = run_handle_rotation(instance_sweedler(), 10, 79);
  EXPECT_TRUE(rep.ok()) << rep.to_json().dump(1);
  auto r2 = run_handle_rotation(instance_e2(), 4, 83, 3);
  EXPECT_TRUE(r2.ok()) << r2.to_json().dump(1);
}
