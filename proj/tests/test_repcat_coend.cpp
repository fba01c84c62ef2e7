#include "rsl/suites.hpp"

#include <gtest/gtest.h>

using namespace rsl;

namespace {

Rational trace(const Matrix<Rational>& m) {
  Rational t;
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

Matrix<Rational> id(int n) { return identity<Rational>(n); }

} // namespace

TEST(Reps, DualTensorAndRegular) {
  for (auto* H : {&instance_sweedler(), &instance_e2()}) {
    auto one = trivial_rep(*H);
    EXPECT_TRUE(check_module(*H, one));
    auto od = dual_rep(*H, one);
    for (int a = 0; a < H->dim; ++a) EXPECT_EQ(od.rho[a], one.rho[a]);
    auto R = regular_rep(*H);
    EXPECT_EQ(R.dim, H->dim);
    EXPECT_TRUE(check_module(*H, R));
    EXPECT_EQ(tensor_rep(*H, R, one).dim, H->dim);
    EXPECT_EQ(tensor_rep(*H, one, dual_rep(*H, R)).dim, H->dim);
  }
  const auto& S = instance_sweedler();
  auto R = regular_rep(S);
  EXPECT_EQ(tensor_rep(S, R, R).dim, 16);
  auto Ind = induced_rep(S, S.e(1));
  EXPECT_TRUE(check_module(S, Ind));
}

TEST(Reps, ModuleCheckRejectsWrongAction) {
  const auto& S = instance_sweedler();
  auto R = regular_rep(S);
  R.rho[1] = scale(R.rho[1], Rational(2));
  EXPECT_FALSE(check_module(S, R));
}

// (c (x) 1)(1 (x) c)(c (x) 1) = (1 (x) c)(c (x) 1)(1 (x) c) on X (x) X (x) X
TEST(Braiding, YangBaxterAndInverse) {
  const auto& S = instance_sweedler();
  auto X = regular_rep(S);
  int n = X.dim;
  auto c = braiding(S, X, X);
  EXPECT_EQ(matmul(c, braiding_inv(S, X, X)), id(n * n));
  auto c1 = kron(c, id(n)), c2 = kron(id(n), c);
  EXPECT_EQ(matmul(c1, matmul(c2, c1)), matmul(c2, matmul(c1, c2)));
}

TEST(Braiding, IsAModuleMap) {
  const auto& H = instance_e2();
  auto X = regular_rep(H), one = trivial_rep(H);
  auto XY = tensor_rep(H, X, one), YX = tensor_rep(H, one, X);
  auto c = braiding(H, X, one);
  for (int a = 0; a < H.dim; ++a) EXPECT_EQ(matmul(c, XY.rho[a]), matmul(YX.rho[a], c));
}

TEST(Evaluate, IdentityAndReidemeisterTwo) {
  for (auto* H : {&instance_sweedler(), &instance_e2()}) {
    HopfModel M(*H, {regular_rep(*H)});
    EXPECT_EQ(rt_evaluate(M, identity_link(1), {0}), id(H->dim));
    auto r2 = validate({xpos(0), xneg(0)}, DiagramType::StringLink, 2);
    EXPECT_EQ(rt_evaluate(M, r2, {0, 0}), id(H->dim * H->dim));
  }
}

TEST(Evaluate, LeftTwistEqualsRightTwist) {
  for (auto* H : {&instance_sweedler(), &instance_e2()}) {
    auto X = regular_rep(*H);
    EXPECT_EQ(kink_value(*H, X, true), kink_value(*H, X, false)) << H->name;
    EXPECT_EQ(kink_value(*H, X, true), twist(*H, X)) << H->name;
    EXPECT_EQ(kink_value(*H, X, true, false), act(X, H->v)) << H->name;
    EXPECT_NO_THROW(assert_twist_convention(*H, X));
  }
}

// a closed loop is the pivotal trace of the identity
TEST(Evaluate, ClosedLoopIsQuantumDimension) {
  const auto& S = instance_sweedler();
  for (auto X : {trivial_rep(S), regular_rep(S), induced_rep(S, S.e(1))}) {
    HopfModel M(S, {X});
    auto loop = validate({cup(0, 'l'), cap(0, 'l')}, DiagramType::Tangle, 0);
    auto v = rt_evaluate(M, loop, {0});
    ASSERT_EQ(v.rows(), 1);
    auto q = trace(act(X, S.pivot)), qi = trace(act(X, S.pivot_inv));
    EXPECT_TRUE(v.at(0, 0) == q || v.at(0, 0) == qi) << X.name << " " << v.at(0, 0).str();
  }
}

TEST(Kauffman, LoopKinkAndReidemeister) {
  KauffmanModel K;
  auto loop = validate({cup(0, 'l'), cap(0, 'l')}, DiagramType::Tangle, 0);
  EXPECT_EQ(rt_evaluate(K, loop, {0}).at(0, 0), -Laurent::A(2) - Laurent::A(-2));
  auto r2 = validate({xneg(0), xpos(0)}, DiagramType::StringLink, 2);
  EXPECT_EQ(bracket(r2), identity<Laurent>(4));
  std::vector<int> up3{1, 1, 1};
  auto l = validate({xneg(0), xpos(1), xpos(0)}, DiagramType::Tangle, 3, up3);
  auto r = validate({xpos(1), xpos(0), xneg(1)}, DiagramType::Tangle, 3, up3);
  EXPECT_EQ(bracket(l), bracket(r));
}

TEST(Coend, AllChecksPass) {
  for (const HopfData* H : {&instance_sweedler(), &instance_e2()}) {
    const auto& C = coend_of(*H);
    EXPECT_EQ(C.d, H->dim);
    auto rep = check_coend(C, 20, 3);
    EXPECT_TRUE(rep.ok()) << H->name << "\n" << rep.str();
  }
  HopfData T = instance_trivial();
  auto rep = check_coend(coend_build(T), 5, 1);
  EXPECT_TRUE(rep.ok()) << rep.str();
}

TEST(Coend, AntipodeSquaredIsTwist) {
  for (const HopfData* H : {&instance_sweedler(), &instance_e2()}) {
    const auto& C = coend_of(*H);
    EXPECT_EQ(matmul(C.S, C.S), C.theta);
    EXPECT_EQ(matmul(C.theta, C.theta_inv), id(C.d));
    EXPECT_EQ(matmul(C.cFF, C.cFF_inv), id(C.d * C.d));
  }
}

TEST(Coend, DinaturalityOnTwentyMaps) {
  int tried = 0;
  EXPECT_TRUE(check_dinaturality_random(instance_sweedler(), 20, 11, &tried));
  EXPECT_EQ(tried, 20);
}

TEST(Coend, DinaturalityRejectsNonModuleMap) {
  const auto& S = instance_sweedler();
  auto R = regular_rep(S);
  Matrix<Rational> f({R.dim, R.dim});
  f.at(0, 2) = Rational(1);
  EXPECT_FALSE(check_dinaturality(S, R, R, f));
}

TEST(Coend, UnitIsCoactionOfTrivialAndCoactionMultiplies) {
  const auto& S = instance_sweedler();
  const auto& C = coend_of(S);
  EXPECT_EQ(universal_coaction(S, trivial_rep(S)), C.unit);
  auto R = regular_rep(S);
  EXPECT_TRUE(check_coaction_multiplicative(C, R, R));
  EXPECT_TRUE(check_coaction_multiplicative(C, R, induced_rep(S, S.e(1))));
}

TEST(Coend, SuiteWithTwistedCyclicity) {
  auto rep = run_coend_suite(instance_sweedler(), 20, 5, 2);
  EXPECT_TRUE(rep.ok()) << rep.to_json().dump(1);
  EXPECT_GT(rep.checked, 15);
}
