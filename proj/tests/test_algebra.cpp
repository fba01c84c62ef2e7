#include "rsl/hopf.hpp"
#include "rsl/linalg.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

using namespace rsl;

namespace {

Elem sum(std::initializer_list<std::pair<int, int>> terms, int d) {
  Elem x(d);
  for (auto [a, c] : terms) x[a] += Rational(c);
  return x;
}

bool has_failure(const HopfReport& rep, const std::string& prefix) {
  for (auto& n : rep.failed())
    if (n.rfind(prefix, 0) == 0) return true;
  return false;
}

} // namespace

TEST(Rational, ExactArithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ((a - b) * Rational(6), Rational(1));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  Rational big(1);
  for (int k = 0; k < 80; ++k) big = big * Rational(3);
  EXPECT_FALSE(big.is_small());
  for (int k = 0; k < 80; ++k) big = big / Rational(3);
  EXPECT_EQ(big, Rational(1));
  EXPECT_TRUE(big.is_small());
}

TEST(Laurent, RingOperations) {
  auto A = Laurent::A(1), Ai = Laurent::A(-1);
  EXPECT_EQ(A * Ai, Laurent(1));
  EXPECT_EQ((A + Ai) * (A + Ai), Laurent::A(2) + Laurent(2) + Laurent::A(-2));
  EXPECT_EQ((-Laurent::A(3)).str(), "-A^3");
  EXPECT_EQ(Laurent::A(3).inverse(), Laurent::A(-3));
}

TEST(SolveExact, Examples) {
  auto I = identity<Rational>(3);
  std::vector<Rational> b{Rational(1), Rational(-2), Rational(5, 7)};
  auto r = solve_exact(I, b);
  ASSERT_EQ(r.status, SolveStatus::Unique);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(r.x.at(k, 0), b[k]);

  Matrix<Rational> S({2, 2}, {Rational(1), Rational(1), Rational(1), Rational(1)});
  EXPECT_EQ(solve_exact(S, std::vector<Rational>{Rational(1), Rational(2)}).status, SolveStatus::Inconsistent);
  EXPECT_EQ(solve_exact(S, std::vector<Rational>{Rational(1), Rational(1)}).status, SolveStatus::Underdetermined);
}

TEST(SolveExact, RandomRoundTrip) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> u(-9, 9);
  int solved = 0;
  for (int k = 0; k < 20; ++k) {
    Matrix<Rational> A({5, 5});
    for (auto& x : A.data) x = Rational(u(rng), 1 + (u(rng) + 9) % 4);
    std::vector<Rational> b;
    for (int i = 0; i < 5; ++i) b.push_back(Rational(u(rng)));
    auto r = solve_exact(A, b);
    if (r.status != SolveStatus::Unique) continue;
    ++solved;
    for (int i = 0; i < 5; ++i) {
      Rational s;
      for (int j = 0; j < 5; ++j) s += A.at(i, j) * r.x.at(j, 0);
      EXPECT_EQ(s, b[i]);
    }
  }
  EXPECT_GT(solved, 15);
}

TEST(Hopf, TrivialInstancePasses) {
  auto rep = check_ribbon_hopf(instance_trivial());
  EXPECT_TRUE(rep.ok()) << rep.str();
}

// Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x(x)1 + g(x)x
TEST(Hopf, SweedlerMatchesPresentation) {
  const auto& H = instance_sweedler();
  ASSERT_EQ(H.basis, (std::vector<std::string>{"1", "g", "x", "gx"}));
  int d = 4;
  auto one = H.e(0), g = H.e(1), x = H.e(2), gx = H.e(3);
  EXPECT_EQ(H.mul(g, g), one);
  EXPECT_EQ(H.mul(x, x), Elem(d));
  EXPECT_EQ(H.mul(g, x), gx);
  EXPECT_EQ(H.mul(x, g), sum({{3, -1}}, d));
  Elem dx(d * d);
  dx[2 * d + 0] = Rational(1);
  dx[1 * d + 2] = Rational(1);
  EXPECT_EQ(H.Delta(x), dx);
  EXPECT_EQ(H.eps(g), Rational(1));
  EXPECT_EQ(H.eps(x), Rational(0));
  EXPECT_EQ(H.S(x), sum({{3, -1}}, d));
  auto rep = check_ribbon_hopf(H);
  EXPECT_TRUE(rep.ok()) << rep.str();
  EXPECT_TRUE(is_triangular(H));
}

TEST(Hopf, E2IsNonTriangular) {
  const auto& H = instance_e2();
  EXPECT_EQ(H.dim, 8);
  auto rep = check_ribbon_hopf(H);
  EXPECT_TRUE(rep.ok()) << rep.str();
  EXPECT_FALSE(is_triangular(H));
}

// v = 1 is the ribbon element of this Sweedler instance, so the broken
// variant uses the grouplike g, which is not central.
TEST(Hopf, WrongRibbonElementFails) {
  HopfData H = instance_sweedler();
  H.v = H.e(1);
  H.vinv = H.e(1);
  auto rep = check_ribbon_hopf(H);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(has_failure(rep, "ribbon")) << rep.str();
}

TEST(Hopf, SquaredAntipodeIsPivotConjugation) {
  for (auto* H : {&instance_sweedler(), &instance_e2()}) {
    for (int a = 0; a < H->dim; ++a) {
      auto lhs = H->S(H->S(H->e(a)));
      auto rhs = H->mul(H->mul(H->pivot, H->e(a)), H->pivot_inv);
      EXPECT_EQ(lhs, rhs) << H->name << " " << H->basis[a];
    }
  }
}

// y with h1 y S(h2) = eps(h) y for every h, solved by brute force
TEST(Hopf, AdInvariantSubspaceContainsUnit) {
  const auto& H = instance_sweedler();
  int d = H.dim;
  Matrix<Rational> M({d * d, d});
  for (int a = 0; a < d; ++a) {
    auto D = H.Delta(H.e(a));
    for (int y = 0; y < d; ++y) {
      Elem acc(d);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          auto c = D[p * d + q];
          if (c.is_zero()) continue;
          auto t = H.mul(H.mul(H.e(p), H.e(y)), H.S(H.e(q)));
          for (int r = 0; r < d; ++r) acc[r] += c * t[r];
        }
      acc[y] -= H.counit[a];
      for (int r = 0; r < d; ++r) M.at(a * d + r, y) = acc[r];
    }
  }
  auto ker = nullspace(M);
  EXPECT_GE(ker.size(), 1u);
  Matrix<Rational> one_col({d, 1}, H.unit);
  auto prod = matmul(M, one_col);
  for (auto& x : prod.data) EXPECT_TRUE(x.is_zero());
}

TEST(HopfFile, RoundTrips) {
  std::string dir = ::testing::TempDir();
  for (const HopfData* H : {&instance_sweedler(), &instance_e2()}) {
    std::string path = dir + "/rsl_" + H->name + ".json";
    save_hopf(*H, path);
    auto G = load_hopf(path);
    EXPECT_EQ(G, *H);
    std::remove(path.c_str());
  }
  HopfData T = instance_trivial();
  std::string path = dir + "/rsl_trivial.json";
  save_hopf(T, path);
  EXPECT_EQ(load_hopf(path), T);
  std::remove(path.c_str());
}

TEST(HopfFile, BrokenCoassociativityRejected) {
  auto j = hopf_to_json(instance_sweedler());
  // Delta(x) = x(x)1 + g(x)x gains an x(x)x term
  j["comult"][2][2][2] = "1";
  try {
    hopf_from_json(j);
    FAIL() << "accepted a broken algebra";
  } catch (const HopfLoadError& e) {
    EXPECT_NE(std::string(e.what()).find("coassociativity"), std::string::npos) << e.what();
  }
}

TEST(HopfFile, MalformedRejected) {
  auto j = hopf_to_json(instance_sweedler());
  j["mult"][0].erase(0);
  EXPECT_THROW(hopf_from_json(j), HopfLoadError);
  EXPECT_THROW(load_hopf("/nonexistent/rsl.json"), HopfLoadError);
}
