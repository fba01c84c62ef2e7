#include "rsl/cyclic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rsl;

namespace {

// A morphism n -> m of the cyclic category as a non-decreasing map Z -> Z with
// f(x + n + 1) = f(x) + m + 1, up to translation by multiples of m + 1.
struct ZMap {
  int src = 0, tgt = 0;
  std::vector<long> v;  // f(0..src)

  long operator()(long x) const {
    long p = src + 1;
    long q = x >= 0 ? x / p : -((-x + p - 1) / p);
    return v[x - q * p] + q * (tgt + 1);
  }
  // canonical representative: f(0) in [0, tgt]
  ZMap canonical() const {
    ZMap c = *this;
    long p = tgt + 1;
    long q = v[0] >= 0 ? v[0] / p : -((-v[0] + p - 1) / p);
    for (auto& y : c.v) y -= q * p;
    return c;
  }
  bool operator==(const ZMap& o) const {
    auto a = canonical(), b = o.canonical();
    return a.src == b.src && a.tgt == b.tgt && a.v == b.v;
  }
};

ZMap zmap_of(const Token& t) {
  ZMap f;
  f.src = t.src();
  f.tgt = t.tgt();
  for (int x = 0; x <= f.src; ++x) {
    switch (t.g) {
      case Gen::Coface: f.v.push_back(x < t.idx ? x : x + 1); break;
      case Gen::Codegeneracy: f.v.push_back(x <= t.idx ? x : x - 1); break;
      case Gen::Cocyclic: f.v.push_back(x - 1); break;
      case Gen::CocyclicInv: f.v.push_back(x + 1); break;
      default: ADD_FAILURE() << "not a cyclic-category generator";
    }
  }
  return f;
}

// word [a, b, c] is a after b after c
ZMap zmap_of(const GeneratorWord& w, int level) {
  ZMap f;
  f.src = f.tgt = level;
  for (int x = 0; x <= level; ++x) f.v.push_back(x);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    ZMap g = zmap_of(*it);
    ZMap h;
    h.src = f.src;
    h.tgt = g.tgt;
    for (int x = 0; x <= f.src; ++x) h.v.push_back(g(f.v[x]));
    f = h;
  }
  return f;
}

GeneratorWord random_word(std::mt19937_64& rng, int src, int len, int max_level) {
  std::vector<Token> applied;
  int lvl = src;
  for (int k = 0; k < len; ++k) {
    std::vector<Token> opts;
    if (lvl + 1 <= max_level)
      for (int i = 0; i <= lvl + 1; ++i) opts.push_back(coface(i, lvl + 1));
    if (lvl >= 1)
      for (int j = 0; j < lvl; ++j) opts.push_back(codegeneracy(j, lvl - 1));
    opts.push_back(cocyclic(lvl));
    opts.push_back(cocyclic_inv(lvl));
    Token t = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
    applied.push_back(t);
    lvl = t.tgt();
  }
  return GeneratorWord(applied.rbegin(), applied.rend());
}

int word_src(const GeneratorWord& w, int level_if_empty) { return w.empty() ? level_if_empty : w.back().src(); }

} // namespace

TEST(Normalize, TauPowerIsIdentity) {
  auto m = normalize({cocyclic(2), cocyclic(2), cocyclic(2)});
  EXPECT_EQ(m, CyclicMor::identity(2));
}

TEST(Normalize, CodegeneracyAfterCofaceIsIdentity) {
  EXPECT_EQ(normalize({codegeneracy(0, 0), coface(0, 1)}), CyclicMor::identity(0));
}

TEST(Normalize, CofaceRelationAtZeroOne) {
  EXPECT_EQ(normalize({coface(1, 2), coface(0, 1)}), normalize({coface(0, 2), coface(0, 1)}));
}

TEST(Normalize, NonComposableWordThrows) {
  EXPECT_THROW(normalize({coface(0, 2), coface(0, 3)}), CompositionError);
}

TEST(Compose, Examples) {
  auto id3 = CyclicMor::identity(3);
  EXPECT_EQ(compose(id3, id3), id3);
  auto t1 = normalize({cocyclic(1)});
  EXPECT_EQ(compose(t1, t1), CyclicMor::identity(1));
  auto d = normalize({coface(0, 1)});
  EXPECT_EQ(compose(d, compose(normalize({codegeneracy(0, 0)}), d)), d);
  EXPECT_THROW(compose(id3, CyclicMor::identity(2)), CompositionError);
}

// Hom(0,1) of the cyclic category is Hom_Delta(0,1) x Aut(0): two morphisms.
TEST(Compose, AllMapsZeroToOne) {
  std::set<std::string> seen;
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    auto w = random_word(rng, 0, 1 + k % 5, 2);
    if (word_src(w, 0) != 0 || w.front().tgt() != 1) continue;
    seen.insert(normalize(w).str());
  }
  EXPECT_EQ(seen.size(), 2u);
}

TEST(Normalize, AgreesWithIntegerModel) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 400; ++k) {
    int src = static_cast<int>(rng() % 3);
    auto a = random_word(rng, src, 1 + static_cast<int>(rng() % 6), 3);
    auto b = random_word(rng, src, 1 + static_cast<int>(rng() % 6), 3);
    auto na = normalize(a), nb = normalize(b);
    ZMap za = zmap_of(a, src), zb = zmap_of(b, src);
    EXPECT_EQ(zmap_of(na.word(), src), za) << word_str(a);
    if (na.tgt() == nb.tgt()) {
      EXPECT_EQ(na == nb, za == zb) << word_str(a) << " vs " << word_str(b);
    }
  }
}

TEST(Normalize, Idempotent) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    int src = static_cast<int>(rng() % 3);
    auto w = random_word(rng, src, 1 + static_cast<int>(rng() % 7), 3);
    auto m = normalize(w);
    EXPECT_EQ(normalize(m.word(), m.src()), m);
  }
}

TEST(Relations, AllInstancesHoldInIntegerModel) {
  auto rels = cocyclic_relations(3);
  ASSERT_FALSE(rels.empty());
  for (auto& r : rels) {
    EXPECT_EQ(zmap_of(r.lhs, r.src_level), zmap_of(r.rhs, r.src_level)) << r.id();
    EXPECT_EQ(normalize(r.lhs, r.src_level), normalize(r.rhs, r.src_level)) << r.id();
  }
}

TEST(Relations, CyclicInstancesAreOppositesOfCocyclic) {
  auto rels = cyclic_relations(3);
  ASSERT_FALSE(rels.empty());
  for (auto& r : rels) {
    // the opposite word lives in the cyclic category
    auto l = op_word(r.lhs), rr = op_word(r.rhs);
    int lvl = l.empty() ? r.src_level : l.back().src();
    int lvl2 = rr.empty() ? r.src_level : rr.back().src();
    EXPECT_EQ(lvl, lvl2) << r.id();
    EXPECT_EQ(normalize(l, lvl), normalize(rr, lvl2)) << r.id();
  }
}

TEST(DualL, Examples) {
  EXPECT_EQ(word_str(dual_L(degeneracy(1, 3))), word_str({coface(2, 4)}));
  EXPECT_EQ(normalize(dual_L(cyclic_op(2))), normalize({cocyclic(2), cocyclic(2)}));
  EXPECT_EQ(word_str(dual_L(face(3, 3))), word_str({codegeneracy(0, 2), cocyclic_inv(3)}));
}

TEST(DualL, IsAFunctorOnRelations) {
  // L sends every cyclic relation to an identity of the cyclic category
  for (auto& r : cyclic_relations(3)) {
    auto l = dual_L(r.lhs), rr = dual_L(r.rhs);
    int s = r.src_level;
    EXPECT_EQ(zmap_of(l, s), zmap_of(rr, s)) << r.id();
  }
}

TEST(CheckRelations, SingletonCarrierPasses) {
  CocyclicImpl<int> impl;
  impl.coface = [](const int&, int, int) { return 0; };
  impl.codegeneracy = [](const int&, int, int) { return 0; };
  impl.cocyclic = [](const int&, int) { return 0; };
  auto rep = check_relations<CocyclicImpl<int>, int>(
      impl, cocyclic_relations(3), [](int) { return std::vector<int>{0}; },
      [](const int& a, const int& b) { return a == b; });
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.checked, 0);
}

// Carrier: integer weights on [n], pushed forward along the underlying maps.
TEST(CheckRelations, PrecompositionCarrierPasses) {
  using V = std::vector<long>;
  CocyclicImpl<V> impl;
  auto pre = [](const V& x, const Token& t) {
    ZMap f = zmap_of(t);
    V y;
    for (int k = 0; k <= f.tgt; ++k) y.push_back(0);
    // pushforward of a function on [src] along f (sum over fibres), period-reduced
    for (int k = 0; k <= f.src; ++k) {
      long p = f.tgt + 1;
      long z = ((f.v[k] % p) + p) % p;
      y[z] += x[k];
    }
    return y;
  };
  impl.coface = [&](const V& x, int i, int n) { return pre(x, coface(i, n)); };
  impl.codegeneracy = [&](const V& x, int j, int n) { return pre(x, codegeneracy(j, n)); };
  impl.cocyclic = [&](const V& x, int n) { return pre(x, cocyclic(n)); };
  std::mt19937_64 rng(1);
  auto rep = check_relations<CocyclicImpl<V>, V>(
      impl, cocyclic_relations(3),
      [&](int level) {
        std::vector<V> out;
        for (int s = 0; s < 5; ++s) {
          V x;
          for (int k = 0; k <= level; ++k) x.push_back(static_cast<long>(rng() % 7) - 3);
          out.push_back(x);
        }
        return out;
      },
      [](const V& a, const V& b) { return a == b; });
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0].relation);
}

TEST(Act, IdentityAndUnitRelation) {
  CocyclicImpl<std::string> impl;
  impl.coface = [](const std::string& x, int i, int n) { return x + "d" + std::to_string(i) + std::to_string(n); };
  impl.codegeneracy = [](const std::string& x, int j, int n) { return x + "s" + std::to_string(j) + std::to_string(n); };
  impl.cocyclic = [](const std::string& x, int n) { return x + "t" + std::to_string(n); };
  EXPECT_EQ(act(impl, CyclicMor::identity(2), std::string("x")), "x");
  EXPECT_EQ(act(impl, normalize({codegeneracy(0, 0), coface(0, 1)}), std::string("x")), "x");
}
