#pragma once

#include "rsl/linalg.hpp"
#include "rsl/tensor.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace rsl {

using Elem = std::vector<Rational>;

inline std::size_t ipow(int d, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(d);
  return r;
}

// Finite-dimensional ribbon Hopf algebra given by structure constants.
//   mult(a,b,c):   e_a e_b = sum_c mult(a,b,c) e_c
//   comult(a,b,c): Delta(e_a) = sum_{b,c} comult(a,b,c) e_b (x) e_c
//   antipode(a,b): S(e_a) = sum_b antipode(a,b) e_b
//   R(a,b):        R = sum R(a,b) e_a (x) e_b
struct HopfData {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  Elem unit, counit, v, vinv;
  Tensor<Rational> mult, comult;
  Matrix<Rational> antipode, R, Rinv;

  // derived by derive()
  Elem drinfeld, pivot, pivot_inv;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> prod;  // prod[a][b] = e_a e_b
  Matrix<Rational> Mmat;  // d x d^2
  Matrix<Rational> Dmat;  // d^2 x d
  Matrix<Rational> Smat;  // d x d, column a = S(e_a)

  bool operator==(const HopfData& o) const {
    return dim == o.dim && basis == o.basis && unit == o.unit && counit == o.counit && v == o.v && vinv == o.vinv &&
           mult == o.mult && comult == o.comult && antipode == o.antipode && R == o.R && Rinv == o.Rinv;
  }

  Elem e(int a) const {
    Elem x(dim);
    x[a] = Rational(1);
    return x;
  }
  Elem one() const { return unit; }

  Elem mul(const Elem& x, const Elem& y) const { return mulk(x, y, 1); }

  // slotwise product in H^{(x)k}
  Elem mulk(const Elem& x, const Elem& y, int k) const {
    std::size_t N = ipow(dim, k);
    Elem out(N);
    std::vector<int> ia(k), ib(k);
    std::vector<std::pair<std::size_t, Rational>> acc, nxt;
    for (std::size_t i = 0; i < N; ++i) {
      if (x[i].is_zero()) continue;
      std::size_t t = i;
      for (int s = k - 1; s >= 0; --s) {
        ia[s] = static_cast<int>(t % dim);
        t /= dim;
      }
      for (std::size_t j = 0; j < N; ++j) {
        if (y[j].is_zero()) continue;
        std::size_t u = j;
        for (int s = k - 1; s >= 0; --s) {
          ib[s] = static_cast<int>(u % dim);
          u /= dim;
        }
        acc.assign(1, {0, x[i] * y[j]});
        for (int s = 0; s < k && !acc.empty(); ++s) {
          nxt.clear();
          for (auto& [idx, c] : acc)
            for (auto& [cc, m] : prod[ia[s]][ib[s]]) nxt.emplace_back(idx * dim + cc, c * m);
          std::swap(acc, nxt);
        }
        for (auto& [idx, c] : acc) out[idx] += c;
      }
    }
    return out;
  }

  Elem S(const Elem& x) const { return apply(Smat, x); }
  Rational eps(const Elem& x) const {
    Rational r;
    for (int a = 0; a < dim; ++a)
      if (!x[a].is_zero()) r.add_mul(x[a], counit[a]);
    return r;
  }
  Elem Delta(const Elem& x) const { return apply(Dmat, x); }

  static Elem apply(const Matrix<Rational>& m, const Elem& x) {
    Elem y(m.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero() && !x[j].is_zero()) y[i].add_mul(m.at(i, j), x[j]);
    return y;
  }

  // left multiplication matrix of x
  Matrix<Rational> left_mult(const Elem& x) const {
    Matrix<Rational> L({dim, dim});
    for (int b = 0; b < dim; ++b) {
      auto col = mul(x, e(b));
      for (int c = 0; c < dim; ++c) L.at(c, b) = col[c];
    }
    return L;
  }

  std::optional<Elem> inverse(const Elem& x) const {
    auto res = solve_exact(left_mult(x), unit);
    if (res.status != SolveStatus::Unique) return std::nullopt;
    Elem y(dim);
    for (int i = 0; i < dim; ++i) y[i] = res.x.at(i, 0);
    if (mul(y, x) != unit) return std::nullopt;
    return y;
  }

  Elem R_elem() const { return R.data; }
  Elem Rinv_elem() const { return Rinv.data; }

  void derive();
};

// flip of an element of H (x) H
inline Elem flip2(const Elem& x, int d) {
  Elem y(x.size());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) y[b * d + a] = x[a * d + b];
  return y;
}

// embeds an element of H (x) H into H^{(x)3} at the given slots
inline Elem embed2(const Elem& x, int d, int s0, int s1, const Elem& unit) {
  Elem y(ipow(d, 3));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (x[a * d + b].is_zero()) continue;
      for (int c = 0; c < d; ++c) {
        if (unit[c].is_zero()) continue;
        int idx[3];
        idx[s0] = a;
        idx[s1] = b;
        idx[3 - s0 - s1] = c;
        y[(idx[0] * d + idx[1]) * d + idx[2]] += x[a * d + b] * unit[c];
      }
    }
  return y;
}

inline void HopfData::derive() {
  int d = dim;
  prod.assign(d, std::vector<std::vector<std::pair<int, Rational>>>(d));
  Mmat = Matrix<Rational>({d, d * d});
  Dmat = Matrix<Rational>({d * d, d});
  Smat = Matrix<Rational>({d, d});
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        const Rational& m = mult[(static_cast<std::size_t>(a) * d + b) * d + c];
        if (!m.is_zero()) {
          prod[a][b].emplace_back(c, m);
          Mmat.at(c, a * d + b) = m;
        }
        const Rational& k = comult[(static_cast<std::size_t>(a) * d + b) * d + c];
        if (!k.is_zero()) Dmat.at(b * d + c, a) = k;
      }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) Smat.at(b, a) = antipode.at(a, b);
  // Drinfeld element u = sum S(R2) R1
  drinfeld.assign(d, Rational());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (R.at(a, b).is_zero()) continue;
      auto t = mul(S(e(b)), e(a));
      for (int c = 0; c < d; ++c) drinfeld[c] += R.at(a, b) * t[c];
    }
  pivot = mul(drinfeld, vinv);
  auto pi = inverse(pivot);
  pivot_inv = pi ? *pi : Elem(d);
}

// ---------------------------------------------------------------------------
// Axiom checker

struct AxiomResult {
  std::string name;
  bool ok = false;
};

struct HopfReport {
  std::vector<AxiomResult> axioms;
  bool ok() const {
    for (auto& a : axioms)
      if (!a.ok) return false;
    return true;
  }
  std::vector<std::string> failed() const {
    std::vector<std::string> f;
    for (auto& a : axioms)
      if (!a.ok) f.push_back(a.name);
    return f;
  }
  std::string str() const {
    std::string s;
    for (auto& a : axioms) s += a.name + ": " + (a.ok ? "ok" : "FAIL") + "\n";
    return s;
  }
};

inline Matrix<Rational> unit_col(const HopfData& H) { return Matrix<Rational>({H.dim, 1}, H.unit); }
inline Matrix<Rational> counit_row(const HopfData& H) { return Matrix<Rational>({1, H.dim}, H.counit); }

inline bool check_quasitriangular_conj(const HopfData& H, const Elem& R) {
  for (int a = 0; a < H.dim; ++a) {
    Elem D = H.Delta(H.e(a));
    if (H.mulk(flip2(D, H.dim), R, 2) != H.mulk(R, D, 2)) return false;
  }
  return true;
}

inline bool check_quasitriangular_left(const HopfData& H, const Elem& R) {
  int d = H.dim;
  // (Delta (x) id) R = R13 R23
  auto DI = kron(H.Dmat, identity<Rational>(d));
  Elem lhs = HopfData::apply(DI, R);
  Elem rhs = H.mulk(embed2(R, d, 0, 2, H.unit), embed2(R, d, 1, 2, H.unit), 3);
  return lhs == rhs;
}

inline bool check_quasitriangular_right(const HopfData& H, const Elem& R) {
  int d = H.dim;
  // (id (x) Delta) R = R13 R12
  auto ID = kron(identity<Rational>(d), H.Dmat);
  Elem lhs = HopfData::apply(ID, R);
  Elem rhs = H.mulk(embed2(R, d, 0, 2, H.unit), embed2(R, d, 0, 1, H.unit), 3);
  return lhs == rhs;
}

inline void append_ribbon_checks(const HopfData& H, HopfReport& rep);

inline HopfReport check_ribbon_hopf(const HopfData& Hin) {
  HopfData H = Hin;
  HopfReport rep;
  int d = H.dim;
  auto add = [&](const std::string& n, bool ok) { rep.axioms.push_back({n, ok}); };
  bool shapes = static_cast<int>(H.unit.size()) == d && static_cast<int>(H.counit.size()) == d &&
                static_cast<int>(H.v.size()) == d && static_cast<int>(H.vinv.size()) == d &&
                H.mult.shape == std::vector<int>{d, d, d} && H.comult.shape == std::vector<int>{d, d, d} &&
                H.antipode.shape == std::vector<int>{d, d} && H.R.shape == std::vector<int>{d, d} &&
                H.Rinv.shape == std::vector<int>{d, d};
  add("shapes", shapes);
  if (!shapes) return rep;
  H.derive();
  auto I = identity<Rational>(d);
  auto u = unit_col(H);
  auto eps = counit_row(H);
  const auto& M = H.Mmat;
  const auto& D = H.Dmat;
  add("associativity", matmul(M, kron(M, I)) == matmul(M, kron(I, M)));
  add("unit", matmul(M, kron(u, I)) == I && matmul(M, kron(I, u)) == I);
  add("coassociativity", matmul(kron(D, I), D) == matmul(kron(I, D), D));
  add("counit", matmul(kron(eps, I), D) == I && matmul(kron(I, eps), D) == I);
  bool mult_ok = true;
  for (int a = 0; a < d && mult_ok; ++a)
    for (int b = 0; b < d && mult_ok; ++b)
      if (H.Delta(H.mul(H.e(a), H.e(b))) != H.mulk(H.Delta(H.e(a)), H.Delta(H.e(b)), 2)) mult_ok = false;
  add("comultiplication_multiplicative", mult_ok);
  add("comultiplication_unit", matmul(D, u) == kron(u, u));
  add("counit_multiplicative", matmul(eps, M) == kron(eps, eps));
  add("counit_unit", matmul(eps, u) == identity<Rational>(1));
  auto ue = matmul(u, eps);
  add("antipode", matmul(M, matmul(kron(H.Smat, I), D)) == ue && matmul(M, matmul(kron(I, H.Smat), D)) == ue);
  Elem R = H.R_elem(), Ri = H.Rinv_elem();
  Elem one2 = H.mulk(kron(u, u).data, kron(u, u).data, 2);
  add("R_invertible", H.mulk(R, Ri, 2) == one2 && H.mulk(Ri, R, 2) == one2);
  add("quasitriangular_conjugation", check_quasitriangular_conj(H, R));
  add("quasitriangular_left", check_quasitriangular_left(H, R));
  add("quasitriangular_right", check_quasitriangular_right(H, R));
  append_ribbon_checks(H, rep);
  return rep;
}

// ribbon and pivot axioms only; H must be derived
inline void append_ribbon_checks(const HopfData& H, HopfReport& rep) {
  int d = H.dim;
  auto add = [&](const std::string& n, bool ok) { rep.axioms.push_back({n, ok}); };
  Elem R = H.R_elem();
  bool central = true;
  for (int a = 0; a < d; ++a)
    if (H.mul(H.v, H.e(a)) != H.mul(H.e(a), H.v)) central = false;
  add("ribbon_central", central);
  add("ribbon_invertible", H.mul(H.v, H.vinv) == H.unit && H.mul(H.vinv, H.v) == H.unit);
  add("ribbon_antipode", H.S(H.v) == H.v);
  add("ribbon_counit", H.eps(H.v).is_one());
  Elem R21R = H.mulk(flip2(R, d), R, 2);
  Elem vv = kron(Matrix<Rational>({d, 1}, H.v), Matrix<Rational>({d, 1}, H.v)).data;
  add("ribbon_coproduct", H.mulk(R21R, H.Delta(H.v), 2) == vv);
  // derived pivot: grouplike and implements S^2
  bool piv_ok = H.mul(H.pivot, H.pivot_inv) == H.unit;
  if (piv_ok) {
    Elem pp = kron(Matrix<Rational>({d, 1}, H.pivot), Matrix<Rational>({d, 1}, H.pivot)).data;
    piv_ok = H.Delta(H.pivot) == pp;
  }
  add("pivot_grouplike", piv_ok);
  bool s2 = piv_ok;
  for (int a = 0; a < d && s2; ++a)
    if (H.S(H.S(H.e(a))) != H.mul(H.mul(H.pivot, H.e(a)), H.pivot_inv)) s2 = false;
  add("pivot_implements_S2", s2);
}

// ---------------------------------------------------------------------------
// Instances

inline HopfData instance_trivial() {
  HopfData H;
  H.name = "trivial";
  H.dim = 1;
  H.basis = {"1"};
  H.unit = H.counit = H.v = H.vinv = {Rational(1)};
  H.mult = Tensor<Rational>({1, 1, 1}, {Rational(1)});
  H.comult = Tensor<Rational>({1, 1, 1}, {Rational(1)});
  H.antipode = H.R = H.Rinv = Matrix<Rational>({1, 1}, {Rational(1)});
  H.derive();
  return H;
}

namespace detail {

// Hopf algebra E(n): generated by a grouplike K and skew-primitive x_1..x_n with
// K^2 = 1, x_i^2 = 0, x_i x_j = -x_j x_i, K x_i = -x_i K,
// Delta(x_i) = x_i (x) 1 + K (x) x_i. Basis monomials K^a x^B; `index` maps
// (a, bitmask B over x_1..x_n with x_1 the high bit) to the basis position.
struct EnAlgebra {
  int n;
  std::function<int(int, int)> index;
  std::vector<std::string> names;
};

inline HopfData build_En(const EnAlgebra& shape) {
  int n = shape.n;
  int d = 2 << n;
  HopfData H;
  H.dim = d;
  H.basis.resize(d);
  std::vector<std::pair<int, int>> mono(d);
  for (int a = 0; a < 2; ++a)
    for (int B = 0; B < (1 << n); ++B) mono[shape.index(a, B)] = {a, B};
  H.basis = shape.names;
  auto bit = [&](int B, int i) { return (B >> (n - 1 - i)) & 1; };  // i = 0 .. n-1 for x_1 .. x_n
  auto popcount = [](int B) { return __builtin_popcount(static_cast<unsigned>(B)); };
  H.mult = Tensor<Rational>({d, d, d});
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      auto [a, B] = mono[p];
      auto [a2, B2] = mono[q];
      if (B & B2) continue;
      int sgn = (a2 * popcount(B)) % 2;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (bit(B, i) && bit(B2, j) && i > j) sgn ^= 1;
      int r = shape.index((a + a2) % 2, B | B2);
      H.mult[(static_cast<std::size_t>(p) * d + q) * d + r] += Rational(sgn ? -1 : 1);
    }
  H.unit.assign(d, Rational());
  H.unit[shape.index(0, 0)] = Rational(1);
  H.counit.assign(d, Rational());
  H.counit[shape.index(0, 0)] = Rational(1);
  H.counit[shape.index(1, 0)] = Rational(1);
  H.comult = Tensor<Rational>({d, d, d});
  H.antipode = Matrix<Rational>({d, d});
  H.R = H.Rinv = Matrix<Rational>({d, d});
  H.v = H.vinv = H.unit;
  H.derive();
  // coproduct and antipode from the generators, multiplicatively
  Elem one = H.unit, K = H.e(shape.index(1, 0));
  std::vector<Elem> x(n);
  for (int i = 0; i < n; ++i) x[i] = H.e(shape.index(0, 1 << (n - 1 - i)));
  auto outer = [&](const Elem& p, const Elem& q) {
    Elem r(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r[i * d + j] = p[i] * q[j];
    return r;
  };
  Elem DK = outer(K, K);
  std::vector<Elem> Dx(n);
  for (int i = 0; i < n; ++i) {
    Dx[i] = outer(x[i], one);
    auto t = outer(K, x[i]);
    for (int k = 0; k < d * d; ++k) Dx[i][k] += t[k];
  }
  Elem SK = K;
  std::vector<Elem> Sx(n);
  for (int i = 0; i < n; ++i) {
    Sx[i] = H.mul(K, x[i]);
    for (auto& c : Sx[i]) c = -c;
  }
  for (int p = 0; p < d; ++p) {
    auto [a, B] = mono[p];
    Elem D = outer(one, one);
    Elem Sv = one;
    if (a) D = H.mulk(D, DK, 2);
    for (int i = 0; i < n; ++i)
      if (bit(B, i)) D = H.mulk(D, Dx[i], 2);
    // S anti-multiplicative: S(K^a x_{i1} ... x_{ik}) = S(x_ik) ... S(x_i1) S(K)^a
    for (int i = n - 1; i >= 0; --i)
      if (bit(B, i)) Sv = H.mul(Sv, Sx[i]);
    if (a) Sv = H.mul(Sv, SK);
    for (int q = 0; q < d; ++q)
      for (int r = 0; r < d; ++r) H.comult[(static_cast<std::size_t>(p) * d + q) * d + r] = D[q * d + r];
    for (int q = 0; q < d; ++q) H.antipode.at(p, q) = Sv[q];
  }
  H.derive();
  return H;
}

struct RibbonSearch {
  int candidates = 0;
  int quasitriangular = 0;
  std::vector<std::string> notes;
};

// R = R0 (1(x)1 + sum a_ij K x_i (x) x_j + c x_1..x_n (x) x_1..x_n) over a small
// grid of coefficients, R0 running over the two bicharacters of Z/2. Every
// candidate is tested against the quasitriangular axioms; v is then looked
// for as G^{-1} u with G grouplike.
inline HopfData solve_ribbon_structure(HopfData H, const EnAlgebra& shape, bool want_nontriangular,
                                       RibbonSearch* log = nullptr) {
  int d = H.dim, n = shape.n;
  Elem one = H.unit, K = H.e(shape.index(1, 0));
  std::vector<Elem> x(n);
  for (int i = 0; i < n; ++i) x[i] = H.e(shape.index(0, 1 << (n - 1 - i)));
  Elem top = H.e(shape.index(0, (1 << n) - 1));
  auto outer = [&](const Elem& p, const Elem& q) {
    Elem r(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r[i * d + j] = p[i] * q[j];
    return r;
  };
  auto addto = [&](Elem& a, const Elem& b, const Rational& s) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!b[i].is_zero()) a[i] += s * b[i];
  };
  std::vector<Elem> R0s;
  R0s.push_back(outer(one, one));
  {
    Elem r(d * d);
    Rational h(1, 2);
    addto(r, outer(one, one), h);
    addto(r, outer(one, K), h);
    addto(r, outer(K, one), h);
    addto(r, outer(K, K), -h);
    R0s.push_back(r);
  }
  std::vector<Rational> grid = {Rational(0), Rational(1), Rational(-1)};
  std::vector<Rational> cgrid = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)};
  int na = n * n;
  std::vector<Elem> nil;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) nil.push_back(outer(H.mul(K, x[i]), x[j]));
  Elem topterm = outer(top, top);
  std::size_t combos = 1;
  for (int k = 0; k < na; ++k) combos *= grid.size();
  bool use_c = n >= 2;

  struct Found {
    Elem R, Rinv, v, vinv;
    bool triangular;
  };
  std::vector<Found> found;
  auto has_nil = [&](const Found& f) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (!f.R[a * d + b].is_zero() && (H.counit[a].is_zero() || H.counit[b].is_zero())) return true;
    return false;
  };
  RibbonSearch local;
  RibbonSearch& lg = log ? *log : local;
  for (auto& R0 : R0s)
    for (std::size_t code = 0; code < combos; ++code)
      for (std::size_t ci = 0; ci < (use_c ? cgrid.size() : 1); ++ci) {
        ++lg.candidates;
        Elem N = outer(one, one);
        std::size_t cc = code;
        for (int k = 0; k < na; ++k) {
          addto(N, nil[k], grid[cc % grid.size()]);
          cc /= grid.size();
        }
        if (use_c) addto(N, topterm, cgrid[ci]);
        Elem R = H.mulk(R0, N, 2);
        if (!check_quasitriangular_conj(H, R)) continue;
        if (!check_quasitriangular_left(H, R) || !check_quasitriangular_right(H, R)) continue;
        ++lg.quasitriangular;
        // inverse in H (x) H
        Matrix<Rational> L({d * d, d * d});
        for (int b = 0; b < d * d; ++b) {
          Elem eb(d * d);
          eb[b] = Rational(1);
          auto col = H.mulk(R, eb, 2);
          for (int c = 0; c < d * d; ++c) L.at(c, b) = col[c];
        }
        auto res = solve_exact(L, outer(one, one));
        if (res.status != SolveStatus::Unique) continue;
        Elem Ri(d * d);
        for (int i = 0; i < d * d; ++i) Ri[i] = res.x.at(i, 0);
        Elem R21R = H.mulk(flip2(R, d), R, 2);
        bool tri = R21R == outer(one, one);
        // Drinfeld element and grouplike candidates
        HopfData T = H;
        T.R = Matrix<Rational>({d, d}, R);
        T.Rinv = Matrix<Rational>({d, d}, Ri);
        T.derive();
        for (int g = 0; g < d; ++g) {
          Elem G = H.e(g);
          if (H.Delta(G) != outer(G, G)) continue;
          auto Gi = H.inverse(G);
          if (!Gi) continue;
          Elem v = H.mul(*Gi, T.drinfeld);
          auto vi = H.inverse(v);
          if (!vi) continue;
          T.v = v;
          T.vinv = *vi;
          T.derive();
          HopfReport rr;
          append_ribbon_checks(T, rr);
          if (!rr.ok()) continue;
          found.push_back({R, Ri, v, *vi, tri});
          break;
        }
        if (!found.empty() && (!want_nontriangular || !found.back().triangular) && has_nil(found.back()))
          goto done;
      }
done:
  if (found.empty()) throw std::runtime_error("no ribbon structure found for " + H.name);
  // preference: non-triangular if asked, then a nonzero nilpotent part
  const Found* pick = nullptr;
  for (auto& f : found)
    if ((!want_nontriangular || !f.triangular) && has_nil(f)) {
      pick = &f;
      break;
    }
  if (!pick) throw std::runtime_error("no ribbon structure with the requested properties for " + H.name);
  lg.notes.push_back(std::to_string(found.size()) + " ribbon structures scanned before the pick");
  H.R = Matrix<Rational>({d, d}, pick->R);
  H.Rinv = Matrix<Rational>({d, d}, pick->Rinv);
  H.v = pick->v;
  H.vinv = pick->vinv;
  H.derive();
  auto rep = check_ribbon_hopf(H);
  if (!rep.ok()) throw std::runtime_error("ribbon structure for " + H.name + " fails:\n" + rep.str());
  return H;
}

inline EnAlgebra sweedler_shape() {
  // basis 1, g, x, gx
  return {1, [](int a, int B) { return a + 2 * B; }, {"1", "g", "x", "gx"}};
}

inline EnAlgebra e2_shape() {
  // basis K^a x1^b x2^c at 4a + 2b + c
  return {2, [](int a, int B) { return 4 * a + B; }, {"1", "x2", "x1", "x1x2", "K", "Kx2", "Kx1", "Kx1x2"}};
}

} // namespace detail

inline const HopfData& instance_sweedler() {
  static const HopfData H = [] {
    auto shape = detail::sweedler_shape();
    HopfData h = detail::build_En(shape);
    h.name = "sweedler";
    return detail::solve_ribbon_structure(h, shape, false);
  }();
  return H;
}

// E(2): 8-dimensional, admits non-triangular ribbon structures.
inline const HopfData& instance_e2() {
  static const HopfData H = [] {
    auto shape = detail::e2_shape();
    HopfData h = detail::build_En(shape);
    h.name = "e2";
    return detail::solve_ribbon_structure(h, shape, true);
  }();
  return H;
}

inline bool is_triangular(const HopfData& H) {
  int d = H.dim;
  Elem R = H.R_elem();
  Elem one2(d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) one2[a * d + b] = H.unit[a] * H.unit[b];
  return H.mulk(flip2(R, d), R, 2) == one2;
}

// ---------------------------------------------------------------------------
// JSON

struct HopfLoadError : std::runtime_error {
  HopfReport report;
  HopfLoadError(const std::string& m, HopfReport r = {}) : std::runtime_error(m), report(std::move(r)) {}
};

inline nlohmann::json rational_json(const Rational& r) { return r.str(); }

inline Rational json_rational(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_object()) {
    // Laurent map; only constant maps are meaningful for Hopf data
    Rational c;
    for (auto& [k, v] : j.items()) {
      Rational e = Rational::parse(k);
      if (!e.is_zero()) throw HopfLoadError("Laurent-valued structure constants are not supported (exponent " + k + ")");
      c += json_rational(v);
    }
    return c;
  }
  throw HopfLoadError("expected an exact scalar string");
}

inline nlohmann::json hopf_to_json(const HopfData& H) {
  using nlohmann::json;
  auto vec = [](const Elem& x) {
    json a = json::array();
    for (auto& r : x) a.push_back(rational_json(r));
    return a;
  };
  auto mat = [&](const Matrix<Rational>& m) {
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(rational_json(m.at(i, j)));
      a.push_back(row);
    }
    return a;
  };
  auto ten = [&](const Tensor<Rational>& t) {
    int d = t.shape[0];
    json a = json::array();
    for (int i = 0; i < d; ++i) {
      json m = json::array();
      for (int j = 0; j < d; ++j) {
        json row = json::array();
        for (int k = 0; k < d; ++k) row.push_back(rational_json(t[(static_cast<std::size_t>(i) * d + j) * d + k]));
        m.push_back(row);
      }
      a.push_back(m);
    }
    return a;
  };
  json j;
  j["name"] = H.name;
  j["dim"] = H.dim;
  j["basis"] = H.basis;
  j["unit"] = vec(H.unit);
  j["counit"] = vec(H.counit);
  j["mult"] = ten(H.mult);
  j["comult"] = ten(H.comult);
  j["antipode"] = mat(H.antipode);
  j["R"] = mat(H.R);
  j["Rinv"] = mat(H.Rinv);
  j["v"] = vec(H.v);
  j["vinv"] = vec(H.vinv);
  return j;
}

inline HopfData hopf_from_json(const nlohmann::json& j, bool check = true) {
  HopfData H;
  try {
    H.name = j.value("name", std::string("file"));
    H.dim = j.at("dim").get<int>();
    int d = H.dim;
    if (d <= 0 || d > 16) throw HopfLoadError("dim outside the supported envelope 1..16");
    H.basis = j.at("basis").get<std::vector<std::string>>();
    auto vec = [&](const char* key) {
      Elem x;
      for (auto& e : j.at(key)) x.push_back(json_rational(e));
      if (static_cast<int>(x.size()) != d) throw HopfLoadError(std::string(key) + ": wrong length");
      return x;
    };
    auto mat = [&](const char* key) {
      Matrix<Rational> m({d, d});
      auto& a = j.at(key);
      if (static_cast<int>(a.size()) != d) throw HopfLoadError(std::string(key) + ": wrong shape");
      for (int r = 0; r < d; ++r) {
        if (static_cast<int>(a[r].size()) != d) throw HopfLoadError(std::string(key) + ": wrong shape");
        for (int c = 0; c < d; ++c) m.at(r, c) = json_rational(a[r][c]);
      }
      return m;
    };
    auto ten = [&](const char* key) {
      Tensor<Rational> t({d, d, d});
      auto& a = j.at(key);
      if (static_cast<int>(a.size()) != d) throw HopfLoadError(std::string(key) + ": wrong shape");
      for (int x = 0; x < d; ++x) {
        if (static_cast<int>(a[x].size()) != d) throw HopfLoadError(std::string(key) + ": wrong shape");
        for (int y = 0; y < d; ++y) {
          if (static_cast<int>(a[x][y].size()) != d) throw HopfLoadError(std::string(key) + ": wrong shape");
          for (int z = 0; z < d; ++z) t[(static_cast<std::size_t>(x) * d + y) * d + z] = json_rational(a[x][y][z]);
        }
      }
      return t;
    };
    H.unit = vec("unit");
    H.counit = vec("counit");
    H.mult = ten("mult");
    H.comult = ten("comult");
    H.antipode = mat("antipode");
    H.R = mat("R");
    H.Rinv = mat("Rinv");
    H.v = vec("v");
    H.vinv = vec("vinv");
  } catch (const nlohmann::json::exception& e) {
    throw HopfLoadError(std::string("parse error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw HopfLoadError(std::string("parse error: ") + e.what());
  }
  if (check) {
    auto rep = check_ribbon_hopf(H);
    if (!rep.ok()) {
      std::string names;
      for (auto& f : rep.failed()) names += (names.empty() ? "" : ", ") + f;
      throw HopfLoadError("axiom failure: " + names, rep);
    }
  }
  H.derive();
  return H;
}

inline void save_hopf(const HopfData& H, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << hopf_to_json(H).dump(2) << "\n";
}

inline HopfData load_hopf(const std::string& path, bool check = true) {
  std::ifstream f(path);
  if (!f) throw HopfLoadError("cannot read " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw HopfLoadError(std::string("parse error: ") + e.what());
  }
  return hopf_from_json(j, check);
}

} // namespace rsl
