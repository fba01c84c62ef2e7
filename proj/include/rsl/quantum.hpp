#pragma once

#include "rsl/coend.hpp"
#include "rsl/slops.hpp"

#include <cmath>

namespace rsl {

// largest dense state a sweep may allocate
constexpr double kMaxPhiStates = 4194304.0;

// A linear functional on F^{(x)n}: values[c_1..c_n] = f(e^{c_1} (x) ... (x) e^{c_n}).
struct ConvElement {
  int n = 0;
  int d = 0;
  std::vector<Rational> values;

  bool operator==(const ConvElement& o) const { return n == o.n && d == o.d && values == o.values; }
  std::vector<int> legs() const { return std::vector<int>(n, d); }
  Tensor<Rational> tensor() const { return Tensor<Rational>(legs(), values); }
  std::string digest() const { return rsl::digest(tensor()); }
};

struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline ConvElement conv_identity(const CoendData& C, int n) {
  ConvElement f{n, C.d, {Rational(1)}};
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> g(f.values.size() * C.d);
    for (std::size_t i = 0; i < f.values.size(); ++i)
      for (int c = 0; c < C.d; ++c) g[i * C.d + c] = f.values[i] * C.eps.at(0, c);
    f.values = std::move(g);
  }
  return f;
}

namespace detail {

inline LocalOp lop(int pos, int nin, std::vector<int> out, const Matrix<Rational>& m) {
  return {pos, nin, std::move(out), std::make_shared<Matrix<Rational>>(m)};
}

inline ConvElement pulled(const CoendData& C, const ConvElement& f, int new_n, const std::vector<LocalOp>& steps) {
  ConvElement g{new_n, C.d, pull_back(f.values, std::vector<int>(new_n, C.d), steps)};
  return g;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Convolution

// Steps of Delta on F^{(x)n}: Delta_{A(x)B} = (id (x) c_{A,B} (x) id)(Delta_A (x) Delta_B).
inline std::vector<LocalOp> coproduct_steps(const CoendData& C, int n, int offset = 0) {
  std::vector<LocalOp> s;
  if (n == 0) return s;
  int d = C.d;
  s.push_back(detail::lop(offset, 1, {d, d}, C.Delta));
  auto rest = coproduct_steps(C, n - 1, offset + 2);
  s.insert(s.end(), rest.begin(), rest.end());
  for (int p = offset + 1; p < offset + n; ++p) s.push_back(detail::lop(p, 2, {d, d}, C.cFF));
  return s;
}

inline ConvElement convolution(const CoendData& C, const ConvElement& f, const ConvElement& g) {
  if (f.n != g.n) throw ArityError("convolution: arity mismatch");
  std::vector<Rational> fg(f.values.size() * g.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (!f.values[i].is_zero())
      for (std::size_t j = 0; j < g.values.size(); ++j) fg[i * g.values.size() + j] = f.values[i] * g.values[j];
  ConvElement h{f.n, C.d, {}};
  h.values = pull_back(fg, f.legs(), coproduct_steps(C, f.n));
  return h;
}

// ---------------------------------------------------------------------------
// Operators of the cocyclic set F^* (coalgebra side) and cyclic set (algebra side)

inline void arity_check(const ConvElement& f, int lo, const char* op) {
  if (f.n < lo) throw ArityError(std::string(op) + ": arity too small");
}

// delta_i: arity n -> n+1, counit inserted at slot i
inline ConvElement alg_coface(const CoendData& C, const ConvElement& f, int i) {
  detail::range_check(i, 0, f.n, "alg_coface");
  return detail::pulled(C, f, f.n + 1, {detail::lop(i, 1, {}, C.eps)});
}

// sigma_j: arity n+2 -> n+1, Delta at slot j
inline ConvElement alg_codegeneracy(const CoendData& C, const ConvElement& f, int j) {
  arity_check(f, 2, "alg_codegeneracy");
  detail::range_check(j, 0, f.n - 2, "alg_codegeneracy");
  return detail::pulled(C, f, f.n - 1, {detail::lop(j, 1, {C.d, C.d}, C.Delta)});
}

// t_n: the last factor moves to the front by inverse braidings, then theta^{-1}
inline std::vector<LocalOp> rotation_steps(const CoendData& C, int arity) {
  std::vector<LocalOp> s;
  for (int p = arity - 2; p >= 0; --p) s.push_back(detail::lop(p, 2, {C.d, C.d}, C.cFF_inv));
  if (arity > 0) s.push_back(detail::lop(0, 1, {C.d}, C.theta_inv));
  return s;
}

inline std::vector<LocalOp> rotation_inv_steps(const CoendData& C, int arity) {
  std::vector<LocalOp> s;
  if (arity > 0) s.push_back(detail::lop(0, 1, {C.d}, C.theta));
  for (int p = 0; p + 1 < arity; ++p) s.push_back(detail::lop(p, 2, {C.d, C.d}, C.cFF));
  return s;
}

inline ConvElement alg_cocyclic(const CoendData& C, const ConvElement& f) {
  if (f.n <= 1) return f.n == 1 ? detail::pulled(C, f, 1, {detail::lop(0, 1, {C.d}, C.theta_inv)}) : f;
  return detail::pulled(C, f, f.n, rotation_steps(C, f.n));
}

inline ConvElement alg_cocyclic_inv(const CoendData& C, const ConvElement& f) {
  if (f.n <= 1) return f.n == 1 ? detail::pulled(C, f, 1, {detail::lop(0, 1, {C.d}, C.theta)}) : f;
  return detail::pulled(C, f, f.n, rotation_inv_steps(C, f.n));
}

// d_i: arity n+1 -> n, unit inserted at slot i
inline ConvElement alg_face(const CoendData& C, const ConvElement& f, int i) {
  arity_check(f, 2, "alg_face");
  detail::range_check(i, 0, f.n - 1, "alg_face");
  return detail::pulled(C, f, f.n - 1, {detail::lop(i, 0, {C.d}, C.unit)});
}

// s_j: arity n+1 -> n+2, multiplication on slots j, j+1
inline ConvElement alg_degeneracy(const CoendData& C, const ConvElement& f, int j) {
  arity_check(f, 1, "alg_degeneracy");
  detail::range_check(j, 0, f.n - 1, "alg_degeneracy");
  return detail::pulled(C, f, f.n + 1, {detail::lop(j, 2, {C.d}, C.m)});
}

inline ConvElement alg_cyclic(const CoendData& C, const ConvElement& f) { return alg_cocyclic_inv(C, f); }
inline ConvElement alg_cyclic_inv(const CoendData& C, const ConvElement& f) { return alg_cocyclic(C, f); }

// The rotation morphism of F^{(x)n+1} with tau(f) = f o t, as a matrix.
inline Matrix<Rational> rotation_matrix(const CoendData& C, int arity) {
  if (arity == 1) return C.theta_inv;
  return chain_matrix(std::vector<int>(arity, C.d), rotation_steps(C, arity));
}

// action of h on the k-fold tensor power of X
inline Matrix<Rational> act_power(const HopfData& H, const Rep& X, int k, const Elem& h) {
  // iterated coproduct of h
  Elem cur = h;
  for (int i = 1; i < k; ++i) {
    auto s = LegState::covector(cur, std::vector<int>(i, H.dim));
    s.apply(i - 1, 1, {H.dim, H.dim}, H.Dmat);
    cur = s.st;
  }
  int N = static_cast<int>(ipow(X.dim, k));
  Matrix<Rational> out({N, N});
  std::vector<int> idx(k);
  for (std::size_t t = 0; t < cur.size(); ++t) {
    if (cur[t].is_zero()) continue;
    std::size_t u = t;
    for (int s = k - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(u % H.dim);
      u /= H.dim;
    }
    Matrix<Rational> m = X.rho[idx[0]];
    for (int s = 1; s < k; ++s) m = kron(m, X.rho[idx[s]]);
    for (std::size_t q = 0; q < m.size(); ++q)
      if (!m.data[q].is_zero()) out.data[q].add_mul(cur[t], m.data[q]);
  }
  return out;
}

// Basis of Hom_H(F^{(x)n}, 1): functionals with f(h . x) = eps(h) f(x).
inline const std::vector<ConvElement>& invariant_functionals(const CoendData& C, int n) {
  static std::map<std::pair<const CoendData*, int>, std::vector<ConvElement>> cache;
  auto key = std::make_pair(&C, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const HopfData& H = *C.H;
  int N = static_cast<int>(ipow(C.d, n));
  Matrix<Rational> A({H.dim * N, N});
  for (int a = 0; a < H.dim; ++a) {
    auto M = act_power(H, C.F, n, H.e(a));
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) {
        Rational x = M.at(c, r);
        if (r == c) x -= H.counit[a];
        A.at(a * N + r, c) = x;
      }
  }
  std::vector<ConvElement> basis;
  for (auto& v : nullspace(A)) basis.push_back(ConvElement{n, C.d, v});
  return cache.emplace(key, std::move(basis)).first->second;
}

// t^{n+1} = theta^{-1} on F^{(x)n+1}
inline bool check_twisted_cyclicity(const CoendData& C, int n) {
  auto t = rotation_matrix(C, n + 1);
  auto p = t;
  for (int k = 0; k < n; ++k) p = matmul(t, p);
  return p == act_power(*C.H, C.F, n + 1, C.H->v);
}

inline CocyclicImpl<ConvElement> algebraic_cocyclic_impl(const CoendData& C) {
  CocyclicImpl<ConvElement> impl;
  const CoendData* c = &C;
  impl.coface = [c](const ConvElement& f, int i, int) { return alg_coface(*c, f, i); };
  impl.codegeneracy = [c](const ConvElement& f, int j, int) { return alg_codegeneracy(*c, f, j); };
  impl.cocyclic = [c](const ConvElement& f, int) { return alg_cocyclic(*c, f); };
  impl.cocyclic_inv = [c](const ConvElement& f, int) { return alg_cocyclic_inv(*c, f); };
  return impl;
}

inline CyclicImpl<ConvElement> algebraic_cyclic_impl(const CoendData& C) {
  CyclicImpl<ConvElement> impl;
  const CoendData* c = &C;
  impl.face = [c](const ConvElement& f, int i, int) { return alg_face(*c, f, i); };
  impl.degeneracy = [c](const ConvElement& f, int j, int) { return alg_degeneracy(*c, f, j); };
  impl.cyclic = [c](const ConvElement& f, int) { return alg_cyclic(*c, f); };
  impl.cyclic_inv = [c](const ConvElement& f, int) { return alg_cyclic_inv(*c, f); };
  return impl;
}

// Tilde operators on functionals: direct formulas.
inline ConvElement alg_dual_direct(const CoendData& C, const std::string& op, const ConvElement& f, int idx) {
  int n = f.n - 1;
  if (op == "d") {
    if (idx < n) return alg_codegeneracy(C, f, idx);
    return alg_codegeneracy(C, alg_cocyclic_inv(C, f), 0);
  }
  if (op == "s") return alg_coface(C, f, idx + 1);
  if (op == "t") return alg_cocyclic_inv(C, f);
  if (op == "delta") {
    if (idx < f.n) return alg_degeneracy(C, f, idx);
    return alg_cocyclic(C, alg_degeneracy(C, f, 0));
  }
  if (op == "sigma") return alg_face(C, f, idx + 1);
  if (op == "tau") return alg_cocyclic(C, f);
  throw std::invalid_argument("unknown dual operator '" + op + "'");
}

inline ConvElement alg_dual_via_L(const CoendData& C, const std::string& op, const ConvElement& f, int idx) {
  int n = f.n - 1;
  if (op == "d" || op == "s" || op == "t") {
    Token g = op == "d" ? face(idx, n) : op == "s" ? degeneracy(idx, n) : cyclic_op(n);
    return apply_word(algebraic_cocyclic_impl(C), dual_L(g), f);
  }
  if (op == "delta" || op == "sigma" || op == "tau") {
    int lvl = op == "delta" ? f.n : n;
    Token g = op == "delta" ? coface(idx, lvl) : op == "sigma" ? codegeneracy(idx, lvl) : cocyclic(lvl);
    return apply_word(algebraic_cyclic_impl(C), dual_L_op(g), f);
  }
  throw std::invalid_argument("unknown dual operator '" + op + "'");
}

// ---------------------------------------------------------------------------
// The evaluation functor

enum class PhiRoute { Auto, Literal, Fast };

struct PhiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Covector of the handle frame_f(T) colored by the regular representation,
// on the bottom legs r_0 t_0 r_1 t_1 ...
inline std::vector<Rational> handle_covector(const CoendData& C, const SlicedDiagram& handle) {
  HopfModel M(*C.H, {regular_rep(*C.H)});
  if (max_width(handle) > max_sweep_width()) throw WidthLimit("handle wider than RSL_MAX_WIDTH");
  return sweep_down(M, handle, uniform_coloring(handle), {Rational(1)}, 1);
}

// Solves phi o (i_H (x) ... (x) i_H) = c. J(e^c) = e^c (x) 1 is a right
// inverse of i_H, so the candidate is c o J^{(x)n}; it is then substituted
// back to confirm that the equation holds.
inline ConvElement factor_through_coend(const CoendData& C, const std::vector<Rational>& cov, int n) {
  int d = C.d;
  Matrix<Rational> J({d * d, d});
  for (int c = 0; c < d; ++c)
    for (int u = 0; u < d; ++u) J.at(c * d + u, c) = C.H->unit[u];
  std::vector<LocalOp> steps;
  for (int k = 0; k < n; ++k) steps.push_back(detail::lop(2 * k, 1, {d, d}, J));
  ConvElement f{n, d, pull_back(cov, std::vector<int>(n, d), steps)};
  std::vector<LocalOp> back;
  for (int k = 0; k < n; ++k) back.push_back(detail::lop(k, 2, {d}, C.iH));
  if (pull_back(f.values, std::vector<int>(2 * n, d), back) != cov)
    throw PhiError("factorization through the coend is inconsistent");
  return f;
}

// Full linear solve of the same equation; only for small n.
inline ConvElement factor_through_coend_solve(const CoendData& C, const std::vector<Rational>& cov, int n) {
  Matrix<Rational> I = C.iH;
  for (int k = 1; k < n; ++k) I = kron(I, C.iH);
  // the (r t) pairs are interleaved as r0 t0 r1 t1 ..., which matches kron order
  Matrix<Rational> c({1, static_cast<int>(cov.size())}, cov);
  auto x = solve_left(I, c, "phi");
  return ConvElement{n, C.d, x.data};
}

inline ConvElement phi_literal(const CoendData& C, const SlicedDiagram& T) {
  if (!is_string_link(T, T.width_in)) throw PhiError("phi: not a string link");
  int n = T.width_in;
  if (n == 0) return ConvElement{0, C.d, {Rational(1)}};
  return factor_through_coend(C, handle_covector(C, frame_f(T)), n);
}

// Universal invariant of T in H^{(x)n}: T colored by regular representations applied to 1 (x) ... (x) 1.
inline std::vector<Rational> universal_invariant(const HopfData& H, const SlicedDiagram& T) {
  HopfModel M(H, {regular_rep(H)});
  if (max_width(T) > max_sweep_width()) throw WidthLimit("diagram wider than RSL_MAX_WIDTH");
  std::vector<Rational> one = H.unit;
  for (int k = 1; k < T.width_in; ++k) {
    std::vector<Rational> nxt(one.size() * H.dim);
    for (std::size_t i = 0; i < one.size(); ++i)
      for (int c = 0; c < H.dim; ++c) nxt[i * H.dim + c] = one[i] * H.unit[c];
    one = std::move(nxt);
  }
  return sweep_up(M, T, uniform_coloring(T), one, 1);
}

// Same functional from the universal invariant: the crossings that bring the
// down-going strands of frame_f(T) to the left are absorbed as R-matrix
// factors on z, top-down.
inline ConvElement phi_fast(const CoendData& C, const SlicedDiagram& T) {
  if (!is_string_link(T, T.width_in)) throw PhiError("phi: not a string link");
  const HopfData& H = *C.H;
  int n = T.width_in, d = H.dim;
  if (n == 0) return ConvElement{0, d, {Rational(1)}};
  auto z = LegState::covector(universal_invariant(H, T), std::vector<int>(n, d));
  auto handle = frame_f(T);
  // labels: component k, down (r) or up (t)
  struct Lab {
    int comp;
    bool down;
  };
  std::vector<Lab> pos;
  for (int k = 0; k < n; ++k) {
    pos.push_back({k, true});
    pos.push_back({k, false});
  }
  struct Xing {
    Lab l, r;
    bool positive;
  };
  std::vector<Xing> xs;
  std::size_t nb = static_cast<std::size_t>(n) * (n - 1);
  for (std::size_t k = 0; k < nb; ++k) {
    const Event& e = handle.events[k];
    if (!e.is_crossing()) throw std::logic_error("phi_fast: unexpected frame layout");
    xs.push_back({pos[e.pos], pos[e.pos + 1], e.kind == EventKind::CrossPos});
    std::swap(pos[e.pos], pos[e.pos + 1]);
  }
  std::vector<Matrix<Rational>> L(d), Rm(d), LS(d);
  for (int a = 0; a < d; ++a) {
    L[a] = H.left_mult(H.e(a));
    LS[a] = H.left_mult(H.S(H.e(a)));
    Matrix<Rational> r({d, d});
    for (int b = 0; b < d; ++b) {
      auto col = H.mul(H.e(b), H.e(a));
      for (int c = 0; c < d; ++c) r.at(c, b) = col[c];
    }
    Rm[a] = r;
  }
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    if (!it->positive || !it->r.down) throw std::logic_error("phi_fast: unexpected frame crossing");
    int k = it->r.comp, j = it->l.comp;
    std::vector<Rational> acc(z.st.size());
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Rational& c = H.R.at(a, b);
        if (c.is_zero()) continue;
        LegState w = z;
        w.apply(k, 1, {d}, LS[b]);
        w.apply(j, 1, {d}, it->l.down ? LS[a] : Rm[a]);
        for (std::size_t q = 0; q < acc.size(); ++q)
          if (!w.st[q].is_zero()) acc[q].add_mul(c, w.st[q]);
      }
    z.st = std::move(acc);
  }
  return ConvElement{n, d, z.st};
}

inline ConvElement phi(const CoendData& C, const SlicedDiagram& T, PhiRoute route = PhiRoute::Auto) {
  double fast_cost = std::pow(static_cast<double>(C.d), max_width(T));
  if (fast_cost > kMaxPhiStates) throw WidthLimit("phi: state space too large for " + C.H->name);
  if (route == PhiRoute::Literal) return phi_literal(C, T);
  if (route == PhiRoute::Fast) return phi_fast(C, T);
  double w = max_width(T) + T.width_in;
  double cost = std::pow(static_cast<double>(C.d), w);
  return cost <= 65536.0 ? phi_literal(C, T) : phi_fast(C, T);
}

// f(h . x) = eps(h) f(x) for the action of H on F^{(x)n}
inline bool check_ad_invariant(const CoendData& C, const ConvElement& f) {
  const HopfData& H = *C.H;
  if (f.n == 0) return true;
  for (int a = 0; a < H.dim; ++a) {
    Elem cur = H.e(a);
    for (int i = 1; i < f.n; ++i) {
      auto s = LegState::covector(cur, std::vector<int>(i, H.dim));
      s.apply(i - 1, 1, {H.dim, H.dim}, H.Dmat);
      cur = s.st;
    }
    std::vector<Rational> acc(f.values.size());
    std::vector<int> idx(f.n);
    for (std::size_t t = 0; t < cur.size(); ++t) {
      if (cur[t].is_zero()) continue;
      std::size_t u = t;
      for (int s = f.n - 1; s >= 0; --s) {
        idx[s] = static_cast<int>(u % H.dim);
        u /= H.dim;
      }
      auto s = LegState::covector(f.values, f.legs());
      for (int k = 0; k < f.n; ++k) s.apply(k, 1, {C.d}, transpose(C.F.rho[idx[k]]));
      for (std::size_t q = 0; q < acc.size(); ++q)
        if (!s.st[q].is_zero()) acc[q].add_mul(cur[t], s.st[q]);
    }
    for (std::size_t q = 0; q < acc.size(); ++q)
      if (acc[q] != H.counit[a] * f.values[q]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Handle rotation

// The handle H with its last ribbon moved to the front under the others,
// preceded by an inverse twist of that ribbon.
inline SlicedDiagram handle_rotate(const SlicedDiagram& h, bool flip_crossings = false) {
  int n1 = h.width_in / 2;
  if (!is_handle(h, n1)) throw DiagramError("handle_rotate: not a handle");
  int w = h.width_in;
  std::vector<Event> ev;
  // inverse twist of the pair at w-2, w-1
  auto k1 = kink(false, true, w - 2, false);
  ev.insert(ev.end(), k1.begin(), k1.end());
  auto k2 = kink(false, true, w - 1, true);
  ev.insert(ev.end(), k2.begin(), k2.end());
  ev.push_back(xing(flip_crossings, w - 2));
  ev.push_back(xing(flip_crossings, w - 2));
  // move the pair to the front
  for (int s = 0; s < 2; ++s)
    for (int p = w - 3 + s; p >= s; --p) ev.push_back(xing(flip_crossings, p));
  ev.insert(ev.end(), h.events.begin(), h.events.end());
  std::vector<int> up;
  for (int k = 0; k < n1; ++k) {
    up.push_back(0);
    up.push_back(1);
  }
  return validate(ev, DiagramType::Handle, w, up);
}

// The last ribbon carried over the top of the handle to the front, without crossings.
inline SlicedDiagram handle_wrap(const SlicedDiagram& h) {
  int n1 = h.width_in / 2;
  if (!is_handle(h, n1)) throw DiagramError("handle_wrap: not a handle");
  int w = h.width_in;
  // legs: q0 q1 b_0 .. b_{w-3}; two nested cups on the right feed the last pair of h
  std::vector<Event> ev{cup(w, 'r'), cup(w + 1, 'l')};
  for (auto e : h.events) {
    e.pos += 2;
    ev.push_back(e);
  }
  // left over: q0 q1 v' u'
  ev.push_back(cap(1, 'l'));
  ev.push_back(cap(0, 'r'));
  std::vector<int> up;
  for (int k = 0; k < n1; ++k) {
    up.push_back(0);
    up.push_back(1);
  }
  return validate(ev, DiagramType::Handle, w, up);
}

// Colors ribbon k (bases 2k, 2k+1) of a handle by colors[k].
inline std::vector<int> handle_coloring(const SlicedDiagram& h, const std::vector<int>& colors) {
  std::vector<int> c(h.ncomp(), 0);
  for (int k = 0; 2 * k < h.width_in; ++k) c[h.info.comp_at(0, 2 * k)] = colors[k];
  return c;
}

// Colors for handle comparisons: trivial, regular when the sweep stays
// small, and the module induced from the pivot.
inline std::vector<Rep> handle_colors(const HopfData& H, int width) {
  std::vector<Rep> out{trivial_rep(H)};
  if (std::pow(static_cast<double>(H.dim), width) <= kMaxPhiStates) out.push_back(regular_rep(H));
  out.push_back(induced_rep(H, H.pivot));
  return out;
}

// Evaluations of two handles agree for every coloring of the ribbons by
// handle_colors.
inline bool handles_agree(const HopfData& H, const SlicedDiagram& a, const SlicedDiagram& b) {
  if (a.width_in != b.width_in) return false;
  HopfModel M(H, handle_colors(H, std::max(max_width(a), max_width(b))));
  int nc = static_cast<int>(M.colors.size());
  int n1 = a.width_in / 2;
  int total = static_cast<int>(ipow(nc, n1));
  for (int mask = 0; mask < total; ++mask) {
    std::vector<int> cols(n1);
    for (int k = 0, m = mask; k < n1; ++k, m /= nc) cols[k] = m % nc;
    auto ca = handle_coloring(a, cols), cb = handle_coloring(b, cols);
    if (sweep_down(M, a, ca, {Rational(1)}, 1) != sweep_down(M, b, cb, {Rational(1)}, 1)) return false;
  }
  return true;
}

struct HandleRotationResult {
  bool twisted_vs_frame = false;  // handle_rotate(h) against F(tau(G(h)))
  bool wrap_vs_twisted = false;   // handle_wrap(h) against handle_rotate(h)
  bool ok() const { return twisted_vs_frame && wrap_vs_twisted; }
};

inline HandleRotationResult handle_rotation_check(const HopfData& H, const SlicedDiagram& h,
                                                  bool flip_crossings = false) {
  HandleRotationResult r;
  auto rot = handle_rotate(h, flip_crossings);
  r.twisted_vs_frame = handles_agree(H, rot, frame_f(rotate_back(frame_g(h))));
  r.wrap_vs_twisted = handles_agree(H, handle_wrap(h), rot);
  return r;
}

} // namespace rsl
