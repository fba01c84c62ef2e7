#pragma once

#include "rsl/diagram.hpp"
#include "rsl/hopf.hpp"
#include "rsl/moves.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <tuple>

namespace rsl {

// ---------------------------------------------------------------------------
// Representations

struct Rep {
  std::string name;
  int dim = 0;
  std::vector<Matrix<Rational>> rho;  // rho[a] = action of e_a

  // action tensor H (x) V -> V, shape (dim, d, dim): [out, a, in]
  Tensor<Rational> action_tensor() const {
    int d = static_cast<int>(rho.size());
    Tensor<Rational> t({dim, d, dim});
    for (int a = 0; a < d; ++a)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) t[(static_cast<std::size_t>(i) * d + a) * dim + j] = rho[a].at(i, j);
    return t;
  }
};

inline Matrix<Rational> act(const Rep& X, const Elem& h) {
  Matrix<Rational> m({X.dim, X.dim});
  for (std::size_t a = 0; a < h.size(); ++a)
    if (!h[a].is_zero())
      for (std::size_t k = 0; k < m.size(); ++k)
        if (!X.rho[a].data[k].is_zero()) m.data[k].add_mul(h[a], X.rho[a].data[k]);
  return m;
}

// action of an element of H (x) H on X (x) Y
inline Matrix<Rational> act2(const Rep& X, const Rep& Y, const Elem& h, int d) {
  Matrix<Rational> m({X.dim * Y.dim, X.dim * Y.dim});
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Rational& c = h[a * d + b];
      if (c.is_zero()) continue;
      auto k = kron(X.rho[a], Y.rho[b]);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (!k.data[i].is_zero()) m.data[i].add_mul(c, k.data[i]);
    }
  return m;
}

inline bool check_module(const HopfData& H, const Rep& X) {
  if (static_cast<int>(X.rho.size()) != H.dim) return false;
  if (act(X, H.unit) != identity<Rational>(X.dim)) return false;
  for (int a = 0; a < H.dim; ++a)
    for (int b = 0; b < H.dim; ++b)
      if (matmul(X.rho[a], X.rho[b]) != act(X, H.mul(H.e(a), H.e(b)))) return false;
  return true;
}

inline Rep trivial_rep(const HopfData& H) {
  Rep X{"1", 1, {}};
  for (int a = 0; a < H.dim; ++a) X.rho.push_back(Matrix<Rational>({1, 1}, {H.counit[a]}));
  return X;
}

inline Rep regular_rep(const HopfData& H) {
  Rep X{"H", H.dim, {}};
  for (int a = 0; a < H.dim; ++a) X.rho.push_back(H.left_mult(H.e(a)));
  if (!check_module(H, X)) throw std::logic_error("regular_rep: module axioms fail");
  return X;
}

// H / H(g - 1) for a grouplike g: the module induced from the trivial
// module of the group generated by g.
inline Rep induced_rep(const HopfData& H, const Elem& g) {
  int d = H.dim;
  std::vector<std::vector<Rational>> cols;
  auto extend = [&](const std::vector<Rational>& v) {
    Matrix<Rational> m({d, static_cast<int>(cols.size()) + 1});
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (int r = 0; r < d; ++r) m.at(r, static_cast<int>(c)) = cols[c][r];
    for (int r = 0; r < d; ++r) m.at(r, static_cast<int>(cols.size())) = v[r];
    if (rank(m) <= static_cast<int>(cols.size())) return false;
    cols.push_back(v);
    return true;
  };
  for (int b = 0; b < d; ++b) {
    Elem v = H.mul(H.e(b), g);
    for (int k = 0; k < d; ++k) v[k] -= H.e(b)[k];
    extend(v);
  }
  int r = static_cast<int>(cols.size());
  for (int k = 0; k < d; ++k) extend(H.e(k));
  int q = d - r;
  Matrix<Rational> B({d, d});
  for (int c = 0; c < d; ++c)
    for (int i = 0; i < d; ++i) B.at(i, c) = cols[c][i];
  auto Binv = solve_exact(B, identity<Rational>(d)).x;
  Rep X{"Ind", q, {}};
  for (int a = 0; a < d; ++a) {
    auto L = H.left_mult(H.e(a));
    Matrix<Rational> m({q, q});
    for (int j = 0; j < q; ++j) {
      std::vector<Rational> y(d);
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) y[i] += L.at(i, k) * cols[r + j][k];
      for (int i = 0; i < q; ++i)
        for (int k = 0; k < d; ++k) m.at(i, j) += Binv.at(r + i, k) * y[k];
    }
    X.rho.push_back(m);
  }
  if (!check_module(H, X)) throw std::logic_error("induced_rep: module axioms fail");
  return X;
}

inline Rep dual_rep(const HopfData& H, const Rep& X) {
  Rep Y{X.name + "*", X.dim, {}};
  for (int a = 0; a < H.dim; ++a) Y.rho.push_back(transpose(act(X, H.S(H.e(a)))));
  if (!check_module(H, Y)) throw std::logic_error("dual_rep: module axioms fail");
  return Y;
}

inline Rep tensor_rep(const HopfData& H, const Rep& X, const Rep& Y) {
  Rep Z{X.name + "(x)" + Y.name, X.dim * Y.dim, {}};
  for (int a = 0; a < H.dim; ++a) Z.rho.push_back(act2(X, Y, H.Delta(H.e(a)), H.dim));
  if (!check_module(H, Z)) throw std::logic_error("tensor_rep: module axioms fail");
  return Z;
}

// c_{X,Y}: X (x) Y -> Y (x) X, x (x) y -> R2 y (x) R1 x
inline Matrix<Rational> braiding(const HopfData& H, const Rep& X, const Rep& Y) {
  return matmul(flip<Rational>(X.dim, Y.dim), act2(X, Y, H.R_elem(), H.dim));
}

// c_{Y,X}^{-1}: X (x) Y -> Y (x) X
inline Matrix<Rational> braiding_inv(const HopfData& H, const Rep& X, const Rep& Y) {
  return matmul(act2(Y, X, H.Rinv_elem(), H.dim), flip<Rational>(X.dim, Y.dim));
}

inline Matrix<Rational> twist(const HopfData& H, const Rep& X) { return act(X, H.vinv); }

// ev: X* (x) X -> 1
inline Matrix<Rational> ev(const Rep& X) {
  Matrix<Rational> m({1, X.dim * X.dim});
  for (int i = 0; i < X.dim; ++i) m.at(0, i * X.dim + i) = Rational(1);
  return m;
}
// coev: 1 -> X (x) X*
inline Matrix<Rational> coev(const Rep& X) { return transpose(ev(X)); }
// ev~: X (x) X* -> 1, x (x) f -> f(p x)
inline Matrix<Rational> ev_tilde(const HopfData& H, const Rep& X) {
  auto P = act(X, H.pivot);
  Matrix<Rational> m({1, X.dim * X.dim});
  for (int j = 0; j < X.dim; ++j)
    for (int i = 0; i < X.dim; ++i) m.at(0, j * X.dim + i) = P.at(i, j);
  return m;
}
// coev~: 1 -> X* (x) X, sum e^i (x) p^{-1} e_i
inline Matrix<Rational> coev_tilde(const HopfData& H, const Rep& X) {
  auto P = act(X, H.pivot_inv);
  Matrix<Rational> m({X.dim * X.dim, 1});
  for (int i = 0; i < X.dim; ++i)
    for (int k = 0; k < X.dim; ++k) m.at(i * X.dim + k, 0) = P.at(k, i);
  return m;
}

// ---------------------------------------------------------------------------
// Ribbon models evaluated by the sweep

struct Obj {
  int color = 0;
  bool dual = false;
  auto operator<=>(const Obj&) const = default;
};

template <class S>
struct ModelCache {
  std::map<std::tuple<int, int, Obj, Obj>, std::shared_ptr<Sparse<S>>> ops, ops_t;

  template <class F>
  const Sparse<S>& get(int kind, int tok, Obj l, Obj r, bool transposed, F make) {
    auto key = std::make_tuple(kind, tok, l, r);
    auto& m = transposed ? ops_t : ops;
    auto it = m.find(key);
    if (it != m.end()) return *it->second;
    std::shared_ptr<Sparse<S>> sp;
    if (transposed)
      sp = std::make_shared<Sparse<S>>(get(kind, tok, l, r, false, make).transposed());
    else
      sp = std::make_shared<Sparse<S>>(make());
    return *m.emplace(key, sp).first->second;
  }
};

// Rep(H) with one representation per color. An up strand of color c carries
// X_c, a down strand carries X_c^*.
struct HopfModel {
  using Scalar = Rational;
  const HopfData* H;
  std::vector<Rep> colors, duals;
  ModelCache<Rational> cache;

  HopfModel(const HopfData& h, std::vector<Rep> cs) : H(&h), colors(std::move(cs)) {
    for (auto& X : colors) duals.push_back(dual_rep(h, X));
  }

  const Rep& rep(Obj o) const { return o.dual ? duals.at(o.color) : colors.at(o.color); }
  int dim(Obj o) const { return rep(o).dim; }

  const Sparse<Rational>& crossing(bool pos, Obj l, Obj r, bool tr = false) {
    return cache.get(pos ? 0 : 1, 0, l, r, tr, [&] {
      return Sparse<Rational>(pos ? braiding(*H, rep(l), rep(r)) : braiding_inv(*H, rep(l), rep(r)));
    });
  }
  const Sparse<Rational>& cap(char o, Obj l, Obj r, bool tr = false) {
    return cache.get(2, o, l, r, tr, [&] {
      return Sparse<Rational>(o == 'l' ? ev_tilde(*H, rep(l)) : ev(rep(r)));
    });
  }
  const Sparse<Rational>& cup(char o, Obj l, Obj r, bool tr = false) {
    return cache.get(3, o, l, r, tr, [&] {
      return Sparse<Rational>(o == 'l' ? coev(rep(l)) : coev_tilde(*H, rep(r)));
    });
  }
};

// Kauffman bracket: one self-dual 2-dimensional object over Z[A, A^{-1}].
struct KauffmanModel {
  using Scalar = Laurent;
  ModelCache<Laurent> cache;
  Matrix<Laurent> cupm, capm, xp, xn;

  KauffmanModel() {
    Laurent A = Laurent::A(1), Ai = Laurent::A(-1);
    cupm = Matrix<Laurent>({4, 1}, {Laurent(), A, -Ai, Laurent()});
    capm = Matrix<Laurent>({1, 4}, {Laurent(), -A, Ai, Laurent()});
    auto cc = matmul(cupm, capm);
    auto I = identity<Laurent>(4);
    auto comb = [&](const Laurent& a, const Laurent& b) {
      Matrix<Laurent> m({4, 4});
      for (std::size_t i = 0; i < m.size(); ++i) m.data[i] = a * I.data[i] + b * cc.data[i];
      return m;
    };
    xp = comb(A, Ai);
    xn = comb(Ai, A);
    // the positive right-rotation kink must evaluate to -A^3
    Laurent want = -Laurent::A(3);
    auto kink_val = [&](const Matrix<Laurent>& x) {
      auto m = matmul(kron(identity<Laurent>(2), capm), matmul(kron(x, identity<Laurent>(2)),
                                                               kron(identity<Laurent>(2), cupm)));
      return m;
    };
    if (kink_val(xp) != scale(identity<Laurent>(2), want)) std::swap(xp, xn);
    if (kink_val(xp) != scale(identity<Laurent>(2), want))
      throw std::logic_error("kauffman_model: kink normalisation failed");
  }

  int dim(Obj) const { return 2; }
  const Sparse<Laurent>& crossing(bool pos, Obj l, Obj r, bool tr = false) {
    (void)l;
    (void)r;
    return cache.get(pos ? 0 : 1, 0, Obj{}, Obj{}, tr, [&] { return Sparse<Laurent>(pos ? xp : xn); });
  }
  const Sparse<Laurent>& cap(char, Obj, Obj, bool tr = false) {
    return cache.get(2, 0, Obj{}, Obj{}, tr, [&] { return Sparse<Laurent>(capm); });
  }
  const Sparse<Laurent>& cup(char, Obj, Obj, bool tr = false) {
    return cache.get(3, 0, Obj{}, Obj{}, tr, [&] { return Sparse<Laurent>(cupm); });
  }
};

inline KauffmanModel kauffman_model() { return KauffmanModel(); }

struct WidthLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int max_sweep_width() {
  if (const char* s = std::getenv("RSL_MAX_WIDTH")) {
    int w = std::atoi(s);
    if (w > 0) return w;
  }
  return 10;
}

inline int max_width(const SlicedDiagram& d) {
  int w = std::max(d.width_in, d.width_out);
  for (auto& s : d.info.slices) w = std::max(w, static_cast<int>(s.size()));
  return w;
}

inline std::vector<int> uniform_coloring(const SlicedDiagram& d, int c = 0) { return std::vector<int>(d.ncomp(), c); }

// Bottom-up sweep. `state` is batch x (legs of the bottom slice), row-major
// with the batch index slowest. Returns batch x (legs of the top slice).
template <class Model>
std::vector<typename Model::Scalar> sweep_up(Model& M, const SlicedDiagram& d, const std::vector<int>& color,
                                             std::vector<typename Model::Scalar> state, int batch) {
  if (static_cast<int>(color.size()) < d.ncomp()) throw std::invalid_argument("coloring misses a component");
  auto obj = [&](std::size_t k, int p) { return Obj{color[d.info.comp_at(k, p)], !d.info.up_at(k, p)}; };
  std::vector<int> dims{batch};
  for (int p = 0; p < d.width_in; ++p) dims.push_back(M.dim(obj(0, p)));
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    int p = e.pos;
    if (e.is_crossing()) {
      Obj l = obj(k, p), r = obj(k, p + 1);
      state = apply_block(state, dims, p + 1, 2, {M.dim(r), M.dim(l)}, M.crossing(e.kind == EventKind::CrossPos, l, r));
      std::swap(dims[p + 1], dims[p + 2]);
    } else if (e.kind == EventKind::Cap) {
      state = apply_block(state, dims, p + 1, 2, {}, M.cap(e.orient, obj(k, p), obj(k, p + 1)));
      dims.erase(dims.begin() + p + 1, dims.begin() + p + 3);
    } else {
      Obj l = obj(k + 1, p), r = obj(k + 1, p + 1);
      state = apply_block(state, dims, p + 1, 0, {M.dim(l), M.dim(r)}, M.cup(e.orient, l, r));
      dims.insert(dims.begin() + p + 1, {M.dim(l), M.dim(r)});
    }
  }
  return state;
}

// Top-down sweep of a batch of covectors on the top slice; returns covectors
// on the bottom slice (precomposition with the diagram).
template <class Model>
std::vector<typename Model::Scalar> sweep_down(Model& M, const SlicedDiagram& d, const std::vector<int>& color,
                                               std::vector<typename Model::Scalar> state, int batch) {
  if (static_cast<int>(color.size()) < d.ncomp()) throw std::invalid_argument("coloring misses a component");
  auto obj = [&](std::size_t k, int p) { return Obj{color[d.info.comp_at(k, p)], !d.info.up_at(k, p)}; };
  std::size_t K = d.events.size();
  std::vector<int> dims{batch};
  for (int p = 0; p < d.width_out; ++p) dims.push_back(M.dim(obj(K, p)));
  for (std::size_t kk = K; kk-- > 0;) {
    const Event& e = d.events[kk];
    int p = e.pos;
    if (e.is_crossing()) {
      Obj l = obj(kk, p), r = obj(kk, p + 1);
      state = apply_block(state, dims, p + 1, 2, {M.dim(l), M.dim(r)},
                          M.crossing(e.kind == EventKind::CrossPos, l, r, true));
      std::swap(dims[p + 1], dims[p + 2]);
    } else if (e.kind == EventKind::Cap) {
      Obj l = obj(kk, p), r = obj(kk, p + 1);
      state = apply_block(state, dims, p + 1, 0, {M.dim(l), M.dim(r)}, M.cap(e.orient, l, r, true));
      dims.insert(dims.begin() + p + 1, {M.dim(l), M.dim(r)});
    } else {
      Obj l = obj(kk + 1, p), r = obj(kk + 1, p + 1);
      state = apply_block(state, dims, p + 1, 2, {}, M.cup(e.orient, l, r, true));
      dims.erase(dims.begin() + p + 1, dims.begin() + p + 3);
    }
  }
  return state;
}

inline std::size_t boundary_dim(const std::vector<int>& dims) {
  std::size_t n = 1;
  for (int x : dims) n *= static_cast<std::size_t>(x);
  return n;
}

template <class Model>
std::vector<int> boundary_dims(Model& M, const SlicedDiagram& d, const std::vector<int>& color, bool top) {
  std::size_t k = top ? d.events.size() : 0;
  int w = top ? d.width_out : d.width_in;
  std::vector<int> dims;
  for (int p = 0; p < w; ++p) dims.push_back(M.dim(Obj{color[d.info.comp_at(k, p)], !d.info.up_at(k, p)}));
  return dims;
}

// The morphism of D as a (dim top) x (dim bottom) matrix.
template <class Model>
Matrix<typename Model::Scalar> rt_evaluate(Model& M, const SlicedDiagram& d, const std::vector<int>& color) {
  using S = typename Model::Scalar;
  if (static_cast<int>(color.size()) < d.ncomp()) throw std::invalid_argument("coloring misses a component");
  if (max_width(d) > max_sweep_width()) throw WidthLimit("diagram wider than RSL_MAX_WIDTH");
  auto din = boundary_dims(M, d, color, false);
  auto dout = boundary_dims(M, d, color, true);
  int nin = static_cast<int>(boundary_dim(din)), nout = static_cast<int>(boundary_dim(dout));
  std::vector<S> st(static_cast<std::size_t>(nin) * nin);
  for (int i = 0; i < nin; ++i) st[static_cast<std::size_t>(i) * nin + i] = S(1);
  auto out = sweep_up(M, d, color, std::move(st), nin);
  Matrix<S> m({nout, nin});
  for (int i = 0; i < nin; ++i)
    for (int o = 0; o < nout; ++o) m.at(o, i) = out[static_cast<std::size_t>(i) * nout + o];
  return m;
}

// Kauffman bracket matrix of any diagram.
inline Matrix<Laurent> bracket(const SlicedDiagram& d) {
  KauffmanModel K;
  return rt_evaluate(K, d, uniform_coloring(d));
}

// ---------------------------------------------------------------------------
// Twist convention check

// Right-rotation positive kink on one up strand colored by X, evaluated by the sweep.
inline Matrix<Rational> kink_value(const HopfData& H, const Rep& X, bool right_rotation = true, bool positive = true) {
  HopfModel M(H, {X});
  auto d = validate(kink(positive, right_rotation, 0, true), DiagramType::StringLink, 1);
  return rt_evaluate(M, d, {0});
}

// Fails loudly when the diagrammatic twist disagrees with the action of v^{-1}.
inline void assert_twist_convention(const HopfData& H, const Rep& X) {
  if (kink_value(H, X, true) != twist(H, X) || kink_value(H, X, false) != twist(H, X))
    throw std::logic_error("twist convention mismatch for " + X.name + " over " + H.name);
}

} // namespace rsl
