#pragma once

#include "rsl/repcat.hpp"

#include <random>

namespace rsl {

// A covector (or a batch of vectors) on a row of legs, pushed or pulled
// through local linear maps.
struct LegState {
  std::vector<Rational> st;
  std::vector<int> dims;  // dims[0] is the batch

  static LegState vectors_identity(const std::vector<int>& legs) {
    LegState s;
    std::size_t n = boundary_dim(legs);
    s.dims = {static_cast<int>(n)};
    s.dims.insert(s.dims.end(), legs.begin(), legs.end());
    s.st.assign(n * n, Rational());
    for (std::size_t i = 0; i < n; ++i) s.st[i * n + i] = Rational(1);
    return s;
  }
  static LegState covector(const std::vector<Rational>& f, const std::vector<int>& legs) {
    LegState s;
    s.dims = {1};
    s.dims.insert(s.dims.end(), legs.begin(), legs.end());
    s.st = f;
    return s;
  }

  // applies op (rows = prod out_dims, cols = prod of nin legs) at leg pos
  void apply(int pos, int nin, const std::vector<int>& out_dims, const Sparse<Rational>& op) {
    st = apply_block(st, dims, pos + 1, nin, out_dims, op);
    dims.erase(dims.begin() + pos + 1, dims.begin() + pos + 1 + nin);
    dims.insert(dims.begin() + pos + 1, out_dims.begin(), out_dims.end());
  }
  void apply(int pos, int nin, const std::vector<int>& out_dims, const Matrix<Rational>& op) {
    apply(pos, nin, out_dims, Sparse<Rational>(op));
  }

  int width() const { return static_cast<int>(dims.size()) - 1; }

  // batch of vectors -> matrix (columns = batch)
  Matrix<Rational> as_matrix() const {
    int b = dims[0];
    int rows = static_cast<int>(st.size() / b);
    Matrix<Rational> m({rows, b});
    for (int i = 0; i < b; ++i)
      for (int r = 0; r < rows; ++r) m.at(r, i) = st[static_cast<std::size_t>(i) * rows + r];
    return m;
  }
};

// A local step of a linear map between tensor powers of F: op acts on legs
// [pos, pos+nin) and produces legs of dims out.
struct LocalOp {
  int pos = 0, nin = 0;
  std::vector<int> out;
  std::shared_ptr<Matrix<Rational>> op;
};

// Pushes a batch of vectors through steps in order.
inline Matrix<Rational> chain_matrix(const std::vector<int>& legs, const std::vector<LocalOp>& steps) {
  auto s = LegState::vectors_identity(legs);
  for (auto& o : steps) s.apply(o.pos, o.nin, o.out, *o.op);
  return s.as_matrix();
}

// f o (steps), for a covector f on the output legs. `legs` are the input legs.
inline std::vector<Rational> pull_back(const std::vector<Rational>& f, const std::vector<int>& legs,
                                       const std::vector<LocalOp>& steps) {
  // forward pass for the leg dimensions
  std::vector<std::vector<int>> shapes{legs};
  for (auto& o : steps) {
    auto d = shapes.back();
    d.erase(d.begin() + o.pos, d.begin() + o.pos + o.nin);
    d.insert(d.begin() + o.pos, o.out.begin(), o.out.end());
    shapes.push_back(d);
  }
  auto s = LegState::covector(f, shapes.back());
  for (std::size_t k = steps.size(); k-- > 0;) {
    auto& o = steps[k];
    std::vector<int> in(shapes[k].begin() + o.pos, shapes[k].begin() + o.pos + o.nin);
    s.apply(o.pos, static_cast<int>(o.out.size()), in, Sparse<Rational>(*o.op).transposed());
  }
  return s.st;
}

// ---------------------------------------------------------------------------
// Coend of Rep(H): F = H^* with the coadjoint action

struct CoendError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoendData {
  const HopfData* H = nullptr;
  int d = 0;
  Rep F;                                // coadjoint representation on H^*
  Matrix<Rational> iH;                  // i_H: H^* (x) H -> F, d x d^2
  Matrix<Rational> Delta, eps, unit, m, S;  // d^2 x d, 1 x d, d x 1, d x d^2, d x d
  Matrix<Rational> cFF, cFF_inv, theta, theta_inv;
  bool mult_uses_inverse_braiding = false;
  std::vector<std::string> notes;

  std::shared_ptr<Matrix<Rational>> sp(const Matrix<Rational>& x) const { return std::make_shared<Matrix<Rational>>(x); }
};

// i_X(f (x) x)(h) = f(h x) as a d x (dim X)^2 matrix
inline Matrix<Rational> dinatural_i(const HopfData& H, const Rep& X) {
  Matrix<Rational> m({H.dim, X.dim * X.dim});
  for (int a = 0; a < H.dim; ++a)
    for (int i = 0; i < X.dim; ++i)
      for (int j = 0; j < X.dim; ++j) m.at(a, i * X.dim + j) = X.rho[a].at(i, j);
  return m;
}

inline Rep coadjoint_rep(const HopfData& H) {
  int d = H.dim;
  Rep F{"F", d, {}};
  for (int h = 0; h < d; ++h) {
    Matrix<Rational> m({d, d});
    Elem D = H.Delta(H.e(h));
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        const Rational& c = D[p * d + q];
        if (c.is_zero()) continue;
        Elem left = H.S(H.e(p));
        for (int x = 0; x < d; ++x) {
          Elem y = H.mul(H.mul(left, H.e(x)), H.e(q));
          // (h.e^c)(e_x) = e^c(S(h1) e_x h2)
          for (int cc = 0; cc < d; ++cc)
            if (!y[cc].is_zero()) m.at(x, cc) += c * y[cc];
        }
      }
    F.rho.push_back(m);
  }
  if (!check_module(H, F)) throw CoendError("coadjoint action is not a module");
  return F;
}

// X with X A = B
inline Matrix<Rational> solve_left(const Matrix<Rational>& A, const Matrix<Rational>& B, const std::string& what) {
  auto r = solve_exact(transpose(A), transpose(B));
  if (r.status == SolveStatus::Inconsistent) throw CoendError(what + ": inconsistent defining equation");
  if (r.status == SolveStatus::Underdetermined) throw CoendError(what + ": underdetermined (i not surjective)");
  return transpose(r.x);
}

namespace detail {

// i_{Y (x) X} o (id_{X^*} (x) c_{X, Y^* (x) Y}) : X^* X Y^* Y -> F, or with
// c^{-1}_{Y^* (x) Y, X} in place of c.
inline Matrix<Rational> mult_rhs(const HopfData& H, const Rep& X, const Rep& Y, bool inverse) {
  Rep Yd = dual_rep(H, Y);
  Rep YY = tensor_rep(H, Yd, Y);
  Matrix<Rational> c = inverse ? braiding_inv(H, X, YY) : braiding(H, X, YY);
  int dx = X.dim, dy = Y.dim;
  auto s = LegState::vectors_identity({dx, dx, dy, dy});
  s.apply(1, 3, {dy, dy, dx}, c);
  // now X^* Y^* Y X; i_{Y(x)X}(f (x) g (x) y (x) x)(k) = g(k1 y) f(k2 x)
  Matrix<Rational> iyx({H.dim, dx * dy * dy * dx});
  for (int k = 0; k < H.dim; ++k) {
    Elem D = H.Delta(H.e(k));
    for (int p = 0; p < H.dim; ++p)
      for (int q = 0; q < H.dim; ++q) {
        const Rational& c0 = D[p * H.dim + q];
        if (c0.is_zero()) continue;
        for (int f = 0; f < dx; ++f)
          for (int g = 0; g < dy; ++g)
            for (int y = 0; y < dy; ++y)
              for (int x = 0; x < dx; ++x) {
                Rational v = Y.rho[p].at(g, y) * X.rho[q].at(f, x);
                if (v.is_zero()) continue;
                iyx.at(k, ((f * dy + g) * dy + y) * dx + x) += c0 * v;
              }
      }
  }
  s.apply(0, 4, {H.dim}, iyx);
  return s.as_matrix();
}

} // namespace detail

inline bool check_bialgebra(const CoendData& C, const Matrix<Rational>& m) {
  int d = C.d;
  // Delta m = (m (x) m)(id (x) c_{F,F} (x) id)(Delta (x) Delta)
  auto lhs = LegState::vectors_identity({d, d});
  lhs.apply(0, 2, {d}, m);
  lhs.apply(0, 1, {d, d}, C.Delta);
  auto rhs = LegState::vectors_identity({d, d});
  rhs.apply(1, 1, {d, d}, C.Delta);
  rhs.apply(0, 1, {d, d}, C.Delta);
  rhs.apply(1, 2, {d, d}, C.cFF);
  rhs.apply(2, 2, {d}, m);
  rhs.apply(0, 2, {d}, m);
  return lhs.st == rhs.st;
}

inline CoendData coend_build(const HopfData& H) {
  CoendData C;
  C.H = &H;
  int d = C.d = H.dim;
  Rep X = regular_rep(H);
  C.F = coadjoint_rep(H);
  C.iH = dinatural_i(H, X);
  C.cFF = braiding(H, C.F, C.F);
  C.cFF_inv = braiding_inv(H, C.F, C.F);
  C.theta = twist(H, C.F);
  C.theta_inv = act(C.F, H.v);
  // counit: eps o i_X = ev_X
  C.eps = solve_left(C.iH, ev(X), "counit");
  // comultiplication: Delta o i_X = (i_X (x) i_X)(id (x) coev_X (x) id)
  {
    auto s = LegState::vectors_identity({d, d});
    s.apply(1, 0, {d, d}, coev(X));
    s.apply(2, 2, {d}, C.iH);
    s.apply(0, 2, {d}, C.iH);
    C.Delta = solve_left(C.iH, s.as_matrix(), "comultiplication");
  }
  // unit: i_1 o coev_1
  {
    Rep one = trivial_rep(H);
    auto i1 = dinatural_i(H, one);
    C.unit = i1;
    C.unit.shape = {d, 1};
  }
  // multiplication: m (i_X (x) i_Y) = i_{Y(x)X}(id (x) braiding)
  {
    auto II = kron(C.iH, C.iH);
    Matrix<Rational> found;
    for (int inv = 0; inv < 2; ++inv) {
      auto cand = solve_left(II, detail::mult_rhs(H, X, X, inv == 1), "multiplication");
      if (check_bialgebra(C, cand)) {
        found = cand;
        C.mult_uses_inverse_braiding = inv == 1;
        break;
      }
    }
    if (found.size() == 0) throw CoendError("multiplication: no braiding choice gives a bialgebra");
    C.m = found;
  }
  // antipode: m (S (x) id) Delta = u eps, linear in S
  {
    Matrix<Rational> A({d * d, d * d});  // rows (out k, input c), cols S(kk, a)
    Matrix<Rational> b({d * d, 1});
    for (int c = 0; c < d; ++c)
      for (int a = 0; a < d; ++a)
        for (int bb = 0; bb < d; ++bb) {
          const Rational& dc = C.Delta.at(a * d + bb, c);
          if (dc.is_zero()) continue;
          for (int kk = 0; kk < d; ++kk)
            for (int k = 0; k < d; ++k) {
              const Rational& mm = C.m.at(k, kk * d + bb);
              if (!mm.is_zero()) A.at(k * d + c, kk * d + a) += dc * mm;
            }
        }
    for (int k = 0; k < d; ++k)
      for (int c = 0; c < d; ++c) b.at(k * d + c, 0) = C.unit.at(k, 0) * C.eps.at(0, c);
    auto r = solve_exact(A, b);
    if (r.status != SolveStatus::Unique) throw CoendError("antipode: no unique solution");
    C.S = Matrix<Rational>({d, d});
    for (int kk = 0; kk < d; ++kk)
      for (int a = 0; a < d; ++a) C.S.at(kk, a) = r.x.at(kk * d + a, 0);
  }
  C.notes.push_back(std::string("multiplication braiding: ") + (C.mult_uses_inverse_braiding ? "inverse" : "direct"));
  return C;
}

// ---------------------------------------------------------------------------
// Checks

struct CoendReport {
  std::vector<AxiomResult> items;
  bool ok() const {
    for (auto& a : items)
      if (!a.ok) return false;
    return true;
  }
  std::string str() const {
    std::string s;
    for (auto& a : items) s += a.name + ": " + (a.ok ? "ok" : "FAIL") + "\n";
    return s;
  }
};

// Module maps X -> Y, as a basis of the solution space.
inline std::vector<Matrix<Rational>> module_maps(const HopfData& H, const Rep& X, const Rep& Y) {
  int n = X.dim * Y.dim;
  Matrix<Rational> A({H.dim * n, n});
  for (int a = 0; a < H.dim; ++a)
    for (int i = 0; i < Y.dim; ++i)
      for (int j = 0; j < X.dim; ++j) {
        int row = a * n + i * X.dim + j;
        // (rho_Y(a) f - f rho_X(a))_{ij}
        for (int k = 0; k < Y.dim; ++k) A.at(row, k * X.dim + j) += Y.rho[a].at(i, k);
        for (int k = 0; k < X.dim; ++k) A.at(row, i * X.dim + k) -= X.rho[a].at(k, j);
      }
  std::vector<Matrix<Rational>> out;
  for (auto& v : nullspace(A)) out.push_back(Matrix<Rational>({Y.dim, X.dim}, v));
  return out;
}

// d_X (f^* (x) id) = d_Y (id (x) f) with d = i
inline bool check_dinaturality(const HopfData& H, const Rep& X, const Rep& Y, const Matrix<Rational>& f) {
  auto iX = dinatural_i(H, X), iY = dinatural_i(H, Y);
  auto lhs = matmul(iX, kron(transpose(f), identity<Rational>(X.dim)));
  auto rhs = matmul(iY, kron(identity<Rational>(Y.dim), f));
  return lhs == rhs;
}

// The sample reps used by the dinaturality test.
inline std::vector<Rep> sample_reps(const HopfData& H) {
  Rep one = trivial_rep(H), R = regular_rep(H);
  Rep Rd = dual_rep(H, R);
  std::vector<Rep> v{one, R, Rd, tensor_rep(H, R, one), tensor_rep(H, one, Rd)};
  if (H.dim <= 4) v.push_back(tensor_rep(H, R, R));
  return v;
}

inline bool check_dinaturality_random(const HopfData& H, int samples, std::uint64_t seed, int* tried = nullptr) {
  auto reps = sample_reps(H);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  int done = 0;
  std::map<std::pair<int, int>, std::vector<Matrix<Rational>>> cache;
  int guard = 0;
  while (done < samples && guard++ < 50 * samples) {
    std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::make_pair(a, b), module_maps(H, reps[a], reps[b])).first;
    auto& basis = it->second;
    if (basis.empty()) continue;
    Matrix<Rational> f({reps[b].dim, reps[a].dim});
    bool nonzero = false;
    for (auto& B : basis) {
      Rational c(coef(rng));
      if (c.is_zero()) continue;
      nonzero = true;
      for (std::size_t k = 0; k < f.size(); ++k) f.data[k] += c * B.data[k];
    }
    if (!nonzero) continue;
    if (!check_dinaturality(H, reps[a], reps[b], f)) return false;
    ++done;
  }
  if (tried) *tried = done;
  return done == samples;
}

// delta_X = (id_X (x) i_X)(coev_X (x) id_X): X -> X (x) F
inline Matrix<Rational> universal_coaction(const HopfData& H, const Rep& X) {
  auto s = LegState::vectors_identity({X.dim});
  s.apply(0, 0, {X.dim, X.dim}, coev(X));
  s.apply(1, 2, {H.dim}, dinatural_i(H, X));
  return s.as_matrix();
}

// delta_{X (x) Y} against the composite of delta_X, delta_Y and m: the strand
// F of X passes Y (direct braiding) or its inverse, whichever m was built with.
inline bool check_coaction_multiplicative(const CoendData& C, const Rep& X, const Rep& Y) {
  const HopfData& H = *C.H;
  int d = C.d;
  Rep XY = tensor_rep(H, X, Y);
  auto lhs = universal_coaction(H, XY);
  auto s = LegState::vectors_identity({X.dim, Y.dim});
  s.apply(1, 1, {Y.dim, d}, universal_coaction(H, Y));
  s.apply(0, 1, {X.dim, d}, universal_coaction(H, X));
  // X F Y F -> X Y F F
  s.apply(1, 2, {Y.dim, d}, C.mult_uses_inverse_braiding ? braiding_inv(H, C.F, Y) : braiding(H, C.F, Y));
  s.apply(2, 2, {d}, C.m);
  return s.as_matrix() == lhs;
}

inline CoendReport check_coend(const CoendData& C, int dinat_samples = 20, std::uint64_t seed = 1) {
  CoendReport rep;
  auto add = [&](const std::string& n, bool ok) { rep.items.push_back({n, ok}); };
  const HopfData& H = *C.H;
  int d = C.d;
  auto I = identity<Rational>(d);
  add("dinaturality", check_dinaturality_random(H, dinat_samples, seed));
  // coalgebra
  add("coassociativity", matmul(kron(C.Delta, I), C.Delta) == matmul(kron(I, C.Delta), C.Delta));
  add("counit", matmul(kron(C.eps, I), C.Delta) == I && matmul(kron(I, C.eps), C.Delta) == I);
  // structure maps are module maps
  Rep FF = tensor_rep(H, C.F, C.F);
  bool mod = true;
  for (int a = 0; a < d; ++a) {
    mod = mod && matmul(C.Delta, C.F.rho[a]) == matmul(FF.rho[a], C.Delta);
    mod = mod && matmul(C.m, FF.rho[a]) == matmul(C.F.rho[a], C.m);
    mod = mod && matmul(C.S, C.F.rho[a]) == matmul(C.F.rho[a], C.S);
    mod = mod && matmul(C.eps, C.F.rho[a]) == scale(C.eps, H.counit[a]);
  }
  add("structure_maps_are_module_maps", mod);
  add("associativity", matmul(C.m, kron(C.m, I)) == matmul(C.m, kron(I, C.m)));
  add("unit", matmul(C.m, kron(C.unit, I)) == I && matmul(C.m, kron(I, C.unit)) == I);
  add("counit_of_unit", matmul(C.eps, C.unit) == identity<Rational>(1));
  add("bialgebra", check_bialgebra(C, C.m));
  add("counit_multiplicative", matmul(C.eps, C.m) == kron(C.eps, C.eps));
  add("comultiplication_unit", matmul(C.Delta, C.unit) == kron(C.unit, C.unit));
  auto ue = matmul(C.unit, C.eps);
  add("antipode", matmul(C.m, matmul(kron(C.S, I), C.Delta)) == ue && matmul(C.m, matmul(kron(I, C.S), C.Delta)) == ue);
  add("antipode_squared_is_twist", matmul(C.S, C.S) == C.theta);
  // coaction laws on the regular representation and the unit object
  Rep X = regular_rep(H), one = trivial_rep(H);
  auto dX = universal_coaction(H, X);
  add("coaction_counit", matmul(kron(identity<Rational>(X.dim), C.eps), dX) == identity<Rational>(X.dim));
  add("coaction_coassociative", matmul(kron(identity<Rational>(X.dim), C.Delta), dX) ==
                                    matmul(kron(dX, I), dX));
  add("unit_is_coaction_of_1", universal_coaction(H, one) == C.unit);
  add("coaction_multiplicative", check_coaction_multiplicative(C, X, X) && check_coaction_multiplicative(C, X, one));
  return rep;
}

inline const CoendData& coend_of(const HopfData& H) {
  static std::map<const HopfData*, std::unique_ptr<CoendData>> cache;
  auto it = cache.find(&H);
  if (it == cache.end()) it = cache.emplace(&H, std::make_unique<CoendData>(coend_build(H))).first;
  return *it->second;
}

} // namespace rsl
