#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsl {

struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generators of the cyclic category and of its opposite.
//   Coface       delta_i^n : n-1 -> n
//   Codegeneracy sigma_j^n : n+1 -> n
//   Cocyclic     tau_n     : n   -> n     (CocyclicInv is tau_n^{-1})
//   Face         d_i^n     : n -> n-1     (opposite category)
//   Degeneracy   s_j^n     : n -> n+1
//   Cyclic       t_n       : n -> n       (CyclicInv is t_n^{-1})
enum class Gen { Coface, Codegeneracy, Cocyclic, CocyclicInv, Face, Degeneracy, Cyclic, CyclicInv };

struct Token {
  Gen g;
  int idx = 0;  // i or j; unused for cyclic operators
  int n = 0;    // the level superscript

  int src() const {
    switch (g) {
      case Gen::Coface: return n - 1;
      case Gen::Codegeneracy: return n + 1;
      case Gen::Face: return n;
      case Gen::Degeneracy: return n;
      default: return n;
    }
  }
  int tgt() const {
    switch (g) {
      case Gen::Coface: return n;
      case Gen::Codegeneracy: return n;
      case Gen::Face: return n - 1;
      case Gen::Degeneracy: return n + 1;
      default: return n;
    }
  }
  bool is_cocyclic_side() const {
    return g == Gen::Coface || g == Gen::Codegeneracy || g == Gen::Cocyclic || g == Gen::CocyclicInv;
  }
  bool operator==(const Token& o) const { return g == o.g && idx == o.idx && n == o.n; }

  std::string str() const {
    std::ostringstream os;
    switch (g) {
      case Gen::Coface: os << "delta_" << idx << "^" << n; break;
      case Gen::Codegeneracy: os << "sigma_" << idx << "^" << n; break;
      case Gen::Cocyclic: os << "tau_" << n; break;
      case Gen::CocyclicInv: os << "tau_" << n << "^-1"; break;
      case Gen::Face: os << "d_" << idx << "^" << n; break;
      case Gen::Degeneracy: os << "s_" << idx << "^" << n; break;
      case Gen::Cyclic: os << "t_" << n; break;
      case Gen::CyclicInv: os << "t_" << n << "^-1"; break;
    }
    return os.str();
  }
};

inline Token coface(int i, int n) { return {Gen::Coface, i, n}; }
inline Token codegeneracy(int j, int n) { return {Gen::Codegeneracy, j, n}; }
inline Token cocyclic(int n) { return {Gen::Cocyclic, 0, n}; }
inline Token cocyclic_inv(int n) { return {Gen::CocyclicInv, 0, n}; }
inline Token face(int i, int n) { return {Gen::Face, i, n}; }
inline Token degeneracy(int j, int n) { return {Gen::Degeneracy, j, n}; }
inline Token cyclic_op(int n) { return {Gen::Cyclic, 0, n}; }
inline Token cyclic_inv(int n) { return {Gen::CyclicInv, 0, n}; }

// A word is read as a composite w[0] o w[1] o ... o w[k-1]; w.back() acts first.
using GeneratorWord = std::vector<Token>;

inline std::string word_str(const GeneratorWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].str();
  return s.empty() ? "id" : s;
}

inline void check_token(const Token& t) {
  bool ok = true;
  switch (t.g) {
    case Gen::Coface:
    case Gen::Face: ok = t.n >= 1 && t.idx >= 0 && t.idx <= t.n; break;
    case Gen::Codegeneracy:
    case Gen::Degeneracy: ok = t.n >= 0 && t.idx >= 0 && t.idx <= t.n; break;
    default: ok = t.n >= 0;
  }
  if (!ok) throw std::invalid_argument("generator out of range: " + t.str());
}

inline void check_composable(const GeneratorWord& w) {
  for (auto& t : w) check_token(t);
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k].src() != w[k + 1].tgt())
      throw CompositionError("composition mismatch between " + w[k].str() + " and " + w[k + 1].str());
}

// Morphism of the simplicial category in epi-mono normal form
// delta_{i_1} ... delta_{i_s} sigma_{j_1} ... sigma_{j_t}, i decreasing, j increasing.
struct SimplicialMor {
  int src = 0, tgt = 0;
  std::vector<int> cofaces;
  std::vector<int> codegeneracies;

  bool operator==(const SimplicialMor&) const = default;

  // The underlying increasing map [src] -> [tgt].
  std::vector<int> as_map() const {
    std::vector<int> f(src + 1);
    for (int x = 0; x <= src; ++x) f[x] = x;
    for (auto it = codegeneracies.rbegin(); it != codegeneracies.rend(); ++it)
      for (int& y : f)
        if (y > *it) --y;
    for (auto it = cofaces.rbegin(); it != cofaces.rend(); ++it)
      for (int& y : f)
        if (y >= *it) ++y;
    return f;
  }

  static SimplicialMor from_map(const std::vector<int>& f, int tgt) {
    SimplicialMor m;
    m.src = static_cast<int>(f.size()) - 1;
    m.tgt = tgt;
    std::vector<bool> hit(tgt + 1, false);
    for (int y : f) hit.at(y) = true;
    for (int y = tgt; y >= 0; --y)
      if (!hit[y]) m.cofaces.push_back(y);
    for (int x = 0; x + 1 < static_cast<int>(f.size()); ++x)
      if (f[x] == f[x + 1]) m.codegeneracies.push_back(x);
    return m;
  }

  GeneratorWord word() const {
    GeneratorWord w;
    int lvl = src - static_cast<int>(codegeneracies.size());
    // cofaces: the last one in the list acts first
    std::vector<Token> cf;
    for (auto it = cofaces.rbegin(); it != cofaces.rend(); ++it) cf.push_back(coface(*it, ++lvl));
    std::reverse(cf.begin(), cf.end());
    w.insert(w.end(), cf.begin(), cf.end());
    lvl = src;
    std::vector<Token> dg;
    for (auto it = codegeneracies.rbegin(); it != codegeneracies.rend(); ++it) dg.push_back(codegeneracy(*it, --lvl));
    std::reverse(dg.begin(), dg.end());
    w.insert(w.end(), dg.begin(), dg.end());
    return w;
  }
};

// Morphism of the cyclic category: simplicial part composed with tau_src^rot.
struct CyclicMor {
  SimplicialMor simplicial;
  int rot = 0;

  int src() const { return simplicial.src; }
  int tgt() const { return simplicial.tgt; }
  bool operator==(const CyclicMor&) const = default;

  static CyclicMor identity(int n) {
    CyclicMor m;
    m.simplicial.src = m.simplicial.tgt = n;
    return m;
  }

  GeneratorWord word() const {
    GeneratorWord w = simplicial.word();
    for (int k = 0; k < rot; ++k) w.push_back(cocyclic(src()));
    return w;
  }

  std::string str() const {
    std::ostringstream os;
    os << src() << "->" << tgt() << " [";
    for (std::size_t k = 0; k < simplicial.cofaces.size(); ++k) os << (k ? "," : "") << simplicial.cofaces[k];
    os << "|";
    for (std::size_t k = 0; k < simplicial.codegeneracies.size(); ++k)
      os << (k ? "," : "") << simplicial.codegeneracies[k];
    os << "] rot=" << rot;
    return os.str();
  }
};

inline std::vector<int> generator_map(const Token& t) {
  std::vector<int> f(t.src() + 1);
  for (int x = 0; x <= t.src(); ++x) {
    if (t.g == Gen::Coface)
      f[x] = x < t.idx ? x : x + 1;
    else
      f[x] = x <= t.idx ? x : x - 1;
  }
  return f;
}

// Rewrites a composable word of the cyclic category with the relations
// (1)-(8) into (simplicial part) o tau^k, then canonicalizes both parts.
inline CyclicMor normalize(GeneratorWord w, int level_if_empty = -1) {
  for (auto& t : w)
    if (!t.is_cocyclic_side()) throw std::invalid_argument("normalize: opposite-category token " + t.str());
  check_composable(w);
  if (w.empty()) {
    if (level_if_empty < 0) throw std::invalid_argument("normalize: empty word needs a level");
    return CyclicMor::identity(level_if_empty);
  }
  int src = w.back().src(), tgt = w.front().tgt();
  // tau_n^{-1} = tau_n^n
  GeneratorWord v;
  for (auto& t : w) {
    if (t.g == Gen::CocyclicInv)
      for (int k = 0; k < t.n; ++k) v.push_back(cocyclic(t.n));
    else
      v.push_back(t);
  }
  // push every tau to the right end
  for (;;) {
    int p = -1;
    for (int k = static_cast<int>(v.size()) - 2; k >= 0; --k)
      if (v[k].g == Gen::Cocyclic && v[k + 1].g != Gen::Cocyclic) {
        p = k;
        break;
      }
    if (p < 0) break;
    int n = v[p].n;
    Token g = v[p + 1];
    GeneratorWord rep;
    if (g.g == Gen::Coface) {
      if (g.idx >= 1)
        rep = {coface(g.idx - 1, n), cocyclic(n - 1)};
      else
        rep = {coface(n, n)};
    } else {
      if (g.idx >= 1)
        rep = {codegeneracy(g.idx - 1, n), cocyclic(n + 1)};
      else
        rep = {codegeneracy(n, n), cocyclic(n + 1), cocyclic(n + 1)};
    }
    v.erase(v.begin() + p, v.begin() + p + 2);
    v.insert(v.begin() + p, rep.begin(), rep.end());
  }
  int rot = 0;
  std::vector<int> f(src + 1);
  for (int x = 0; x <= src; ++x) f[x] = x;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (it->g == Gen::Cocyclic) {
      ++rot;
      continue;
    }
    auto g = generator_map(*it);
    for (int& y : f) y = g[y];
  }
  CyclicMor m;
  m.simplicial = SimplicialMor::from_map(f, tgt);
  m.rot = rot % (src + 1);
  return m;
}

inline CyclicMor compose(const CyclicMor& f, const CyclicMor& g) {
  if (f.src() != g.tgt())
    throw CompositionError("compose: level mismatch " + std::to_string(f.src()) + " vs " + std::to_string(g.tgt()));
  GeneratorWord w = f.word();
  GeneratorWord wg = g.word();
  w.insert(w.end(), wg.begin(), wg.end());
  return normalize(w, f.src());
}

// Cyclic duality on one generator of the opposite category.
inline GeneratorWord dual_L(const Token& t) {
  check_token(t);
  switch (t.g) {
    case Gen::Face:
      if (t.idx < t.n) return {codegeneracy(t.idx, t.n - 1)};
      return {codegeneracy(0, t.n - 1), cocyclic_inv(t.n)};
    case Gen::Degeneracy: return {coface(t.idx + 1, t.n + 1)};
    case Gen::Cyclic: return {cocyclic_inv(t.n)};
    case Gen::CyclicInv: return {cocyclic(t.n)};
    default: throw std::invalid_argument("dual_L expects a face, degeneracy or cyclic operator: " + t.str());
  }
}

inline GeneratorWord dual_L(const GeneratorWord& w) {
  check_composable(w);
  GeneratorWord out;
  for (auto& t : w) {
    auto img = dual_L(t);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

// The opposite of a word: reversed, with each generator replaced by its
// opposite (delta <-> d, sigma <-> s, tau <-> t).
inline Token op_token(const Token& t) {
  switch (t.g) {
    case Gen::Coface: return face(t.idx, t.n);
    case Gen::Codegeneracy: return degeneracy(t.idx, t.n);
    case Gen::Cocyclic: return cyclic_op(t.n);
    case Gen::CocyclicInv: return cyclic_inv(t.n);
    case Gen::Face: return coface(t.idx, t.n);
    case Gen::Degeneracy: return codegeneracy(t.idx, t.n);
    case Gen::Cyclic: return cocyclic(t.n);
    case Gen::CyclicInv: return cocyclic_inv(t.n);
  }
  return t;
}

inline GeneratorWord op_word(const GeneratorWord& w) {
  GeneratorWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(op_token(*it));
  return out;
}

// L^op on a cyclic-category generator, as a word of the opposite category.
inline GeneratorWord dual_L_op(const Token& t) {
  if (!t.is_cocyclic_side()) throw std::invalid_argument("dual_L_op expects a cyclic-category generator: " + t.str());
  return op_word(dual_L(op_token(t)));
}

// ---------------------------------------------------------------------------
// Relation harness

template <class X>
struct CocyclicImpl {
  std::function<X(const X&, int i, int n)> coface;        // delta_i^n
  std::function<X(const X&, int j, int n)> codegeneracy;  // sigma_j^n
  std::function<X(const X&, int n)> cocyclic;             // tau_n
  std::function<X(const X&, int n)> cocyclic_inv;         // optional; tau_n^n otherwise
};

template <class X>
struct CyclicImpl {
  std::function<X(const X&, int i, int n)> face;        // d_i^n
  std::function<X(const X&, int j, int n)> degeneracy;  // s_j^n
  std::function<X(const X&, int n)> cyclic;             // t_n
  std::function<X(const X&, int n)> cyclic_inv;         // optional; t_n^n otherwise
};

template <class X>
X apply_token(const CocyclicImpl<X>& impl, const Token& t, const X& x) {
  switch (t.g) {
    case Gen::Coface: return impl.coface(x, t.idx, t.n);
    case Gen::Codegeneracy: return impl.codegeneracy(x, t.idx, t.n);
    case Gen::Cocyclic: return impl.cocyclic(x, t.n);
    case Gen::CocyclicInv: {
      if (impl.cocyclic_inv) return impl.cocyclic_inv(x, t.n);
      X y = x;
      for (int k = 0; k < t.n; ++k) y = impl.cocyclic(y, t.n);
      return y;
    }
    default: throw std::invalid_argument("cocyclic impl cannot apply " + t.str());
  }
}

template <class X>
X apply_token(const CyclicImpl<X>& impl, const Token& t, const X& x) {
  switch (t.g) {
    case Gen::Face: return impl.face(x, t.idx, t.n);
    case Gen::Degeneracy: return impl.degeneracy(x, t.idx, t.n);
    case Gen::Cyclic: return impl.cyclic(x, t.n);
    case Gen::CyclicInv: {
      if (impl.cyclic_inv) return impl.cyclic_inv(x, t.n);
      X y = x;
      for (int k = 0; k < t.n; ++k) y = impl.cyclic(y, t.n);
      return y;
    }
    default: throw std::invalid_argument("cyclic impl cannot apply " + t.str());
  }
}

template <class Impl, class X>
X apply_word(const Impl& impl, const GeneratorWord& w, const X& x) {
  X y = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = apply_token(impl, *it, y);
  return y;
}

// Action of a normalized cyclic-category morphism on a cocyclic carrier.
template <class X>
X act(const CocyclicImpl<X>& impl, const CyclicMor& m, const X& x) {
  return apply_word(impl, m.word(), x);
}

// Action of the opposite of a cyclic-category morphism on a cyclic carrier:
// the opposite of delta/sigma/tau is d/s/t, applied in reverse order.
template <class X>
X act(const CyclicImpl<X>& impl, const CyclicMor& m, const X& x) {
  GeneratorWord w = m.word();
  GeneratorWord op;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Token& t = *it;
    if (t.g == Gen::Coface)
      op.push_back(face(t.idx, t.n));
    else if (t.g == Gen::Codegeneracy)
      op.push_back(degeneracy(t.idx, t.n));
    else
      op.push_back(cyclic_op(t.n));
  }
  // op is read left to right as composite, so the first token acts last
  return apply_word(impl, op, x);
}

struct RelationInstance {
  int eq = 0;  // equation number 1..16
  int n = 0, i = 0, j = 0;
  int src_level = 0;
  GeneratorWord lhs, rhs;

  std::string id() const {
    std::ostringstream os;
    os << "(" << eq << ") n=" << n << " i=" << i << " j=" << j;
    return os.str();
  }
  int max_level() const {
    int m = src_level;
    for (auto* w : {&lhs, &rhs})
      for (auto& t : *w) m = std::max({m, t.src(), t.tgt()});
    return m;
  }
};

// All instances of the cocyclic relations (1)-(8) whose levels stay <= max_level.
inline std::vector<RelationInstance> cocyclic_relations(int max_level) {
  std::vector<RelationInstance> out;
  auto push = [&](int eq, int n, int i, int j, GeneratorWord l, GeneratorWord r) {
    RelationInstance ri{eq, n, i, j, l.back().src(), std::move(l), std::move(r)};
    check_composable(ri.lhs);
    if (!ri.rhs.empty()) check_composable(ri.rhs);
    if (ri.max_level() <= max_level) out.push_back(std::move(ri));
  };
  for (int n = 0; n <= max_level; ++n) {
    if (n >= 1)
      for (int j = 1; j <= n + 1; ++j)
        for (int i = 0; i < j; ++i)
          push(1, n, i, j, {coface(j, n + 1), coface(i, n)}, {coface(i, n + 1), coface(j - 1, n)});
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        push(2, n, i, j, {codegeneracy(j, n), codegeneracy(i, n + 1)},
             {codegeneracy(i, n), codegeneracy(j + 1, n + 1)});
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        GeneratorWord l{codegeneracy(j, n), coface(i, n + 1)};
        if (i < j)
          push(3, n, i, j, l, {coface(i, n), codegeneracy(j - 1, n - 1)});
        else if (i == j || i == j + 1)
          push(3, n, i, j, l, {});
        else
          push(3, n, i, j, l, {coface(i - 1, n), codegeneracy(j, n - 1)});
      }
    for (int i = 1; i <= n; ++i) push(4, n, i, 0, {cocyclic(n), coface(i, n)}, {coface(i - 1, n), cocyclic(n - 1)});
    if (n >= 1) push(5, n, 0, 0, {cocyclic(n), coface(0, n)}, {coface(n, n)});
    for (int i = 1; i <= n; ++i)
      push(6, n, i, 0, {cocyclic(n), codegeneracy(i, n)}, {codegeneracy(i - 1, n), cocyclic(n + 1)});
    push(7, n, 0, 0, {cocyclic(n), codegeneracy(0, n)}, {codegeneracy(n, n), cocyclic(n + 1), cocyclic(n + 1)});
    GeneratorWord pw(n + 1, cocyclic(n));
    push(8, n, 0, 0, pw, {});
  }
  return out;
}

// All instances of the cyclic relations (9)-(16) whose levels stay <= max_level.
inline std::vector<RelationInstance> cyclic_relations(int max_level) {
  std::vector<RelationInstance> out;
  auto push = [&](int eq, int n, int i, int j, GeneratorWord l, GeneratorWord r) {
    RelationInstance ri{eq, n, i, j, l.back().src(), std::move(l), std::move(r)};
    check_composable(ri.lhs);
    if (!ri.rhs.empty()) check_composable(ri.rhs);
    if (ri.max_level() <= max_level) out.push_back(std::move(ri));
  };
  for (int n = 0; n <= max_level; ++n) {
    if (n >= 1)
      for (int j = 1; j <= n + 1; ++j)
        for (int i = 0; i < j; ++i)
          push(9, n, i, j, {face(i, n), face(j, n + 1)}, {face(j - 1, n), face(i, n + 1)});
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        push(10, n, i, j, {degeneracy(i, n + 1), degeneracy(j, n)}, {degeneracy(j + 1, n + 1), degeneracy(i, n)});
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        GeneratorWord l{face(i, n + 1), degeneracy(j, n)};
        if (i < j)
          push(11, n, i, j, l, {degeneracy(j - 1, n - 1), face(i, n)});
        else if (i == j || i == j + 1)
          push(11, n, i, j, l, {});
        else
          push(11, n, i, j, l, {degeneracy(j, n - 1), face(i - 1, n)});
      }
    for (int i = 1; i <= n; ++i) push(12, n, i, 0, {face(i, n), cyclic_op(n)}, {cyclic_op(n - 1), face(i - 1, n)});
    if (n >= 1) push(13, n, 0, 0, {face(0, n), cyclic_op(n)}, {face(n, n)});
    for (int i = 1; i <= n; ++i)
      push(14, n, i, 0, {degeneracy(i, n), cyclic_op(n)}, {cyclic_op(n + 1), degeneracy(i - 1, n)});
    push(15, n, 0, 0, {degeneracy(0, n), cyclic_op(n)}, {cyclic_op(n + 1), cyclic_op(n + 1), degeneracy(n, n)});
    GeneratorWord pw(n + 1, cyclic_op(n));
    push(16, n, 0, 0, pw, {});
  }
  return out;
}

struct RelationFailure {
  std::string relation;
  int sample = 0;
  std::string witness;
};

struct RelationReport {
  int checked = 0, passed = 0, failed = 0;
  std::map<int, std::pair<int, int>> per_equation;  // eq -> (checked, failed)
  std::vector<RelationFailure> failures;
  bool ok() const { return failed == 0; }
};

// Evaluates every relation instance on every sampled carrier element of the
// source level; eq decides equality, describe renders a witness.
template <class Impl, class X>
RelationReport check_relations(const Impl& impl, const std::vector<RelationInstance>& rels,
                               const std::function<std::vector<X>(int level)>& sampler,
                               const std::function<bool(const X&, const X&)>& eq,
                               const std::function<std::string(const X&)>& describe = {}) {
  RelationReport rep;
  std::map<int, std::vector<X>> samples;
  for (auto& r : rels) {
    auto it = samples.find(r.src_level);
    if (it == samples.end()) it = samples.emplace(r.src_level, sampler(r.src_level)).first;
    int k = 0;
    for (auto& x : it->second) {
      X l = apply_word(impl, r.lhs, x);
      X rr = r.rhs.empty() ? x : apply_word(impl, r.rhs, x);
      bool ok = eq(l, rr);
      ++rep.checked;
      auto& pe = rep.per_equation[r.eq];
      ++pe.first;
      if (ok) {
        ++rep.passed;
      } else {
        ++rep.failed;
        ++pe.second;
        rep.failures.push_back({r.id(), k, describe ? describe(x) : std::string()});
      }
      ++k;
    }
  }
  return rep;
}

} // namespace rsl
