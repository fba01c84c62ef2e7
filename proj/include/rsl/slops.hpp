#pragma once

#include "rsl/cyclic.hpp"
#include "rsl/diagram.hpp"
#include "rsl/moves.hpp"

#include <string>
#include <vector>

namespace rsl {

// Global switches used by the mutation tests. Each flips one routing choice.
struct SlopsConventions {
  bool rotate_back_over = true;   // rotation detour passes in front
  bool insert_over = false;       // inserted strand passes over
  bool merge_front = false;       // merge arc passes over
  bool duplicate_flip = false;    // the two copies at a crossing block get the opposite crossing
  bool rotate_front_over = true;
};

inline SlopsConventions& slops_conventions() {
  static SlopsConventions c;
  return c;
}

namespace detail {

inline void require_string_link(const SlicedDiagram& t, const char* op) {
  if (!is_string_link(t, t.width_in)) throw DiagramError(std::string(op) + ": input is not a string link");
}

inline void range_check(int i, int lo, int hi, const char* op) {
  if (i < lo || i > hi)
    throw std::out_of_range(std::string(op) + ": index " + std::to_string(i) + " outside [" + std::to_string(lo) +
                            "," + std::to_string(hi) + "]");
}

} // namespace detail

// Tracks the new strand through `events` and returns its final position
// together with the threaded event list.
inline std::vector<Event> insert_strand(const std::vector<Event>& events, int i, bool over,
                                        int* final_q = nullptr) {
  std::vector<Event> out;
  int q = i;
  auto move_left = [&]() {
    out.push_back(xing(!over, q - 1));
    --q;
  };
  for (const Event& e : events) {
    if ((e.is_crossing() || e.kind == EventKind::Cap) && q == e.pos + 1) move_left();
    Event f = e;
    if (e.pos >= q) f.pos = e.pos + 1;
    out.push_back(f);
    if (e.kind == EventKind::Cap && q >= e.pos + 2) q -= 2;
    if (e.kind == EventKind::Cup && q > e.pos) q += 2;
  }
  if (final_q) *final_q = q;
  return out;
}

// Moves the strand sitting at position q (in a slice of width w+1) to
// position target, crossing under (over when `over`).
inline void route_to(std::vector<Event>& out, int q, int target, bool over) {
  while (q > target) {
    out.push_back(xing(!over, q - 1));
    --q;
  }
  while (q < target) {
    // the moving strand is the left input
    out.push_back(xing(over, q));
    ++q;
  }
}

// ---------------------------------------------------------------------------
// Cocyclic operators

// delta_i^n: T at level n-1 (n strands) -> level n.
inline SlicedDiagram insert_trivial(const SlicedDiagram& t, int i) {
  detail::require_string_link(t, "insert_trivial");
  detail::range_check(i, 0, t.width_in, "insert_trivial");
  bool over = slops_conventions().insert_over;
  int q = 0;
  auto ev = insert_strand(t.events, i, over, &q);
  route_to(ev, q, i, over);
  return validate(ev, DiagramType::StringLink, t.width_in + 1);
}

// sigma_j^n: T at level n+1 (n+2 strands) -> level n. Joins the top of
// component j to the bottom of component j+1 through the back.
inline SlicedDiagram merge_behind(const SlicedDiagram& t, int j) {
  detail::require_string_link(t, "merge_behind");
  detail::range_check(j, 0, t.width_in - 2, "merge_behind");
  bool over = slops_conventions().merge_front;
  std::vector<Event> ev{cup(j + 1, 'r')};
  // T sits on the strands after the cup, with the returning strand at j+1
  int q = 0;
  auto threaded = insert_strand(t.events, j + 1, over, &q);
  ev.insert(ev.end(), threaded.begin(), threaded.end());
  route_to(ev, q, j + 1, over);
  ev.push_back(cap(j, 'l'));
  return validate(ev, DiagramType::StringLink, t.width_in - 1);
}

// tau_n: component 0 is re-routed to the last slot, in front of the other
// strands (an under detour breaks tau delta_i = delta_{i-1} tau).
inline SlicedDiagram rotate_back(const SlicedDiagram& t) {
  detail::require_string_link(t, "rotate_back");
  int n = t.width_in - 1;
  if (n <= 0) return t;
  bool over = slops_conventions().rotate_back_over;
  std::vector<Event> ev;
  for (int p = n - 1; p >= 0; --p) ev.push_back(xing(!over, p));
  ev.insert(ev.end(), t.events.begin(), t.events.end());
  for (int p = 0; p < n; ++p) ev.push_back(xing(over, p));
  return validate(ev, DiagramType::StringLink, t.width_in);
}

// ---------------------------------------------------------------------------
// Cyclic operators

// Keeps the sub-diagram formed by the components with keep[c] true.
inline SlicedDiagram restrict_components(const SlicedDiagram& d, const std::vector<bool>& keep) {
  std::vector<Event> ev;
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    const auto& sl = d.info.slices[k];
    auto kept_before = [&](int p) {
      int c = 0;
      for (int x = 0; x < p; ++x)
        if (keep[d.info.node_comp[sl[x]]]) ++c;
      return c;
    };
    if (e.kind == EventKind::Cup) {
      int comp = d.info.comp_at(k + 1, e.pos);
      if (keep[comp]) ev.push_back({e.kind, kept_before(e.pos), e.orient});
      continue;
    }
    bool a = keep[d.info.comp_at(k, e.pos)], b = keep[d.info.comp_at(k, e.pos + 1)];
    if (e.kind == EventKind::Cap) {
      if (a) ev.push_back({e.kind, kept_before(e.pos), e.orient});
    } else if (a && b) {
      ev.push_back({e.kind, kept_before(e.pos), 0});
    }
  }
  std::vector<int> up;
  int w = 0;
  for (int p = 0; p < d.width_in; ++p)
    if (keep[d.info.comp_of_bottom[p]]) {
      up.push_back(d.up_in[p] ? 1 : 0);
      ++w;
    }
  DiagramType t = d.type == DiagramType::StringLink ? DiagramType::StringLink : DiagramType::Tangle;
  return validate(ev, t, w, up);
}

// d_i^n: T at level n (n+1 strands) -> level n-1.
inline SlicedDiagram delete_component(const SlicedDiagram& t, int i) {
  detail::require_string_link(t, "delete");
  if (t.width_in < 2) throw std::out_of_range("delete: level 0 has no face");
  detail::range_check(i, 0, t.width_in - 1, "delete");
  std::vector<bool> keep(t.info.ncomp, true);
  keep[i] = false;
  return restrict_components(t, keep);
}

// Blackboard 2-cable of component j of any diagram; the left copy keeps the
// id j at the bottom.
inline SlicedDiagram cable_component(const SlicedDiagram& d, int j) {
  bool flip = slops_conventions().duplicate_flip;
  std::vector<Event> ev;
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    const auto& sl = d.info.slices[k];
    auto dbl = [&](int x) { return d.info.node_comp[sl[x]] == j; };
    auto newpos = [&](int p) {
      int c = p;
      for (int x = 0; x < p; ++x)
        if (dbl(x)) ++c;
      return c;
    };
    if (e.kind == EventKind::Cup) {
      int comp = d.info.comp_at(k + 1, e.pos);
      int P = newpos(e.pos);
      if (comp == j) {
        ev.push_back({EventKind::Cup, P, e.orient});
        ev.push_back({EventKind::Cup, P + 1, e.orient});
      } else {
        ev.push_back({EventKind::Cup, P, e.orient});
      }
      continue;
    }
    int P = newpos(e.pos);
    bool a = dbl(e.pos), b = dbl(e.pos + 1);
    if (e.kind == EventKind::Cap) {
      if (a) {
        ev.push_back({EventKind::Cap, P + 1, e.orient});
        ev.push_back({EventKind::Cap, P, e.orient});
      } else {
        ev.push_back({EventKind::Cap, P, e.orient});
      }
      continue;
    }
    EventKind kk = e.kind;
    EventKind inner = kk;
    if (flip) inner = kk == EventKind::CrossPos ? EventKind::CrossNeg : EventKind::CrossPos;
    if (a && b) {
      ev.push_back({kk, P + 1, 0});
      ev.push_back({inner, P, 0});
      ev.push_back({inner, P + 2, 0});
      ev.push_back({kk, P + 1, 0});
    } else if (a) {
      ev.push_back({kk, P + 1, 0});
      ev.push_back({inner, P, 0});
    } else if (b) {
      ev.push_back({kk, P, 0});
      ev.push_back({inner, P + 1, 0});
    } else {
      ev.push_back({kk, P, 0});
    }
  }
  std::vector<int> up;
  for (int p = 0; p < d.width_in; ++p) {
    up.push_back(d.up_in[p] ? 1 : 0);
    if (d.info.comp_of_bottom[p] == j) up.push_back(d.up_in[p] ? 1 : 0);
  }
  return validate(ev, d.type == DiagramType::StringLink ? DiagramType::StringLink : DiagramType::Tangle,
                  static_cast<int>(up.size()), up);
}

// s_j^n: T at level n (n+1 strands) -> level n+1.
inline SlicedDiagram duplicate(const SlicedDiagram& t, int j) {
  detail::require_string_link(t, "duplicate");
  detail::range_check(j, 0, t.width_in - 1, "duplicate");
  return cable_component(t, j);
}

// t_n: the last component is re-routed to slot 0; inverse of rotate_back.
inline SlicedDiagram rotate_front(const SlicedDiagram& t) {
  detail::require_string_link(t, "rotate_front");
  int n = t.width_in - 1;
  if (n <= 0) return t;
  bool over = slops_conventions().rotate_front_over;
  std::vector<Event> ev;
  for (int p = 0; p < n; ++p) ev.push_back(xing(over, p));
  ev.insert(ev.end(), t.events.begin(), t.events.end());
  for (int p = n - 1; p >= 0; --p) ev.push_back(xing(!over, p));
  return validate(ev, DiagramType::StringLink, t.width_in);
}

// ---------------------------------------------------------------------------
// Handles

// Bends each top end back down behind the diagram. Ribbon k of the result
// has bottom bases 2k (pointing down) and 2k+1 (pointing up).
inline SlicedDiagram frame_f(const SlicedDiagram& t) {
  detail::require_string_link(t, "frame_f");
  int n = t.width_in;
  std::vector<Event> ev;
  // bottom order r0 t0 r1 t1 ...; bring every r to the far left under everything
  for (int k = 1; k < n; ++k)
    for (int p = 2 * k - 1; p >= 0; --p) ev.push_back(xpos(p));
  // now r_{n-1} ... r_0 t_0 ... t_{n-1}
  for (auto e : t.events) {
    e.pos += n;
    ev.push_back(e);
  }
  for (int p = n - 1; p >= 0; --p) ev.push_back(cap(p, 'r'));
  std::vector<int> up;
  for (int k = 0; k < n; ++k) {
    up.push_back(0);
    up.push_back(1);
  }
  return validate(ev, DiagramType::Handle, 2 * n, up);
}

// Inverse of frame_f: nested cups on the left give the top ends u_0..u_{n-1}
// and the down strands r_{n-1}..r_0, which are interleaved back with the
// bottom ends before h.
inline SlicedDiagram frame_g(const SlicedDiagram& h) {
  int n = h.width_in / 2;
  if (!is_handle(h, n)) throw DiagramError("frame_g: input is not a handle");
  std::vector<Event> ev;
  for (int k = 0; k < n; ++k) ev.push_back(cup(k, 'l'));
  // undo the r-to-the-left braid of frame_f
  std::vector<Event> b;
  for (int k = 1; k < n; ++k)
    for (int p = 2 * k - 1; p >= 0; --p) b.push_back(xneg(p + n));
  ev.insert(ev.end(), b.rbegin(), b.rend());
  for (auto e : h.events) {
    e.pos += n;
    ev.push_back(e);
  }
  return validate(ev, DiagramType::StringLink, n);
}

// ---------------------------------------------------------------------------
// Dual families

// Generic evaluation of a word of cocyclic-side generators on string links.
inline CocyclicImpl<SlicedDiagram> geometric_cocyclic_impl() {
  CocyclicImpl<SlicedDiagram> impl;
  impl.coface = [](const SlicedDiagram& t, int i, int) { return insert_trivial(t, i); };
  impl.codegeneracy = [](const SlicedDiagram& t, int j, int) { return merge_behind(t, j); };
  impl.cocyclic = [](const SlicedDiagram& t, int) { return rotate_back(t); };
  impl.cocyclic_inv = [](const SlicedDiagram& t, int) { return rotate_front(t); };
  return impl;
}

inline CyclicImpl<SlicedDiagram> geometric_cyclic_impl() {
  CyclicImpl<SlicedDiagram> impl;
  impl.face = [](const SlicedDiagram& t, int i, int) { return delete_component(t, i); };
  impl.degeneracy = [](const SlicedDiagram& t, int j, int) { return duplicate(t, j); };
  impl.cyclic = [](const SlicedDiagram& t, int) { return rotate_front(t); };
  impl.cyclic_inv = [](const SlicedDiagram& t, int) { return rotate_back(t); };
  return impl;
}

// Tilde operators of the cyclic set obtained from the cocyclic one by L:
//   d~_i = sigma_i (i<n), d~_n = sigma_0 tau_n^{-1}, s~_j = delta_{j+1}, t~_n = tau_n^{-1}.
// Names: "d", "s", "t" act on the cyclic dual, "delta", "sigma", "tau" on the
// cocyclic dual of the cyclic structure.
inline SlicedDiagram dual_family_direct(const std::string& op, const SlicedDiagram& t, int idx) {
  int n = t.width_in - 1;
  if (op == "d") {
    detail::range_check(idx, 0, n, "dual d");
    if (n < 1) throw std::out_of_range("dual d: level 0 has no face");
    if (idx < n) return merge_behind(t, idx);
    return merge_behind(rotate_front(t), 0);
  }
  if (op == "s") {
    detail::range_check(idx, 0, n, "dual s");
    return insert_trivial(t, idx + 1);
  }
  if (op == "t") return rotate_front(t);
  // cocyclic dual of the cyclic set: delta~_i = s_i (i<n), delta~_n = s_0 then t_n^{-1},
  // sigma~_j = d_{j+1}, tau~_n = t_n^{-1}
  if (op == "delta") {
    // here t is at level n-1 and the result at level n
    int m = t.width_in;
    detail::range_check(idx, 0, m, "dual delta");
    if (idx < m) return duplicate(t, idx);
    return rotate_back(duplicate(t, 0));
  }
  if (op == "sigma") {
    detail::range_check(idx, 0, n - 1, "dual sigma");
    return delete_component(t, idx + 1);
  }
  if (op == "tau") return rotate_back(t);
  throw std::invalid_argument("unknown dual operator '" + op + "'");
}

// The same operators computed by pushing the generator through dual_L and
// evaluating the resulting word with the primal operators.
inline SlicedDiagram dual_family_via_L(const std::string& op, const SlicedDiagram& t, int idx) {
  int n = t.width_in - 1;
  if (op == "d" || op == "s" || op == "t") {
    Token g = op == "d" ? face(idx, n) : op == "s" ? degeneracy(idx, n) : cyclic_op(n);
    return apply_word(geometric_cocyclic_impl(), dual_L(g), t);
  }
  if (op == "delta" || op == "sigma" || op == "tau") {
    int lvl = op == "delta" ? t.width_in : n;
    Token g = op == "delta" ? coface(idx, lvl) : op == "sigma" ? codegeneracy(idx, lvl) : cocyclic(lvl);
    return apply_word(geometric_cyclic_impl(), dual_L_op(g), t);
  }
  throw std::invalid_argument("unknown dual operator '" + op + "'");
}

} // namespace rsl
