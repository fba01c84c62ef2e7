#pragma once

#include "rsl/diagram.hpp"

#include <optional>
#include <random>
#include <tuple>
#include <string>
#include <vector>

namespace rsl {

enum class MoveKind { R1Pos, R1Neg, R1Ribbon, R2, R3, Slide };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Pos: return "R1+";
    case MoveKind::R1Neg: return "R1-";
    case MoveKind::R1Ribbon: return "R1ribbon";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
    case MoveKind::Slide: return "slide";
  }
  return "?";
}

// A move applied at event index `at`.
//   R1+/R1-   rotation exchange of the kink occupying events at..at+2
//   R1ribbon  insert (variant 0..3) a cancelling kink pair on strand `pos`, or remove (variant 4) one at `at`
//   R2        insert x+x- (variant 0) or x-x+ (variant 1) at strand `pos`, or remove (variant 2) the pair at `at`
//   R3        triangle move on events at..at+2
//   slide     exchange events at, at+1 with disjoint supports
struct Move {
  MoveKind kind = MoveKind::Slide;
  int at = 0;
  int pos = 0;
  int variant = 0;

  std::string str() const {
    return std::string(to_string(kind)) + " at=" + std::to_string(at) + " pos=" + std::to_string(pos) +
           " v=" + std::to_string(variant);
  }
};

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Kink on the strand at p whose direction is `up`. The right-rotation kink
// hangs its loop to the right of the strand, the left-rotation kink to the left.
inline std::vector<Event> kink(bool positive, bool right_rotation, int p, bool up) {
  if (right_rotation) {
    char t = up ? 'l' : 'r';
    return {cup(p + 1, t), xing(positive, p), cap(p + 1, t)};
  }
  char t = up ? 'r' : 'l';
  return {cup(p, t), xing(positive, p + 1), cap(p, t)};
}

namespace detail {

// Matches a kink at events at..at+2; returns (positive, right_rotation, strand pos).
inline std::optional<std::tuple<bool, bool, int>> match_kink(const SlicedDiagram& d, int at) {
  if (at < 0 || at + 2 >= static_cast<int>(d.events.size())) return std::nullopt;
  const Event& c = d.events[at];
  const Event& x = d.events[at + 1];
  const Event& k = d.events[at + 2];
  if (c.kind != EventKind::Cup || !x.is_crossing() || k.kind != EventKind::Cap) return std::nullopt;
  bool pos = x.kind == EventKind::CrossPos;
  for (int rr = 0; rr < 2; ++rr)
    for (int up = 0; up < 2; ++up) {
      int p = rr ? c.pos - 1 : c.pos;
      if (p < 0) continue;
      auto kk = kink(pos, rr, p, up);
      if (kk[0] == c && kk[1] == x && kk[2] == k && d.info.up_at(at, p) == (up == 1))
        return std::make_tuple(pos, rr == 1, p);
    }
  return std::nullopt;
}

} // namespace detail

inline SlicedDiagram apply_move(const SlicedDiagram& d, const Move& m) {
  auto ev = d.events;
  int n = static_cast<int>(ev.size());
  auto mismatch = [&](const std::string& why) { throw MoveError(m.str() + ": pattern mismatch (" + why + ")"); };
  if (m.at < 0 || m.at > n) mismatch("site out of range");
  switch (m.kind) {
    case MoveKind::R1Pos:
    case MoveKind::R1Neg: {
      auto mk = detail::match_kink(d, m.at);
      if (!mk) mismatch("no kink");
      auto [pos, right, p] = *mk;
      if (pos != (m.kind == MoveKind::R1Pos)) mismatch("kink sign");
      bool up = d.info.up_at(m.at, p);
      auto rep = kink(pos, !right, p, up);
      std::copy(rep.begin(), rep.end(), ev.begin() + m.at);
      break;
    }
    case MoveKind::R1Ribbon: {
      if (m.variant == 4) {
        auto a = detail::match_kink(d, m.at), b = detail::match_kink(d, m.at + 3);
        if (!a || !b) mismatch("no kink pair");
        if (std::get<0>(*a) == std::get<0>(*b) || std::get<2>(*a) != std::get<2>(*b)) mismatch("kinks do not cancel");
        ev.erase(ev.begin() + m.at, ev.begin() + m.at + 6);
      } else {
        if (m.variant < 0 || m.variant > 3) mismatch("variant");
        int w = m.at < n ? d.width_before(m.at) : d.width_out;
        if (m.pos < 0 || m.pos >= w) mismatch("strand out of range");
        bool up = m.at < n ? d.info.up_at(m.at, m.pos) : d.up_out[m.pos];
        bool first_pos = (m.variant & 1) == 0;
        bool second_right = (m.variant & 2) == 0;
        auto a = kink(first_pos, true, m.pos, up);
        auto b = kink(!first_pos, second_right, m.pos, up);
        a.insert(a.end(), b.begin(), b.end());
        ev.insert(ev.begin() + m.at, a.begin(), a.end());
      }
      break;
    }
    case MoveKind::R2: {
      if (m.variant == 2) {
        if (m.at + 1 >= n) mismatch("no pair");
        const Event& a = ev[m.at];
        const Event& b = ev[m.at + 1];
        if (!a.is_crossing() || !b.is_crossing() || a.pos != b.pos || a.kind == b.kind) mismatch("not an R2 pair");
        ev.erase(ev.begin() + m.at, ev.begin() + m.at + 2);
      } else {
        int w = m.at < n ? d.width_before(m.at) : d.width_out;
        if (m.pos < 0 || m.pos + 1 >= w) mismatch("strand out of range");
        bool first = m.variant == 0;
        ev.insert(ev.begin() + m.at, {xing(first, m.pos), xing(!first, m.pos)});
      }
      break;
    }
    case MoveKind::R3: {
      if (m.at + 2 >= n) mismatch("no triple");
      Event a = ev[m.at], b = ev[m.at + 1], c = ev[m.at + 2];
      if (!a.is_crossing() || !b.is_crossing() || !c.is_crossing()) mismatch("not crossings");
      if (a.kind == c.kind && a.kind != b.kind) mismatch("mixed triple a=c!=b");
      int p;
      if (a.pos == c.pos && b.pos == a.pos + 1)
        p = a.pos + 1;
      else if (a.pos == c.pos && b.pos == a.pos - 1)
        p = a.pos - 1;
      else
        mismatch("positions");
      ev[m.at] = {c.kind, p, 0};
      ev[m.at + 1] = {b.kind, a.pos, 0};
      ev[m.at + 2] = {a.kind, p, 0};
      break;
    }
    case MoveKind::Slide: {
      if (m.at + 1 >= n) mismatch("no pair");
      auto sw = commute(ev[m.at], ev[m.at + 1]);
      if (!sw) mismatch("overlapping supports");
      ev[m.at] = sw->first;
      ev[m.at + 1] = sw->second;
      break;
    }
  }
  return revalidate(d, ev);
}

// Every applicable move at every site (insertions restricted to site strands).
inline std::vector<Move> applicable_moves(const SlicedDiagram& d, bool with_insertions = true) {
  std::vector<Move> out;
  int n = static_cast<int>(d.events.size());
  for (int at = 0; at < n; ++at) {
    if (auto mk = detail::match_kink(d, at))
      out.push_back({std::get<0>(*mk) ? MoveKind::R1Pos : MoveKind::R1Neg, at, 0, 0});
    if (at + 5 < n) {
      auto a = detail::match_kink(d, at), b = detail::match_kink(d, at + 3);
      if (a && b && std::get<0>(*a) != std::get<0>(*b) && std::get<2>(*a) == std::get<2>(*b))
        out.push_back({MoveKind::R1Ribbon, at, 0, 4});
    }
    if (at + 1 < n) {
      const Event& a = d.events[at];
      const Event& b = d.events[at + 1];
      if (a.is_crossing() && b.is_crossing() && a.pos == b.pos && a.kind != b.kind)
        out.push_back({MoveKind::R2, at, 0, 2});
      if (commute(a, b)) out.push_back({MoveKind::Slide, at, 0, 0});
    }
    if (at + 2 < n) {
      const Event& a = d.events[at];
      const Event& b = d.events[at + 1];
      const Event& c = d.events[at + 2];
      if (a.is_crossing() && b.is_crossing() && c.is_crossing() && a.pos == c.pos &&
          std::abs(b.pos - a.pos) == 1 && !(a.kind == c.kind && a.kind != b.kind))
        out.push_back({MoveKind::R3, at, 0, 0});
    }
  }
  if (with_insertions)
    for (int at = 0; at <= n; ++at) {
      int w = at < n ? d.width_before(at) : d.width_out;
      for (int p = 0; p + 1 < w; ++p)
        for (int v = 0; v < 2; ++v) out.push_back({MoveKind::R2, at, p, v});
      for (int p = 0; p < w; ++p)
        for (int v = 0; v < 4; ++v) out.push_back({MoveKind::R1Ribbon, at, p, v});
    }
  return out;
}

// Applies `steps` random moves. Insertions are drawn with probability
// insert_bias so diagrams do not grow without bound.
template <class Rng>
SlicedDiagram random_moves(const SlicedDiagram& d, int steps, Rng& rng, std::vector<Move>* log = nullptr,
                           double insert_bias = 0.3) {
  SlicedDiagram cur = d;
  std::uniform_real_distribution<double> coin(0, 1);
  for (int s = 0; s < steps; ++s) {
    bool ins = coin(rng) < insert_bias;
    auto moves = applicable_moves(cur, ins);
    if (!ins && moves.empty()) moves = applicable_moves(cur, true);
    if (moves.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    Move m = moves[pick(rng)];
    cur = apply_move(cur, m);
    if (log) log->push_back(m);
  }
  return cur;
}

} // namespace rsl
