#pragma once

#include "rsl/rational.hpp"
#include "rsl/tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsl {

enum class EventKind { CrossPos, CrossNeg, Cap, Cup };

// orient for caps/cups: 'l' or 'r', the leg that is directed upward.
struct Event {
  EventKind kind = EventKind::CrossPos;
  int pos = 0;
  char orient = 0;

  bool is_crossing() const { return kind == EventKind::CrossPos || kind == EventKind::CrossNeg; }
  int inputs() const { return kind == EventKind::Cup ? 0 : 2; }
  int outputs() const { return kind == EventKind::Cap ? 0 : 2; }
  bool operator==(const Event& o) const { return kind == o.kind && pos == o.pos && orient == o.orient; }
  bool operator<(const Event& o) const {
    if (pos != o.pos) return pos < o.pos;
    if (kind != o.kind) return kind < o.kind;
    return orient < o.orient;
  }

  std::string str() const {
    switch (kind) {
      case EventKind::CrossPos: return "x+ " + std::to_string(pos);
      case EventKind::CrossNeg: return "x- " + std::to_string(pos);
      case EventKind::Cap: return "cap " + std::to_string(pos) + " " + orient;
      case EventKind::Cup: return "cup " + std::to_string(pos) + " " + orient;
    }
    return "?";
  }
};

inline Event xpos(int p) { return {EventKind::CrossPos, p, 0}; }
inline Event xneg(int p) { return {EventKind::CrossNeg, p, 0}; }
inline Event xing(bool positive, int p) { return positive ? xpos(p) : xneg(p); }
inline Event cap(int p, char o) { return {EventKind::Cap, p, o}; }
inline Event cup(int p, char o) { return {EventKind::Cup, p, o}; }

enum class DiagramType { Tangle, StringLink, Handle };

struct DiagramError : std::runtime_error {
  int slice = -1;  // index of the offending event, or -1 for boundary problems
  int line = -1;   // source line when parsed from text
  DiagramError(const std::string& m, int s = -1, int l = -1) : std::runtime_error(m), slice(s), line(l) {}
};

// Per-node bookkeeping produced by a bottom-to-top sweep. A node is a maximal
// strand segment between boundary/cup and cap/boundary; crossings keep nodes.
struct Analysis {
  std::vector<std::vector<int>> slices;  // slices[k]: nodes left to right below event k; back() is the top
  std::vector<int> node_up;              // 1 up, 0 down
  std::vector<int> node_comp;
  int ncomp = 0;
  std::vector<int> comp_of_bottom, comp_of_top;
  std::vector<bool> comp_closed;

  // component of the strand at position p below event k
  int comp_at(int k, int p) const { return node_comp[slices[k][p]]; }
  bool up_at(int k, int p) const { return node_up[slices[k][p]] == 1; }
};

struct SlicedDiagram {
  DiagramType type = DiagramType::Tangle;
  int width_in = 0, width_out = 0;
  std::vector<Event> events;
  std::vector<bool> up_in, up_out;  // boundary orientation flags
  Analysis info;                    // filled by validate

  int ncomp() const { return info.ncomp; }
  // number of components; the level of a string link is ncomp()-1
  int strands() const { return width_in; }
  int level() const { return width_in - 1; }

  int width_before(std::size_t k) const { return static_cast<int>(info.slices.at(k).size()); }

  // crossing sign: +1 for x+ with both strands pointing the same vertical way
  int sign(std::size_t k) const {
    const Event& e = events[k];
    int s = e.kind == EventKind::CrossPos ? 1 : -1;
    bool a = info.up_at(k, e.pos), b = info.up_at(k, e.pos + 1);
    return a == b ? s : -s;
  }

  bool same_events(const SlicedDiagram& o) const { return width_in == o.width_in && events == o.events; }
};

namespace detail {
struct UF {
  std::vector<int> p;
  int make() {
    p.push_back(static_cast<int>(p.size()));
    return p.back();
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
} // namespace detail

// Checks widths and orientation consistency and numbers components.
// up_in may contain -1 for unknown; unknown boundary directions are inferred
// from caps and cups.
inline SlicedDiagram validate(const std::vector<Event>& events, DiagramType type, int width_in,
                              std::vector<int> up_in = {}) {
  if (width_in < 0) throw DiagramError("negative width");
  if (up_in.empty()) up_in.assign(width_in, type == DiagramType::StringLink ? 1 : -1);
  if (static_cast<int>(up_in.size()) != width_in) throw DiagramError("boundary orientation count mismatch");
  if (type == DiagramType::StringLink)
    for (int u : up_in)
      if (u == 0) throw DiagramError("boundary mismatch: string link strands must point up at the bottom");

  SlicedDiagram d;
  d.type = type;
  d.width_in = width_in;
  d.events = events;
  Analysis& a = d.info;
  detail::UF uf;
  std::vector<int> val;  // -1 unknown
  auto node = [&](int v) {
    int id = uf.make();
    val.push_back(v);
    return id;
  };
  auto require = [&](int nd, int v, int k) {
    if (val[nd] == -1)
      val[nd] = v;
    else if (val[nd] != v)
      throw DiagramError("orientation clash at event " + std::to_string(k), k);
  };
  std::vector<int> cur;
  for (int p = 0; p < width_in; ++p) cur.push_back(node(up_in[p]));
  std::vector<int> bottom_nodes = cur;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const Event& e = events[k];
    int w = static_cast<int>(cur.size());
    a.slices.push_back(cur);
    int ik = static_cast<int>(k);
    if (e.pos < 0) throw DiagramError("negative position at event " + std::to_string(k), ik);
    if (e.is_crossing()) {
      if (e.pos + 1 >= w)
        throw DiagramError("crossing at " + std::to_string(e.pos) + " exceeds width " + std::to_string(w) +
                               " at event " + std::to_string(k),
                           ik);
      std::swap(cur[e.pos], cur[e.pos + 1]);
    } else if (e.kind == EventKind::Cap) {
      if (e.orient != 'l' && e.orient != 'r') throw DiagramError("cap needs orientation l or r", ik);
      if (e.pos + 1 >= w)
        throw DiagramError("width underflow: cap at " + std::to_string(e.pos) + " on width " + std::to_string(w) +
                               " at event " + std::to_string(k),
                           ik);
      if (type == DiagramType::StringLink) {
        auto from_bottom = [&](int nd) {
          for (int b : bottom_nodes)
            if (uf.find(b) == uf.find(nd)) return true;
          return false;
        };
        if (from_bottom(cur[e.pos]) && from_bottom(cur[e.pos + 1]))
          throw DiagramError("boundary mismatch: cap at event " + std::to_string(k) +
                                 " joins two bottom bases of a string link",
                             ik);
      }
      require(cur[e.pos], e.orient == 'l' ? 1 : 0, ik);
      require(cur[e.pos + 1], e.orient == 'l' ? 0 : 1, ik);
      uf.unite(cur[e.pos], cur[e.pos + 1]);
      cur.erase(cur.begin() + e.pos, cur.begin() + e.pos + 2);
    } else {
      if (e.orient != 'l' && e.orient != 'r') throw DiagramError("cup needs orientation l or r", ik);
      if (e.pos > w)
        throw DiagramError("width overflow: cup at " + std::to_string(e.pos) + " on width " + std::to_string(w) +
                               " at event " + std::to_string(k),
                           ik);
      int l = node(e.orient == 'l' ? 1 : 0), r = node(e.orient == 'l' ? 0 : 1);
      uf.unite(l, r);
      cur.insert(cur.begin() + e.pos, {l, r});
    }
  }
  a.slices.push_back(cur);
  d.width_out = static_cast<int>(cur.size());
  if (type == DiagramType::StringLink) {
    if (d.width_out != width_in)
      throw DiagramError("boundary mismatch: string link has " + std::to_string(width_in) + " bottom and " +
                         std::to_string(d.width_out) + " top points");
    for (int nd : cur) require(nd, 1, -1);
  }
  if (type == DiagramType::Handle && d.width_out != 0)
    throw DiagramError("boundary mismatch: handle has " + std::to_string(d.width_out) + " top points");
  for (std::size_t i = 0; i < val.size(); ++i)
    if (val[i] == -1) throw DiagramError("orientation undetermined on a boundary strand");
  a.node_up = val;

  // component numbering: by bottom base, then top base, then creation order
  std::map<int, int> root_id;
  auto assign = [&](int nd) {
    int r = uf.find(nd);
    auto it = root_id.find(r);
    if (it == root_id.end()) it = root_id.emplace(r, static_cast<int>(root_id.size())).first;
    return it->second;
  };
  for (int nd : bottom_nodes) assign(nd);
  for (int nd : cur) assign(nd);
  for (std::size_t nd = 0; nd < val.size(); ++nd) assign(static_cast<int>(nd));
  a.ncomp = static_cast<int>(root_id.size());
  a.node_comp.resize(val.size());
  for (std::size_t nd = 0; nd < val.size(); ++nd) a.node_comp[nd] = assign(static_cast<int>(nd));
  a.comp_closed.assign(a.ncomp, true);
  for (int nd : bottom_nodes) {
    a.comp_of_bottom.push_back(a.node_comp[nd]);
    a.comp_closed[a.node_comp[nd]] = false;
  }
  for (int nd : cur) {
    a.comp_of_top.push_back(a.node_comp[nd]);
    a.comp_closed[a.node_comp[nd]] = false;
  }
  for (int nd : bottom_nodes) d.up_in.push_back(val[nd] == 1);
  for (int nd : cur) d.up_out.push_back(val[nd] == 1);

  if (type == DiagramType::StringLink) {
    for (int p = 0; p < width_in; ++p)
      if (a.comp_of_bottom[p] != p || a.comp_of_top[p] != p)
        throw DiagramError("boundary mismatch: component of bottom base " + std::to_string(p) +
                           " does not end at top base " + std::to_string(p));
    if (a.ncomp != width_in) throw DiagramError("boundary mismatch: string link with closed components");
  }
  if (type == DiagramType::Handle) {
    if (width_in % 2) throw DiagramError("boundary mismatch: handle with odd number of bases");
    for (int k = 0; 2 * k < width_in; ++k)
      if (a.comp_of_bottom[2 * k] != k || a.comp_of_bottom[2 * k + 1] != k || d.up_in[2 * k] ||
          !d.up_in[2 * k + 1])
        throw DiagramError("boundary mismatch: handle bases " + std::to_string(2 * k) + "," +
                           std::to_string(2 * k + 1) + " do not bound one ribbon");
    if (a.ncomp != width_in / 2) throw DiagramError("boundary mismatch: handle with closed components");
  }
  return d;
}

inline SlicedDiagram revalidate(const SlicedDiagram& d, std::vector<Event> events) {
  std::vector<int> up;
  for (bool b : d.up_in) up.push_back(b ? 1 : 0);
  return validate(events, d.type, d.width_in, up);
}

inline SlicedDiagram identity_link(int n) { return validate({}, DiagramType::StringLink, n); }

struct ComponentStructure {
  int ncomp = 0;
  std::vector<int> comp_of_bottom, comp_of_top;
  std::vector<bool> closed;
  // per event, the component ids of the strands it touches
  std::vector<std::vector<int>> event_comps;
};

inline ComponentStructure trace_components(const SlicedDiagram& d) {
  ComponentStructure c;
  c.ncomp = d.info.ncomp;
  c.comp_of_bottom = d.info.comp_of_bottom;
  c.comp_of_top = d.info.comp_of_top;
  c.closed = d.info.comp_closed;
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    if (e.kind == EventKind::Cup)
      c.event_comps.push_back({d.info.comp_at(k + 1, e.pos)});
    else
      c.event_comps.push_back({d.info.comp_at(k, e.pos), d.info.comp_at(k, e.pos + 1)});
  }
  return c;
}

inline bool is_string_link(const SlicedDiagram& d, int n) {
  if (d.width_in != n || d.width_out != n || d.info.ncomp != n) return false;
  for (int p = 0; p < n; ++p)
    if (!d.up_in[p] || !d.up_out[p] || d.info.comp_of_bottom[p] != p || d.info.comp_of_top[p] != p) return false;
  return true;
}

inline bool is_handle(const SlicedDiagram& d, int n) {
  if (d.width_in != 2 * n || d.width_out != 0 || d.info.ncomp != n) return false;
  for (int k = 0; k < n; ++k)
    if (d.info.comp_of_bottom[2 * k] != k || d.info.comp_of_bottom[2 * k + 1] != k || d.up_in[2 * k] ||
        !d.up_in[2 * k + 1])
      return false;
  return true;
}

// Stacks upper on top of lower.
inline SlicedDiagram compose(const SlicedDiagram& upper, const SlicedDiagram& lower) {
  if (lower.width_out != upper.width_in)
    throw DiagramError("boundary mismatch: widths " + std::to_string(lower.width_out) + " and " +
                       std::to_string(upper.width_in));
  if (lower.up_out != upper.up_in) throw DiagramError("boundary mismatch: orientations differ");
  std::vector<Event> ev = lower.events;
  ev.insert(ev.end(), upper.events.begin(), upper.events.end());
  DiagramType t = DiagramType::Tangle;
  if (lower.type == DiagramType::StringLink && upper.type == DiagramType::StringLink) t = DiagramType::StringLink;
  if (upper.type == DiagramType::Handle && lower.type == DiagramType::StringLink) t = DiagramType::Handle;
  std::vector<int> up;
  for (bool b : lower.up_in) up.push_back(b ? 1 : 0);
  return validate(ev, t, lower.width_in, up);
}

using LinkingMatrix = Matrix<Rational>;

// Diagonal: self-writhe; off-diagonal: half the signed count of mutual crossings.
inline LinkingMatrix linking_matrix(const SlicedDiagram& d) {
  if (d.type != DiagramType::StringLink && !is_string_link(d, d.width_in))
    throw DiagramError("linking_matrix: not a string link");
  int n = d.info.ncomp;
  LinkingMatrix m({n, n});
  for (std::size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    if (!e.is_crossing()) continue;
    int a = d.info.comp_at(k, e.pos), b = d.info.comp_at(k, e.pos + 1);
    int s = d.sign(k);
    if (a == b)
      m.at(a, a) += Rational(s);
    else {
      m.at(a, b) += Rational(s, 2);
      m.at(b, a) += Rational(s, 2);
    }
  }
  return m;
}

inline std::string linking_str(const LinkingMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m.at(i, j).str();
    s += "]";
  }
  return s + "]";
}

// Swaps two adjacent events when their supports are disjoint. Returns the
// swapped pair, or nothing if they do not commute.
inline std::optional<std::pair<Event, Event>> commute(const Event& lower, const Event& upper) {
  int p1 = lower.pos, out1 = lower.outputs(), in1 = lower.inputs();
  int p2 = upper.pos, in2 = upper.inputs(), out2 = upper.outputs();
  Event nu = upper, nl = lower;
  if (p2 + in2 <= p1) {
    nl.pos = p1 + out2 - in2;
    return std::make_pair(nu, nl);  // new lower, new upper
  }
  if (p2 >= p1 + out1) {
    nu.pos = p2 - out1 + in1;
    return std::make_pair(nu, nl);
  }
  return std::nullopt;
}

// Lexicographic normal form of each maximal run of crossings, seen as a
// trace-monoid word where crossings commute when their positions differ by >= 2.
inline SlicedDiagram normalize_slides(const SlicedDiagram& d) {
  std::vector<Event> out;
  std::size_t k = 0;
  const auto& ev = d.events;
  while (k < ev.size()) {
    if (!ev[k].is_crossing()) {
      out.push_back(ev[k++]);
      continue;
    }
    std::size_t end = k;
    while (end < ev.size() && ev[end].is_crossing()) ++end;
    std::vector<Event> run(ev.begin() + k, ev.begin() + end);
    std::vector<bool> used(run.size(), false);
    for (std::size_t step = 0; step < run.size(); ++step) {
      int best = -1;
      for (std::size_t i = 0; i < run.size(); ++i) {
        if (used[i]) continue;
        bool free = true;
        for (std::size_t j = 0; j < i && free; ++j)
          if (!used[j] && std::abs(run[j].pos - run[i].pos) < 2) free = false;
        if (!free) continue;
        if (best < 0 || run[i] < run[best]) best = static_cast<int>(i);
      }
      used[best] = true;
      out.push_back(run[best]);
    }
    k = end;
  }
  return revalidate(d, out);
}

// ---------------------------------------------------------------------------
// Text format

inline std::string print_diagram(const SlicedDiagram& d) {
  std::ostringstream os;
  switch (d.type) {
    case DiagramType::StringLink: os << "type stringlink n=" << d.width_in << "\n"; break;
    case DiagramType::Handle: os << "type handle n=" << d.width_in / 2 << "\n"; break;
    case DiagramType::Tangle: {
      os << "type tangle in=";
      if (d.up_in.empty()) os << "-";
      for (bool b : d.up_in) os << (b ? 'u' : 'd');
      os << "\n";
    }
  }
  for (auto& e : d.events) os << e.str() << "\n";
  return os.str();
}

inline SlicedDiagram parse_diagram(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::optional<DiagramType> type;
  int width = 0;
  std::vector<int> up;
  std::vector<Event> events;
  std::vector<int> event_line;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string w;
    if (!(ls >> w)) continue;
    auto fail = [&](const std::string& m) { throw DiagramError("line " + std::to_string(lineno) + ": " + m, -1, lineno); };
    if (w == "type") {
      if (type) fail("duplicate type line");
      std::string t, arg;
      ls >> t >> arg;
      if (t == "stringlink" || t == "handle") {
        if (arg.rfind("n=", 0) != 0) fail("expected n=<k>");
        int n = 0;
        try {
          n = std::stoi(arg.substr(2));
        } catch (...) {
          fail("bad component count");
        }
        if (n < 0) fail("bad component count");
        type = t == "stringlink" ? DiagramType::StringLink : DiagramType::Handle;
        width = t == "stringlink" ? n : 2 * n;
      } else if (t == "tangle") {
        if (arg.rfind("in=", 0) != 0) fail("expected in=<u|d...>");
        std::string s = arg.substr(3);
        if (s == "-") s.clear();
        for (char c : s) {
          if (c != 'u' && c != 'd') fail("bad orientation flag");
          up.push_back(c == 'u');
        }
        type = DiagramType::Tangle;
        width = static_cast<int>(s.size());
      } else {
        fail("unknown type '" + t + "'");
      }
      std::string extra;
      if (ls >> extra) fail("trailing text");
      continue;
    }
    if (!type) fail("event before type line");
    Event e;
    if (w == "x+")
      e.kind = EventKind::CrossPos;
    else if (w == "x-")
      e.kind = EventKind::CrossNeg;
    else if (w == "cap")
      e.kind = EventKind::Cap;
    else if (w == "cup")
      e.kind = EventKind::Cup;
    else
      fail("unknown event '" + w + "'");
    std::string ps;
    if (!(ls >> ps)) fail("missing position");
    try {
      std::size_t used = 0;
      e.pos = std::stoi(ps, &used);
      if (used != ps.size()) throw std::invalid_argument(ps);
    } catch (...) {
      fail("bad position '" + ps + "'");
    }
    if (!e.is_crossing()) {
      std::string o;
      if (!(ls >> o) || (o != "l" && o != "r")) fail("cap/cup needs orientation l or r");
      e.orient = o[0];
    }
    std::string extra;
    if (ls >> extra) fail("trailing text");
    events.push_back(e);
    event_line.push_back(lineno);
  }
  if (!type) throw DiagramError("missing type line");
  try {
    return validate(events, *type, width, up);
  } catch (DiagramError& err) {
    int l = err.slice >= 0 && err.slice < static_cast<int>(event_line.size()) ? event_line[err.slice] : -1;
    std::string msg = err.what();
    if (l >= 0) msg = "line " + std::to_string(l) + ": " + msg;
    throw DiagramError(msg, err.slice, l);
  }
}

} // namespace rsl
