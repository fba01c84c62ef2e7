#pragma once

#include "rsl/quantum.hpp"
#include "rsl/random.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>

namespace rsl {

// ---------------------------------------------------------------------------
// Reports

struct SuiteFailure {
  std::string item;
  int instance = 0;
  std::string input;
  std::string lhs, rhs;  // digests
  std::string detail;
};

struct ItemCount {
  int checked = 0, failed = 0, skipped = 0;
};

struct SuiteReport {
  std::string suite;
  std::string command;
  std::uint64_t seed = 0;
  int checked = 0, passed = 0, failed = 0, skipped = 0;
  std::map<std::string, ItemCount> items;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> notes;
  std::size_t max_failures = 20;

  bool ok() const { return failed == 0 && checked > 0; }

  void pass(const std::string& item) {
    ++checked;
    ++passed;
    ++items[item].checked;
  }
  void fail(SuiteFailure f) {
    ++checked;
    ++failed;
    auto& c = items[f.item];
    ++c.checked;
    ++c.failed;
    if (failures.size() < max_failures) failures.push_back(std::move(f));
  }
  void record(const std::string& item, bool ok, const std::function<SuiteFailure()>& witness = {}) {
    if (ok) {
      pass(item);
    } else {
      SuiteFailure f = witness ? witness() : SuiteFailure{};
      f.item = item;
      fail(std::move(f));
    }
  }
  void skip(const std::string& item) {
    ++skipped;
    ++items[item].skipped;
  }
  void merge(const SuiteReport& o, const std::string& prefix = "") {
    checked += o.checked;
    passed += o.passed;
    failed += o.failed;
    skipped += o.skipped;
    for (auto& [k, v] : o.items) {
      auto& c = items[prefix + k];
      c.checked += v.checked;
      c.failed += v.failed;
      c.skipped += v.skipped;
    }
    for (auto f : o.failures) {
      if (failures.size() >= max_failures) break;
      f.item = prefix + f.item;
      failures.push_back(std::move(f));
    }
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    if (!command.empty()) j["command"] = command;
    j["seed"] = seed;
    j["counts"] = {{"checked", checked}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    nlohmann::json it = nlohmann::json::object();
    for (auto& [k, v] : items) it[k] = {{"checked", v.checked}, {"failed", v.failed}, {"skipped", v.skipped}};
    j["items"] = it;
    nlohmann::json fs = nlohmann::json::array();
    for (auto& f : failures) {
      nlohmann::json x{{"relation", f.item}, {"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}};
      if (!f.input.empty()) x["input"] = f.input;
      if (!f.detail.empty()) x["detail"] = f.detail;
      fs.push_back(x);
    }
    j["failures"] = fs;
    if (!notes.empty()) j["notes"] = notes;
    j["result"] = ok() ? "pass" : "fail";
    return j;
  }
};

inline std::string text_digest(const std::string& s) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a(s);
  return os.str();
}

// ---------------------------------------------------------------------------
// Invariant oracle for string links

struct OracleOptions {
  bool bracket = true;
  bool phi_sweedler = true;
  bool phi_e2 = false;  // used when the state space is small enough
};

struct InvariantSet {
  LinkingMatrix linking;
  std::vector<Matrix<Laurent>> brackets;  // one per nonempty component subset
  std::optional<ConvElement> phi_sw, phi_e2;
  bool too_wide = false;  // only the linking matrix was computed

  std::string canonical() const {
    std::ostringstream os;
    os << "lk " << linking_str(linking) << "\n";
    for (auto& b : brackets) os << "kb " << b.rows() << "x" << b.cols() << "\n" << Tensor<Laurent>(b).canonical();
    if (phi_sw) os << "sw " << phi_sw->digest() << "\n";
    if (phi_e2) os << "e2 " << phi_e2->digest() << "\n";
    return os.str();
  }
  std::string digest() const { return text_digest(canonical()); }
};

// Which oracle separates a and b; empty when they agree. E(2) values are
// compared only when both were computed.
inline std::string oracle_difference(const InvariantSet& a, const InvariantSet& b) {
  std::string out;
  auto add = [&](const char* s) { out += out.empty() ? s : std::string(",") + s; };
  if (a.linking != b.linking) add("linking");
  if (a.brackets != b.brackets) add("bracket");
  if (a.phi_sw.has_value() != b.phi_sw.has_value() || (a.phi_sw && !(*a.phi_sw == *b.phi_sw))) add("phi_sweedler");
  if (a.phi_e2 && b.phi_e2 && !(*a.phi_e2 == *b.phi_e2)) add("phi_e2");
  return out;
}

inline std::vector<Matrix<Laurent>> multi_bracket(const SlicedDiagram& t) {
  std::vector<Matrix<Laurent>> out;
  int n = t.ncomp();
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<bool> keep(n);
    for (int c = 0; c < n; ++c) keep[c] = (mask >> c) & 1;
    out.push_back(bracket(restrict_components(t, keep)));
  }
  return out;
}

class Oracle {
 public:
  explicit Oracle(OracleOptions o = {}) : opt_(o) {}

  const InvariantSet& of(const SlicedDiagram& t) {
    auto key = print_diagram(t);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    InvariantSet s;
    s.linking = linking_matrix(t);
    try {
      if (opt_.bracket) s.brackets = multi_bracket(t);
      if (opt_.phi_sweedler) s.phi_sw = phi(coend_of(instance_sweedler()), t);
    } catch (const WidthLimit&) {
      s.brackets.clear();
      s.phi_sw.reset();
      s.too_wide = true;
      ++too_wide_;
    }
    if (opt_.phi_e2 && !s.too_wide) {
      try {
        s.phi_e2 = phi(coend_of(instance_e2()), t);
        ++e2_computed_;
      } catch (const WidthLimit&) {
        ++e2_skipped_;
      }
    }
    return cache_.emplace(std::move(key), std::move(s)).first->second;
  }
  int e2_computed() const { return e2_computed_; }
  int e2_skipped() const { return e2_skipped_; }
  int too_wide() const { return too_wide_; }
  const OracleOptions& options() const { return opt_; }

 private:
  OracleOptions opt_;
  std::map<std::string, InvariantSet> cache_;
  int e2_computed_ = 0, e2_skipped_ = 0, too_wide_ = 0;
};

// ---------------------------------------------------------------------------
// Options shared by the suites

struct SuiteOptions {
  std::uint64_t seed = 7;
  int samples = 50;
  int max_level = 3;      // relation levels; string links have level + 1 strands
  int max_crossings = 10;
  bool e2 = false;        // add E(2) to the oracle / run algebra suites over E(2)
};

inline std::vector<SlicedDiagram> level_samples(const SuiteOptions& o, int level, int max_extra_width = 2,
                                                const std::function<bool(const SlicedDiagram&)>& accept = {},
                                                int* rejected = nullptr) {
  Rng rng(o.seed * 1000003ULL + static_cast<std::uint64_t>(level) * 7919ULL);
  RandomLinkOptions ro;
  ro.max_crossings = o.max_crossings;
  ro.max_extra_width = max_extra_width;
  std::vector<SlicedDiagram> out;
  int tries = 0;
  while (static_cast<int>(out.size()) < o.samples) {
    if (++tries > 100 * std::max(o.samples, 1)) throw std::runtime_error("level_samples: acceptance too rare");
    auto t = random_string_link(rng, level + 1, ro);
    if (accept && !accept(t)) {
      if (rejected) ++*rejected;
      continue;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites 1 and 2: geometric (co)cyclic relations under the invariant oracle

template <class Impl>
SuiteReport run_geometric_relations(const std::string& name, const Impl& impl,
                                    const std::vector<RelationInstance>& rels, const SuiteOptions& o) {
  SuiteReport rep;
  rep.suite = name;
  rep.seed = o.seed;
  Oracle oracle({true, true, o.e2});
  std::map<int, std::vector<SlicedDiagram>> samples;
  int rejected = 0;
  for (auto& r : rels) {
    auto it = samples.find(r.src_level);
    if (it == samples.end()) {
      // keep every image of the sample under the relation words within the sweep cap
      auto fits = [&, lvl = r.src_level](const SlicedDiagram& t) {
        for (auto& q : rels) {
          if (q.src_level != lvl) continue;
          if (max_width(apply_word(impl, q.lhs, t)) > max_sweep_width()) return false;
          if (!q.rhs.empty() && max_width(apply_word(impl, q.rhs, t)) > max_sweep_width()) return false;
        }
        return true;
      };
      it = samples.emplace(r.src_level, level_samples(o, r.src_level, 2, fits, &rejected)).first;
    }
    std::string item = "eq" + std::to_string(r.eq);
    int k = 0;
    for (auto& t : it->second) {
      auto l = apply_word(impl, r.lhs, t);
      auto rr = r.rhs.empty() ? t : apply_word(impl, r.rhs, t);
      auto& a = oracle.of(l);
      auto& b = oracle.of(rr);
      if (a.too_wide || b.too_wide) {
        rep.skip(item);
        ++k;
        continue;
      }
      auto diff = oracle_difference(a, b);
      rep.record(item, diff.empty(), [&] {
        return SuiteFailure{item, k, print_diagram(t), a.digest(), b.digest(), r.id() + " differs in " + diff};
      });
      ++k;
    }
  }
  if (rejected)
    rep.notes.push_back(std::to_string(rejected) + " samples redrawn to stay within RSL_MAX_WIDTH=" +
                        std::to_string(max_sweep_width()));
  if (oracle.too_wide())
    rep.notes.push_back(std::to_string(oracle.too_wide()) + " diagrams exceed RSL_MAX_WIDTH=" +
                        std::to_string(max_sweep_width()) + "; their checks are skipped");
  if (o.e2)
    rep.notes.push_back("phi_e2 computed on " + std::to_string(oracle.e2_computed()) + " diagrams, skipped on " +
                        std::to_string(oracle.e2_skipped()));
  return rep;
}

inline SuiteReport run_cocyclic_suite(const SuiteOptions& o) {
  return run_geometric_relations("cocyclic", geometric_cocyclic_impl(), cocyclic_relations(o.max_level), o);
}

inline SuiteReport run_cyclic_suite(const SuiteOptions& o) {
  auto rep = run_geometric_relations("cyclic", geometric_cyclic_impl(), cyclic_relations(o.max_level), o);
  // t_n is the inverse of tau_n
  Oracle oracle({true, true, o.e2});
  for (int level = 1; level <= o.max_level; ++level) {
    int k = 0;
    for (auto& t : level_samples(o, level)) {
      auto& a = oracle.of(rotate_front(rotate_back(t)));
      auto& b = oracle.of(t);
      if (a.too_wide || b.too_wide) {
        rep.skip("t_tau_inverse");
      } else {
        auto diff = oracle_difference(a, b);
        rep.record("t_tau_inverse", diff.empty(), [&] {
          return SuiteFailure{"", k, print_diagram(t), a.digest(), b.digest(), "t tau differs in " + diff};
        });
      }
      ++k;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Algebraic (co)cyclic relations on invariant functionals

inline ConvElement random_invariant_functional(const CoendData& C, int n, Rng& rng) {
  auto& B = invariant_functionals(C, n);
  ConvElement f{n, C.d, std::vector<Rational>(ipow(C.d, n))};
  std::uniform_int_distribution<int> u(-3, 3);
  for (auto& b : B) {
    Rational c(u(rng));
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < f.values.size(); ++k) f.values[k].add_mul(c, b.values[k]);
  }
  return f;
}

inline SuiteReport run_algebraic_relations(const CoendData& C, const SuiteOptions& o, int samples_per_level = 3) {
  SuiteReport rep;
  rep.suite = "algebraic";
  rep.seed = o.seed;
  Rng rng(o.seed);
  std::function<std::vector<ConvElement>(int)> sampler = [&](int level) {
    std::vector<ConvElement> v;
    for (int k = 0; k < samples_per_level; ++k) v.push_back(random_invariant_functional(C, level + 1, rng));
    return v;
  };
  std::function<bool(const ConvElement&, const ConvElement&)> eq = [](auto& a, auto& b) { return a == b; };
  auto fold = [&](const RelationReport& r, const std::string& prefix) {
    for (auto& [e, p] : r.per_equation) {
      auto& c = rep.items[prefix + "eq" + std::to_string(e)];
      c.checked += p.first;
      c.failed += p.second;
    }
    rep.checked += r.checked;
    rep.passed += r.passed;
    rep.failed += r.failed;
    for (auto& f : r.failures)
      if (rep.failures.size() < rep.max_failures)
        rep.failures.push_back({prefix + f.relation, f.sample, "", "", "", C.H->name});
  };
  fold(check_relations(algebraic_cocyclic_impl(C), cocyclic_relations(o.max_level), sampler, eq), C.H->name + ":cocyclic:");
  fold(check_relations(algebraic_cyclic_impl(C), cyclic_relations(o.max_level), sampler, eq), C.H->name + ":cyclic:");
  return rep;
}

// ---------------------------------------------------------------------------
// Suite 3: geometric against algebraic operators under phi, the L route, ad-invariance

inline SuiteReport check_phi_compatibility(const CoendData& C, int n_max, int samples, std::uint64_t seed,
                                           int max_crossings = 8, bool with_dual_route = true) {
  SuiteReport rep;
  rep.suite = "thm62";
  rep.seed = seed;
  const std::string tag = C.H->name + ":";
  bool big = C.d > 4;
  Rng rng(seed);
  RandomLinkOptions ro;
  ro.max_crossings = max_crossings;
  ro.max_extra_width = big ? 0 : 2;
  for (int s = 0; s < samples; ++s) {
    int n = 1 + s % (n_max + 1);
    auto T = random_string_link(rng, n, ro);
    auto text = print_diagram(T);
    ConvElement p;
    try {
      p = phi(C, T);
    } catch (const WidthLimit&) {
      rep.skip(tag + "sample");
      continue;
    }
    auto check = [&](const std::string& item, const std::function<SlicedDiagram()>& geo,
                     const std::function<ConvElement()>& alg) {
      ConvElement l;
      try {
        l = phi(C, geo());
      } catch (const WidthLimit&) {
        rep.skip(tag + item);
        return;
      }
      auto r = alg();
      rep.record(tag + item, l == r, [&] { return SuiteFailure{"", s, text, l.digest(), r.digest(), ""}; });
    };
    for (int i = 0; i <= n; ++i)
      check("coface", [&] { return insert_trivial(T, i); }, [&] { return alg_coface(C, p, i); });
    for (int j = 0; j + 1 < n; ++j)
      check("codegeneracy", [&] { return merge_behind(T, j); }, [&] { return alg_codegeneracy(C, p, j); });
    check("cocyclic", [&] { return rotate_back(T); }, [&] { return alg_cocyclic(C, p); });
    if (n >= 2)
      for (int i = 0; i < n; ++i)
        check("face", [&] { return delete_component(T, i); }, [&] { return alg_face(C, p, i); });
    for (int j = 0; j < n; ++j)
      check("degeneracy", [&] { return duplicate(T, j); }, [&] { return alg_degeneracy(C, p, j); });
    check("cyclic", [&] { return rotate_front(T); }, [&] { return alg_cyclic(C, p); });
    rep.record(tag + "ad_invariance", check_ad_invariant(C, p),
               [&] { return SuiteFailure{"", s, text, p.digest(), "", ""}; });
    if (with_dual_route) {
      int lvl = n - 1;
      for (std::string op : {"d", "s", "t", "delta", "sigma", "tau"}) {
        int hi = op == "d" || op == "s" ? lvl : op == "delta" ? n : op == "sigma" ? lvl - 1 : 0;
        if (op == "d" && lvl < 1) continue;
        for (int i = 0; i <= hi; ++i)
          check("L:" + op, [&] { return dual_family_via_L(op, T, i); }, [&] { return alg_dual_via_L(C, op, p, i); });
      }
    }
  }
  return rep;
}

// Checks on handles: rotation against F(tau(G(h))), planar wrap
// against twisted rotation, and a mutated rotation that must be caught.
inline SuiteReport run_handle_rotation(const HopfData& H, int samples, std::uint64_t seed, int max_crossings = 4) {
  SuiteReport rep;
  rep.suite = "handle_rotation";
  rep.seed = seed;
  Rng rng(seed);
  RandomLinkOptions ro;
  ro.max_crossings = max_crossings;
  ro.max_extra_width = 0;
  int caught = 0;
  const std::string tag = H.name + ":";
  for (int s = 0; s < samples; ++s) {
    auto T = random_string_link(rng, 2, ro);
    auto h = frame_f(T);
    auto text = print_diagram(h);
    auto r = handle_rotation_check(H, h);
    rep.record(tag + "rotation_vs_frame", r.twisted_vs_frame, [&] { return SuiteFailure{"", s, text, "", "", ""}; });
    rep.record(tag + "wrap_vs_rotation", r.wrap_vs_twisted, [&] { return SuiteFailure{"", s, text, "", "", ""}; });
    if (!handle_rotation_check(H, h, true).twisted_vs_frame) ++caught;
  }
  if (!is_triangular(H))
    rep.record(tag + "mutation_caught", caught > 0,
               [&] { return SuiteFailure{"", 0, "", "", "", "flipped rotation never distinguished"}; });
  else
    rep.notes.push_back(H.name + ": triangular with trivial ribbon element, rotation mutation not expected to be seen");
  return rep;
}

// ---------------------------------------------------------------------------
// Functoriality and convolution

inline SuiteReport run_functoriality(const CoendData& C, int pairs, std::uint64_t seed, int max_crossings = 6,
                                     int n_max = 2) {
  SuiteReport rep;
  rep.suite = "functoriality";
  rep.seed = seed;
  const std::string tag = C.H->name + ":";
  Rng rng(seed);
  RandomLinkOptions ro;
  ro.max_crossings = max_crossings;
  ro.max_extra_width = C.d > 4 ? 0 : 2;
  for (int n = 0; n <= n_max; ++n)
    rep.record(tag + "identity", phi(C, identity_link(n)) == conv_identity(C, n));
  for (int s = 0; s < pairs; ++s) {
    int n = 1 + s % n_max;
    auto T = random_string_link(rng, n, ro);
    auto U = random_string_link(rng, n, ro);
    try {
      auto pt = phi(C, T), pu = phi(C, U);
      auto l = phi(C, compose(U, T));
      auto r = convolution(C, pu, pt);
      rep.record(tag + "composition", l == r, [&] {
        return SuiteFailure{"", s, print_diagram(T) + print_diagram(U), l.digest(), r.digest(), ""};
      });
      rep.record(tag + "unit", convolution(C, pt, conv_identity(C, n)) == pt &&
                                   convolution(C, conv_identity(C, n), pt) == pt);
      if (s % 5 == 0) {
        auto V = random_string_link(rng, n, ro);
        auto pv = phi(C, V);
        rep.record(tag + "associativity",
                   convolution(C, convolution(C, pt, pu), pv) == convolution(C, pt, convolution(C, pu, pv)));
      }
    } catch (const WidthLimit&) {
      rep.skip(tag + "composition");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Coend and Hopf checks, twisted cyclicity

inline SuiteReport run_coend_suite(const HopfData& H, int dinat_samples = 20, std::uint64_t seed = 1,
                                   int eq18_max = 2) {
  SuiteReport rep;
  rep.suite = "coend";
  rep.seed = seed;
  const std::string tag = H.name + ":";
  const auto& C = coend_of(H);
  for (auto& a : check_coend(C, dinat_samples, seed).items) rep.record(tag + a.name, a.ok);
  for (int n = 0; n <= eq18_max; ++n)
    rep.record(tag + "twisted_cyclicity_n" + std::to_string(n), check_twisted_cyclicity(C, n));
  rep.notes.insert(rep.notes.end(), C.notes.begin(), C.notes.end());
  return rep;
}

inline SuiteReport run_hopf_suite(const HopfData& H) {
  SuiteReport rep;
  rep.suite = "hopf";
  for (auto& a : check_ribbon_hopf(H).axioms) rep.record(H.name + ":" + a.name, a.ok);
  bool twist_ok = true;
  try {
    assert_twist_convention(H, regular_rep(H));
  } catch (const std::logic_error&) {
    twist_ok = false;
  }
  rep.record(H.name + ":twist_matches_kink", twist_ok);
  return rep;
}

// ---------------------------------------------------------------------------
// Duality coherence: tilde families via L against the direct formulas

inline SuiteReport run_duality_suite(const SuiteOptions& o, const std::vector<const CoendData*>& algebras) {
  SuiteReport rep;
  rep.suite = "duality";
  rep.seed = o.seed;
  Oracle oracle({true, true, o.e2});
  int rejected = 0;
  auto images = [](const SlicedDiagram& t, int n, const auto& visit) {
    for (std::string op : {"d", "s", "t", "delta", "sigma", "tau"}) {
      int hi = op == "d" || op == "s" ? n : op == "delta" ? n + 1 : op == "sigma" ? n - 1 : 0;
      if (op == "d" && n < 1) continue;
      for (int i = 0; i <= hi; ++i)
        if (!visit(op, i, dual_family_direct(op, t, i), dual_family_via_L(op, t, i))) return false;
    }
    return true;
  };
  for (int level = 0; level <= o.max_level; ++level) {
    auto fits = [&](const SlicedDiagram& t) {
      return images(t, level, [](const std::string&, int, const SlicedDiagram& a, const SlicedDiagram& b) {
        return max_width(a) <= max_sweep_width() && max_width(b) <= max_sweep_width();
      });
    };
    auto ts = level_samples(o, level, 2, fits, &rejected);
    int k = 0;
    for (auto& t : ts) {
      images(t, level, [&](const std::string& op, int i, const SlicedDiagram& a, const SlicedDiagram& b) {
        auto& ia = oracle.of(a);
        auto& ib = oracle.of(b);
        if (ia.too_wide || ib.too_wide) {
          rep.skip("geometric:" + op);
          return true;
        }
        auto diff = oracle_difference(ia, ib);
        rep.record("geometric:" + op, diff.empty(), [&] {
          return SuiteFailure{"", k, print_diagram(t), ia.digest(), ib.digest(), op + std::to_string(i) + " " + diff};
        });
        return true;
      });
      ++k;
    }
  }
  if (rejected)
    rep.notes.push_back(std::to_string(rejected) + " samples redrawn to stay within RSL_MAX_WIDTH=" +
                        std::to_string(max_sweep_width()));
  for (auto* C : algebras) {
    Rng rng(o.seed + 17);
    int lmax = C->d > 4 ? std::min(o.max_level, 2) : o.max_level;
    for (int level = 0; level <= lmax; ++level)
      for (int s = 0; s < 3; ++s) {
        int n = level;
        for (std::string op : {"d", "s", "t", "delta", "sigma", "tau"}) {
          int arity = op == "delta" ? n : n + 1;
          if (arity < 1 && op == "delta") continue;
          auto f = random_invariant_functional(*C, arity, rng);
          int hi = op == "d" || op == "s" ? n : op == "delta" ? n : op == "sigma" ? n - 1 : 0;
          if (op == "d" && n < 1) continue;
          for (int i = 0; i <= hi; ++i) {
            auto a = alg_dual_direct(*C, op, f, i);
            auto b = alg_dual_via_L(*C, op, f, i);
            rep.record(C->H->name + ":algebraic:" + op, a == b,
                       [&] { return SuiteFailure{"", s, "", a.digest(), b.digest(), op + std::to_string(i)}; });
          }
        }
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Isotopy invariance under random Reidemeister sequences

inline SuiteReport run_isotopy_fuzz(int sequences, std::uint64_t seed, int steps = 8, bool e2 = false) {
  SuiteReport rep;
  rep.suite = "isotopy";
  rep.seed = seed;
  Rng rng(seed);
  RandomLinkOptions ro;
  ro.max_crossings = 6;
  ro.max_extra_width = 2;
  const auto& Csw = coend_of(instance_sweedler());
  int redrawn = 0;
  for (int s = 0; s < sequences; ++s) {
    int n = 1 + s % 3;
    SlicedDiagram T, U;
    std::vector<Move> log;
    for (int tries = 0;; ++tries) {
      if (tries > 200) throw std::runtime_error("isotopy fuzz: no sequence within RSL_MAX_WIDTH");
      T = random_string_link(rng, n, ro);
      log.clear();
      U = random_moves(T, steps, rng, &log);
      if (max_width(T) <= max_sweep_width() && max_width(U) <= max_sweep_width()) break;
      ++redrawn;
    }
    auto text = print_diagram(T);
    auto wit = [&](const std::string& a, const std::string& b) {
      std::string moves;
      for (auto& m : log) moves += m.str() + ";";
      return SuiteFailure{"", s, text, a, b, moves};
    };
    auto la = linking_matrix(T), lb = linking_matrix(U);
    rep.record("linking", la == lb, [&] { return wit(linking_str(la), linking_str(lb)); });
    auto ba = bracket(T), bb = bracket(U);
    rep.record("bracket", ba == bb, [&] { return wit(digest(Tensor<Laurent>(ba)), digest(Tensor<Laurent>(bb))); });
    try {
      auto pa = phi(Csw, T), pb = phi(Csw, U);
      rep.record("phi_sweedler", pa == pb, [&] { return wit(pa.digest(), pb.digest()); });
    } catch (const WidthLimit&) {
      rep.skip("phi_sweedler");
    }
    if (e2) {
      try {
        const auto& Ce = coend_of(instance_e2());
        auto pa = phi(Ce, T), pb = phi(Ce, U);
        rep.record("phi_e2", pa == pb, [&] { return wit(pa.digest(), pb.digest()); });
      } catch (const WidthLimit&) {
        rep.skip("phi_e2");
      }
    }
  }
  if (redrawn)
    rep.notes.push_back(std::to_string(redrawn) + " sequences redrawn to stay within RSL_MAX_WIDTH=" +
                        std::to_string(max_sweep_width()));
  return rep;
}

// ---------------------------------------------------------------------------
// Oracle non-vacuity: fixture pairs and convention mutations

struct FixturePair {
  std::string name;
  SlicedDiagram a, b;
};

inline SlicedDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

// Pairs listed in <dir>/pairs.txt as "name file_a file_b" per line.
inline std::vector<FixturePair> load_fixture_pairs(const std::string& dir) {
  std::ifstream in(dir + "/pairs.txt");
  if (!in) throw std::runtime_error("cannot open " + dir + "/pairs.txt");
  std::vector<FixturePair> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, fa, fb;
    if (!(ls >> name >> fa >> fb)) continue;
    out.push_back({name, read_diagram_file(dir + "/" + fa), read_diagram_file(dir + "/" + fb)});
  }
  return out;
}

inline SuiteReport run_fixture_separation(const std::vector<FixturePair>& pairs, bool e2 = true) {
  SuiteReport rep;
  rep.suite = "separation";
  const auto& Csw = coend_of(instance_sweedler());
  for (auto& p : pairs) {
    rep.record("linking_separates", linking_matrix(p.a) != linking_matrix(p.b),
               [&] { return SuiteFailure{"", 0, p.name, "", "", "fixture pair not separated a priori"}; });
    auto a = phi(Csw, p.a), b = phi(Csw, p.b);
    rep.record("phi_sweedler_separates", !(a == b),
               [&] { return SuiteFailure{"", 0, p.name, a.digest(), b.digest(), "equal functionals"}; });
    if (e2) {
      const auto& Ce = coend_of(instance_e2());
      auto x = phi(Ce, p.a), y = phi(Ce, p.b);
      rep.record("phi_e2_separates", !(x == y),
                 [&] { return SuiteFailure{"", 0, p.name, x.digest(), y.digest(), "equal functionals"}; });
    }
  }
  return rep;
}

struct Mutation {
  std::string name;
  bool SlopsConventions::*flag;
};

inline std::vector<Mutation> convention_mutations() {
  return {{"rotate_back_over", &SlopsConventions::rotate_back_over},
          {"insert_over", &SlopsConventions::insert_over},
          {"merge_front", &SlopsConventions::merge_front},
          {"duplicate_flip", &SlopsConventions::duplicate_flip},
          {"rotate_front_over", &SlopsConventions::rotate_front_over}};
}

// Flips one convention for its lifetime.
struct MutationGuard {
  bool SlopsConventions::*flag;
  bool saved;
  explicit MutationGuard(bool SlopsConventions::*f) : flag(f), saved(slops_conventions().*f) {
    slops_conventions().*flag = !saved;
  }
  ~MutationGuard() { slops_conventions().*flag = saved; }
  MutationGuard(const MutationGuard&) = delete;
  MutationGuard& operator=(const MutationGuard&) = delete;
};

struct MutationOutcome {
  std::string name;
  bool caught = false;
  std::string caught_by;  // first suite/item that failed
};

// Runs reduced suites 1-3 under each mutation and records which one fails first.
inline std::vector<MutationOutcome> run_mutations(const SuiteOptions& o, bool thm62_e2 = true) {
  std::vector<MutationOutcome> out;
  for (auto& m : convention_mutations()) {
    MutationGuard g(m.flag);
    MutationOutcome r{m.name, false, ""};
    auto first_fail = [](const SuiteReport& rep) -> std::string {
      for (auto& [k, v] : rep.items)
        if (v.failed) return rep.suite + ":" + k;
      return "";
    };
    for (int step = 0; step < 4 && !r.caught; ++step) {
      SuiteReport rep;
      if (step == 0) rep = run_cocyclic_suite(o);
      if (step == 1) rep = run_cyclic_suite(o);
      if (step == 2) rep = check_phi_compatibility(coend_of(instance_sweedler()), std::min(o.max_level, 2), o.samples, o.seed, 8, false);
      if (step == 3 && thm62_e2)
        rep = check_phi_compatibility(coend_of(instance_e2()), std::min(o.max_level, 2), o.samples, o.seed, 6, false);
      if (!rep.ok() && rep.checked > 0) {
        r.caught = true;
        r.caught_by = first_fail(rep);
      }
    }
    out.push_back(r);
  }
  return out;
}

} // namespace rsl
