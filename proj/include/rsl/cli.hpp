#pragma once

#include "rsl/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace rsl::cli {

// exit codes
constexpr int kOk = 0;
constexpr int kFailed = 1;  // invalid input, rejected algebra or failing suite
constexpr int kUsage = 2;
constexpr int kDomain = 3;  // operator index or diagram type out of range
constexpr int kWidth = 4;   // RSL_MAX_WIDTH or state-space cap exceeded

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const HopfData& algebra_by_name(const std::string& sel) {
  static std::map<std::string, std::unique_ptr<HopfData>> loaded;
  if (sel == "sweedler") return instance_sweedler();
  if (sel == "e2") return instance_e2();
  if (sel == "trivial") {
    static const HopfData triv = instance_trivial();
    return triv;
  }
  if (sel.rfind("file:", 0) == 0) {
    auto path = sel.substr(5);
    auto it = loaded.find(path);
    if (it == loaded.end()) it = loaded.emplace(path, std::make_unique<HopfData>(load_hopf(path))).first;
    return *it->second;
  }
  throw UsageError("unknown algebra '" + sel + "' (trivial, sweedler, e2, file:<path>)");
}

inline nlohmann::json linking_json(const LinkingMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) {
      auto s = m.at(r, c).str();
      if (s.find('/') == std::string::npos)
        row.push_back(std::stoll(s));
      else
        row.push_back(s);
    }
    j.push_back(row);
  }
  return j;
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

inline SlicedDiagram apply_named_op(const std::string& op, int idx, const SlicedDiagram& t) {
  if (op.size() > 1 && op[0] == '~') return dual_family_direct(op.substr(1), t, idx);
  if (op == "delta") return insert_trivial(t, idx);
  if (op == "sigma") return merge_behind(t, idx);
  if (op == "tau") return rotate_back(t);
  if (op == "d") return delete_component(t, idx);
  if (op == "s") return duplicate(t, idx);
  if (op == "t") return rotate_front(t);
  throw UsageError("unknown operator '" + op + "'");
}

inline SuiteReport run_named_suite(const std::string& suite, const SuiteOptions& o, const std::string& algebra,
                                   const std::string& fixtures) {
  if (suite == "cocyclic") return run_cocyclic_suite(o);
  if (suite == "cyclic") return run_cyclic_suite(o);
  if (suite == "thm62") return check_phi_compatibility(coend_of(algebra_by_name(algebra)), o.max_level, o.samples, o.seed,
                                               o.max_crossings);
  if (suite == "coend") return run_coend_suite(algebra_by_name(algebra), 20, o.seed);
  if (suite == "hopf") return run_hopf_suite(algebra_by_name(algebra));
  if (suite == "functoriality")
    return run_functoriality(coend_of(algebra_by_name(algebra)), o.samples, o.seed, o.max_crossings, o.max_level);
  if (suite == "algebraic") return run_algebraic_relations(coend_of(algebra_by_name(algebra)), o);
  if (suite == "duality") {
    std::vector<const CoendData*> algs{&coend_of(algebra_by_name(algebra))};
    return run_duality_suite(o, algs);
  }
  if (suite == "handle") return run_handle_rotation(algebra_by_name(algebra), o.samples, o.seed);
  if (suite == "isotopy") return run_isotopy_fuzz(o.samples, o.seed, 8, o.e2);
  if (suite == "separation") return run_fixture_separation(load_fixture_pairs(fixtures), o.e2);
  throw UsageError("unknown suite '" + suite + "'");
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"rsl: string links, their (co)cyclic operators and universal quantum invariants"};
  app.require_subcommand(1);

  std::string path, out_path, op_name, algebra = "sweedler", route = "auto";
  int index = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check a diagram file");
  validate_cmd->add_option("file", path, "diagram file")->required();

  auto* op_cmd = app.add_subcommand("op", "apply an operator (delta sigma tau d s t, ~ for the dual families)");
  op_cmd->add_option("name", op_name, "operator")->required();
  op_cmd->add_option("index", index, "operator index");
  op_cmd->add_option("-i,--input", path, "input diagram file")->required();
  op_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* inv_cmd = app.add_subcommand("invariant", "universal quantum invariant over a ribbon Hopf algebra");
  inv_cmd->add_option("file", path, "diagram file")->required();
  inv_cmd->add_option("-a,--algebra", algebra, "trivial, sweedler, e2 or file:<path>");
  inv_cmd->add_option("--route", route, "auto, literal or fast")->check(CLI::IsMember({"auto", "literal", "fast"}));

  auto* br_cmd = app.add_subcommand("bracket", "Kauffman bracket of a diagram");
  br_cmd->add_option("file", path, "diagram file")->required();

  auto* lk_cmd = app.add_subcommand("linking", "linking matrix of a string link");
  lk_cmd->add_option("file", path, "diagram file")->required();

  SuiteOptions so;
  so.max_level = 2;
  std::string suite, fixtures = "samples", mutate, report_path;
  auto* check_cmd = app.add_subcommand("check", "run a verification suite");
  check_cmd->add_option("suite", suite,
                        "cyclic, cocyclic, thm62, coend, hopf, functoriality, algebraic, duality, handle, isotopy, "
                        "separation")
      ->required();
  check_cmd->add_option("--n", so.max_level, "highest level");
  check_cmd->add_option("--samples", so.samples, "samples per level");
  check_cmd->add_option("--crossings", so.max_crossings, "crossings per random string link");
  check_cmd->add_option("--seed", so.seed, "random seed");
  check_cmd->add_option("-a,--algebra", algebra, "algebra for the algebraic suites");
  check_cmd->add_flag("--e2", so.e2, "add the E(2) invariant to the oracle");
  check_cmd->add_option("--fixtures", fixtures, "directory with pairs.txt");
  check_cmd->add_option("--mutate", mutate, "flip one routing convention");
  check_cmd->add_option("--report", report_path, "write the JSON report here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string command;
  for (int k = 1; k < argc; ++k) command += (k > 1 ? " " : "") + std::string(argv[k]);

  try {
    if (*validate_cmd) {
      auto d = read_diagram_file(path);
      auto text = print_diagram(d);
      out << "ok " << text.substr(5, text.find('\n') - 5) << " components=" << d.ncomp()
          << " events=" << d.events.size() << " max_width=" << max_width(d) << "\n";
      return kOk;
    }
    if (*op_cmd) {
      auto d = read_diagram_file(path);
      SlicedDiagram r;
      try {
        r = apply_named_op(op_name, index, d);
      } catch (const DiagramError& e) {
        err << "wrong diagram type: " << e.what() << "\n";
        return kDomain;
      }
      write_text(out_path, print_diagram(r), out);
      return kOk;
    }
    if (*inv_cmd) {
      auto d = read_diagram_file(path);
      if (d.type == DiagramType::Handle) d = frame_g(d);
      if (d.type != DiagramType::StringLink) throw DiagramError("invariant needs a string link or a handle");
      const auto& H = algebra_by_name(algebra);
      const auto& C = coend_of(H);
      auto r = route == "literal" ? PhiRoute::Literal : route == "fast" ? PhiRoute::Fast : PhiRoute::Auto;
      auto f = phi(C, d, r);
      nlohmann::json j;
      j["algebra"] = H.name;
      j["components"] = f.n;
      j["coend_dim"] = f.d;
      j["linking"] = linking_json(linking_matrix(d));
      nlohmann::json vals = nlohmann::json::array();
      for (auto& v : f.values) vals.push_back(v.str());
      j["values"] = vals;
      j["digest"] = f.digest();
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (*br_cmd) {
      auto d = read_diagram_file(path);
      auto m = bracket(d);
      nlohmann::json j;
      j["rows"] = m.rows();
      j["cols"] = m.cols();
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
      }
      j["matrix"] = rows;
      // a multiple of the identity is reported as a single factor
      bool scalar = m.rows() == m.cols();
      for (int r = 0; r < m.rows() && scalar; ++r)
        for (int c = 0; c < m.cols() && scalar; ++c)
          if (r != c ? !m.at(r, c).is_zero() : !(m.at(r, c) == m.at(0, 0))) scalar = false;
      if (scalar && m.rows() > 0) j["factor"] = m.at(0, 0).str();
      j["digest"] = digest(Tensor<Laurent>(m));
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (*lk_cmd) {
      auto d = read_diagram_file(path);
      nlohmann::json j;
      j["linking"] = linking_json(linking_matrix(d));
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (*check_cmd) {
      if (so.max_level < 0 || so.max_level > 3) throw UsageError("--n outside the supported envelope 0..3");
      if (so.max_crossings < 0 || so.max_crossings > 12)
        throw UsageError("--crossings outside the supported envelope 0..12");
      if (so.samples < 1 || so.samples > 1000) throw UsageError("--samples outside 1..1000");
      std::optional<MutationGuard> guard;
      if (!mutate.empty()) {
        bool found = false;
        for (auto& m : convention_mutations())
          if (m.name == mutate) {
            guard.emplace(m.flag);
            found = true;
          }
        if (!found) throw UsageError("unknown mutation '" + mutate + "'");
      }
      auto rep = run_named_suite(suite, so, algebra, fixtures);
      rep.command = command;
      write_text(report_path, rep.to_json().dump(2) + "\n", out);
      err << rep.suite << ": " << rep.checked << " checked, " << rep.failed << " failed, " << rep.skipped
          << " skipped\n";
      return rep.ok() ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DiagramError& e) {
    err << "invalid diagram: " << e.what() << "\n";
    return kFailed;
  } catch (const HopfLoadError& e) {
    err << "algebra rejected: " << e.what() << "\n";
    return kFailed;
  } catch (const WidthLimit& e) {
    err << "too wide: " << e.what() << "\n";
    return kWidth;
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "bad argument: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

} // namespace rsl::cli
