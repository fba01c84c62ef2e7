// One line per acceptance criterion. Exit status is non-zero when a criterion
// fails that was not declared with --known-red, or a declared one passes.

#include "rsl/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>

using namespace rsl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string counts(const SuiteReport& r) {
  return std::to_string(r.checked) + " checked, " + std::to_string(r.failed) + " failed, " +
         std::to_string(r.skipped) + " skipped";
}

std::string first_failure(const SuiteReport& r) {
  if (r.failures.empty()) return "";
  auto& f = r.failures.front();
  return "; first failure " + f.item + " #" + std::to_string(f.instance);
}

Outcome from_report(const SuiteReport& r, bool need_no_skips = false) {
  Outcome o;
  o.pass = r.ok() && r.checked > 0 && (!need_no_skips || r.skipped == 0);
  o.detail = counts(r) + first_failure(r);
  for (auto& n : r.notes) o.detail += "; " + n;
  return o;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> known_red, only;
  std::string samples_dir = RSL_SAMPLES_DIR;
  std::uint64_t seed = 2024;
  app.add_option("--known-red", known_red, "criteria expected to fail");
  app.add_option("--only", only, "run these criteria only");
  app.add_option("--samples-dir", samples_dir, "directory with pairs.txt");
  app.add_option("--seed", seed, "seed for every suite");
  CLI11_PARSE(app, argc, argv);
  std::set<int> red(known_red.begin(), known_red.end()), sel(only.begin(), only.end());

  const auto& Csw = coend_of(instance_sweedler());
  SuiteOptions o;
  o.seed = seed;
  o.samples = 50;
  o.max_level = 3;
  o.max_crossings = 10;

  std::vector<std::pair<std::string, std::function<Outcome()>>> crit = {
      {"cocyclic relations on string links (n<=3, 50 samples, <=10 crossings)",
       [&] { return from_report(run_cocyclic_suite(o)); }},
      {"cyclic relations on string links (n<=3, 50 samples, <=10 crossings)",
       [&] { return from_report(run_cyclic_suite(o)); }},
      {"geometric and algebraic operators agree under phi over Sweedler (n<=2, 50 samples, <=8 crossings)",
       [&] { return from_report(check_phi_compatibility(Csw, 2, 50, seed, 8)); }},
      {"functoriality and phi(id_n) = unit (50 pairs)",
       [&] { return from_report(run_functoriality(Csw, 50, seed, 6, 2)); }},
      {"coend F: dinaturality on 20 module maps, Hopf axioms, S^2 = twist",
       [&] {
         auto rep = check_coend(Csw, 20, seed);
         SuiteReport r;
         for (auto& a : rep.items) r.record(a.name, a.ok);
         return from_report(r);
       }},
      {"twisted cyclicity t^{n+1} = theta^{-1} for n<=2 over Sweedler",
       [&] {
         SuiteReport r;
         for (int n = 0; n <= 2; ++n) r.record("n" + std::to_string(n), check_twisted_cyclicity(Csw, n));
         return from_report(r);
       }},
      {"duality: tilde families via L against the direct formulas",
       [&] { return from_report(run_duality_suite(o, {&Csw})); }},
      {"oracle non-vacuity: phi_sweedler separates >=3 fixture pairs, >=5 mutations caught",
       [&] {
         auto pairs = load_fixture_pairs(samples_dir);
         auto sep = run_fixture_separation(pairs, true);
         int n = static_cast<int>(pairs.size());
         auto separated = [&](const std::string& item) {
           auto it = sep.items.find(item);
           return it == sep.items.end() ? 0 : it->second.checked - it->second.failed;
         };
         int by_sw = separated("phi_sweedler_separates"), by_e2 = separated("phi_e2_separates");
         SuiteOptions m = o;
         m.samples = 20;
         m.max_level = 2;
         int caught = 0;
         std::string who;
         for (auto& r : run_mutations(m)) {
           caught += r.caught;
           who += " " + r.name + (r.caught ? "->" + r.caught_by : "->missed");
         }
         Outcome out;
         out.pass = by_sw >= 3 && caught >= 5;
         out.detail = "phi_sweedler separates " + std::to_string(by_sw) + "/" + std::to_string(n) +
                      ", phi_e2 separates " + std::to_string(by_e2) + "/" + std::to_string(n) + "; mutations caught " +
                      std::to_string(caught) + "/5:" + who;
         return out;
       }},
      {"isotopy: 100 Reidemeister sequences keep linking, bracket and phi_sweedler",
       [&] { return from_report(run_isotopy_fuzz(100, seed), true); }},
  };

  int unexpected = 0;
  for (std::size_t k = 0; k < crit.size(); ++k) {
    int id = static_cast<int>(k) + 1;
    if (!sel.empty() && !sel.count(id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = crit[k].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool expected_red = red.count(id) > 0;
    if (r.pass == expected_red) ++unexpected;
    char tbuf[32];
    std::snprintf(tbuf, sizeof tbuf, "%.1fs", secs);
    std::cout << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL") << (expected_red ? " (known red)" : "")
              << "  " << crit[k].first << "  [" << r.detail << "] " << tbuf << std::endl;
  }
  return unexpected == 0 ? 0 : 1;
}
