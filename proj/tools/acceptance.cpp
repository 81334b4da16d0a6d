// One pass/fail line per acceptance criterion.
//   acceptance                 all eleven
//   acceptance --criterion 5   just one (ctest runs them separately)
// Exit status is 0 only if every selected criterion passes.

#include <CLI11.hpp>

#include <iostream>

#include "thetakit/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* title;
};

constexpr Criterion kCriteria[] = {
    {1, "treewidth_facts", "treewidth facts"},
    {2, "theta_ubiquity", "theta ubiquity"},
    {3, "detector_oracle", "detector/oracle equivalence"},
    {4, "separability_oracle", "separability oracle"},
    {5, "digraph_lemma", "digraph lemma, stable set"},
    {6, "digraph_fanout", "digraph lemma, fan-out"},
    {7, "sigma_inequalities", "sigma inequality block"},
    {8, "constant_identity", "constant identity"},
    {9, "extraction_soundness", "extraction soundness"},
    {10, "forest_embedding", "forest embedding"},
    {11, "roundtrip_io", "round-trip I/O"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::uint64_t seed = thetakit::kDefaultSeed;
  bool verbose = false;
  app.add_option("--criterion,-c", only, "1..11, 0 for all")->check(CLI::Range(0, 11));
  app.add_option("--seed", seed)->capture_default_str();
  app.add_flag("--verbose,-v", verbose, "print per-check details");
  CLI11_PARSE(app, argc, argv);

  const auto caps = thetakit::SearchCaps::from_env();
  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    const auto rep = thetakit::run_suite(c.suite, seed, caps);
    const bool ok = rep.status() == "pass";
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << rep.status() << ", "
              << static_cast<long long>(rep.runtime_ms) << " ms";
    if (rep.budget_ms > 0) std::cout << " of " << static_cast<long long>(rep.budget_ms) << " ms budget";
    std::cout << "\n";
    if (verbose || !ok) std::cout << rep.summary();
  }
  return all_ok ? 0 : 1;
}
