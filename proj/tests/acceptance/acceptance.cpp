// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include "acceptance/criteria.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <vector>

using namespace extrop::acceptance;

int main(int argc, char** argv) {
  CLI::App app{"extrop acceptance suite"};
  Paths paths;
  std::vector<int> only;
  app.add_option("--cli", paths.cli, "Path to the extrop executable")->required();
  app.add_option("--corpus", paths.corpus, "Example corpus directory")->required();
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, 60, duality_equivalence},
      {2, 60, functoriality},
      {3, 120, pushout_lemma},
      {4, 60, factorization_uniqueness},
      {5, 300, moduli_enumeration},
      {6, 300, clutching_squares},
      {7, 300, [&] { return cli_determinism(paths); }},
  };
  const std::set<int> selected(only.begin(), only.end());

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    failures += !o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ") ["
              << std::fixed << std::setprecision(1) << s << "s / " << c.budget_s << "s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
