#pragma once

#include <string>
#include <vector>

#include "copwin/catalog.hpp"
#include "copwin/census.hpp"

namespace copwin {

struct CheckResult {
  std::string suite;
  std::string id;
  bool pass;
  std::string witness;  // compact graph or vector text, empty when passing
  std::string note;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// table1, uniqueness, nonrealizable, minimality, structure,
// n5-constituents, fixtures.
std::vector<std::string> suite_names();

SuiteReport verify_suite(SearchContext& ctx, const std::string& name,
                         const std::string& corpus_dir);

// "SUITE <name> CHECK <id> PASS|FAIL [witness=...]" lines.
std::string format_report(const SuiteReport& report);

// Structural sweep helpers shared by the suites and the acceptance tests.
// Each returns an empty string on success and a short description of the
// first violation otherwise.
std::string check_upcorner(const Graph& g, const CornerRanking& r);
std::string check_neighbor_below(const Graph& g, const CornerRanking& r);
std::string check_no_near_top_dominator(const Graph& g, const CornerRanking& r);
std::string check_homomorphism(const Graph& g, const CornerRanking& r);
std::string check_path_contraction_all(const Graph& g, const CornerRanking& r);
std::string check_monotone_dismantling(const Graph& g, const CornerRanking& r);

}  // namespace copwin
