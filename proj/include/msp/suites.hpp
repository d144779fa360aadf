#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "msp/cartan.hpp"
#include "msp/massey.hpp"

namespace msp {

struct SuiteItem {
  std::string id;
  std::string locus;
  std::string verdict;  // pass | fail | not-applicable | insufficient
  std::string witness;
  // structured fields for machine consumers (projection records carry
  // m, omega, mode, diff)
  std::vector<std::pair<std::string, std::string>> extra;
};

struct SuiteTotals {
  int pass = 0, fail = 0, na = 0, insufficient = 0;
};

struct SuiteResult {
  std::string suite;
  std::string started;  // ISO timestamp, top level only
  std::vector<SuiteItem> items;
  double seconds = 0;

  SuiteTotals totals() const;
  std::string to_json() const;
  std::string to_text() const;
};

struct SuiteOptions {
  std::filesystem::path data;
  int jobs = 1;
  long t_bound = 108;
  // sweep bounds, CLI-overridable
  long max_n = 20;
  long max_k = 8;
  long chi_max_n = 10;
  long chi_max_w = 12;
  long d1_exhaustive_t = 60;
  size_t d1_random_samples = 10000;
  unsigned table9_family_m = 10;

  Registry registry() const {
    Registry r;
    r.t_bound = t_bound;
    // keep the generator ranges matched to the cell bound
    r.max_c = unsigned(std::max(2L, std::min(0xffeL, t_bound / 4)));
    while (2 * ((1L << (r.max_h + 1)) - 1) <= t_bound && r.max_h < 11) ++r.max_h;
    r.max_u = r.max_h;
    return r;
  }
};

SuiteResult suite_corollaries(const SuiteOptions& opt);
SuiteResult suite_table9(const SuiteOptions& opt);
SuiteResult suite_mass(const SuiteOptions& opt);
SuiteResult suite_relations(const SuiteOptions& opt);
SuiteResult suite_projections(const SuiteOptions& opt);

// name in {corollaries, table9, mass, relations, projections}
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);
const std::vector<std::string>& suite_names();

}  // namespace msp
