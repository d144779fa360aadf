// Acceptance gate: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Bounds and tolerances are fixed here; every
// comparison is exact.
#include <chrono>
#include <cstdio>
#include <string>

#include "msp/suites.hpp"

using namespace msp;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int idx, const std::string& name, bool ok, const std::string& detail,
            double secs) {
  std::printf("CRITERION %d [%s]: %s (%.1fs)%s%s\n", idx, name.c_str(),
              ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

SuiteTotals totals_matching(const SuiteResult& r, const std::string& prefix,
                            std::vector<std::string>* failed = nullptr) {
  SuiteTotals t;
  for (auto& it : r.items) {
    if (it.id.rfind(prefix, 0) != 0) continue;
    if (it.verdict == "pass") ++t.pass;
    else if (it.verdict == "fail") {
      ++t.fail;
      if (failed) failed->push_back(it.id + ": " + it.witness);
    } else if (it.verdict == "insufficient") ++t.insufficient;
    else ++t.na;
  }
  return t;
}

std::string first_failures(const SuiteResult& r, size_t limit = 3) {
  std::string out;
  size_t count = 0;
  for (auto& it : r.items) {
    if (it.verdict != "fail" && it.verdict != "insufficient") continue;
    if (count++ >= limit) {
      out += " ...";
      break;
    }
    out += " [" + it.id + " " + it.verdict + (it.witness.empty() ? "" : ": " + it.witness) +
           "]";
  }
  return out;
}

}  // namespace

int main() {
  SuiteOptions opt;
  opt.data = data_dir();
  opt.jobs = 2;

  // 1. closed forms vs the chain-sum oracle, n <= 20, k <= 8, every shape
  {
    Timer t;
    SuiteResult r = suite_corollaries(opt);
    SuiteTotals tot = r.totals();
    report(1, "corollaries", tot.fail == 0 && tot.pass > 0,
           std::to_string(tot.pass) + " pass, " + std::to_string(tot.fail) + " fail, " +
               std::to_string(tot.na) + " n/a" + first_failures(r),
           t.seconds());
  }

  // 2. the coefficient of b_k^m in chi(B)^{2n-km}_{km} equals the chain sum
  //    for n <= 10, mk <= 12, mk even
  {
    Timer t;
    long checked = 0, bad = 0;
    for (long n = 1; n <= 10; ++n)
      for (long k = 1; k <= 12; ++k)
        for (long m = 1; m <= 12; ++m) {
          if (m * k > 12 || (m * k) % 2 != 0 || m * k >= 2 * n - 1) continue;
          BigInt lhs = chi_component(unsigned(2 * n - k * m), unsigned(k * m))
                           .coeff(BMono::b(uint32_t(k), uint32_t(m)));
          auto rhs = alpha_bruteforce({n, m, k});
          ++checked;
          if (!std::holds_alternative<BigInt>(rhs) || lhs != std::get<BigInt>(rhs)) ++bad;
        }
    report(2, "conjugation-coefficients", bad == 0 && checked > 0,
           std::to_string(checked) + " coefficients compared exactly", t.seconds());
  }

  // 3. Table 9 reproduction: family rows for m <= 10 and all explicit rows;
  //    repeated-index rows must all pass (the documented misprint carries a
  //    corrected variant row), single-index rows under an admissible reading
  {
    Timer t;
    SuiteResult r = suite_table9(opt);
    SuiteTotals tot = r.totals();
    std::vector<std::string> failed;
    totals_matching(r, "", &failed);
    report(3, "table9", tot.fail == 0 && tot.pass > 0,
           std::to_string(tot.pass) + " rows pass, " + std::to_string(tot.na) +
               " documented discrepancies" + first_failures(r),
           t.seconds());
  }

  // 4 + 5. d1 o d1 = 0 sweeps and the generator tables
  {
    Timer t;
    SuiteResult r = suite_mass(opt);
    SuiteTotals d1tot = totals_matching(r, "d1d1/");
    report(4, "d1-composite-zero", d1tot.fail == 0 && d1tot.pass >= 3, first_failures(r),
           t.seconds());
    Timer t5;
    SuiteTotals t11 = totals_matching(r, "table11.dat/");
    SuiteTotals t12 = totals_matching(r, "table12.dat/");
    SuiteTotals t13 = totals_matching(r, "table13.dat/");
    SuiteTotals massey = totals_matching(r, "massey/");
    bool ok = t11.fail == 0 && t12.fail == 0 && t13.fail == 0 && massey.fail == 0 &&
              t11.pass == 28 && t12.pass == 17 && t13.pass == 19;
    report(5, "tables-11-12-13",
           ok,
           std::to_string(t11.pass + t12.pass + t13.pass) +
               " printed expansions are nonbounding cycles, " + std::to_string(massey.pass) +
               " reproduced by the bracket machinery" + first_failures(r),
           t5.seconds());
  }

  // 6 + 8. the kappa identities and the relation suite
  {
    Timer t;
    SuiteResult r = suite_relations(opt);
    SuiteTotals kappa = totals_matching(r, "L2.6.1");
    bool kappa_ok = kappa.fail == 0 && kappa.pass >= 12;
    report(6, "kappa-identities", kappa_ok,
           std::to_string(kappa.pass) + " identities verified, printed (i) display " +
               "re-derived with its residue itemized" +
               first_failures(r),
           t.seconds());

    SuiteTotals all = r.totals();
    report(8, "relation-suite", all.fail == 0 && all.pass > 150,
           std::to_string(all.pass) + " pass, " + std::to_string(all.na) +
               " documented variants/n-a" + first_failures(r),
           0.0);
  }

  // 7. projection closure: >= 95% of the printed derivation steps verify
  {
    Timer t;
    SuiteResult r = suite_projections(opt);
    int pass = 0, total = 0;
    for (auto& it : r.items) {
      if (it.id.rfind("claim/", 0) != 0) continue;
      ++total;
      if (it.verdict == "pass") ++pass;
    }
    double rate = total ? 100.0 * pass / total : 0.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d/%d steps verified (%.1f%%)", pass, total, rate);
    report(7, "projection-closure", total > 0 && rate >= 95.0,
           std::string(buf) + first_failures(r), t.seconds());
  }

  if (g_failures) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
