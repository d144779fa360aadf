#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "msp/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct GlobalOpts {
  std::string data;
  long t_bound = 108;
  int jobs = 1;
  bool json = false;
  std::string out;
};

std::ostream& output(const GlobalOpts& g, std::ofstream& file) {
  if (g.out.empty()) return std::cout;
  file.open(g.out);
  if (!file) throw std::runtime_error("cannot open output file " + g.out);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator and verifier for Landweber-Novikov actions on "
               "Ray's elements and the first page of the MASS"};
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOpts g;
  app.add_option("--data", g.data, "data directory (overrides COBORDISM_DATA)");
  app.add_option("--t-bound", g.t_bound, "t-grading bound for cell enumeration");
  app.add_option("--jobs", g.jobs, "parallelism degree")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "emit JSON");
  app.add_option("--out", g.out, "write output to a file");

  // sop
  std::string sop_omega;
  long sop_phi = 0;
  auto* sop = app.add_subcommand("sop", "print S_omega Phi_n");
  sop->add_option("--omega", sop_omega, "operation index, e.g. 2,2 or b3^1*b2^4")->required();
  sop->add_option("--phi,--n", sop_phi, "Ray element index")->required();

  // d1
  std::string d1_expr;
  auto* d1cmd = app.add_subcommand("d1", "apply the first differential");
  d1cmd->add_option("expr", d1_expr, "polynomial in the h/u/c grammar")->required();

  // cell
  long cq = 0, cs = 0, ct = 0;
  auto* cell = app.add_subcommand("cell", "basis and homology of a tridegree cell");
  cell->add_option("q", cq)->required();
  cell->add_option("s", cs)->required();
  cell->add_option("t", ct)->required();

  // check
  std::string lhs_text, rhs_text, mode_text = "identical";
  auto* check = app.add_subcommand("check", "compare two expressions");
  check->add_option("--lhs", lhs_text)->required();
  check->add_option("--rhs", rhs_text)->required();
  check->add_option("--mode", mode_text)->check(CLI::IsMember({"identical", "boundary"}));

  // coeff: the chain sums behind the repeated-part operations
  long qn = 0, qm = 0, qk = 0;
  auto* coeff = app.add_subcommand("coeff", "chain-sum coefficients for S_{k,...,k} Phi_n");
  coeff->add_option("--n", qn)->required();
  coeff->add_option("--m", qm, "repetition count")->required();
  coeff->add_option("--k", qk, "part size")->required();

  // verify
  std::string suite_name;
  long max_n = 20, max_k = 8, d1_t = 60;
  unsigned family_m = 10;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "corollaries|table9|mass|relations|projections|all")
      ->required();
  verify->add_option("--max-n", max_n, "sweep bound on the Ray element index");
  verify->add_option("--max-k", max_k, "sweep bound on the part size");
  verify->add_option("--family-m", family_m, "bound for instantiating family rows");
  verify->add_option("--d1-exhaustive-t", d1_t, "exhaustive d1 o d1 sweep bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  msp::SuiteOptions opt;
  opt.data = msp::data_dir(g.data);
  opt.jobs = g.jobs;
  opt.t_bound = g.t_bound;
  opt.max_n = max_n;
  opt.max_k = max_k;
  opt.table9_family_m = family_m;
  opt.d1_exhaustive_t = d1_t;
  msp::Registry reg = opt.registry();

  std::ofstream outfile;
  try {
    std::ostream& os = output(g, outfile);

    if (*sop) {
      msp::OpIndex omega;
      try {
        omega = msp::OpIndex::parse(sop_omega);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      if (sop_phi < 1) {
        std::cerr << "error: --phi must be positive\n";
        return kExitUsage;
      }
      msp::PhiVector v = msp::s_on_phi(omega, unsigned(sop_phi));
      os << v.str() << "\n";
      return kExitOk;
    }

    if (*d1cmd) {
      try {
        msp::Poly p = msp::parse_poly(d1_expr);
        os << msp::render_poly(msp::d1(p, reg)) << "\n";
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      return kExitOk;
    }

    if (*cell) {
      msp::CellInfo info;
      try {
        info = msp::homology(cq, cs, ct, reg);
      } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      os << info.line() << "\n";
      for (auto& rep : info.representatives) os << "  " << msp::render_poly(rep) << "\n";
      return kExitOk;
    }

    if (*check) {
      msp::CheckResult r;
      try {
        msp::Poly lhs = msp::parse_poly(lhs_text);
        msp::Poly rhs = msp::parse_poly(rhs_text);
        msp::CheckMode mode = mode_text == "identical" ? msp::CheckMode::identical
                                                       : msp::CheckMode::up_to_boundary;
        r = msp::check_relation(lhs, rhs, mode, reg);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      os << (r.ok ? "equal" : "different");
      if (!r.witness.empty()) os << "  (" << r.witness << ")";
      os << "\n";
      return r.ok ? kExitOk : kExitVerifyFailed;
    }

    if (*coeff) {
      auto print = [&](const char* name, const msp::SumResult& r) {
        if (auto* v = std::get_if<msp::BigInt>(&r))
          os << name << " = " << v->str() << "  (mod 2: " << (*v % 2 != 0) << ")\n";
        else
          os << name << ": not applicable, " << std::get<msp::NotApplicable>(r).reason
             << "\n";
      };
      print("alpha", msp::alpha_bruteforce({qn, qm, qk}));
      print("gamma", msp::gamma_bruteforce({qn, qm, qk}));
      os << "S_{k^m} Phi_n = " << msp::s_repeated_phi(qn, qk, qm).str() << "\n";
      return kExitOk;
    }

    if (*verify) {
      std::vector<std::string> names;
      if (suite_name == "all") {
        names = msp::suite_names();
      } else {
        bool known = false;
        for (auto& n : msp::suite_names()) known |= (n == suite_name);
        if (!known) {
          std::cerr << "error: unknown suite '" << suite_name << "'\n";
          return kExitUsage;
        }
        names.push_back(suite_name);
      }
      int fails = 0;
      bool first = true;
      if (g.json) os << "[\n";
      for (auto& name : names) {
        msp::SuiteResult r;
        try {
          r = msp::run_suite(name, opt);
        } catch (const std::exception& e) {
          std::cerr << "error: " << e.what() << "\n";
          return kExitData;
        }
        fails += r.totals().fail;
        if (g.json) {
          if (!first) os << ",\n";
          os << r.to_json();
        } else {
          os << r.to_text() << "\n";
        }
        first = false;
      }
      if (g.json) os << "\n]\n";
      return fails == 0 ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
