#include "msp/suites.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace msp {

namespace {

std::string now_iso() {
  auto t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

SuiteItem item(std::string id, std::string locus, std::string verdict,
               std::string witness = "") {
  return {std::move(id), std::move(locus), std::move(verdict), std::move(witness)};
}

std::string phivec_str(const PhiVector& v) { return v.str(); }

Poly c_triple_sq(unsigned i, unsigned j, unsigned k) {
  unsigned subs[3] = {i, j, k};
  std::sort(subs, subs + 3);
  Poly c = Poly::gen(GenId::c(alias_to_index(subs)));
  return c * c;
}

}  // namespace

SuiteTotals SuiteResult::totals() const {
  SuiteTotals t;
  for (auto& it : items) {
    if (it.verdict == "pass") ++t.pass;
    else if (it.verdict == "fail") ++t.fail;
    else if (it.verdict == "insufficient") ++t.insufficient;
    else ++t.na;
  }
  return t;
}

std::string SuiteResult::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["started"] = started;
  j["items"] = nlohmann::json::array();
  for (auto& it : items) {
    nlohmann::json obj = {{"id", it.id}, {"locus", it.locus}, {"verdict", it.verdict},
                          {"witness", it.witness}};
    for (auto& [k, v] : it.extra) obj[k] = v;
    j["items"].push_back(std::move(obj));
  }
  SuiteTotals t = totals();
  j["totals"] = {{"pass", t.pass}, {"fail", t.fail}, {"na", t.na},
                 {"insufficient", t.insufficient}};
  return j.dump(2);
}

std::string SuiteResult::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n";
  for (auto& it : items) {
    out << "  [" << it.verdict << "] " << it.id << "  (" << it.locus << ")";
    if (!it.witness.empty()) out << "  -- " << it.witness;
    out << "\n";
  }
  SuiteTotals t = totals();
  out << "totals: pass=" << t.pass << " fail=" << t.fail << " na=" << t.na
      << " insufficient=" << t.insufficient << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// corollaries: closed forms vs the chain-sum oracle
// ---------------------------------------------------------------------------

SuiteResult suite_corollaries(const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "corollaries";
  res.started = now_iso();
  for (int shape = 1; shape <= kClosedFormShapes; ++shape) {
    long m = shape + 1;
    std::string locus = "Ch.1 corollary for S_{k^" + std::to_string(m) + "}";
    for (long n = 2; n <= opt.max_n; ++n) {
      for (long k = 1; k <= opt.max_k; ++k) {
        std::string id = "shape" + std::to_string(shape) + "/n" + std::to_string(n) + "/k" +
                         std::to_string(k);
        ClosedForm cf = corollary_closed_form(shape, n, k);
        if (!cf.applicable) {
          res.items.push_back(item(id, locus, "not-applicable", cf.reason));
          continue;
        }
        PhiVector oracle = s_repeated_phi(n, k, m);
        PhiVector claimed = cf.value();
        if (claimed == oracle) {
          res.items.push_back(item(id, locus, "pass"));
        } else {
          res.items.push_back(item(id, locus, "fail",
                                   "closed form " + phivec_str(claimed) + " vs chain sum " +
                                       phivec_str(oracle)));
        }
      }
    }
  }
  // the printed theta-hypothesis variant of the three-part corollary
  for (long n = 2; n <= opt.max_n; ++n) {
    for (long k = 1; k <= opt.max_k; ++k) {
      if (3 * k != 2 * n + 1) continue;
      PhiVector oracle = s_repeated_phi(n, k, 3);
      std::string id = "shape2/printed-theta-variant/n" + std::to_string(n) + "/k" +
                       std::to_string(k);
      res.items.push_back(item(
          id, "Ch.1 corollary for S_{k,k,k}, theta case as printed",
          "not-applicable",
          "printed hypothesis 2n+1=3k admits no Lemma 1.1 sum (mk != 2n-1); the weight-" +
              std::to_string(3 * k) + " coefficient is " + phivec_str(oracle) +
              ", the proof's substitutions pin 3k=2n-1 instead"));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// table9: operation values on the Ray elements
// ---------------------------------------------------------------------------

SuiteResult suite_table9(const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "table9";
  res.started = now_iso();

  // family: S_k Phi_m = Phi_{m-k} (m > k); single-index rows are checked
  // under both documented readings (b_{2k} matches the degree bookkeeping)
  for (unsigned m = 2; m <= opt.table9_family_m; ++m) {
    for (unsigned k = 1; k < m; ++k) {
      PhiVector doubled = s_on_phi(OpIndex::repeated(2 * k, 1), m);
      PhiVector literal = s_on_phi(OpIndex::repeated(k, 1), m);
      PhiVector want = PhiVector::phi(int(m - k));
      std::string id = "family-single/m" + std::to_string(m) + "/k" + std::to_string(k);
      bool ok = doubled == want || literal == want;
      res.items.push_back(item(
          id, "Table 9 row S_k Phi_m = Phi_{m-k}", ok ? "pass" : "fail",
          "b_{2k} reading: " + phivec_str(doubled) + "; b_k reading: " + phivec_str(literal)));
    }
  }
  // family: S_{2m-1} Phi_m = theta_1
  for (unsigned m = 1; m <= opt.table9_family_m; ++m) {
    PhiVector got = s_on_phi(OpIndex::repeated(2 * m - 1, 1), m);
    res.items.push_back(item("family-theta/m" + std::to_string(m),
                             "Table 9 row S_{2m-1} Phi_m = theta_1",
                             got == PhiVector::theta1() ? "pass" : "fail",
                             "b_{2m-1} reading: " + phivec_str(got)));
  }
  // family: S_{k,k} Phi_m = (m-k) Phi_{m-k}
  for (unsigned m = 2; m <= opt.table9_family_m; ++m) {
    for (unsigned k = 1; k < m; ++k) {
      PhiVector got = s_on_phi(OpIndex::repeated(k, 2), m);
      PhiVector want =
          ((m - k) % 2) ? PhiVector::phi(int(m - k)) : PhiVector::zero();
      std::string id = "family-kk/m" + std::to_string(m) + "/k" + std::to_string(k);
      res.items.push_back(item(id, "Table 9 row S_{k,k} Phi_m = (m-k) Phi_{m-k}",
                               got == want ? "pass" : "fail",
                               got == want ? "" : "got " + phivec_str(got)));
    }
  }
  // family: S_{k,k,k} Phi_m = (m-k) Phi_{m-3s}, k = 2s, m > 3s
  for (unsigned m = 2; m <= opt.table9_family_m; ++m) {
    for (unsigned s = 1; 3 * s < m; ++s) {
      unsigned k = 2 * s;
      PhiVector got = s_on_phi(OpIndex::repeated(k, 3), m);
      PhiVector want =
          ((m - k) % 2) ? PhiVector::phi(int(m - 3 * s)) : PhiVector::zero();
      std::string id = "family-kkk/m" + std::to_string(m) + "/k" + std::to_string(k);
      res.items.push_back(item(id, "Table 9 row S_{k,k,k} Phi_m, k = 2s",
                               got == want ? "pass" : "fail",
                               got == want ? "" : "got " + phivec_str(got)));
    }
  }
  // explicit rows
  auto rows = load_op_rows(data_dir(opt.data.string()) / "table9.dat");
  for (auto& row : rows) {
    PhiVector got = s_on_phi(row.omega, unsigned(row.n));
    std::string id = "row/S_{" + row.omega.str() + "}phi" + std::to_string(row.n);
    std::string locus = "Table 9 explicit row";
    if (!row.tag.empty()) id += "/" + row.tag;
    bool ok = got == row.value;
    if (row.tag == "printed-discrepancy") {
      res.items.push_back(item(
          id, locus, ok ? "pass" : "not-applicable",
          ok ? "" : "printed value " + phivec_str(row.value) + " vs computed " +
                        phivec_str(got) + "; the corrected variant row carries the computed value"));
    } else {
      res.items.push_back(
          item(id, locus, ok ? "pass" : "fail",
               ok ? "" : "expected " + phivec_str(row.value) + ", got " + phivec_str(got)));
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// mass: d1^2 sweeps and the generator tables
// ---------------------------------------------------------------------------

namespace {

struct GenBudget {
  GenId g;
  long t;
};

// enumerate monomials over `gens` with total t <= budget (h0-free callers
// pass no h0); callback returns false to abort
template <typename Fn>
void enum_monomials(const std::vector<GenBudget>& gens, size_t idx, long budget,
                    const Monomial& current, Fn&& fn) {
  if (idx == gens.size()) {
    fn(current);
    return;
  }
  enum_monomials(gens, idx + 1, budget, current, fn);
  Monomial acc = current;
  for (long e = 1; e * gens[idx].t <= budget; ++e) {
    acc = acc * Monomial::gen(gens[idx].g);
    enum_monomials(gens, idx + 1, budget - e * gens[idx].t, acc, fn);
  }
}

}  // namespace

SuiteResult suite_mass(const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "mass";
  res.started = now_iso();
  Registry reg = opt.registry();

  // d1 o d1 on every registered generator
  {
    bool all_ok = true;
    std::string bad;
    for (GenId g : reg.generators()) {
      Poly dd = d1(d1_generator(g, reg), reg);
      if (!dd.is_zero()) {
        all_ok = false;
        bad = g.str();
        break;
      }
    }
    res.items.push_back(item("d1d1/generators", "Sec 2.1 differential formulas",
                             all_ok ? "pass" : "fail",
                             all_ok ? "" : "d1(d1(" + bad + ")) != 0"));
  }

  // exhaustive d1^2 = 0 and tridegree shift on h0-free monomials, t <= bound
  {
    std::vector<GenBudget> gens;
    for (GenId g : reg.generators()) {
      if (g.kind() == GenKind::H0) continue;
      long t = gen_degree(g).t;
      if (t <= opt.d1_exhaustive_t) gens.push_back({g, t});
    }
    std::atomic<size_t> checked{0};
    std::mutex fail_mutex;
    std::string failure;
    // stripe the enumeration by the exponent of the first generator
    long t0 = gens.empty() ? 1 : gens[0].t;
    long max_e0 = gens.empty() ? 0 : opt.d1_exhaustive_t / t0;
    std::atomic<long> next_e0{0};
    auto worker = [&] {
      for (;;) {
        long e0 = next_e0.fetch_add(1);
        if (e0 > max_e0 || gens.empty()) break;
        Monomial start = e0 ? Monomial::gen(gens[0].g, uint32_t(e0)) : Monomial::one();
        size_t local = 0;
        enum_monomials(gens, 1, opt.d1_exhaustive_t - e0 * t0, start, [&](const Monomial& m) {
          ++local;
          Poly dm = d1(Poly::mono(m), reg);
          if (!dm.is_zero()) {
            auto deg = dm.homogeneous_degree();
            TriDegree want = m.degree();
            want.q += 1;
            want.s += 1;
            if (!deg || !(*deg == want)) {
              std::lock_guard lk(fail_mutex);
              if (failure.empty())
                failure = "d1 tridegree shift violated at " + render_monomial(m);
            }
          }
          if (!d1(dm, reg).is_zero()) {
            std::lock_guard lk(fail_mutex);
            if (failure.empty()) failure = "d1(d1(" + render_monomial(m) + ")) != 0";
          }
        });
        checked += local;
      }
    };
    unsigned nthreads = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    res.items.push_back(item(
        "d1d1/exhaustive-t" + std::to_string(opt.d1_exhaustive_t), "Sec 2.1, d1 composite",
        failure.empty() ? "pass" : "fail",
        failure.empty() ? std::to_string(checked.load()) + " monomials checked" : failure));
  }

  // randomized d1^2 = 0 for d1_exhaustive_t < t <= t_bound
  {
    std::mt19937 rng(0x5eed);
    auto gens = reg.generators();
    std::string failure;
    size_t produced = 0;
    size_t attempts = 0;
    while (produced < opt.d1_random_samples && attempts < opt.d1_random_samples * 200) {
      ++attempts;
      Monomial m = Monomial::one();
      long t = 0;
      // random h0 power (does not move t)
      if (rng() % 4 == 0) m = m * Monomial::gen(GenId::h0(), 1 + rng() % 2);
      while (true) {
        GenId g = gens[rng() % gens.size()];
        long gt = gen_degree(g).t;
        if (t + gt > opt.t_bound) break;
        m = m * Monomial::gen(g);
        t += gt;
        if (t > opt.d1_exhaustive_t && rng() % 3 == 0) break;
      }
      if (t <= opt.d1_exhaustive_t || t > opt.t_bound) continue;
      ++produced;
      if (!d1(d1(Poly::mono(m), reg), reg).is_zero()) {
        failure = "d1(d1(" + render_monomial(m) + ")) != 0";
        break;
      }
    }
    res.items.push_back(item("d1d1/random-t" + std::to_string(opt.t_bound),
                             "Sec 2.1, d1 composite",
                             failure.empty() && produced >= opt.d1_random_samples ? "pass"
                                                                                  : "fail",
                             failure.empty() ? std::to_string(produced) + " samples" : failure));
  }

  // generator tables: every printed expansion is a cycle and not a boundary
  auto dir = data_dir(opt.data.string());
  struct TableSpec {
    const char* file;
    const char* locus;
  };
  for (TableSpec spec : {TableSpec{"table11.dat", "Table 11 (E^{0,1,t})"},
                         TableSpec{"table12.dat", "Table 12 (E^{0,0,t})"},
                         TableSpec{"table13.dat", "Table 13 (E^{2,0,t})"}}) {
    for (auto& el : load_named_elements(dir / spec.file)) {
      std::string id = std::string(spec.file) + "/" + el.name;
      if (el.expansion.is_zero()) {
        res.items.push_back(item(id, spec.locus, "fail", "expansion is zero"));
        continue;
      }
      bool cyc = is_cycle(el.expansion, reg);
      bool bnd = cyc && el.t <= opt.t_bound ? is_boundary(el.expansion, reg) : false;
      std::string verdict = (cyc && !bnd) ? "pass" : "fail";
      std::string witness;
      if (!cyc)
        witness = "d1 = " + render_poly(d1(el.expansion, reg));
      else if (bnd)
        witness = "expansion is a boundary";
      res.items.push_back(item(id, spec.locus, verdict, witness));
    }
  }

  // the Massey machinery reproduces the printed tables
  {
    MasseyContext ctx(reg);
    SymbolTable t11;
    for (auto& el : load_named_elements(dir / "table11.dat")) t11[el.name] = el.expansion;
    SymbolTable t13;
    for (auto& el : load_named_elements(dir / "table13.dat")) t13[el.name] = el.expansion;

    auto expect = [&](const std::string& id, const Poly& built, const SymbolTable& table,
                      const std::string& name, const char* locus) {
      auto it = table.find(name);
      if (it == table.end()) {
        res.items.push_back(item(id, locus, "insufficient", name + " not in table"));
        return;
      }
      bool ok = built == it->second;
      res.items.push_back(item(id, locus, ok ? "pass" : "fail",
                               ok ? "" : "built " + render_poly(built)));
    };

    const char* l11 = "Table 11 vs Sec 2.3 constructions";
    expect("massey/phi3", ctx.phi_tilde(2, 3), t11, "phi3", l11);
    expect("massey/phit5", ctx.phi_tilde(2, 4), t11, "phit5", l11);
    expect("massey/phit6", ctx.phi_tilde(3, 4), t11, "phit6", l11);
    expect("massey/phit9", ctx.phi_tilde(2, 5), t11, "phit9", l11);
    expect("massey/phit10", ctx.phi_tilde(3, 5), t11, "phit10", l11);
    expect("massey/phit12", ctx.phi_tilde(4, 5), t11, "phit12", l11);
    expect("massey/phit7", ctx.phi_tilde3(2, 3, 4), t11, "phit7", l11);
    expect("massey/phit11", ctx.phi_tilde3(2, 3, 5), t11, "phit11", l11);
    expect("massey/phit13", ctx.phi_tilde3(2, 4, 5), t11, "phit13", l11);
    expect("massey/omega1", ctx.omega_elem(2, 3, 4), t11, "omega1", l11);
    expect("massey/omega2", ctx.omega_elem(2, 3, 5), t11, "omega2", l11);
    expect("massey/omega3", ctx.omega_elem(2, 4, 5), t11, "omega3", l11);
    expect("massey/omega4", ctx.omega_elem(3, 4, 5), t11, "omega4", l11);
    expect("massey/psi1", ctx.psi_one_hat(2, 2, 3, 4), t11, "psi1", l11);
    expect("massey/psi2", ctx.psi_one_hat(3, 2, 3, 4), t11, "psi2", l11);
    expect("massey/psi3", ctx.psi_two_hat(2, 3, 2, 3, 4), t11, "psi3", l11);
    expect("massey/psi4", ctx.psi_one_hat(4, 2, 3, 4), t11, "psi4", l11);
    expect("massey/psi5", ctx.psi_two_hat(2, 4, 2, 3, 4), t11, "psi5", l11);
    expect("massey/psi6", ctx.psi_one_hat(2, 2, 3, 5), t11, "psi6", l11);
    expect("massey/psi7", ctx.psi_two_hat(3, 4, 2, 3, 4), t11, "psi7", l11);
    expect("massey/psi8", ctx.psi_one_hat(3, 2, 3, 5), t11, "psi8", l11);
    expect("massey/psi9", ctx.psi_two_hat(2, 3, 2, 3, 5), t11, "psi9", l11);
    expect("massey/psi10", ctx.psi_one_hat(2, 2, 4, 5), t11, "psi10", l11);

    const char* l13 = "Table 13 vs Sec 2.3 constructions";
    auto u = [&](unsigned j) { return ctx.u_elem(j); };
    expect("massey/a1", ctx.massey_A(u(1), u(1)), t13, "a1", l13);
    expect("massey/a2", ctx.massey_A(u(1), u(2)), t13, "a2", l13);
    expect("massey/a3", ctx.massey_A(u(2), u(2)), t13, "a3", l13);
    expect("massey/a4", ctx.massey_A(u(1), u(3)), t13, "a4", l13);
    expect("massey/a5", ctx.massey_A(u(2), u(3)), t13, "a5", l13);
    expect("massey/a7", ctx.massey_A(u(3), u(3)), t13, "a7", l13);
    expect("massey/a8", ctx.massey_A(u(1), u(4)), t13, "a8", l13);
    expect("massey/a9", ctx.massey_A(u(2), u(4)), t13, "a9", l13);
    expect("massey/a11", ctx.massey_A(u(3), u(4)), t13, "a11", l13);
    expect("massey/a13", ctx.massey_A(u(1), ctx.omega_elem(2, 3, 4)), t13, "a13", l13);
    expect("massey/b6", ctx.massey_A(u(1), ctx.phi_tilde(2, 3)), t13, "b6", l13);
    expect("massey/b7", ctx.massey_A(u(2), ctx.phi_tilde(2, 3)), t13, "b7", l13);
    expect("massey/b9", ctx.massey_A(u(3), ctx.phi_tilde(2, 3)), t13, "b9", l13);
    expect("massey/b10", ctx.massey_A(u(1), ctx.phi_tilde(2, 4)), t13, "b10", l13);
    expect("massey/b11", ctx.massey_A(u(2), ctx.phi_tilde(2, 4)), t13, "b11", l13);
    expect("massey/b12", ctx.massey_A(u(1), ctx.phi_tilde(3, 4)), t13, "b12", l13);
    expect("massey/b13", ctx.massey_A(u(4), ctx.phi_tilde(2, 3)), t13, "b13", l13);
    expect("massey/f13", ctx.massey_A(u(2), ctx.phi_tilde(3, 4)), t13, "f13", l13);
  }

  return res;
}

// ---------------------------------------------------------------------------
// relations: Lemmas 2.1, 2.3.2, 2.4.1, 2.6.1 and Table 14
// ---------------------------------------------------------------------------

namespace {

struct RelChecker {
  SuiteResult& res;
  Registry reg;
  MasseyContext ctx;
  SymbolTable sym;

  RelChecker(SuiteResult& r, const SuiteOptions& opt) : res(r), reg(opt.registry()), ctx(reg) {
    auto dir = data_dir(opt.data.string());
    for (const char* f : {"table11.dat", "table12.dat", "table13.dat"})
      for (auto& el : load_named_elements(dir / f)) sym[el.name] = el.expansion;
    ActionDb db;
    db.load_projections(dir / "projections.dat");
    for (auto& [m, p] : db.projections()) sym["phi" + std::to_string(m)] = p;
  }

  void identical(const std::string& id, const std::string& locus, const Poly& lhs,
                 const Poly& rhs) {
    CheckResult c = check_relation(lhs, rhs, CheckMode::identical, reg);
    res.items.push_back(item(id, locus, c.ok ? "pass" : "fail", c.witness));
  }
  // a printed form known to differ from the Frobenius-exact one: report the
  // printed verdict as a documented variant, never as a bare failure
  void printed_variant(const std::string& id, const std::string& locus, const Poly& lhs,
                       const Poly& rhs, const std::string& note) {
    CheckResult c = check_relation(lhs, rhs, CheckMode::identical, reg);
    res.items.push_back(item(id, locus, c.ok ? "pass" : "not-applicable",
                             c.ok ? "printed form already exact" : note + "; " + c.witness));
  }
  void boundary(const std::string& id, const std::string& locus, const Poly& lhs,
                const Poly& rhs) {
    CheckResult c = check_relation(lhs, rhs, CheckMode::up_to_boundary, reg);
    res.items.push_back(item(id, locus, c.ok ? "pass" : "fail", c.witness));
  }
};

}  // namespace

SuiteResult suite_relations(const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "relations";
  res.started = now_iso();
  RelChecker rc(res, opt);
  MasseyContext& ctx = rc.ctx;
  const Registry& reg = rc.reg;
  auto u = [&](unsigned j) { return ctx.u_elem(j); };
  auto c1 = [&](unsigned i) { return c_pair(1, i); };

  // ----- Lemma 2.1, identities over i,j,k in {2..5} -----------------------
  std::vector<std::array<unsigned, 3>> triples;
  for (unsigned i = 2; i <= 5; ++i)
    for (unsigned j = 2; j <= 5; ++j)
      for (unsigned k = 2; k <= 5; ++k)
        if (i != j && j != k && i != k) triples.push_back({i, j, k});

  for (auto [i, j, k] : triples) {
    std::string suf = "/" + std::to_string(i) + std::to_string(j) + std::to_string(k);
    Poly pt_ij = ctx.phi_tilde(i, j), pt_jk = ctx.phi_tilde(j, k), pt_ik = ctx.phi_tilde(i, k);
    Poly om = ctx.omega_elem(i, j, k);
    // (1)
    rc.identical("L2.1-1" + suf, "Lemma 2.1 (1)",
                 u(i) * pt_jk + u(j) * pt_ik + u(k) * pt_ij, u(1) * om);
    // (2): under both bindings of the three-index tilde symbol the printed
    // product phi~_{ij} phi~_{jk} leaves the residue phi~_{ij}(phi~_{ik} +
    // phi~_{jk}); the j,k-symmetric product phi~_{ij} phi~_{ik} closes it
    {
      Poly rhs = u(1) * ctx.psi_one_hat(i, i, j, k) + u(j) * u(k) * c1(i) * c1(i);
      Poly lhsA = u(i) * ctx.phi_tilde3(i, j, k) + pt_ij * pt_jk;
      Poly lhsB = u(i) * om + pt_ij * pt_jk;
      CheckResult a = check_relation(lhsA, rhs, CheckMode::identical, reg);
      CheckResult b = check_relation(lhsB, rhs, CheckMode::identical, reg);
      std::string verdict = (a.ok || b.ok) ? "pass" : "not-applicable";
      std::string witness = std::string("binding phi~_{ijk} as tilde projection: ") +
                            (a.ok ? "holds" : "differs by " + a.witness) +
                            "; binding as omega_{ijk}: " +
                            (b.ok ? "holds" : "differs by " + b.witness);
      res.items.push_back(item("L2.1-2" + suf + "/printed",
                               "Lemma 2.1 (2), symbol binding ambiguous", verdict, witness));
      rc.identical("L2.1-2" + suf + "/corrected",
                   "Lemma 2.1 (2), product corrected to phi~_{ij} phi~_{ik}",
                   u(i) * ctx.phi_tilde3(i, j, k) + pt_ij * pt_ik, rhs);
    }
    // (3)
    rc.identical("L2.1-3" + suf, "Lemma 2.1 (3)",
                 pt_ij * ctx.phi_tilde3(i, j, k),
                 u(1) * ctx.psi_two_hat(i, j, i, j, k) + u(i) * pt_ik * c1(j) * c1(j) +
                     u(j) * pt_jk * c1(i) * c1(i));
    // (4): the printed right side omits u_1 u_k c_{ij}^2 (every instance
    // leaves exactly that residue against the printed Table 11 expansions)
    rc.printed_variant("L2.1-4" + suf + "/printed", "Lemma 2.1 (4) as printed",
                       u(i) * ctx.psi_one_hat(j, i, j, k) + u(j) * ctx.psi_one_hat(i, i, j, k),
                       pt_ij * om, "printed form omits u1*u_k*c_{ij}^2");
    rc.identical("L2.1-4" + suf + "/corrected", "Lemma 2.1 (4) with the u1-term restored",
                 u(i) * ctx.psi_one_hat(j, i, j, k) + u(j) * ctx.psi_one_hat(i, i, j, k),
                 pt_ij * om + u(1) * u(k) * c_pair(i, j) * c_pair(i, j));
    // (5): printed form vs Frobenius-squared form
    rc.printed_variant("L2.1-5" + suf + "/printed", "Lemma 2.1 (5) as printed",
                       pt_ij * pt_ij,
                       u(1) * u(1) * c_pair(i, j) * c_pair(i, j) + u(i) * c1(j) * c1(j) +
                           u(j) * c1(i) * c1(i),
                       "printed form carries unsquared u_i, u_j");
    rc.identical("L2.1-5" + suf + "/squared", "Lemma 2.1 (5), Frobenius form",
                 pt_ij * pt_ij,
                 u(1) * u(1) * c_pair(i, j) * c_pair(i, j) +
                     u(i) * u(i) * c1(j) * c1(j) + u(j) * u(j) * c1(i) * c1(i));
    // (6)
    rc.identical("L2.1-6" + suf, "Lemma 2.1 (6)",
                 u(i) * ctx.psi_two_hat(i, j, i, j, k) + pt_ij * ctx.psi_one_hat(i, i, j, k),
                 u(1) * pt_ik * c_pair(i, j) * c_pair(i, j) + u(j) * om * c1(i) * c1(i));
    // (7)
    rc.identical("L2.1-7" + suf, "Lemma 2.1 (7)",
                 u(i) * ctx.psi_two_hat(j, k, i, j, k) + pt_ij * ctx.psi_one_hat(k, i, j, k) +
                     pt_ik * ctx.psi_one_hat(j, i, j, k),
                 ctx.phi_tilde3(i, j, k) * om);
    // (8)
    rc.identical("L2.1-8" + suf, "Lemma 2.1 (8)", om * om,
                 u(i) * u(i) * c_pair(j, k) * c_pair(j, k) +
                     u(j) * u(j) * c_pair(i, k) * c_pair(i, k) +
                     u(k) * u(k) * c_pair(i, j) * c_pair(i, j));
    // (9)
    rc.identical("L2.1-9" + suf, "Lemma 2.1 (9)",
                 ctx.phi_tilde3(i, j, k) * ctx.phi_tilde3(i, j, k),
                 u(1) * u(1) * c_triple_sq(i, j, k) +
                     u(i) * u(i) * c1(j) * c1(j) * c1(k) * c1(k) +
                     u(j) * u(j) * c1(i) * c1(i) * c1(k) * c1(k) +
                     u(k) * u(k) * c1(i) * c1(i) * c1(j) * c1(j));
  }
  // (10) over 4-subsets of the u generators
  {
    unsigned js[5] = {1, 2, 3, 4, 5};
    for (unsigned skip = 0; skip < 5; ++skip) {
      std::vector<Poly> xs;
      for (unsigned idx = 0; idx < 5; ++idx)
        if (idx != skip) xs.push_back(u(js[idx]));
      Poly lhs = xs[0] * ctx.massey_F(xs[1], xs[2], xs[3]) +
                 xs[1] * ctx.massey_F(xs[0], xs[2], xs[3]) +
                 xs[2] * ctx.massey_F(xs[0], xs[1], xs[3]) +
                 xs[3] * ctx.massey_F(xs[0], xs[1], xs[2]);
      rc.identical("L2.1-10/skip-u" + std::to_string(js[skip]), "Lemma 2.1 (10)", lhs,
                   Poly::zero());
    }
  }

  // ----- Lemma 2.3.2: bilinearity of A -------------------------------------
  {
    // theta must be an E2 element (a d1-cycle), or theta*c is no witness
    std::vector<std::pair<std::string, Poly>> thetas = {
        {"c6", Poly::gen(GenId::c(6))},
        {"c10", Poly::gen(GenId::c(10))},
        {"c2^2", Poly::gen(GenId::c(2), 2)},
        {"c4^2*c6", Poly::gen(GenId::c(4), 2) * Poly::gen(GenId::c(6))}};
    for (auto& [tname, theta] : thetas) {
      Poly xi = u(2), zeta = u(3);
      Poly a = ctx.massey_A(xi, zeta);
      Poly scaled_xi = theta * xi;
      ctx.register_witness(scaled_xi, zeta, theta * ctx.c_witness(xi, zeta));
      Poly a_scaled = ctx.massey_A(scaled_xi, zeta);
      rc.identical("L2.3.2-scale/" + tname, "Lemma 2.3.2 (i)", theta * a, a_scaled);
    }
    // additivity: A_{xi, zeta+eta} = A_{xi,zeta} + A_{xi,eta}
    Poly xi = u(1), zeta = u(2), eta = u(3);
    Poly sum = zeta + eta;
    ctx.register_witness(xi, sum, ctx.c_witness(xi, zeta) + ctx.c_witness(xi, eta));
    rc.identical("L2.3.2-add", "Lemma 2.3.2 (ii)",
                 ctx.massey_A(xi, zeta) + ctx.massey_A(xi, eta), ctx.massey_A(xi, sum));
  }

  // ----- Lemma 2.4.1 -------------------------------------------------------
  {
    const char* locus = "Lemma 2.4.1";
    // admissible triples: generator triples plus composite arguments
    std::vector<std::tuple<std::string, Poly, Poly, Poly>> triples;
    for (auto [a, b, cdx] : std::vector<std::array<unsigned, 3>>{
             {1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 5}, {2, 3, 5}}) {
      triples.push_back({"/u" + std::to_string(a) + "u" + std::to_string(b) + "u" +
                             std::to_string(cdx),
                         u(a), u(b), u(cdx)});
    }
    triples.push_back({"/u1-phi3-u4", u(1), ctx.phi_tilde(2, 3), u(4)});
    triples.push_back({"/u2-phit5-u3", u(2), ctx.phi_tilde(2, 4), u(3)});
    for (auto& [suf, xi, eta, zeta] : triples) {
      // (1) xi A_{xi,eta} = eta A_{xi,xi}: an E2 equality; its printed proof
      // boundary d1(h_xi c_{xi,eta}) must match exactly
      {
        Poly diff = xi * ctx.massey_A(xi, eta) + eta * ctx.massey_A(xi, xi);
        Poly wit = d1(ctx.h_witness(xi) * ctx.c_witness(xi, eta), reg);
        bool exact = diff == wit;
        res.items.push_back(item("L2.4.1-1" + suf + "/witness-identity", locus,
                                 exact ? "pass" : "fail",
                                 exact ? "difference equals d1(h_xi c_{xi,eta})"
                                       : "difference " + render_poly(diff)));
        CheckResult cb = check_relation(xi * ctx.massey_A(xi, eta), eta * ctx.massey_A(xi, xi),
                                        CheckMode::up_to_boundary, reg);
        res.items.push_back(
            item("L2.4.1-1" + suf + "/e2", locus, cb.ok ? "pass" : "fail", cb.witness));
      }
      // (2) xi A_{zeta,eta} = zeta A_{xi,eta} = eta A_{xi,zeta}
      {
        Poly d12 = xi * ctx.massey_A(zeta, eta) + zeta * ctx.massey_A(xi, eta);
        Poly w12 = d1(ctx.h_witness(xi) * ctx.c_witness(zeta, eta) +
                          ctx.h_witness(zeta) * ctx.c_witness(xi, eta),
                      reg);
        bool ok12 = d12 == w12;
        res.items.push_back(item("L2.4.1-2" + suf + "/witness-identity", locus,
                                 ok12 ? "pass" : "fail",
                                 ok12 ? "difference equals the printed boundary"
                                      : "difference " + render_poly(d12)));
        CheckResult cb = check_relation(zeta * ctx.massey_A(xi, eta),
                                        eta * ctx.massey_A(xi, zeta),
                                        CheckMode::up_to_boundary, reg);
        res.items.push_back(
            item("L2.4.1-2" + suf + "/e2", locus, cb.ok ? "pass" : "fail", cb.witness));
      }
      // (3) A^2 = h0 c^2 + h^2 h^2 printed; Frobenius gives h0^2 c^2
      {
        Poly A = ctx.massey_A(xi, eta);
        Poly cxe = ctx.c_witness(xi, eta);
        Poly h0p = Poly::gen(GenId::h0());
        rc.printed_variant("L2.4.1-3" + suf + "/printed", "Lemma 2.4.1 (3) as printed", A * A,
                           h0p * cxe * cxe +
                               ctx.h_witness(xi) * ctx.h_witness(xi) * ctx.h_witness(eta) *
                                   ctx.h_witness(eta),
                           "printed form carries h0 unsquared");
        rc.identical("L2.4.1-3" + suf + "/squared", "Lemma 2.4.1 (3), Frobenius form", A * A,
                     h0p * h0p * cxe * cxe +
                         ctx.h_witness(xi) * ctx.h_witness(xi) * ctx.h_witness(eta) *
                             ctx.h_witness(eta));
      }
      // (4) A_{xi,eta} A_{xi,zeta} = h_xi^2 A_{eta,zeta} + h0 A_{xi, F_{xi,eta,zeta}}
      {
        Poly F = ctx.massey_F(xi, eta, zeta);
        Poly lhs = ctx.massey_A(xi, eta) * ctx.massey_A(xi, zeta);
        Poly rhs = ctx.h_witness(xi) * ctx.h_witness(xi) * ctx.massey_A(eta, zeta) +
                   Poly::gen(GenId::h0()) * ctx.massey_A(xi, F);
        rc.identical("L2.4.1-4" + suf, locus, lhs, rhs);
      }
    }
  }

  // ----- Lemma 2.6.1 -------------------------------------------------------
  {
    const char* locus = "Lemma 2.6.1";
    Poly kappa = kappa_element(ctx);
    Poly h0p = Poly::gen(GenId::h0());
    auto C = [&](unsigned n) { return Poly::gen(GenId::c(n)); };
    res.items.push_back(item("L2.6.1/kappa-tridegree", locus,
                             kappa.homogeneous_degree() &&
                                     *kappa.homogeneous_degree() == TriDegree{1, 1, 104}
                                 ? "pass"
                                 : "fail",
                             "computed " + (kappa.homogeneous_degree()
                                                ? kappa.homogeneous_degree()->str()
                                                : std::string("inhomogeneous"))));
    res.items.push_back(item("L2.6.1/kappa-cycle", locus,
                             is_cycle(kappa, reg) ? "pass" : "fail"));
    res.items.push_back(item("L2.6.1/kappa-not-boundary", locus,
                             !is_boundary(kappa, reg) ? "pass" : "fail"));
    // printed decomposition
    auto alpha = [&](unsigned i, unsigned j) {
      return u(i) * Poly::gen(GenId::h(j)) + u(j) * Poly::gen(GenId::h(i));
    };
    Poly printed = (alpha(1, 2) * C(11) + alpha(1, 3) * C(9) + alpha(1, 4) * C(5)) * C(13) +
                   (alpha(2, 3) * C(2) * C(8) + alpha(2, 4) * C(2) * C(4)) * C(11) +
                   (alpha(2, 3) * C(4) * C(8) + alpha(3, 4) * C(2) * C(4)) * C(9) +
                   (alpha(2, 4) * C(4) * C(8) + alpha(3, 4) * C(2) * C(8)) * C(5);
    rc.identical("L2.6.1/kappa-decomposition", locus, kappa, printed);

    Poly A = (C(2) * C(11) + C(4) * C(9) + C(5) * C(8)) * C(13);
    Poly leftovers = alpha(3, 4) * C(11) * C(2) * C(2) + alpha(2, 4) * C(9) * C(4) * C(4) +
                     alpha(2, 3) * C(5) * C(8) * C(8);
    Poly residue = d1(C(13), reg) * C(13);
    rc.printed_variant("L2.6.1-i/display/printed", "Lemma 2.6.1 (i) proof display as printed",
                       d1(A, reg), kappa + leftovers,
                       "printed display omits d1(c13)*c13 = " + render_poly(residue));
    rc.identical("L2.6.1-i/display/corrected", "Lemma 2.6.1 (i) proof display, corrected",
                 d1(A, reg), kappa + leftovers + residue);
    rc.identical("L2.6.1/d1c11", locus, d1(C(11), reg), alpha(3, 4));
    rc.identical("L2.6.1/d1c9", locus, d1(C(9), reg), alpha(2, 4));
    rc.identical("L2.6.1/d1c5", locus, d1(C(5), reg), alpha(2, 3));

    // (ii): two-term boundary displays against the bracket representatives
    auto bracket_rep = [&](const Poly& xi, const Poly& eta) {
      return ctx.h_witness(xi) * eta + xi * ctx.h_witness(eta);
    };
    Poly psi7 = ctx.psi_two_hat(3, 4, 2, 3, 4);
    Poly psi5 = ctx.psi_two_hat(2, 4, 2, 3, 4);
    Poly psi3 = ctx.psi_two_hat(2, 3, 2, 3, 4);
    Poly psi1 = ctx.psi_one_hat(2, 2, 3, 4);
    Poly psi2 = ctx.psi_one_hat(3, 2, 3, 4);
    Poly psi4 = ctx.psi_one_hat(4, 2, 3, 4);
    rc.identical("L2.6.1-ii/display-u2psi7", "Lemma 2.6.1 (ii)",
                 d1((C(5) * C(8) + C(4) * C(9)) * C(13), reg),
                 kappa + bracket_rep(u(2), psi7));
    rc.identical("L2.6.1-ii/display-u3psi5", "Lemma 2.6.1 (ii)",
                 d1((C(5) * C(8) + C(2) * C(11)) * C(13), reg),
                 kappa + bracket_rep(u(3), psi5));
    rc.identical("L2.6.1-ii/display-u4psi3", "Lemma 2.6.1 (ii)",
                 d1((C(4) * C(9) + C(2) * C(11)) * C(13), reg),
                 kappa + bracket_rep(u(4), psi3));
    // the bracket equalities hold with zero indeterminacy; our canonical
    // representatives realize them up to the boundary of a c-monomial
    // (strict equality needs the derivation's own h-witness choices)
    rc.boundary("L2.6.1-ii/phit6psi1", "Lemma 2.6.1 (ii)",
                bracket_rep(ctx.phi_tilde(3, 4), psi1), bracket_rep(u(2), psi7));
    rc.boundary("L2.6.1-ii/phit5psi2", "Lemma 2.6.1 (ii)",
                bracket_rep(ctx.phi_tilde(2, 4), psi2), bracket_rep(u(3), psi5));
    rc.boundary("L2.6.1-ii/u4psi3-phi3psi4", "Lemma 2.6.1 (ii)",
                bracket_rep(u(4), psi3), bracket_rep(ctx.phi_tilde(2, 3), psi4));

    // (iii): the printed 12-term preimage of h0 kappa
    auto H = [&](unsigned i) { return Poly::gen(GenId::h(i)); };
    Poly pre = H(1) * H(2) * C(11) * C(13) + H(2) * H(3) * C(2) * C(8) * C(11) +
               H(2) * H(4) * C(2) * C(4) * C(11) + H(1) * H(3) * C(9) * C(13) +
               H(2) * H(3) * C(4) * C(8) * C(9) + H(3) * H(4) * C(2) * C(4) * C(9) +
               H(1) * H(4) * C(5) * C(13) + H(2) * H(4) * C(4) * C(5) * C(8) +
               H(3) * H(4) * C(2) * C(5) * C(8) + H(2) * H(2) * C(4) * C(8) * C(11) +
               H(3) * H(3) * C(2) * C(8) * C(9) + H(4) * H(4) * C(2) * C(4) * C(5);
    rc.identical("L2.6.1-iii/preimage", "Lemma 2.6.1 (iii)", d1(pre, reg), h0p * kappa);
    // h0 kappa is a boundary, witnessed by the printed preimage
    res.items.push_back(item("L2.6.1-iii/h0kappa-boundary", locus,
                             d1(pre, reg) == h0p * kappa ? "pass" : "fail",
                             "witness: the printed 12-term preimage"));
  }

  // ----- forbidden pairs ---------------------------------------------------
  {
    struct FP {
      const char* name;
      Poly xi, zeta;
    };
    std::vector<FP> pairs;
    pairs.push_back({"phit7-omega1", ctx.phi_tilde3(2, 3, 4), ctx.omega_elem(2, 3, 4)});
    pairs.push_back({"phit6-psi1", ctx.phi_tilde(3, 4), ctx.psi_one_hat(2, 2, 3, 4)});
    pairs.push_back({"phit5-psi2", ctx.phi_tilde(2, 4), ctx.psi_one_hat(3, 2, 3, 4)});
    pairs.push_back({"u4-psi3", u(4), ctx.psi_two_hat(2, 3, 2, 3, 4)});
    pairs.push_back({"phi3-psi4", ctx.phi_tilde(2, 3), ctx.psi_one_hat(4, 2, 3, 4)});
    pairs.push_back({"u3-psi5", u(3), ctx.psi_two_hat(2, 4, 2, 3, 4)});
    pairs.push_back({"u2-psi7", u(2), ctx.psi_two_hat(3, 4, 2, 3, 4)});
    for (auto& fp : pairs) {
      bool forbidden = false;
      std::string note;
      try {
        ctx.massey_A(fp.xi, fp.zeta);
        note = "bracket witness unexpectedly exists";
      } catch (const ForbiddenPair&) {
        forbidden = true;
      }
      res.items.push_back(item(std::string("forbidden/") + fp.name,
                               "Sec 2.4 forbidden pairs", forbidden ? "pass" : "fail", note));
    }
  }

  // ----- Table 14 ----------------------------------------------------------
  {
    const char* locus = "Table 14";
    auto& sym = rc.sym;
    auto E = [&](const std::string& s) { return parse_expr(s, sym); };
    // families
    for (unsigned i = 1; i <= 4; ++i)
      for (unsigned j = i + 1; j <= 4; ++j) {
        rc.boundary("T14/h2u2/" + std::to_string(i) + std::to_string(j), locus,
                    Poly::gen(GenId::h(i), 2) * Poly::gen(GenId::u(j), 2),
                    Poly::gen(GenId::h(j), 2) * Poly::gen(GenId::u(i), 2));
      }
    for (const char* name : {"u1", "u2", "u3", "u4", "phi3", "phit5", "phit6", "phit7",
                             "omega1"}) {
      rc.boundary(std::string("T14/h0x/") + name, locus,
                  Poly::gen(GenId::h0()) * sym.at(name), Poly::zero());
    }
    auto A2 = [&](unsigned i, unsigned k) {
      unsigned subs[2] = {std::min(i, k), std::max(i, k)};
      return Poly::gen(GenId::h0()) * Poly::gen(GenId::c(alias_to_index(subs))) +
             Poly::gen(GenId::h(i)) * Poly::gen(GenId::h(k));
    };
    for (unsigned i = 1; i <= 4; ++i)
      for (unsigned k = 1; k <= 4; ++k) {
        if (i == k) continue;
        rc.boundary("T14/uiA/" + std::to_string(i) + std::to_string(k), locus,
                    u(i) * A2(i, k), u(k) * Poly::gen(GenId::h(i), 2));
      }
    for (unsigned i = 1; i <= 4; ++i)
      for (unsigned j = i + 1; j <= 4; ++j)
        for (unsigned k = j + 1; k <= 4; ++k) {
          std::string suf = std::to_string(i) + std::to_string(j) + std::to_string(k);
          rc.boundary("T14/uABC1/" + suf, locus, u(i) * A2(j, k), u(j) * A2(i, k));
          rc.boundary("T14/uABC2/" + suf, locus, u(j) * A2(i, k), u(k) * A2(i, j));
        }
    for (unsigned i = 1; i <= 3; ++i)
      for (unsigned j = 1; j <= 3; ++j) {
        if (i == j) continue;
        unsigned subs[2] = {std::min(i, j), std::max(i, j)};
        unsigned kk = alias_to_index(subs);
        // h0^2 e_{2k} = a_k^2 + h_i^2 h_j^2 with e_{2k} = c_k^2
        rc.identical("T14/h0e/" + std::to_string(i) + std::to_string(j), locus,
                     Poly::gen(GenId::h0(), 2) * Poly::gen(GenId::c(kk), 2),
                     A2(i, j) * A2(i, j) +
                         Poly::gen(GenId::h(i), 2) * Poly::gen(GenId::h(j), 2));
      }
    // h0 * b-pattern = A_{ij} A_{sj} + h_j^2 A_{si}  (the printed row's
    // right side is reconstructed; the extraction is garbled there)
    {
      struct BJ {
        unsigned i, j, s;
        const char* name;
      };
      for (BJ b : {BJ{2, 1, 3, "b6"}, BJ{1, 2, 3, "b7"}, BJ{1, 3, 2, "b9"}}) {
        Poly lhs = Poly::gen(GenId::h0()) * sym.at(b.name);
        Poly rhs = A2(b.i, b.j) * A2(b.s, b.j) + Poly::gen(GenId::h(b.j), 2) * A2(b.s, b.i);
        rc.identical(std::string("T14/h0b/") + b.name, locus, lhs, rhs);
      }
    }
    // explicit rows
    struct Row {
      const char* id;
      const char* lhs;
      const char* rhs;
    };
    std::vector<Row> rows = {
        {"a13b13", "h0*(a13+b13)", "a2*a11 + a4*a9"},
        {"u1b6", "u1*b6", "phi3*a1"},
        {"a13f13", "h0*(a13+f13)", "a5*a8 + a4*a9"},
        {"u1b7", "u1*b7", "phi3*a2"},
        {"u1b7-u2b6", "phi3*a2", "u2*b6"},
        {"b6sq-1", "b6^2", "a2^2*e8 + a1*a7*e4 + a1^2*e10"},
        {"b6sq-2", "b6^2", "a4^2*e4 + a1*a3*e8 + a1^2*e10"},
        {"u2b7", "u2*b7", "phi3*a3"},
        {"u1b9", "u1*b9", "phi3*a4"},
        {"u1b9-u3b6", "phi3*a4", "u3*b6"},
        {"h0e4a7", "h0*(e4*a7 + e8*a3)", "a2*b9 + a4*b7"},
        {"u1b10", "u1*b10", "phi5*a1 + u3*c6*a1"},
        {"h0e8a3", "h0*(e8*a3 + a1*e10)", "a4*b7 + a5*b6"},
        {"u2b9", "u2*b9", "phi3*a5"},
        {"u2b9-u3b7", "phi3*a5", "u3*b7"},
        {"u1omega1", "u1*omega1", "u2*(phi6 + u2*c10 + u3*c2^4) + u3*(phi5 + u3*c6) + u4*phi3"},
        {"u1b11", "u1*b11", "u2*b10"},
        {"u1b11-2", "u2*b10", "phi5*a2 + u3*c6*a2"},
        {"u2b11", "u2*b11", "phi5*a3 + u3*c6*a3"},
        {"u1aee", "u1*(a1*e10 + a3*e8 + a7*e4)", "b6*phi3"},
        {"u3b9", "u3*b9", "phi3*a7"},
        {"u2aee", "u2*(a1*e10 + a3*e8 + a7*e4)", "b7*phi3"},
        {"u1b12", "u1*b12", "phi6*a1 + u2*c10*a1 + u3*c2^4*a1"},
        {"omega1a1", "omega1*a1", "u2*b12 + u3*b10 + u4*b6"},
    };
    for (auto& row : rows) {
      try {
        rc.boundary(std::string("T14/") + row.id, locus, E(row.lhs), E(row.rhs));
      } catch (const std::exception& e) {
        res.items.push_back(
            item(std::string("T14/") + row.id, locus, "insufficient", e.what()));
      }
    }
  }

  return res;
}

// ---------------------------------------------------------------------------
// projections: Cartan closure of Table 10 against Sec 2.2
// ---------------------------------------------------------------------------

SuiteResult suite_projections(const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "projections";
  res.started = now_iso();
  Registry reg = opt.registry();
  auto dir = data_dir(opt.data.string());

  ActionDb db;
  db.load_actions(dir / "table10.dat", "table10");
  db.load_actions(dir / "uactions.dat", "uactions");
  if (std::filesystem::exists(dir / "supplement.dat"))
    db.load_actions(dir / "supplement.dat", "supplement");
  db.load_projections(dir / "projections.dat");

  auto proj_item = [](const std::string& id, const std::string& locus, int m,
                      const OpIndex& omega, const ProjVerdict& v) {
    SuiteItem it;
    it.id = id;
    it.locus = locus;
    switch (v.kind) {
      case ProjVerdict::pass_identical:
        it.verdict = "pass";
        it.witness = "identical";
        break;
      case ProjVerdict::pass_boundary:
        it.verdict = "pass";
        it.witness = "up to boundary: " + v.detail;
        break;
      case ProjVerdict::fail:
        it.verdict = "fail";
        it.witness = v.detail;
        break;
      case ProjVerdict::insufficient:
        it.verdict = "insufficient";
        it.witness = v.detail;
        break;
      case ProjVerdict::inexpressible:
        it.verdict = "not-applicable";
        it.witness = v.detail;
        break;
    }
    it.extra = {{"m", std::to_string(m)},
                {"omega", omega.str()},
                {"mode", v.mode},
                {"diff", v.diff}};
    return it;
  };

  auto claims = load_claims(dir / "claims.dat");
  for (auto& claim : claims) {
    std::string id = "claim/S_{" + claim.omega.str() + "}phi" + std::to_string(claim.m);
    ProjVerdict v = verify_projection(claim.m, claim.omega, db, reg);
    res.items.push_back(proj_item(id, "Sec 2.2 derivation step", claim.m, claim.omega, v));
  }

  // projection expansions are d1-cycles
  for (auto& [m, p] : db.projections()) {
    bool ok = is_cycle(p, reg);
    res.items.push_back(item("cycle/phi" + std::to_string(m), "Sec 2.2 final forms",
                             ok ? "pass" : "fail",
                             ok ? "" : "d1 = " + render_poly(d1(p, reg))));
  }

  // extended sweep: every loaded operation index against every stored
  // projection whose expected value is expressible; table gaps are
  // itemized as insufficient, never zeroed
  {
    std::set<std::pair<int, std::vector<uint32_t>>> claimed;
    for (auto& c : claims) claimed.insert({c.m, c.omega.parts()});
    for (auto& [m, p] : db.projections()) {
      for (const OpIndex& omega : db.omegas()) {
        if (4 * omega.weight() >= uint64_t(8 * m - 2)) continue;
        if (claimed.count({m, omega.parts()})) continue;
        PhiVector expected_vec = s_on_phi(omega, unsigned(m));
        if (!db.project(expected_vec)) continue;  // expected side undefined
        ProjVerdict v = verify_projection(m, omega, db, reg);
        std::string id = "sweep/S_{" + omega.str() + "}phi" + std::to_string(m);
        res.items.push_back(proj_item(id, "extended closure sweep", m, omega, v));
      }
    }
  }

  // records where the printed table and the derivations disagree: report
  // which variant closes the affected step under each value
  {
    struct Variant {
      const char* omega;
      unsigned target;
      const char* printed;  // value as printed
      int m;                // projection whose step separates the variants
      const char* step;
      const char* note;
    };
    const std::vector<Variant> variants = {
        {"6,6", 21, "0", 11, "6,6", "derivation value c2^2*c5"},
        {"2,2", 23,
         "c2*c4*c13 + c2*c4*c5*c8 + c2*c5*c12 + c4*c5*c10 + c4*c5^3 + c2^2*c4*c5*c6 + c5*c6*c8",
         12, "2,2", "sweep-forced extra term c6*c13"},
        {"2,2", 24,
         "c6*c14 + c4^2*c12 + c2^6*c4^2 + c5^2*c10 + c2^4*c12",
         13, "2,2", "sweep-forced c2^4*c6^2 + c2^10 (sub/superscript swap in the bracket)"},
        {"2,2", 27,
         "c2*c5*c16 + c2*c8*c13 + c6*c17 + c4*c6*c13 + c4*c5*c6*c8 + c2*c4^2*c13 + c10*c13 + "
         "c5^2*c13 + c2^2*c6*c13 + c2^2*c4^2*c11 + c2^6*c11 + c2*c4*c5*c12 + c5*c6*c12 + "
         "c9*c14 + c2^2*c9*c10 + c2^2*c4*c5*c10 + c4^3*c5*c6 + c2^4*c4*c5*c6",
         14, "2,2", "sweep-forced extra terms c2^5*c5*c8 + c4*c5*c14"},
    };
    for (auto& v : variants) {
      OpIndex omega = OpIndex::parse(v.omega);
      OpIndex step = OpIndex::parse(v.step);
      ProjVerdict shipped = verify_projection(v.m, step, db, reg);
      ActionDb printed = db;
      printed.override_record(omega, GenId::c(v.target), parse_poly(v.printed),
                              "printed-variant");
      ProjVerdict variant = verify_projection(v.m, step, printed, reg);
      bool shipped_ok = shipped.kind == ProjVerdict::pass_identical ||
                        shipped.kind == ProjVerdict::pass_boundary;
      bool variant_ok = variant.kind == ProjVerdict::pass_identical ||
                        variant.kind == ProjVerdict::pass_boundary;
      res.items.push_back(item(
          "variant/S_{" + omega.str() + "}c" + std::to_string(v.target),
          "Table 10 vs the recorded derivations",
          shipped_ok ? "pass" : "fail",
          std::string(v.note) + (shipped_ok ? " closes" : " does not close") +
              " the S_{" + step.str() + "} step on phi" + std::to_string(v.m) +
              "; printed value " + (variant_ok ? "also closes it" : "does not close it") +
              (variant_ok ? "" : " (" + variant.detail + ")")));
    }
  }

  return res;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  if (name == "corollaries") r = suite_corollaries(opt);
  else if (name == "table9") r = suite_table9(opt);
  else if (name == "mass") r = suite_mass(opt);
  else if (name == "relations") r = suite_relations(opt);
  else if (name == "projections") r = suite_projections(opt);
  else throw std::invalid_argument("unknown suite: " + name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"corollaries", "table9", "mass", "relations",
                                              "projections"};
  return names;
}

}  // namespace msp
