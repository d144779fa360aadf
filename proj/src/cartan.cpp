#include "msp/cartan.hpp"

#include <algorithm>
#include <map>

namespace msp {

namespace {

struct ActionLookup {
  const ActionDb& db;
  const Registry& reg;
  std::vector<std::string>& missing;
  std::vector<std::string>& derived;
  std::map<std::pair<std::vector<uint32_t>, uint16_t>, Poly> cache;

  // value of S_{omega} on a single generator; sets ok=false on gaps
  Poly act(const OpIndex& omega, GenId g, bool& ok) {
    if (omega.weight() == 0) return Poly::gen(g);
    auto key = std::make_pair(omega.parts(), g.code());
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    Poly out;
    bool resolved = false;
    if (g.kind() == GenKind::U && g.index() == 1) {
      // theta_1 has dimension 1: no nonzero operation lowers it
      out = Poly::zero();
      resolved = true;
    } else if (g.kind() == GenKind::C || g.kind() == GenKind::U) {
      if (const ActionRecord* rec = db.find(omega, g)) {
        out = rec->value;
        resolved = true;
      } else {
        long t = gen_degree(g).t - 4 * long(omega.weight());
        long s = g.kind() == GenKind::U ? 1 : 0;
        bool empty = t < 0;
        if (!empty && t <= reg.t_bound) empty = cell_basis(0, s, t, reg).empty();
        if (empty) {
          out = Poly::zero();
          resolved = true;
          derived.push_back("S_{" + omega.str() + "} " + g.str() + " = 0 (empty target cell)");
        }
      }
    }
    if (!resolved) {
      missing.push_back("S_{" + omega.str() + "} " + g.str());
      ok = false;
      out = Poly::zero();
    }
    cache.emplace(key, out);
    return out;
  }
};

// ordered distribution of the exponent vector omega over the factor list
Poly distribute(ActionLookup& lk, const std::vector<GenId>& factors, size_t idx,
                std::vector<std::pair<uint32_t, uint32_t>>& remaining, bool& ok) {
  if (idx == factors.size()) {
    for (auto& [part, count] : remaining)
      if (count) return Poly::zero();  // leftover operation acting on nothing
    return Poly::one();
  }
  if (idx + 1 == factors.size()) {
    // last factor absorbs whatever remains
    OpIndex sub;
    for (auto& [part, count] : remaining)
      if (count) sub.mono = sub.mono * BMono::b(part, count);
    return lk.act(sub, factors[idx], ok);
  }
  // enumerate sub-multisets for this factor
  Poly total;
  size_t nparts = remaining.size();
  std::vector<uint32_t> take(nparts, 0);
  while (true) {
    OpIndex sub;
    for (size_t i = 0; i < nparts; ++i)
      if (take[i]) sub.mono = sub.mono * BMono::b(remaining[i].first, take[i]);
    Poly head = lk.act(sub, factors[idx], ok);
    if (!head.is_zero()) {
      for (size_t i = 0; i < nparts; ++i) remaining[i].second -= take[i];
      Poly tail = distribute(lk, factors, idx + 1, remaining, ok);
      for (size_t i = 0; i < nparts; ++i) remaining[i].second += take[i];
      total += head * tail;
    }
    // next sub-multiset (odometer)
    size_t i = 0;
    while (i < nparts) {
      if (take[i] < remaining[i].second) {
        ++take[i];
        break;
      }
      take[i] = 0;
      ++i;
    }
    if (i == nparts) break;
  }
  return total;
}

}  // namespace

CartanResult cartan_apply(const OpIndex& omega, const Poly& p, const ActionDb& db,
                          const Registry& reg) {
  CartanResult res;
  res.ok = true;
  ActionLookup lk{db, reg, res.missing, res.derived, {}};
  for (const Monomial& mono : p.terms()) {
    std::vector<GenId> factors;
    for (auto& [g, e] : mono.factors())
      for (uint32_t r = 0; r < e; ++r) factors.push_back(g);
    if (factors.empty()) {
      // S_omega(1) = 0 for nonzero omega
      if (omega.weight() == 0) res.value += Poly::one();
      continue;
    }
    std::vector<std::pair<uint32_t, uint32_t>> remaining;
    for (auto& [idx, exp] : omega.mono.factors) remaining.push_back({idx, exp});
    res.value += distribute(lk, factors, 0, remaining, res.ok);
  }
  std::sort(res.missing.begin(), res.missing.end());
  res.missing.erase(std::unique(res.missing.begin(), res.missing.end()), res.missing.end());
  std::sort(res.derived.begin(), res.derived.end());
  res.derived.erase(std::unique(res.derived.begin(), res.derived.end()), res.derived.end());
  return res;
}

ProjVerdict verify_projection(int m, const OpIndex& omega, const ActionDb& db,
                              const Registry& reg) {
  const Poly* phi = db.projection(m);
  if (!phi) return {ProjVerdict::insufficient, "projection phi" + std::to_string(m) + " not loaded", {}};

  PhiVector expected_vec = s_on_phi(omega, unsigned(m));
  auto expected = db.project(expected_vec);
  if (!expected)
    return {ProjVerdict::inexpressible,
            "expected value " + expected_vec.str() + " has no stored projection",
            {}, "", ""};

  CartanResult actual = cartan_apply(omega, *phi, db, reg);
  if (!actual.ok) {
    std::string detail = "missing records:";
    for (auto& s : actual.missing) detail += " " + s;
    return {ProjVerdict::insufficient, detail, actual.missing, "", ""};
  }
  if (actual.value == *expected)
    return {ProjVerdict::pass_identical, "", {}, "identical", "0"};
  Poly diff = actual.value + *expected;
  auto deg = diff.homogeneous_degree();
  if (deg && deg->t <= reg.t_bound) {
    if (auto pre = d1_preimage(diff, reg))
      return {ProjVerdict::pass_boundary, "difference = d1(" + render_poly(*pre) + ")",
              {}, "up-to-boundary", render_poly(diff)};
  }
  return {ProjVerdict::fail,
          "expected " + render_poly(*expected) + ", got " + render_poly(actual.value) +
              ", difference " + render_poly(diff),
          {}, "", render_poly(diff)};
}

}  // namespace msp
