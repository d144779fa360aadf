#include "msp/mass.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "msp/gf2.hpp"

namespace msp {

bool Registry::contains(GenId g) const {
  switch (g.kind()) {
    case GenKind::H0: return true;
    case GenKind::H: return g.index() >= 1 && g.index() <= max_h;
    case GenKind::U: return g.index() >= 1 && g.index() <= max_u;
    case GenKind::C: return valid_c_index(g.index()) && g.index() <= max_c;
  }
  return false;
}

std::vector<GenId> Registry::generators() const {
  std::vector<GenId> out;
  out.push_back(GenId::h0());
  for (unsigned i = 1; i <= max_h; ++i) out.push_back(GenId::h(i));
  for (unsigned j = 1; j <= max_u; ++j) out.push_back(GenId::u(j));
  for (unsigned n = 2; n <= max_c; ++n)
    if (valid_c_index(n)) out.push_back(GenId::c(n));
  return out;
}

void Registry::require(GenId g) const {
  if (!contains(g))
    throw std::out_of_range("generator " + g.str() + " is not registered");
}

Poly d1_generator(GenId g, const Registry& reg) {
  reg.require(g);
  switch (g.kind()) {
    case GenKind::H0:
    case GenKind::U:
      return Poly::zero();
    case GenKind::H:
      return Poly::gen(GenId::h0()) * Poly::gen(GenId::u(g.index()));
    case GenKind::C: {
      std::vector<unsigned> subs = canonical_name(g.index());
      if (subs.empty()) return Poly::zero();  // plain even generator
      Poly out;
      size_t q = subs.size();
      for (size_t s = 0; s < q; ++s) {
        for (size_t t = s + 1; t < q; ++t) {
          Poly bracket = Poly::gen(GenId::u(subs[s])) * Poly::gen(GenId::h(subs[t])) +
                         Poly::gen(GenId::u(subs[t])) * Poly::gen(GenId::h(subs[s]));
          for (size_t r = 0; r < q; ++r) {
            if (r == s || r == t) continue;
            bracket *= Poly::gen(GenId::c(1u << (subs[r] - 1)));
          }
          out += bracket;
        }
      }
      return out;
    }
  }
  return Poly::zero();
}

Poly d1(const Poly& p, const Registry& reg) {
  std::map<GenId, Poly> dcache;
  Poly out;
  for (const Monomial& m : p.terms()) {
    for (auto& [g, e] : m.factors()) {
      if (e % 2 == 0) continue;  // even powers are d-cycles in char 2
      auto it = dcache.find(g);
      if (it == dcache.end()) it = dcache.emplace(g, d1_generator(g, reg)).first;
      if (it->second.is_zero()) continue;
      auto rest = m.divide(g, 1);
      out += it->second * Poly::mono(*rest);
    }
  }
  return out;
}

namespace {

void enum_c_partitions(const std::vector<unsigned>& cs, size_t idx, long budget,
                       Monomial current, std::vector<Monomial>& out) {
  if (budget == 0) {
    out.push_back(current);
    return;
  }
  if (idx >= cs.size()) return;
  long t = 4L * cs[idx];
  // skip this generator entirely, or take it with each feasible exponent
  enum_c_partitions(cs, idx + 1, budget, current, out);
  Monomial acc = current;
  for (long e = 1; e * t <= budget; ++e) {
    acc = acc * Monomial::gen(GenId::c(cs[idx]));
    enum_c_partitions(cs, idx + 1, budget - e * t, acc, out);
  }
}

}  // namespace

std::vector<Monomial> cell_basis(long q, long s, long t, const Registry& reg) {
  if (t > reg.t_bound)
    throw std::out_of_range("t = " + std::to_string(t) + " exceeds the configured bound " +
                            std::to_string(reg.t_bound));
  std::vector<Monomial> out;
  if (q < 0 || s < 0 || t < 0 || t % 2 != 0) return out;

  std::vector<unsigned> hs, us;
  for (unsigned i = 1; i <= reg.max_h; ++i) hs.push_back(i);
  for (unsigned j = 1; j <= reg.max_u; ++j) us.push_back(j);
  std::vector<unsigned> cs;
  for (unsigned n = 2; n <= reg.max_c; ++n)
    if (valid_c_index(n)) cs.push_back(n);

  // choose h-exponents (q-budget and t), then u-exponents (s and t),
  // then c-partitions of the remaining t, h0 fills the leftover q.
  struct HChoice {
    Monomial m;
    long q, t;
  };
  std::vector<HChoice> hchoices;
  {
    std::vector<HChoice> cur{{Monomial::one(), 0, 0}};
    for (unsigned i : hs) {
      long ti = 2 * ((1L << i) - 1);
      std::vector<HChoice> next;
      for (auto& ch : cur) {
        for (long e = 0; ch.q + e <= q && ch.t + e * ti <= t; ++e) {
          Monomial m = e ? ch.m * Monomial::gen(GenId::h(i), uint32_t(e)) : ch.m;
          next.push_back({m, ch.q + e, ch.t + e * ti});
        }
      }
      cur = std::move(next);
    }
    hchoices = std::move(cur);
  }

  for (auto& hc : hchoices) {
    long qrem = q - hc.q;
    if (qrem < 0 || qrem % 2 != 0) continue;
    Monomial base = hc.m;
    if (qrem > 0) base = base * Monomial::gen(GenId::h0(), uint32_t(qrem / 2));

    // u-exponents summing to s
    struct UChoice {
      Monomial m;
      long s, t;
    };
    std::vector<UChoice> ucur{{base, 0, hc.t}};
    for (unsigned j : us) {
      long tj = 2 * ((1L << j) - 1);
      std::vector<UChoice> next;
      for (auto& ch : ucur) {
        for (long e = 0; ch.s + e <= s && ch.t + e * tj <= t; ++e) {
          Monomial m = e ? ch.m * Monomial::gen(GenId::u(j), uint32_t(e)) : ch.m;
          next.push_back({m, ch.s + e, ch.t + e * tj});
        }
      }
      ucur = std::move(next);
    }
    for (auto& uc : ucur) {
      if (uc.s != s) continue;
      long trem = t - uc.t;
      if (trem < 0 || trem % 4 != 0) continue;
      enum_c_partitions(cs, 0, trem, uc.m, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
  return out;
}

namespace {

std::vector<gf2::Word> coords(const Poly& p, const std::map<Monomial, size_t>& index,
                              size_t dim) {
  std::vector<gf2::Word> v((dim + 63) / 64, 0);
  for (auto& m : p.terms()) {
    auto it = index.find(m);
    if (it == index.end())
      throw std::logic_error("monomial " + render_monomial(m) + " outside expected cell");
    v[it->second >> 6] ^= gf2::Word(1) << (it->second & 63);
  }
  return v;
}

}  // namespace

bool is_cycle(const Poly& p, const Registry& reg) { return d1(p, reg).is_zero(); }

std::optional<Poly> d1_preimage(const Poly& p, const Registry& reg) {
  if (p.is_zero()) return Poly::zero();
  auto deg = p.homogeneous_degree();
  if (!deg) throw std::invalid_argument("boundary test requires a homogeneous polynomial");
  if (deg->q < 1 || deg->s < 1) return std::nullopt;
  std::vector<Monomial> source = cell_basis(deg->q - 1, deg->s - 1, deg->t, reg);
  std::vector<Monomial> target = cell_basis(deg->q, deg->s, deg->t, reg);
  std::map<Monomial, size_t> tindex;
  for (size_t i = 0; i < target.size(); ++i) tindex.emplace(target[i], i);

  gf2::Solver solver(target.size());
  for (auto& m : source)
    solver.add_column(coords(d1(Poly::mono(m), reg), tindex, target.size()));
  auto sel = solver.solve_lexmin(coords(p, tindex, target.size()));
  if (!sel) return std::nullopt;
  std::vector<Monomial> terms;
  for (size_t i = 0; i < source.size(); ++i)
    if ((*sel)[i]) terms.push_back(source[i]);
  return poly_from_term_list(std::move(terms));
}

bool is_boundary(const Poly& p, const Registry& reg) {
  return d1_preimage(p, reg).has_value();
}

CellInfo homology(long q, long s, long t, const Registry& reg) {
  CellInfo info;
  info.q = q;
  info.s = s;
  info.t = t;
  std::vector<Monomial> basis = cell_basis(q, s, t, reg);
  info.dim_basis = basis.size();
  if (basis.empty()) return info;

  std::vector<Monomial> target = cell_basis(q + 1, s + 1, t, reg);
  std::map<Monomial, size_t> tindex;
  for (size_t i = 0; i < target.size(); ++i) tindex.emplace(target[i], i);

  // cycle space = kernel of d1 on this cell
  gf2::BitMatrix mout(target.size() ? target.size() : 1, basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    Poly img = d1(Poly::mono(basis[j]), reg);
    for (auto& m : img.terms()) mout.set(tindex.at(m), j);
  }
  // kernel via elimination on the transpose-free augmented method:
  // row-reduce mout; kernel dim = cols - rank.
  gf2::BitMatrix work = mout;
  size_t rank_out = gf2::eliminate(work);
  info.dim_cycles = basis.size() - rank_out;

  // boundaries from the preceding cell
  std::vector<std::vector<gf2::Word>> boundary_vecs;
  if (q >= 1 && s >= 1) {
    std::map<Monomial, size_t> bindex;
    for (size_t i = 0; i < basis.size(); ++i) bindex.emplace(basis[i], i);
    for (auto& m : cell_basis(q - 1, s - 1, t, reg)) {
      Poly img = d1(Poly::mono(m), reg);
      if (!img.is_zero()) boundary_vecs.push_back(coords(img, bindex, basis.size()));
    }
  }
  gf2::BitMatrix bnd(boundary_vecs.size() ? boundary_vecs.size() : 1, basis.size());
  for (size_t i = 0; i < boundary_vecs.size(); ++i)
    std::copy(boundary_vecs[i].begin(), boundary_vecs[i].end(), bnd.row(i));
  info.dim_boundaries = boundary_vecs.empty() ? 0 : gf2::eliminate(bnd);
  info.dim_homology = info.dim_cycles - info.dim_boundaries;

  // representatives: kernel basis of d1 on this cell (free columns of the
  // reduced out-matrix), each reduced against the boundary span.
  if (info.dim_homology > 0) {
    std::vector<size_t> pivot_cols;
    gf2::BitMatrix red = mout;
    size_t rank = gf2::eliminate(red, &pivot_cols);
    std::vector<bool> is_pivot(basis.size(), false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<Poly> cycles;
    for (size_t freec = 0; freec < basis.size(); ++freec) {
      if (is_pivot[freec]) continue;
      std::vector<Monomial> terms{basis[freec]};
      for (size_t r = 0; r < rank; ++r)
        if (red.get(r, freec)) terms.push_back(basis[pivot_cols[r]]);
      cycles.push_back(poly_from_term_list(std::move(terms)));
    }
    // reduce against boundaries inside the cell coordinate space
    std::map<Monomial, size_t> bindex;
    for (size_t i = 0; i < basis.size(); ++i) bindex.emplace(basis[i], i);
    gf2::Solver span(basis.size());
    for (auto& v : boundary_vecs) span.add_column(v);
    for (auto& cyc : cycles) {
      auto v = coords(cyc, bindex, basis.size());
      if (span.solve_lexmin(v)) continue;  // already a boundary combination
      span.add_column(v);
      info.representatives.push_back(cyc);
      if (info.representatives.size() == info.dim_homology) break;
    }
  }
  return info;
}

std::string CellInfo::line() const {
  return "CELL " + std::to_string(q) + " " + std::to_string(s) + " " + std::to_string(t) +
         " | " + std::to_string(dim_basis) + " | " + std::to_string(dim_cycles) + " | " +
         std::to_string(dim_boundaries) + " | " + std::to_string(dim_homology);
}

CheckResult check_relation(const Poly& lhs, const Poly& rhs, CheckMode mode,
                           const Registry& reg) {
  Poly diff = lhs + rhs;
  if (mode == CheckMode::identical) {
    if (diff.is_zero()) return {true, ""};
    return {false, "difference = " + render_poly(diff)};
  }
  if (diff.is_zero()) return {true, "identical"};
  if (!diff.is_homogeneous())
    throw std::invalid_argument("up-to-boundary check requires homogeneous difference");
  auto pre = d1_preimage(diff, reg);
  if (pre) return {true, "d1(" + render_poly(*pre) + ")"};
  return {false, "difference " + render_poly(diff) + " is not a boundary"};
}

}  // namespace msp
