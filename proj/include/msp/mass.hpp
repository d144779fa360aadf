#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msp/algebra.hpp"

namespace msp {

// Generator registry for the E1 term. Immutable after configuration.
struct Registry {
  unsigned max_h = 5;
  unsigned max_u = 5;
  unsigned max_c = 27;
  long t_bound = 108;

  bool contains(GenId g) const;
  std::vector<GenId> generators() const;
  void require(GenId g) const;  // throws std::out_of_range
};

// First differential on a generator:
//   h0, u_j, plain even c_n  -> 0
//   h_j -> h0 u_j
//   c with alias list (i_1..i_q), q >= 2 ->
//     sum_{s<t} (u_{i_s} h_{i_t} + u_{i_t} h_{i_s}) prod_{r != s,t} c_{1,i_r}
Poly d1_generator(GenId g, const Registry& reg);

// Additive, Leibniz extension (char 2: no signs, even powers die).
Poly d1(const Poly& p, const Registry& reg);

// All monomials of tridegree (q,s,t), deterministic descending order.
std::vector<Monomial> cell_basis(long q, long s, long t, const Registry& reg);

struct CellInfo {
  long q = 0, s = 0, t = 0;
  size_t dim_basis = 0;
  size_t dim_cycles = 0;
  size_t dim_boundaries = 0;
  size_t dim_homology = 0;
  std::vector<Poly> representatives;
  std::string line() const;  // "CELL q s t | basis | cycles | boundaries | H"
};

CellInfo homology(long q, long s, long t, const Registry& reg);

bool is_cycle(const Poly& p, const Registry& reg);
// Lexicographically least d1-preimage over the canonical monomial basis
// of the preceding cell, or nullopt when p is not a boundary.
std::optional<Poly> d1_preimage(const Poly& p, const Registry& reg);
bool is_boundary(const Poly& p, const Registry& reg);

enum class CheckMode { identical, up_to_boundary };

struct CheckResult {
  bool ok = false;
  std::string witness;
};

// identical: lhs + rhs = 0 in E1.  up_to_boundary: lhs + rhs in im(d1)
// (witness carries the preimage or the offending difference).
CheckResult check_relation(const Poly& lhs, const Poly& rhs, CheckMode mode,
                           const Registry& reg);

}  // namespace msp
