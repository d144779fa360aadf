#pragma once

#include <string>
#include <vector>

#include "msp/mass.hpp"
#include "msp/tables.hpp"

namespace msp {

struct CartanResult {
  bool ok = false;
  Poly value;
  std::vector<std::string> missing;  // records the database lacks
  std::vector<std::string> derived;  // degree-forced zeros that were used
};

// Sum over all ordered splittings of omega across the factors of each
// monomial of p, of the product of per-factor action values.
//   S_() x = x;  S_omega(1) = 0 for omega != ();
//   a missing (omega', c_n) or (omega', u_j) record whose target cell is
//   provably empty evaluates to 0 (noted in `derived`), anything else
//   missing is reported, never silently zeroed.
CartanResult cartan_apply(const OpIndex& omega, const Poly& p, const ActionDb& db,
                          const Registry& reg);

struct ProjVerdict {
  enum Kind { pass_identical, pass_boundary, fail, insufficient, inexpressible } kind;
  std::string detail;
  std::vector<std::string> missing;
  std::string mode;  // "identical" | "up-to-boundary" | ""
  std::string diff;  // rendered difference when the step fails
};

// Closure check: applying omega to the stored projection of Phi_m must
// reproduce the projection of S_omega Phi_m as known from the Kochman
// expansion (identical in E1, with an up-to-boundary fallback).
ProjVerdict verify_projection(int m, const OpIndex& omega, const ActionDb& db,
                              const Registry& reg);

}  // namespace msp
