#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "msp/mass.hpp"

namespace msp {

struct ForbiddenPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carrier for the canonical bracket witnesses: h_xi with d1(h_xi) = h0 xi,
// and c_{xi,eta} with d1(c_{xi,eta}) = xi h_eta + eta h_xi. Witnesses are
// resolved from registered rules first, then by a deterministic
// lexicographically-least linear solve; a pair with no solution is
// forbidden (the bracket <xi,h0,eta> misses zero).
class MasseyContext {
 public:
  explicit MasseyContext(Registry reg = {}) : reg_(std::move(reg)) {}

  const Registry& registry() const { return reg_; }

  // u_i -> h_i on the unique u-factor of every monomial; validates the
  // defining property d1(h_xi) = h0 xi.
  Poly h_witness(const Poly& xi) const;

  Poly c_witness(const Poly& xi, const Poly& eta);
  // Install an externally chosen witness (validated).
  void register_witness(const Poly& xi, const Poly& eta, const Poly& c);
  bool has_witness(const Poly& xi, const Poly& eta) const;

  // <xi, h0, eta, h0>  =  h0 c_{xi,eta} + h_xi h_eta   (h_xi^2 when xi = eta)
  Poly massey_A(const Poly& xi, const Poly& eta);
  // <xi, h0, (eta,zeta), (zeta,eta)^T>  =  xi c_{eta,zeta} + zeta c_{xi,eta} + eta c_{xi,zeta}
  Poly massey_F(const Poly& xi, const Poly& zeta, const Poly& eta);

  // Canonical elements. Builders register the witnesses their
  // decompositions embody.
  Poly u_elem(unsigned j) const { return Poly::gen(GenId::u(j)); }
  Poly phi_tilde(unsigned i, unsigned j);                  // F_{u1,u_i,u_j}
  Poly phi_tilde3(unsigned i, unsigned j, unsigned k);     // tilde projection, 3 digits
  Poly omega_elem(unsigned i, unsigned j, unsigned k);     // F_{u_i,u_j,u_k} pattern u_i c_{jk}+...
  Poly psi_one_hat(unsigned a, unsigned i, unsigned j, unsigned k);   // F_{u1,u_a,omega_ijk}
  Poly psi_two_hat(unsigned a, unsigned b, unsigned i, unsigned j, unsigned k);  // F_{u1,phi~_{ab},omega_ijk}

 private:
  Registry reg_;
  std::map<std::pair<std::string, std::string>, Poly> witnesses_;

  static std::pair<std::string, std::string> key(const Poly& a, const Poly& b);
  bool try_register(const Poly& xi, const Poly& eta, const Poly& c);
};

// The distinguished class in E^{1,1,104}: the representative
// h_{phi~7} omega_1 + phi~7 h_{omega_1} of <phi~_7, h0, omega_1>.
Poly kappa_element(MasseyContext& ctx);

// c-generator for an alias pair {i,j} (i < j), e.g. {1,3} -> c4, {2,3} -> c5.
Poly c_pair(unsigned i, unsigned j);

}  // namespace msp
