#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "msp/binomial.hpp"

namespace msp {

// Monomial in b_1, b_2, ... (b_0 is the unit and never stored).
struct BMono {
  // (index, exponent) pairs, sorted by index, exponents positive
  std::vector<std::pair<uint32_t, uint32_t>> factors;

  static BMono one() { return {}; }
  static BMono b(uint32_t idx, uint32_t exp = 1);
  uint64_t weight() const;
  BMono operator*(const BMono& o) const;
  // Divide by b_idx; nullopt-like: returns false if not divisible.
  bool divide(uint32_t idx, BMono& out) const;
  auto operator<=>(const BMono&) const = default;
  std::string str() const;
};

// Integer-coefficient polynomial in the b_i, zero coefficients never stored.
class BPoly {
 public:
  BPoly() = default;
  static BPoly zero() { return {}; }
  static BPoly constant(BigInt c);
  static BPoly mono(BMono m, BigInt c = 1);

  const std::map<BMono, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(const BMono& m) const;

  void add(const BMono& m, const BigInt& c);
  BPoly operator+(const BPoly& o) const;
  BPoly operator*(const BPoly& o) const;
  BPoly operator-() const;
  bool operator==(const BPoly&) const = default;
  std::string str() const;

 private:
  std::map<BMono, BigInt> terms_;
};

// Weight-w component of B^k where B = 1 + b_1 + b_2 + ...
const BPoly& b_power_component(unsigned k, unsigned w);

// Weight-w component of the conjugation chi(B)^t, per the alternating
// chain sum over t < q_1 < ... < q_r < t+w:
//   chi(B)^t_w = sum (-1)^{r+1} B^{q_r}_{n-q_r} ... B^t_{q_1-t},  n = t+w.
// Evaluated by the equivalent recursion
//   chi(B)^t_w = -B^t_w - sum_{j=1}^{w-1} B^t_j * chi(B)^{t+j}_{w-j}.
const BPoly& chi_component(unsigned t, unsigned w);

// Exponent vector of a Landweber-Novikov operation over b-indices.
struct OpIndex {
  BMono mono;  // b_E

  static OpIndex identity() { return {}; }
  // "2,2,2" (repeated-part list) or explicit "b3^1*b2^4"
  static OpIndex parse(std::string_view text);
  static OpIndex repeated(uint32_t k, uint32_t times);
  uint64_t weight() const { return mono.weight(); }
  std::vector<uint32_t> parts() const;  // sorted ascending, with repetition
  std::string str() const;              // repeated-part list form
  auto operator<=>(const OpIndex&) const = default;
};

// The b-polynomial multiplying Phi_i (slot 1 <= i <= m) or theta_1
// (slot 0) in the expansion of h(Phi_m);
//   slot i: b_{2m-2i} + sum_{h=0}^{m-i-1} b_{2h} chi(B)^{2h+2i}_{2m-2h-2i}
//   slot 0: sum_{k=0}^{m-1} b_{2k} chi(B)^{2k+1}_{2m-2k-1}
BPoly kochman_slot(unsigned m, unsigned slot);
BigInt kochman_slot_coeff(unsigned m, unsigned slot, const BMono& E);

// Full truncated expansion: b-monomials of weight <= wmax mapped to the
// integer combination of {theta_1 (slot 0), Phi_1..Phi_m} they multiply.
std::map<BMono, std::map<unsigned, BigInt>> kochman_h(unsigned m, unsigned wmax);

// Value of S_E on Phi_m: the mod-2 reduction of the b_E coefficient.
PhiVector s_on_phi(const OpIndex& E, unsigned m);

}  // namespace msp
