#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <string>
#include <variant>

namespace msp {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k); zero when k < 0, k > n, or n < 0.
BigInt binom_exact(long n, long k);
// C(n, k) mod 2 via the bitwise subset test.
int binom_mod2(unsigned long n, unsigned long k);
// 1 iff n odd and k even.
int mu(long n, long k);

struct CoeffQuery {
  long n = 0;  // Ray element index
  long m = 0;  // repetition count
  long k = 0;  // part size
};

struct NotApplicable {
  std::string reason;
};

using SumResult = std::variant<BigInt, NotApplicable>;

// The coefficient of b_k^m in the conjugation component chi(B)^{2n-km}_{km},
// as the exact alternating chain sum over m > i_r > ... > i_1 > 0.
// Defined when mk is even and mk < 2n-1.
SumResult alpha_bruteforce(const CoeffQuery& q);
// The companion sum over m > i_r > ... > i_2 > 1 when mk = 2n-1
// (for m = 1 the single surviving term is -1).
SumResult gamma_bruteforce(const CoeffQuery& q);

// Formal F2 combination of theta_1 (slot 0) and Phi_i (slot i >= 1).
class PhiVector {
 public:
  PhiVector() = default;
  static PhiVector zero() { return {}; }
  static PhiVector theta1() { return single(0); }
  static PhiVector phi(int i) { return single(i); }
  static PhiVector single(int slot) {
    PhiVector v;
    v.support_.insert(slot >= 0 ? slot : 0);
    return v;
  }
  void toggle(int slot) {
    if (slot < 0) slot = 0;  // Phi_0 is the projection slot of theta_1
    auto [it, inserted] = support_.insert(slot);
    if (!inserted) support_.erase(it);
  }
  const std::set<int>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  bool operator==(const PhiVector&) const = default;
  PhiVector operator+(const PhiVector& o) const {
    PhiVector v = *this;
    for (int s : o.support_) v.toggle(s);
    return v;
  }
  std::string str() const;

 private:
  std::set<int> support_;
};

// S_{k,...,k} (k taken m times) applied to Phi_n, via the alpha/gamma sums.
// Total: out-of-range queries return the zero vector.
PhiVector s_repeated_phi(long n, long k, long m);

// One evaluator per printed corollary; shape s corresponds to the
// operation with m = s+1 repeated parts (shape 1 = S_{k,k}).
struct ClosedForm {
  bool applicable = false;
  std::string reason;     // failed hypothesis when !applicable
  int coeff = 0;          // mod 2
  int target = 0;         // 0 = theta_1, i >= 1 = Phi_i (meaningful when coeff=1)
  PhiVector value() const {
    return coeff ? PhiVector::single(target) : PhiVector::zero();
  }
};

constexpr int kClosedFormShapes = 12;
ClosedForm corollary_closed_form(int shape, long n, long k);

}  // namespace msp
