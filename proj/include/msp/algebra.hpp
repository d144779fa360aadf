#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msp {

// Generators of the trigraded polynomial algebra Z/2[h0, h_i, u_j, c_n].
// Packed kind-major so the numeric code order is the canonical factor
// order h0 < h_i < u_j < c_n.
enum class GenKind : uint8_t { H0 = 0, H = 1, U = 2, C = 3 };

// Valid c-indices: n >= 2 and n != 2^k - 1.
bool valid_c_index(unsigned n);

class GenId {
 public:
  constexpr GenId() = default;
  static GenId h0() { return GenId(GenKind::H0, 0); }
  static GenId h(unsigned i);
  static GenId u(unsigned j);
  static GenId c(unsigned n);

  GenKind kind() const { return GenKind(code_ >> 12); }
  unsigned index() const { return code_ & 0x0fff; }
  uint16_t code() const { return code_; }
  std::string str() const;

  friend auto operator<=>(GenId a, GenId b) = default;

 private:
  GenId(GenKind k, unsigned idx) : code_(uint16_t((unsigned(k) << 12) | idx)) {}
  uint16_t code_ = 0;
};

struct TriDegree {
  long q = 0, s = 0, t = 0;
  friend TriDegree operator+(TriDegree a, TriDegree b) {
    return {a.q + b.q, a.s + b.s, a.t + b.t};
  }
  TriDegree& operator+=(TriDegree o) {
    q += o.q; s += o.s; t += o.t;
    return *this;
  }
  bool operator==(const TriDegree&) const = default;
  std::string str() const;
};

TriDegree gen_degree(GenId g);

// Exponent multiset with cached tridegree. Factors are kept sorted by
// generator code; exponents are strictly positive.
class Monomial {
 public:
  using Factor = std::pair<GenId, uint32_t>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial gen(GenId g, uint32_t e = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  TriDegree degree() const { return deg_; }
  TriDegree recompute_degree() const;
  uint64_t total_exponent() const;
  uint32_t exponent_of(GenId g) const;

  Monomial operator*(const Monomial& o) const;
  // Divide by g^e; returns nullopt if not divisible.
  std::optional<Monomial> divide(GenId g, uint32_t e) const;

  // Graded-lex: total exponent first, then lexicographic on the exponent
  // vector read in generator-code order (larger exponent at the first
  // differing generator wins).
  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

 private:
  std::vector<Factor> factors_;
  TriDegree deg_;
};

// F2-span of monomials. Terms are held sorted descending and unique; an
// empty term set is the zero polynomial.
class Poly {
 public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly one();
  static Poly gen(GenId g, uint32_t e = 1);
  static Poly mono(Monomial m);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Tridegree shared by all terms, if any (nullopt for zero or mixed).
  std::optional<TriDegree> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  Poly operator+(const Poly& o) const;  // symmetric difference (char 2)
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator*=(const Poly& o);
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

 private:
  std::vector<Monomial> terms_;
  void normalize();  // sort desc + cancel pairs
  friend Poly poly_from_term_list(std::vector<Monomial> ts);
};

Poly poly_from_term_list(std::vector<Monomial> ts);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  size_t position;
};

// Grammar (whitespace-insensitive):
//   poly   := '0' | term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := gen ('^' uint)? | '1'
//   gen    := 'h0' | 'h' uint | 'u' uint | 'c' uint | 'c{' uint (',' uint)* '}'
Poly parse_poly(std::string_view text);
std::string render_poly(const Poly& p);
std::string render_monomial(const Monomial& m);

// c-generator aliasing.  canonical_name(n) returns the subscript list
// {1,i} for n = 2^{i-1}, the digital decomposition {i_1,...,i_q} for odd
// n = 2m-1, and an empty list for plain even generators.
std::vector<unsigned> canonical_name(unsigned n);
unsigned alias_to_index(std::span<const unsigned> subs);

}  // namespace msp
