#include "msp/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace msp {

bool valid_c_index(unsigned n) {
  return n >= 2 && (n & (n + 1)) != 0;
}

GenId GenId::h(unsigned i) {
  if (i < 1 || i > 0xfff) throw std::invalid_argument("h-index out of range");
  return GenId(GenKind::H, i);
}

GenId GenId::u(unsigned j) {
  if (j < 1 || j > 0xfff) throw std::invalid_argument("u-index out of range");
  return GenId(GenKind::U, j);
}

GenId GenId::c(unsigned n) {
  if (n > 0xfff || !valid_c_index(n))
    throw std::invalid_argument("invalid c-index " + std::to_string(n));
  return GenId(GenKind::C, n);
}

std::string GenId::str() const {
  switch (kind()) {
    case GenKind::H0: return "h0";
    case GenKind::H: return "h" + std::to_string(index());
    case GenKind::U: return "u" + std::to_string(index());
    case GenKind::C: return "c" + std::to_string(index());
  }
  return "?";
}

std::string TriDegree::str() const {
  return "(" + std::to_string(q) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
}

TriDegree gen_degree(GenId g) {
  switch (g.kind()) {
    case GenKind::H0: return {2, 0, 0};
    case GenKind::H: return {1, 0, 2 * ((1L << g.index()) - 1)};
    case GenKind::U: return {0, 1, 2 * ((1L << g.index()) - 1)};
    case GenKind::C: return {0, 0, 4L * g.index()};
  }
  return {};
}

Monomial Monomial::gen(GenId g, uint32_t e) {
  Monomial m;
  if (e == 0) return m;
  m.factors_.push_back({g, e});
  TriDegree d = gen_degree(g);
  m.deg_ = {d.q * e, d.s * e, d.t * e};
  return m;
}

TriDegree Monomial::recompute_degree() const {
  TriDegree d;
  for (auto& [g, e] : factors_) {
    TriDegree gd = gen_degree(g);
    d += {gd.q * e, gd.s * e, gd.t * e};
  }
  return d;
}

uint64_t Monomial::total_exponent() const {
  uint64_t n = 0;
  for (auto& [g, e] : factors_) n += e;
  return n;
}

uint32_t Monomial::exponent_of(GenId g) const {
  for (auto& [gg, e] : factors_)
    if (gg == g) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() ||
        (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
      out.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
      out.factors_.push_back(o.factors_[j++]);
    } else {
      out.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
      ++i; ++j;
    }
  }
  out.deg_ = deg_ + o.deg_;
  return out;
}

std::optional<Monomial> Monomial::divide(GenId g, uint32_t e) const {
  Monomial out;
  bool found = false;
  for (auto& [gg, ee] : factors_) {
    if (gg == g) {
      if (ee < e) return std::nullopt;
      found = true;
      if (ee > e) out.factors_.push_back({gg, ee - e});
    } else {
      out.factors_.push_back({gg, ee});
    }
  }
  if (!found && e > 0) return std::nullopt;
  out.deg_ = out.recompute_degree();
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  uint64_t ta = total_exponent(), tb = o.total_exponent();
  if (ta != tb) return ta <=> tb;
  size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first != o.factors_[j].first) {
      // the one owning the earlier generator has a positive exponent there
      return factors_[i].first < o.factors_[j].first ? std::strong_ordering::greater
                                                     : std::strong_ordering::less;
    }
    if (factors_[i].second != o.factors_[j].second)
      return factors_[i].second <=> o.factors_[j].second;
    ++i; ++j;
  }
  if (i < factors_.size()) return std::strong_ordering::greater;
  if (j < o.factors_.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Poly Poly::one() { return mono(Monomial::one()); }

Poly Poly::gen(GenId g, uint32_t e) { return mono(Monomial::gen(g, e)); }

Poly Poly::mono(Monomial m) {
  Poly p;
  p.terms_.push_back(std::move(m));
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Monomial& a, const Monomial& b) { return a > b; });
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (size_t i = 0; i < terms_.size();) {
    size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2) out.push_back(terms_[i]);
    i = j;
  }
  terms_ = std::move(out);
}

Poly poly_from_term_list(std::vector<Monomial> ts) {
  Poly p;
  p.terms_ = std::move(ts);
  p.normalize();
  return p;
}

std::optional<TriDegree> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  TriDegree d = terms_.front().degree();
  for (auto& m : terms_)
    if (!(m.degree() == d)) return std::nullopt;
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  merged.insert(merged.end(), terms_.begin(), terms_.end());
  merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
  return poly_from_term_list(std::move(merged));
}

Poly& Poly::operator+=(const Poly& o) {
  *this = *this + o;
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  std::vector<Monomial> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) prods.push_back(a * b);
  return poly_from_term_list(std::move(prods));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

std::string render_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (auto& [g, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += g.str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& m : p.terms()) {
    if (!out.empty()) out += " + ";
    out += render_monomial(m);
  }
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  unsigned parse_uint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
      throw ParseError("expected integer", pos);
    unsigned long v = 0;
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
      v = v * 10 + (text[pos] - '0');
      if (v > 0xffffff) throw ParseError("integer too large", start);
      ++pos;
    }
    return unsigned(v);
  }

  // returns nullopt for the literal '1'
  std::optional<GenId> parse_gen() {
    skip_ws();
    size_t start = pos;
    if (pos >= text.size()) throw ParseError("expected generator", pos);
    char c = text[pos];
    if (c == '1') {
      ++pos;
      return std::nullopt;
    }
    if (c == 'h') {
      ++pos;
      unsigned i = parse_uint();
      return i == 0 ? GenId::h0() : GenId::h(i);
    }
    if (c == 'u') {
      ++pos;
      return GenId::u(parse_uint());
    }
    if (c == 'c') {
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '{') {
        ++pos;
        std::vector<unsigned> subs;
        subs.push_back(parse_uint());
        while (accept(',')) subs.push_back(parse_uint());
        if (!accept('}')) throw ParseError("expected '}'", pos);
        unsigned n;
        try {
          n = alias_to_index(subs);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), start);
        }
        return GenId::c(n);
      }
      unsigned n = parse_uint();
      if (!valid_c_index(n))
        throw ParseError("invalid c-index " + std::to_string(n), start);
      return GenId::c(n);
    }
    throw ParseError("unknown generator", pos);
  }

  Monomial parse_term() {
    Monomial m = Monomial::one();
    while (true) {
      auto g = parse_gen();
      uint32_t e = 1;
      if (accept('^')) e = parse_uint();
      if (g) m = m * Monomial::gen(*g, e);
      if (!accept('*')) break;
    }
    return m;
  }

  Poly parse() {
    skip_ws();
    if (peek() == '0') {
      size_t save = pos;
      ++pos;
      if (eof()) return Poly::zero();
      pos = save;
      throw ParseError("unexpected text after '0'", pos + 1);
    }
    std::vector<Monomial> terms;
    terms.push_back(parse_term());
    while (accept('+')) terms.push_back(parse_term());
    if (!eof()) throw ParseError("unexpected trailing text", pos);
    return poly_from_term_list(std::move(terms));
  }
};

}  // namespace

Poly parse_poly(std::string_view text) {
  Parser p{text};
  return p.parse();
}

std::vector<unsigned> canonical_name(unsigned n) {
  if (!valid_c_index(n))
    throw std::invalid_argument("invalid c-index " + std::to_string(n));
  if ((n & (n - 1)) == 0) {
    // n = 2^{i-1}  ->  c_{1,i}
    unsigned i = std::countr_zero(n) + 1;
    return {1u, i};
  }
  if (n % 2 == 1) {
    unsigned m = (n + 1) / 2;
    std::vector<unsigned> subs;
    for (unsigned b = 0; (1u << b) <= m; ++b)
      if (m & (1u << b)) subs.push_back(b + 2);
    return subs;
  }
  return {};  // plain even generator
}

unsigned alias_to_index(std::span<const unsigned> subs) {
  if (subs.size() < 2) throw std::invalid_argument("alias needs at least two subscripts");
  for (size_t i = 1; i < subs.size(); ++i)
    if (subs[i] <= subs[i - 1])
      throw std::invalid_argument("alias subscripts must be strictly increasing");
  if (subs[0] == 1) {
    if (subs.size() != 2)
      throw std::invalid_argument("c{1,i} alias takes exactly two subscripts");
    unsigned i = subs[1];
    if (i < 2 || i > 13) throw std::invalid_argument("alias subscript out of range");
    return 1u << (i - 1);
  }
  if (subs[0] < 2) throw std::invalid_argument("alias subscripts start at 1");
  unsigned m = 0;
  for (unsigned i : subs) {
    if (i < 2 || i > 13) throw std::invalid_argument("alias subscript out of range");
    m |= 1u << (i - 2);
  }
  return 2 * m - 1;
}

}  // namespace msp
