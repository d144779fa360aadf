#include "msp/tables.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>

#ifndef MSP_DEFAULT_DATA_DIR
#define MSP_DEFAULT_DATA_DIR "data"
#endif

namespace msp {

std::filesystem::path data_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("COBORDISM_DATA"); env && *env) return env;
  return MSP_DEFAULT_DATA_DIR;
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto pos = s.find('#'); pos != std::string::npos) s.resize(pos);
  while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
  size_t b = 0;
  while (b < s.size() && std::isspace((unsigned char)s[b])) ++b;
  return s.substr(b);
}

template <typename Fn>
void for_each_line(const std::filesystem::path& file, Fn fn) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open data file " + file.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    fn(s, lineno);
  }
}

GenId parse_target(const std::string& tok, const std::filesystem::path& file, int line) {
  try {
    Poly p = parse_poly(tok);
    if (p.size() == 1 && p.terms().front().factors().size() == 1 &&
        p.terms().front().factors().front().second == 1) {
      GenId g = p.terms().front().factors().front().first;
      if (g.kind() == GenKind::C || g.kind() == GenKind::U) return g;
    }
  } catch (const std::exception& e) {
    throw DataError(file, line, e.what());
  }
  throw DataError(file, line, "target must be a single c- or u-generator: " + tok);
}

long t_of_gen(GenId g) { return gen_degree(g).t; }

}  // namespace

void ActionDb::load_actions(const std::filesystem::path& file, const std::string& source_tag) {
  for_each_line(file, [&](const std::string& s, int lineno) {
    if (s.rfind("S", 0) != 0) throw DataError(file, lineno, "expected 'S' record");
    auto bar = s.find('|');
    auto arrow = s.find("->");
    if (bar == std::string::npos || arrow == std::string::npos || arrow < bar)
      throw DataError(file, lineno, "expected 'S parts | target -> poly'");
    std::string parts_text = strip(s.substr(1, bar - 1));
    std::string target_text = strip(s.substr(bar + 1, arrow - bar - 1));
    std::string value_text = strip(s.substr(arrow + 2));

    ActionRecord rec;
    try {
      rec.omega = OpIndex::parse(parts_text);
      rec.value = parse_poly(value_text);
    } catch (const std::exception& e) {
      throw DataError(file, lineno, e.what());
    }
    rec.target = {parse_target(target_text, file, lineno)};
    rec.line = lineno;
    rec.source = source_tag;

    // degree bookkeeping: t(value) = t(target) - 4 weight(omega)
    if (!rec.value.is_zero()) {
      auto deg = rec.value.homogeneous_degree();
      long expect_t = t_of_gen(rec.target.gen) - 4 * long(rec.omega.weight());
      long expect_s = rec.target.gen.kind() == GenKind::U ? 1 : 0;
      if (!deg || deg->t != expect_t || deg->q != 0 || deg->s != expect_s)
        throw DataError(file, lineno,
                        "degree mismatch for S_{" + rec.omega.str() + "} " +
                            rec.target.gen.str() + ": value " + render_poly(rec.value));
    }
    ActionKey key{rec.omega.parts(), rec.target.gen.code()};
    auto [it, inserted] = records_.emplace(std::move(key), std::move(rec));
    if (!inserted)
      throw DataError(file, lineno, "duplicate record for S_{" + it->second.omega.str() +
                                        "} " + it->second.target.gen.str());
  });
}

void ActionDb::load_projections(const std::filesystem::path& file) {
  for_each_line(file, [&](const std::string& s, int lineno) {
    if (s.rfind("PHI", 0) != 0) throw DataError(file, lineno, "expected 'PHI' record");
    auto eq = s.find('=');
    if (eq == std::string::npos) throw DataError(file, lineno, "expected 'PHI m = poly'");
    int m = 0;
    try {
      m = std::stoi(strip(s.substr(3, eq - 3)));
    } catch (const std::exception&) {
      throw DataError(file, lineno, "bad projection index");
    }
    Poly p;
    try {
      p = parse_poly(s.substr(eq + 1));
    } catch (const std::exception& e) {
      throw DataError(file, lineno, e.what());
    }
    auto deg = p.homogeneous_degree();
    if (!deg || deg->q != 0 || deg->s != 1 || deg->t != 8L * m - 2)
      throw DataError(file, lineno, "projection phi" + std::to_string(m) +
                                        " must be homogeneous of tridegree (0,1," +
                                        std::to_string(8 * m - 2) + ")");
    if (!projections_.emplace(m, std::move(p)).second)
      throw DataError(file, lineno, "duplicate projection phi" + std::to_string(m));
  });
}

const ActionRecord* ActionDb::find(const OpIndex& omega, GenId target) const {
  auto it = records_.find(ActionKey{omega.parts(), target.code()});
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<OpIndex> ActionDb::omegas() const {
  std::set<std::vector<uint32_t>> seen;
  std::vector<OpIndex> out;
  for (auto& [key, rec] : records_) {
    if (seen.insert(key.parts).second) out.push_back(rec.omega);
  }
  return out;
}

void ActionDb::override_record(const OpIndex& omega, GenId target, Poly value,
                               const std::string& source) {
  ActionRecord rec;
  rec.omega = omega;
  rec.target = {target};
  rec.value = std::move(value);
  rec.source = source;
  records_[ActionKey{omega.parts(), target.code()}] = std::move(rec);
}

const Poly* ActionDb::projection(int m) const {
  auto it = projections_.find(m);
  return it == projections_.end() ? nullptr : &it->second;
}

std::optional<Poly> ActionDb::project(const PhiVector& v) const {
  Poly out;
  for (int slot : v.support()) {
    if (slot == 0) {
      out += Poly::gen(GenId::u(1));
    } else if (slot == 1) {
      out += Poly::gen(GenId::u(2));
    } else if (slot == 2) {
      out += Poly::gen(GenId::u(3));
    } else if (slot == 4) {
      out += Poly::gen(GenId::u(4));
    } else if (slot == 8) {
      out += Poly::gen(GenId::u(5));
    } else if (const Poly* p = projection(slot)) {
      out += *p;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<NamedElement> load_named_elements(const std::filesystem::path& file) {
  std::vector<NamedElement> out;
  for_each_line(file, [&](const std::string& s, int lineno) {
    auto sp = s.find(' ');
    auto eq = s.find('=');
    if (sp == std::string::npos || eq == std::string::npos || eq < sp)
      throw DataError(file, lineno, "expected 'name t = poly'");
    NamedElement el;
    el.name = strip(s.substr(0, sp));
    try {
      el.t = std::stol(strip(s.substr(sp, eq - sp)));
      el.expansion = parse_poly(s.substr(eq + 1));
    } catch (const std::exception& e) {
      throw DataError(file, lineno, e.what());
    }
    auto deg = el.expansion.homogeneous_degree();
    if (!deg || deg->t != el.t)
      throw DataError(file, lineno, "element " + el.name + " is not homogeneous of t = " +
                                        std::to_string(el.t));
    out.push_back(std::move(el));
  });
  return out;
}

std::vector<OpValueRow> load_op_rows(const std::filesystem::path& file) {
  std::vector<OpValueRow> out;
  for_each_line(file, [&](const std::string& s, int lineno) {
    if (s.rfind("ROW", 0) != 0) throw DataError(file, lineno, "expected 'ROW' record");
    auto bar = s.find('|');
    auto arrow = s.find("->");
    if (bar == std::string::npos || arrow == std::string::npos)
      throw DataError(file, lineno, "expected 'ROW parts | phi N -> value [tag]'");
    OpValueRow row;
    row.line = lineno;
    try {
      row.omega = OpIndex::parse(strip(s.substr(3, bar - 3)));
    } catch (const std::exception& e) {
      throw DataError(file, lineno, e.what());
    }
    std::string lhs = strip(s.substr(bar + 1, arrow - bar - 1));
    if (lhs.rfind("phi", 0) != 0) throw DataError(file, lineno, "row target must be 'phi N'");
    row.n = std::atoi(lhs.c_str() + 3);
    if (row.n < 1) throw DataError(file, lineno, "bad phi index");
    std::string rhs = strip(s.substr(arrow + 2));
    std::string value = rhs, tag;
    if (auto spc = rhs.find(' '); spc != std::string::npos) {
      value = strip(rhs.substr(0, spc));
      tag = strip(rhs.substr(spc));
    }
    if (value == "0") {
      row.value = PhiVector::zero();
    } else if (value == "theta1") {
      row.value = PhiVector::theta1();
    } else if (value.rfind("phi", 0) == 0) {
      row.value = PhiVector::phi(std::atoi(value.c_str() + 3));
    } else {
      throw DataError(file, lineno, "row value must be 0, theta1 or phi M");
    }
    row.tag = tag;
    out.push_back(std::move(row));
  });
  return out;
}

std::vector<Claim> load_claims(const std::filesystem::path& file) {
  std::vector<Claim> out;
  for_each_line(file, [&](const std::string& s, int lineno) {
    if (s.rfind("CLAIM", 0) != 0) throw DataError(file, lineno, "expected 'CLAIM' record");
    auto colon = s.find(':');
    if (colon == std::string::npos) throw DataError(file, lineno, "expected 'CLAIM m : parts'");
    Claim c;
    c.line = lineno;
    try {
      c.m = std::stoi(strip(s.substr(5, colon - 5)));
      c.omega = OpIndex::parse(strip(s.substr(colon + 1)));
    } catch (const std::exception& e) {
      throw DataError(file, lineno, e.what());
    }
    out.push_back(std::move(c));
  });
  return out;
}

namespace {

struct ExprParser {
  std::string_view text;
  const SymbolTable& symbols;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  Poly factor() {
    skip();
    size_t start = pos;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      Poly inner = expr();
      skip();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return power(inner);
    }
    if (pos < text.size() && (text[pos] == '0' || text[pos] == '1') &&
        (pos + 1 == text.size() || !std::isalnum((unsigned char)text[pos + 1]))) {
      ++pos;
      return text[start] == '0' ? Poly::zero() : Poly::one();
    }
    while (pos < text.size() && std::isalpha((unsigned char)text[pos])) ++pos;
    if (pos < text.size() && text[pos] == '{') {
      while (pos < text.size() && text[pos] != '}') ++pos;
      if (pos < text.size()) ++pos;
    } else {
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    }
    std::string word(text.substr(start, pos - start));
    if (word.empty()) throw ParseError("expected factor", start);
    Poly base;
    if (auto it = symbols.find(word); it != symbols.end()) {
      base = it->second;
    } else {
      base = parse_poly(word);  // plain generator
    }
    return power(base);
  }

  Poly power(Poly base) {
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      size_t ds = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      if (ds == pos) throw ParseError("expected exponent", pos);
      unsigned long e = std::stoul(std::string(text.substr(ds, pos - ds)));
      Poly out = Poly::one();
      for (unsigned long i = 0; i < e; ++i) out *= base;
      return out;
    }
    return base;
  }

  Poly term() {
    Poly out = factor();
    skip();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      out *= factor();
      skip();
    }
    return out;
  }

  Poly expr() {
    Poly out = term();
    skip();
    while (pos < text.size() && text[pos] == '+') {
      ++pos;
      out += term();
      skip();
    }
    return out;
  }
};

}  // namespace

Poly parse_expr(std::string_view text, const SymbolTable& symbols) {
  ExprParser p{text, symbols};
  Poly out = p.expr();
  p.skip();
  if (p.pos != text.size()) throw ParseError("unexpected trailing text", p.pos);
  return out;
}

}  // namespace msp
