#include "msp/bseries.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace msp {

BMono BMono::b(uint32_t idx, uint32_t exp) {
  BMono m;
  if (idx == 0 || exp == 0) return m;  // b_0 is the unit
  m.factors.push_back({idx, exp});
  return m;
}

uint64_t BMono::weight() const {
  uint64_t w = 0;
  for (auto& [i, e] : factors) w += uint64_t(i) * e;
  return w;
}

BMono BMono::operator*(const BMono& o) const {
  BMono out;
  size_t i = 0, j = 0;
  while (i < factors.size() || j < o.factors.size()) {
    if (j == o.factors.size() ||
        (i < factors.size() && factors[i].first < o.factors[j].first)) {
      out.factors.push_back(factors[i++]);
    } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
      out.factors.push_back(o.factors[j++]);
    } else {
      out.factors.push_back({factors[i].first, factors[i].second + o.factors[j].second});
      ++i; ++j;
    }
  }
  return out;
}

bool BMono::divide(uint32_t idx, BMono& out) const {
  out.factors.clear();
  bool found = false;
  for (auto& [i, e] : factors) {
    if (i == idx) {
      found = true;
      if (e > 1) out.factors.push_back({i, e - 1});
    } else {
      out.factors.push_back({i, e});
    }
  }
  return found;
}

std::string BMono::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (auto& [i, e] : factors) {
    if (!out.empty()) out += "*";
    out += "b" + std::to_string(i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

BPoly BPoly::constant(BigInt c) { return mono(BMono::one(), std::move(c)); }

BPoly BPoly::mono(BMono m, BigInt c) {
  BPoly p;
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

BigInt BPoly::coeff(const BMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BPoly::add(const BMono& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BPoly BPoly::operator+(const BPoly& o) const {
  BPoly out = *this;
  for (auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

BPoly BPoly::operator*(const BPoly& o) const {
  BPoly out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) out.add(ma * mb, ca * cb);
  return out;
}

BPoly BPoly::operator-() const {
  BPoly out;
  for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

std::string BPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + m.str();
  }
  return out;
}

namespace {

std::mutex g_cache_mutex;
std::map<std::pair<unsigned, unsigned>, BPoly> g_bpow_cache;
std::map<std::pair<unsigned, unsigned>, BPoly> g_chi_cache;

// Enumerate partitions of w (as index->multiplicity), accumulating the
// multinomial count of ways to draw them from k series factors.
void enum_partitions(unsigned remaining, unsigned maxpart, unsigned k_left,
                     const BigInt& coeff, BMono& current, BPoly& out) {
  if (remaining == 0) {
    out.add(current, coeff);
    return;
  }
  for (unsigned p = std::min(remaining, maxpart); p >= 1; --p) {
    unsigned maxcount = remaining / p;
    BigInt c = coeff;
    for (unsigned cnt = 1; cnt <= maxcount && cnt <= k_left; ++cnt) {
      c = c * (k_left - cnt + 1) / cnt;  // running C(k_left, cnt)
      current.factors.push_back({p, cnt});
      enum_partitions(remaining - p * cnt, p - 1, k_left - cnt, c, current, out);
      current.factors.pop_back();
    }
  }
}

BPoly compute_b_power(unsigned k, unsigned w) {
  BPoly out;
  if (w == 0) return BPoly::constant(1);
  BMono cur;
  enum_partitions(w, w, k, 1, cur, out);
  // factors were pushed largest-first; normalize ordering
  BPoly fixed;
  for (auto& [m, c] : out.terms()) {
    BMono mm = m;
    std::sort(mm.factors.begin(), mm.factors.end());
    fixed.add(mm, c);
  }
  return fixed;
}

}  // namespace

const BPoly& b_power_component(unsigned k, unsigned w) {
  auto key = std::make_pair(k, w);
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_bpow_cache.find(key);
    if (it != g_bpow_cache.end()) return it->second;
  }
  BPoly v = compute_b_power(k, w);
  std::lock_guard lock(g_cache_mutex);
  return g_bpow_cache.emplace(key, std::move(v)).first->second;
}

const BPoly& chi_component(unsigned t, unsigned w) {
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_chi_cache.find({t, w});
    if (it != g_chi_cache.end()) return it->second;
  }
  BPoly v = -b_power_component(t, w);
  for (unsigned j = 1; j < w; ++j)
    v = v + (-(b_power_component(t, j) * chi_component(t + j, w - j)));
  std::lock_guard lock(g_cache_mutex);
  return g_chi_cache.emplace(std::make_pair(t, w), std::move(v)).first->second;
}

OpIndex OpIndex::repeated(uint32_t k, uint32_t times) {
  OpIndex e;
  e.mono = BMono::b(k, times);
  return e;
}

std::vector<uint32_t> OpIndex::parts() const {
  std::vector<uint32_t> out;
  for (auto& [i, e] : mono.factors)
    for (uint32_t r = 0; r < e; ++r) out.push_back(i);
  return out;
}

std::string OpIndex::str() const {
  auto ps = parts();
  if (ps.empty()) return "()";
  std::string out;
  for (uint32_t p : ps) {
    if (!out.empty()) out += ",";
    out += std::to_string(p);
  }
  return out;
}

OpIndex OpIndex::parse(std::string_view text) {
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  auto read_uint = [&]() -> uint32_t {
    skip();
    if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
      throw std::invalid_argument("expected integer in operation index");
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
      v = v * 10 + (text[pos++] - '0');
    if (v == 0 || v > 4096) throw std::invalid_argument("operation part out of range");
    return uint32_t(v);
  };
  skip();
  OpIndex out;
  if (pos < text.size() && text[pos] == 'b') {
    // explicit form b3^1*b2^4
    BMono m;
    while (true) {
      skip();
      if (pos >= text.size() || text[pos] != 'b')
        throw std::invalid_argument("expected b-generator");
      ++pos;
      uint32_t idx = read_uint();
      uint32_t exp = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exp = read_uint();
      }
      m = m * BMono::b(idx, exp);
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    skip();
    if (pos != text.size()) throw std::invalid_argument("trailing text in operation index");
    out.mono = m;
    return out;
  }
  // repeated-part list
  BMono m;
  m = m * BMono::b(read_uint());
  skip();
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    m = m * BMono::b(read_uint());
    skip();
  }
  if (pos != text.size()) throw std::invalid_argument("trailing text in operation index");
  out.mono = m;
  return out;
}

BPoly kochman_slot(unsigned m, unsigned slot) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  BPoly out;
  if (slot == 0) {
    for (unsigned k = 0; k < m; ++k) {
      BPoly term = chi_component(2 * k + 1, 2 * m - 2 * k - 1);
      if (k > 0) term = BPoly::mono(BMono::b(2 * k)) * term;
      out = out + term;
    }
    return out;
  }
  if (slot > m) return out;
  unsigned i = slot;
  out.add(BMono::b(2 * (m - i)), 1);  // b_0 = 1 when i = m
  for (unsigned h = 0; h + i + 1 <= m; ++h) {
    BPoly term = chi_component(2 * h + 2 * i, 2 * m - 2 * h - 2 * i);
    if (h > 0) term = BPoly::mono(BMono::b(2 * h)) * term;
    out = out + term;
  }
  return out;
}

BigInt kochman_slot_coeff(unsigned m, unsigned slot, const BMono& E) {
  if (m < 1) return 0;
  BigInt total = 0;
  if (slot == 0) {
    for (unsigned k = 0; k < m; ++k) {
      BMono rest;
      if (k > 0) {
        if (!E.divide(2 * k, rest)) continue;
      } else {
        rest = E;
      }
      total += chi_component(2 * k + 1, 2 * m - 2 * k - 1).coeff(rest);
    }
    return total;
  }
  unsigned i = slot;
  if (i > m) return 0;
  if (E == BMono::b(2 * (m - i)) || (i == m && E.factors.empty())) total += 1;
  for (unsigned h = 0; h + i + 1 <= m; ++h) {
    BMono rest;
    if (h > 0) {
      if (!E.divide(2 * h, rest)) continue;
    } else {
      rest = E;
    }
    total += chi_component(2 * h + 2 * i, 2 * m - 2 * h - 2 * i).coeff(rest);
  }
  return total;
}

std::map<BMono, std::map<unsigned, BigInt>> kochman_h(unsigned m, unsigned wmax) {
  std::map<BMono, std::map<unsigned, BigInt>> out;
  for (unsigned slot = 0; slot <= m; ++slot) {
    unsigned w = slot == 0 ? 2 * m - 1 : 2 * (m - slot);
    if (w > wmax) continue;
    BPoly part = kochman_slot(m, slot);
    for (auto& [mono, c] : part.terms()) out[mono][slot] += c;
  }
  for (auto it = out.begin(); it != out.end();) {
    auto& inner = it->second;
    for (auto jt = inner.begin(); jt != inner.end();)
      jt = (jt->second == 0) ? inner.erase(jt) : std::next(jt);
    it = inner.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

PhiVector s_on_phi(const OpIndex& E, unsigned m) {
  if (m < 1) return PhiVector::zero();
  uint64_t w = E.weight();
  if (w == 0) return PhiVector::phi(int(m));
  if (w % 2 == 0) {
    uint64_t half = w / 2;
    if (half >= m) return PhiVector::zero();
    unsigned i = m - unsigned(half);
    BigInt c = kochman_slot_coeff(m, i, E.mono);
    return (c % 2 != 0) ? PhiVector::phi(int(i)) : PhiVector::zero();
  }
  if (w == 2 * uint64_t(m) - 1) {
    BigInt c = kochman_slot_coeff(m, 0, E.mono);
    return (c % 2 != 0) ? PhiVector::theta1() : PhiVector::zero();
  }
  return PhiVector::zero();
}

}  // namespace msp
