#include "motzeta/mring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace motzeta {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Int(c)) {}

LaurentPoly::LaurentPoly(const Int& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Int& c, long exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::L_minus_1() { return monomial(1, 1) - LaurentPoly(1); }

void LaurentPoly::add_term(long e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LaurentPoly::value_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rat LaurentPoly::evaluate(const Rat& L) const {
  if (L == 0 && !terms_.empty() && terms_.begin()->first < 0)
    throw Error("evaluate: negative power of L at L = 0");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat p = 1;
    if (e >= 0) {
      for (long i = 0; i < e; ++i) p *= L;
    } else {
      for (long i = 0; i < -e; ++i) p /= L;
    }
    s += Rat(c) * p;
  }
  return s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

LaurentPoly LaurentPoly::divided_by_L_minus_1() const {
  if (value_at_one() != 0) throw Error("divided_by_L_minus_1: polynomial does not vanish at L = 1");
  // synthetic division from the top degree down: q_{e-1} = c_e + q_e
  LaurentPoly q;
  if (terms_.empty()) return q;
  const long lo = terms_.begin()->first;
  const long hi = terms_.rbegin()->first;
  Int carry = 0;
  for (long e = hi; e > lo; --e) {
    auto it = terms_.find(e);
    if (it != terms_.end()) carry += it->second;
    q.add_term(e - 1, carry);
  }
  return q;
}

namespace {

std::string monomial_body(const Int& abs_c, long e) {
  std::ostringstream os;
  if (e == 0) {
    os << abs_c;
    return os.str();
  }
  if (abs_c != 1) os << abs_c << '*';
  os << 'L';
  if (e != 1) os << '^' << e;
  return os.str();
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    std::string body = monomial_body(abs(c), it->first);
    if (first) out += (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- MCoeff

MCoeff::MCoeff(LaurentPoly num, unsigned den_pow) : num_(std::move(num)), den_pow_(den_pow) {
  if (num_.is_zero()) {
    den_pow_ = 0;
    return;
  }
  while (den_pow_ > 0 && num_.value_at_one() == 0) {
    num_ = num_.divided_by_L_minus_1();
    --den_pow_;
  }
}

MCoeff MCoeff::operator+(const MCoeff& o) const {
  const unsigned k = std::max(den_pow_, o.den_pow_);
  LaurentPoly L1 = LaurentPoly::L_minus_1();
  LaurentPoly a = num_ * L1.pow(k - den_pow_);
  LaurentPoly b = o.num_ * L1.pow(k - o.den_pow_);
  return MCoeff(a + b, k);
}

MCoeff MCoeff::operator-(const MCoeff& o) const { return *this + (-o); }

MCoeff MCoeff::operator*(const MCoeff& o) const { return MCoeff(num_ * o.num_, den_pow_ + o.den_pow_); }

MCoeff MCoeff::mul_L1_pow(long e) const {
  if (e < 0) return MCoeff(num_, den_pow_ + static_cast<unsigned>(-e));
  const unsigned long cancel = std::min<unsigned long>(static_cast<unsigned long>(e), den_pow_);
  return MCoeff(num_ * LaurentPoly::L_minus_1().pow(static_cast<unsigned long>(e) - cancel),
                den_pow_ - static_cast<unsigned>(cancel));
}

MCoeff MCoeff::divided_by(const MCoeff& unit) const {
  if (unit.is_zero()) throw PreconditionError("division by zero");
  LaurentPoly p = unit.num_;
  long k = 0;
  while (p.value_at_one() == 0) {
    p = p.divided_by_L_minus_1();
    ++k;
  }
  if (!p.is_monomial() || abs(p.terms().begin()->second) != 1)
    throw PreconditionError("division only by units of the form ±L^j (L-1)^k");
  const long j = p.terms().begin()->first;
  const Int sign = p.terms().begin()->second;
  MCoeff r = MCoeff(num_.shifted(-j) * LaurentPoly(sign), den_pow_);
  return r.mul_L1_pow(static_cast<long>(unit.den_pow_) - k);
}

std::map<long, Int> MCoeff::truncated_expansion(long min_exponent) const {
  std::map<long, Int> out;
  const long k = den_pow_;
  for (const auto& [e, c] : num_.terms()) {
    // c L^e / (L-1)^k = c sum_j binom(j+k-1, k-1) L^(e-k-j)
    if (k == 0) {
      if (e >= min_exponent) out[e] += c;
      continue;
    }
    for (long j = 0; e - k - j >= min_exponent; ++j) {
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(j + k - 1), static_cast<unsigned long>(k - 1));
      out[e - k - j] += c * b;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

Rat MCoeff::evaluate(const Rat& L) const {
  Rat v = num_.evaluate(L);
  if (den_pow_ == 0) return v;
  if (L == 1) throw L1PoleError("evaluate: pole at L = 1");
  Rat d = 1;
  for (unsigned i = 0; i < den_pow_; ++i) d *= (L - 1);
  return v / d;
}

std::string MCoeff::to_string() const {
  if (den_pow_ == 0) return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/(L-1)";
  if (den_pow_ > 1) s += "^" + std::to_string(den_pow_);
  return s;
}

// ---------------------------------------------------------------- MClass

MClass::MClass(const MCoeff& c) { add_term(kOne, c); }

MClass MClass::symbol(const std::string& s, const MCoeff& c) {
  if (s.empty()) throw PreconditionError("empty class symbol");
  MClass m;
  m.add_term(s, c);
  return m;
}

void MClass::add_term(const std::string& s, const MCoeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MCoeff MClass::coefficient(const std::string& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? MCoeff() : it->second;
}

MClass MClass::operator+(const MClass& o) const {
  MClass r = *this;
  r += o;
  return r;
}

MClass& MClass::operator+=(const MClass& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

MClass MClass::operator-() const {
  MClass r;
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

MClass MClass::operator-(const MClass& o) const { return *this + (-o); }

MClass MClass::operator*(const MClass& o) const {
  MClass r;
  for (const auto& [s1, c1] : terms_)
    for (const auto& [s2, c2] : o.terms_) r.add_term(symbol_product(s1, s2), c1 * c2);
  return r;
}

MClass MClass::operator*(const MCoeff& c) const {
  MClass r;
  for (const auto& [s, x] : terms_) r.add_term(s, x * c);
  return r;
}

MClass MClass::scale_L(long k) const {
  MClass r;
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, c.scale_L(k));
  return r;
}

MClass MClass::mul_L1_pow(long e) const {
  MClass r;
  for (const auto& [s, c] : terms_) r.add_term(s, c.mul_L1_pow(e));
  return r;
}

std::string MClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    bool negative = false;
    std::string body;
    const bool simple = c.den_pow() == 0 && c.num().is_monomial();
    if (s == kOne) {
      if (simple) {
        const auto& [e, k] = *c.num().terms().begin();
        negative = k < 0;
        body = monomial_body(abs(k), e);
      } else {
        body = c.to_string();
        if (terms_.size() > 1) body = "(" + body + ")";
      }
    } else {
      body = "[" + s + "]";
      if (simple) {
        const auto& [e, k] = *c.num().terms().begin();
        negative = k < 0;
        if (!(abs(k) == 1 && e == 0)) body += "*" + monomial_body(abs(k), e);
      } else {
        body += "*(" + c.to_string() + ")";
      }
    }
    if (first) out += (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string symbol_product(const std::string& a, const std::string& b) {
  if (a == MClass::kOne) return b;
  if (b == MClass::kOne) return a;
  std::vector<std::string> atoms;
  for (const std::string* s : {&a, &b}) {
    std::size_t start = 0;
    while (true) {
      std::size_t p = s->find('*', start);
      atoms.push_back(s->substr(start, p == std::string::npos ? std::string::npos : p - start));
      if (p == std::string::npos) break;
      start = p + 1;
    }
  }
  std::sort(atoms.begin(), atoms.end());
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) out += (i ? "*" : "") + atoms[i];
  return out;
}

MClass add(const MClass& a, const MClass& b) { return a + b; }
MClass mul(const MClass& a, const MClass& b) { return a * b; }
MClass scale_L(const MClass& a, long k) { return a.scale_L(k); }
MClass mul_L1_pow(const MClass& a, long e) { return a.mul_L1_pow(e); }

const MClass& assert_no_L1_pole(const MClass& a) {
  for (const auto& [s, c] : a.terms())
    if (c.den_pow() > 0) throw L1PoleError("coefficient of [" + s + "] has a pole at L = 1: " + c.to_string());
  return a;
}

MClass mod_L_minus_1(const MClass& a) {
  assert_no_L1_pole(a);
  MClass r;
  for (const auto& [s, c] : a.terms()) r += MClass::symbol(s, MCoeff(c.num().value_at_one()));
  return r;
}

Rat specialize(const MClass& a, const std::map<std::string, Rat>& table, const Rat& L_value) {
  if (L_value == 1) assert_no_L1_pole(a);
  Rat total = 0;
  for (const auto& [s, c] : a.terms()) {
    Rat v = 1;
    if (s != MClass::kOne) {
      auto it = table.find(s);
      if (it == table.end()) throw PreconditionError("specialize: no value for symbol [" + s + "]");
      v = it->second;
    }
    total += c.evaluate(L_value) * v;
  }
  return total;
}

std::map<std::string, std::map<long, Int>> truncated_expansion(const MClass& a, long min_exponent) {
  std::map<std::string, std::map<long, Int>> out;
  for (const auto& [s, c] : a.terms()) {
    auto e = c.truncated_expansion(min_exponent);
    if (!e.empty()) out.emplace(s, std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class CoeffParser {
 public:
  explicit CoeffParser(const std::string& text) : s_(text) {}

  MCoeff parse() {
    MCoeff v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("coefficient \"" + s_ + "\": " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    skip();
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    long v = std::stol(s_.substr(digits, pos_ - digits));
    return neg ? -v : v;
  }

  MCoeff expr() {
    MCoeff v = term();
    while (true) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }
  MCoeff term() {
    MCoeff v = factor();
    while (true) {
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        MCoeff d = factor();
        try {
          v = v.divided_by(d);
        } catch (const PreconditionError& e) {
          fail(e.what());
        }
      } else {
        return v;
      }
    }
  }
  MCoeff factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    MCoeff base = primary();
    if (!accept('^')) return base;
    long e = integer();
    if (e < 0) {
      try {
        base = MCoeff(1).divided_by(base);
      } catch (const PreconditionError& err) {
        fail(err.what());
      }
      e = -e;
    }
    MCoeff r = 1;
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }
  MCoeff primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MCoeff v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'L') {
      ++pos_;
      return MCoeff::L_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MCoeff(Int(s_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MCoeff parse_coeff(const std::string& text) { return CoeffParser(text).parse(); }

}  // namespace motzeta
