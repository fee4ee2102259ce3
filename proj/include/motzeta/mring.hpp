#pragma once

#include <map>
#include <string>

#include "motzeta/intlin.hpp"

namespace motzeta {

/// A coefficient retains a pole at L = 1 where none is allowed.
class L1PoleError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Laurent polynomial in L with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Int& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const Int& c, long exponent);
  /// The polynomial L - 1.
  static LaurentPoly L_minus_1();

  const std::map<long, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True iff the polynomial is c * L^k for a single term.
  bool is_monomial() const { return terms_.size() == 1; }
  Int value_at_one() const;
  Rat evaluate(const Rat& L) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(long k) const;
  LaurentPoly pow(unsigned long e) const;
  /// Exact quotient by L - 1; the polynomial must vanish at L = 1.
  LaurentPoly divided_by_L_minus_1() const;
  bool operator==(const LaurentPoly& o) const = default;

  /// Descending powers, e.g. "L^2 - 2*L + 1".
  std::string to_string() const;

 private:
  void add_term(long e, const Int& c);
  std::map<long, Int> terms_;
};

/// num / (L - 1)^den_pow, normalized so that den_pow = 0 or num(1) != 0.
class MCoeff {
 public:
  MCoeff() = default;
  MCoeff(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  MCoeff(const Int& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  MCoeff(LaurentPoly num, unsigned den_pow = 0);
  static MCoeff L_power(long k) { return MCoeff(LaurentPoly::monomial(1, k)); }

  const LaurentPoly& num() const { return num_; }
  unsigned den_pow() const { return den_pow_; }
  bool is_zero() const { return num_.is_zero(); }

  MCoeff operator+(const MCoeff& o) const;
  MCoeff operator-(const MCoeff& o) const;
  MCoeff operator-() const { return MCoeff(-num_, den_pow_); }
  MCoeff operator*(const MCoeff& o) const;
  MCoeff scale_L(long k) const { return MCoeff(num_.shifted(k), den_pow_); }
  MCoeff mul_L1_pow(long e) const;
  /// Quotient by an invertible element ±L^j (L-1)^k.
  MCoeff divided_by(const MCoeff& unit) const;
  bool operator==(const MCoeff& o) const = default;

  /// Expansion in powers of L^-1 keeping exponents >= min_exponent.
  std::map<long, Int> truncated_expansion(long min_exponent) const;
  Rat evaluate(const Rat& L) const;

  /// "p" or "(p)/(L-1)^k".
  std::string to_string() const;

 private:
  LaurentPoly num_;
  unsigned den_pow_ = 0;
};

/// Element of the localized Grothendieck ring: finite sum of opaque class
/// symbols with MCoeff coefficients. The symbol "1" is the unit class.
class MClass {
 public:
  static constexpr const char* kOne = "1";

  MClass() = default;
  MClass(const MCoeff& c);  // NOLINT(google-explicit-constructor)
  MClass(long c) : MClass(MCoeff(c)) {}  // NOLINT(google-explicit-constructor)
  static MClass symbol(const std::string& s, const MCoeff& c = MCoeff(1));

  const std::map<std::string, MCoeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MCoeff coefficient(const std::string& s) const;

  MClass operator+(const MClass& o) const;
  MClass operator-(const MClass& o) const;
  MClass operator-() const;
  MClass operator*(const MClass& o) const;
  MClass operator*(const MCoeff& c) const;
  MClass& operator+=(const MClass& o);
  MClass scale_L(long k) const;
  MClass mul_L1_pow(long e) const;
  bool operator==(const MClass& o) const = default;

  std::string to_string() const;

 private:
  void add_term(const std::string& s, const MCoeff& c);
  std::map<std::string, MCoeff> terms_;
};

/// Formal product of two class symbols: the sorted multiset of factors.
std::string symbol_product(const std::string& a, const std::string& b);

MClass add(const MClass& a, const MClass& b);
MClass mul(const MClass& a, const MClass& b);
MClass scale_L(const MClass& a, long k);
MClass mul_L1_pow(const MClass& a, long e);
const MClass& assert_no_L1_pole(const MClass& a);
MClass mod_L_minus_1(const MClass& a);
Rat specialize(const MClass& a, const std::map<std::string, Rat>& table, const Rat& L_value);

/// Expansion of every coefficient in powers of L^-1, truncated below min_exponent.
std::map<std::string, std::map<long, Int>> truncated_expansion(const MClass& a, long min_exponent);

/// Parse a coefficient expression in L: integers, L, + - * ^, parentheses and
/// division by units of the form ±L^j (L-1)^k.
MCoeff parse_coeff(const std::string& text);

}  // namespace motzeta
