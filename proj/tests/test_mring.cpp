#include <gtest/gtest.h>

#include <random>

#include "motzeta/mring.hpp"

using namespace motzeta;

namespace {

const MCoeff L = MCoeff::L_power(1);
const MCoeff L1 = L - MCoeff(1);

MClass sym(const std::string& s, const MCoeff& c = MCoeff(1)) { return MClass::symbol(s, c); }

MClass random_class(std::mt19937& rng, bool poles = true) {
  std::uniform_int_distribution<long> coef(-3, 3), expo(-2, 2), den(0, 2), pick(0, 3);
  const char* names[] = {"1", "A", "B", "C"};
  MClass out;
  for (int i = 0; i < 3; ++i) {
    LaurentPoly p = LaurentPoly::monomial(coef(rng), expo(rng)) + LaurentPoly::monomial(coef(rng), expo(rng));
    out += MClass::symbol(names[pick(rng)], MCoeff(p, poles ? static_cast<unsigned>(den(rng)) : 0u));
  }
  return out;
}

}  // namespace

TEST(MCoeff, Normalization) {
  EXPECT_EQ(L1 * MCoeff(1).mul_L1_pow(-1), MCoeff(1));
  MCoeff q(LaurentPoly::monomial(1, 2) - LaurentPoly(1), 1);
  EXPECT_EQ(q, L + MCoeff(1));
  EXPECT_EQ(q.den_pow(), 0u);
  EXPECT_EQ(MCoeff(LaurentPoly(), 3).den_pow(), 0u);
}

TEST(MClass, Arithmetic) {
  EXPECT_EQ(mul(MClass(L1), MClass(MCoeff(1).mul_L1_pow(-1))), MClass(1));
  EXPECT_EQ(add(sym("A"), sym("A")), sym("A", 2));
  EXPECT_EQ(mul(mul_L1_pow(sym("A"), -1), MClass(L1)), sym("A"));
  EXPECT_EQ(mul(sym("B"), sym("A")), sym("A*B"));
  EXPECT_EQ(mul(sym("A*C"), sym("B")), sym("A*B*C"));
  EXPECT_TRUE((sym("A") - sym("A")).is_zero());
  EXPECT_EQ(scale_L(sym("A"), 2), sym("A", MCoeff::L_power(2)));
}

TEST(MClass, PoleChecks) {
  EXPECT_NO_THROW(assert_no_L1_pole(sym("A", L)));
  try {
    assert_no_L1_pole(mul_L1_pow(sym("A"), -1));
    FAIL();
  } catch (const L1PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("[A]"), std::string::npos);
  }
  MClass ok = sym("A", MCoeff(LaurentPoly::monomial(1, 2) - LaurentPoly(1), 1));
  EXPECT_NO_THROW(assert_no_L1_pole(ok));
}

TEST(MClass, ModLMinusOne) {
  EXPECT_EQ(mod_L_minus_1(sym("A", L)), sym("A"));
  EXPECT_TRUE(mod_L_minus_1(sym("A", L1)).is_zero());
  EXPECT_EQ(mod_L_minus_1(sym("A", MCoeff(2) * L - MCoeff(1))), sym("A"));
  EXPECT_THROW(mod_L_minus_1(mul_L1_pow(sym("A"), -1)), L1PoleError);
}

TEST(MClass, Specialize) {
  EXPECT_EQ(specialize(sym("A"), {{"A", Rat(5)}}, Rat(2)), 5);
  EXPECT_EQ(specialize(MClass(L), {}, Rat(3)), 3);
  EXPECT_EQ(specialize(mul_L1_pow(sym("A"), -1), {{"A", Rat(1)}}, Rat(2)), 1);
  EXPECT_THROW(specialize(sym("B"), {{"A", Rat(1)}}, Rat(2)), PreconditionError);
  EXPECT_THROW(specialize(mul_L1_pow(sym("A"), -1), {{"A", Rat(1)}}, Rat(1)), L1PoleError);
}

TEST(MClass, Text) {
  EXPECT_EQ(sym("E", MCoeff::L_power(-1)).to_string(), "[E]*L^-1");
  EXPECT_EQ(sym("E", L1).to_string(), "[E]*(L - 1)");
  EXPECT_EQ((sym("A") - sym("B", L)).to_string(), "[A] - [B]*L");
  EXPECT_EQ(MClass(MCoeff(-2)).to_string(), "-2");
  EXPECT_EQ(MClass().to_string(), "0");
  EXPECT_EQ(MCoeff(1).mul_L1_pow(-2).to_string(), "(1)/(L-1)^2");
  EXPECT_EQ((L * L - MCoeff(3)).to_string(), "L^2 - 3");
  EXPECT_EQ((MClass(L1) + sym("A")).to_string(), "(L - 1) + [A]");
}

TEST(MCoeff, Parse) {
  EXPECT_EQ(parse_coeff("L-1"), L1);
  EXPECT_EQ(parse_coeff("(L-1)^2"), L1 * L1);
  EXPECT_EQ(parse_coeff("L^-1*(L - 1)"), L1.scale_L(-1));
  EXPECT_EQ(parse_coeff("1/(L-1)"), MCoeff(1).mul_L1_pow(-1));
  EXPECT_EQ(parse_coeff("(L^2-1)/(L-1)"), L + MCoeff(1));
  EXPECT_EQ(parse_coeff("-3"), MCoeff(-3));
  EXPECT_EQ(parse_coeff("2*L^2 - L + 7"), MCoeff(2) * L * L - L + MCoeff(7));
  EXPECT_THROW(parse_coeff("1/(L+1)"), ParseError);
  EXPECT_THROW(parse_coeff("L+"), ParseError);
  EXPECT_THROW(parse_coeff("x"), ParseError);
}

TEST(MCoeff, TruncatedExpansion) {
  // 1/(L-1) = L^-1 + L^-2 + ...
  auto e = MCoeff(1).mul_L1_pow(-1).truncated_expansion(-4);
  EXPECT_EQ(e, (std::map<long, Int>{{-1, 1}, {-2, 1}, {-3, 1}, {-4, 1}}));
  // L/(L-1)^2 = sum (j+1) L^(-1-j)
  e = L.mul_L1_pow(-2).truncated_expansion(-3);
  EXPECT_EQ(e, (std::map<long, Int>{{-1, 1}, {-2, 2}, {-3, 3}}));
  // an actual polynomial is reproduced exactly
  e = (L * L - MCoeff(1)).truncated_expansion(-10);
  EXPECT_EQ(e, (std::map<long, Int>{{0, -1}, {2, 1}}));
}

TEST(Properties, RingAxioms) {
  std::mt19937 rng(8);
  for (int t = 0; t < 200; ++t) {
    MClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * MClass(1), a);
  }
}

TEST(Properties, SpecializeIsHomomorphism) {
  std::mt19937 rng(9);
  std::map<std::string, Rat> table{{"A", Rat(2)}, {"B", Rat(-3)}, {"C", Rat(7, 2)}};
  // products of symbols must be in the table
  for (const char* x : {"A", "B", "C"})
    for (const char* y : {"A", "B", "C"}) {
      std::string p = symbol_product(x, y);
      table[p] = table[x] * table[y];
    }
  for (int t = 0; t < 100; ++t) {
    MClass a = random_class(rng), b = random_class(rng);
    Rat Lv(5, 3);
    ASSERT_EQ(specialize(a * b, table, Lv), specialize(a, table, Lv) * specialize(b, table, Lv));
    ASSERT_EQ(specialize(a + b, table, Lv), specialize(a, table, Lv) + specialize(b, table, Lv));
  }
}

TEST(Properties, ModLMinusOneMultiplicative) {
  std::mt19937 rng(10);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    MClass a = random_class(rng, false), b = random_class(rng, false);
    ++checked;
    ASSERT_EQ(mod_L_minus_1(a * b), mod_L_minus_1(a) * mod_L_minus_1(b));
  }
  EXPECT_GT(checked, 10);
}

TEST(Properties, TruncatedExpansionIsAdditiveAndMultiplicative) {
  std::mt19937 rng(12);
  auto trunc_mul = [](const std::map<long, Int>& x, const std::map<long, Int>& y, long lo) {
    std::map<long, Int> r;
    for (auto& [e1, c1] : x)
      for (auto& [e2, c2] : y)
        if (e1 + e2 >= lo) r[e1 + e2] += c1 * c2;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
  };
  std::uniform_int_distribution<long> coef(-3, 3), expo(-2, 2), den(0, 2);
  for (int t = 0; t < 100; ++t) {
    MCoeff a(LaurentPoly::monomial(coef(rng), expo(rng)) + LaurentPoly::monomial(coef(rng), expo(rng)),
             static_cast<unsigned>(den(rng)));
    MCoeff b(LaurentPoly::monomial(coef(rng), expo(rng)), static_cast<unsigned>(den(rng)));
    // every term of either expansion has exponent <= 2, so truncating the
    // factors at lo - 2 leaves the product exact down to lo
    const long lo = -8;
    ASSERT_EQ((a * b).truncated_expansion(lo),
              trunc_mul(a.truncated_expansion(lo - 2), b.truncated_expansion(lo - 2), lo));
  }
}
