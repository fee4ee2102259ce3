#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"

using namespace motzeta;
using namespace motzeta::testing;

namespace {

SncdData single(long N, std::optional<long> mu, std::optional<long> nu, long m = 1) {
  SncdData d;
  d.m = m;
  d.components.push_back(SncdComponent{"E", N, mu, nu});
  d.strata.push_back(SncdStratum{{"E"}, "E"});
  return d;
}

MClass L1() { return MClass(MCoeff(LaurentPoly::L_minus_1())); }

ZSeries frac(long a, long b) { return ZSeries::term(MClass(MCoeff::L_power(a)), b, {Denom{a, b}}); }

// Coefficient of T^d by direct enumeration of k_j >= 1 with sum k_j N_j = d.
MClass sncd_brute_force(const SncdData& d, long D, long deg) {
  MClass total;
  std::map<std::string, SncdComponent> by_id;
  for (const auto& c : d.components) by_id[c.id] = c;
  for (const SncdStratum& s : d.strata) {
    std::vector<SncdComponent> cs;
    for (const auto& id : s.J) cs.push_back(by_id[id]);
    LaurentPoly acc;
    std::vector<long> k(cs.size(), 1);
    std::function<void(std::size_t, long, long)> rec = [&](std::size_t j, long t, long l) {
      if (j == cs.size()) {
        if (t == deg) acc = acc + LaurentPoly::monomial(1, l);
        return;
      }
      for (long kj = 1; t + kj * cs[j].N <= D; ++kj) rec(j + 1, t + kj * cs[j].N, l - kj * *cs[j].mu);
    };
    rec(0, 0, -d.m);
    MClass c = MClass::symbol(s.symbol, MCoeff(acc * LaurentPoly::L_minus_1().pow(s.J.size() - 1)));
    total += c;
  }
  return total;
}

}  // namespace

TEST(Sncd, Examples) {
  ZSeries s = sncd_poincare(single(1, 0, std::nullopt, 1));
  EXPECT_EQ(s, ZSeries::term(MClass::symbol("E", MCoeff::L_power(-1)), 1, {Denom{0, 1}}));
  EXPECT_EQ(s.to_string(), "[E]*L^-1*T/(1-T)");

  SncdData two;
  two.m = 2;
  two.components = {SncdComponent{"1", 2, 1, std::nullopt}, SncdComponent{"2", 3, -1, std::nullopt}};
  two.strata = {SncdStratum{{"1", "2"}, "E12"}};
  ZSeries expected = (frac(-1, 2) * frac(1, 3)).scale(MClass::symbol("E12") * L1()).scale(MClass(MCoeff::L_power(-2)));
  EXPECT_EQ(sncd_poincare(two), expected);

  SncdData bad = two;
  bad.strata.push_back(SncdStratum{{"3"}, "X"});
  EXPECT_THROW(sncd_poincare(bad), PreconditionError);
  EXPECT_THROW(sncd_poincare(single(1, std::nullopt, 1)), PreconditionError);
}

TEST(Sncd, ExpansionMatchesEnumeration) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    SncdData d = random_sncd(rng, 1 + trial % 3, false);
    std::vector<MClass> co = expand(sncd_poincare(d), 10);
    for (long deg = 1; deg <= 10; ++deg) EXPECT_EQ(co[deg - 1], sncd_brute_force(d, 10, deg));
  }
}

TEST(DlZeta, Examples) {
  ZSeries z = dl_zeta(single(1, std::nullopt, 1));
  EXPECT_EQ(z.to_string(), "[E]*L^-1*T/(1-L^-1*T)");
  EXPECT_EQ(candidate_poles(dl_zeta(single(2, std::nullopt, 3))), (PoleSet{Rat(-3, 2)}));
  EXPECT_THROW(dl_zeta(single(1, 0, std::nullopt)), PreconditionError);
}

TEST(DlZeta, RelationToPoincare) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    SncdData d = random_sncd(rng, 1 + trial % 4, true);
    SncdData shifted = d;
    for (auto& c : shifted.components) c.mu = *c.nu - c.N;
    ZSeries rhs = subst_T_L(sncd_poincare(shifted), -1).scale(MClass(MCoeff::L_power(d.m)));
    EXPECT_TRUE(equal(dl_zeta(d), rhs));
  }
}

TEST(NearbyFibre, Examples) {
  EXPECT_EQ(nearby_fibre(dl_zeta(single(1, std::nullopt, 1))), MClass::symbol("E"));
  EXPECT_TRUE(nearby_fibre(ZSeries()).is_zero());
  SncdData d;
  d.components = {SncdComponent{"1", 1, std::nullopt, 1}, SncdComponent{"2", 2, std::nullopt, 3}};
  d.strata = {SncdStratum{{"1"}, "A"}, SncdStratum{{"2"}, "B"}, SncdStratum{{"1", "2"}, "C"}};
  MClass one_minus_L = MClass(MCoeff(LaurentPoly(1) - LaurentPoly::monomial(1, 1)));
  MClass expected = MClass::symbol("A") + MClass::symbol("B") + MClass::symbol("C") * one_minus_L;
  EXPECT_EQ(nearby_fibre(dl_zeta(d)), expected);
  EXPECT_EQ(sncd_nearby_fibre(d), expected);
}

TEST(FanModel, SingleRay) {
  ConeComplex K = ConeComplex::from_cones(1, {cone_from_rays(1, {make_vec({1})})});
  for (long N : {1L, 2L}) {
    for (long mu : {0L, 3L}) {
      FanModel f = make_fan_model(K, {{K.cells().back(), MClass::symbol("C")}}, {make_vec({N})}, {make_vec({mu})});
      for (long m : {0L, 2L}) {
        ZSeries expected = frac(-mu, N).scale(MClass::symbol("C", MCoeff::L_power(-m)));
        EXPECT_EQ(fan_poincare(f, m), expected);
      }
      PoleSet poles{Rat(-mu) / N};
      EXPECT_EQ(fan_poles(f), poles);
    }
  }
}

TEST(FanModel, PolesOfTwoRays) {
  ConeComplex K = ConeComplex::from_cones(2, {cone_from_rays(2, {make_vec({1, 0}), make_vec({0, 1})})});
  FanModel f = make_fan_model(K, {}, {make_vec({1, 6})}, {make_vec({1, 5})});
  EXPECT_EQ(fan_poles(f), (PoleSet{Rat(-1), Rat(-5, 6)}));
}

TEST(FanModel, SncdAgreement) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    SncdData d = random_sncd(rng, 1 + trial % 3, false);
    FanModel f = sncd_to_fanmodel(d);
    EXPECT_TRUE(validate_model(f).empty());
    EXPECT_TRUE(equal(fan_poincare(f, d.m), sncd_poincare(d)));
    for (std::size_t i = 0; i < d.components.size(); ++i)
      EXPECT_EQ(dot(f.e_vec[0], unit(d.components.size(), i)), d.components[i].N);
  }
}

TEST(FanModel, SncdToFanShape) {
  SncdData d;
  d.components = {SncdComponent{"1", 1, 0, std::nullopt}, SncdComponent{"2", 2, 1, std::nullopt}};
  d.strata = {SncdStratum{{"1"}, "A"}, SncdStratum{{"2"}, "B"}, SncdStratum{{"1", "2"}, "C"}};
  FanModel f = sncd_to_fanmodel(d);
  EXPECT_EQ(f.complex.ambient_rank(), 2u);
  EXPECT_EQ(f.complex.cells().size(), 4u);
  EXPECT_EQ(f.complex.maximal_cells().size(), 1u);
  SncdData one = single(2, 3, std::nullopt);
  FanModel g = sncd_to_fanmodel(one);
  EXPECT_EQ(g.complex.rays(), (std::vector<IntVec>{make_vec({1})}));
  EXPECT_EQ(fan_poles(g), (PoleSet{Rat(-3, 2)}));
}

TEST(Transport, IdentityAndStar) {
  SncdData d;
  d.m = 1;
  d.components = {SncdComponent{"1", 1, 0, std::nullopt}, SncdComponent{"2", 1, 0, std::nullopt}};
  d.strata = {SncdStratum{{"1"}, "A"}, SncdStratum{{"2"}, "B"}, SncdStratum{{"1", "2"}, "C"}};
  FanModel f = sncd_to_fanmodel(d);
  FanModel same = transport_subdivide(f, f.complex);
  EXPECT_EQ(same.complex, f.complex);
  EXPECT_EQ(same.weight, f.weight);
  EXPECT_EQ(same.e_vec, f.e_vec);
  FanModel g = subdivide_model(f, make_vec({1, 1}));
  EXPECT_EQ(g.complex.cells().size(), 6u);
  MClass wC = MClass::symbol("C") * L1();
  for (std::size_t i = 0; i < g.complex.cells().size(); ++i) {
    const Cone& c = g.complex.cells()[i];
    if (c.relint_contains(make_vec({1, 1})) || c.dim() == 2) EXPECT_EQ(g.weight[i], wC);
  }
  EXPECT_TRUE(equal(fan_poincare(g, 1), fan_poincare(f, 1)));
  ConeComplex other = ConeComplex::from_cones(2, {cone_from_rays(2, {make_vec({1, 0}), make_vec({1, 1})})});
  EXPECT_THROW(transport_subdivide(f, other), PreconditionError);
}

TEST(Transport, ResolveSingularModel) {
  ConeComplex K = ConeComplex::from_cones(2, {cone_from_rays(2, {make_vec({1, 0}), make_vec({1, 3})})});
  std::map<Cone, MClass> w;
  for (const Cone& c : K.cells())
    if (c.dim() > 0) w[c] = MClass::symbol("U" + std::to_string(c.dim()), MCoeff(LaurentPoly::L_minus_1().pow(c.dim() - 1)));
  FanModel f = make_fan_model(K, w, {make_vec({1, 1})}, {make_vec({2, -1})});
  ASSERT_TRUE(validate_model(f).empty());
  FanModel g = resolve_model(f);
  for (const Cone& c : g.complex.cells()) EXPECT_TRUE(c.is_smooth());
  EXPECT_TRUE(equal(fan_poincare(g, 0), fan_poincare(f, 0)));
}

TEST(Transport, RandomSubdivisionInvariance) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> coef(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    FanModel f = random_fan_model(rng, 1 + trial % 3);
    ZSeries base = fan_poincare(f, 1);
    const Cone& c = f.complex.cells()[f.complex.maximal_cells()[0]];
    IntVec rho = zero_vec(f.ambient_rank());
    for (const IntVec& v : c.rays()) rho = add(rho, scaled(v, Int(coef(rng))));
    if (is_zero(rho)) rho = c.rays()[0];
    FanModel g = subdivide_model(f, primitive(rho));
    EXPECT_TRUE(validate_model(g).empty());
    EXPECT_TRUE(equal(fan_poincare(g, 1), base));
    FanModel h = resolve_model(f);
    EXPECT_TRUE(equal(fan_poincare(h, 1), base));
    for (const Rat& q : candidate_poles(base)) EXPECT_TRUE(fan_poles(f).count(q));
  }
}

TEST(Validate, Diagnostics) {
  ConeComplex K = ConeComplex::from_cones(2, {cone_from_rays(2, {make_vec({1, 0}), make_vec({0, 1})})});
  std::map<Cone, MClass> w{{K.cells().back(), MClass::symbol("U") * L1()}};
  FanModel bad = make_fan_model(K, w, {make_vec({1, 0})}, {make_vec({1, 2})});
  auto diag = validate_model(bad);
  ASSERT_EQ(diag.size(), 1u);
  EXPECT_NE(diag[0].find("ordFeta"), std::string::npos);
  EXPECT_THROW(fan_poincare(bad, 0), ValidationError);

  FanModel neg = make_fan_model(K, w, {make_vec({1, -1})}, {make_vec({1, 1})});
  EXPECT_FALSE(validate_model(neg).empty());

  ConeComplex K2 = ConeComplex::from_cones(2, {cone_from_rays(2, {make_vec({1, 0}), make_vec({1, 1})}),
                                               cone_from_rays(2, {make_vec({1, 1}), make_vec({0, 1})})});
  FanModel incons = make_fan_model(K2, {}, {make_vec({1, 1}), make_vec({3, 0})}, {make_vec({1, 1}), make_vec({1, 1})});
  diag = validate_model(incons);
  ASSERT_FALSE(diag.empty());
  EXPECT_NE(diag[0].find("face-consistency"), std::string::npos);

  ConeComplex K3 = ConeComplex::from_cones(2, {cone_from_rays(2, {make_vec({1, 0}), make_vec({1, 2})})});
  FanModel sing = make_fan_model(K3, {}, {make_vec({0, 0})}, {make_vec({1, 1})});
  diag = validate_model(sing);
  ASSERT_EQ(diag.size(), 1u);
  EXPECT_NE(diag[0].find("equivReg"), std::string::npos);

  std::mt19937 rng(1);
  EXPECT_TRUE(validate_model(sncd_to_fanmodel(random_sncd(rng, 3, false))).empty());
}

TEST(FanPoincare, PolePolicy) {
  ConeComplex K = ConeComplex::from_cones(2, {cone_from_rays(2, {make_vec({1, 0}), make_vec({0, 1})})});
  std::map<Cone, MClass> w{{K.cells().back(), MClass::symbol("U")}};
  FanModel f = make_fan_model(K, w, {make_vec({1, 0})}, {make_vec({1, 1})});
  EXPECT_THROW(fan_poincare(f, 0), L1PoleError);
  ZSeries s = fan_poincare(f, 0, PolePolicy::Allow);
  EXPECT_TRUE(equal(s.scale(L1()), frac(-1, 1).scale(MClass::symbol("U"))));
}

TEST(Transport, PiecewiseFunctionals) {
  Cone A = cone_from_rays(2, {make_vec({1, 0}), make_vec({1, 1})});
  Cone B = cone_from_rays(2, {make_vec({1, 1}), make_vec({0, 1})});
  ConeComplex K = ConeComplex::from_cones(2, {A, B});
  std::map<Cone, MClass> w;
  for (const Cone& c : K.cells())
    if (c.dim() > 0) w[c] = MClass::symbol("V" + to_string(c.interior_vector()), MCoeff(LaurentPoly::L_minus_1().pow(c.dim() - 1)));
  std::vector<IntVec> e(2), a(2);
  auto maxi = K.maximal_cells();
  for (std::size_t p = 0; p < 2; ++p) {
    bool isA = K.cells()[maxi[p]] == A;
    e[p] = isA ? make_vec({1, 0}) : make_vec({0, 1});
    a[p] = make_vec({1, 1});
  }
  FanModel f = make_fan_model(K, w, e, a);
  ASSERT_TRUE(validate_model(f).empty());
  ZSeries base = fan_poincare(f, 0);
  for (const IntVec& rho : {make_vec({1, 2}), make_vec({2, 1}), make_vec({3, 1})}) {
    FanModel g = subdivide_model(f, rho);
    EXPECT_TRUE(validate_model(g).empty());
    EXPECT_TRUE(equal(fan_poincare(g, 0), base));
  }
  EXPECT_EQ(fan_poles(f), (PoleSet{Rat(-1), Rat(-2)}));
}
