#include <gtest/gtest.h>

#include "bianchi/sampling.hpp"
#include "bianchi/variety.hpp"

using namespace bianchi;
using bianchi::sampling::Engine;

namespace {

Mat3 diag(Rational a, Rational b, Rational c) {
  Mat3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

StructureTensor sym(Rational a, Rational b, Rational c) { return StructureTensor(diag(a, b, c)); }

const std::vector<Rational>& quarter_ts() {
  static const std::vector<Rational> ts{0, frac(1, 4), frac(1, 2), frac(3, 4), 1};
  return ts;
}

}  // namespace

TEST(Variety, SphereExample) {
  const CompatibilityVariety v(sym(1, 1, 1));
  EXPECT_EQ(v.z2_basis().size(), 6u);
  Engine rng(11);
  for (int i = 0; i < 50; ++i) {
    const Mat3 s = sampling::random_symmetric(rng);
    EXPECT_TRUE(v.member(StructureTensor(s)));
    EXPECT_FALSE(v.member(StructureTensor(s) + charge(i % 3)));
  }
}

TEST(Variety, RankTwoExamples) {
  const CompatibilityVariety v(sym(1, 1, 0));
  Mat3 half_dx1x2;
  half_dx1x2(0, 1) = half_dx1x2(1, 0) = frac(1, 2);
  EXPECT_TRUE(v.member(sym(0, 0, 1)));
  EXPECT_TRUE(v.member(charge(2) + StructureTensor(half_dx1x2)));
  EXPECT_FALSE(v.member(charge(0)));
  EXPECT_FALSE(v.member(charge(2) + sym(0, 0, 1)));
}

TEST(Variety, ZeroBase) {
  const CompatibilityVariety v{StructureTensor()};
  Engine rng(12);
  for (int i = 0; i < 50; ++i) {
    const StructureTensor q = sampling::random_candidate(rng);
    EXPECT_EQ(v.member(q), is_lie(q));
  }
}

TEST(Variety, BaseNotLie) { EXPECT_THROW(compatibility_variety(sym(1, 0, 0) + charge(0)), NotLie); }

TEST(Variety, ConicAndContainsBase) {
  Engine rng(13);
  for (int i = 0; i < 40; ++i) {
    const StructureTensor c = sampling::random_lie(rng);
    const CompatibilityVariety v(c);
    EXPECT_TRUE(v.member(c));
    for (int k = 0; k < 10; ++k) {
      const StructureTensor q =
          k % 2 ? sampling::random_lie(rng) : StructureTensor(sampling::random_symmetric(rng)) + charge(k % 3);
      if (!v.member(q)) continue;
      for (const Rational& r : {Rational(2), Rational(-1), frac(1, 3)}) EXPECT_TRUE(v.member(r * q));
    }
  }
}

TEST(Variety, SegmentCharacterization) {
  Engine rng(14);
  int members = 0;
  for (int i = 0; i < 300; ++i) {
    const StructureTensor c = sampling::random_lie(rng);
    const StructureTensor d = i % 3 ? sampling::random_lie(rng) : sampling::random_candidate(rng);
    const bool m = CompatibilityVariety(c).member(d);
    members += m;
    EXPECT_EQ(m, is_lie(c + d) && is_lie(d));
  }
  EXPECT_GT(members, 0);
}

TEST(Variety, NonUnimodularMeetsSymmetricInS2) {
  // Lie(V,c) ^ Lie_0(V) = s^2 for the B normal forms
  std::vector<linalg::RowVector> s2;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = i; j < 2; ++j) {
      Mat3 m;
      m(i, j) = m(j, i) = 1;
      s2.push_back(StructureTensor(m).coords());
    }
  Engine rng(15);
  for (const Mat3& s : {Mat3(), diag(1, 0, 0), diag(1, 1, 0), diag(1, -1, 0), diag(1, 3, 0)}) {
    const CompatibilityVariety v(StructureTensor(s) + charge(2));
    for (const auto& b : s2) EXPECT_TRUE(v.member(StructureTensor::from_coords(b)));
    for (int k = 0; k < 50; ++k) {
      const StructureTensor g(sampling::random_symmetric(rng));
      EXPECT_EQ(v.member(g), linalg::in_span(s2, g.coords(), 9));
    }
  }
}

TEST(Normalize, Examples) {
  const NormalizedStructure b0 = normalize(Rational(5) * charge(0));
  EXPECT_EQ(b0.form, charge(2));
  const NormalizedStructure b1 = normalize(sym(0, 0, 3) + Rational(-2) * charge(1));
  EXPECT_EQ(b1.form, sym(1, 0, 0) + charge(2));
  const NormalizedStructure b2 = normalize(sym(2, 0, 3) + charge(1));
  EXPECT_EQ(b2.form.q()(2, 2), 0);
  EXPECT_EQ(b2.form.q()(0, 0), 1);
  EXPECT_EQ(b2.form, sym(1, *b2.type.rho, 0) + charge(2));
  EXPECT_EQ(normalize(sym(0, 4, 0)).form, sym(1, 0, 0));
}

TEST(Normalize, FormIsTheActionOfPsi) {
  Engine rng(16);
  for (int i = 0; i < 300; ++i) {
    const StructureTensor q = i % 2 ? sampling::random_lie(rng) : act(sampling::random_gl(rng), sampling::random_lie(rng));
    const NormalizedStructure n = normalize(q);
    ASSERT_NE(determinant(n.psi), 0);
    EXPECT_EQ(act(GLTransform(n.psi), q), n.form);
    EXPECT_EQ(classify(n.form), classify(q));
    const Disassembling d = disassemble(n.form);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) {
          EXPECT_EQ(d.S(a, b), 0);
        }
    if (!classify(q).unimodular()) {
      EXPECT_EQ(d.a, (Vec3{0, 0, 1}));
      EXPECT_EQ(d.S(2, 2), 0);
    }
  }
}

TEST(Strata, NormalFormTables) {
  struct Row {
    StructureTensor q;
    std::vector<std::optional<int>> dims;
  };
  const std::vector<Row> rows{
      {StructureTensor(), {3, 2, 1, 0}},
      {sym(1, 0, 0), {2, 2, 1, 1, 0}},
      {sym(1, -1, 0), {1, 1, 0}},
      {sym(1, 1, 0), {1, 1, 0}},
      {sym(1, 1, 1), {0, 0}},
      {charge(2), {3, 2, 1, std::nullopt}},
      {sym(1, 0, 0) + charge(2), {2, 2, 1, 1, std::nullopt}},
      {sym(1, 1, 0) + charge(2), {1, 1, 1, std::nullopt}},
      {sym(1, -1, 0) + charge(2), {1, 1, 1, 0, std::nullopt}},
  };
  for (const auto& row : rows) {
    const StratReport rep = strat_report(row.q);
    ASSERT_EQ(rep.strata.size(), row.dims.size()) << rep.type.name();
    for (std::size_t i = 0; i < row.dims.size(); ++i) {
      EXPECT_EQ(rep.strata[i].computed, row.dims[i]) << rep.type.name() << " " << rep.strata[i].label;
      EXPECT_EQ(rep.strata[i].expected, row.dims[i]) << rep.type.name() << " " << rep.strata[i].label;
    }
    EXPECT_TRUE(rep.consistent());
  }
}

TEST(Strata, FiberOverOriginIsTheKernel) {
  Engine rng(17);
  for (int i = 0; i < 100; ++i) {
    const StructureTensor q = sampling::random_lie(rng);
    const Disassembling d = disassemble(q);
    EXPECT_EQ(zeta_fiber_dim(q, Mat3()), std::optional<int>(static_cast<int>(3 - matrix_rank(d.S))));
  }
}

TEST(Strata, ConsistentOnRandomStructures) {
  Engine rng(18);
  int reported = 0;
  for (int i = 0; i < 200; ++i) {
    const StructureTensor q = act(sampling::random_gl(rng), sampling::random_lie(rng));
    try {
      EXPECT_TRUE(strat_report(q).consistent()) << classify(q).name();
      ++reported;
    } catch (const UnsupportedForm&) {
      EXPECT_EQ(classify(q).name(), "B2-");
    }
  }
  EXPECT_GT(reported, 150);
}

TEST(Strata, IrrationalIsotropicVectorRejected) {
  EXPECT_THROW(strat_report(sym(1, -2, 0) + charge(2)), UnsupportedForm);
}

TEST(Deform, Examples) {
  const StructureTensor b1 = sym(1, 0, 0) + charge(2);
  const DeformationPath p = deform(b1, sym(1, 0, 0), {frac(1, 2), 1});
  EXPECT_EQ(p.samples[0].type.name(), "B1");
  EXPECT_EQ(p.samples[1].type.name(), "A1");

  const DeformationPath c = deform(b1, b1, quarter_ts());
  for (const auto& s : c.samples) EXPECT_EQ(s.type, c.samples.front().type);

  const DeformationPath a = deform(sym(1, 1, 0), sym(1, 1, 1), {0, frac(1, 2), 1});
  EXPECT_EQ(a.samples[0].type.name(), "A2+");
  EXPECT_EQ(a.samples[1].type.name(), "A3+");
  EXPECT_EQ(a.samples[2].type.name(), "A3+");
}

TEST(Deform, IncompatibleDirection) {
  try {
    deform(sym(1, 0, 0), charge(0), quarter_ts());
    FAIL() << "expected IncompatibleDirection";
  } catch (const IncompatibleDirection& e) {
    EXPECT_EQ(e.pairing, (Vec3{2, 0, 0}));
  }
  EXPECT_THROW(deform(sym(1, 0, 0) + charge(0), sym(1, 0, 0), quarter_ts()), NotLie);
}

TEST(Deform, JacobiAlongTheLine) {
  Engine rng(19);
  int paths = 0;
  for (int i = 0; i < 400 && paths < 40; ++i) {
    const StructureTensor c = sampling::random_lie(rng);
    const StructureTensor d = sampling::random_lie(rng);
    if (!is_zero(compat_pairing(c, d))) continue;
    ++paths;
    std::vector<Rational> ts;
    for (int k = 0; k < 20; ++k) ts.push_back(sampling::random_rational(rng, 5));
    EXPECT_NO_THROW(deform(c, d, ts));
  }
  EXPECT_GT(paths, 10);
}

TEST(Contraction, Verdicts) {
  const StructureTensor e11 = sym(1, 0, 0);
  const DeformationPath b1 = deform(e11, e11 + charge(2), quarter_ts());
  EXPECT_EQ(contraction_verdict(b1), ContractionVerdict::contraction);
  EXPECT_TRUE(is_contraction(b1));
  EXPECT_EQ(b1.samples.front().type.name(), "A1");

  const DeformationPath constant = deform(e11, e11, quarter_ts());
  EXPECT_FALSE(is_contraction(constant));

  for (const int sign : {1, -1}) {
    const StructureTensor c0 = sym(1, sign, 0);
    const DeformationPath b2 = deform(c0, c0 + charge(2), quarter_ts());
    EXPECT_EQ(contraction_verdict(b2), ContractionVerdict::stratum_crossing);
    EXPECT_THROW(is_contraction(b2), StratumCrossing);
    EXPECT_EQ(b2.samples.front().type.name(), sign > 0 ? "A2+" : "A2-");
    // rho = sign / t^2 at t = 1/2
    EXPECT_EQ(*b2.samples[2].type.rho, Rational(4 * sign));
  }
}

TEST(Contraction, NeedsEnoughSamples) {
  const StructureTensor e11 = sym(1, 0, 0);
  EXPECT_THROW(contraction_verdict(deform(e11, e11 + charge(2), {0, 1})), DomainError);
  EXPECT_THROW(contraction_verdict(deform(e11, e11 + charge(2), {frac(1, 2), 1})), DomainError);
}

TEST(Strata, B1ChargeAlongX1X3MustVanish) {
  const StructureTensor c = sym(1, 0, 0) + charge(2);
  Engine rng(24);
  for (int i = 0; i < 100; ++i) {
    Mat3 g;
    g(0, 0) = sampling::random_entry(rng);
    g(1, 1) = sampling::random_entry(rng);
    g(0, 1) = g(1, 0) = sampling::random_entry(rng);
    const Rational a = sampling::random_entry(rng);
    g(0, 2) = g(2, 0) = a;
    EXPECT_EQ(zeta_fiber_dim(c, g).has_value(), a.is_zero());
  }
}

TEST(Strata, B2MixedTermsSatisfyTheQuadric) {
  // nonempty fiber over c_G + e d(x1x3) + f d(x2x3) forces f^2 + rho e^2 = 0
  Engine rng(25);
  for (const Rational& rho : {Rational(1), Rational(-1), Rational(4), Rational(-9)}) {
    const StructureTensor c = sym(1, rho, 0) + charge(2);
    int nonempty_mixed = 0;
    for (int e = -3; e <= 3; ++e)
      for (int f = -6; f <= 6; ++f) {
        // c_G = 0 on half of the grid so that the isotropic points are hit
        Mat3 g;
        if ((e + f) % 2) {
          g(0, 0) = sampling::random_entry(rng);
          g(1, 1) = sampling::random_entry(rng);
          g(0, 1) = g(1, 0) = sampling::random_entry(rng);
        }
        g(0, 2) = g(2, 0) = e;
        g(1, 2) = g(2, 1) = f;
        const bool nonempty = zeta_fiber_dim(c, g).has_value();
        if (nonempty) {
          EXPECT_EQ(Rational(f * f) + rho * Rational(e * e), 0) << e << " " << f;
        }
        nonempty_mixed += nonempty && (e != 0 || f != 0);
      }
    EXPECT_EQ(nonempty_mixed > 0, rho.sign() < 0);
  }
}
