#include <gtest/gtest.h>

#include <random>

#include "cmf/hecke.hpp"
#include "oracles.hpp"

using namespace cmf;

namespace {

QuadInt E(long x, long y) { return QuadInt(RingTag::eisen, x, y); }

QuadInt random_coprime(std::mt19937_64& rng, const HeckeCharSpec& spec, long bound) {
  for (;;) {
    auto a = oracle::random_element(rng, spec.field, bound);
    if (coprime_to_conductor(a, spec)) return a;
  }
}

}  // namespace

TEST(Hecke, Chi3Examples) {
  EXPECT_EQ(chi3(1, 0, 1), 1);
  EXPECT_EQ(chi3(2, 0, 1), -1);
  EXPECT_EQ(chi3(0, 2, 1), 1);
  EXPECT_THROW(chi3(1, 1, 1), std::domain_error);
  EXPECT_THROW(chi3(1, 0, 3), std::domain_error);
}

TEST(Hecke, PsiUnitExamples) {
  EXPECT_EQ(psi_unit(1, 0), E(1, 0));
  EXPECT_EQ(psi_unit(0, 1), E(0, 1).pow(2));
  EXPECT_EQ(psi_unit(1, 1), E(0, 1).pow(4));
  EXPECT_EQ(psi_unit(-3, 4), E(1, 0));
  EXPECT_THROW(psi_unit(2, 4), std::domain_error);
}

TEST(Hecke, CaseSelectionByWeight) {
  EXPECT_EQ(HeckeCharSpec::eisenstein(7).kase, CharCase::eisen_c1);
  EXPECT_EQ(HeckeCharSpec::eisenstein(4).kase, CharCase::eisen_c2);
  EXPECT_EQ(HeckeCharSpec::eisenstein(3).kase, CharCase::eisen_c3);
  EXPECT_EQ(HeckeCharSpec::eisenstein(5).kase, CharCase::eisen_c3);
  EXPECT_EQ(HeckeCharSpec::eisenstein(2).kase, CharCase::eisen_c4);
  EXPECT_EQ(HeckeCharSpec::eisenstein(6).kase, CharCase::eisen_c4);
  EXPECT_EQ(HeckeCharSpec::eisenstein(13).level(), 3U);
  EXPECT_EQ(HeckeCharSpec::eisenstein(10).level(), 9U);
  EXPECT_EQ(HeckeCharSpec::eisenstein(11).level(), 12U);
  EXPECT_EQ(HeckeCharSpec::eisenstein(8).level(), 36U);
  EXPECT_EQ(HeckeCharSpec::sqrtm2(5).level(), 8U);
  EXPECT_EQ(HeckeCharSpec::sqrtm2(5).nebentypus_label(), "(-8/.)");
  EXPECT_EQ(HeckeCharSpec::eisenstein(4).nebentypus_label(), "trivial");
  EXPECT_THROW(HeckeCharSpec::eisenstein(1), std::invalid_argument);
  EXPECT_THROW(HeckeCharSpec::sqrtm2(4), std::invalid_argument);
}

TEST(Hecke, CoprimeToConductorExamples) {
  EXPECT_FALSE(coprime_to_conductor(E(1, 1), HeckeCharSpec::eisenstein(4)));
  EXPECT_TRUE(coprime_to_conductor(E(1, 1), HeckeCharSpec::eisenstein(7)));
  EXPECT_TRUE(coprime_to_conductor(E(6, 10), HeckeCharSpec::eisenstein(7)));
  EXPECT_FALSE(coprime_to_conductor(E(0, 2), HeckeCharSpec::eisenstein(3)));
  EXPECT_FALSE(coprime_to_conductor(E(-1, 2), HeckeCharSpec::eisenstein(2)));
  EXPECT_THROW(coprime_to_conductor(QuadInt(RingTag::gauss, 1, 0), HeckeCharSpec::eisenstein(3)),
               std::invalid_argument);
}

TEST(Hecke, PhiEvalExamples) {
  EXPECT_EQ(phi_eval(E(0, 1), HeckeCharSpec::eisenstein(7)), E(1, 0));
  EXPECT_EQ(phi_eval(E(0, 1), HeckeCharSpec::eisenstein(3)), E(1, 0));
  EXPECT_EQ(phi_eval(E(-1, 2), HeckeCharSpec::eisenstein(3)), E(-3, 0));
  EXPECT_THROW(phi_eval(E(0, 2), HeckeCharSpec::eisenstein(3)), std::domain_error);
  EXPECT_THROW(phi_eval(E(1, 1), HeckeCharSpec::eisenstein(4)), std::domain_error);
}

namespace {

std::vector<HeckeCharSpec> all_cases() {
  return {HeckeCharSpec::eisenstein(7), HeckeCharSpec::eisenstein(4), HeckeCharSpec::eisenstein(3),
          HeckeCharSpec::eisenstein(5), HeckeCharSpec::eisenstein(2), HeckeCharSpec::eisenstein(6),
          HeckeCharSpec::sqrtm2(3),     HeckeCharSpec::sqrtm2(5)};
}

}  // namespace

TEST(Hecke, PhiIndependentOfGenerator) {
  std::mt19937_64 rng(1);
  for (const auto& spec : all_cases()) {
    const auto us = units(spec.field);
    for (int i = 0; i < 10000; ++i) {
      const auto a = random_coprime(rng, spec, 60);
      const auto& u = us[static_cast<std::size_t>(i) % us.size()];
      ASSERT_EQ(phi_eval(u * a, spec), phi_eval(a, spec)) << spec.label() << " " << a << " " << u;
    }
  }
}

TEST(Hecke, PhiMultiplicative) {
  std::mt19937_64 rng(2);
  for (const auto& spec : all_cases()) {
    for (int i = 0; i < 10000; ++i) {
      const auto a = random_coprime(rng, spec, 40);
      const auto b = random_coprime(rng, spec, 40);
      ASSERT_TRUE(coprime_to_conductor(a * b, spec));
      ASSERT_EQ(phi_eval(a * b, spec), phi_eval(a, spec) * phi_eval(b, spec)) << spec.label() << " " << a << " " << b;
    }
  }
}

TEST(Hecke, PhiOfRationalIntegerPrimeToConductor) {
  // N(Phi((n))) = n^{2(k-1)}
  for (const auto& spec : all_cases()) {
    for (long n : {1L, 5L, 7L, 11L, 13L}) {
      const QuadInt a(spec.field, n, 0);
      const auto v = phi_eval(a, spec);
      EXPECT_EQ(v.norm(), ipow(Int(n), 2 * static_cast<std::uint64_t>(spec.weight - 1)));
    }
  }
}

TEST(Hecke, EnumerateIdealsExamples) {
  const auto c1 = HeckeCharSpec::eisenstein(7);
  auto ideals = enumerate_ideals(c1, 3);
  ASSERT_EQ(ideals.size(), 2U);
  EXPECT_EQ(ideals[0].norm, 1U);
  EXPECT_EQ(ideals[1].norm, 3U);
  ideals = enumerate_ideals(c1, 7);
  EXPECT_EQ(std::count_if(ideals.begin(), ideals.end(), [](const auto& i) { return i.norm == 7; }), 2);
  const auto s = enumerate_ideals(HeckeCharSpec::sqrtm2(3), 2);
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s[1].norm, 2U);
  EXPECT_EQ(s[1].generator, QuadInt(RingTag::sqrtm2, 0, 1));
  EXPECT_THROW(enumerate_ideals(c1, 0), std::invalid_argument);
}

// In a class-number-one field of discriminant D the number of ideals of
// norm n is sum_{d | n} (D/d).
TEST(Hecke, IdealCountsMatchDivisorSum) {
  const std::pair<RingTag, int> fields[] = {{RingTag::eisen, -3}, {RingTag::sqrtm2, -8}, {RingTag::gauss, -4}};
  const std::uint64_t nmax = 3000;
  for (auto [ring, D] : fields) {
    std::vector<int> count(nmax + 1, 0);
    for (const auto& ideal : enumerate_principal_ideals(ring, nmax)) {
      ++count[ideal.norm];
      EXPECT_TRUE(in_canonical_sector(ideal.generator));
    }
    for (std::uint64_t n = 1; n <= nmax; ++n) {
      int want = 0;
      for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) want += kronecker(D, static_cast<std::int64_t>(d));
      ASSERT_EQ(count[n], want) << ring_name(ring) << " n=" << n;
    }
  }
}

TEST(Hecke, QExpansionExamples) {
  const auto f = q_expansion_ideal_sum(HeckeCharSpec::eisenstein(3), 7);
  EXPECT_EQ(f.at(1), 1);
  EXPECT_EQ(f.at(3), -3);
  EXPECT_EQ(f.at(5), 0);
  EXPECT_EQ(f.at(7), 2);
  EXPECT_EQ(f.level(), 12U);
  EXPECT_EQ(q_expansion_ideal_sum(HeckeCharSpec::eisenstein(4), 3).at(3), 0);
  const auto g = q_expansion_ideal_sum(HeckeCharSpec::sqrtm2(3), 3);
  EXPECT_EQ(g.at(2), -2);
  EXPECT_EQ(g.at(3), -2);
  EXPECT_THROW(q_expansion_ideal_sum(HeckeCharSpec::sqrtm2(3), 0), std::invalid_argument);
}

TEST(Hecke, QExpansionFirstTermsWeightThree) {
  const auto f = q_expansion_ideal_sum(HeckeCharSpec::eisenstein(3), 10);
  const std::vector<Int> want{1, 0, -3, 0, 0, 0, 2, 0, 9, 0};
  ASSERT_EQ(f.coefficients().size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(f.coefficients()[i], want[i]) << i + 1;
}
