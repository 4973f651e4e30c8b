#include <gtest/gtest.h>

#include <random>

#include "irrsemi/oracle.hpp"
#include "irrsemi/search.hpp"
#include "support/brute.hpp"

namespace irrsemi {
namespace {

DensePoly P(std::initializer_list<std::uint64_t> low_to_high) {
  std::vector<Elem> c;
  for (auto v : low_to_high) c.emplace_back(v);
  return DensePoly(c);
}

TEST(PolyArith, Examples) {
  const Field f7 = Field::make(7);
  // x^2 - 4 and x - 2
  EXPECT_EQ(poly::gcd(f7, P({3, 0, 1}), P({5, 1})), P({5, 1}));
  EXPECT_EQ(poly::rem(f7, P({0, 0, 0, 0, 1}), P({2, 0, 1})), P({4}));
  EXPECT_EQ(poly::mul(f7, P({5, 1}), P({2, 1})), P({3, 0, 1}));
  EXPECT_THROW((void)poly::rem(f7, P({1, 1}), DensePoly{}), std::domain_error);
  // gcd is monic even for non-monic inputs.
  EXPECT_EQ(poly::gcd(f7, P({6, 0, 2}), P({3, 2})), P({5, 1}));
}

TEST(PolyArith, DivRemIdentity) {
  std::mt19937_64 rng(5);
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {3, 2}, {13, 1}}) {
    const Field k = Field::make(p, e);
    for (int i = 0; i < 200; ++i) {
      const DensePoly f = testing::random_monic(k, 3 + i % 7, rng);
      const DensePoly g = testing::random_monic(k, 1 + i % 4, rng);
      const auto [q, r] = poly::divrem(k, f, g);
      ASSERT_LT(r.degree(), g.degree());
      ASSERT_EQ(poly::add(k, poly::mul(k, q, g), r), f);
    }
  }
}

TEST(Frobenius, Examples) {
  const Field f7 = Field::make(7);
  const DensePoly f = P({2, 0, 1});  // x^2 - 5
  EXPECT_EQ(frobenius_power(f7, 0, f), DensePoly::x());
  EXPECT_EQ(frobenius_power(f7, 1, f), P({0, 6}));
  EXPECT_EQ(frobenius_power(f7, 2, f), DensePoly::x());

  const Field f13 = Field::make(13);
  const GeneratorSet s(f13, {{Elem{5}, Elem{8}}});
  const DensePoly quartic = compose_word(s, {0, 0});
  EXPECT_EQ(frobenius_power(f13, 4, quartic), DensePoly::x());
  EXPECT_THROW((void)frobenius_power(f7, 1, P({1, 2})), std::invalid_argument);
}

TEST(Rabin, Examples) {
  const Field f7 = Field::make(7);
  EXPECT_TRUE(rabin_irreducible(f7, P({2, 0, 1})));
  EXPECT_FALSE(rabin_irreducible(f7, P({3, 0, 1})));
  const Field f13 = Field::make(13);
  const GeneratorSet s(f13, {{Elem{5}, Elem{8}}, {Elem{6}, Elem{8}}});
  const DensePoly quartic = compose_word(s, {0, 0});
  EXPECT_TRUE(rabin_irreducible(f13, quartic));
  EXPECT_TRUE(testing::irreducible_by_trial_division(f13, quartic));
  EXPECT_EQ(rabin_irreducible(f13, quartic), word_irreducible(s, {0, 0}));

  EXPECT_THROW((void)rabin_irreducible(f7, P({1, 2})), std::invalid_argument);
  EXPECT_THROW((void)rabin_irreducible(f7, P({3})), std::invalid_argument);
  EXPECT_TRUE(rabin_irreducible(f7, P({3, 1})));
}

// x^4 + 1 = (x^2 + x + 2)(x^2 + 2x + 2) over F_3 has no roots.
TEST(Rabin, DetectsRootlessReducible) {
  const Field f3 = Field::make(3);
  const DensePoly f = P({1, 0, 0, 0, 1});
  EXPECT_FALSE(rabin_irreducible(f3, f));
  EXPECT_FALSE(testing::irreducible_by_trial_division(f3, f));
}

TEST(Rabin, AgreesWithTrialDivisionExhaustively) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {7, 1}, {3, 2}}) {
    const Field k = Field::make(p, e);
    for (std::size_t d = 1; d <= 4; ++d) {
      testing::for_each_monic(k, d, [&](const DensePoly& f) {
        ASSERT_EQ(rabin_irreducible(k, f), testing::irreducible_by_trial_division(k, f)) << "q=" << k.q();
      });
    }
  }
}

TEST(Rabin, AgreesWithTrialDivisionOnSamples) {
  std::mt19937_64 rng(99);
  struct Case {
    std::uint64_t p;
    unsigned e;
    std::size_t max_degree;
  };
  // Degree caps keep trial division (all monic divisors up to degree n/2) cheap.
  for (const Case c : {Case{3, 1, 16}, Case{5, 1, 10}, Case{7, 1, 8}, Case{3, 2, 8}, Case{11, 1, 6}, Case{13, 1, 6}}) {
    const Field k = Field::make(c.p, c.e);
    for (int i = 0; i < 60; ++i) {
      const std::size_t d = 2 + static_cast<std::size_t>(i) % (c.max_degree - 1);
      const DensePoly f = testing::random_monic(k, d, rng);
      ASSERT_EQ(rabin_irreducible(k, f), testing::irreducible_by_trial_division(k, f)) << "q=" << k.q() << " deg " << d;
      // A product of two nonconstant factors is never irreducible.
      const DensePoly g = poly::mul(k, testing::random_monic(k, 1 + i % 3, rng), testing::random_monic(k, 1 + i % 5, rng));
      ASSERT_FALSE(rabin_irreducible(k, g));
    }
  }
}

TEST(Rabin, CountsIrreducibleQuadratics) {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    const Field k = Field::make(p, e);
    std::uint64_t count = 0;
    testing::for_each_monic(k, 2, [&](const DensePoly& f) { count += rabin_irreducible(k, f) ? 1 : 0; });
    EXPECT_EQ(count, (k.q() * k.q() - k.q()) / 2) << "q=" << k.q();
  }
}

TEST(Crosscheck, MotivatingExampleDepth4) {
  const GeneratorSet s(Field::make(13), {{Elem{5}, Elem{8}}, {Elem{6}, Elem{8}}});
  const CrosscheckReport r = crosscheck(s, 4);
  EXPECT_EQ(r.words, 30U);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.irreducible_per_length, (std::map<std::size_t, std::size_t>{{1, 2}, {2, 4}, {3, 8}, {4, 16}}));
}

TEST(Crosscheck, PropositionPairDepth2) {
  const GeneratorSet s(Field::make(7), {{Elem{0}, Elem{3}}, {Elem{0}, Elem{5}}});
  const CrosscheckReport r = crosscheck(s, 2);
  EXPECT_EQ(r.words, 6U);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(word_irreducible(s, {0, 1}));
  EXPECT_FALSE(rabin_irreducible(s.field(), compose_word(s, {0, 1})));
  EXPECT_GE(r.reducible_per_length.at(2), 1U);
}

TEST(Crosscheck, DepthOneIsEulerCriterion) {
  const Field k = Field::make(3, 2);
  const auto qs = quadratics(k);
  const GeneratorSet s(k, std::vector<MonicQuadratic>(qs.begin(), qs.begin() + 20));
  const CrosscheckReport r = crosscheck(s, 1);
  EXPECT_TRUE(r.ok());
  std::size_t irreducible = 0;
  for (const auto& f : s.gens()) irreducible += is_irreducible_quadratic(k, f) ? 1 : 0;
  EXPECT_EQ(r.irreducible_per_length.at(1), irreducible);
  EXPECT_THROW((void)crosscheck(s, 0), std::invalid_argument);
}

TEST(ForEachWord, LexicographicOrder) {
  std::vector<Word> seen;
  for_each_word(2, 2, [&](const Word& w) { seen.push_back(w); });
  EXPECT_EQ(seen, (std::vector<Word>{{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

}  // namespace
}  // namespace irrsemi
