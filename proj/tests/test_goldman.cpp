#include <gtest/gtest.h>

#include "hgl/goldman.hpp"
#include "support.hpp"

using namespace hgl;

namespace {

AlgebraVector random_vector(const GroupSpec& spec, std::mt19937_64& rng, std::size_t terms) {
  AlgebraVector a;
  for (std::size_t i = 0; i < terms; ++i)
    a.add_term(oracle::random_element(spec, rng, 3), Rational(static_cast<long>(rng() % 9) - 4) / Rational(1 + rng() % 3));
  return a;
}

}  // namespace

TEST(Bracket, BasicValues) {
  const auto s = GroupSpec::surface(1, 0);
  const auto x = s.element({1, 0}), y = s.element({0, 1});
  EXPECT_EQ(bracket(AlgebraVector::basis(x), AlgebraVector::basis(y)), AlgebraVector::basis(s.element({1, 1})));
  EXPECT_TRUE(bracket(AlgebraVector::basis(x), AlgebraVector::basis(x)).is_zero());
  EXPECT_TRUE(bracket(AlgebraVector::basis(x), AlgebraVector::basis(s.element({3, 0}))).is_zero());
}

TEST(Bracket, NoZeroTermsAndScalarsAreNotElements) {
  const auto s = GroupSpec::surface(1, 0);
  const auto u = s.element({1, 0});
  AlgebraVector a = AlgebraVector::basis(u, 2);
  a.add_term(u, -2);
  EXPECT_TRUE(a.is_zero());
  EXPECT_FALSE(AlgebraVector::basis(u, 2) == AlgebraVector::basis(scalar_mul(2, u)));
}

TEST(Bracket, SkewAndJacobiOnRandomSpecs) {
  std::mt19937_64 rng(21);
  for (int s = 0; s < 6; ++s) {
    const auto spec = oracle::random_spec(rng);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_vector(spec, rng, 1 + rng() % 3);
      const auto b = random_vector(spec, rng, 1 + rng() % 3);
      const auto c = random_vector(spec, rng, 1 + rng() % 3);
      EXPECT_EQ(bracket(a, b), -bracket(b, a));
      const auto j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
      EXPECT_TRUE(j.is_zero());
    }
  }
}

TEST(KMap, Values) {
  const GroupSpec t(3, IntMatrix{{0, 0, 2}}, IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  const auto u = t.element({2, -1, 1});
  EXPECT_TRUE(k_map(t, AlgebraVector::basis(scalar_mul(2, u)) - AlgebraVector::basis(u, 2)).is_zero());
  EXPECT_TRUE(k_map(t, AlgebraVector::basis(t.generator(2))).is_zero());
  const auto s = GroupSpec::surface(1, 0);
  const auto k = k_map(s, AlgebraVector::basis(s.element({1, 0})) + AlgebraVector::basis(s.element({0, 1})));
  // the image of (1,0)+(0,1) in Q (x) H is the element (1,1)
  EXPECT_EQ(k, k_map(s, AlgebraVector::basis(s.element({1, 1}))));
  EXPECT_FALSE(k.is_zero());
}

TEST(KMap, GkMembership) {
  const auto s = GroupSpec::surface(1, 2);
  const auto u = s.element({1, 0, 0, 0}), z = s.element({0, 0, 1, 0});
  const auto first = AlgebraVector::basis(scalar_mul(2, u)) - AlgebraVector::basis(u, 2);
  const auto second =
      AlgebraVector::basis(z - scalar_mul(2, u)) - AlgebraVector::basis(z - u, 2) + AlgebraVector::basis(z);
  EXPECT_TRUE(in_gk(s, first));
  EXPECT_TRUE(in_gk(s, second));
  EXPECT_FALSE(in_gk(s, AlgebraVector::basis(u)));
}

TEST(KMap, BracketImageAndSubalgebra) {
  std::mt19937_64 rng(4);
  for (int s = 0; s < 6; ++s) {
    const auto spec = oracle::random_spec(rng);
    for (int t = 0; t < 80; ++t) {
      const auto x = oracle::random_element(spec, rng, 3), y = oracle::random_element(spec, rng, 3);
      // K([x],[y]) = <x,y> K([x+y]): K is not a homomorphism to an abelian algebra
      EXPECT_EQ(k_map(spec, bracket(AlgebraVector::basis(x), AlgebraVector::basis(y))),
                k_map(spec, AlgebraVector::basis(x + y, Rational(static_cast<long>(pairing(x, y))))));
      auto g = [&] {
        const auto a = oracle::random_element(spec, rng, 3), b = oracle::random_element(spec, rng, 3);
        return AlgebraVector::basis(a + b) - AlgebraVector::basis(a) - AlgebraVector::basis(b);
      };
      const auto g1 = g(), g2 = g();
      ASSERT_TRUE(in_gk(spec, g1));
      EXPECT_TRUE(in_gk(spec, bracket(g1, g2)));
    }
  }
}

TEST(KMap, BracketIsNotKilledByK) {
  const auto s = GroupSpec::surface(1, 0);
  const auto kb = k_map(s, bracket(AlgebraVector::basis(s.element({1, 0})), AlgebraVector::basis(s.element({0, 1}))));
  EXPECT_FALSE(kb.is_zero());
}

TEST(Center, KernelIsCentralAndDerivedIsNot) {
  const auto s = GroupSpec::surface(1, 2);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto x = oracle::random_element(s, rng, 3), b = oracle::random_element(s, rng, 3);
    if (in_kernel_mu(x)) {
      EXPECT_TRUE(bracket(AlgebraVector::basis(x), AlgebraVector::basis(b)).is_zero());
    } else {
      bool found = false;
      for (std::size_t g = 0; g < s.n_generators(); ++g)
        found |= !bracket(AlgebraVector::basis(x), AlgebraVector::basis(s.generator(g))).is_zero();
      EXPECT_TRUE(found);
    }
  }
}
