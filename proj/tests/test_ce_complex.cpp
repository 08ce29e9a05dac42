#include <gtest/gtest.h>

#include "hgl/complex.hpp"
#include "hgl/kernels.hpp"
#include "hgl/truncated_homology.hpp"
#include "hgl/wedge.hpp"
#include "support.hpp"

using namespace hgl;

namespace {

std::vector<oracle::Vec> random_factors(const GroupSpec& spec, std::mt19937_64& rng, std::size_t p) {
  std::vector<oracle::Vec> f(p, oracle::Vec(spec.n_generators()));
  for (auto& v : f)
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7) - 3;
  return f;
}

WedgeChain as_chain(const GroupSpec& spec, const std::vector<oracle::Vec>& f) {
  std::vector<GroupElement> e;
  for (const auto& v : f) e.push_back(spec.element(v));
  WedgeChain c(f.size());
  c.add(std::span<const GroupElement>(e), 1);
  return c;
}

}  // namespace

TEST(Wedge, NormalizationSignAndRepeats) {
  const auto s = GroupSpec::surface(1, 0);
  const auto a = s.element({1, 0}), b = s.element({0, 1}), c = s.element({1, 1});
  const auto ab = Wedge::normalize({a, b});
  const auto ba = Wedge::normalize({b, a});
  ASSERT_TRUE(ab && ba);
  EXPECT_EQ(ab->first, ba->first);
  EXPECT_EQ(ab->second, -ba->second);
  EXPECT_FALSE(Wedge::normalize({a, c, a}));
  WedgeChain ch(2);
  ch.add({a, b}, 1);
  ch.add({b, a}, 1);
  EXPECT_TRUE(ch.is_zero());
}

TEST(Wedge, Grading) {
  const auto s = GroupSpec::surface(1, 0);
  const auto u = s.element({1, 0}), v = s.element({0, 1});
  EXPECT_EQ(grading(Wedge::normalize({u, v})->first), s.element({1, 1}));
  EXPECT_EQ(grading(Wedge::normalize({u})->first), u);
}

TEST(Boundary, TwoWedge) {
  const auto s = GroupSpec::surface(1, 0);
  const auto u = s.element({1, 0}), v = s.element({0, 1});
  WedgeChain c(2);
  c.add({u, v}, 1);
  WedgeChain expected(1);
  expected.add({s.element({1, 1})}, -1);
  EXPECT_EQ(boundary(c), expected);
}

TEST(Boundary, InnerPairsAreCycles) {
  const auto s = GroupSpec::surface(1, 2);
  const auto z = s.element({0, 0, 2, 0});
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto u = oracle::random_element(s, rng, 3);
    if (u + u == z) continue;
    WedgeChain c(2);
    c.add({u, z - u}, 1);
    EXPECT_TRUE(boundary(c).is_zero());
  }
}

TEST(Boundary, ThreeWedgeAtInnerGrading) {
  // d3([u]^[v]^[z-u-v]) = -<u,v>([u+v]^[z-u-v] - [u]^[z-u] - [v]^[z-v]) for z in ker mu
  const auto s = GroupSpec::surface(1, 2);
  const auto z = s.element({0, 0, 1, 0});
  std::mt19937_64 rng(2);
  int checked = 0;
  while (checked < 40) {
    const auto u = oracle::random_element(s, rng, 2), v = oracle::random_element(s, rng, 2);
    const auto w = z - u - v;
    if (!Wedge::normalize({u, v, w}) || !Wedge::normalize({u + v, w}) || !Wedge::normalize({u, z - u}) ||
        !Wedge::normalize({v, z - v}))
      continue;
    WedgeChain t(3);
    t.add({u, v, w}, 1);
    WedgeChain e(2);
    const Rational k(static_cast<long>(-pairing(u, v)));
    e.add({u + v, w}, k);
    e.add({u, z - u}, -k);
    e.add({v, z - v}, -k);
    EXPECT_EQ(boundary(t), e);
    ++checked;
  }
}

TEST(Boundary, MatchesDefinitionAndSquaresToZero) {
  std::mt19937_64 rng(31);
  int tested = 0;
  for (int s = 0; s < 8; ++s) {
    const auto spec = oracle::random_spec(rng);
    for (int t = 0; t < 150; ++t) {
      const std::size_t p = 1 + rng() % 5;
      const auto f = random_factors(spec, rng, p);
      const auto c = as_chain(spec, f);
      if (c.is_zero()) continue;
      const auto d = boundary(c);
      // c already carries the sorting sign, and the naive boundary is alternating
      EXPECT_EQ(d, oracle::naive_boundary(spec, f));
      EXPECT_TRUE(boundary(d).is_zero());
      for (const auto& [w, _] : d.terms()) EXPECT_EQ(grading(w), *c.grading());
      ++tested;
    }
  }
  EXPECT_GE(tested, 1000);
}

TEST(Boundary, KernelOnlyChainsAreCycles) {
  const auto s = GroupSpec::surface(1, 3);
  const auto sup = box_support(s, 2);
  std::vector<GroupElement> ker;
  for (const auto& x : sup)
    if (in_kernel_mu(x)) ker.push_back(x);
  ASSERT_GE(ker.size(), 4u);
  for (std::size_t i = 0; i + 2 < ker.size(); ++i) {
    WedgeChain c(3);
    c.add({ker[i], ker[i + 1], ker[i + 2]}, 1);
    EXPECT_TRUE(boundary(c).is_zero());
  }
}

TEST(Boundary, ProjectionSection) {
  const auto s = GroupSpec::surface(1, 2);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    WedgeChain c(2);
    for (int k = 0; k < 3; ++k) {
      const auto a = oracle::random_element(s, rng, 2), b = oracle::random_element(s, rng, 2);
      if (is_derived_element(a) && is_derived_element(b) && a != b) c.add({a, b}, k + 1);
    }
    EXPECT_TRUE(is_derived_only(c));
    EXPECT_EQ(project_derived(c), c);
  }
}

TEST(Cochain, CoboundaryDuality) {
  const auto s = GroupSpec::surface(1, 2);
  const auto z = s.element({0, 0, 1, 0});
  // eta([u]^[z-u]) = f(u) + 1 with f linear and f(z) = -2 gives d eta = omega
  const auto sup = box_support(s, 2);
  const auto basis3 = enumerate_basis(sup, 3, z, Restrict::derived_only);
  ASSERT_FALSE(basis3.empty());
  // f = -2 (c1 - c2) is well defined on H (it kills C1 + C2) and f(z) = -2
  const Cochain eta_f = Cochain::from_rule(2, [&](const Wedge& w) -> Rational {
    const auto r = s.representative(w[0]);
    return Rational(static_cast<long>(-2 * (r[2] - r[3]))) + 1;
  });
  for (const auto& w : basis3) {
    WedgeChain c(3);
    c.add(w, 1);
    EXPECT_EQ(eta_f.evaluate(boundary(c)), Rational(static_cast<long>(pairing(w[0], w[1]))));
  }
  const Cochain zero(2);
  const auto dz = coboundary(zero, basis3);
  for (const auto& w : basis3) EXPECT_EQ(dz.cochain(w), 0);

  // random cochain on the pair basis; (d eta)(c) = eta(d c) on chains
  const auto basis2 = enumerate_basis(box_support(s, 4), 2, z, Restrict::full);
  Cochain eta(2);
  std::mt19937_64 rng(8);
  for (const auto& w : basis2) eta.set(w, Rational(static_cast<long>(rng() % 11) - 5));
  const auto d = coboundary(eta, basis3);
  EXPECT_EQ(d.edge_misses, 0u);
  WedgeChain c(3);
  for (std::size_t i = 0; i < basis3.size(); i += 3) c.add(basis3[i], Rational(static_cast<long>(i % 7) - 3));
  EXPECT_EQ(d.cochain.evaluate(c), eta.evaluate(boundary(c)));
}

TEST(Support, BoxSizes) {
  EXPECT_EQ(box_support(GroupSpec::surface(1, 0), 1).size(), 9u);
  const GroupSpec t(3, IntMatrix{{0, 0, 2}}, IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(box_support(t, 1).size(), 18u);
  const GroupSpec z1(1, IntMatrix(0, 1), IntMatrix{{0}});
  EXPECT_EQ(box_support(z1, 2).size(), 5u);
  EXPECT_EQ(box_size(GroupSpec::surface(1, 0), 3), 49u);
}

TEST(Enumerate, Examples) {
  const auto s = GroupSpec::surface(1, 0);
  const auto sup = box_support(s, 1);
  EXPECT_EQ(enumerate_basis(sup, 2, s.zero(), Restrict::derived_only).size(), 4u);
  const auto z = s.element({1, 1});
  const auto one = enumerate_basis(sup, 1, z, Restrict::full);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0][0], z);
  EXPECT_EQ(enumerate_basis(sup, 1, s.zero(), Restrict::kernel_only).size(), 1u);
  EXPECT_TRUE(enumerate_basis(sup, 2, s.zero(), Restrict::kernel_only).empty());
}

TEST(Enumerate, MatchesBruteForce) {
  const auto s = GroupSpec::surface(1, 2);
  const auto sup = box_support(s, 1);
  const auto z = s.element({0, 0, 1, 0});
  for (std::size_t p = 1; p <= 3; ++p) {
    std::size_t count = 0;
    const auto& e = sup.elements();
    std::vector<std::size_t> cur;
    std::vector<std::vector<std::size_t>> subs;
    oracle::subsets(e.size(), p, 0, cur, subs);
    for (const auto& sub : subs) {
      GroupElement sum = s.zero();
      for (auto i : sub) sum += e[i];
      if (sum == z) ++count;
    }
    EXPECT_EQ(enumerate_basis(sup, p, z, Restrict::full).size(), count);
  }
}

TEST(Kernels, SerialAndParallelAgree) {
  const auto s = GroupSpec::surface(1, 2);
  const auto sup = box_support(s, 2);
  for (const auto& z : {s.zero(), s.element({0, 0, 1, 0}), s.element({1, 0, 0, 0})}) {
    EXPECT_EQ(kernels::serial::enumerate_pairs(sup, z, Restrict::full),
              kernels::parallel::enumerate_pairs(sup, z, Restrict::full));
    const auto ts = kernels::serial::enumerate_triples(sup, z, Restrict::derived_only);
    EXPECT_EQ(ts, kernels::parallel::enumerate_triples(sup, z, Restrict::derived_only));
    EXPECT_EQ(kernels::serial::enumerate_wedges(sup, 4, z, Restrict::full).size(),
              kernels::parallel::enumerate_wedges(sup, 4, z, Restrict::full).size());
    const kernels::GradedFrame frame(s, sup, z);
    const auto a = kernels::serial::boundary3_columns(frame, ts);
    const auto b = kernels::parallel::boundary3_columns(frame, ts);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(a[i].size, b[i].size);
      for (std::size_t k = 0; k < a[i].size; ++k) {
        EXPECT_EQ(a[i].entries[k].row, b[i].entries[k].row);
        EXPECT_EQ(a[i].entries[k].value, b[i].entries[k].value);
      }
    }
  }
}

TEST(Kernels, BoundaryColumnsMatchChains) {
  const auto s = GroupSpec::surface(1, 2);
  const auto sup = box_support(s, 1);
  const auto z = s.element({0, 0, 1, 0});
  const kernels::GradedFrame frame(s, sup, z);
  const auto ts = kernels::serial::enumerate_triples(sup, z, Restrict::full);
  for (const auto& t : ts) {
    const auto col = kernels::boundary3_column(frame, t);
    WedgeChain w(3);
    w.add({sup[t[0]], sup[t[1]], sup[t[2]]}, 1);
    WedgeChain from_col(2);
    for (const auto& e : col.view()) {
      const auto& a = frame.extended()[e.row];
      from_col.add({a, z - a}, Rational(static_cast<long>(e.value)));
    }
    EXPECT_EQ(from_col, boundary(w));
  }
}
