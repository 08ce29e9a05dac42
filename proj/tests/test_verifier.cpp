#include <gtest/gtest.h>

#include "hgl/complex.hpp"
#include "hgl/verifier.hpp"
#include "support.hpp"

using namespace hgl;

namespace {

VerifyOptions fast() {
  VerifyOptions o;
  o.samples = 200;
  return o;
}

std::string verdict(const ReportEntry& e) { return to_string(e.verdict); }

}  // namespace

TEST(Verifier, BracketAndComplexOnRandomSpecs) {
  std::mt19937_64 rng(61);
  for (int s = 0; s < 5; ++s) {
    const auto spec = oracle::random_spec(rng);
    EXPECT_EQ(verdict(check_bracket_axioms(spec, fast())), "certified");
    EXPECT_EQ(verdict(check_complex(spec, fast())), "certified");
  }
}

TEST(Verifier, InnerPlane) {
  const auto s = GroupSpec::surface(1, 0);
  const auto e = inner_h2_certify(s, s.zero(), 2, 6, fast());
  EXPECT_EQ(verdict(e), "certified");
  EXPECT_EQ(e.witness["quotient_dim"], 2);
}

TEST(Verifier, InnerNeedsKernelGrading) {
  const auto s = GroupSpec::surface(1, 0);
  EXPECT_THROW(inner_h2_certify(s, s.element({1, 0}), 2, 6, fast()), ParameterError);
  EXPECT_THROW(outer_h2_certify(s, s.zero(), 2, fast()), ParameterError);
}

TEST(Verifier, InnerSurfaceC1) {
  const auto s = GroupSpec::surface(1, 2);
  const auto e = inner_h2_certify(s, s.element({0, 0, 1, 0}), 1, 3, fast());
  EXPECT_EQ(verdict(e), "certified");
  EXPECT_EQ(e.witness["quotient_dim"], 2);
}

TEST(Verifier, OuterEveryGrading) {
  const auto s = GroupSpec::surface(1, 0);
  for (const auto& z : box_support(s, 1)) {
    if (!is_derived_element(z)) continue;
    const auto e = outer_h2_certify(s, z, 2, fast());
    EXPECT_EQ(verdict(e), "certified") << s.format(z);
    EXPECT_EQ(e.witness["cycles_bounded"], e.witness["cycle_dim"]);
  }
}

TEST(Verifier, MainTheoremZeroForm) {
  const GroupSpec ab(2, IntMatrix(0, 2), IntMatrix(2, 2));
  const auto e = main_theorem_check(ab, ab.zero(), 1, 3, fast());
  EXPECT_FALSE(e.notes.empty());
  EXPECT_EQ(e.witness["h2"], e.witness["cycle_dim"]);
}

TEST(Verifier, H1) {
  const auto s = GroupSpec::surface(1, 0);
  EXPECT_EQ(h1_check(s, s.zero(), fast()).witness["h1_dim"], 1);
  EXPECT_EQ(h1_check(s, s.element({1, 0}), fast()).witness["h1_dim"], 0);
  const auto t = GroupSpec::surface(1, 2);
  EXPECT_EQ(h1_check(t, t.element({0, 0, 1, 0}), fast()).witness["h1_dim"], 1);
}

TEST(Verifier, GkCycleIsCycleInGk) {
  const auto s = GroupSpec::surface(1, 2);
  const auto u = s.element({1, 0, 0, 0}), z = s.element({0, 0, 1, 0});
  EXPECT_TRUE(boundary(gk_cycle(u, z)).is_zero());
  const auto e = gk_cycle_check(s, u, z, fast());
  EXPECT_EQ(verdict(e), "certified");
  EXPECT_THROW(gk_cycle_check(s, z, z, fast()), ParameterError);
}

TEST(Verifier, RelationWitness) {
  const auto s = GroupSpec::surface(1, 2);
  const auto z = s.element({0, 0, 1, 0});
  const auto box = box_support(s, 3);
  std::vector<GroupElement> aux(box.begin(), box.end());
  std::mt19937_64 rng(3);
  int found = 0;
  for (int t = 0; t < 40; ++t) {
    const auto u = oracle::random_element(s, rng, 1), v = oracle::random_element(s, rng, 1);
    if (!is_derived_element(u) || !is_derived_element(v) || !is_derived_element(u + v)) continue;
    const auto w = relation_witness(u, v, z, aux);
    if (!w) continue;
    EXPECT_EQ(boundary(*w), relation_chain(u, v, z));
    ++found;
  }
  EXPECT_GT(found, 5);
}

TEST(Verifier, BoundaryWitnessVerifies) {
  const auto s = GroupSpec::surface(1, 0);
  const auto z = s.zero();
  const auto u = s.element({1, 0}), v = s.element({0, 1});
  const auto c = relation_chain(u, v, z);
  const auto bw = find_boundary_witness(s, c, fast());
  ASSERT_TRUE(bw.chain);
  EXPECT_EQ(boundary(*bw.chain), c);
}

TEST(Verifier, OmegaCases) {
  const GroupSpec t(3, IntMatrix{{0, 0, 2}}, IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  auto opt = fast();
  opt.box = 2;
  const auto tors = omega_check(t, t.generator(2), opt);
  EXPECT_EQ(verdict(tors), "certified");
  EXPECT_EQ(tors.witness["eta_system"]["feasible"], false);

  const GroupSpec r3(3, IntMatrix(0, 3), IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  const auto nt = omega_check(r3, r3.generator(2), opt);
  EXPECT_EQ(verdict(nt), "certified");
  EXPECT_EQ(nt.witness["primitive"]["failures"], 0);
  EXPECT_THROW(omega_check(r3, r3.generator(0), opt), ParameterError);
}

TEST(Verifier, OmegaPrimitiveNeedsAlternatingNormalisation) {
  // with f(z) = 1 the rule is not alternating on [u]^[z-u] vs [z-u]^[u]
  const GroupSpec r3(3, IntMatrix(0, 3), IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  const auto z = r3.generator(2);
  const auto eta = omega_primitive(r3, z);
  const auto omega = omega_cocycle(r3, z);
  for (const auto& w : enumerate_basis(box_support(r3, 1), 3, z, Restrict::derived_only)) {
    WedgeChain c(3);
    c.add(w, 1);
    EXPECT_EQ(eta.evaluate(boundary(c)), omega(w));
  }
}

TEST(Verifier, SurfaceAndLinear) {
  const auto s = GroupSpec::surface(1, 2);
  EXPECT_EQ(verdict(surface_generator_check(s, 1, 2, s.zero(), fast())), "certified");
  const auto e = linear_extension_check(s, fast());
  EXPECT_EQ(verdict(e), "certified");
  EXPECT_EQ(e.witness["negative_control"]["detected"], true);
}

TEST(Verifier, SuiteOrderIsIndependentOfThreads) {
  const auto s = GroupSpec::surface(1, 0);
  SuiteConfig c;
  c.suite = "h1";
  c.options = fast();
  const auto a = run_suite(s, c).to_json();
  const auto b = run_suite(s, c).to_json();
  EXPECT_EQ(a, b);
  c.suite = "nonsense";
  EXPECT_THROW(run_suite(s, c), std::invalid_argument);
}

TEST(Report, ExitCodes) {
  Report r;
  r.entries.resize(2);
  EXPECT_EQ(r.exit_code(), 0);
  r.entries[0].demote(Verdict::inconclusive);
  EXPECT_EQ(r.exit_code(), 2);
  r.entries[1].demote(Verdict::refuted);
  EXPECT_EQ(r.exit_code(), 1);
  r.entries[1].demote(Verdict::inconclusive);
  EXPECT_EQ(r.entries[1].verdict, Verdict::refuted);
}
