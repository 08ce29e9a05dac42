// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "../support.hpp"
#include "hgl/complex.hpp"
#include "hgl/smith.hpp"
#include "hgl/truncated_homology.hpp"
#include "hgl/verifier.hpp"

using namespace hgl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// rank of Q (x) (H / Zz) from invariant factors of [R; z] (determinantal divisors)
std::size_t quotient_rank_oracle(const GroupSpec& spec, const GroupElement& z) {
  const auto& r = spec.relations();
  IntMatrix m(r.rows() + 1, spec.n_generators());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m(i, j) = r(i, j);
  const auto rep = spec.representative(z);
  for (std::size_t j = 0; j < rep.size(); ++j) m(r.rows(), j) = rep[j];
  return spec.n_generators() - oracle::invariant_factors(m).size();
}

std::string run_command(const std::string& cmd, int* status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int rc = pclose(p);
  *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

bool certified(const ReportEntry& e) { return e.verdict == Verdict::certified; }

Outcome ac1() {
  std::mt19937_64 rng(101);
  VerifyOptions o;
  o.samples = 500;
  std::size_t bad = 0;
  for (int s = 0; s < 5; ++s) {
    const auto e = check_bracket_axioms(oracle::random_spec(rng), o);
    bad += e.witness["skew_failures"].get<std::size_t>() + e.witness["jacobi_failures"].get<std::size_t>();
    bad += certified(e) ? 0 : 1;
  }
  return {bad == 0, "5 specs x 500 triples, failures " + std::to_string(bad)};
}

Outcome ac2() {
  std::mt19937_64 rng(102);
  VerifyOptions o;
  std::size_t wedges = 0, bad = 0;
  for (int s = 0; s < 3; ++s) {
    const auto spec = s == 0 ? GroupSpec::surface(1, 2) : oracle::random_spec(rng);
    const auto e = check_complex(spec, o);
    wedges += e.witness["wedges_tested"].get<std::size_t>();
    bad += e.witness["dd_failures"].get<std::size_t>() + e.witness["duality_failures"].get<std::size_t>() +
           (certified(e) ? 0 : 1);
  }
  return {bad == 0 && wedges >= 1000, std::to_string(wedges) + " wedges, failures " + std::to_string(bad)};
}

Outcome ac3() {
  VerifyOptions o;
  std::size_t gradings = 0, bad = 0, corrected = 0;
  for (const auto& spec : {GroupSpec::surface(1, 0), GroupSpec::surface(1, 2)}) {
    for (const auto& z : box_support(spec, 2)) {
      if (!is_derived_element(z)) continue;
      const auto e = outer_h2_certify(spec, z, 2, o);
      ++gradings;
      const auto& ys = e.witness["identity_checks"];
      std::size_t clean = 0;
      for (const auto& y : ys) clean += y["failures"] == 0;
      if (!e.notes.empty()) ++corrected;
      if (!certified(e) || ys.size() < 2 || (clean < 2 && e.notes.empty())) ++bad;
    }
  }
  return {bad == 0, std::to_string(gradings) + " outer gradings, >=2 y each, corrections " + std::to_string(corrected)};
}

Outcome ac4() {
  const auto s = GroupSpec::surface(1, 0);
  const auto e = inner_h2_certify(s, s.zero(), 3, 9, VerifyOptions{});
  const auto dim = e.witness["quotient_dim"].get<std::size_t>();
  const bool ok = certified(e) && dim == 2 && e.witness["f_rank"] == 2 &&
                  e.witness["f_kills_boundaries"]["violations"] == 0 &&
                  e.witness["boundaries_certified"] == e.witness["kernel_of_f_dim"];
  return {ok, "quotient dim " + std::to_string(dim) + ", expected 2"};
}

Outcome ac5() {
  const auto s = GroupSpec::surface(1, 2);
  const auto c1 = s.element({0, 0, 1, 0});
  std::string detail;
  bool ok = true;
  for (const auto& z : {s.zero(), c1, scalar_mul(2, c1)}) {
    const auto e = main_theorem_check(s, z, 2, 6, VerifyOptions{});
    const auto& w = e.witness;
    const auto h2 = w["h2"].get<std::size_t>();
    const auto kp = w["kernel_pairs"].get<std::size_t>();
    const auto inner = w["inner_dim"].get<std::size_t>();
    const auto q = quotient_rank_oracle(s, z);
    ok &= certified(e) && h2 == kp + inner && inner == q && count_kernel_pairs(box_support(s, 2), z) == kp;
    detail += s.format(z) + ": " + std::to_string(h2) + "=" + std::to_string(kp) + "+" + std::to_string(q) + " ";
  }
  return {ok, detail};
}

Outcome ac6() {
  VerifyOptions o;
  std::size_t gradings = 0, bad = 0;
  for (const auto& spec : {GroupSpec::surface(1, 0), GroupSpec::surface(1, 2)})
    for (const auto& z : box_support(spec, 1)) {
      const auto e = h1_check(spec, z, o);
      ++gradings;
      const int expected = in_kernel_mu(z) ? 1 : 0;
      if (!certified(e) || e.witness["h1_dim"] != expected) ++bad;
    }
  return {bad == 0, std::to_string(gradings) + " gradings, mismatches " + std::to_string(bad)};
}

Outcome ac7() {
  const auto s = GroupSpec::surface(1, 0);
  const auto e = gk_cycle_check(s, s.element({1, 0}), s.zero(), VerifyOptions{});
  const auto& w = e.witness;
  const bool ok = certified(e) && w["first_factor_in_gk"] == true && w["second_factor_in_gk"] == true &&
                  w["is_cycle"] == true && w["witness_verified"] == true;
  return {ok, "boundary witness with " + w.value("boundary_witness_terms", Json(0)).dump() + " terms"};
}

Outcome ac8() {
  VerifyOptions o;
  o.box = 3;
  const GroupSpec t(3, IntMatrix{{0, 0, 2}}, IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  const auto a = omega_check(t, t.generator(2), o);
  const bool a_ok = certified(a) && a.witness["eta_system"]["feasible"] == false &&
                    a.witness["eta_system"]["certificate"]["is_cycle"] == true &&
                    a.witness["eta_system"]["certificate"]["left_null_recheck"] == true;
  const GroupSpec r3(3, IntMatrix(0, 3), IntMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  const auto b = omega_check(r3, r3.generator(2), o);
  const bool b_ok = certified(b) && b.witness["primitive"]["failures"] == 0;
  return {a_ok && b_ok, std::string("torsion: ") + (a_ok ? "infeasible, certificate rechecked" : "FAILED") +
                            "; e3: " + b.witness["primitive"].value("triples", Json(0)).dump() + " triples"};
}

Outcome ac9() {
  const auto s = GroupSpec::surface(2, 3);
  const auto e = surface_generator_check(s, 2, 3, s.zero(), VerifyOptions{});
  const auto& w = e.witness;
  const auto& boundary_gens = w.at("boundary_generators");
  bool diffs = boundary_gens.size() == 3;
  for (const auto& g : boundary_gens) diffs &= g["difference_with_B2_bounded"] == true && g["f_equals_1(x)C"] == true;
  const bool ok = certified(e) && w["image_rank"] == 6 && w["quotient_dim"] == 6 && diffs;
  return {ok, "image rank " + w["image_rank"].dump() + " of 7 generators"};
}

Outcome ac10() {
  VerifyOptions o;
  o.functionals = 100;
  const auto e = linear_extension_check(GroupSpec::surface(1, 2), o);
  const bool ok = certified(e) && e.params["functionals"].get<std::size_t>() >= 100 &&
                  e.witness["negative_control"]["detected"] == true;
  return {ok, e.params["functionals"].dump() + " functionals, negative control detected"};
}

Outcome ac11(const std::string& hgl, const std::string& golden) {
  std::ifstream in(golden, std::ios::binary);
  if (!in) return {false, "missing golden file " + golden};
  std::ostringstream expected;
  expected << in.rdbuf();
  int status = -1;
  const auto out = run_command(hgl + " verify --suite all --surface 2,3 --box 2 --seed 1", &status);
  const bool same = out == expected.str();
  return {same && status == 0, std::string(same ? "byte-identical" : "DIFFERS") + ", exit " + std::to_string(status)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <hgl binary> <golden report>\n";
    return 2;
  }
  const std::string hgl = argv[1], golden = argv[2];
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"algebra axioms", 5, ac1},
      {"d^2 = 0 and duality", 10, ac2},
      {"outer exactness", 30, ac3},
      {"inner isomorphism", 60, ac4},
      {"main theorem", 60, ac5},
      {"H1 = center", 60, ac6},
      {"g_K cycle", 60, ac7},
      {"omega dichotomy", 60, ac8},
      {"surface generators", 60, ac9},
      {"linear extension", 60, ac10},
      {"golden report", 120, [&] { return ac11(hgl, golden); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < criteria[i].limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("AC%-2zu %s  %-20s %6.2fs (limit %.0fs)  %s\n", i + 1, pass ? "PASS" : "FAIL", criteria[i].name, secs,
                criteria[i].limit_s, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
