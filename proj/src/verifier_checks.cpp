#include <algorithm>
#include <unordered_map>

#include "hgl/echelon.hpp"
#include "hgl/goldman.hpp"
#include "verifier_util.hpp"

namespace hgl {

namespace {

Rational random_coefficient(std::mt19937_64& rng) {
  const long num = static_cast<long>(detail::draw(rng, 11)) - 5;
  const long den = static_cast<long>(detail::draw(rng, 4)) + 1;
  return Rational(num == 0 ? 1 : num) / Rational(den);
}

const GroupElement& pick(std::mt19937_64& rng, const std::vector<GroupElement>& pool) {
  return pool[detail::draw(rng, pool.size())];
}

std::optional<Wedge> random_wedge(std::mt19937_64& rng, const std::vector<GroupElement>& pool, std::size_t p) {
  std::vector<GroupElement> f;
  for (std::size_t i = 0; i < p; ++i) f.push_back(pick(rng, pool));
  auto n = Wedge::normalize(std::span<const GroupElement>(f));
  if (!n) return std::nullopt;
  return n->first;
}

}  // namespace

ReportEntry check_bracket_axioms(const GroupSpec& spec, const VerifyOptions& opt) {
  ReportEntry e;
  e.id = "bracket_axioms";
  const detail::Box b = detail::make_box(spec, opt.box, opt.scan_budget);
  e.params = {{"radius", detail::radius_json(b)}, {"samples", opt.samples}, {"seed", opt.seed}};
  auto rng = detail::rng_for(opt.seed, e.id);
  const std::vector<GroupElement> pool(b.support.begin(), b.support.end());

  std::size_t skew = 0, jacobi = 0, k_bracket = 0, k_nonzero = 0, closure = 0;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const auto a = AlgebraVector::basis(pick(rng, pool), random_coefficient(rng));
    const auto bb = AlgebraVector::basis(pick(rng, pool), random_coefficient(rng));
    const auto c = AlgebraVector::basis(pick(rng, pool), random_coefficient(rng));
    if (!(bracket(a, bb) == -bracket(bb, a))) ++skew;
    const auto j = bracket(a, bracket(bb, c)) + bracket(bb, bracket(c, a)) + bracket(c, bracket(a, bb));
    if (!j.is_zero()) ++jacobi;
    // K is not a homomorphism to an abelian algebra: K([x],[y]) = <x,y> K([x+y])
    {
      const auto& x = pick(rng, pool);
      const auto& y = pick(rng, pool);
      const auto kb = k_map(spec, bracket(AlgebraVector::basis(x), AlgebraVector::basis(y)));
      const auto expected = k_map(spec, AlgebraVector::basis(x + y, Rational(static_cast<long>(pairing(x, y)))));
      if (!(kb == expected)) ++k_bracket;
      if (!kb.is_zero()) ++k_nonzero;
    }
    // elements of g_K: [x+y] - [x] - [y]
    auto gk = [&]() {
      const auto& x = pick(rng, pool);
      const auto& y = pick(rng, pool);
      return AlgebraVector::basis(x + y) - AlgebraVector::basis(x) - AlgebraVector::basis(y);
    };
    const auto g1 = gk(), g2 = gk();
    if (!in_gk(spec, g1) || !in_gk(spec, g2) || !in_gk(spec, bracket(g1, g2))) ++closure;
  }

  std::size_t center = 0, center_checked = 0, noncentral = 0, noncentral_checked = 0;
  for (const auto& x : pool) {
    if (in_kernel_mu(x)) {
      for (std::size_t s = 0; s < 8; ++s) {
        ++center_checked;
        if (!bracket(AlgebraVector::basis(x), AlgebraVector::basis(pick(rng, pool))).is_zero()) ++center;
      }
    } else if (noncentral_checked < opt.samples) {
      ++noncentral_checked;
      bool found = false;
      for (std::size_t g = 0; g < spec.n_generators() && !found; ++g)
        found = !bracket(AlgebraVector::basis(x), AlgebraVector::basis(spec.generator(g))).is_zero();
      if (!found) ++noncentral;
    }
  }
  e.witness = {{"skew_failures", skew},
               {"jacobi_failures", jacobi},
               {"k_of_bracket_failures", k_bracket},
               {"k_of_bracket_nonzero", k_nonzero},
               {"gk_closure_failures", closure},
               {"center_checks", center_checked},
               {"center_failures", center},
               {"noncentral_checks", noncentral_checked},
               {"noncentral_failures", noncentral}};
  if (skew + jacobi + k_bracket + closure + center + noncentral > 0) e.demote(Verdict::refuted);
  return e;
}

ReportEntry check_complex(const GroupSpec& spec, const VerifyOptions& opt) {
  ReportEntry e;
  e.id = "complex_identities";
  const detail::Box b = detail::make_box(spec, opt.box, opt.scan_budget);
  const std::size_t n = std::max<std::size_t>(opt.samples * 2, 1000);
  e.params = {{"radius", detail::radius_json(b)}, {"wedges", n}, {"seed", opt.seed}};
  auto rng = detail::rng_for(opt.seed, e.id);
  const std::vector<GroupElement> pool(b.support.begin(), b.support.end());
  std::vector<GroupElement> derived, kernel;
  for (const auto& x : pool) (in_kernel_mu(x) ? kernel : derived).push_back(x);

  auto eta_of = [](std::size_t degree) {
    return Cochain::from_rule(degree, [](const Wedge& w) {
      std::size_t h = w.degree();
      for (const auto& x : w.factors()) h = h * 1000003u ^ x.hash();
      return Rational(static_cast<long>(h % 7) - 3);
    });
  };

  std::size_t dd = 0, grading_bad = 0, kernel_bad = 0, proj_bad = 0, dual_bad = 0, ddeta_bad = 0, tested = 0;
  for (std::size_t s = 0; tested < n && s < 20 * n; ++s) {
    const std::size_t p = 1 + tested % 5;
    const auto w = random_wedge(rng, pool, p);
    if (!w) continue;
    ++tested;
    const WedgeChain d1 = boundary(*w);
    if (!boundary(d1).is_zero()) ++dd;
    for (const auto& [t, c] : d1.terms())
      if (grading(t) != grading(*w)) ++grading_bad;

    // (d eta)(c) = eta(d c) on c = the wedge plus a random second term, and d d eta = 0
    if (p >= 2) {
      const Cochain eta_rule = eta_of(p - 1);
      WedgeChain c(p);
      c.add(*w, random_coefficient(rng));
      if (auto w2 = random_wedge(rng, pool, p)) c.add(*w2, random_coefficient(rng));
      std::vector<Wedge> basis;
      for (const auto& [t, v] : c.terms()) basis.push_back(t);
      const auto d_eta = coboundary(eta_rule, basis);
      if (d_eta.cochain.evaluate(c) != eta_rule.evaluate(boundary(c))) ++dual_bad;
    }
    if (p >= 3) {
      std::vector<Wedge> faces;
      for (const auto& [t, v] : d1.terms()) faces.push_back(t);
      const auto d_eta_faces = coboundary(eta_of(p - 2), faces);
      std::size_t misses = 0;
      if (!is_zero(d_eta_faces.cochain.evaluate(d1, &misses)) || misses) ++ddeta_bad;
    }
    if (!derived.empty()) {
      if (const auto dw = random_wedge(rng, derived, p)) {
        WedgeChain c(p);
        c.add(*dw, 1);
        if (!(project_derived(c) == c)) ++proj_bad;
      }
    }
    if (kernel.size() >= p) {
      if (const auto kw = random_wedge(rng, kernel, p))
        if (!boundary(*kw).is_zero()) ++kernel_bad;
    }
  }
  e.witness = {{"wedges_tested", tested},
               {"dd_failures", dd},
               {"grading_failures", grading_bad},
               {"kernel_only_failures", kernel_bad},
               {"kernel_elements_in_box", kernel.size()},
               {"projection_section_failures", proj_bad},
               {"duality_failures", dual_bad},
               {"dd_eta_failures", ddeta_bad}};
  if (dd + grading_bad + kernel_bad + proj_bad + dual_bad + ddeta_bad > 0) e.demote(Verdict::refuted);
  if (tested < n) {
    e.demote(Verdict::inconclusive);
    e.notes.push_back("box too small for the requested number of wedges");
  }
  return e;
}

// ---------------------------------------------------------------------------

ReportEntry linear_extension_check(const GroupSpec& spec, const VerifyOptions& opt) {
  ReportEntry e;
  e.id = "linear_extension";
  const detail::Box b = detail::make_box(spec, opt.box, opt.element_budget);
  e.params = {{"radius", detail::radius_json(b)}, {"functionals", opt.functionals}, {"seed", opt.seed}};
  auto rng = detail::rng_for(opt.seed, e.id);

  std::vector<GroupElement> dom;
  for (const auto& x : b.support)
    if (is_derived_element(x)) dom.push_back(x);
  const Support D(dom);
  std::vector<std::vector<std::int64_t>> coords(D.size());
  const std::size_t r = spec.free_rank();
  for (std::size_t i = 0; i < D.size(); ++i)
    coords[i].assign(D[i].coords().begin(), D[i].coords().begin() + static_cast<std::ptrdiff_t>(r));

  struct Triple {
    std::uint32_t u, v, s;
    bool hyp;
  };
  std::vector<Triple> sums;
  for (std::uint32_t i = 0; i < D.size(); ++i)
    for (std::uint32_t j = i; j < D.size(); ++j)
      if (auto s = D.index_of(D[i] + D[j])) sums.push_back({i, j, *s, pairing(D[i], D[j]) != 0});
  const std::size_t pair_cap = 2000000;
  if (sums.size() > pair_cap) {
    std::vector<Triple> pick;
    for (std::size_t k = 0; k < pair_cap; ++k) pick.push_back(sums[detail::draw(rng, sums.size())]);
    sums = std::move(pick);
    e.notes.push_back("sum triples sampled");
  }
  std::vector<std::array<std::uint32_t, 3>> multiples;  // u, n, n*u
  for (std::uint32_t i = 0; i < D.size(); ++i)
    for (std::int64_t k : {-3, -2, -1, 2, 3})
      if (auto m = D.index_of(scalar_mul(k, D[i]))) multiples.push_back({i, static_cast<std::uint32_t>(k + 3), *m});

  // Constructive steps of the lemma: f(u+v) from f(u+v+x) - f(x) and
  // f(-u) from f(x) - f(u+x), each step a nonzero-pairing sum.
  struct Derivation {
    std::uint32_t u, v, s, x, vx, uvx;
  };
  std::vector<Derivation> derivs;
  struct Negation {
    std::uint32_t u, neg, x, ux;
  };
  std::vector<Negation> negs;
  std::size_t no_aux = 0;
  const auto aux = detail::by_norm(D);
  for (const auto& t : sums) {
    if (t.hyp || derivs.size() >= opt.samples) continue;
    const auto &u = D[t.u], &v = D[t.v];
    bool found = false;
    for (const auto& x : aux) {
      if (pairing(u, x) == 0 || pairing(v, x) == 0 || pairing(u + v, x) == 0) continue;
      const auto vx = D.index_of(v + x), uvx = D.index_of(u + v + x);
      if (!vx || !uvx) continue;
      derivs.push_back({t.u, t.v, t.s, *D.index_of(x), *vx, *uvx});
      found = true;
      break;
    }
    if (!found) ++no_aux;
  }
  for (std::uint32_t i = 0; i < D.size() && negs.size() < opt.samples; ++i) {
    const auto neg = D.index_of(-D[i]);
    if (!neg) continue;
    for (const auto& x : aux) {
      if (pairing(D[i], x) == 0) continue;
      const auto ux = D.index_of(D[i] + x);
      if (!ux) continue;
      negs.push_back({i, *neg, *D.index_of(x), *ux});
      break;
    }
  }

  auto values_of = [&](const std::vector<std::int64_t>& phi) {
    std::vector<Rational> f(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < r; ++k) s += phi[k] * coords[i][k];
      f[i] = Rational(static_cast<long>(s));
    }
    return f;
  };
  auto hypothesis_holds = [&](const std::vector<Rational>& f) {
    for (const auto& t : sums)
      if (t.hyp && f[t.s] != f[t.u] + f[t.v]) return false;
    return true;
  };

  std::size_t hyp_bad = 0, concl_bad = 0, mult_bad = 0, deriv_bad = 0, neg_bad = 0;
  for (std::size_t k = 0; k < opt.functionals; ++k) {
    std::vector<std::int64_t> phi(r);
    for (auto& c : phi) c = static_cast<std::int64_t>(detail::draw(rng, 11)) - 5;
    if (k < r) std::fill(phi.begin(), phi.end(), 0), phi[k] = 1;  // coordinate projections first
    const auto f = values_of(phi);
    if (!hypothesis_holds(f)) ++hyp_bad;
    for (const auto& t : sums)
      if (!t.hyp && f[t.s] != f[t.u] + f[t.v]) {
        ++concl_bad;
        break;
      }
    for (const auto& m : multiples)
      if (f[m[2]] != Rational(static_cast<long>(m[1]) - 3) * f[m[0]]) {
        ++mult_bad;
        break;
      }
    for (const auto& d : derivs) {
      const bool steps = f[d.uvx] == f[d.s] + f[d.x] && f[d.uvx] == f[d.u] + f[d.vx] && f[d.vx] == f[d.v] + f[d.x];
      if (!steps || f[d.uvx] - f[d.x] != f[d.u] + f[d.v]) {
        ++deriv_bad;
        break;
      }
    }
    for (const auto& g : negs) {
      if (f[g.ux] != f[g.u] + f[g.x] || f[g.x] - f[g.ux] != f[g.neg] || f[g.neg] != -f[g.u]) {
        ++neg_bad;
        break;
      }
    }
  }

  // Every solution of the hypothesis system on the box: the equations span
  // at most |D| - rank; when they reach it the solutions are exactly the
  // linear functionals. Otherwise the conclusion is tested on the half box.
  ColumnEchelon hyp(D.size());
  const std::size_t target = D.size() - std::min<std::size_t>(r, D.size());
  for (const auto& t : sums) {
    if (!t.hyp) continue;
    SparseVector v;
    axpy(v, 1, SparseVector{{t.s, Rational(1)}});
    axpy(v, -1, SparseVector{{t.u, Rational(1)}});
    axpy(v, -1, SparseVector{{t.v, Rational(1)}});
    hyp.insert(v, 0);
    if (hyp.rank() >= target) break;
  }
  const std::size_t solution_dim = D.size() - hyp.rank();
  std::size_t inner_checked = 0, inner_bad = 0;
  const std::int64_t half = std::max<std::int64_t>(b.effective / 2, 1);
  if (solution_dim > r) {
    for (const auto& t : sums) {
      if (std::max({D[t.u].free_norm(), D[t.v].free_norm(), D[t.s].free_norm()}) > half) continue;
      SparseVector v;
      axpy(v, 1, SparseVector{{t.s, Rational(1)}});
      axpy(v, -1, SparseVector{{t.u, Rational(1)}});
      axpy(v, -1, SparseVector{{t.v, Rational(1)}});
      ++inner_checked;
      if (!hyp.contains(v)) ++inner_bad;
    }
  }

  // negative control: break additivity at one hypothesis sum
  bool control_detected = false;
  Json control;
  for (const auto& t : sums) {
    if (!t.hyp) continue;
    std::vector<std::int64_t> phi(r, 0);
    if (r) phi[0] = 1;
    auto f = values_of(phi);
    f[t.s] += 1;
    control_detected = !hypothesis_holds(f);
    control = {{"perturbed_at", detail::fmt(spec, D[t.s])},
               {"pair", detail::fmt(spec, D[t.u]) + " + " + detail::fmt(spec, D[t.v])},
               {"detected", control_detected}};
    break;
  }

  e.witness = {{"domain_size", D.size()},
               {"sum_triples", sums.size()},
               {"hypothesis_failures", hyp_bad},
               {"conclusion_failures", concl_bad},
               {"multiple_failures", mult_bad},
               {"derivations", derivs.size()},
               {"derivation_failures", deriv_bad},
               {"derivations_without_aux", no_aux},
               {"negations", negs.size()},
               {"negation_failures", neg_bad},
               {"hypothesis_rank", hyp.rank()},
               {"solution_space_dim", solution_dim},
               {"linear_functionals_dim", r},
               {"half_box_conclusions_checked", inner_checked},
               {"half_box_conclusions_not_implied", inner_bad},
               {"negative_control", control}};
  if (hyp_bad + concl_bad + mult_bad + deriv_bad + neg_bad > 0 || !control_detected) e.demote(Verdict::refuted);
  if (solution_dim > r && inner_bad > 0) {
    e.demote(Verdict::inconclusive);
    e.notes.push_back("hypothesis system on the box leaves nonlinear solutions near the edge");
  }
  return e;
}

}  // namespace hgl
