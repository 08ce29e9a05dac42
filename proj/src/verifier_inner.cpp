#include <algorithm>
#include <set>
#include <unordered_map>

#include "hgl/echelon.hpp"
#include "hgl/goldman.hpp"
#include "hgl/kernels.hpp"
#include "hgl/truncated_homology.hpp"
#include "verifier_util.hpp"

namespace hgl {

using detail::Box;
using detail::fmt;
using detail::make_box;
using detail::radius_json;

WedgeChain relation_chain(const GroupElement& u, const GroupElement& v, const GroupElement& z) {
  WedgeChain c(2);
  c.add({u + v, z - u - v}, 1);
  c.add({u, z - u}, -1);
  c.add({v, z - v}, -1);
  return c;
}

namespace {

bool factors_ok(const WedgeChain& w, const Support* within) {
  for (const auto& [t, c] : w.terms())
    for (const auto& x : t.factors())
      if (!is_derived_element(x) || (within && !within->contains(x))) return false;
  return true;
}

std::optional<SparseVector> pair_coordinates(const kernels::GradedFrame& frame, const WedgeChain& c) {
  SparseVector v;
  for (const auto& [w, coeff] : c.terms()) {
    const auto i = frame.extended().index_of(w[0]);
    if (!i || !frame.extended().contains(w[1])) return std::nullopt;
    axpy(v, coeff, SparseVector{{*i, Rational(1)}});
  }
  return v;
}

Wedge triple_wedge(const Support& s, const kernels::Triple& t) {
  return Wedge::from_sorted(Wedge::Factors{s[t[0]], s[t[1]], s[t[2]]});
}

// Closure of the factors of c (and the free unit vectors) under one or two
// rounds of pairwise sums, closed under x -> z - x.
Support local_closure(const GroupSpec& spec, const WedgeChain& c, const GroupElement& z, int rounds) {
  std::vector<GroupElement> base;
  for (const auto& [w, v] : c.terms())
    for (const auto& x : w.factors()) base.push_back(x);
  for (std::size_t i = 0; i < spec.coordinate_count(); ++i) {
    std::vector<std::int64_t> e(spec.coordinate_count(), 0);
    e[i] = 1;
    const auto g = spec.from_canonical(e);
    base.push_back(g);
    base.push_back(-g);
  }
  const Support seed(base);
  std::vector<GroupElement> cur(seed.begin(), seed.end());
  for (int r = 0; r < rounds; ++r) {
    const Support now(cur);
    std::vector<GroupElement> next(now.begin(), now.end());
    for (const auto& a : now)
      for (const auto& b : seed) next.push_back(a + b);
    cur = std::move(next);
  }
  const std::size_t n = cur.size();
  for (std::size_t i = 0; i < n; ++i) cur.push_back(z - cur[i]);
  return Support(std::move(cur));
}

}  // namespace

std::optional<WedgeChain> relation_witness(const GroupElement& u, const GroupElement& v, const GroupElement& z,
                                           std::span<const GroupElement> aux_candidates, const Support* within) {
  const WedgeChain target = relation_chain(u, v, z);
  const auto uv = pairing(u, v);
  if (uv != 0) {
    WedgeChain w(3);
    w.add({u, v, z - u - v}, Rational(-1) / Rational(static_cast<long>(uv)));
    if (factors_ok(w, within) && boundary(w) == target) return w;
  }
  for (const auto& x : aux_candidates) {
    const auto p1 = pairing(u + v, x), p2 = pairing(u, v + x), p3 = pairing(v, x);
    if (p1 == 0 || p2 == 0 || p3 == 0) continue;
    const GroupElement rest = z - u - v - x;
    WedgeChain w(3);
    w.add({u + v, x, rest}, Rational(1) / Rational(static_cast<long>(p1)));
    w.add({u, v + x, rest}, Rational(-1) / Rational(static_cast<long>(p2)));
    w.add({v, x, z - v - x}, Rational(-1) / Rational(static_cast<long>(p3)));
    if (factors_ok(w, within) && boundary(w) == target) return w;
  }
  return std::nullopt;
}

BoundaryWitness find_boundary_witness(const GroupSpec& spec, const WedgeChain& c, const VerifyOptions& opt) {
  BoundaryWitness out;
  if (c.is_zero()) {
    out.chain = WedgeChain(3);
    out.support_kind = "empty";
    return out;
  }
  const auto zg = c.grading();
  if (!zg || c.degree() != 2) throw std::invalid_argument("boundary witness: need a homogeneous 2-chain");
  const GroupElement z = *zg;

  auto attempt = [&](const Support& s, const std::string& kind) -> bool {
    auto triples = kernels::parallel::enumerate_triples(s, z, Restrict::derived_only);
    out.support_size = s.size();
    out.triples = triples.size();
    out.support_kind = kind;
    if (triples.size() > opt.triple_budget) return false;
    const kernels::GradedFrame frame(spec, s, z);
    const auto target = pair_coordinates(frame, c);
    if (!target) return false;
    sort_by_norm(s, triples);
    ColumnEchelon ech(frame.pair_row_count(), true);
    const auto cols = kernels::parallel::boundary3_columns(frame, triples);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k].size == 0) continue;
      SparseVector v;
      for (const auto& e : cols[k].view()) v.emplace_back(e.row, Rational(static_cast<long>(e.value)));
      ech.insert(v, static_cast<std::uint32_t>(k));
    }
    const auto comb = ech.express(*target);
    if (!comb) return false;
    WedgeChain w(3);
    for (const auto& [k, coeff] : *comb) w.add(triple_wedge(s, triples[k]), coeff);
    if (boundary(w) != c) return false;
    out.chain = std::move(w);
    return true;
  };

  const std::int64_t r = opt.enlarge * std::max<std::int64_t>(detail::max_norm(c), 1);
  if (box_size(spec, r) <= opt.element_budget && attempt(box_support(spec, r), "box"))
    return out;
  for (int rounds = 1; rounds <= 2; ++rounds)
    if (attempt(local_closure(spec, c, z, rounds), "closure-" + std::to_string(rounds))) return out;
  return out;
}

// ---------------------------------------------------------------------------
// inner component

namespace {

struct InnerData {
  std::size_t cycle_dim = 0;
  std::size_t f_rank = 0;
  std::size_t generator_rank = 0;
  std::size_t quotient_dim = 0;
  std::size_t bound = 0;
  std::size_t certified = 0;
  std::size_t direct = 0;
  std::size_t auxiliary = 0;
  std::size_t unwitnessed = 0;
  std::vector<std::string> relations;
};

// Derived pairs of grading z on the cycle box; boundaries certified by
// relation witnesses with factors in the boundary box.
InnerData inner_structure(const GroupSpec& spec, const GroupElement& z, const Support& cycle, const Support& bbox,
                          bool record) {
  InnerData d;
  const auto pairs = kernels::serial::enumerate_pairs(cycle, z, Restrict::derived_only);
  d.cycle_dim = pairs.size();
  std::unordered_map<GroupElement, std::pair<std::uint32_t, int>> slot;
  for (std::uint32_t k = 0; k < pairs.size(); ++k) {
    slot.emplace(cycle[pairs[k][0]], std::pair{k, 1});
    slot.emplace(cycle[pairs[k][1]], std::pair{k, -1});
  }

  const QuotientTensorSpace q(spec, z);
  d.quotient_dim = q.dimension();
  ColumnEchelon fe(q.dimension());
  for (const auto& p : pairs) fe.insert(sparse_from_dense(q.coordinates(cycle[p[0]])), 0);
  d.f_rank = fe.rank();
  for (const auto& x : cycle)
    if (is_derived_element(x)) fe.insert(sparse_from_dense(q.coordinates(x)), 0);
  d.generator_rank = fe.rank();
  d.bound = d.cycle_dim - d.f_rank;

  auto e_of = [&](const GroupElement& a, SparseVector& v, int sign) {
    if (a + a == z) return true;
    auto it = slot.find(a);
    if (it == slot.end()) return false;
    axpy(v, Rational(sign * it->second.second), SparseVector{{it->second.first, Rational(1)}});
    return true;
  };

  std::vector<GroupElement> derived;
  for (const auto& x : cycle)
    if (is_derived_element(x)) derived.push_back(x);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cand;
  for (std::uint32_t i = 0; i < derived.size(); ++i)
    for (std::uint32_t j = i; j < derived.size(); ++j)
      if (is_derived_element(derived[i] + derived[j])) cand.emplace_back(i, j);
  auto key = [&](const std::pair<std::uint32_t, std::uint32_t>& p) {
    return std::max(derived[p.first].free_norm(), derived[p.second].free_norm());
  };
  std::stable_sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

  const auto aux = detail::by_norm(bbox);
  std::vector<GroupElement> aux_derived;
  for (const auto& x : aux)
    if (is_derived_element(x)) aux_derived.push_back(x);

  ColumnEchelon ech(pairs.size());
  for (const auto& [i, j] : cand) {
    if (ech.rank() >= d.bound) break;
    const auto& u = derived[i];
    const auto& v = derived[j];
    SparseVector r;
    if (!e_of(u + v, r, 1) || !e_of(u, r, -1) || !e_of(v, r, -1)) continue;
    if (r.empty() || ech.contains(r)) continue;
    const auto w = relation_witness(u, v, z, aux_derived, &bbox);
    if (!w) {
      ++d.unwitnessed;
      continue;
    }
    ech.insert(r, 0);
    (w->size() == 1 ? d.direct : d.auxiliary)++;
    if (record)
      d.relations.push_back("rel(" + fmt(spec, u) + "," + fmt(spec, v) + ") = d3(" + format(spec, *w) + ")");
  }
  d.certified = ech.rank();
  return d;
}

}  // namespace

ReportEntry inner_h2_certify(const GroupSpec& spec, const GroupElement& z, std::int64_t box,
                             std::int64_t boundary_box, const VerifyOptions& opt) {
  if (!in_kernel_mu(z)) throw ParameterError("inner component needs z in ker mu");
  ReportEntry e;
  e.id = "inner_h2" + detail::grading_tag(spec, z);
  const Box cyc = make_box(spec, box, opt.element_budget);
  const Box bnd = make_box(spec, std::max(boundary_box, cyc.effective), opt.scan_budget);
  e.params = {{"z", fmt(spec, z)}, {"cycle_radius", radius_json(cyc)}, {"boundary_radius", radius_json(bnd)}};
  if (boundary_box < 3 * box) e.notes.push_back("boundary box below 3x the cycle box");

  const InnerData d = inner_structure(spec, z, cyc.support, bnd.support, true);

  // (a) f vanishes on boundaries of derived 3-wedges
  Json fcheck;
  {
    const Box fb = make_box(spec, bnd.effective, opt.element_budget);
    const kernels::GradedFrame frame(spec, fb.support, z);
    const QuotientTensorSpace q(spec, z);
    std::vector<std::vector<Rational>> rows(frame.pair_row_count());
    for (std::uint32_t r = 0; r < rows.size(); ++r) rows[r] = q.coordinates(frame.extended()[r]);
    auto triples = kernels::parallel::enumerate_triples(fb.support, z, Restrict::derived_only);
    bool sampled = false;
    if (triples.size() > opt.triple_budget) {
      auto rng = detail::rng_for(opt.seed, e.id);
      std::vector<kernels::Triple> pick;
      for (std::size_t k = 0; k < opt.triple_budget; ++k) pick.push_back(triples[detail::draw(rng, triples.size())]);
      triples = std::move(pick);
      sampled = true;
    }
    std::size_t first = 0;
    const auto bad = kernels::parallel::count_functional_violations(frame, triples, rows, &first);
    fcheck = {{"radius", fb.effective}, {"mode", sampled ? "sampled" : "exhaustive"}, {"triples", triples.size()},
              {"violations", bad}};
    if (bad > 0) {
      const auto& t = triples[first];
      fcheck["counterexample"] = format(spec, triple_wedge(fb.support, t));
      e.demote(Verdict::refuted);
    }
  }

  e.witness = {{"quotient_dim", d.quotient_dim},
               {"cycle_dim", d.cycle_dim},
               {"f_rank", d.f_rank},
               {"generator_image_rank", d.generator_rank},
               {"kernel_of_f_dim", d.bound},
               {"boundaries_certified", d.certified},
               {"direct_witnesses", d.direct},
               {"auxiliary_witnesses", d.auxiliary},
               {"f_kills_boundaries", fcheck},
               {"relations", bounded_listing(d.relations)}};

  if (d.certified < d.bound) {
    e.demote(Verdict::inconclusive);
    e.notes.push_back("not every cycle in ker f was bounded inside the boundary box");
  }
  if (d.f_rank != d.generator_rank) {
    e.demote(Verdict::inconclusive);
    e.notes.push_back("f image on box cycles misses some 1(x)u, u in the box");
  }
  if (d.f_rank != d.quotient_dim) {
    e.demote(Verdict::inconclusive);
    e.notes.push_back("box too small to reach all of Q(x)(H/Zz)");
  }

  // dual route: brute-force elimination when it fits the budget
  if (box_size(spec, boundary_box) <= opt.element_budget) {
    const Support big = box_support(spec, boundary_box);
    const auto n = kernels::serial::enumerate_triples(big, z, Restrict::derived_only).size();
    if (n <= opt.triple_budget) {
      const auto t = truncated_h2(spec, cyc.support, big, z, Restrict::derived_only, d.bound);
      e.witness["brute_force"] = {{"h2", t.h2}, {"boundary_dim", t.boundary_dim}, {"triples_used", t.triples_used},
                                  {"triples_total", t.triples_total}};
      if (t.h2 != d.f_rank) e.demote(Verdict::inconclusive);
    }
  }
  e.witness["inner_dim"] = d.cycle_dim - d.certified;
  return e;
}

ReportEntry main_theorem_check(const GroupSpec& spec, const GroupElement& z, std::int64_t box,
                               std::int64_t boundary_box, const VerifyOptions& opt) {
  ReportEntry e;
  e.id = "main_theorem" + detail::grading_tag(spec, z);
  const Box cyc = make_box(spec, box, opt.element_budget);
  const bool inner = in_kernel_mu(z);
  e.params = {{"z", fmt(spec, z)}, {"component", inner ? "inner" : "outer"}, {"cycle_radius", radius_json(cyc)}};

  const auto full = kernels::serial::enumerate_pairs(cyc.support, z, Restrict::full);
  const std::size_t kernel_pairs = count_kernel_pairs(cyc.support, z);
  if (spec.form_is_zero()) {
    e.notes.push_back("form is identically zero: hypothesis fails, theorem not applicable (abelian case)");
    e.witness = {{"cycle_dim", full.size()}, {"boundary_dim", 0}, {"h2", full.size()},
                 {"predicted", full.size()}, {"method", "zero differential"}};
    return e;
  }

  const auto derived = kernels::serial::enumerate_pairs(cyc.support, z, Restrict::derived_only);
  std::size_t inner_dim = 0, quotient_dim = 0;
  if (inner) {
    const QuotientTensorSpace q(spec, z);
    quotient_dim = q.dimension();
    ColumnEchelon fe(q.dimension());
    for (const auto& p : derived) fe.insert(sparse_from_dense(q.coordinates(cyc.support[p[0]])), 0);
    inner_dim = fe.rank();
  }
  const std::size_t predicted = kernel_pairs + inner_dim;
  bool d2_nonzero = false;
  for (const auto& p : full)
    if (pairing(cyc.support[p[0]], z) != 0) d2_nonzero = true;
  const std::size_t cycle_dim = full.size() - (d2_nonzero ? 1 : 0);
  const std::size_t bound = cycle_dim - predicted;

  e.witness = {{"chain_dim", full.size()},
               {"cycle_dim", cycle_dim},
               {"kernel_pairs", kernel_pairs},
               {"derived_pairs", derived.size()},
               {"inner_dim", inner_dim},
               {"quotient_dim", quotient_dim},
               {"predicted", predicted}};

  // brute force on the largest boundary box that fits the budgets
  std::int64_t rb = std::max(cyc.effective, radius_within_budget(spec, boundary_box, opt.element_budget));
  std::optional<TruncatedH2> brute;
  for (; rb >= cyc.effective; --rb) {
    const Support big = box_support(spec, rb);
    if (kernels::serial::enumerate_triples(big, z, Restrict::full).size() > opt.triple_budget) continue;
    brute = truncated_h2(spec, cyc.support, big, z, Restrict::full, bound);
    break;
  }
  if (brute) {
    e.params["boundary_radius"] = Json{{"requested", boundary_box}, {"effective", rb}};
    e.witness["boundary_dim"] = brute->boundary_dim;
    e.witness["h2"] = brute->h2;
    e.witness["brute_force"] = {{"triples_used", brute->triples_used}, {"triples_total", brute->triples_total}};
    if (brute->h2 == predicted) {
      e.witness["method"] = "elimination";
      return e;
    }
  }

  // witness route: inner relation witnesses or the outer homotopy
  const ReportEntry sub = inner ? inner_h2_certify(spec, z, box, boundary_box, opt) : outer_h2_certify(spec, z, box, opt);
  e.witness["method"] = inner ? "relation witnesses" : "contracting homotopy";
  e.witness["sub_check"] = {{"id", sub.id}, {"verdict", to_string(sub.verdict)}};
  if (sub.verdict == Verdict::certified) {
    e.witness["boundary_dim"] = bound;
    e.witness["h2"] = predicted;
    if (inner) e.notes.push_back("kernel pairs are cycles and never meet a boundary at inner gradings");
  } else {
    e.demote(sub.verdict);
    if (brute) e.witness["h2_upper_bound"] = brute->h2;
  }
  return e;
}

ReportEntry h1_check(const GroupSpec& spec, const GroupElement& z, const VerifyOptions& opt) {
  ReportEntry e;
  e.id = "h1" + detail::grading_tag(spec, z);
  const Box b = make_box(spec, opt.enlarge * std::max(opt.box, z.free_norm()), opt.scan_budget);
  e.params = {{"z", fmt(spec, z)}, {"pair_radius", radius_json(b)}};
  const bool central = in_kernel_mu(z);
  WedgeChain target(1);
  target.add({z}, 1);
  if (!central) {
    const auto y = choose_y(b.support, z);
    if (!y) {
      e.demote(Verdict::inconclusive);
      return e;
    }
    WedgeChain w(2);
    w.add({*y, z - *y}, Rational(-1) / Rational(static_cast<long>(pairing(*y, z))));
    const bool ok = boundary(w) == target;
    e.witness = {{"h1_dim", ok ? 0 : 1}, {"expected", 0}, {"preimage_of_z", format(spec, w)}};
    if (!ok) e.demote(Verdict::refuted);
    return e;
  }
  const auto pairs = kernels::serial::enumerate_pairs(b.support, z, Restrict::full);
  std::size_t nonzero = 0;
  for (const auto& p : pairs)
    if (!boundary(Wedge::from_sorted(Wedge::Factors{b.support[p[0]], b.support[p[1]]})).is_zero()) ++nonzero;
  e.witness = {{"h1_dim", nonzero == 0 ? 1 : 0}, {"expected", 1}, {"pairs_checked", pairs.size()},
               {"nonzero_boundaries", nonzero}};
  if (nonzero) e.demote(Verdict::refuted);
  return e;
}

// ---------------------------------------------------------------------------

WedgeChain gk_cycle(const GroupElement& u, const GroupElement& z) {
  const std::vector<std::pair<GroupElement, Rational>> a = {{u + u, 1}, {u, -2}};
  const std::vector<std::pair<GroupElement, Rational>> b = {{z - u - u, 1}, {z - u, -2}, {z, 1}};
  WedgeChain c(2);
  for (const auto& [x, s] : a)
    for (const auto& [y, t] : b) c.add({x, y}, s * t);
  return c;
}

ReportEntry gk_cycle_check(const GroupSpec& spec, const GroupElement& u, const GroupElement& z,
                           const VerifyOptions& opt) {
  if (!is_derived_element(u)) throw ParameterError("gk cycle needs u outside ker mu");
  if (!in_kernel_mu(z)) throw ParameterError("gk cycle needs z in ker mu");
  ReportEntry e;
  e.id = "gk_cycle[u=" + fmt(spec, u) + ",z=" + fmt(spec, z) + "]";
  e.params = {{"u", fmt(spec, u)}, {"z", fmt(spec, z)}, {"enlarge", opt.enlarge}};

  AlgebraVector x = AlgebraVector::basis(u + u) - Rational(2) * AlgebraVector::basis(u);
  AlgebraVector y = AlgebraVector::basis(z - u - u) - Rational(2) * AlgebraVector::basis(z - u) + AlgebraVector::basis(z);
  const bool in_a = in_gk(spec, x), in_b = in_gk(spec, y);
  const WedgeChain c = gk_cycle(u, z);
  const bool cycle = boundary(c).is_zero();
  if (!in_a || !in_b || !cycle) e.demote(Verdict::refuted);

  WedgeChain target = project_derived(c);
  target.add({u, z - u}, -6);
  WedgeChain w(3);
  Json parts = Json::array();
  std::set<GroupElement> gradings;
  for (const auto& [t, v] : target.terms()) gradings.insert(grading(t));
  for (const auto& g : gradings) {
    const WedgeChain part = target.component(g);
    Json pj = {{"grading", fmt(spec, g)}, {"chain", format(spec, part)}};
    if (in_kernel_mu(g)) {
      const auto bw = find_boundary_witness(spec, part, opt);
      pj["route"] = "derived elimination";
      pj["support"] = bw.support_kind;
      pj["support_size"] = bw.support_size;
      if (bw.chain) {
        w.add(*bw.chain);
        pj["witness_terms"] = bw.chain->size();
      } else {
        e.demote(Verdict::inconclusive);
      }
    } else {
      const Box b = make_box(spec, opt.enlarge * std::max<std::int64_t>(detail::max_norm(part), 1), opt.scan_budget);
      const auto yy = choose_y(b.support, g);
      pj["route"] = "projected homotopy";
      if (!yy) {
        e.demote(Verdict::inconclusive);
      } else {
        const ContractingHomotopy h(spec, g, *yy);
        const WedgeChain pw = project_derived(h.phi2(part));
        pj["y"] = fmt(spec, *yy);
        pj["witness_terms"] = pw.size();
        w.add(pw);
      }
    }
    parts.push_back(pj);
  }
  const bool bounded = boundary(w) == target && is_derived_only(w);
  if (!bounded) e.demote(Verdict::inconclusive);
  e.witness = {{"first_factor_in_gk", in_a},
               {"second_factor_in_gk", in_b},
               {"is_cycle", cycle},
               {"chain", format(spec, c)},
               {"projected_minus_6e_u", format(spec, target)},
               {"parts", parts},
               {"boundary_witness_terms", w.size()},
               {"boundary_witness_digest", digest(format(spec, w))},
               {"witness_verified", bounded}};
  return e;
}

// ---------------------------------------------------------------------------

ReportEntry surface_generator_check(const GroupSpec& spec, int genus, int nboundary, const GroupElement& z,
                                    const VerifyOptions& opt) {
  if (genus < 1) throw ParameterError("surface generator check needs genus >= 1");
  if (spec.n_generators() != static_cast<std::size_t>(2 * genus + nboundary))
    throw ParameterError("presentation is not surface(g, r)");
  if (!in_kernel_mu(z)) throw ParameterError("surface generator check needs z in ker mu");
  ReportEntry e;
  e.id = "surface_generators" + detail::grading_tag(spec, z);
  e.params = {{"genus", genus}, {"boundary", nboundary}, {"z", fmt(spec, z)}};
  const QuotientTensorSpace q(spec, z);
  const auto& names = spec.names();
  const GroupElement ag = spec.generator(2 * genus - 2), bg = spec.generator(2 * genus - 1);

  auto pair_class = [&](const GroupElement& a) {
    WedgeChain c(2);
    c.add({a, z - a}, 1);
    return c;
  };
  auto d_class = [&](const GroupElement& cj, const GroupElement& h) {
    WedgeChain c = pair_class(cj - h);
    c.add(pair_class(h));
    return c;
  };

  ColumnEchelon span(q.dimension());
  Json images = Json::object();
  bool images_ok = true;
  for (int i = 0; i < 2 * genus; ++i) {
    const auto x = spec.generator(i);
    const auto im = f_map(q, pair_class(x));
    span.insert(sparse_from_dense(as_vector(im, q.dimension())), 0);
    images[names[i]] = format(im);
  }
  Json dj = Json::array();
  for (int j = 0; j < nboundary; ++j) {
    const auto cj = spec.generator(2 * genus + j);
    const WedgeChain d = d_class(cj, ag);
    const WedgeChain d2 = d_class(cj, bg);
    const auto im = f_map(q, d);
    const auto expect = q.coordinates(cj);
    const bool match = as_vector(im, q.dimension()) == expect;
    images_ok = images_ok && match;
    span.insert(sparse_from_dense(expect), 0);
    images[names[2 * genus + j]] = format(im);

    const WedgeChain diff = d - d2;
    const auto bw = find_boundary_witness(spec, diff, opt);
    if (!bw.chain) e.demote(Verdict::inconclusive);
    Json item = {{"generator", names[2 * genus + j]},
                 {"class", format(spec, d)},
                 {"f_equals_1(x)C", match},
                 {"difference_with_B" + std::to_string(genus) + "_bounded", bw.chain.has_value()},
                 {"witness_support", bw.support_kind},
                 {"witness_terms", bw.chain ? bw.chain->size() : 0}};
    if (cj + cj != z) {
      WedgeChain literal = pair_class(cj) - d;
      item["literal_difference"] = format(spec, literal);
      item["separating_functional"] = "coefficient of [" + fmt(spec, cj) + "]^[" + fmt(spec, z - cj) + "]";
      const auto key = Wedge::normalize({cj, z - cj}).value();
      item["functional_on_difference"] = to_string(Rational(key.second) * literal.coefficient(key.first));
    }
    dj.push_back(item);
  }
  if (!images_ok) e.demote(Verdict::refuted);
  const bool spans = span.rank() == q.dimension();
  if (!spans) e.demote(Verdict::inconclusive);

  // the functional is zero on every boundary: kernel-pair rows never occur in d3 columns
  const Box fb = make_box(spec, opt.box, opt.element_budget);
  const kernels::GradedFrame frame(spec, fb.support, z);
  std::vector<std::vector<Rational>> rows(frame.pair_row_count(), std::vector<Rational>(1));
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    if (in_kernel_mu(frame.extended()[r])) rows[r][0] = 1;
  auto triples = kernels::parallel::enumerate_triples(fb.support, z, Restrict::full);
  if (triples.size() > opt.triple_budget) triples.resize(opt.triple_budget);
  const auto bad = kernels::parallel::count_functional_violations(frame, triples, rows, nullptr);
  if (bad) e.demote(Verdict::refuted);

  e.witness = {{"quotient_dim", q.dimension()},
               {"image_rank", span.rank()},
               {"images", images},
               {"boundary_generators", dj},
               {"kernel_pair_functional", {{"radius", fb.effective}, {"triples", triples.size()}, {"violations", bad}}}};
  e.notes.push_back("[Cj]^[z-Cj] itself is a kernel pair; the class standing for 1(x)Cj is [Cj-Ag]^[z-Cj+Ag] + [Ag]^[z-Ag]");
  return e;
}

}  // namespace hgl
