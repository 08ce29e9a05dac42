#include <algorithm>

#include "hgl/kernels.hpp"
#include "hgl/linalg.hpp"
#include "verifier_util.hpp"

namespace hgl {

namespace {

Json coefficients_json(const HomotopyCoefficients& k) {
  return {{"phi1", to_string(k.phi1)}, {"a", to_string(k.a)}, {"b", to_string(k.b)}, {"c", to_string(k.c)}};
}

std::size_t identity_failures(const GroupSpec& spec, const GroupElement& z, const GroupElement& y,
                              const HomotopyCoefficients& k, std::span<const Wedge> wedges) {
  const ContractingHomotopy h(spec, z, y, k);
  std::size_t bad = 0;
  for (const auto& w : wedges)
    if (!h.defect(w).is_zero()) ++bad;
  return bad;
}

}  // namespace

ReportEntry outer_h2_certify(const GroupSpec& spec, const GroupElement& z, std::int64_t box,
                             const VerifyOptions& opt) {
  if (!is_derived_element(z)) throw ParameterError("outer component needs z outside ker mu");
  ReportEntry e;
  e.id = "outer_h2" + detail::grading_tag(spec, z);
  const detail::Box b = detail::make_box(spec, box, opt.element_budget);
  e.params = {{"z", detail::fmt(spec, z)}, {"cycle_radius", detail::radius_json(b)}};

  std::vector<Wedge> wedges;
  for (const auto& p : kernels::serial::enumerate_pairs(b.support, z, Restrict::full))
    wedges.push_back(Wedge::from_sorted(Wedge::Factors{b.support[p[0]], b.support[p[1]]}));

  // y choices: the canonical one first, then small-norm alternatives
  const detail::Box yb = detail::make_box(spec, std::max<std::int64_t>(box, 2), opt.scan_budget);
  std::vector<GroupElement> ys;
  if (const auto y0 = choose_y(yb.support, z)) ys.push_back(*y0);
  for (const auto& y : y_candidates(yb.support, z, 4))
    if (ys.size() < 3 && std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
  if (ys.empty()) {
    e.demote(Verdict::inconclusive);
    e.notes.push_back("no y with <y,z> != 0 in the box");
    return e;
  }

  HomotopyCoefficients used;
  Json per_y = Json::array();
  std::size_t failures = 0;
  for (const auto& y : ys) {
    const auto bad = identity_failures(spec, z, y, used, wedges);
    failures += bad;
    per_y.push_back({{"y", detail::fmt(spec, y)}, {"wedges", wedges.size()}, {"failures", bad}});
  }

  const std::size_t cal_n = std::min<std::size_t>(wedges.size(), 24);
  const std::size_t cal_y = std::min<std::size_t>(ys.size(), 2);
  Json cal_json;
  if (cal_n > 0) {
    const auto cal = calibrate_homotopy(spec, z, std::span(ys).first(cal_y), std::span(wedges).first(cal_n));
    cal_json = {{"equations", cal.equations}, {"feasible", cal.feasible}, {"free_parameters", cal.free_parameters}};
    if (cal.coefficients) {
      cal_json["solution"] = coefficients_json(*cal.coefficients);
      cal_json["matches_displayed"] = *cal.coefficients == HomotopyCoefficients{};
    }
    if (failures > 0 && cal.coefficients) {
      std::size_t after = 0;
      for (const auto& y : ys) after += identity_failures(spec, z, y, *cal.coefficients, wedges);
      e.notes.push_back("displayed homotopy fails on " + std::to_string(failures) +
                        " wedge checks; corrected coefficients applied");
      if (after == 0) used = *cal.coefficients;
      failures = after;
    }
  }
  if (failures > 0) e.demote(Verdict::inconclusive);

  // cycles of C2 on the box: kernel of the single row of d2
  SparseRationalMatrix d2(1, wedges.size());
  for (std::size_t k = 0; k < wedges.size(); ++k)
    d2.add(0, k, Rational(static_cast<long>(-pairing(wedges[k][0], wedges[k][1]))));
  const auto basis = kernel_basis(d2);
  const ContractingHomotopy h(spec, z, ys.front(), used);
  std::vector<std::string> listing;
  std::size_t bounded = 0;
  for (const auto& v : basis) {
    WedgeChain c(2);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!is_zero(v[k])) c.add(wedges[k], v[k]);
    const WedgeChain w = h.phi2(c);
    if (boundary(w) == c) ++bounded;
    listing.push_back(format(spec, c) + " = d3(" + format(spec, w) + ")");
  }
  if (bounded != basis.size()) e.demote(Verdict::inconclusive);

  e.witness = {{"y", detail::fmt(spec, ys.front())},
               {"chain_dim", wedges.size()},
               {"cycle_dim", basis.size()},
               {"cycles_bounded", bounded},
               {"identity_checks", per_y},
               {"coefficients_used", coefficients_json(used)},
               {"calibration", cal_json},
               {"witnesses", bounded_listing(listing)}};
  if (basis.empty()) e.notes.push_back("no cycles in the box: vacuous");
  return e;
}

}  // namespace hgl
