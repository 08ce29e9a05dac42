#include "hgl/homotopy.hpp"

#include <algorithm>
#include <map>

namespace hgl {

ContractingHomotopy::ContractingHomotopy(const GroupSpec& spec, const GroupElement& z, const GroupElement& y,
                                         HomotopyCoefficients coeffs)
    : z_(z), y_(y), yz_(pairing(y, z)), k_(std::move(coeffs)) {
  if (!spec.owns(z) || !spec.owns(y)) throw std::invalid_argument("homotopy: elements of another group");
  if (yz_ == 0) throw std::invalid_argument("homotopy needs <y,z> != 0");
}

WedgeChain ContractingHomotopy::phi1(const Rational& coefficient_of_z) const {
  WedgeChain out(2);
  out.add({y_, z_ - y_}, coefficient_of_z * k_.phi1 / Rational(static_cast<long>(yz_)));
  return out;
}

WedgeChain ContractingHomotopy::phi2(const Wedge& w) const {
  if (w.degree() != 2) throw std::invalid_argument("phi2 takes 2-wedges");
  if (grading(w) != z_) throw std::invalid_argument("phi2: wedge outside grading z");
  const GroupElement& u = w[0];
  const GroupElement& v = w[1];
  const Rational s = Rational(1) / Rational(static_cast<long>(yz_));
  const GroupElement y2 = y_ + y_;
  WedgeChain out(3);
  out.add({y_, u - y_, v}, k_.a * s);
  out.add({y_, u, v - y_}, k_.a * s);
  out.add({y2, u - y_, v - y_}, k_.b * s);
  out.add({y_, y2, z_ - y2 - y_}, k_.c * Rational(static_cast<long>(pairing(u - y_, v - y_))) * s * s);
  return out;
}

WedgeChain ContractingHomotopy::phi2(const WedgeChain& c) const {
  WedgeChain out(3);
  for (const auto& [w, coeff] : c.terms()) out.add(phi2(w), coeff);
  return out;
}

WedgeChain ContractingHomotopy::defect(const Wedge& w) const {
  WedgeChain out = boundary(phi2(w));
  out.add(phi1(-Rational(static_cast<long>(pairing(w[0], w[1])))), 1);
  out.add(w, -1);
  return out;
}

std::optional<GroupElement> choose_y(const Support& box, const GroupElement& z) {
  for (const auto& y : box)
    if (pairing(y, z) != 0) return y;
  return std::nullopt;
}

std::vector<GroupElement> y_candidates(const Support& box, const GroupElement& z, std::size_t limit) {
  std::vector<GroupElement> out;
  for (const auto& y : box)
    if (pairing(y, z) != 0) out.push_back(y);
  std::stable_sort(out.begin(), out.end(),
                   [](const GroupElement& a, const GroupElement& b) { return a.free_norm() < b.free_norm(); });
  if (out.size() > limit) out.resize(limit);
  return out;
}

Calibration calibrate_homotopy(const GroupSpec& spec, const GroupElement& z, std::span<const GroupElement> ys,
                               std::span<const Wedge> wedges) {
  const HomotopyCoefficients units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  std::map<std::pair<std::size_t, Wedge>, std::uint32_t> row_of;
  auto row = [&](std::size_t yi, const Wedge& w) {
    auto [it, inserted] = row_of.try_emplace({yi, w}, static_cast<std::uint32_t>(row_of.size()));
    return it->second;
  };
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> cols(4);
  std::vector<std::pair<std::uint32_t, Rational>> rhs;
  for (std::size_t yi = 0; yi < ys.size(); ++yi) {
    for (const auto& w : wedges) {
      rhs.emplace_back(row(yi, w), 1);
      for (int k = 0; k < 4; ++k) {
        const ContractingHomotopy h(spec, z, ys[yi], units[k]);
        WedgeChain image = boundary(h.phi2(w));
        image.add(h.phi1(-Rational(static_cast<long>(pairing(w[0], w[1])))), 1);
        for (const auto& [t, c] : image.terms()) cols[k].emplace_back(row(yi, t), c);
      }
    }
  }
  Calibration out;
  out.equations = row_of.size();
  out.system = SparseRationalMatrix(row_of.size(), 4);
  for (int k = 0; k < 4; ++k)
    for (const auto& [r, c] : cols[k]) out.system.add(r, k, c);
  out.rhs.assign(row_of.size(), 0);
  for (const auto& [r, c] : rhs) out.rhs[r] += c;
  out.result = solve_affine(out.system, out.rhs);
  out.feasible = out.result.feasible();
  out.free_parameters = 4 - rank(out.system);
  if (out.feasible && out.free_parameters == 0) {
    const auto& x = *out.result.solution;
    out.coefficients = HomotopyCoefficients{x[0], x[1], x[2], x[3]};
  }
  return out;
}

}  // namespace hgl
