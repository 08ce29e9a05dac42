#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hgl/complex.hpp"
#include "hgl/linalg.hpp"
#include "hgl/wedge.hpp"

namespace hgl {

// Phi1([z])       = phi1 / <y,z> [y]^[z-y]
// Phi2([u]^[v])   = a / <y,z> ([y]^[u-y]^[v] + [y]^[u]^[v-y])
//                 + b / <y,z> [2y]^[u-y]^[v-y]
//                 + c <u-y,v-y> / <y,z>^2 [y]^[2y]^[z-3y]
struct HomotopyCoefficients {
  Rational phi1 = -1;
  Rational a = -1;
  Rational b = Rational(1, 2);
  Rational c = Rational(1, 2);
  bool operator==(const HomotopyCoefficients&) const = default;
};

// Contracting homotopy on the components of grading z with <y,z> != 0.
class ContractingHomotopy {
 public:
  ContractingHomotopy(const GroupSpec& spec, const GroupElement& z, const GroupElement& y,
                      HomotopyCoefficients coeffs = {});

  const GroupElement& z() const { return z_; }
  const GroupElement& y() const { return y_; }
  std::int64_t yz() const { return yz_; }
  const HomotopyCoefficients& coefficients() const { return k_; }

  WedgeChain phi1(const Rational& coefficient_of_z) const;
  WedgeChain phi2(const Wedge& w) const;
  WedgeChain phi2(const WedgeChain& c) const;
  // d3 Phi2(w) + Phi1 d2(w) - w; zero when the homotopy is exact on w.
  WedgeChain defect(const Wedge& w) const;

 private:
  GroupElement z_, y_;
  std::int64_t yz_;
  HomotopyCoefficients k_;
};

// Smallest box element (canonical order) pairing nontrivially with z.
std::optional<GroupElement> choose_y(const Support& box, const GroupElement& z);
// All box elements pairing nontrivially with z, by increasing norm.
std::vector<GroupElement> y_candidates(const Support& box, const GroupElement& z, std::size_t limit);

struct Calibration {
  std::optional<HomotopyCoefficients> coefficients;  // unique solution, if any
  bool feasible = false;
  std::size_t free_parameters = 0;  // dimension of the solution set
  std::size_t equations = 0;
  SparseRationalMatrix system;
  std::vector<Rational> rhs;
  AffineResult result;
};

// Solves d3 Phi2 + Phi1 d2 = id on the given 2-wedges for (phi1, a, b, c),
// pooling every listed y.
Calibration calibrate_homotopy(const GroupSpec& spec, const GroupElement& z, std::span<const GroupElement> ys,
                               std::span<const Wedge> wedges);

}  // namespace hgl
