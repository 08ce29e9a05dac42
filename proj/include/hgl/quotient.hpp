#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hgl/complex.hpp"
#include "hgl/rational.hpp"
#include "hgl/wedge.hpp"

namespace hgl {

// Q (x) (H / Zz) with coordinates from the Smith form of the relations
// augmented by the row z.
class QuotientTensorSpace {
 public:
  QuotientTensorSpace(const GroupSpec& spec, const GroupElement& z);

  const GroupSpec& spec() const { return *spec_; }
  const GroupElement& z() const { return z_; }
  std::size_t dimension() const { return lifts_.size(); }
  std::vector<Rational> coordinates(const GroupElement& x) const;
  // lifts()[k] maps to the k-th unit vector.
  const std::vector<GroupElement>& lifts() const { return lifts_; }

 private:
  const GroupSpec* spec_;
  GroupElement z_;
  IntMatrix V_;
  std::vector<std::size_t> free_positions_;
  std::vector<GroupElement> lifts_;
};

// Element of Q (x) wedge^k: sorted index tuples -> coefficient.
using ExteriorVector = std::map<std::vector<std::uint32_t>, Rational>;

// [u1]^...^[up] |-> 1 (x) u1^...^u_{p-1}, linearly; terms must have grading z.
ExteriorVector f_map(const QuotientTensorSpace& q, const WedgeChain& c);
// t |-> sum c_I [l_I1]^...^[l_I(p-1)]^[z - sum l_I]; p = tuple size + 1.
WedgeChain g_map(const QuotientTensorSpace& q, const ExteriorVector& t);

std::string format(const ExteriorVector& v);
std::vector<Rational> as_vector(const ExteriorVector& v, std::size_t dim);  // degree-1 case

// [u+v]^[x] - [u]^[x+v] - [v]^[x+u]
WedgeChain ideal_generator(const GroupElement& u, const GroupElement& v, const GroupElement& x);

struct IdealMembership {
  bool member = false;
  bool conclusive = false;    // false: not found inside the enlarged box
  WedgeChain combination;     // sum of coefficient * generator, when member
  std::vector<std::pair<std::array<GroupElement, 3>, Rational>> generators;
  std::size_t generators_considered = 0;
  std::int64_t radius = 0;
};

// Span test against ideal generators whose terms stay in the box of radius
// enlarge * (max free norm of c). When f does not vanish on c the answer is
// a conclusive "no", since f kills every generator.
IdealMembership ideal_membership(const GroupSpec& spec, const WedgeChain& c, std::int64_t enlarge,
                                 std::uint64_t element_budget);

}  // namespace hgl
