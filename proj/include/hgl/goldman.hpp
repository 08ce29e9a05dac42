#pragma once

#include <map>
#include <string>
#include <vector>

#include "hgl/group.hpp"
#include "hgl/rational.hpp"

namespace hgl {

// Element of Q[H]: finitely many [x] with nonzero rational coefficients.
class AlgebraVector {
 public:
  using Terms = std::map<GroupElement, Rational>;

  AlgebraVector() = default;
  static AlgebraVector basis(const GroupElement& x, const Rational& c = 1);

  void add_term(const GroupElement& x, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const GroupElement& x) const;

  AlgebraVector operator+(const AlgebraVector& o) const;
  AlgebraVector operator-(const AlgebraVector& o) const;
  AlgebraVector operator-() const;
  friend AlgebraVector operator*(const Rational& c, const AlgebraVector& a);
  bool operator==(const AlgebraVector& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

// [[x],[y]] = <x,y>[x+y], extended bilinearly.
AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b);

// Image in Q (x) H, as rational coordinates on the free part.
struct TensorVector {
  std::vector<Rational> coords;
  bool is_zero() const;
  bool operator==(const TensorVector&) const = default;
};

TensorVector k_map(const GroupSpec& spec, const AlgebraVector& a);
bool in_gk(const GroupSpec& spec, const AlgebraVector& a);

std::string format(const GroupSpec& spec, const AlgebraVector& a);

}  // namespace hgl
