#include "hgl/goldman.hpp"

#include <sstream>

namespace hgl {

AlgebraVector AlgebraVector::basis(const GroupElement& x, const Rational& c) {
  AlgebraVector a;
  a.add_term(x, c);
  return a;
}

void AlgebraVector::add_term(const GroupElement& x, const Rational& c) {
  if (hgl::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (hgl::is_zero(it->second)) terms_.erase(it);
}

Rational AlgebraVector::coefficient(const GroupElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraVector AlgebraVector::operator+(const AlgebraVector& o) const {
  AlgebraVector r = *this;
  for (const auto& [x, c] : o.terms_) r.add_term(x, c);
  return r;
}

AlgebraVector AlgebraVector::operator-(const AlgebraVector& o) const { return *this + (-o); }

AlgebraVector AlgebraVector::operator-() const { return Rational(-1) * *this; }

AlgebraVector operator*(const Rational& c, const AlgebraVector& a) {
  AlgebraVector r;
  if (is_zero(c)) return r;
  for (const auto& [x, v] : a.terms_) r.terms_.emplace(x, c * v);
  return r;
}

AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b) {
  AlgebraVector r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      const auto p = pairing(x, y);
      if (p != 0) r.add_term(x + y, cx * cy * Rational(static_cast<long>(p)));
    }
  return r;
}

bool TensorVector::is_zero() const {
  for (const auto& c : coords)
    if (!hgl::is_zero(c)) return false;
  return true;
}

TensorVector k_map(const GroupSpec& spec, const AlgebraVector& a) {
  TensorVector t{std::vector<Rational>(spec.free_rank())};
  for (const auto& [x, c] : a.terms()) {
    if (!spec.owns(x)) throw std::invalid_argument("k_map: element of another group");
    for (std::size_t i = 0; i < spec.free_rank(); ++i)
      if (x.coords()[i] != 0) t.coords[i] += c * Rational(static_cast<long>(x.coords()[i]));
  }
  return t;
}

bool in_gk(const GroupSpec& spec, const AlgebraVector& a) { return k_map(spec, a).is_zero(); }

std::string format(const GroupSpec& spec, const AlgebraVector& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [x, c] : a.terms()) {
    if (!first) out << " + ";
    out << to_string(c) << "*[" << spec.format(x) << "]";
    first = false;
  }
  return out.str();
}

}  // namespace hgl
