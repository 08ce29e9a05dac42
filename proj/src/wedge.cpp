#include "hgl/wedge.hpp"

#include <algorithm>
#include <sstream>

namespace hgl {

std::optional<std::pair<Wedge, int>> Wedge::normalize(std::span<const GroupElement> factors) {
  Factors f(factors.begin(), factors.end());
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < f.size(); ++i)
    for (std::size_t j = i; j > 0 && f[j] < f[j - 1]; --j) {
      std::swap(f[j], f[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1]) return std::nullopt;
  Wedge w;
  w.factors_ = std::move(f);
  return std::make_pair(std::move(w), sign);
}

Wedge Wedge::from_sorted(Factors factors) {
  Wedge w;
  w.factors_ = std::move(factors);
  return w;
}

std::strong_ordering Wedge::operator<=>(const Wedge& o) const {
  return std::lexicographical_compare_three_way(factors_.begin(), factors_.end(), o.factors_.begin(),
                                                o.factors_.end());
}

GroupElement grading(const Wedge& w) {
  if (w.degree() == 0) throw std::invalid_argument("grading of the empty wedge");
  GroupElement s = w[0];
  for (std::size_t i = 1; i < w.degree(); ++i) s += w[i];
  return s;
}

void WedgeChain::add(std::span<const GroupElement> factors, const Rational& c) {
  if (hgl::is_zero(c)) return;
  auto n = Wedge::normalize(factors);
  if (!n) return;
  add(n->first, n->second > 0 ? c : Rational(-c));
}

void WedgeChain::add(const Wedge& w, const Rational& c) {
  if (hgl::is_zero(c)) return;
  if (degree_ == 0) degree_ = w.degree();
  if (w.degree() != degree_) throw std::invalid_argument("wedge degree does not match chain degree");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (hgl::is_zero(it->second)) terms_.erase(it);
}

void WedgeChain::add(const WedgeChain& o, const Rational& c) {
  if (hgl::is_zero(c)) return;
  for (const auto& [w, v] : o.terms_) add(w, c * v);
}

Rational WedgeChain::coefficient(const Wedge& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<GroupElement> WedgeChain::grading() const {
  if (terms_.empty()) return std::nullopt;
  const auto z = hgl::grading(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (hgl::grading(w) != z) return std::nullopt;
  return z;
}

bool WedgeChain::is_homogeneous() const { return terms_.empty() || grading().has_value(); }

WedgeChain WedgeChain::component(const GroupElement& z) const {
  WedgeChain r(degree_);
  for (const auto& [w, c] : terms_)
    if (hgl::grading(w) == z) r.terms_.emplace(w, c);
  return r;
}

WedgeChain WedgeChain::operator+(const WedgeChain& o) const {
  WedgeChain r = *this;
  r.add(o);
  return r;
}

WedgeChain WedgeChain::operator-(const WedgeChain& o) const {
  WedgeChain r = *this;
  r.add(o, -1);
  return r;
}

WedgeChain operator*(const Rational& c, const WedgeChain& a) {
  WedgeChain r(a.degree_);
  if (is_zero(c)) return r;
  for (const auto& [w, v] : a.terms_) r.terms_.emplace(w, c * v);
  return r;
}

WedgeChain boundary(const Wedge& w) {
  const std::size_t p = w.degree();
  WedgeChain out(p > 0 ? p - 1 : 0);
  if (p < 2) return out;
  std::vector<GroupElement> f;
  f.reserve(p - 1);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      const auto pr = pairing(w[i], w[j]);
      if (pr == 0) continue;
      f.clear();
      f.push_back(w[i] + w[j]);
      for (std::size_t k = 0; k < p; ++k)
        if (k != i && k != j) f.push_back(w[k]);
      // positions are 1-based in the formula, so (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
      const long sign = ((i + j) % 2 == 0) ? 1 : -1;
      out.add(std::span<const GroupElement>(f), Rational(sign * pr));
    }
  return out;
}

WedgeChain boundary(const WedgeChain& c) {
  WedgeChain out(c.degree() > 0 ? c.degree() - 1 : 0);
  for (const auto& [w, v] : c.terms()) out.add(boundary(w), v);
  return out;
}

WedgeChain project_derived(const WedgeChain& c) {
  WedgeChain out(c.degree());
  for (const auto& [w, v] : c.terms())
    if (std::all_of(w.factors().begin(), w.factors().end(), [](const auto& x) { return is_derived_element(x); }))
      out.add(w, v);
  return out;
}

bool is_derived_only(const WedgeChain& c) { return project_derived(c) == c; }

bool is_kernel_only(const WedgeChain& c) {
  for (const auto& [w, v] : c.terms())
    for (const auto& x : w.factors())
      if (!in_kernel_mu(x)) return false;
  return true;
}

Cochain Cochain::from_rule(std::size_t degree, Rule rule) {
  Cochain c(degree);
  c.rule_ = std::move(rule);
  return c;
}

void Cochain::set(const Wedge& w, const Rational& v) {
  if (w.degree() != degree_) throw std::invalid_argument("cochain degree mismatch");
  values_[w] = v;
}

bool Cochain::defined_on(const Wedge& w) const { return rule_ || values_.count(w) > 0; }

Rational Cochain::operator()(const Wedge& w, std::size_t* misses) const {
  if (w.degree() != degree_) throw std::invalid_argument("cochain evaluated on a wedge of the wrong degree");
  if (rule_) return rule_(w);
  auto it = values_.find(w);
  if (it != values_.end()) return it->second;
  if (misses) ++*misses;
  return 0;
}

Rational Cochain::evaluate(const WedgeChain& c, std::size_t* misses) const {
  Rational s = 0;
  for (const auto& [w, v] : c.terms()) s += v * (*this)(w, misses);
  return s;
}

CoboundaryResult coboundary(const Cochain& eta, std::span<const Wedge> basis) {
  CoboundaryResult r{Cochain(eta.degree() + 1), 0};
  for (const auto& w : basis) {
    if (w.degree() != eta.degree() + 1) throw std::invalid_argument("coboundary: basis wedge of wrong degree");
    r.cochain.set(w, eta.evaluate(boundary(w), &r.edge_misses));
  }
  return r;
}

std::string format(const GroupSpec& spec, const Wedge& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.degree(); ++i) out << (i ? "^" : "") << '[' << spec.format(w[i]) << ']';
  return out.str();
}

std::string format(const GroupSpec& spec, const WedgeChain& c) {
  if (c.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, v] : c.terms()) {
    if (!first) out << " + ";
    out << to_string(v) << '*' << format(spec, w);
    first = false;
  }
  return out.str();
}

}  // namespace hgl
