#pragma once

#include <boost/container/small_vector.hpp>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgl/group.hpp"
#include "hgl/rational.hpp"

namespace hgl {

// [u1]^...^[up] with u1 < ... < up in the canonical order.
class Wedge {
 public:
  using Factors = boost::container::small_vector<GroupElement, 4>;

  // Sorts the factors and returns the permutation sign; nullopt when a
  // factor repeats (the wedge vanishes).
  static std::optional<std::pair<Wedge, int>> normalize(std::span<const GroupElement> factors);
  static std::optional<std::pair<Wedge, int>> normalize(std::initializer_list<GroupElement> factors) {
    return normalize(std::span<const GroupElement>(factors.begin(), factors.size()));
  }
  // Factors must already be strictly increasing.
  static Wedge from_sorted(Factors factors);

  std::size_t degree() const { return factors_.size(); }
  const Factors& factors() const { return factors_; }
  const GroupElement& operator[](std::size_t i) const { return factors_[i]; }

  bool operator==(const Wedge& o) const { return factors_ == o.factors_; }
  std::strong_ordering operator<=>(const Wedge& o) const;

 private:
  Factors factors_;
};

GroupElement grading(const Wedge& w);

class WedgeChain {
 public:
  using Terms = std::map<Wedge, Rational>;

  WedgeChain() = default;
  explicit WedgeChain(std::size_t degree) : degree_(degree) {}

  // Factors in any order; the permutation sign is applied.
  void add(std::span<const GroupElement> factors, const Rational& c);
  void add(std::initializer_list<GroupElement> factors, const Rational& c) {
    add(std::span<const GroupElement>(factors.begin(), factors.size()), c);
  }
  void add(const Wedge& w, const Rational& c);
  void add(const WedgeChain& o, const Rational& c = 1);

  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Wedge& w) const;

  // Common grading of all terms, if homogeneous and nonzero.
  std::optional<GroupElement> grading() const;
  bool is_homogeneous() const;
  // Chain restricted to terms of grading z.
  WedgeChain component(const GroupElement& z) const;

  WedgeChain operator+(const WedgeChain& o) const;
  WedgeChain operator-(const WedgeChain& o) const;
  friend WedgeChain operator*(const Rational& c, const WedgeChain& a);
  bool operator==(const WedgeChain& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

 private:
  std::size_t degree_ = 0;
  Terms terms_;
};

// Chevalley-Eilenberg differential:
// d(u1^...^up) = sum_{i<j} (-1)^{i+j} <ui,uj> [ui+uj]^u1^..^ui^..^uj^..^up (hats omitted).
WedgeChain boundary(const WedgeChain& c);
WedgeChain boundary(const Wedge& w);

// Projection killing every wedge with a factor in ker mu.
WedgeChain project_derived(const WedgeChain& c);
bool is_derived_only(const WedgeChain& c);
bool is_kernel_only(const WedgeChain& c);

// Alternating p-cochain given on a finite set of sorted wedges (zero
// elsewhere), or by a rule defined on every wedge.
class Cochain {
 public:
  using Rule = std::function<Rational(const Wedge&)>;

  explicit Cochain(std::size_t degree) : degree_(degree) {}
  static Cochain from_rule(std::size_t degree, Rule rule);

  void set(const Wedge& w, const Rational& v);
  std::size_t degree() const { return degree_; }
  bool defined_on(const Wedge& w) const;
  const std::map<Wedge, Rational>& values() const { return values_; }

  // Outside the domain the value is 0; such lookups are counted in *misses.
  Rational operator()(const Wedge& w, std::size_t* misses = nullptr) const;
  Rational evaluate(const WedgeChain& c, std::size_t* misses = nullptr) const;

 private:
  std::size_t degree_;
  std::map<Wedge, Rational> values_;
  Rule rule_;
};

struct CoboundaryResult {
  Cochain cochain;
  std::size_t edge_misses = 0;
};

// (d eta)(w) = eta(boundary w) on each wedge of the given (p+1)-basis.
CoboundaryResult coboundary(const Cochain& eta, std::span<const Wedge> basis);

std::string format(const GroupSpec& spec, const Wedge& w);
std::string format(const GroupSpec& spec, const WedgeChain& c);

}  // namespace hgl
