#include "hgl/quotient.hpp"

#include <algorithm>
#include <sstream>

#include "hgl/echelon.hpp"
#include "hgl/kernels.hpp"

namespace hgl {

QuotientTensorSpace::QuotientTensorSpace(const GroupSpec& spec, const GroupElement& z) : spec_(&spec), z_(z) {
  if (!spec.owns(z)) throw std::invalid_argument("quotient: z belongs to another group");
  const std::size_t n = spec.n_generators();
  const auto& R = spec.relations();
  IntMatrix M(R.rows() + 1, n);
  for (std::size_t r = 0; r < R.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) M(r, c) = R(r, c);
  const auto zr = spec.representative(z);
  for (std::size_t c = 0; c < n; ++c) M(R.rows(), c) = zr[c];
  IntMatrix J(n, n);
  for (std::size_t i = 0; i < n; ++i) J(i, n - 1 - i) = 1;
  const auto snf = smith_normal_form(M * J);
  V_ = J * snf.V;
  const IntMatrix Vi = snf.V_inverse * J;
  for (std::size_t p = n; p-- > snf.rank();) {
    free_positions_.push_back(p);
    lifts_.push_back(spec.element(Vi.row(p)));
  }
}

std::vector<Rational> QuotientTensorSpace::coordinates(const GroupElement& x) const {
  const auto y = row_times(spec_->representative(x), V_);
  std::vector<Rational> out;
  out.reserve(free_positions_.size());
  for (auto p : free_positions_) out.emplace_back(static_cast<long>(y[p]));
  return out;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(a[r][c])) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

void add_to(ExteriorVector& v, const std::vector<std::uint32_t>& key, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = v.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (is_zero(it->second)) v.erase(it);
}

// all k-subsets of {0..d-1} in lexicographic order
std::vector<std::vector<std::uint32_t>> subsets(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t i = start; i < d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

ExteriorVector f_map(const QuotientTensorSpace& q, const WedgeChain& c) {
  ExteriorVector out;
  const std::size_t d = q.dimension();
  for (const auto& [w, coeff] : c.terms()) {
    if (grading(w) != q.z()) throw std::invalid_argument("f_map: chain term outside grading z");
    const std::size_t k = w.degree() - 1;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(q.coordinates(w[i]));
    for (const auto& cols : subsets(d, k)) {
      std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = rows[i][cols[j]];
      add_to(out, cols, coeff * determinant(std::move(minor)));
    }
  }
  return out;
}

WedgeChain g_map(const QuotientTensorSpace& q, const ExteriorVector& t) {
  WedgeChain out;
  for (const auto& [key, c] : t) {
    std::vector<GroupElement> f;
    GroupElement rest = q.z();
    for (auto k : key) {
      if (k >= q.dimension()) throw std::out_of_range("g_map: index beyond quotient dimension");
      f.push_back(q.lifts()[k]);
      rest = rest - q.lifts()[k];
    }
    f.push_back(rest);
    out.add(std::span<const GroupElement>(f), c);
  }
  return out;
}

std::string format(const ExteriorVector& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : v) {
    if (!first) out << " + ";
    out << to_string(c) << "*e";
    if (key.empty()) out << "()";
    for (std::size_t i = 0; i < key.size(); ++i) out << (i ? "^" : "") << key[i];
    first = false;
  }
  return out.str();
}

std::vector<Rational> as_vector(const ExteriorVector& v, std::size_t dim) {
  std::vector<Rational> out(dim);
  for (const auto& [key, c] : v) {
    if (key.size() != 1) throw std::invalid_argument("as_vector expects a degree-one element");
    out.at(key[0]) = c;
  }
  return out;
}

WedgeChain ideal_generator(const GroupElement& u, const GroupElement& v, const GroupElement& x) {
  WedgeChain g(2);
  g.add({u + v, x}, 1);
  g.add({u, x + v}, -1);
  g.add({v, x + u}, -1);
  return g;
}

IdealMembership ideal_membership(const GroupSpec& spec, const WedgeChain& c, std::int64_t enlarge,
                                 std::uint64_t element_budget) {
  IdealMembership out;
  if (c.is_zero()) {
    out.member = out.conclusive = true;
    return out;
  }
  if (c.degree() != 2) throw std::invalid_argument("ideal_membership handles 2-chains");
  const auto zg = c.grading();
  if (!zg) throw std::invalid_argument("ideal_membership: chain is not homogeneous");
  const GroupElement z = *zg;
  const QuotientTensorSpace q(spec, z);
  if (!f_map(q, c).empty()) {
    out.conclusive = true;  // f vanishes on the ideal
    return out;
  }
  std::int64_t norm = 1;
  for (const auto& [w, v] : c.terms())
    for (const auto& x : w.factors()) norm = std::max(norm, x.free_norm());
  out.radius = radius_within_budget(spec, enlarge * norm, element_budget);
  const Support box = box_support(spec, out.radius);
  const kernels::GradedFrame frame(spec, box, z);

  auto e_entry = [&](const GroupElement& a, SparseVector& v, const Rational& coeff) {
    const auto ia = frame.extended().index_of(a);
    if (!ia) return false;
    const auto ib = frame.ext_reflection(*ia);
    if (*ia == ib) return true;
    axpy(v, *ia < ib ? coeff : Rational(-coeff), SparseVector{{std::min(*ia, ib), Rational(1)}});
    return true;
  };
  SparseVector target;
  for (const auto& [w, v] : c.terms())
    if (!e_entry(w[0], target, v)) return out;

  ColumnEchelon ech(frame.pair_row_count(), true);
  std::vector<std::array<GroupElement, 3>> gens;
  for (std::uint32_t i = 0; i < box.size(); ++i)
    for (std::uint32_t j = i; j < box.size(); ++j) {
      const auto& u = box[i];
      const auto& v = box[j];
      const GroupElement x = z - u - v;
      if (!box.contains(x) || !box.contains(u + v) || !box.contains(x + v) || !box.contains(x + u)) continue;
      SparseVector g;
      e_entry(u + v, g, 1);
      e_entry(u, g, -1);
      e_entry(v, g, -1);
      gens.push_back({u, v, x});
      ++out.generators_considered;
      ech.insert(g, static_cast<std::uint32_t>(gens.size() - 1));
    }
  const auto comb = ech.express(target);
  if (!comb) return out;
  out.member = out.conclusive = true;
  out.combination = WedgeChain(2);
  for (const auto& [idx, coeff] : *comb) {
    const auto& g = gens[idx];
    out.generators.push_back({g, coeff});
    out.combination.add(ideal_generator(g[0], g[1], g[2]), coeff);
  }
  return out;
}

}  // namespace hgl
