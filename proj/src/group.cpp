#include "hgl/group.hpp"

#include <algorithm>
#include <sstream>

namespace hgl {

namespace detail {

struct GroupData {
  std::size_t n = 0;
  IntMatrix relations;
  IntMatrix form;
  std::vector<std::string> names;
  SnfDecomposition snf;  // of relations with reversed columns
  IntMatrix V;           // y = x V
  IntMatrix V_inverse;
  std::vector<std::size_t> position;  // canonical index -> y index
  std::vector<std::int64_t> modulus;  // 0 for free coordinates
  std::size_t n_free = 0;
  IntMatrix omega;  // canonical coordinates
  bool omega_zero = true;
  std::vector<GroupElement> kernel_basis;
  std::size_t kernel_free_rank = 0;
};

}  // namespace detail

namespace {

void require_same(const GroupElement& x, const GroupElement& y) {
  if (x.owner() == nullptr || x.owner() != y.owner())
    throw std::invalid_argument("group elements belong to different groups");
}

}  // namespace

// ---- GroupElement -------------------------------------------------------

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  require_same(*this, o);
  Coords c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = checked_add(coords_[i], o.coords_[i]);
    if (auto m = owner_->modulus[i]) c[i] = floor_mod(c[i], m);
  }
  return {owner_, std::move(c)};
}

GroupElement GroupElement::operator-(const GroupElement& o) const { return *this + (-o); }

GroupElement GroupElement::operator-() const { return scalar_mul(-1, *this); }

bool GroupElement::operator==(const GroupElement& o) const {
  require_same(*this, o);
  return coords_ == o.coords_;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& o) const {
  require_same(*this, o);
  return std::lexicographical_compare_three_way(coords_.begin(), coords_.end(), o.coords_.begin(),
                                                o.coords_.end());
}

std::size_t GroupElement::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : coords_) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL + (h >> 29);
  return h;
}

std::int64_t GroupElement::free_norm() const {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (owner_->modulus[i] == 0) m = std::max<std::int64_t>(m, coords_[i] < 0 ? -coords_[i] : coords_[i]);
  return m;
}

GroupElement add(const GroupElement& x, const GroupElement& y) { return x + y; }
GroupElement neg(const GroupElement& x) { return -x; }

GroupElement scalar_mul(std::int64_t k, const GroupElement& x) {
  if (!x.valid()) throw std::invalid_argument("scalar_mul on an empty element");
  GroupElement::Coords c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = checked_mul(k, x.coords()[i]);
    if (auto m = x.owner()->modulus[i]) c[i] = floor_mod(c[i], m);
  }
  return {x.owner(), std::move(c)};
}

std::int64_t pairing(const GroupElement& x, const GroupElement& y) {
  require_same(x, y);
  const auto& om = x.owner()->omega;
  const auto n = x.owner()->n_free;
  __int128 acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords()[i] == 0) continue;
    __int128 inner = 0;
    for (std::size_t j = 0; j < n; ++j) inner += static_cast<__int128>(om(i, j)) * y.coords()[j];
    acc += inner * x.coords()[i];
  }
  if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("pairing exceeds int64");
  return static_cast<std::int64_t>(acc);
}

bool in_kernel_mu(const GroupElement& x) {
  const auto& om = x.owner()->omega;
  const auto n = x.owner()->n_free;
  for (std::size_t j = 0; j < n; ++j) {
    __int128 s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<__int128>(x.coords()[i]) * om(i, j);
    if (s != 0) return false;
  }
  return true;
}

bool is_derived_element(const GroupElement& x) { return !in_kernel_mu(x); }

bool is_torsion(const GroupElement& x) {
  for (std::size_t i = 0; i < x.owner()->n_free; ++i)
    if (x.coords()[i] != 0) return false;
  return true;
}

// ---- GroupSpec ----------------------------------------------------------

GroupSpec::GroupSpec(std::size_t n, const IntMatrix& relations, const IntMatrix& form,
                     std::vector<std::string> names) {
  if (n == 0) throw SpecError("a presentation needs at least one generator");
  if (relations.rows() > 0 && relations.cols() != n)
    throw SpecError("relation rows must have " + std::to_string(n) + " entries");
  if (form.rows() != n || form.cols() != n)
    throw SpecError("form must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (form(i, i) != 0)
      throw SpecError("form is not alternating: Omega[" + std::to_string(i) + "][" + std::to_string(i) +
                      "] = " + std::to_string(form(i, i)) + " != 0");
    for (std::size_t j = i + 1; j < n; ++j)
      if (form(i, j) != -form(j, i))
        throw SpecError("form is not alternating: Omega[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] = " + std::to_string(form(i, j)) + " but Omega[" + std::to_string(j) + "][" +
                        std::to_string(i) + "] = " + std::to_string(form(j, i)));
  }
  IntMatrix R = relations.rows() > 0 ? relations : IntMatrix(0, n);
  if (R.rows() > 0) {
    const IntMatrix RO = R * form;
    for (std::size_t r = 0; r < RO.rows(); ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (RO(r, j) != 0)
          throw SpecError("form does not descend: (R*Omega)[" + std::to_string(r) + "][" + std::to_string(j) +
                          "] = " + std::to_string(RO(r, j)) + " != 0 for relation row " + std::to_string(r) +
                          " " + IntMatrix::from_rows({std::vector<std::int64_t>(R.row(r).begin(), R.row(r).end())}, n).to_string());
  }
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  if (names.size() != n) throw SpecError("expected " + std::to_string(n) + " generator names");

  auto d = std::make_shared<detail::GroupData>();
  d->n = n;
  d->relations = R;
  d->form = form;
  d->names = std::move(names);

  // Reduce with reversed columns so that pivots come from the last
  // generators; free coordinates then line up with the leading generators.
  IntMatrix J(n, n);
  for (std::size_t i = 0; i < n; ++i) J(i, n - 1 - i) = 1;
  d->snf = smith_normal_form(R * J);
  d->V = J * d->snf.V;
  d->V_inverse = d->snf.V_inverse * J;

  const std::size_t rank = d->snf.rank();
  for (std::size_t p = n; p-- > rank;) {
    d->position.push_back(p);
    d->modulus.push_back(0);
  }
  d->n_free = n - rank;
  for (std::size_t p = rank; p-- > 0;)
    if (d->snf.diagonal[p] > 1) {
      d->position.push_back(p);
      d->modulus.push_back(d->snf.diagonal[p]);
    }

  const IntMatrix omega_y = d->V_inverse * form * d->V_inverse.transpose();
  const std::size_t k = d->position.size();
  d->omega = IntMatrix(k, k);
  for (std::size_t a = 0; a < d->n_free; ++a)
    for (std::size_t b = 0; b < d->n_free; ++b) {
      d->omega(a, b) = omega_y(d->position[a], d->position[b]);
      if (d->omega(a, b) != 0) d->omega_zero = false;
    }
  data_ = d;

  // ker mu: integer kernel of the free block, Hermite-reduced.
  if (d->n_free > 0) {
    IntMatrix free_block(d->n_free, d->n_free);
    for (std::size_t a = 0; a < d->n_free; ++a)
      for (std::size_t b = 0; b < d->n_free; ++b) free_block(a, b) = d->omega(a, b);
    const auto s = smith_normal_form(free_block);
    const std::size_t kdim = d->n_free - s.rank();
    IntMatrix basis(kdim, d->n_free);
    for (std::size_t j = 0; j < kdim; ++j)
      for (std::size_t a = 0; a < d->n_free; ++a) basis(j, a) = s.V(a, s.rank() + j);
    const IntMatrix h = hermite_rows(basis);
    d->kernel_free_rank = h.rows();
    for (std::size_t j = 0; j < h.rows(); ++j) {
      std::vector<std::int64_t> c(k, 0);
      for (std::size_t a = 0; a < d->n_free; ++a) c[a] = h(j, a);
      d->kernel_basis.push_back(from_canonical(c));
    }
  }
  for (std::size_t t = d->n_free; t < k; ++t) {
    std::vector<std::int64_t> c(k, 0);
    c[t] = 1;
    d->kernel_basis.push_back(from_canonical(c));
  }
}

GroupSpec GroupSpec::surface(int genus, int boundary) {
  if (genus < 0 || boundary < 0) throw std::invalid_argument("surface: genus and boundary must be >= 0");
  if (genus == 0 && boundary == 0) throw std::invalid_argument("surface: (g, r) = (0, 0) has no generators");
  const std::size_t n = static_cast<std::size_t>(2 * genus + boundary);
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("A" + std::to_string(i));
    names.push_back("B" + std::to_string(i));
  }
  for (int j = 1; j <= boundary; ++j) names.push_back("C" + std::to_string(j));
  IntMatrix R(boundary > 0 ? 1 : 0, n);
  for (int j = 0; j < boundary; ++j) R(0, 2 * genus + j) = 1;
  IntMatrix form(n, n);
  for (int i = 0; i < genus; ++i) {
    form(2 * i, 2 * i + 1) = 1;
    form(2 * i + 1, 2 * i) = -1;
  }
  return GroupSpec(n, R, form, std::move(names));
}

std::size_t GroupSpec::n_generators() const { return data_->n; }
const IntMatrix& GroupSpec::relations() const { return data_->relations; }
const IntMatrix& GroupSpec::form() const { return data_->form; }
const std::vector<std::string>& GroupSpec::names() const { return data_->names; }
const SnfDecomposition& GroupSpec::snf() const { return data_->snf; }
std::size_t GroupSpec::free_rank() const { return data_->n_free; }
std::size_t GroupSpec::torsion_count() const { return data_->position.size() - data_->n_free; }
const std::vector<std::int64_t>& GroupSpec::moduli() const { return data_->modulus; }
const IntMatrix& GroupSpec::canonical_form() const { return data_->omega; }
bool GroupSpec::form_is_zero() const { return data_->omega_zero; }
const std::vector<GroupElement>& GroupSpec::kernel_mu_basis() const { return data_->kernel_basis; }
std::size_t GroupSpec::kernel_mu_free_rank() const { return data_->kernel_free_rank; }

std::vector<std::int64_t> GroupSpec::torsion_coefficients() const {
  std::vector<std::int64_t> t;
  for (auto m : data_->modulus)
    if (m) t.push_back(m);
  std::sort(t.begin(), t.end());
  return t;
}

GroupElement GroupSpec::zero() const {
  return GroupElement(data_.get(), GroupElement::Coords(data_->position.size(), 0));
}

GroupElement GroupSpec::generator(std::size_t i) const {
  if (i >= data_->n) throw std::out_of_range("generator index");
  std::vector<std::int64_t> x(data_->n, 0);
  x[i] = 1;
  return element(x);
}

GroupElement GroupSpec::element(std::span<const std::int64_t> x) const {
  if (x.size() != data_->n) throw std::invalid_argument("element: expected " + std::to_string(data_->n) + " coordinates");
  const auto y = row_times(x, data_->V);
  GroupElement::Coords c(data_->position.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = y[data_->position[i]];
    if (auto m = data_->modulus[i]) c[i] = floor_mod(c[i], m);
  }
  return GroupElement(data_.get(), std::move(c));
}

GroupElement GroupSpec::from_canonical(std::span<const std::int64_t> coords) const {
  if (coords.size() != data_->position.size())
    throw std::invalid_argument("from_canonical: expected " + std::to_string(data_->position.size()) + " coordinates");
  GroupElement::Coords c(coords.begin(), coords.end());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (auto m = data_->modulus[i]) c[i] = floor_mod(c[i], m);
  return GroupElement(data_.get(), std::move(c));
}

std::vector<std::int64_t> GroupSpec::representative(const GroupElement& x) const {
  if (!owns(x)) throw std::invalid_argument("element belongs to a different group");
  std::vector<std::int64_t> y(data_->n, 0);
  for (std::size_t i = 0; i < x.coords().size(); ++i) y[data_->position[i]] = x.coords()[i];
  return row_times(y, data_->V_inverse);
}

std::string GroupSpec::format(const GroupElement& x) const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.coords().size(); ++i) out << (i ? "," : "") << x.coords()[i];
  out << ')';
  return out.str();
}

std::string GroupSpec::format_in_generators(const GroupElement& x) const {
  const auto rep = representative(x);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const auto c = rep[i];
    if (c == 0) continue;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << data_->names[i];
    first = false;
  }
  return first ? "0" : out.str();
}

std::string GroupSpec::describe() const {
  std::ostringstream out;
  bool first = true;
  if (data_->n_free > 0) {
    out << "Z";
    if (data_->n_free > 1) out << "^" << data_->n_free;
    first = false;
  }
  for (auto t : torsion_coefficients()) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace hgl
