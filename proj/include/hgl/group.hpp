#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgl/int_matrix.hpp"
#include "hgl/smith.hpp"

namespace hgl {

// Raised when a presentation violates an invariant (alternation or descent).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct GroupData;
}

// Canonical coordinates: free part first, then torsion coordinates reduced
// into [0, d). Elements of different groups never compare.
class GroupElement {
 public:
  using Coords = boost::container::small_vector<std::int64_t, 8>;

  GroupElement() = default;

  const Coords& coords() const { return coords_; }
  const detail::GroupData* owner() const { return owner_; }
  bool valid() const { return owner_ != nullptr; }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& o) { return *this = *this + o; }

  bool operator==(const GroupElement& o) const;
  std::strong_ordering operator<=>(const GroupElement& o) const;

  std::size_t hash() const;
  // max |free coordinate|; torsion coordinates do not count.
  std::int64_t free_norm() const;

 private:
  friend class GroupSpec;
  friend GroupElement scalar_mul(std::int64_t k, const GroupElement& x);
  GroupElement(const detail::GroupData* owner, Coords c) : owner_(owner), coords_(std::move(c)) {}

  const detail::GroupData* owner_ = nullptr;
  Coords coords_;
};

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupElement& x);
GroupElement scalar_mul(std::int64_t k, const GroupElement& x);
std::int64_t pairing(const GroupElement& x, const GroupElement& y);
bool in_kernel_mu(const GroupElement& x);
bool is_derived_element(const GroupElement& x);
bool is_torsion(const GroupElement& x);

class GroupSpec {
 public:
  // relations: m x n, form: n x n. Throws SpecError on invalid input.
  GroupSpec(std::size_t n_generators, const IntMatrix& relations, const IntMatrix& form,
            std::vector<std::string> names = {});

  static GroupSpec surface(int genus, int boundary);

  std::size_t n_generators() const;
  const IntMatrix& relations() const;
  const IntMatrix& form() const;
  const std::vector<std::string>& names() const;
  const SnfDecomposition& snf() const;

  std::size_t free_rank() const;
  std::size_t torsion_count() const;
  std::size_t coordinate_count() const { return free_rank() + torsion_count(); }
  // Modulus of each canonical coordinate, 0 for free ones.
  const std::vector<std::int64_t>& moduli() const;
  std::vector<std::int64_t> torsion_coefficients() const;

  GroupElement zero() const;
  GroupElement generator(std::size_t i) const;
  // From coordinates in the generators.
  GroupElement element(std::span<const std::int64_t> generator_coords) const;
  GroupElement element(std::initializer_list<std::int64_t> generator_coords) const {
    return element(std::span<const std::int64_t>(generator_coords.begin(), generator_coords.size()));
  }
  // From canonical coordinates; torsion entries are reduced.
  GroupElement from_canonical(std::span<const std::int64_t> coords) const;
  GroupElement from_canonical(std::initializer_list<std::int64_t> coords) const {
    return from_canonical(std::span<const std::int64_t>(coords.begin(), coords.size()));
  }
  std::vector<std::int64_t> representative(const GroupElement& x) const;

  // Form in canonical coordinates (zero on torsion rows and columns).
  const IntMatrix& canonical_form() const;
  bool form_is_zero() const;
  bool nondegenerate() const { return kernel_mu_basis().empty(); }
  // Generators of ker mu: Hermite basis of the free radical, then torsion units.
  const std::vector<GroupElement>& kernel_mu_basis() const;
  std::size_t kernel_mu_free_rank() const;

  std::string format(const GroupElement& x) const;
  // "A1-C3" style expression of the representative.
  std::string format_in_generators(const GroupElement& x) const;
  std::string describe() const;

  bool owns(const GroupElement& x) const { return x.owner() == data_.get(); }
  const detail::GroupData* id() const { return data_.get(); }

 private:
  std::shared_ptr<const detail::GroupData> data_;
};

}  // namespace hgl

template <>
struct std::hash<hgl::GroupElement> {
  std::size_t operator()(const hgl::GroupElement& x) const noexcept { return x.hash(); }
};
