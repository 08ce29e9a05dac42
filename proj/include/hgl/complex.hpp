#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hgl/group.hpp"
#include "hgl/wedge.hpp"

namespace hgl {

enum class Restrict { full, derived_only, kernel_only };

bool admissible(const GroupElement& x, Restrict r);
const char* to_string(Restrict r);

// Finite sorted set of group elements with index lookup.
class Support {
 public:
  Support() = default;
  explicit Support(std::vector<GroupElement> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::optional<std::uint32_t> index_of(const GroupElement& x) const;
  bool contains(const GroupElement& x) const { return index_.count(x) > 0; }

 private:
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::uint32_t> index_;
};

// Free coordinates in [-M, M], torsion coordinates over their full range.
Support box_support(const GroupSpec& spec, std::int64_t radius);
// Number of elements box_support would produce (saturating).
std::uint64_t box_size(const GroupSpec& spec, std::int64_t radius);
// Largest radius <= requested whose box holds at most max_elements (at least 1).
std::int64_t radius_within_budget(const GroupSpec& spec, std::int64_t requested, std::uint64_t max_elements);

// All p-subsets of the admissible part of the support with sum z, sorted.
std::vector<Wedge> enumerate_basis(const Support& support, std::size_t p, const GroupElement& z, Restrict r);

}  // namespace hgl
