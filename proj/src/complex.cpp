#include "hgl/complex.hpp"

#include <algorithm>

#include "hgl/kernels.hpp"

namespace hgl {

bool admissible(const GroupElement& x, Restrict r) {
  switch (r) {
    case Restrict::full: return true;
    case Restrict::derived_only: return is_derived_element(x);
    case Restrict::kernel_only: return in_kernel_mu(x);
  }
  return false;
}

const char* to_string(Restrict r) {
  switch (r) {
    case Restrict::full: return "full";
    case Restrict::derived_only: return "derived-only";
    case Restrict::kernel_only: return "kernel-only";
  }
  return "?";
}

Support::Support(std::vector<GroupElement> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  index_.reserve(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::uint32_t> Support::index_of(const GroupElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t box_size(const GroupSpec& spec, std::int64_t radius) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t n = 1;
  auto mul = [&](std::uint64_t k) { n = (n > cap / std::max<std::uint64_t>(k, 1)) ? cap : n * k; };
  for (auto m : spec.moduli()) mul(m == 0 ? static_cast<std::uint64_t>(2 * radius + 1) : static_cast<std::uint64_t>(m));
  return n;
}

std::int64_t radius_within_budget(const GroupSpec& spec, std::int64_t requested, std::uint64_t max_elements) {
  std::int64_t r = std::max<std::int64_t>(requested, 1);
  while (r > 1 && box_size(spec, r) > max_elements) --r;
  return r;
}

Support box_support(const GroupSpec& spec, std::int64_t radius) {
  if (radius < 0) throw std::invalid_argument("box radius must be nonnegative");
  const auto& mod = spec.moduli();
  const std::size_t k = mod.size();
  std::vector<std::int64_t> lo(k), hi(k), cur(k);
  for (std::size_t i = 0; i < k; ++i) {
    lo[i] = mod[i] == 0 ? -radius : 0;
    hi[i] = mod[i] == 0 ? radius : mod[i] - 1;
    cur[i] = lo[i];
  }
  std::vector<GroupElement> out;
  out.reserve(box_size(spec, radius));
  if (k == 0) {
    out.push_back(spec.zero());
    return Support(std::move(out));
  }
  for (;;) {
    out.push_back(spec.from_canonical(cur));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return Support(std::move(out));
    }
  }
}

std::vector<Wedge> enumerate_basis(const Support& support, std::size_t p, const GroupElement& z, Restrict r) {
  std::vector<Wedge> out;
  for (const auto& idx : kernels::parallel::enumerate_wedges(support, p, z, r)) {
    Wedge::Factors f;
    for (auto i : idx) f.push_back(support[i]);
    out.push_back(Wedge::from_sorted(std::move(f)));
  }
  return out;
}

}  // namespace hgl
