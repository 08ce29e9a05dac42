#pragma once

#include <cstdint>
#include <optional>

#include "hgl/complex.hpp"

namespace hgl {

// H2 at grading z on a truncation: cycles are 2-chains on the cycle box,
// boundaries are images of 3-wedges on the (larger) boundary box, and
//   h2 = dim Z2 - dim(Z2 n B2).
// dim(Z2 n B2) is the number of pivots landing on cycle-box rows when rows
// outside the cycle box are preferred as pivots.
struct TruncatedH2 {
  std::size_t chain_dim = 0;
  std::size_t cycle_dim = 0;
  std::size_t boundary_dim = 0;
  std::size_t h2 = 0;
  std::size_t kernel_pairs = 0;
  std::size_t triples_total = 0;
  std::size_t triples_used = 0;
  bool stopped_early = false;
};

// Elimination stops once dim(Z2 n B2) reaches stop_at (a proven upper bound).
TruncatedH2 truncated_h2(const GroupSpec& spec, const Support& cycle_box, const Support& boundary_box,
                         const GroupElement& z, Restrict restrict, std::optional<std::size_t> stop_at = std::nullopt,
                         bool parallel = true);

// Unordered pairs {a, b} of distinct kernel elements with a + b = z.
std::size_t count_kernel_pairs(const Support& box, const GroupElement& z);

// Triples sorted by the largest free norm among their factors (stable).
void sort_by_norm(const Support& s, std::vector<std::array<std::uint32_t, 3>>& triples);

}  // namespace hgl
