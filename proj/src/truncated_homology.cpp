#include "hgl/truncated_homology.hpp"

#include <algorithm>

#include "hgl/echelon.hpp"
#include "hgl/kernels.hpp"

namespace hgl {

std::size_t count_kernel_pairs(const Support& box, const GroupElement& z) {
  return kernels::serial::enumerate_pairs(box, z, Restrict::kernel_only).size();
}

void sort_by_norm(const Support& s, std::vector<std::array<std::uint32_t, 3>>& triples) {
  std::vector<std::int64_t> norm(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) norm[i] = s[i].free_norm();
  auto key = [&](const std::array<std::uint32_t, 3>& t) {
    return std::max({norm[t[0]], norm[t[1]], norm[t[2]]});
  };
  std::stable_sort(triples.begin(), triples.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

TruncatedH2 truncated_h2(const GroupSpec& spec, const Support& cycle_box, const Support& boundary_box,
                         const GroupElement& z, Restrict restrict, std::optional<std::size_t> stop_at, bool parallel) {
  for (const auto& x : cycle_box)
    if (!boundary_box.contains(x)) throw std::invalid_argument("cycle box must lie inside the boundary box");

  TruncatedH2 out;
  const kernels::GradedFrame frame(spec, boundary_box, z);
  const auto pairs = parallel ? kernels::parallel::enumerate_pairs(cycle_box, z, restrict)
                              : kernels::serial::enumerate_pairs(cycle_box, z, restrict);
  out.chain_dim = pairs.size();
  bool d2_nonzero = false;
  std::vector<std::uint8_t> priority(frame.pair_row_count(), 1);
  for (const auto& p : pairs) {
    const auto row = *frame.extended().index_of(cycle_box[p[0]]);
    priority[row] = 0;
    if (pairing(cycle_box[p[0]], z) != 0) d2_nonzero = true;
  }
  out.cycle_dim = out.chain_dim - (d2_nonzero ? 1 : 0);
  if (restrict != Restrict::derived_only) out.kernel_pairs = count_kernel_pairs(cycle_box, z);

  auto triples = parallel ? kernels::parallel::enumerate_triples(boundary_box, z, restrict)
                          : kernels::serial::enumerate_triples(boundary_box, z, restrict);
  sort_by_norm(boundary_box, triples);
  out.triples_total = triples.size();

  ColumnEchelon ech(frame.pair_row_count());
  ech.set_row_priority(std::move(priority));
  std::size_t inside = 0;
  const std::size_t chunk = 8192;
  for (std::size_t start = 0; start < triples.size(); start += chunk) {
    if (stop_at && inside >= *stop_at) break;
    const std::span<const kernels::Triple> part(triples.data() + start, std::min(chunk, triples.size() - start));
    const auto cols = parallel ? kernels::parallel::boundary3_columns(frame, part)
                               : kernels::serial::boundary3_columns(frame, part);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      ++out.triples_used;
      if (cols[k].size == 0) continue;
      SparseVector v;
      for (const auto& e : cols[k].view()) v.emplace_back(e.row, Rational(static_cast<long>(e.value)));
      if (ech.insert(v, static_cast<std::uint32_t>(start + k)) && ech.pivots().back().priority == 0) ++inside;
      if (stop_at && inside >= *stop_at) break;
    }
  }
  out.stopped_early = out.triples_used < out.triples_total;
  out.boundary_dim = inside;
  out.h2 = out.cycle_dim - inside;
  return out;
}

}  // namespace hgl
