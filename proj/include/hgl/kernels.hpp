#pragma once

// Hot loops of the homology engine: wedge enumeration at a fixed grading and
// assembly of boundary columns. Every routine has a serial reference and an
// OpenMP version producing identical output in identical order.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hgl/complex.hpp"
#include "hgl/rational.hpp"

namespace hgl::kernels {

using Pair = std::array<std::uint32_t, 2>;
using Triple = std::array<std::uint32_t, 3>;

// Index data for chains of grading z over a support. The extended set holds
// the support and its reflection z - support, so that every 2-wedge met by a
// boundary of a support triple is [a]^[z-a] with both factors indexed.
class GradedFrame {
 public:
  GradedFrame(const GroupSpec& spec, const Support& support, const GroupElement& z);

  const GroupSpec& spec() const { return *spec_; }
  const Support& support() const { return *support_; }
  const GroupElement& z() const { return z_; }
  const Support& extended() const { return extended_; }
  std::uint32_t ext_of(std::uint32_t s) const { return ext_of_[s]; }
  std::uint32_t reflection_of(std::uint32_t s) const { return reflect_of_[s]; }
  // ext index of z - e for an extended index e
  std::uint32_t ext_reflection(std::uint32_t e) const { return ext_reflect_[e]; }
  std::int64_t pairing(std::uint32_t s, std::uint32_t t) const;

  // A 2-wedge [a]^[z-a] is identified by the ext index of its smaller factor.
  std::size_t pair_row_count() const { return extended_.size(); }
  bool is_pair_row(std::uint32_t e) const { return e < ext_reflect_[e]; }

 private:
  const GroupSpec* spec_;
  const Support* support_;
  GroupElement z_;
  Support extended_;
  std::vector<std::uint32_t> ext_of_, reflect_of_, ext_reflect_;
  std::vector<std::vector<std::int64_t>> mu_;  // coords * Omega on the free part
};

struct Entry {
  std::uint32_t row;
  std::int64_t value;
};
// Up to three entries, sorted by row, zeros removed.
struct SmallColumn {
  std::array<Entry, 3> entries;
  std::uint8_t size = 0;
  std::span<const Entry> view() const { return {entries.data(), size}; }
};

// Boundary of one support triple (indices increasing) as a column over pair rows.
SmallColumn boundary3_column(const GradedFrame& frame, const Triple& t);

std::vector<std::uint8_t> admissible_mask(const Support& support, Restrict r);

namespace serial {
std::vector<Pair> enumerate_pairs(const Support& s, const GroupElement& z, Restrict r);
std::vector<Triple> enumerate_triples(const Support& s, const GroupElement& z, Restrict r);
std::vector<std::vector<std::uint32_t>> enumerate_wedges(const Support& s, std::size_t p, const GroupElement& z,
                                                         Restrict r);
std::vector<SmallColumn> boundary3_columns(const GradedFrame& frame, std::span<const Triple> triples);
// Number of triples whose boundary is not annihilated by the row functional
// (row -> vector); first offending position in *first.
std::size_t count_functional_violations(const GradedFrame& frame, std::span<const Triple> triples,
                                        std::span<const std::vector<Rational>> row_values, std::size_t* first);
}  // namespace serial

namespace parallel {
std::vector<Pair> enumerate_pairs(const Support& s, const GroupElement& z, Restrict r);
std::vector<Triple> enumerate_triples(const Support& s, const GroupElement& z, Restrict r);
std::vector<std::vector<std::uint32_t>> enumerate_wedges(const Support& s, std::size_t p, const GroupElement& z,
                                                         Restrict r);
std::vector<SmallColumn> boundary3_columns(const GradedFrame& frame, std::span<const Triple> triples);
std::size_t count_functional_violations(const GradedFrame& frame, std::span<const Triple> triples,
                                        std::span<const std::vector<Rational>> row_values, std::size_t* first);
}  // namespace parallel

// Thread count used by the parallel kernels (0 = OpenMP default).
void set_thread_count(int n);
int thread_count();

}  // namespace hgl::kernels
