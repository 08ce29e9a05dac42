#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgl/sparse_matrix.hpp"

namespace hgl {

// Incremental, fully reduced column echelon form over Q. Each pivot column
// has a 1 in its pivot row and zeros in every other pivot row, so a new
// column is reduced with one pass over its own pivot-row entries.
//
// Pivot rows are picked by priority first (higher wins), then by how few
// existing pivot columns touch the row, then by coefficient size.
class ColumnEchelon {
 public:
  struct Pivot {
    std::uint32_t row;
    SparseVector column;
    SparseVector combination;  // over source ids, when tracking
    std::uint8_t priority;
  };

  explicit ColumnEchelon(std::size_t n_rows, bool track_sources = false);

  void set_row_priority(std::vector<std::uint8_t> priority);

  // True when the column raised the rank.
  bool insert(const SparseVector& column, std::uint32_t source);

  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  // Sources combination equal to v; requires tracking.
  std::optional<SparseVector> express(const SparseVector& v) const;
  // y with y.A = 0 for every inserted column and y.v != 0, if v is outside the span.
  std::optional<SparseVector> separating_functional(const SparseVector& v) const;

  // Basis of {y : y.A = 0}, one vector per non-pivot row.
  std::vector<SparseVector> annihilator_basis() const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t rows() const { return n_rows_; }
  std::size_t pivots_with_priority(std::uint8_t p) const;
  const std::vector<Pivot>& pivots() const { return pivots_; }
  // Source combinations found to vanish during insertion (tracking only).
  const std::vector<SparseVector>& dependencies() const { return dependencies_; }
  bool tracking() const { return track_; }

 private:
  void count_entries(const SparseVector& v, int delta);

  std::size_t n_rows_;
  bool track_;
  std::vector<Pivot> pivots_;
  std::vector<std::int32_t> pivot_of_row_;
  std::vector<std::uint32_t> row_count_;
  std::vector<std::uint8_t> priority_;
  std::vector<SparseVector> dependencies_;
};

}  // namespace hgl
