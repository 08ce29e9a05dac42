#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hgl/rational.hpp"

namespace hgl {

// Sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

// a += c * b
void axpy(SparseVector& a, const Rational& c, const SparseVector& b);
SparseVector sparse_from_dense(const std::vector<Rational>& v);
std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t n);
Rational sparse_get(const SparseVector& v, std::uint32_t i);

// Column-major sparse matrix over Q. Columns are kept sorted and zero-free.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix() = default;
  SparseRationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  static SparseRationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;

  // Adds v to entry (r, c).
  void add(std::size_t r, std::size_t c, const Rational& v);
  void set_column(std::size_t c, SparseVector col);
  std::size_t append_column(SparseVector col);
  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  Rational at(std::size_t r, std::size_t c) const;

  SparseRationalMatrix transpose() const;
  // M x, dense result
  std::vector<Rational> multiply(const std::vector<Rational>& x) const;
  // y M, dense result
  std::vector<Rational> left_multiply(const std::vector<Rational>& y) const;

  // Triplet text format:
  //   % comment lines
  //   <rows> <cols> <nnz>
  //   <row> <col> <value>    (0-based, value as a or a/b)
  void write_triplets(std::ostream& out) const;
  static SparseRationalMatrix read_triplets(std::istream& in);

  bool operator==(const SparseRationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace hgl
