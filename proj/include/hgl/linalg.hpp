#pragma once

#include <optional>
#include <vector>

#include "hgl/sparse_matrix.hpp"

namespace hgl {

std::size_t rank(const SparseRationalMatrix& m);

// Basis of {x : M x = 0}; exactly cols - rank vectors.
std::vector<std::vector<Rational>> kernel_basis(const SparseRationalMatrix& m);

struct SpanResult {
  bool member = false;
  std::vector<Rational> witness;  // M * witness = v when member
};
// Is v (length rows) in the column span of M?
SpanResult in_span(const SparseRationalMatrix& m, const std::vector<Rational>& v);

struct AffineResult {
  std::optional<std::vector<Rational>> solution;  // M x = b
  std::vector<Rational> certificate;              // y M = 0, y b != 0 when infeasible
  bool feasible() const { return solution.has_value(); }
};
AffineResult solve_affine(const SparseRationalMatrix& m, const std::vector<Rational>& b);

// Independent re-checks by direct multiplication.
bool verify_solution(const SparseRationalMatrix& m, const std::vector<Rational>& x, const std::vector<Rational>& b);
bool verify_certificate(const SparseRationalMatrix& m, const std::vector<Rational>& y, const std::vector<Rational>& b);

}  // namespace hgl
