#include "hgl/linalg.hpp"

#include <stdexcept>

#include "hgl/echelon.hpp"

namespace hgl {

namespace {

ColumnEchelon eliminate(const SparseRationalMatrix& m, bool track) {
  ColumnEchelon e(m.rows(), track);
  for (std::size_t c = 0; c < m.cols(); ++c) e.insert(m.column(c), static_cast<std::uint32_t>(c));
  return e;
}

}  // namespace

std::size_t rank(const SparseRationalMatrix& m) { return eliminate(m, false).rank(); }

std::vector<std::vector<Rational>> kernel_basis(const SparseRationalMatrix& m) {
  const auto e = eliminate(m, true);
  std::vector<std::vector<Rational>> out;
  out.reserve(e.dependencies().size());
  for (const auto& d : e.dependencies()) out.push_back(dense_from_sparse(d, m.cols()));
  return out;
}

SpanResult in_span(const SparseRationalMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("in_span: vector length must equal row count");
  const auto e = eliminate(m, true);
  auto comb = e.express(sparse_from_dense(v));
  if (!comb) return {};
  return {true, dense_from_sparse(*comb, m.cols())};
}

AffineResult solve_affine(const SparseRationalMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_affine: right-hand side length must equal row count");
  const auto e = eliminate(m, true);
  const auto sb = sparse_from_dense(b);
  if (auto comb = e.express(sb)) return {dense_from_sparse(*comb, m.cols()), {}};
  return {std::nullopt, dense_from_sparse(*e.separating_functional(sb), m.rows())};
}

bool verify_solution(const SparseRationalMatrix& m, const std::vector<Rational>& x, const std::vector<Rational>& b) {
  return x.size() == m.cols() && m.multiply(x) == b;
}

bool verify_certificate(const SparseRationalMatrix& m, const std::vector<Rational>& y, const std::vector<Rational>& b) {
  if (y.size() != m.rows() || b.size() != m.rows()) return false;
  for (const auto& v : m.left_multiply(y))
    if (!is_zero(v)) return false;
  Rational s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * b[i];
  return !is_zero(s);
}

}  // namespace hgl
