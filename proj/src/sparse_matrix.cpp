#include "hgl/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hgl {

void axpy(SparseVector& a, const Rational& c, const SparseVector& b) {
  if (is_zero(c) || b.empty()) return;
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (!is_zero(b[j].second)) out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + c * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

SparseVector sparse_from_dense(const std::vector<Rational>& v) {
  SparseVector s;
  for (std::uint32_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t n) {
  std::vector<Rational> d(n);
  for (const auto& [i, x] : v) {
    if (i >= n) throw std::out_of_range("sparse index beyond dense length");
    d[i] = x;
  }
  return d;
}

Rational sparse_get(const SparseVector& v, std::uint32_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, std::uint32_t k) { return e.first < k; });
  return (it != v.end() && it->first == i) ? it->second : Rational(0);
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows[0].size();
  SparseRationalMatrix m(rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < nc; ++c)
      if (!is_zero(rows[r][c])) m.columns_[c].emplace_back(static_cast<std::uint32_t>(r), rows[r][c]);
  }
  return m;
}

std::size_t SparseRationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseRationalMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= columns_.size()) throw std::out_of_range("matrix entry out of range");
  axpy(columns_[c], 1, SparseVector{{static_cast<std::uint32_t>(r), v}});
}

void SparseRationalMatrix::set_column(std::size_t c, SparseVector col) {
  if (c >= columns_.size()) throw std::out_of_range("column index out of range");
  for (std::size_t k = 0; k < col.size(); ++k) {
    if (col[k].first >= rows_) throw std::out_of_range("row index out of range");
    if (k > 0 && col[k].first <= col[k - 1].first) throw std::invalid_argument("column entries must be sorted and unique");
    if (is_zero(col[k].second)) throw std::invalid_argument("explicit zero entry");
  }
  columns_[c] = std::move(col);
}

std::size_t SparseRationalMatrix::append_column(SparseVector col) {
  columns_.emplace_back();
  set_column(columns_.size() - 1, std::move(col));
  return columns_.size() - 1;
}

Rational SparseRationalMatrix::at(std::size_t r, std::size_t c) const {
  return sparse_get(columns_.at(c), static_cast<std::uint32_t>(r));
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  SparseRationalMatrix t(cols(), rows_);
  for (std::uint32_t c = 0; c < columns_.size(); ++c)
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
  return t;
}

std::vector<Rational> SparseRationalMatrix::multiply(const std::vector<Rational>& x) const {
  if (x.size() != cols()) throw std::invalid_argument("multiply: length mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (is_zero(x[c])) continue;
    for (const auto& [r, v] : columns_[c]) y[r] += v * x[c];
  }
  return y;
}

std::vector<Rational> SparseRationalMatrix::left_multiply(const std::vector<Rational>& y) const {
  if (y.size() != rows_) throw std::invalid_argument("left_multiply: length mismatch");
  std::vector<Rational> out(cols());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& [r, v] : columns_[c]) out[c] += y[r] * v;
  return out;
}

void SparseRationalMatrix::write_triplets(std::ostream& out) const {
  out << rows_ << ' ' << cols() << ' ' << nonzeros() << '\n';
  // row-major order for easier diffing
  const auto t = transpose();
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : t.columns_[r]) out << r << ' ' << c << ' ' << to_string(v) << '\n';
}

SparseRationalMatrix SparseRationalMatrix::read_triplets(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&](std::istringstream& ls) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos || line[p] == '%' || line[p] == '#') continue;
      ls = std::istringstream(line);
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("triplet line " + std::to_string(line_no) + ": " + what);
  };
  std::istringstream ls;
  if (!next(ls)) fail("missing header");
  std::size_t nr, nc, nnz;
  if (!(ls >> nr >> nc >> nnz)) fail("expected '<rows> <cols> <nnz>'");
  SparseRationalMatrix m(nr, nc);
  for (std::size_t k = 0; k < nnz; ++k) {
    if (!next(ls)) fail("expected " + std::to_string(nnz) + " entries, found " + std::to_string(k));
    std::size_t r, c;
    std::string v;
    if (!(ls >> r >> c >> v)) fail("expected '<row> <col> <value>'");
    if (r >= nr || c >= nc) fail("index out of range");
    Rational q;
    try {
      q = parse_rational(v);
    } catch (const std::exception& e) {
      fail(e.what());
    }
    m.add(r, c, q);
  }
  return m;
}

}  // namespace hgl
