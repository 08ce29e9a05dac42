#include "hgl/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgl {

namespace {

std::size_t height(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

void scale(SparseVector& v, const Rational& c) {
  for (auto& e : v) e.second *= c;
}

}  // namespace

ColumnEchelon::ColumnEchelon(std::size_t n_rows, bool track_sources)
    : n_rows_(n_rows), track_(track_sources), pivot_of_row_(n_rows, -1), row_count_(n_rows, 0),
      priority_(n_rows, 0) {}

void ColumnEchelon::set_row_priority(std::vector<std::uint8_t> priority) {
  if (priority.size() != n_rows_) throw std::invalid_argument("row priority has wrong length");
  if (!pivots_.empty()) throw std::logic_error("row priority must be set before inserting columns");
  priority_ = std::move(priority);
}

void ColumnEchelon::count_entries(const SparseVector& v, int delta) {
  for (const auto& e : v) row_count_[e.first] += delta;
}

SparseVector ColumnEchelon::reduce(const SparseVector& v) const {
  SparseVector r = v;
  for (const auto& [row, val] : v) {
    if (row >= n_rows_) throw std::out_of_range("vector index beyond echelon rows");
    const auto p = pivot_of_row_[row];
    if (p >= 0) axpy(r, -val, pivots_[p].column);
  }
  return r;
}

std::optional<SparseVector> ColumnEchelon::express(const SparseVector& v) const {
  if (!track_) throw std::logic_error("express needs source tracking");
  if (!contains(v)) return std::nullopt;
  SparseVector comb;
  for (const auto& [row, val] : v) {
    const auto p = pivot_of_row_[row];
    if (p >= 0) axpy(comb, val, pivots_[p].combination);
  }
  return comb;
}

std::optional<SparseVector> ColumnEchelon::separating_functional(const SparseVector& v) const {
  const auto res = reduce(v);
  if (res.empty()) return std::nullopt;
  const std::uint32_t s = res.front().first;
  SparseVector y{{s, Rational(1)}};
  for (const auto& piv : pivots_) {
    const auto c = sparse_get(piv.column, s);
    if (!is_zero(c)) axpy(y, -c, SparseVector{{piv.row, Rational(1)}});
  }
  return y;
}

std::vector<SparseVector> ColumnEchelon::annihilator_basis() const {
  // y_s = e_s - sum_r P_r[s] e_r for each non-pivot row s
  std::vector<SparseVector> out;
  std::vector<SparseVector> by_row(n_rows_);
  for (const auto& piv : pivots_)
    for (const auto& [row, val] : piv.column)
      if (row != piv.row) by_row[row].emplace_back(piv.row, -val);
  for (std::uint32_t s = 0; s < n_rows_; ++s) {
    if (pivot_of_row_[s] >= 0) continue;
    SparseVector y = std::move(by_row[s]);
    y.emplace_back(s, Rational(1));
    std::sort(y.begin(), y.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(y));
  }
  return out;
}

bool ColumnEchelon::insert(const SparseVector& column, std::uint32_t source) {
  SparseVector col = reduce(column);
  SparseVector comb;
  if (track_) {
    comb.emplace_back(source, Rational(1));
    for (const auto& [row, val] : column) {
      const auto p = pivot_of_row_[row];
      if (p >= 0) axpy(comb, -val, pivots_[p].combination);
    }
  }
  if (col.empty()) {
    if (track_) dependencies_.push_back(std::move(comb));
    return false;
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < col.size(); ++k) {
    const auto rk = col[k].first, rb = col[best].first;
    if (priority_[rk] != priority_[rb]) {
      if (priority_[rk] > priority_[rb]) best = k;
      continue;
    }
    if (row_count_[rk] != row_count_[rb]) {
      if (row_count_[rk] < row_count_[rb]) best = k;
      continue;
    }
    if (height(col[k].second) < height(col[best].second)) best = k;
  }
  const std::uint32_t prow = col[best].first;
  const Rational inv = 1 / col[best].second;
  scale(col, inv);
  if (track_) scale(comb, inv);

  for (auto& piv : pivots_) {
    const Rational c = sparse_get(piv.column, prow);
    if (is_zero(c)) continue;
    count_entries(piv.column, -1);
    axpy(piv.column, -c, col);
    count_entries(piv.column, +1);
    if (track_) axpy(piv.combination, -c, comb);
  }
  count_entries(col, +1);
  pivot_of_row_[prow] = static_cast<std::int32_t>(pivots_.size());
  pivots_.push_back(Pivot{prow, std::move(col), std::move(comb), priority_[prow]});
  return true;
}

std::size_t ColumnEchelon::pivots_with_priority(std::uint8_t p) const {
  return static_cast<std::size_t>(
      std::count_if(pivots_.begin(), pivots_.end(), [p](const Pivot& q) { return q.priority == p; }));
}

}  // namespace hgl
