#include "hgl/smith.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

namespace hgl {

std::vector<std::int64_t> SnfDecomposition::torsion_coefficients() const {
  std::vector<std::int64_t> out;
  for (auto d : diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

// Carries the matrix being reduced together with the transforms.
struct Reducer {
  IntMatrix A, U, V, Vi;

  explicit Reducer(const IntMatrix& R)
      : A(R), U(IntMatrix::identity(R.rows())), V(IntMatrix::identity(R.cols())),
        Vi(IntMatrix::identity(R.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  }
  void add_row(std::size_t t, std::size_t s, std::int64_t k) {
    A.add_row_multiple(t, s, k);
    U.add_row_multiple(t, s, k);
  }
  void add_col(std::size_t t, std::size_t s, std::int64_t k) {
    A.add_col_multiple(t, s, k);
    V.add_col_multiple(t, s, k);
    Vi.add_row_multiple(s, t, checked_sub(0, k));
  }
  void negate_row(std::size_t r) {
    A.negate_row(r);
    U.negate_row(r);
  }

  // Smallest nonzero |entry| in the trailing block; ties go to the first
  // position in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::int64_t best_abs = 0;
    for (std::size_t i = t; i < A.rows(); ++i)
      for (std::size_t j = t; j < A.cols(); ++j) {
        const auto v = std::llabs(A(i, j));
        if (v != 0 && (!best || v < best_abs)) {
          best = {i, j};
          best_abs = v;
        }
      }
    return best;
  }

  // Clears row t and column t apart from the pivot.
  void clear_cross(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < A.rows(); ++i) {
        if (A(i, t) == 0) continue;
        add_row(i, t, -(A(i, t) / A(t, t)));
        if (A(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < A.cols(); ++j) {
        if (A(t, j) == 0) continue;
        add_col(j, t, -(A(t, j) / A(t, t)));
        if (A(t, j) != 0) dirty = true;
      }
      if (!dirty) return;
      // move the smallest remainder on the cross to the pivot position
      std::size_t bi = t, bj = t;
      auto best = std::llabs(A(t, t));
      for (std::size_t i = t + 1; i < A.rows(); ++i)
        if (A(i, t) != 0 && std::llabs(A(i, t)) < best) best = std::llabs(A(i, t)), bi = i, bj = t;
      for (std::size_t j = t + 1; j < A.cols(); ++j)
        if (A(t, j) != 0 && std::llabs(A(t, j)) < best) best = std::llabs(A(t, j)), bi = t, bj = j;
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
  }

  // Returns a row holding an entry not divisible by the pivot, if any.
  std::optional<std::size_t> divisibility_violation(std::size_t t) const {
    const auto d = A(t, t);
    for (std::size_t i = t + 1; i < A.rows(); ++i)
      for (std::size_t j = t + 1; j < A.cols(); ++j)
        if (A(i, j) % d != 0) return i;
    return std::nullopt;
  }
};

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& R) {
  Reducer red(R);
  std::vector<std::int64_t> diag;
  const std::size_t steps = std::min(R.rows(), R.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    auto pivot = red.min_pivot(t);
    if (!pivot) break;
    red.swap_rows(t, pivot->first);
    red.swap_cols(t, pivot->second);
    for (;;) {
      red.clear_cross(t);
      auto bad = red.divisibility_violation(t);
      if (!bad) break;
      red.add_row(t, *bad, 1);
    }
    if (red.A(t, t) < 0) red.negate_row(t);
    diag.push_back(red.A(t, t));
  }
  return SnfDecomposition{std::move(red.U), std::move(red.A), std::move(red.V), std::move(red.Vi),
                          std::move(diag)};
}

}  // namespace hgl

namespace hgl {

IntMatrix hermite_rows(const IntMatrix& in) {
  IntMatrix a = in;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    // Euclid on column c over rows lead..end
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t r = lead; r < a.rows(); ++r)
        if (a(r, c) != 0 && (!best || std::llabs(a(r, c)) < std::llabs(a(*best, c)))) best = r;
      if (!best) break;
      a.swap_rows(lead, *best);
      bool done = true;
      for (std::size_t r = lead + 1; r < a.rows(); ++r) {
        if (a(r, c) == 0) continue;
        a.add_row_multiple(r, lead, -(a(r, c) / a(lead, c)));
        if (a(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(lead, c) == 0) continue;
    if (a(lead, c) < 0) a.negate_row(lead);
    const auto p = a(lead, c);
    for (std::size_t r = 0; r < lead; ++r) {
      const auto q = a(r, c) >= 0 ? a(r, c) / p : -((-a(r, c) + p - 1) / p);
      a.add_row_multiple(r, lead, -q);
    }
    ++lead;
  }
  IntMatrix out(lead, a.cols());
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

}  // namespace hgl
