#pragma once

#include <cstdint>
#include <vector>

#include "hgl/int_matrix.hpp"

namespace hgl {

// U * R * V = D with U, V unimodular and d_0 | d_1 | ... on the diagonal.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors, in order

  std::size_t rank() const { return diagonal.size(); }
  // Invariant factors greater than one.
  std::vector<std::int64_t> torsion_coefficients() const;
  // Free rank of Z^cols / rowspace(R).
  std::size_t free_rank() const { return V.rows() - rank(); }
};

SnfDecomposition smith_normal_form(const IntMatrix& R);

}  // namespace hgl

namespace hgl {

// Row-style Hermite normal form of the lattice spanned by the rows; zero rows dropped.
IntMatrix hermite_rows(const IntMatrix& rows);

}  // namespace hgl
