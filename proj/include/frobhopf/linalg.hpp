#pragma once

#include <vector>

#include "frobhopf/scalar.hpp"

namespace frobhopf {

/// Dense exact linear algebra over a FieldCtx, row-major.
using Matrix = std::vector<std::vector<Scalar>>;

/// Basis of the solution space of M x = 0 (M given as rows).
std::vector<std::vector<Scalar>> nullspace(Matrix rows, size_t cols, const FieldCtxPtr& k);

/// Inverse of a square matrix; empty result if singular.
Matrix try_invert(const Matrix& m, const FieldCtxPtr& k);

Matrix mat_mul(const Matrix& a, const Matrix& b, const FieldCtxPtr& k);
bool mat_equal(const Matrix& a, const Matrix& b);
Matrix identity_matrix(size_t n, const FieldCtxPtr& k);

} // namespace frobhopf
