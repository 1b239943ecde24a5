#ifndef MOCURVE_LINALG_HPP
#define MOCURVE_LINALG_HPP

#include <optional>
#include <vector>

#include "mocurve/scalar.hpp"

namespace mocurve::linalg {

using Vector = std::vector<Scalar>;
/// Row-major; every row has the same length.
using Matrix = std::vector<Vector>;

/// Reduced row-echelon basis of the row space (zero rows dropped).
Matrix rref(const Matrix& rows, int cols, const FieldSpec& field);

/// Basis of {x : A x = 0}, itself in reduced row-echelon form.
Matrix kernel(const Matrix& A, int cols, const FieldSpec& field);

int rank(const Matrix& rows, int cols, const FieldSpec& field);

/// Some x with A x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& A, const Vector& b, int cols, const FieldSpec& field);

}  // namespace mocurve::linalg

#endif  // MOCURVE_LINALG_HPP
