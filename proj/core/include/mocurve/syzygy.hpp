#ifndef MOCURVE_SYZYGY_HPP
#define MOCURVE_SYZYGY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mocurve/biform.hpp"
#include "mocurve/linalg.hpp"
#include "mocurve/parametrization.hpp"

namespace mocurve {

/// Bihomogeneous form L with L(t, u(t)) == 0 for the parametrization whose
/// fingerprint is stored next to it.
struct MovingCurve {
  BiForm L;
  std::uint64_t fingerprint = 0;

  Bidegree bidegree() const noexcept { return L.bidegree(); }
  bool follows(const Parametrization& phi) const { return substitute_param(L, phi).is_zero(); }
};

/// Coordinates of a (delta, nu) form: index i * N + k holds the coefficient
/// of t0^(delta-i) t1^i times the k-th X-monomial of degree nu (graded-lex).
linalg::Vector to_coordinates(const BiForm& L);
BiForm from_coordinates(const linalg::Vector& v, int t_degree, int x_degree);

/// Linear map L -> L(t, u(t)) on coordinates: (delta + nu d + 1) rows.
linalg::Matrix substitution_matrix(const Parametrization& phi, int t_degree, int x_degree);

/// Basis of the moving curves of bidegree (t_degree, x_degree), in reduced
/// row-echelon form over the coordinate order above.
std::vector<MovingCurve> moving_space(const Parametrization& phi, int t_degree, int x_degree);
int moving_space_dimension(const Parametrization& phi, int t_degree, int x_degree);

/// Smallest t-degree carrying a moving line.
int mu(const Parametrization& phi);

struct MuBasis {
  int mu = 0;
  MovingCurve P;  ///< bidegree (mu, 1)
  MovingCurve Q;  ///< bidegree (d - mu, 1)
  /// u == ratio * (P x Q) on coefficient triples.
  Scalar ratio;
};

/// P is the first echelon element in degree mu. Q is the first echelon
/// element in degree d - mu outside the span of the t-multiples of P.
/// Throws CrossProductFailure if P x Q is not proportional to u.
MuBasis mu_basis(const Parametrization& phi);

/// (p, q) with L == p P + q Q; q has degree delta - d + mu, or is the
/// degree-0 zero form when that is negative. Throws NoDecomposition.
std::pair<TForm, TForm> decompose_moving_line(const MovingCurve& L, const MuBasis& B);

}  // namespace mocurve

#endif  // MOCURVE_SYZYGY_HPP
