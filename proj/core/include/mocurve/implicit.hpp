#ifndef MOCURVE_IMPLICIT_HPP
#define MOCURVE_IMPLICIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mocurve/elimmat.hpp"
#include "mocurve/parametrization.hpp"
#include "mocurve/syzygy.hpp"

namespace mocurve {

enum class Method { Resultant, MuBasis, MovingLines };

std::string to_string(Method m);
/// "resultant", "mubasis" or "movinglines".
Method parse_method(std::string_view text);

struct ImplicitResult {
  Method method = Method::MuBasis;
  /// Canonical defining polynomial of the image.
  XForm F;
  int D = 0;
  int beta = 0;
  /// Power of X2 stripped from the direct resultant; empty for other methods.
  std::optional<int> alpha;
  /// Determinant as computed, before any normalization.
  XForm raw;
  /// raw == constant * X2^alpha * F^beta.
  Scalar constant;
  /// Side length of the square matrix whose determinant is raw.
  int matrix_size = 0;
  bool vanishes = false;
  bool alpha_eq_d = true;
};

/// Size of the generic fiber, estimated from gcds of the fiber equations at
/// random points; the minimum over three samples must divide d, else the
/// round is repeated. Throws Unstable after five failed rounds.
int tracing_index(const Parametrization& phi, std::uint64_t seed = 1);

/// Res_t(f, g) for binary forms with X-form coefficients. Handles t-degree 0.
XForm resultant(const BiForm& f, const BiForm& g);

/// The two moving lines X2 u0 - X0 u2 and X2 u1 - X1 u2.
std::pair<BiForm, BiForm> fiber_lines(const Parametrization& phi);

struct PowerSplit {
  XForm F;
  int beta = 0;
  Scalar constant;
};

/// Writes G (of degree d) as constant * F^beta with beta the tracing index.
/// A failed root triggers fresh estimates, then every divisor of d from the
/// largest down. Throws RootFailure if nothing works.
PowerSplit extract_power(const XForm& G, const Parametrization& phi, std::uint64_t seed = 1);

ImplicitResult implicitize_resultant(const Parametrization& phi, std::uint64_t seed = 1);
ImplicitResult implicitize_mubasis(const Parametrization& phi, std::uint64_t seed = 1);

struct MovingLinesResult {
  PolyMatrix matrix;
  ImplicitResult result;
};

/// Square matrix built from the echelon basis of moving lines of degree d - 1.
MovingLinesResult implicitize_moving_lines(const Parametrization& phi, std::uint64_t seed = 1);

ImplicitResult implicitize(const Parametrization& phi, Method method, std::uint64_t seed = 1);

/// Rows are curves, columns the coefficients of t0^(delta-i) t1^i.
/// Throws NonSquare unless all curves share delta and there are delta + 1.
PolyMatrix coefficient_matrix(const std::vector<MovingCurve>& curves);

struct HybridResult {
  XForm det;
  /// det == constant * F^beta for the canonical F of phi.
  bool implicit = false;
  Scalar constant;
};

/// Determinant of the coefficient matrix of moving curves following phi.
/// Throws NonSquare, ZeroDeterminant, or InvalidArgument if a curve does not
/// follow phi. A determinant that is not a multiple of F^beta comes back with
/// implicit == false.
HybridResult hybrid_det(const std::vector<MovingCurve>& curves, const Parametrization& phi, std::uint64_t seed = 1);

struct BezoutCheck {
  bool holds = false;
  /// X2^d Res(P, Q) == constant * det(Bezout matrix) when holds.
  Scalar constant;
};

BezoutCheck sylvester_bezout_check(const Parametrization& phi);

}  // namespace mocurve

#endif  // MOCURVE_IMPLICIT_HPP
