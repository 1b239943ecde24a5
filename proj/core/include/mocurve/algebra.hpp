#ifndef MOCURVE_ALGEBRA_HPP
#define MOCURVE_ALGEBRA_HPP

#include "mocurve/tform.hpp"
#include "mocurve/xform.hpp"

namespace mocurve {

/// Greatest common divisor of two binary forms.
///
/// Powers of t0 and t1 are split off first; the remaining parts are
/// dehomogenized at t0 = 1 and fed to the univariate Euclidean algorithm.
/// The result is normalized so that its last nonzero coefficient (highest
/// power of t1) equals 1. Throws ZeroInput when both inputs vanish.
TForm gcd_t(const TForm& f, const TForm& g);

/// Quotient q with q * g == f. Throws NotDivisible otherwise.
TForm divide_t(const TForm& f, const TForm& g);

/// F with F^k proportional to G, returned in canonical normalization.
///
/// Works on G scaled to a monic leading coefficient and grows F term by term
/// in graded-lex order from the k-th root of the leading monomial. Throws
/// NotAPower when no exact root exists.
XForm kth_root(const XForm& G, unsigned k);

/// Q with Q * F == G by multivariate division in graded-lex order.
/// Throws NotDivisible if the remainder is nonzero.
XForm exact_divide(const XForm& G, const XForm& F);

/// Largest e with X_var^e dividing G (0 for the zero form).
int x_valuation(const XForm& G, int var);

}  // namespace mocurve

#endif  // MOCURVE_ALGEBRA_HPP
