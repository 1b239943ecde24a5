#ifndef MOCURVE_PARAMETRIZATION_HPP
#define MOCURVE_PARAMETRIZATION_HPP

#include <array>
#include <cstdint>
#include <string>

#include "mocurve/biform.hpp"
#include "mocurve/tform.hpp"

namespace mocurve {

/// Rational plane parametrization (t0:t1) -> (u0 : u1 : u2).
///
/// Invariants: the three forms share a degree d >= 1, are not all zero, and
/// have no common factor of positive degree.
class Parametrization {
 public:
  /// Validates and throws DegreeMismatch, ZeroInput, InvalidArgument (d = 0)
  /// or CommonFactor.
  Parametrization(TForm u0, TForm u1, TForm u2);

  int degree() const noexcept { return u_[0].degree(); }
  const TForm& u(int j) const { return u_.at(static_cast<std::size_t>(j)); }
  const std::array<TForm, 3>& components() const noexcept { return u_; }
  FieldSpec field() const noexcept;
  Parametrization in(const FieldSpec& field) const;

  std::array<Scalar, 3> evaluate(const Scalar& t0, const Scalar& t1) const;
  /// Deterministic 64-bit digest of the canonical rendering.
  std::uint64_t fingerprint() const;
  std::string str() const;

  friend bool operator==(const Parametrization& a, const Parametrization& b) { return a.u_ == b.u_; }

 private:
  std::array<TForm, 3> u_;
};

/// L(t, u0(t), u1(t), u2(t)); L follows phi iff the result is zero.
TForm substitute_param(const BiForm& L, const Parametrization& phi);

struct Homogenized {
  Parametrization param;
  /// Common factor removed from (u0, u1, u2); the constant 1 when none.
  TForm stripped;
};

/// Turns t -> (a(t)/c(t), b(t)/c(t)) into (c : a : b) homogenized to
/// d = max degree with t = t1 / t0. Common factors are stripped and reported.
Homogenized homogenize(const UPoly& a, const UPoly& b, const UPoly& c);

/// Parametrization given by the cross product of two moving-line coefficient
/// triples. Throws CommonFactor when the product has a common factor.
Parametrization from_cross_product(const std::array<TForm, 3>& p, const std::array<TForm, 3>& q);

}  // namespace mocurve

#endif  // MOCURVE_PARAMETRIZATION_HPP
