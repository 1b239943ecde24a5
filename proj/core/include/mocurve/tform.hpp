#ifndef MOCURVE_TFORM_HPP
#define MOCURVE_TFORM_HPP

#include <string>
#include <vector>

#include "mocurve/scalar.hpp"

namespace mocurve {

/// Homogeneous form in t0, t1 stored densely.
///
/// Entry i is the coefficient of t0^(degree - i) * t1^i. The zero form keeps
/// its degree, so zero vectors of graded spaces stay well typed.
class TForm {
 public:
  TForm() : TForm(0) {}
  explicit TForm(int degree);
  TForm(int degree, std::vector<Scalar> coeffs);

  static TForm constant(Scalar c);
  /// c * t0^(degree - i) * t1^i
  static TForm monomial(int degree, int i, Scalar c = Scalar(1));
  static TForm t0() { return monomial(1, 0); }
  static TForm t1() { return monomial(1, 1); }

  int degree() const noexcept { return degree_; }
  const Scalar& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  void set_coeff(int i, Scalar c) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(c); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  /// Field of the coefficients (rational unless some coefficient is a residue).
  FieldSpec field() const noexcept;
  TForm in(const FieldSpec& field) const;

  TForm& operator+=(const TForm& rhs);
  TForm& operator-=(const TForm& rhs);
  TForm& operator*=(const Scalar& c);
  TForm operator-() const;

  friend TForm operator+(TForm a, const TForm& b) { return a += b; }
  friend TForm operator-(TForm a, const TForm& b) { return a -= b; }
  friend TForm operator*(TForm a, const Scalar& c) { return a *= c; }
  friend TForm operator*(const Scalar& c, TForm a) { return a *= c; }
  friend TForm operator*(const TForm& a, const TForm& b);
  friend bool operator==(const TForm& a, const TForm& b);
  friend bool operator!=(const TForm& a, const TForm& b) { return !(a == b); }

  /// Partial derivative with respect to t_var (0 or 1).
  TForm derivative(int var) const;
  TForm pow(unsigned k) const;
  Scalar evaluate(const Scalar& t0, const Scalar& t1) const;

  /// Largest e with t0^e dividing this form (degree + 1 for zero).
  int t0_valuation() const noexcept;
  int t1_valuation() const noexcept;

  std::string str() const;

 private:
  int degree_;
  std::vector<Scalar> coeffs_;
};

/// Univariate polynomial in t, coefficients by ascending power. Used for
/// affine inputs and the Euclidean algorithm behind gcd_t.
using UPoly = std::vector<Scalar>;

void trim(UPoly& p);
int degree(const UPoly& p);

/// Dehomogenizes at t0 = 1: coefficient of t^i is the coefficient of t1^i.
UPoly dehomogenize(const TForm& f);
/// t0^degree * p(t1 / t0); degree must be >= deg p.
TForm homogenize(const UPoly& p, int degree);

}  // namespace mocurve

#endif  // MOCURVE_TFORM_HPP
