#ifndef MOCURVE_BIFORM_HPP
#define MOCURVE_BIFORM_HPP

#include <array>
#include <string>
#include <vector>

#include "mocurve/tform.hpp"
#include "mocurve/xform.hpp"

namespace mocurve {

/// Bidegree (t-degree, X-degree). Every bidegree in this library uses this order.
struct Bidegree {
  int t = 0;
  int x = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Bihomogeneous form in (t0, t1; X0, X1, X2), stored as a vector of XForms
/// indexed by the t-monomial t0^(t - i) t1^i.
class BiForm {
 public:
  BiForm() : BiForm(0, 0) {}
  BiForm(int t_degree, int x_degree);

  /// v0 X0 + v1 X1 + v2 X2 for forms v_j of a common degree.
  static BiForm moving_line(const TForm& v0, const TForm& v1, const TForm& v2);
  static BiForm from_xform(const XForm& f);
  static BiForm from_tform(const TForm& f);

  int t_degree() const noexcept { return t_degree_; }
  int x_degree() const noexcept { return x_degree_; }
  Bidegree bidegree() const noexcept { return {t_degree_, x_degree_}; }

  /// Coefficient of t0^(t - i) t1^i.
  const XForm& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  void set_coeff(int i, XForm f);
  const std::vector<XForm>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  FieldSpec field() const noexcept;
  std::size_t term_count() const noexcept;

  BiForm& operator+=(const BiForm& rhs);
  BiForm& operator-=(const BiForm& rhs);
  BiForm& operator*=(const Scalar& c);
  BiForm operator-() const;

  friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
  friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
  friend BiForm operator*(BiForm a, const Scalar& c) { return a *= c; }
  friend BiForm operator*(const Scalar& c, BiForm a) { return a *= c; }
  friend BiForm operator*(const BiForm& a, const BiForm& b);
  friend BiForm operator*(const TForm& a, const BiForm& b);
  friend BiForm operator*(const XForm& a, const BiForm& b);
  friend bool operator==(const BiForm& a, const BiForm& b);
  friend bool operator!=(const BiForm& a, const BiForm& b) { return !(a == b); }

  BiForm t_derivative(int var) const;
  BiForm x_derivative(int var) const;

  /// Coefficients of X0, X1, X2 as t-forms. Requires X-degree 1.
  std::array<TForm, 3> line_coefficients() const;

  std::string str() const;

 private:
  int t_degree_;
  int x_degree_;
  std::vector<XForm> coeffs_;
};

/// Cross product of coefficient triples, (a1 b2 - a2 b1, a2 b0 - a0 b2, a0 b1 - a1 b0).
std::array<TForm, 3> cross(const std::array<TForm, 3>& a, const std::array<TForm, 3>& b);

}  // namespace mocurve

#endif  // MOCURVE_BIFORM_HPP
