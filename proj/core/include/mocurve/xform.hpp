#ifndef MOCURVE_XFORM_HPP
#define MOCURVE_XFORM_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mocurve/scalar.hpp"
#include "mocurve/tform.hpp"

namespace mocurve {

/// Exponent triple (a0, a1, a2) of X0^a0 X1^a1 X2^a2.
using XExp = std::array<int, 3>;

/// Graded-lex order with X0 > X1 > X2, larger monomials first.
struct GrlexDesc {
  bool operator()(const XExp& a, const XExp& b) const noexcept {
    int sa = a[0] + a[1] + a[2];
    int sb = b[0] + b[1] + b[2];
    if (sa != sb) return sa > sb;
    return a > b;
  }
};

/// All monomials of the given degree, leading monomial first.
std::vector<XExp> x_monomials(int degree);
/// Position of e inside x_monomials(a0 + a1 + a2).
int x_monomial_index(const XExp& e) noexcept;
inline int x_monomial_count(int degree) noexcept { return (degree + 1) * (degree + 2) / 2; }

/// Homogeneous form in X0, X1, X2 with sparse storage; no stored zeros.
class XForm {
 public:
  using Terms = std::map<XExp, Scalar, GrlexDesc>;

  XForm() : XForm(0) {}
  explicit XForm(int degree);

  static XForm constant(Scalar c);
  static XForm variable(int j);
  static XForm monomial(const XExp& e, Scalar c = Scalar(1));

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Nonzero scalar multiple of X^0, i.e. a degree-0 form.
  bool is_constant() const noexcept { return degree_ == 0; }

  Scalar coeff(const XExp& e) const;
  /// Adds c * X^e; the term's degree must match.
  void add_term(const XExp& e, const Scalar& c);

  const XExp& leading_exponent() const;
  const Scalar& leading_coeff() const;

  FieldSpec field() const noexcept;
  XForm in(const FieldSpec& field) const;

  XForm& operator+=(const XForm& rhs);
  XForm& operator-=(const XForm& rhs);
  XForm& operator*=(const Scalar& c);
  XForm operator-() const;

  friend XForm operator+(XForm a, const XForm& b) { return a += b; }
  friend XForm operator-(XForm a, const XForm& b) { return a -= b; }
  friend XForm operator*(XForm a, const Scalar& c) { return a *= c; }
  friend XForm operator*(const Scalar& c, XForm a) { return a *= c; }
  friend XForm operator*(const XForm& a, const XForm& b);
  friend bool operator==(const XForm& a, const XForm& b);
  friend bool operator!=(const XForm& a, const XForm& b) { return !(a == b); }

  XForm derivative(int var) const;
  XForm pow(unsigned k) const;
  Scalar evaluate(const std::array<Scalar, 3>& x) const;
  /// F(u0, u1, u2) as a t-form of degree degree() * deg u.
  TForm substitute(const std::array<TForm, 3>& u) const;

  /// Canonical representative: rational forms get integral coefficients with
  /// unit content and a positive leading coefficient; residue forms are made
  /// monic. The zero form is its own canonical form.
  XForm canonical() const;
  /// Returns (c, G) with *this == c * G and G canonical. Throws ZeroInput on zero.
  std::pair<Scalar, XForm> split_content() const;

  std::string str() const;

 private:
  int degree_;
  Terms terms_;
};

std::string x_monomial_str(const XExp& e);

/// If a and b are proportional nonzero forms returns c with a == c * b.
bool proportional(const XForm& a, const XForm& b, Scalar* ratio = nullptr);

}  // namespace mocurve

#endif  // MOCURVE_XFORM_HPP
