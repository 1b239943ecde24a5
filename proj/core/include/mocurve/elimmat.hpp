#ifndef MOCURVE_ELIMMAT_HPP
#define MOCURVE_ELIMMAT_HPP

#include <string>
#include <vector>

#include "mocurve/biform.hpp"
#include "mocurve/xform.hpp"

namespace mocurve {

/// Rectangular matrix of X-forms. Zero entries keep their degree tag.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  explicit PolyMatrix(std::vector<std::vector<XForm>> entries);

  int rows() const noexcept { return static_cast<int>(entries_.size()); }
  int cols() const noexcept { return entries_.empty() ? 0 : static_cast<int>(entries_.front().size()); }
  bool is_square() const noexcept { return rows() == cols(); }

  XForm& at(int i, int j) { return entries_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
  const XForm& at(int i, int j) const {
    return entries_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }
  const std::vector<std::vector<XForm>>& entries() const noexcept { return entries_; }

  /// One row per line, entries in brackets.
  std::string str() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::vector<std::vector<XForm>> entries_;
};

/// Sylvester matrix of f, g viewed as binary forms in (t0, t1).
///
/// With m = deg_t f and n = deg_t g: the first n rows hold f's coefficient
/// sequence shifted right by 0..n-1, the last m rows do the same for g.
/// Column j stands for t0^(m+n-1-j) t1^j.
PolyMatrix sylvester_matrix(const BiForm& f, const BiForm& g);

/// Bezout matrix from the Cayley quotient
/// (f(s) g(t) - f(t) g(s)) / (s0 t1 - s1 t0); row i is the coefficient of
/// s0^(m-1-i) s1^i, column j that of t0^(m-1-j) t1^j. Needs deg_t f == deg_t g.
PolyMatrix bezout_matrix(const BiForm& f, const BiForm& g);

/// Determinant: Laplace expansion up to size 4, fraction-free Bareiss above.
XForm determinant(const PolyMatrix& M);
/// Fraction-free Bareiss elimination with exact polynomial division.
XForm bareiss_determinant(const PolyMatrix& M);
/// Laplace expansion along the first row.
XForm cofactor_determinant(const PolyMatrix& M);

}  // namespace mocurve

#endif  // MOCURVE_ELIMMAT_HPP
