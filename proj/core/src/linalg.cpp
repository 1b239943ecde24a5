#include "mocurve/linalg.hpp"

#include "echelon.hpp"

namespace mocurve::linalg {

namespace {

detail::IntRow int_row(const Vector& v) {
  std::vector<mpq_class> q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = v[i].rational();
  return detail::to_int_row(q);
}

detail::ModRow mod_row(const Vector& v, std::uint64_t p) {
  detail::ModRow r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].in(FieldSpec{p}).residue_value();
  return r;
}

Vector from_mod(const detail::ModRow& r, std::uint64_t p) {
  Vector v;
  v.reserve(r.size());
  for (auto x : r) v.push_back(Scalar::residue_u(x, p));
  return v;
}

Vector from_rational(const std::vector<mpq_class>& r) {
  Vector v;
  v.reserve(r.size());
  for (const auto& x : r) v.emplace_back(x);
  return v;
}

void check_shape(const Matrix& rows, int cols) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
}

}  // namespace

Matrix rref(const Matrix& rows, int cols, const FieldSpec& field) {
  check_shape(rows, cols);
  Matrix out;
  if (field.is_rational()) {
    detail::IntEchelon ech(cols);
    for (const auto& r : rows) ech.insert(int_row(r));
    ech.make_reduced();
    for (const auto& r : ech.rational_rows()) out.push_back(from_rational(r));
  } else {
    detail::ModEchelon<detail::DynPrime> ech(detail::DynPrime{field.modulus}, cols);
    for (const auto& r : rows) ech.insert(mod_row(r, field.modulus));
    ech.make_reduced();
    for (const auto& r : ech.rows()) out.push_back(from_mod(r, field.modulus));
  }
  return out;
}

Matrix kernel(const Matrix& A, int cols, const FieldSpec& field) {
  check_shape(A, cols);
  Matrix basis;
  if (field.is_rational()) {
    detail::IntEchelon ech(cols);
    for (const auto& r : A) ech.insert(int_row(r));
    ech.make_reduced();
    for (auto& v : ech.kernel()) {
      Vector row;
      row.reserve(v.size());
      for (auto& x : v) row.emplace_back(std::move(x));
      basis.push_back(std::move(row));
    }
  } else {
    detail::ModEchelon<detail::DynPrime> ech(detail::DynPrime{field.modulus}, cols);
    for (const auto& r : A) ech.insert(mod_row(r, field.modulus));
    ech.make_reduced();
    for (const auto& v : ech.kernel()) basis.push_back(from_mod(v, field.modulus));
  }
  return rref(basis, cols, field);
}

int rank(const Matrix& rows, int cols, const FieldSpec& field) {
  check_shape(rows, cols);
  if (field.is_rational()) {
    detail::IntEchelon ech(cols);
    for (const auto& r : rows) ech.insert(int_row(r));
    return ech.rank();
  }
  detail::ModEchelon<detail::DynPrime> ech(detail::DynPrime{field.modulus}, cols);
  for (const auto& r : rows) ech.insert(mod_row(r, field.modulus));
  return ech.rank();
}

std::optional<Vector> solve(const Matrix& A, const Vector& b, int cols, const FieldSpec& field) {
  if (A.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  Matrix aug;
  aug.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    Vector r = A[i];
    r.push_back(b[i]);
    aug.push_back(std::move(r));
  }
  Matrix R = rref(aug, cols + 1, field);
  Vector x(static_cast<std::size_t>(cols), Scalar(0).in(field));
  for (const auto& row : R) {
    int pivot = 0;
    while (row[pivot].is_zero()) ++pivot;
    if (pivot == cols) return std::nullopt;
    x[pivot] = row[cols];
  }
  return x;
}

}  // namespace mocurve::linalg
