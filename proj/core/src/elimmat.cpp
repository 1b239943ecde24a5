#include "mocurve/elimmat.hpp"

#include <sstream>

#include "mocurve/algebra.hpp"

namespace mocurve {

PolyMatrix::PolyMatrix(int rows, int cols)
    : entries_(static_cast<std::size_t>(rows), std::vector<XForm>(static_cast<std::size_t>(cols))) {}

PolyMatrix::PolyMatrix(std::vector<std::vector<XForm>> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_)
    if (row.size() != entries_.front().size()) throw Error(ErrorCode::InvalidArgument, "ragged polynomial matrix");
}

std::string PolyMatrix::str() const {
  std::ostringstream os;
  for (const auto& row : entries_) {
    os << '[';
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].str();
    os << "]\n";
  }
  return os.str();
}

PolyMatrix sylvester_matrix(const BiForm& f, const BiForm& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroInput, "Sylvester matrix of a zero form");
  const int m = f.t_degree();
  const int n = g.t_degree();
  if (m < 1 || n < 1) throw Error(ErrorCode::DegreeMismatch, "Sylvester matrix needs t-degrees >= 1");
  const int size = m + n;
  std::vector<std::vector<XForm>> rows;
  rows.reserve(static_cast<std::size_t>(size));
  for (int r = 0; r < n; ++r) {
    std::vector<XForm> row(static_cast<std::size_t>(size), XForm(f.x_degree()));
    for (int i = 0; i <= m; ++i) row[r + i] = f.coeff(i);
    rows.push_back(std::move(row));
  }
  for (int r = 0; r < m; ++r) {
    std::vector<XForm> row(static_cast<std::size_t>(size), XForm(g.x_degree()));
    for (int i = 0; i <= n; ++i) row[r + i] = g.coeff(i);
    rows.push_back(std::move(row));
  }
  return PolyMatrix(std::move(rows));
}

PolyMatrix bezout_matrix(const BiForm& f, const BiForm& g) {
  const int m = f.t_degree();
  if (g.t_degree() != m)
    throw Error(ErrorCode::DegreeMismatch, "Bezout matrix needs equal t-degrees, got " + std::to_string(m) +
                                               " and " + std::to_string(g.t_degree()));
  if (m < 1) throw Error(ErrorCode::DegreeMismatch, "Bezout matrix needs t-degree >= 1");
  const int deg = f.x_degree() + g.x_degree();
  // Dehomogenized at s0 = t0 = 1 the quotient C(s, t) satisfies
  // C(s, t) (t - s) = N(s, t) with N[i][j] = f_i g_j - f_j g_i.
  auto N = [&](int i, int j) { return f.coeff(i) * g.coeff(j) - f.coeff(j) * g.coeff(i); };
  std::vector<std::vector<XForm>> C(static_cast<std::size_t>(m), std::vector<XForm>(static_cast<std::size_t>(m), XForm(deg)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      XForm v = N(i, j + 1);
      if (i > 0 && j + 1 < m) v += C[i - 1][j + 1];
      C[i][j] = std::move(v);
    }
  }
  return PolyMatrix(std::move(C));
}

namespace {

int diagonal_degree(const PolyMatrix& M) {
  int deg = 0;
  for (int i = 0; i < M.rows(); ++i) deg += M.at(i, i).degree();
  return deg;
}

void require_square(const PolyMatrix& M) {
  if (!M.is_square())
    throw Error(ErrorCode::NonSquare, "determinant of a " + std::to_string(M.rows()) + "x" +
                                          std::to_string(M.cols()) + " matrix");
}

XForm laplace(const std::vector<std::vector<const XForm*>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return *m[0][0];
  if (n == 2) return *m[0][0] * *m[1][1] - *m[0][1] * *m[1][0];
  XForm acc;
  bool started = false;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<const XForm*>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<const XForm*> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    XForm term = *m[0][j] * laplace(minor);
    if (j % 2 == 1) term = -term;
    if (!started) {
      acc = std::move(term);
      started = true;
    } else {
      acc += term;
    }
  }
  return acc;
}

}  // namespace

XForm cofactor_determinant(const PolyMatrix& M) {
  require_square(M);
  if (M.rows() == 0) return XForm::constant(Scalar(1));
  std::vector<std::vector<const XForm*>> view;
  for (int i = 0; i < M.rows(); ++i) {
    std::vector<const XForm*> row;
    for (int j = 0; j < M.cols(); ++j) row.push_back(&M.at(i, j));
    view.push_back(std::move(row));
  }
  return laplace(view);
}

XForm bareiss_determinant(const PolyMatrix& M) {
  require_square(M);
  const int n = M.rows();
  if (n == 0) return XForm::constant(Scalar(1));
  const int total_degree = diagonal_degree(M);
  std::vector<std::vector<XForm>> a = M.entries();
  XForm prev = XForm::constant(Scalar(1));
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      // A column that vanishes below the diagonal forces a zero determinant.
      if (swap_row < 0) return XForm(total_degree);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        XForm num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(num, prev);
      }
      a[i][k] = XForm(a[i][k].degree());
    }
    prev = a[k][k];
  }
  XForm det = std::move(a[n - 1][n - 1]);
  if (det.is_zero()) return XForm(total_degree);
  return negate ? -det : det;
}

XForm determinant(const PolyMatrix& M) {
  require_square(M);
  if (M.rows() <= 4) return cofactor_determinant(M);
  return bareiss_determinant(M);
}

}  // namespace mocurve
