#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

/// Row-reduces m in place; returns the pivot column of each nonzero row.
std::vector<int> eliminate(Matrix& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Scalar inv = m[row][c].inverse();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      Scalar f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::array<int, 3>> monomials(int nu) {
  std::vector<std::array<int, 3>> out;
  for (int a0 = nu; a0 >= 0; --a0)
    for (int a1 = nu - a0; a1 >= 0; --a1) out.push_back({a0, a1, nu - a0 - a1});
  return out;
}

int index_of(const std::vector<std::array<int, 3>>& monos, const std::array<int, 3>& e) {
  auto it = std::find(monos.begin(), monos.end(), e);
  if (it == monos.end()) throw std::logic_error("monomial not found");
  return static_cast<int>(it - monos.begin());
}

std::vector<Scalar> dehomogenized(const TForm& f) {
  // coefficient of t^i at t0 = 1, t1 = t
  return f.coeffs();
}

std::vector<long> divisors(long n) {
  n = std::labs(n);
  std::vector<long> out;
  for (long k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  return out;
}

Scalar eval_upoly(const std::vector<Scalar>& p, const Scalar& t) {
  Scalar acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

}  // namespace

int rank(Matrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(eliminate(m, static_cast<int>(m.front().size())).size());
}

Scalar det(Matrix m) {
  const std::size_t n = m.size();
  Scalar acc(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      acc = -acc;
    }
    acc *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      Scalar f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return acc;
}

Matrix null_space(Matrix m, int cols) {
  auto pivots = eliminate(m, cols);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(cols), Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

XForm leibniz_det(const std::vector<std::vector<XForm>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  XForm acc;
  bool first = true;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    XForm term = XForm::constant(Scalar(inversions % 2 ? -1 : 1));
    for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
    if (first) {
      acc = term;
      first = false;
    } else {
      acc += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Scalar resultant_at(const BiForm& f, const BiForm& g, const std::array<Scalar, 3>& x) {
  const int m = f.t_degree();
  const int n = g.t_degree();
  Matrix s(static_cast<std::size_t>(m + n), std::vector<Scalar>(static_cast<std::size_t>(m + n), Scalar(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(i).evaluate(x);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(i).evaluate(x);
  return det(s);
}

std::vector<std::vector<XForm>> cayley_bezout(const BiForm& f, const BiForm& g) {
  const int m = f.t_degree();
  const int deg = f.x_degree() + g.x_degree();
  // n[j] is the coefficient of t^j, itself a polynomial in s (index = power).
  std::vector<std::vector<XForm>> n(static_cast<std::size_t>(m + 1),
                                    std::vector<XForm>(static_cast<std::size_t>(m + 1), XForm(deg)));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      n[j][i] += f.coeff(i) * g.coeff(j);
      n[j][i] -= f.coeff(j) * g.coeff(i);
    }
  // Synthetic division by (t - s): q[j-1] = n[j] + s q[j].
  auto shift = [&](const std::vector<XForm>& p) {
    std::vector<XForm> out(p.size() + 1, XForm(deg));
    for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
    return out;
  };
  auto add = [&](std::vector<XForm> a, const std::vector<XForm>& b) {
    if (a.size() < b.size()) a.resize(b.size(), XForm(deg));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };
  std::vector<std::vector<XForm>> q(static_cast<std::size_t>(m));
  q[m - 1] = n[m];
  for (int j = m - 1; j >= 1; --j) q[j - 1] = add(n[j], shift(q[j]));
  auto rem = add(n[0], shift(q[0]));
  for (const auto& c : rem)
    if (!c.is_zero()) throw std::logic_error("Cayley numerator not divisible by t - s");
  std::vector<std::vector<XForm>> C(static_cast<std::size_t>(m), std::vector<XForm>(static_cast<std::size_t>(m), XForm(deg)));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m && i < static_cast<int>(q[j].size()); ++i) C[i][j] = q[j][i];
  for (int j = 0; j < m; ++j)
    for (int i = m; i < static_cast<int>(q[j].size()); ++i)
      if (!q[j][i].is_zero()) throw std::logic_error("quotient degree in s too large");
  return C;
}

Matrix moving_system(const Parametrization& phi, int t_degree, int x_degree) {
  const int d = phi.degree();
  const auto monos = monomials(x_degree);
  const int rows = t_degree + x_degree * d + 1;
  const int cols = (t_degree + 1) * static_cast<int>(monos.size());
  Matrix A(static_cast<std::size_t>(rows), std::vector<Scalar>(static_cast<std::size_t>(cols), Scalar(0)));
  int col = 0;
  for (int i = 0; i <= t_degree; ++i) {
    for (const auto& a : monos) {
      TForm img = phi.u(0).pow(a[0]) * phi.u(1).pow(a[1]) * phi.u(2).pow(a[2]);
      for (int k = 0; k <= img.degree(); ++k) A[i + k][col] = img.coeff(k);
      ++col;
    }
  }
  return A;
}

int moving_dimension(const Parametrization& phi, int t_degree, int x_degree) {
  const int cols = (t_degree + 1) * (x_degree + 1) * (x_degree + 2) / 2;
  return cols - rank(moving_system(phi, t_degree, x_degree));
}

int rational_fiber_size(const Parametrization& phi, long tau) {
  auto s = phi.evaluate(Scalar(1), Scalar(tau));
  int j = !s[2].is_zero() ? 2 : (!s[0].is_zero() ? 0 : 1);
  const int k = (j + 1) % 3;
  const int l = (j + 2) % 3;
  TForm fa = s[j] * phi.u(k) - s[k] * phi.u(j);
  TForm fb = s[j] * phi.u(l) - s[l] * phi.u(j);
  const int d = phi.degree();
  int count = 0;
  // Point at infinity t0 = 0 lies in the fiber iff both top coefficients vanish.
  if (fa.coeff(d).is_zero() && fb.coeff(d).is_zero()) ++count;
  std::vector<Scalar> a = dehomogenized(fa.is_zero() ? fb : fa);
  std::vector<Scalar> b = dehomogenized(fb);
  // Clear denominators to apply the rational root test.
  mpz_class den = 1;
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<long> ia;
  for (const auto& c : a) ia.push_back(mpq_class(c.rational() * den).get_num().get_si());
  while (!ia.empty() && ia.back() == 0) ia.pop_back();
  std::size_t low = 0;
  while (low < ia.size() && ia[low] == 0) ++low;
  if (low > 0 && eval_upoly(b, Scalar(0)).is_zero()) ++count;
  if (low >= ia.size()) return count;
  for (long p : divisors(ia[low]))
    for (long q : divisors(ia.back()))
      for (int sign : {1, -1}) {
        if (std::gcd(p, q) != 1) continue;
        Scalar t = Scalar(mpq_class(sign * p, q));
        if (eval_upoly(a, t).is_zero() && eval_upoly(b, t).is_zero()) ++count;
      }
  return count;
}

std::map<Bidegree, int> betti_numbers(const Parametrization& phi, int t_max, int x_max) {
  std::map<Bidegree, Matrix> kernels;
  std::map<Bidegree, int> out;
  for (int t = 0; t <= t_max; ++t) {
    for (int x = 0; x <= x_max; ++x) {
      const auto monos = monomials(x);
      const int n = static_cast<int>(monos.size());
      const int cols = (t + 1) * n;
      Matrix K = null_space(moving_system(phi, t, x), cols);
      kernels[{t, x}] = K;
      if (K.empty()) continue;
      Matrix M;
      if (t > 0) {
        for (const auto& v : kernels.at({t - 1, x})) {
          for (int shift = 0; shift < 2; ++shift) {
            std::vector<Scalar> w(static_cast<std::size_t>(cols), Scalar(0));
            for (int i = 0; i < t; ++i)
              for (int k = 0; k < n; ++k) w[(i + shift) * n + k] = v[i * n + k];
            M.push_back(std::move(w));
          }
        }
      }
      if (x > 0) {
        const auto lower = monomials(x - 1);
        const int ln = static_cast<int>(lower.size());
        for (const auto& v : kernels.at({t, x - 1})) {
          for (int var = 0; var < 3; ++var) {
            std::vector<Scalar> w(static_cast<std::size_t>(cols), Scalar(0));
            for (int i = 0; i <= t; ++i)
              for (int k = 0; k < ln; ++k) {
                auto e = lower[k];
                ++e[var];
                w[i * n + index_of(monos, e)] = v[i * ln + k];
              }
            M.push_back(std::move(w));
          }
        }
      }
      const int gens = static_cast<int>(K.size()) - rank(M);
      if (gens > 0) out[{t, x}] = gens;
    }
  }
  return out;
}

}  // namespace oracle
