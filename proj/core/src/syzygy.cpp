#include "mocurve/syzygy.hpp"

namespace mocurve {

linalg::Vector to_coordinates(const BiForm& L) {
  const int n = x_monomial_count(L.x_degree());
  const Scalar zero = Scalar(0).in(L.field());
  linalg::Vector v(static_cast<std::size_t>((L.t_degree() + 1) * n), zero);
  for (int i = 0; i <= L.t_degree(); ++i)
    for (const auto& [e, c] : L.coeff(i).terms()) v[static_cast<std::size_t>(i * n + x_monomial_index(e))] = c;
  return v;
}

BiForm from_coordinates(const linalg::Vector& v, int t_degree, int x_degree) {
  const auto monos = x_monomials(x_degree);
  const int n = static_cast<int>(monos.size());
  if (static_cast<int>(v.size()) != (t_degree + 1) * n)
    throw Error(ErrorCode::InvalidArgument, "coordinate vector has the wrong length");
  BiForm L(t_degree, x_degree);
  for (int i = 0; i <= t_degree; ++i) {
    XForm c(x_degree);
    for (int k = 0; k < n; ++k) c.add_term(monos[k], v[static_cast<std::size_t>(i * n + k)]);
    L.set_coeff(i, std::move(c));
  }
  return L;
}

linalg::Matrix substitution_matrix(const Parametrization& phi, int t_degree, int x_degree) {
  if (t_degree < 0 || x_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative bidegree");
  const FieldSpec field = phi.field();
  const int d = phi.degree();
  const auto monos = x_monomials(x_degree);
  const int n = static_cast<int>(monos.size());
  const int rows = t_degree + x_degree * d + 1;
  const int cols = (t_degree + 1) * n;

  std::array<std::vector<TForm>, 3> powers;
  for (int j = 0; j < 3; ++j) {
    powers[j].push_back(TForm::constant(Scalar(1)));
    for (int k = 1; k <= x_degree; ++k) powers[j].push_back(powers[j].back() * phi.u(j));
  }
  std::vector<TForm> images;
  images.reserve(monos.size());
  for (const auto& e : monos) images.push_back(powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]);

  const Scalar zero = Scalar(0).in(field);
  linalg::Matrix A(static_cast<std::size_t>(rows), linalg::Vector(static_cast<std::size_t>(cols), zero));
  for (int i = 0; i <= t_degree; ++i)
    for (int k = 0; k < n; ++k)
      for (int r = 0; r <= x_degree * d; ++r) A[r + i][i * n + k] = images[k].coeff(r).in(field);
  return A;
}

std::vector<MovingCurve> moving_space(const Parametrization& phi, int t_degree, int x_degree) {
  const int cols = (t_degree + 1) * x_monomial_count(x_degree);
  const auto basis = linalg::kernel(substitution_matrix(phi, t_degree, x_degree), cols, phi.field());
  const std::uint64_t fp = phi.fingerprint();
  std::vector<MovingCurve> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.push_back({from_coordinates(v, t_degree, x_degree), fp});
  return out;
}

int moving_space_dimension(const Parametrization& phi, int t_degree, int x_degree) {
  const int cols = (t_degree + 1) * x_monomial_count(x_degree);
  return cols - linalg::rank(substitution_matrix(phi, t_degree, x_degree), cols, phi.field());
}

int mu(const Parametrization& phi) {
  for (int delta = 0; delta <= phi.degree(); ++delta)
    if (moving_space_dimension(phi, delta, 1) > 0) return delta;
  throw Error(ErrorCode::CrossProductFailure, "no moving line up to degree d");
}

namespace {

/// t0^(k-j) t1^j * L for j = 0..k, as coordinate rows.
linalg::Matrix t_multiples(const BiForm& L, int k) {
  linalg::Matrix rows;
  for (int j = 0; j <= k; ++j) rows.push_back(to_coordinates(TForm::monomial(k, j) * L));
  return rows;
}

}  // namespace

MuBasis mu_basis(const Parametrization& phi) {
  const FieldSpec field = phi.field();
  const int d = phi.degree();
  const int m = mu(phi);
  auto low = moving_space(phi, m, 1);
  MuBasis B;
  B.mu = m;
  B.P = low.front();

  auto high = moving_space(phi, d - m, 1);
  linalg::Matrix span = t_multiples(B.P.L, d - 2 * m);
  const int cols = 3 * (d - m + 1);
  const int base = linalg::rank(span, cols, field);
  bool found = false;
  for (const auto& cand : high) {
    span.push_back(to_coordinates(cand.L));
    if (linalg::rank(span, cols, field) > base) {
      B.Q = cand;
      found = true;
      break;
    }
    span.pop_back();
  }
  if (!found) throw Error(ErrorCode::CrossProductFailure, "no second basis element in degree " + std::to_string(d - m));

  auto w = cross(B.P.L.line_coefficients(), B.Q.L.line_coefficients());
  int pivot = -1;
  for (int j = 0; j < 3 && pivot < 0; ++j)
    for (int i = 0; i <= d; ++i)
      if (!w[j].coeff(i).is_zero()) {
        pivot = j * (d + 1) + i;
        break;
      }
  if (pivot < 0) throw Error(ErrorCode::CrossProductFailure, "cross product of the basis vanishes");
  const int pj = pivot / (d + 1);
  const int pi = pivot % (d + 1);
  B.ratio = phi.u(pj).coeff(pi) / w[pj].coeff(pi);
  for (int j = 0; j < 3; ++j)
    if (w[j] * B.ratio != phi.u(j))
      throw Error(ErrorCode::CrossProductFailure, "P x Q is not proportional to the parametrization");
  return B;
}

std::pair<TForm, TForm> decompose_moving_line(const MovingCurve& L, const MuBasis& B) {
  if (L.L.x_degree() != 1) throw Error(ErrorCode::InvalidArgument, "decomposition needs a moving line");
  const int delta = L.L.t_degree();
  const int dp = delta - B.mu;
  const int dq = delta - B.Q.L.t_degree();
  if (dp < 0) throw Error(ErrorCode::NoDecomposition, "degree " + std::to_string(delta) + " is below mu");
  const FieldSpec field = L.L.field().is_rational() ? B.P.L.field() : L.L.field();

  // Columns of the system: coordinates of each t-monomial multiple of P, then of Q.
  linalg::Matrix cols_p = t_multiples(B.P.L, dp);
  linalg::Matrix cols_q = dq >= 0 ? t_multiples(B.Q.L, dq) : linalg::Matrix{};
  const int unknowns = static_cast<int>(cols_p.size() + cols_q.size());
  const linalg::Vector rhs = to_coordinates(L.L);
  const Scalar zero = Scalar(0).in(field);
  linalg::Matrix A(rhs.size(), linalg::Vector(static_cast<std::size_t>(unknowns), zero));
  for (std::size_t r = 0; r < rhs.size(); ++r) {
    for (std::size_t c = 0; c < cols_p.size(); ++c) A[r][c] = cols_p[c][r];
    for (std::size_t c = 0; c < cols_q.size(); ++c) A[r][cols_p.size() + c] = cols_q[c][r];
  }
  auto x = linalg::solve(A, rhs, unknowns, field);
  if (!x) throw Error(ErrorCode::NoDecomposition, "line is not a combination of the mu-basis");

  TForm p(dp);
  for (int j = 0; j <= dp; ++j) p.set_coeff(j, (*x)[static_cast<std::size_t>(j)]);
  TForm q(std::max(dq, 0));
  for (int j = 0; j <= dq; ++j) q.set_coeff(j, (*x)[cols_p.size() + static_cast<std::size_t>(j)]);
  return {p.in(field), q.in(field)};
}

}  // namespace mocurve
