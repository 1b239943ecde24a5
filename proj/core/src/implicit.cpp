#include "mocurve/implicit.hpp"

#include <algorithm>
#include <random>

#include "mocurve/algebra.hpp"

namespace mocurve {

std::string to_string(Method m) {
  switch (m) {
    case Method::Resultant:
      return "resultant";
    case Method::MuBasis:
      return "mubasis";
    case Method::MovingLines:
      return "movinglines";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "resultant") return Method::Resultant;
  if (text == "mubasis") return Method::MuBasis;
  if (text == "movinglines") return Method::MovingLines;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(text) + "'");
}

namespace {

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& field, bool nonzero) {
  constexpr std::int64_t bound = 1 << 20;
  for (;;) {
    std::int64_t v = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
    Scalar s = Scalar(static_cast<long>(v)).in(field);
    if (!nonzero || !s.is_zero()) return s;
  }
}

/// Degree of the fiber through phi(tau) for one random tau.
int fiber_degree(const Parametrization& phi, std::mt19937_64& rng) {
  const FieldSpec field = phi.field();
  for (;;) {
    Scalar t0 = random_scalar(rng, field, true);
    Scalar t1 = random_scalar(rng, field, false);
    auto s = phi.evaluate(t0, t1);
    for (int j : {2, 0, 1}) {
      if (s[j].is_zero()) continue;
      const int k = (j + 1) % 3;
      const int l = (j + 2) % 3;
      TForm a = s[j] * phi.u(k) - s[k] * phi.u(j);
      TForm b = s[j] * phi.u(l) - s[l] * phi.u(j);
      if (a.is_zero() && b.is_zero()) break;
      return gcd_t(a, b).degree();
    }
  }
}

std::vector<int> divisors_descending(int d) {
  std::vector<int> out;
  for (int k = d; k >= 1; --k)
    if (d % k == 0) out.push_back(k);
  return out;
}

void finish_checks(ImplicitResult& r, const Parametrization& phi) {
  r.D = r.F.degree();
  r.vanishes = r.F.substitute(phi.components()).is_zero();
}

}  // namespace

int tracing_index(const Parametrization& phi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int d = phi.degree();
  for (int round = 0; round < 5; ++round) {
    int beta = d + 1;
    for (int sample = 0; sample < 3; ++sample) beta = std::min(beta, fiber_degree(phi, rng));
    if (beta >= 1 && d % beta == 0) return beta;
  }
  throw Error(ErrorCode::Unstable, "tracing index estimates never divided the degree");
}

XForm resultant(const BiForm& f, const BiForm& g) {
  if (f.t_degree() == 0) return f.coeff(0).pow(static_cast<unsigned>(g.t_degree()));
  if (g.t_degree() == 0) return g.coeff(0).pow(static_cast<unsigned>(f.t_degree()));
  return determinant(sylvester_matrix(f, g));
}

std::pair<BiForm, BiForm> fiber_lines(const Parametrization& phi) {
  const TForm zero(phi.degree());
  BiForm f = BiForm::moving_line(-phi.u(2), zero, phi.u(0));
  BiForm g = BiForm::moving_line(zero, -phi.u(2), phi.u(1));
  return {std::move(f), std::move(g)};
}

PowerSplit extract_power(const XForm& G, const Parametrization& phi, std::uint64_t seed) {
  const int d = phi.degree();
  if (G.degree() != d)
    throw Error(ErrorCode::RootFailure, "expected a form of degree " + std::to_string(d) + ", got degree " +
                                            std::to_string(G.degree()));
  const std::uint64_t p = G.field().modulus;
  auto attempt = [&](int beta) -> std::optional<PowerSplit> {
    if (beta < 1 || d % beta != 0) return std::nullopt;
    if (p != 0 && beta % static_cast<int>(p) == 0) return std::nullopt;
    try {
      XForm F = kth_root(G, static_cast<unsigned>(beta));
      Scalar c;
      if (!proportional(G, F.pow(static_cast<unsigned>(beta)), &c)) return std::nullopt;
      return PowerSplit{std::move(F), beta, c};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAPower) throw;
      return std::nullopt;
    }
  };
  for (std::uint64_t k = 0; k < 3; ++k)
    if (auto r = attempt(tracing_index(phi, seed + k * 0x9e3779b97f4a7c15ULL))) return *r;
  for (int beta : divisors_descending(d))
    if (auto r = attempt(beta)) return *r;
  throw Error(ErrorCode::RootFailure, "no root of any divisor order");
}

ImplicitResult implicitize_resultant(const Parametrization& phi, std::uint64_t seed) {
  const int d = phi.degree();
  auto [f, g] = fiber_lines(phi);
  ImplicitResult r;
  r.method = Method::Resultant;
  r.matrix_size = f.t_degree() + g.t_degree();
  r.raw = resultant(f, g);
  if (r.raw.is_zero()) throw Error(ErrorCode::DegenerateImage, "the direct resultant vanishes");
  // A valuation above d only happens when F itself is X2.
  const int alpha = std::min(x_valuation(r.raw, 2), d);
  XForm rest = exact_divide(r.raw, XForm::variable(2).pow(static_cast<unsigned>(alpha)));
  r.alpha = alpha;
  r.alpha_eq_d = alpha == d;
  auto split = extract_power(rest, phi, seed);
  r.F = std::move(split.F);
  r.beta = split.beta;
  r.constant = split.constant;
  finish_checks(r, phi);
  return r;
}

ImplicitResult implicitize_mubasis(const Parametrization& phi, std::uint64_t seed) {
  const MuBasis B = mu_basis(phi);
  ImplicitResult r;
  r.method = Method::MuBasis;
  r.matrix_size = phi.degree();
  r.raw = resultant(B.P.L, B.Q.L);
  if (r.raw.is_zero()) throw Error(ErrorCode::DegenerateImage, "the mu-basis resultant vanishes");
  auto split = extract_power(r.raw, phi, seed);
  r.F = std::move(split.F);
  r.beta = split.beta;
  r.constant = split.constant;
  finish_checks(r, phi);
  return r;
}

MovingLinesResult implicitize_moving_lines(const Parametrization& phi, std::uint64_t seed) {
  const int d = phi.degree();
  auto lines = moving_space(phi, d - 1, 1);
  if (static_cast<int>(lines.size()) != d)
    throw Error(ErrorCode::CrossProductFailure, "expected " + std::to_string(d) + " moving lines of degree " +
                                                    std::to_string(d - 1) + ", found " + std::to_string(lines.size()));
  MovingLinesResult out;
  out.matrix = coefficient_matrix(lines);
  ImplicitResult& r = out.result;
  r.method = Method::MovingLines;
  r.matrix_size = d;
  r.raw = determinant(out.matrix);
  if (r.raw.is_zero()) throw Error(ErrorCode::DegenerateImage, "the moving-line determinant vanishes");
  auto split = extract_power(r.raw, phi, seed);
  r.F = std::move(split.F);
  r.beta = split.beta;
  r.constant = split.constant;
  finish_checks(r, phi);
  return out;
}

ImplicitResult implicitize(const Parametrization& phi, Method method, std::uint64_t seed) {
  switch (method) {
    case Method::Resultant:
      return implicitize_resultant(phi, seed);
    case Method::MuBasis:
      return implicitize_mubasis(phi, seed);
    case Method::MovingLines:
      return implicitize_moving_lines(phi, seed).result;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

PolyMatrix coefficient_matrix(const std::vector<MovingCurve>& curves) {
  if (curves.empty()) throw Error(ErrorCode::NonSquare, "no curves given");
  const int delta = curves.front().L.t_degree();
  for (const auto& c : curves)
    if (c.L.t_degree() != delta) throw Error(ErrorCode::NonSquare, "curves have different t-degrees");
  if (static_cast<int>(curves.size()) != delta + 1)
    throw Error(ErrorCode::NonSquare, std::to_string(curves.size()) + " curves of t-degree " + std::to_string(delta) +
                                          " do not give a square matrix");
  std::vector<std::vector<XForm>> rows;
  rows.reserve(curves.size());
  for (const auto& c : curves) rows.push_back(c.L.coeffs());
  return PolyMatrix(std::move(rows));
}

HybridResult hybrid_det(const std::vector<MovingCurve>& curves, const Parametrization& phi, std::uint64_t seed) {
  PolyMatrix M = coefficient_matrix(curves);
  for (std::size_t k = 0; k < curves.size(); ++k)
    if (!curves[k].follows(phi))
      throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(k) + " does not follow the parametrization");
  HybridResult out;
  out.det = determinant(M);
  if (out.det.is_zero()) throw Error(ErrorCode::ZeroDeterminant, "coefficient matrix is singular");
  const ImplicitResult ref = implicitize_mubasis(phi, seed);
  try {
    XForm q = exact_divide(out.det, ref.F.pow(static_cast<unsigned>(ref.beta)));
    if (q.degree() == 0) {
      out.implicit = true;
      out.constant = q.leading_coeff();
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
  }
  return out;
}

BezoutCheck sylvester_bezout_check(const Parametrization& phi) {
  const int d = phi.degree();
  const MuBasis B = mu_basis(phi);
  XForm lhs = XForm::variable(2).pow(static_cast<unsigned>(d)) * resultant(B.P.L, B.Q.L);
  auto [f, g] = fiber_lines(phi);
  XForm rhs = determinant(bezout_matrix(f, g));
  BezoutCheck out;
  out.holds = proportional(lhs, rhs, &out.constant);
  return out;
}

}  // namespace mocurve
