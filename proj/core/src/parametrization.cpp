#include "mocurve/parametrization.hpp"

#include <algorithm>
#include <vector>

#include "mocurve/algebra.hpp"

namespace mocurve {

Parametrization::Parametrization(TForm u0, TForm u1, TForm u2) : u_{std::move(u0), std::move(u1), std::move(u2)} {
  int d = u_[0].degree();
  if (u_[1].degree() != d || u_[2].degree() != d)
    throw Error(ErrorCode::DegreeMismatch, "components have degrees " + std::to_string(u_[0].degree()) + ", " +
                                               std::to_string(u_[1].degree()) + ", " + std::to_string(u_[2].degree()));
  if (u_[0].is_zero() && u_[1].is_zero() && u_[2].is_zero())
    throw Error(ErrorCode::ZeroInput, "all three components vanish");
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "parametrization degree must be at least 1");
  TForm g = gcd_t(gcd_t(u_[0], u_[1]), u_[2]);
  if (g.degree() > 0) throw Error(ErrorCode::CommonFactor, "components share the factor " + g.str());
}

FieldSpec Parametrization::field() const noexcept {
  for (const auto& f : u_) {
    auto s = f.field();
    if (!s.is_rational()) return s;
  }
  return {};
}

Parametrization Parametrization::in(const FieldSpec& field) const {
  return Parametrization(u_[0].in(field), u_[1].in(field), u_[2].in(field));
}

std::array<Scalar, 3> Parametrization::evaluate(const Scalar& t0, const Scalar& t1) const {
  return {u_[0].evaluate(t0, t1), u_[1].evaluate(t0, t1), u_[2].evaluate(t0, t1)};
}

std::uint64_t Parametrization::fingerprint() const {
  // FNV-1a over the rendering; stable across runs and platforms.
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : str() + "|" + to_string(field())) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Parametrization::str() const {
  return "(" + u_[0].str() + ", " + u_[1].str() + ", " + u_[2].str() + ")";
}

TForm substitute_param(const BiForm& L, const Parametrization& phi) {
  const int d = phi.degree();
  const int nu = L.x_degree();
  const int delta = L.t_degree();
  std::array<std::vector<TForm>, 3> powers;
  for (int j = 0; j < 3; ++j) {
    powers[j].push_back(TForm::constant(Scalar(1)));
    for (int k = 1; k <= nu; ++k) powers[j].push_back(powers[j].back() * phi.u(j));
  }
  TForm out(delta + nu * d);
  for (int i = 0; i <= delta; ++i) {
    const XForm& c = L.coeff(i);
    if (c.is_zero()) continue;
    TForm inner(nu * d);
    for (const auto& [e, coeff] : c.terms()) inner += coeff * (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]);
    // Multiply by t0^(delta - i) t1^i: shift coefficient index by i.
    for (int k = 0; k <= nu * d; ++k)
      if (!inner.coeff(k).is_zero()) out.set_coeff(k + i, out.coeff(k + i) + inner.coeff(k));
  }
  return out;
}

Homogenized homogenize(const UPoly& a, const UPoly& b, const UPoly& c) {
  int d = std::max({degree(a), degree(b), degree(c)});
  if (d < 0) throw Error(ErrorCode::ZeroInput, "all of a, b, c are zero");
  if (degree(c) < 0) throw Error(ErrorCode::ZeroInput, "denominator c is zero");
  if (d == 0) throw Error(ErrorCode::DegenerateImage, "constant input maps to a single point");
  TForm u0 = homogenize(c, d);
  TForm u1 = homogenize(a, d);
  TForm u2 = homogenize(b, d);
  TForm g = gcd_t(gcd_t(u0, u1), u2);
  if (g.degree() > 0) {
    u0 = divide_t(u0, g);
    u1 = divide_t(u1, g);
    u2 = divide_t(u2, g);
  } else {
    g = TForm::constant(Scalar(1)).in(g.field());
  }
  if (u0.degree() == 0) throw Error(ErrorCode::DegenerateImage, "image is a single point after removing " + g.str());
  return {Parametrization(std::move(u0), std::move(u1), std::move(u2)), std::move(g)};
}

Parametrization from_cross_product(const std::array<TForm, 3>& p, const std::array<TForm, 3>& q) {
  auto u = cross(p, q);
  return Parametrization(u[0], u[1], u[2]);
}

}  // namespace mocurve
