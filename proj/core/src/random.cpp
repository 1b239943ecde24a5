#include "mocurve/random.hpp"

#include "mocurve/biform.hpp"
#include "mocurve/implicit.hpp"
#include "mocurve/syzygy.hpp"

namespace mocurve {

namespace {
constexpr int kMaxDraws = 10000;
}

std::int64_t Random::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

TForm Random::tform(int degree, int bound, const FieldSpec& field) {
  TForm f(degree);
  for (int i = 0; i <= degree; ++i) f.set_coeff(i, Scalar(static_cast<long>(integer(-bound, bound))).in(field));
  return f;
}

Parametrization Random::parametrization(int d, int bound, const FieldSpec& field) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    try {
      return Parametrization(tform(d, bound, field), tform(d, bound, field), tform(d, bound, field));
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "could not draw a valid parametrization");
}

Parametrization Random::parametrization_with_mu(int d, int mu, int bound, const FieldSpec& field) {
  if (mu < 0 || 2 * mu > d) throw Error(ErrorCode::InvalidArgument, "mu must lie in [0, d/2]");
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::array<TForm, 3> p{tform(mu, bound, field), tform(mu, bound, field), tform(mu, bound, field)};
    std::array<TForm, 3> q{tform(d - mu, bound, field), tform(d - mu, bound, field), tform(d - mu, bound, field)};
    try {
      Parametrization phi = from_cross_product(p, q);
      if (phi.degree() == d && mocurve::mu(phi) == mu) return phi;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "could not draw a parametrization with the requested mu");
}

Parametrization Random::parametrization_with_multiple_point(int d, int bound) {
  if (d < 4) throw Error(ErrorCode::InvalidArgument, "a point of multiplicity d - 2 needs d >= 4");
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    TForm h = tform(d - 2, bound);
    try {
      Parametrization phi(h * tform(2, bound), h * tform(2, bound), tform(d, bound));
      if (mocurve::mu(phi) == 2 && tracing_index(phi, next()) == 1) return phi;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "could not draw a parametrization with a point of multiplicity d - 2");
}

}  // namespace mocurve
