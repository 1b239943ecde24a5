#include "mocurve/tform.hpp"

#include "render.hpp"

namespace mocurve {

TForm::TForm(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1)) {
  if (degree < 0) throw Error(ErrorCode::DegreeMismatch, "negative t-degree");
}

TForm::TForm(int degree, std::vector<Scalar> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree + 1))
    throw Error(ErrorCode::DegreeMismatch, "t-form needs degree + 1 coefficients");
}

TForm TForm::constant(Scalar c) { return TForm(0, {std::move(c)}); }

TForm TForm::monomial(int degree, int i, Scalar c) {
  TForm f(degree);
  f.set_coeff(i, std::move(c));
  return f;
}

bool TForm::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

FieldSpec TForm::field() const noexcept {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return c.field();
  return {};
}

TForm TForm::in(const FieldSpec& field) const {
  TForm r(degree_);
  for (int i = 0; i <= degree_; ++i) r.coeffs_[i] = coeffs_[i].in(field);
  return r;
}

TForm& TForm::operator+=(const TForm& rhs) {
  if (degree_ != rhs.degree_)
    throw Error(ErrorCode::DegreeMismatch,
                "cannot add t-forms of degrees " + std::to_string(degree_) + " and " + std::to_string(rhs.degree_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TForm& TForm::operator-=(const TForm& rhs) {
  if (degree_ != rhs.degree_)
    throw Error(ErrorCode::DegreeMismatch,
                "cannot subtract t-forms of degrees " + std::to_string(degree_) + " and " +
                    std::to_string(rhs.degree_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TForm& TForm::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TForm TForm::operator-() const {
  TForm r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

TForm operator*(const TForm& a, const TForm& b) {
  TForm r(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

bool operator==(const TForm& a, const TForm& b) { return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_; }

TForm TForm::derivative(int var) const {
  if (degree_ == 0) return TForm(0);
  TForm r(degree_ - 1);
  for (int i = 0; i <= degree_; ++i) {
    int e = var == 0 ? degree_ - i : i;
    if (e == 0) continue;
    int target = var == 0 ? i : i - 1;
    r.coeffs_[target] = coeffs_[i] * Scalar(e);
  }
  return r;
}

TForm TForm::pow(unsigned k) const {
  TForm result = TForm::constant(Scalar(1)).in(field());
  TForm base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Scalar TForm::evaluate(const Scalar& t0, const Scalar& t1) const {
  // Horner in t1 / t0 without dividing: sum c_i t0^(d-i) t1^i.
  Scalar acc(0);
  Scalar t0_pow(1);
  std::vector<Scalar> t0_powers(coeffs_.size());
  for (int i = 0; i <= degree_; ++i) {
    t0_powers[degree_ - i] = t0_pow;
    t0_pow *= t0;
  }
  Scalar t1_pow(1);
  for (int i = 0; i <= degree_; ++i) {
    acc += coeffs_[i] * t0_powers[i] * t1_pow;
    t1_pow *= t1;
  }
  return acc;
}

int TForm::t0_valuation() const noexcept {
  // t0^e divides iff coefficients with t0-exponent < e vanish, i.e. i > degree - e.
  int e = 0;
  for (int i = degree_; i >= 0 && coeffs_[i].is_zero(); --i) ++e;
  return e;
}

int TForm::t1_valuation() const noexcept {
  int e = 0;
  for (int i = 0; i <= degree_ && coeffs_[i].is_zero(); ++i) ++e;
  return e;
}

std::string TForm::str() const {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (int i = 0; i <= degree_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::string mono;
    detail::append_power(mono, "t0", degree_ - i);
    detail::append_power(mono, "t1", i);
    terms.emplace_back(std::move(mono), coeffs_[i]);
  }
  return detail::render_terms(terms);
}

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

UPoly dehomogenize(const TForm& f) {
  UPoly p(f.coeffs());
  trim(p);
  return p;
}

TForm homogenize(const UPoly& p, int degree) {
  if (mocurve::degree(p) > degree)
    throw Error(ErrorCode::DegreeMismatch, "homogenization degree below polynomial degree");
  TForm f(degree);
  for (int i = 0; i < static_cast<int>(p.size()) && i <= degree; ++i) f.set_coeff(i, p[i]);
  return f;
}

}  // namespace mocurve
