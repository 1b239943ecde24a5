#include "mocurve/biform.hpp"

#include "render.hpp"

namespace mocurve {

BiForm::BiForm(int t_degree, int x_degree)
    : t_degree_(t_degree), x_degree_(x_degree), coeffs_(static_cast<std::size_t>(t_degree + 1), XForm(x_degree)) {
  if (t_degree < 0 || x_degree < 0) throw Error(ErrorCode::DegreeMismatch, "negative bidegree");
}

BiForm BiForm::moving_line(const TForm& v0, const TForm& v1, const TForm& v2) {
  int delta = v0.degree();
  if (v1.degree() != delta || v2.degree() != delta)
    throw Error(ErrorCode::DegreeMismatch, "moving line coefficients need a common degree");
  BiForm L(delta, 1);
  const std::array<const TForm*, 3> v{&v0, &v1, &v2};
  for (int i = 0; i <= delta; ++i) {
    XForm c(1);
    for (int j = 0; j < 3; ++j) c += XForm::variable(j) * v[j]->coeff(i);
    L.coeffs_[i] = std::move(c);
  }
  return L;
}

BiForm BiForm::from_xform(const XForm& f) {
  BiForm L(0, f.degree());
  L.coeffs_[0] = f;
  return L;
}

BiForm BiForm::from_tform(const TForm& f) {
  BiForm L(f.degree(), 0);
  for (int i = 0; i <= f.degree(); ++i) L.coeffs_[i] = XForm::constant(f.coeff(i));
  return L;
}

void BiForm::set_coeff(int i, XForm f) {
  if (f.degree() != x_degree_)
    throw Error(ErrorCode::DegreeMismatch, "coefficient has X-degree " + std::to_string(f.degree()) +
                                               ", expected " + std::to_string(x_degree_));
  coeffs_.at(static_cast<std::size_t>(i)) = std::move(f);
}

bool BiForm::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

FieldSpec BiForm::field() const noexcept {
  for (const auto& c : coeffs_) {
    auto f = c.field();
    if (!f.is_rational()) return f;
  }
  return {};
}

std::size_t BiForm::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += c.size();
  return n;
}

BiForm& BiForm::operator+=(const BiForm& rhs) {
  if (bidegree() != rhs.bidegree()) throw Error(ErrorCode::DegreeMismatch, "cannot add bi-forms of different bidegree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& rhs) {
  if (bidegree() != rhs.bidegree())
    throw Error(ErrorCode::DegreeMismatch, "cannot subtract bi-forms of different bidegree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

BiForm& BiForm::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BiForm BiForm::operator-() const {
  BiForm r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

BiForm operator*(const BiForm& a, const BiForm& b) {
  BiForm r(a.t_degree_ + b.t_degree_, a.x_degree_ + b.x_degree_);
  for (int i = 0; i <= a.t_degree_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j <= b.t_degree_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

BiForm operator*(const TForm& a, const BiForm& b) {
  BiForm r(a.degree() + b.t_degree_, b.x_degree_);
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.t_degree_; ++j) r.coeffs_[i + j] += b.coeffs_[j] * a.coeff(i);
  }
  return r;
}

BiForm operator*(const XForm& a, const BiForm& b) {
  BiForm r(b.t_degree_, a.degree() + b.x_degree_);
  for (int j = 0; j <= b.t_degree_; ++j) r.coeffs_[j] = a * b.coeffs_[j];
  return r;
}

bool operator==(const BiForm& a, const BiForm& b) { return a.bidegree() == b.bidegree() && a.coeffs_ == b.coeffs_; }

BiForm BiForm::t_derivative(int var) const {
  if (t_degree_ == 0) return BiForm(0, x_degree_);
  BiForm r(t_degree_ - 1, x_degree_);
  for (int i = 0; i <= t_degree_; ++i) {
    int e = var == 0 ? t_degree_ - i : i;
    if (e == 0) continue;
    int target = var == 0 ? i : i - 1;
    r.coeffs_[target] += coeffs_[i] * Scalar(e);
  }
  return r;
}

BiForm BiForm::x_derivative(int var) const {
  BiForm r(t_degree_, x_degree_ == 0 ? 0 : x_degree_ - 1);
  for (int i = 0; i <= t_degree_; ++i) r.coeffs_[i] = coeffs_[i].derivative(var);
  return r;
}

std::array<TForm, 3> BiForm::line_coefficients() const {
  if (x_degree_ != 1) throw Error(ErrorCode::DegreeMismatch, "line coefficients need X-degree 1");
  std::array<TForm, 3> v{TForm(t_degree_), TForm(t_degree_), TForm(t_degree_)};
  for (int i = 0; i <= t_degree_; ++i)
    for (int j = 0; j < 3; ++j) {
      XExp e{0, 0, 0};
      e[static_cast<std::size_t>(j)] = 1;
      v[j].set_coeff(i, coeffs_[i].coeff(e));
    }
  return v;
}

std::string BiForm::str() const {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (int i = 0; i <= t_degree_; ++i) {
    std::string tmono;
    detail::append_power(tmono, "t0", t_degree_ - i);
    detail::append_power(tmono, "t1", i);
    for (const auto& [e, c] : coeffs_[i].terms()) {
      std::string mono = tmono;
      std::string x = x_monomial_str(e);
      if (!x.empty()) mono += (mono.empty() ? "" : "*") + x;
      terms.emplace_back(std::move(mono), c);
    }
  }
  return detail::render_terms(terms);
}

std::array<TForm, 3> cross(const std::array<TForm, 3>& a, const std::array<TForm, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace mocurve
