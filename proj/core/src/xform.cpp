#include "mocurve/xform.hpp"

#include "render.hpp"

namespace mocurve {

std::vector<XExp> x_monomials(int degree) {
  std::vector<XExp> out;
  out.reserve(static_cast<std::size_t>(x_monomial_count(degree)));
  for (int a0 = degree; a0 >= 0; --a0)
    for (int a1 = degree - a0; a1 >= 0; --a1) out.push_back({a0, a1, degree - a0 - a1});
  return out;
}

int x_monomial_index(const XExp& e) noexcept {
  int nu = e[0] + e[1] + e[2];
  int rest = nu - e[0];
  return rest * (rest + 1) / 2 + (rest - e[1]);
}

std::string x_monomial_str(const XExp& e) {
  std::string mono;
  detail::append_power(mono, "X0", e[0]);
  detail::append_power(mono, "X1", e[1]);
  detail::append_power(mono, "X2", e[2]);
  return mono;
}

XForm::XForm(int degree) : degree_(degree) {
  if (degree < 0) throw Error(ErrorCode::DegreeMismatch, "negative X-degree");
}

XForm XForm::constant(Scalar c) { return monomial({0, 0, 0}, std::move(c)); }

XForm XForm::variable(int j) {
  XExp e{0, 0, 0};
  e.at(static_cast<std::size_t>(j)) = 1;
  return monomial(e);
}

XForm XForm::monomial(const XExp& e, Scalar c) {
  XForm f(e[0] + e[1] + e[2]);
  f.add_term(e, c);
  return f;
}

Scalar XForm::coeff(const XExp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void XForm::add_term(const XExp& e, const Scalar& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
    throw Error(ErrorCode::DegreeMismatch, "term " + x_monomial_str(e) + " does not have degree " +
                                               std::to_string(degree_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const XExp& XForm::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "zero form has no leading term");
  return terms_.begin()->first;
}

const Scalar& XForm::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "zero form has no leading term");
  return terms_.begin()->second;
}

FieldSpec XForm::field() const noexcept {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return c.field();
  return {};
}

XForm XForm::in(const FieldSpec& field) const {
  XForm r(degree_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.in(field));
  return r;
}

XForm& XForm::operator+=(const XForm& rhs) {
  if (degree_ != rhs.degree_)
    throw Error(ErrorCode::DegreeMismatch,
                "cannot add X-forms of degrees " + std::to_string(degree_) + " and " + std::to_string(rhs.degree_));
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

XForm& XForm::operator-=(const XForm& rhs) {
  if (degree_ != rhs.degree_)
    throw Error(ErrorCode::DegreeMismatch, "cannot subtract X-forms of degrees " + std::to_string(degree_) +
                                               " and " + std::to_string(rhs.degree_));
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

XForm& XForm::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

XForm XForm::operator-() const {
  XForm r = *this;
  for (auto& [e, x] : r.terms_) x = -x;
  return r;
}

XForm operator*(const XForm& a, const XForm& b) {
  XForm r(a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

bool operator==(const XForm& a, const XForm& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

XForm XForm::derivative(int var) const {
  XForm r(degree_ == 0 ? 0 : degree_ - 1);
  for (const auto& [e, c] : terms_) {
    int k = e.at(static_cast<std::size_t>(var));
    if (k == 0) continue;
    XExp f = e;
    f[static_cast<std::size_t>(var)] -= 1;
    r.add_term(f, c * Scalar(k));
  }
  return r;
}

XForm XForm::pow(unsigned k) const {
  XForm result = XForm::constant(Scalar(1)).in(field());
  XForm base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Scalar XForm::evaluate(const std::array<Scalar, 3>& x) const {
  Scalar acc(0);
  for (const auto& [e, c] : terms_)
    acc += c * mocurve::pow(x[0], static_cast<unsigned>(e[0])) * mocurve::pow(x[1], static_cast<unsigned>(e[1])) *
           mocurve::pow(x[2], static_cast<unsigned>(e[2]));
  return acc;
}

TForm XForm::substitute(const std::array<TForm, 3>& u) const {
  int d = u[0].degree();
  if (u[1].degree() != d || u[2].degree() != d)
    throw Error(ErrorCode::DegreeMismatch, "substitution needs forms of one degree");
  std::array<std::vector<TForm>, 3> powers;
  for (std::size_t j = 0; j < 3; ++j) {
    powers[j].push_back(TForm::constant(Scalar(1)));
    for (int k = 1; k <= degree_; ++k) powers[j].push_back(powers[j].back() * u[j]);
  }
  TForm acc(degree_ * d);
  for (const auto& [e, c] : terms_) acc += c * (powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]);
  return acc;
}

std::pair<Scalar, XForm> XForm::split_content() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInput, "zero form has no content");
  const Scalar& lc = leading_coeff();
  if (!lc.is_rational()) {
    return {lc, *this * lc.inverse()};
  }
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class scaled = c.rational().get_num() * (den_lcm / c.rational().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  if (lc.sign() < 0) content = -content;
  Scalar c(content);
  return {c, *this * c.inverse()};
}

XForm XForm::canonical() const {
  if (is_zero()) return *this;
  return split_content().second;
}

std::string XForm::str() const {
  std::vector<std::pair<std::string, Scalar>> terms;
  terms.reserve(terms_.size());
  for (const auto& [e, c] : terms_) terms.emplace_back(x_monomial_str(e), c);
  return detail::render_terms(terms);
}

bool proportional(const XForm& a, const XForm& b, Scalar* ratio) {
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree() || a.size() != b.size()) return false;
  Scalar r = a.leading_coeff() / b.leading_coeff();
  if (a != b * r) return false;
  if (ratio != nullptr) *ratio = r;
  return true;
}

}  // namespace mocurve
