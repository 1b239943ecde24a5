#include "mocurve/scalar.hpp"

#include <charconv>
#include <ostream>

namespace mocurve {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DEGREE-MISMATCH";
    case ErrorCode::FieldMismatch: return "FIELD-MISMATCH";
    case ErrorCode::InvalidField: return "INVALID-FIELD";
    case ErrorCode::DivisionByZero: return "DIVISION-BY-ZERO";
    case ErrorCode::ZeroInput: return "ZERO-INPUT";
    case ErrorCode::NotAPower: return "NOT-A-POWER";
    case ErrorCode::NotDivisible: return "NOT-DIVISIBLE";
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::NotHomogeneous: return "NOT-HOMOGENEOUS";
    case ErrorCode::CommonFactor: return "COMMON-FACTOR";
    case ErrorCode::DegenerateImage: return "DEGENERATE-IMAGE";
    case ErrorCode::RootFailure: return "ROOT-FAILURE";
    case ErrorCode::CrossProductFailure: return "CROSS-PRODUCT-FAILURE";
    case ErrorCode::NoDecomposition: return "NO-DECOMPOSITION";
    case ErrorCode::NonSquare: return "NON-SQUARE";
    case ErrorCode::ZeroDeterminant: return "ZERO-DETERMINANT";
    case ErrorCode::NotImplicit: return "NOT-IMPLICIT";
    case ErrorCode::Unstable: return "UNSTABLE";
    case ErrorCode::BoxTooSmall: return "BOX-TOO-SMALL";
    case ErrorCode::InvalidArgument: return "INVALID-ARGUMENT";
  }
  return "UNKNOWN";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CrossProductFailure:
    case ErrorCode::RootFailure:
    case ErrorCode::Unstable:
    case ErrorCode::NotImplicit:
      return false;
    default:
      return true;
  }
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = modp::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = modp::mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorCode::InvalidField, "characteristic 2 is not supported");
  if (p >= (1ULL << 62) || !is_prime(p))
    throw Error(ErrorCode::InvalidField, "modulus must be an odd prime below 2^62: " + std::to_string(p));
  return FieldSpec{p};
}

FieldSpec parse_field(std::string_view text) {
  if (text == "rational") return FieldSpec::rational();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorCode::InvalidField, "bad prime in field spec: " + std::string(text));
    return FieldSpec::prime(p);
  }
  throw Error(ErrorCode::InvalidField, "field must be 'rational' or 'prime:P', got " + std::string(text));
}

std::string to_string(const FieldSpec& field) {
  return field.is_rational() ? "rational" : "prime:" + std::to_string(field.modulus);
}

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  // mpz_fdiv_ui takes an unsigned long, which is 64-bit on the supported targets.
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace modp

Scalar::Scalar(mpq_class value) : rep_(std::move(value)) {
  std::get<0>(rep_).canonicalize();
}

Scalar Scalar::residue(std::int64_t value, std::uint64_t p) {
  std::int64_t m = value % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(m), p});
}

Scalar Scalar::residue_u(std::uint64_t value, std::uint64_t p) { return Scalar(Residue{value % p, p}); }

Scalar Scalar::parse(std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0 || text.empty())
    throw Error(ErrorCode::Syntax, "not a rational number: " + std::string(text));
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return Scalar(q);
}

Scalar::Residue Scalar::to_residue(const mpq_class& q, std::uint64_t p) {
  std::uint64_t den = modp::reduce(q.get_den(), p);
  if (den == 0)
    throw Error(ErrorCode::DivisionByZero, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  return {modp::mul(modp::reduce(q.get_num(), p), modp::inv(den, p), p), p};
}

Scalar Scalar::in(const FieldSpec& field) const {
  if (field.is_rational()) {
    if (!is_rational()) throw Error(ErrorCode::FieldMismatch, "cannot lift a residue to the rationals");
    return *this;
  }
  if (is_rational()) return Scalar(to_residue(std::get<0>(rep_), field.modulus));
  if (modulus() != field.modulus) throw Error(ErrorCode::FieldMismatch, "residues of different primes");
  return *this;
}

std::uint64_t Scalar::modulus() const noexcept {
  return is_rational() ? 0 : std::get<1>(rep_).p;
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw Error(ErrorCode::FieldMismatch, "scalar is a residue, not a rational");
  return std::get<0>(rep_);
}

std::uint64_t Scalar::residue_value() const {
  if (is_rational()) throw Error(ErrorCode::FieldMismatch, "scalar is rational, not a residue");
  return std::get<1>(rep_).value;
}

bool Scalar::is_zero() const noexcept {
  return is_rational() ? sgn(std::get<0>(rep_)) == 0 : std::get<1>(rep_).value == 0;
}

bool Scalar::is_one() const noexcept {
  return is_rational() ? std::get<0>(rep_) == 1 : std::get<1>(rep_).value == 1;
}

int Scalar::sign() const noexcept {
  if (is_rational()) return sgn(std::get<0>(rep_));
  return std::get<1>(rep_).value == 0 ? 0 : 1;
}

bool Scalar::is_integer() const noexcept {
  return !is_rational() || std::get<0>(rep_).get_den() == 1;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-std::get<0>(rep_)));
  const auto& r = std::get<1>(rep_);
  return Scalar(Residue{r.value == 0 ? 0 : r.p - r.value, r.p});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return Scalar(mpq_class(1 / std::get<0>(rep_)));
  const auto& r = std::get<1>(rep_);
  return Scalar(Residue{modp::inv(r.value, r.p), r.p});
}

template <class Op>
Scalar& Scalar::combine(const Scalar& rhs, Op op) {
  if (is_rational() && rhs.is_rational()) {
    rep_ = op(std::get<0>(rep_), std::get<0>(rhs.rep_));
    return *this;
  }
  std::uint64_t p = is_rational() ? rhs.modulus() : modulus();
  if (!rhs.is_rational() && rhs.modulus() != p)
    throw Error(ErrorCode::FieldMismatch, "residues of different primes");
  Residue a = is_rational() ? to_residue(std::get<0>(rep_), p) : std::get<1>(rep_);
  Residue b = rhs.is_rational() ? to_residue(std::get<0>(rhs.rep_), p) : std::get<1>(rhs.rep_);
  rep_ = Residue{op(a.value, b.value, p), p};
  return *this;
}

namespace {
struct AddOp {
  mpq_class operator()(const mpq_class& a, const mpq_class& b) const { return a + b; }
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b, std::uint64_t p) const { return modp::add(a, b, p); }
};
struct SubOp {
  mpq_class operator()(const mpq_class& a, const mpq_class& b) const { return a - b; }
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b, std::uint64_t p) const { return modp::sub(a, b, p); }
};
struct MulOp {
  mpq_class operator()(const mpq_class& a, const mpq_class& b) const { return a * b; }
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b, std::uint64_t p) const { return modp::mul(a, b, p); }
};
}  // namespace

Scalar& Scalar::operator+=(const Scalar& rhs) { return combine(rhs, AddOp{}); }
Scalar& Scalar::operator-=(const Scalar& rhs) { return combine(rhs, SubOp{}); }
Scalar& Scalar::operator*=(const Scalar& rhs) { return combine(rhs, MulOp{}); }
Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return std::get<0>(a.rep_) == std::get<0>(b.rep_);
  return (a - b).is_zero();
}

std::string Scalar::str() const {
  if (is_rational()) return std::get<0>(rep_).get_str();
  return std::to_string(std::get<1>(rep_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(Scalar base, unsigned exponent) {
  Scalar result(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace mocurve
