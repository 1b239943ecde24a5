#ifndef MOCURVE_SCALAR_HPP
#define MOCURVE_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "mocurve/error.hpp"

namespace mocurve {

/// Describes which field scalars live in: the rationals (modulus 0) or F_p.
struct FieldSpec {
  std::uint64_t modulus = 0;

  bool is_rational() const noexcept { return modulus == 0; }
  static FieldSpec rational() noexcept { return {}; }
  /// Validates p: odd prime below 2^62. Characteristic 2 is rejected.
  static FieldSpec prime(std::uint64_t p);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Parses "rational" or "prime:P".
FieldSpec parse_field(std::string_view text);
std::string to_string(const FieldSpec& field);

bool is_prime(std::uint64_t n) noexcept;

/// Exact field element.
///
/// Either a GMP rational kept in lowest terms, or a residue in [0, p). Mixing
/// a rational with a residue maps the rational into F_p, which lets integer
/// literals in algorithms combine with residues of any prime. Mixing residues
/// of two different primes throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : rep_(mpq_class(value)) {}
  Scalar(long value) : rep_(mpq_class(value)) {}
  explicit Scalar(mpz_class value) : rep_(mpq_class(std::move(value))) {}
  explicit Scalar(mpq_class value);

  static Scalar residue(std::int64_t value, std::uint64_t p);
  static Scalar residue_u(std::uint64_t value, std::uint64_t p);
  /// Parses an integer or "num/den".
  static Scalar parse(std::string_view text);

  /// Maps this value into the given field.
  Scalar in(const FieldSpec& field) const;

  bool is_rational() const noexcept { return rep_.index() == 0; }
  std::uint64_t modulus() const noexcept;
  FieldSpec field() const noexcept { return {modulus()}; }

  const mpq_class& rational() const;
  std::uint64_t residue_value() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Sign of a rational; residues report 0 for zero and 1 otherwise.
  int sign() const noexcept;
  bool is_integer() const noexcept;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "3", "-1/2"; residues print their representative in [0, p).
  std::string str() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };
  using Rep = std::variant<mpq_class, Residue>;

  explicit Scalar(Residue r) : rep_(r) {}
  static Residue to_residue(const mpq_class& q, std::uint64_t p);
  template <class Op>
  Scalar& combine(const Scalar& rhs, Op op);

  Rep rep_{mpq_class(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar pow(Scalar base, unsigned exponent);

namespace modp {
__extension__ using u128 = unsigned __int128;
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p);
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }
/// Image of an integer in [0, p).
std::uint64_t reduce(const mpz_class& z, std::uint64_t p);
}  // namespace modp

}  // namespace mocurve

#endif  // MOCURVE_SCALAR_HPP
