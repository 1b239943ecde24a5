#ifndef MOCURVE_RANDOM_HPP
#define MOCURVE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "mocurve/parametrization.hpp"

namespace mocurve {

/// Seeded source for test corpora, benchmarks and surveys. Draws are reduced
/// with a plain modulus so sequences do not depend on the standard library's
/// distribution implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Form with integer coefficients in [-bound, bound].
  TForm tform(int degree, int bound, const FieldSpec& field = {});

  /// Three random forms of degree d, redrawn until they are coprime.
  Parametrization parametrization(int d, int bound, const FieldSpec& field = {});
  /// Cross product of random moving lines of degrees mu and d - mu, redrawn
  /// until the result is a valid parametrization whose mu is exactly mu.
  Parametrization parametrization_with_mu(int d, int mu, int bound, const FieldSpec& field = {});
  /// (h a, h b, c) with deg h = d - 2 and deg a = deg b = 2, redrawn until it
  /// is valid, proper and has mu = 2. The image has a point of multiplicity
  /// d - 2 at (0 : 0 : 1).
  Parametrization parametrization_with_multiple_point(int d, int bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mocurve

#endif  // MOCURVE_RANDOM_HPP
