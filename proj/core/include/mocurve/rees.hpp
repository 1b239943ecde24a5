#ifndef MOCURVE_REES_HPP
#define MOCURVE_REES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mocurve/biform.hpp"
#include "mocurve/parametrization.hpp"
#include "mocurve/syzygy.hpp"

namespace mocurve {

struct ReesOptions {
  /// Box (t_max, x_max); negative means d.
  int t_max = -1;
  int x_max = -1;
  /// Rank computations modulo 2^31 - 1, accepted only when they certify the
  /// rational answer; everything else falls back to exact integer elimination.
  bool modular = true;
  /// Skip bidegrees where the moving curves of fixed X-degree need no new
  /// generator as a module over K[t0, t1].
  bool prune = true;
  /// Rescan a box two larger in each direction to look for generators
  /// outside the requested box.
  bool widen = false;
  int jobs = 1;
};

/// Minimal generators of the moving-curve ideal inside a bidegree box.
struct BettiProfile {
  int d = 0;
  int mu = 0;
  /// Degree of the implicit equation.
  int D = 0;
  Bidegree box;
  /// Multiplicity of each generator bidegree.
  std::map<Bidegree, int> betti;
  /// dim K at every bidegree of the box.
  std::map<Bidegree, int> dims;
  /// One representative per generator, in scan order.
  std::vector<MovingCurve> generators;
  int n0 = 0;
  /// False only when a widened rescan found nothing beyond the box.
  bool truncated = true;
  /// Generators found by the widened rescan outside the box.
  std::map<Bidegree, int> beyond;

  /// Bidegrees with repetition, sorted.
  std::vector<Bidegree> multiset() const;
};

/// Dimension of the moving curves of bidegree (t_degree, x_degree).
int kernel_dimension(const Parametrization& phi, int t_degree, int x_degree);

/// Counts minimal generators bidegree by bidegree in order of t + x, then t:
/// the count at (t, x) is dim K(t, x) minus the dimension of
/// t0 K(t-1, x) + t1 K(t-1, x) + X0 K(t, x-1) + X1 K(t, x-1) + X2 K(t, x-1).
/// Throws BoxTooSmall when the box misses (0, D) or (d - mu, 1).
BettiProfile minimal_generators(const Parametrization& phi, const ReesOptions& options = {});

/// Renders a multiset as "{(3,1), (7,1), ...}".
std::string multiset_str(const std::vector<Bidegree>& b);

struct SurveyOptions {
  int d = 4;
  int count = 10;
  std::uint64_t seed = 1;
  /// Only keep parametrizations with this mu.
  std::optional<int> mu;
  int coeff_bound = 5;
  int jobs = 1;
};

struct SurveySample {
  Parametrization phi;
  int mu = 0;
  BettiProfile profile;
};

struct SurveyRow {
  int mu = 0;
  int n0 = 0;
  std::vector<Bidegree> betti;
  int count = 0;
};

struct SurveyReport {
  SurveyOptions options;
  std::vector<SurveySample> samples;
  /// Distinct (mu, B) with frequencies, sorted by mu then B.
  std::vector<SurveyRow> table;
  int rejected_common_factor = 0;
  int rejected_improper = 0;
  int rejected_mu = 0;
  /// Observations that run against the expectation that samples with
  /// mu = floor(d/2) share one n0 and that it is maximal. Data, not verdicts.
  std::vector<std::string> flags;
};

/// Random proper parametrizations of degree d and their Betti profiles.
/// Deterministic for a fixed seed. Requires 1 <= d <= 12 and count >= 1.
SurveyReport survey(const SurveyOptions& options);

}  // namespace mocurve

#endif  // MOCURVE_REES_HPP
