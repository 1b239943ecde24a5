#ifndef MOCURVE_TESTS_CORPUS_HPP
#define MOCURVE_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "mocurve/parametrization.hpp"

namespace corpus {

using mocurve::Parametrization;

Parametrization make(const char* u0, const char* u1, const char* u2);

/// (t0^2 + t1^2, t0^2 - t1^2, 2 t0 t1)
Parametrization circle();
/// (t0^3 + t1^3, 3 t0^2 t1, 3 t0 t1^2)
Parametrization folium();
/// Quartic with a triple point at (1 : 0 : 0).
Parametrization triple_point_quartic();
/// Quartic with three nodes.
Parametrization trinodal_quartic();
/// The circle composed with t -> t^2; tracing index 2.
Parametrization doubled_circle();
/// The circle composed with t -> t^3; tracing index 3.
Parametrization tripled_circle();
/// (t0, t1, t1); image is the line X1 = X2.
Parametrization line();

/// Degree-10 parametrizations given by two fixed mu-bases with
/// mu = 3 and a point of multiplicity 7.
Parametrization mu3_first();
Parametrization mu3_second();

struct Entry {
  std::string name;
  Parametrization phi;
};

/// 25 parametrizations of degree at most 6: the named curves above (except
/// the degree-10 pair) plus seeded random members with prescribed and
/// generic mu.
const std::vector<Entry>& all();

}  // namespace corpus

#endif  // MOCURVE_TESTS_CORPUS_HPP
