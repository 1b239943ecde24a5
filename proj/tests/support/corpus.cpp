#include "corpus.hpp"

#include "mocurve/parse.hpp"
#include "mocurve/random.hpp"

namespace corpus {

using mocurve::parse_tform;
using mocurve::TForm;

Parametrization make(const char* u0, const char* u1, const char* u2) {
  return Parametrization(parse_tform(u0), parse_tform(u1), parse_tform(u2));
}

Parametrization circle() { return make("t0^2 + t1^2", "t0^2 - t1^2", "2*t0*t1"); }
Parametrization folium() { return make("t0^3 + t1^3", "3*t0^2*t1", "3*t0*t1^2"); }
Parametrization triple_point_quartic() { return make("t0^4 - t1^4", "-t0^2*t1^2", "t0*t1^3"); }
Parametrization trinodal_quartic() { return make("t0^4", "6*t0^2*t1^2 - 4*t1^4", "4*t0^3*t1 - 4*t0*t1^3"); }
Parametrization doubled_circle() { return make("t0^4 + t1^4", "t0^4 - t1^4", "2*t0^2*t1^2"); }
Parametrization tripled_circle() { return make("t0^6 + t1^6", "t0^6 - t1^6", "2*t0^3*t1^3"); }
Parametrization line() { return make("t0", "t1", "t1"); }

namespace {
Parametrization from_lines(const char* p0, const char* p1, const char* q0, const char* q1, const char* q2) {
  std::array<TForm, 3> p{parse_tform(p0), parse_tform(p1), TForm(3)};
  std::array<TForm, 3> q{parse_tform(q0), parse_tform(q1), parse_tform(q2)};
  return mocurve::from_cross_product(p, q);
}
}  // namespace

Parametrization mu3_first() {
  return from_lines("t0^3", "t1^3 - t0*t1^2", "t0^6*t1 - t0^2*t1^5", "t0^4*t1^3 + t0^2*t1^5", "t0^7 + t1^7");
}

Parametrization mu3_second() {
  return from_lines("t0^3 - t0^2*t1", "t1^3 + t0*t1^2 - t0^2*t1", "t0^6*t1 - t0^2*t1^5", "t0^4*t1^3 + t0^2*t1^5",
                    "t0^7 + t1^7");
}

const std::vector<Entry>& all() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> out{
        {"circle", circle()},
        {"folium", folium()},
        {"triple_point_quartic", triple_point_quartic()},
        {"trinodal_quartic", trinodal_quartic()},
        {"doubled_circle", doubled_circle()},
        {"tripled_circle", tripled_circle()},
        {"line", line()},
    };
    mocurve::Random rng(20240611);
    for (int d = 2; d <= 6; ++d)
      for (int k = 0; k < 2; ++k) out.push_back({"generic_d" + std::to_string(d) + "_" + std::to_string(k), rng.parametrization(d, 3)});
    const std::pair<int, int> shapes[] = {{3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {6, 1}, {6, 2}, {6, 3}};
    for (auto [d, m] : shapes)
      out.push_back({"mu" + std::to_string(m) + "_d" + std::to_string(d), rng.parametrization_with_mu(d, m, 3)});
    return out;
  }();
  return entries;
}

}  // namespace corpus
