// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "corpus.hpp"
#include "mocurve/algebra.hpp"
#include "mocurve/elimmat.hpp"
#include "mocurve/implicit.hpp"
#include "mocurve/parse.hpp"
#include "mocurve/random.hpp"
#include "mocurve/rees.hpp"
#include "oracle.hpp"

using namespace mocurve;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) o.check(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!o.ok) ++failures;
  std::printf("[%s] %2d  %-44s %8.2f s%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  for (const auto& n : o.notes) std::printf("       note: %s\n", n.c_str());
  std::fflush(stdout);
}

XForm X(const char* s) { return parse_xform(s); }

bool span_contains(const std::vector<BiForm>& basis, const BiForm& L) {
  oracle::Matrix rows;
  for (const auto& b : basis) rows.push_back(to_coordinates(b));
  int r = oracle::rank(rows);
  rows.push_back(to_coordinates(L));
  return oracle::rank(rows) == r;
}

std::vector<Bidegree> sorted(std::vector<Bidegree> b) {
  std::sort(b.begin(), b.end());
  return b;
}

int run_cli(const std::vector<std::string>& args, std::string* err = nullptr) {
  std::istringstream in;
  std::ostringstream out, e;
  int code = cli::run(args, in, out, e);
  if (err) *err = e.str();
  return code;
}

}  // namespace

int main() {
  const auto circle = corpus::circle();

  criterion(1, "circle resultant golden", 1.0, [&](Outcome& o) {
    auto r = implicitize(circle, Method::Resultant);
    o.check(r.raw == X("-4*X2^2") * X("X0^2 - X1^2 - X2^2"), "raw = " + r.raw.str());
    o.check(r.alpha == 2, "alpha");
    o.check(r.beta == 1, "beta");
    o.check(r.F.str() == "X0^2 - X1^2 - X2^2", "F = " + r.F.str());
  });

  criterion(2, "Sylvester matrix golden", 1.0, [&](Outcome& o) {
    BiForm f = parse_biform("X2*t0^2 - 2*X0*t0*t1 + X2*t1^2");
    BiForm g = parse_biform("X2*t0^2 - 2*X1*t0*t1 - X2*t1^2");
    const char* reference[4][4] = {{"X2", "-2*X0", "X2", "0"},
                                 {"0", "X2", "-2*X0", "X2"},
                                 {"X2", "-2*X1", "-X2", "0"},
                                 {"0", "X2", "-2*X1", "-X2"}};
    PolyMatrix S = sylvester_matrix(f, g);
    o.check(S.rows() == 4 && S.cols() == 4, "shape");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        XForm want = X(reference[i][j]);
        bool same = want.is_zero() ? S.at(i, j).is_zero() : S.at(i, j) == want;
        o.check(same, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + S.at(i, j).str());
      }
  });

  criterion(3, "circle mu-basis", 1.0, [&](Outcome& o) {
    auto B = mu_basis(circle);
    o.check(B.mu == 1, "mu = " + std::to_string(B.mu));
    BiForm P = BiForm::moving_line(parse_tform("-t1"), parse_tform("-t1"), parse_tform("t0"));
    BiForm Q = BiForm::moving_line(parse_tform("-t0"), parse_tform("t0"), parse_tform("t1"));
    std::vector<BiForm> computed{B.P.L, B.Q.L};
    std::vector<BiForm> reference{P, Q};
    o.check(span_contains(computed, P) && span_contains(computed, Q), "computed pair misses reference pair");
    o.check(span_contains(reference, B.P.L) && span_contains(reference, B.Q.L), "reference pair misses computed pair");
    auto c = cross(P.line_coefficients(), Q.line_coefficients());
    for (int j = 0; j < 3; ++j) o.check(c[j] == circle.u(j) * Scalar(-1), "cross product component " + std::to_string(j));
  });

  criterion(4, "folium, three methods", 1.0, [&](Outcome& o) {
    XForm want = X("X1^3 + X2^3 - 3*X0*X1*X2").canonical();
    for (auto m : {Method::Resultant, Method::MuBasis, Method::MovingLines}) {
      auto r = implicitize(corpus::folium(), m);
      o.check(r.F == want, to_string(m) + " F = " + r.F.str());
      o.check(r.beta == 1, to_string(m) + " beta");
    }
  });

  criterion(5, "triple-point quartic, hybrid 2x2", 1.0, [&](Outcome& o) {
    auto phi = corpus::triple_point_quartic();
    XForm reference = X("X2^4 - X1^4 - X0*X1*X2^2");
    auto r = implicitize(phi, Method::MuBasis);
    o.check(r.F == reference.canonical(), "F = " + r.F.str());
    MovingCurve L11{parse_biform("t0*X2 + t1*X1"), phi.fingerprint()};
    MovingCurve L13{parse_biform("t0*(X1^3 + X0*X2^2) + t1*X2^3"), phi.fingerprint()};
    o.check(L11.follows(phi), "L11 does not follow");
    o.check(L13.follows(phi), "L13 does not follow");
    auto h = hybrid_det({L11, L13}, phi);
    o.check(h.det == reference, "det = " + h.det.str());
    o.check(h.implicit, "det not a multiple of F");
  });

  criterion(6, "trinodal quartic, moving conics", 1.0, [&](Outcome& o) {
    auto phi = corpus::trinodal_quartic();
    XForm reference = X("X2^4 + 4*X0*X1^3 + 2*X0*X1*X2^2 - 16*X0^2*X1^2 - 6*X0^2*X2^2 + 16*X0^3*X1");
    for (auto m : {Method::Resultant, Method::MuBasis, Method::MovingLines}) {
      auto r = implicitize(phi, m);
      o.check(r.F == reference.canonical(), to_string(m) + " F = " + r.F.str());
    }
    MovingCurve A{parse_biform("t0*(X1*X2 - X0*X2) + t1*(-X2^2 - 2*X0*X1 + 4*X0^2)"), phi.fingerprint()};
    MovingCurve B{parse_biform("t0*(X1^2 + 1/2*X2^2 - 2*X0*X1) + t1*(X0*X2 - X1*X2)"), phi.fingerprint()};
    o.check(A.follows(phi), "first conic does not follow");
    o.check(B.follows(phi), "second conic does not follow");
    auto h = hybrid_det({A, B}, phi);
    o.check(proportional(h.det, reference), "det = " + h.det.str());
  });

  criterion(7, "mu = 1 generator formula", 30.0, [&](Outcome& o) {
    Random rng(7001);
    for (int d = 4; d <= 6; ++d)
      for (int k = 0; k < 5; ++k) {
        auto phi = rng.parametrization_with_mu(d, 1, 5);
        auto p = minimal_generators(phi);
        std::vector<Bidegree> want{{0, d}, {1, 1}};
        for (int j = 1; j <= d - 1; ++j) want.push_back({j, d - j});
        want = sorted(want);
        o.check(p.multiset() == want, "d=" + std::to_string(d) + " got " + multiset_str(p.multiset()));
        o.check(p.n0 == d + 1, "d=" + std::to_string(d) + " n0=" + std::to_string(p.n0));
      }
  });

  criterion(8, "degree-10 mu = 3 pair, box (10,10)", 600.0, [&](Outcome& o) {
    const std::vector<Bidegree> first = sorted({{3, 1}, {7, 1}, {2, 3}, {2, 3}, {4, 2}, {2, 4}, {1, 6}, {1, 6}, {1, 6}, {0, 10}});
    const std::vector<Bidegree> second = sorted({{3, 1}, {7, 1}, {2, 3}, {2, 3}, {4, 2}, {2, 4}, {1, 5}, {1, 6}, {1, 6}, {0, 10}});
    ReesOptions box;
    box.t_max = 10;
    box.x_max = 10;
    auto a = minimal_generators(corpus::mu3_first(), box);
    auto b = minimal_generators(corpus::mu3_second(), box);
    o.check(a.multiset() == first, "first: " + multiset_str(a.multiset()));
    o.check(a.n0 == 10, "first n0=" + std::to_string(a.n0));
    o.check(b.multiset() == second, "second: " + multiset_str(b.multiset()) + " expected " + multiset_str(second));
    o.check(b.n0 == 10, "second n0=" + std::to_string(b.n0));
    o.notes.push_back("dim K(1,5) for the second input = " + std::to_string(kernel_dimension(corpus::mu3_second(), 1, 5)));
    // Same input with the signs of the last two X1 terms of P flipped.
    std::array<TForm, 3> p{parse_tform("t0^3 - t0^2*t1"), parse_tform("t1^3 - t0*t1^2 + t0^2*t1"), TForm(3)};
    std::array<TForm, 3> q{parse_tform("t0^6*t1 - t0^2*t1^5"), parse_tform("t0^4*t1^3 + t0^2*t1^5"), parse_tform("t0^7 + t1^7")};
    auto c = minimal_generators(from_cross_product(p, q), box);
    o.notes.push_back("with P = (t0^3 - t0^2 t1) X0 + (t1^3 - t0 t1^2 + t0^2 t1) X1 the second profile is " +
                      multiset_str(c.multiset()) + (c.multiset() == second ? " (matches expected)" : ""));
  });

  criterion(9, "property suites on 25-member corpus", 120.0, [&](Outcome& o) {
    const auto& all = corpus::all();
    o.check(all.size() == 25, "corpus size " + std::to_string(all.size()));
    Random rng(909);
    int matrices = 0;
    for (const auto& e : all) {
      const int d = e.phi.degree();
      const std::string tag = e.name + ": ";
      auto a = implicitize_resultant(e.phi);
      auto b = implicitize_mubasis(e.phi);
      auto ml = implicitize_moving_lines(e.phi);
      const auto& c = ml.result;
      o.check(a.F == b.F && a.F == c.F && a.beta == b.beta && a.beta == c.beta, tag + "methods disagree");
      o.check(a.alpha == d, tag + "alpha != d");
      o.check(a.beta * a.D == d, tag + "beta*D != d");
      o.check(a.F.substitute(e.phi.components()).is_zero(), tag + "F(u) != 0");
      auto B = mu_basis(e.phi);
      for (int delta = 0; delta <= d; ++delta) {
        int want = std::max(0, delta - B.mu + 1) + std::max(0, delta - (d - B.mu) + 1);
        o.check(moving_space_dimension(e.phi, delta, 1) == want, tag + "line dimension at " + std::to_string(delta));
      }
      for (int delta = d - B.mu; delta <= d; ++delta) {
        TForm p = rng.tform(delta - B.mu, 4);
        TForm q = rng.tform(delta - d + B.mu, 4);
        MovingCurve L{p * B.P.L + q * B.Q.L, e.phi.fingerprint()};
        auto [pp, qq] = decompose_moving_line(L, B);
        o.check(pp == p && qq == q, tag + "decompose round trip");
      }
      o.check(sylvester_bezout_check(e.phi).holds, tag + "Sylvester/Bezout");
      auto [f, g] = fiber_lines(e.phi);
      std::vector<PolyMatrix> mats{sylvester_matrix(f, g), ml.matrix, bezout_matrix(f, g)};
      auto P = B.P.L;
      auto Q = B.Q.L;
      if (P.t_degree() >= 1 && Q.t_degree() >= 1) mats.push_back(sylvester_matrix(P, Q));
      for (const auto& M : mats) {
        if (M.rows() > 4 || !M.is_square() || M.rows() == 0) continue;
        ++matrices;
        o.check(bareiss_determinant(M) == cofactor_determinant(M), tag + "Bareiss != cofactor");
      }
    }
    o.notes.push_back(std::to_string(matrices) + " matrices of size <= 4 compared");
  });

  criterion(10, "doubled circle power extraction", 1.0, [&](Outcome& o) {
    auto r = implicitize(corpus::doubled_circle(), Method::MuBasis);
    XForm F = X("X0^2 - X1^2 - X2^2");
    o.check(r.beta == 2, "beta = " + std::to_string(r.beta));
    o.check(proportional(r.raw, F.pow(2)), "raw not a square of F: " + r.raw.str());
    o.check(kth_root(r.raw, 2) == F, "root");
    o.check(r.F == F, "F = " + r.F.str());
  });

  criterion(11, "validation and error paths", 5.0, [&](Outcome& o) {
    std::string err;
    int code = run_cli({"validate", "--param", "t0^2 + t1^2", "t0^2 + t1^2", "0"}, &err);
    o.check(code == 2, "common factor exit " + std::to_string(code));
    o.check(err.find("COMMON-FACTOR") != std::string::npos, "common factor report: " + err);
    try {
      parse_tform("t0 + 1");
      o.check(false, "non-homogeneous accepted");
    } catch (const ParseError& e) {
      o.check(e.code() == ErrorCode::NotHomogeneous && e.position() == 5, "parse error position");
    }
    code = run_cli({"implicitize", "--param", "t0 + 1", "t0", "t1"}, &err);
    o.check(code == 2 && err.find("\"position\":5") != std::string::npos, "cli parse error: " + err);
    auto r = implicitize(corpus::doubled_circle(), Method::MuBasis);
    try {
      kth_root(r.raw, 3);
      o.check(false, "cube root of a square accepted");
    } catch (const Error& e) {
      o.check(e.code() == ErrorCode::NotAPower, "wrong code for cube root");
    }
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
