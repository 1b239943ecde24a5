#include <gtest/gtest.h>

#include "corpus.hpp"
#include "printers.hpp"
#include "mocurve/elimmat.hpp"
#include "mocurve/implicit.hpp"
#include "mocurve/parse.hpp"
#include "mocurve/random.hpp"
#include "oracle.hpp"

using namespace mocurve;

namespace {

XForm X(const char* s) { return parse_xform(s); }

PolyMatrix matrix_of(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<XForm>> out;
  for (auto& r : rows) {
    int deg = 0;
    for (auto* s : r)
      if (!X(s).is_zero()) deg = X(s).degree();
    out.emplace_back();
    for (auto* s : r) out.back().push_back(parse_xform(s, deg));
  }
  return PolyMatrix(out);
}

/// Binary form with constant X-coefficients (X-degree 0).
BiForm scalar_biform(const TForm& f) { return BiForm::from_tform(f); }

BiForm random_biform(Random& rng, int t, int x) {
  BiForm out(t, x);
  auto monos = x_monomials(x);
  for (int i = 0; i <= t; ++i) {
    XForm c(x);
    for (const auto& e : monos) c.add_term(e, Scalar(static_cast<long>(rng.integer(-3, 3))));
    out.set_coeff(i, c);
  }
  return out;
}

}  // namespace

TEST(Sylvester, CircleGolden) {
  BiForm f = parse_biform("X2*t0^2 - 2*X0*t0*t1 + X2*t1^2");
  BiForm g = parse_biform("X2*t0^2 - 2*X1*t0*t1 - X2*t1^2");
  PolyMatrix expected = matrix_of({{"X2", "-2*X0", "X2", "0"},
                                   {"0", "X2", "-2*X0", "X2"},
                                   {"X2", "-2*X1", "-X2", "0"},
                                   {"0", "X2", "-2*X1", "-X2"}});
  PolyMatrix S = sylvester_matrix(f, g);
  ASSERT_EQ(S.rows(), 4);
  EXPECT_EQ(S, expected);
  EXPECT_EQ(determinant(S), X("-4*X2^2") * X("X0^2 - X1^2 - X2^2"));
}

TEST(Sylvester, LinearPair) {
  BiForm f = parse_biform("t0*X2 - t1*(X0 + X1)");
  BiForm g = parse_biform("t0*(-X0 + X1) + t1*X2");
  PolyMatrix S = sylvester_matrix(f, g);
  ASSERT_EQ(S.rows(), 2);
  EXPECT_EQ(S.at(0, 0), X("X2"));
  EXPECT_EQ(S.at(0, 1), X("-X0 - X1"));
  EXPECT_EQ(S.at(1, 0), X("-X0 + X1"));
  EXPECT_EQ(S.at(1, 1), X("X2"));
  EXPECT_EQ(determinant(S), X("X1^2 + X2^2 - X0^2"));
}

TEST(Sylvester, EqualInputs) {
  BiForm f = parse_biform("t0*X0 + t1*X2");
  PolyMatrix S = sylvester_matrix(f, f);
  EXPECT_EQ(S.at(0, 0), S.at(1, 0));
  EXPECT_EQ(S.at(0, 1), S.at(1, 1));
  EXPECT_TRUE(determinant(S).is_zero());
}

TEST(Sylvester, Errors) {
  EXPECT_THROW(sylvester_matrix(BiForm(2, 1), parse_biform("t0*X0")), Error);
}

TEST(Bezout, CircleAgainstCayleyOracle) {
  auto [f, g] = fiber_lines(corpus::circle());
  PolyMatrix B = bezout_matrix(f, g);
  auto C = oracle::cayley_bezout(f, g);
  ASSERT_EQ(B.rows(), 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(B.at(i, j), C[i][j]);
  XForm det = determinant(B);
  Scalar c;
  EXPECT_TRUE(proportional(det, X("X2^2") * X("X0^2 - X1^2 - X2^2"), &c));
  EXPECT_FALSE(c.is_zero());
}

TEST(Bezout, EqualInputsGiveZero) {
  BiForm f = parse_biform("t0^2*X0 + t0*t1*X1 - t1^2*X2");
  PolyMatrix B = bezout_matrix(f, f);
  for (const auto& row : B.entries())
    for (const auto& e : row) EXPECT_TRUE(e.is_zero());
}

TEST(Bezout, CoprimeLinearForms) {
  PolyMatrix B = bezout_matrix(scalar_biform(parse_tform("t0")), scalar_biform(parse_tform("t1")));
  ASSERT_EQ(B.rows(), 1);
  EXPECT_EQ(B.at(0, 0).str(), "1");
}

TEST(Bezout, AgainstOracleOnRandomPairs) {
  Random rng(5);
  for (int m = 1; m <= 4; ++m) {
    BiForm f = random_biform(rng, m, 1);
    BiForm g = random_biform(rng, m, 1);
    auto C = oracle::cayley_bezout(f, g);
    PolyMatrix B = bezout_matrix(f, g);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) EXPECT_EQ(B.at(i, j), C[i][j]);
  }
}

TEST(Determinant, Goldens) {
  EXPECT_EQ(determinant(matrix_of({{"X0", "0"}, {"0", "X0"}})), X("X0^2"));
  EXPECT_EQ(determinant(matrix_of({{"X2", "X1"}, {"X1^3 + X0*X2^2", "X2^3"}})), X("X2^4 - X1^4 - X0*X1*X2^2"));
  EXPECT_EQ(determinant(matrix_of({{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "10"}})).str(), "-3");
  EXPECT_THROW(determinant(PolyMatrix(2, 3)), Error);
}

TEST(Determinant, BareissCofactorLeibniz) {
  Random rng(11);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<std::vector<XForm>> e(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        // row i has X-degree 1 + (i % 2) so degrees stay consistent per row
        for (int j = 0; j < n; ++j) {
          XForm c(1 + i % 2);
          for (const auto& m : x_monomials(1 + i % 2))
            if (rng.integer(0, 2) == 0) c.add_term(m, Scalar(static_cast<long>(rng.integer(-4, 4))));
          e[i].push_back(c);
        }
      }
      PolyMatrix M(e);
      XForm leib = oracle::leibniz_det(e);
      EXPECT_EQ(bareiss_determinant(M), leib) << M.str();
      EXPECT_EQ(cofactor_determinant(M), leib);
      EXPECT_EQ(determinant(M), leib);
    }
  }
}

TEST(Determinant, BareissNeedsRowSwap) {
  PolyMatrix M = matrix_of({{"0", "X0", "X1"}, {"X1", "0", "X2"}, {"X2", "X1", "0"}});
  EXPECT_EQ(bareiss_determinant(M), cofactor_determinant(M));
  PolyMatrix Z = matrix_of({{"X0", "X1"}, {"2*X0", "2*X1"}});
  EXPECT_TRUE(bareiss_determinant(Z).is_zero());
}

TEST(ResultantProperty, SwapSign) {
  Random rng(21);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      BiForm f = random_biform(rng, m, 1);
      BiForm g = random_biform(rng, n, 1);
      XForm a = determinant(sylvester_matrix(f, g));
      XForm b = determinant(sylvester_matrix(g, f));
      EXPECT_EQ(a, (m * n) % 2 ? -b : b);
    }
}

TEST(ResultantProperty, Multiplicativity) {
  Random rng(22);
  for (int rep = 0; rep < 6; ++rep) {
    auto draw = [&](int deg) {
      TForm t = rng.tform(deg, 4);
      while (t.is_zero()) t = rng.tform(deg, 4);
      return t;
    };
    TForm f = draw(1 + rep % 3);
    TForm h = draw(1 + (rep + 1) % 2);
    TForm g = draw(1 + rep % 2);
    auto R = [](const TForm& a, const TForm& b) {
      return determinant(sylvester_matrix(scalar_biform(a), scalar_biform(b)));
    };
    EXPECT_EQ(R(f * h, g), R(f, g) * R(h, g));
  }
}

TEST(ResultantProperty, SylvesterAgainstScalarOracle) {
  Random rng(23);
  for (int rep = 0; rep < 5; ++rep) {
    BiForm f = random_biform(rng, 2 + rep % 2, 1);
    BiForm g = random_biform(rng, 2, 1);
    XForm R = determinant(sylvester_matrix(f, g));
    std::array<Scalar, 3> pt{Scalar(2), Scalar(-3), Scalar(5)};
    EXPECT_EQ(R.evaluate(pt), oracle::resultant_at(f, g, pt));
  }
}

TEST(ResultantProperty, BezoutMatchesSylvesterUpToSign) {
  Random rng(24);
  for (int m = 1; m <= 4; ++m) {
    BiForm f = random_biform(rng, m, 1);
    BiForm g = random_biform(rng, m, 1);
    XForm s = determinant(sylvester_matrix(f, g));
    XForm b = determinant(bezout_matrix(f, g));
    EXPECT_TRUE(s == b || s == -b) << m;
  }
}
