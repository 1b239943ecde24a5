#ifndef MOCURVE_SRC_ECHELON_HPP
#define MOCURVE_SRC_ECHELON_HPP

// Row-echelon engines shared by linalg, syzygy and rees. Rows are kept
// sorted by pivot column, so reducing a vector is a single forward sweep.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "mocurve/scalar.hpp"

namespace mocurve::detail {

/// Prime known at compile time; P < 2^32 so products fit in 64 bits.
template <std::uint64_t P>
struct FixedPrime {
  static_assert(P < (1ULL << 32));
  std::uint64_t p() const noexcept { return P; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % P; }
};

struct DynPrime {
  std::uint64_t modulus;
  std::uint64_t p() const noexcept { return modulus; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return modp::mul(a, b, modulus); }
};

using FastPrime = FixedPrime<2147483647ULL>;

using ModRow = std::vector<std::uint64_t>;

template <class Mod>
class ModEchelon {
 public:
  ModEchelon(Mod mod, int cols) : mod_(mod), cols_(cols) {}

  int cols() const noexcept { return cols_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<ModRow>& rows() const noexcept { return rows_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  /// Reduces v in place against the basis; returns the first nonzero column or -1.
  int reduce(ModRow& v) const {
    const std::uint64_t p = mod_.p();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int c = pivots_[k];
      const std::uint64_t f = v[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      const ModRow& row = rows_[k];
      for (int j = c; j < cols_; ++j) {
        if (row[j] != 0) v[j] = (v[j] + mod_.mul(neg, row[j])) % p;
      }
    }
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) return j;
    return -1;
  }

  /// Adds v to the span; returns false if it was already in it.
  bool insert(ModRow v) {
    const int c = reduce(v);
    if (c < 0) return false;
    const std::uint64_t inv = modp::inv(v[c], mod_.p());
    for (int j = c; j < cols_; ++j)
      if (v[j] != 0) v[j] = mod_.mul(v[j], inv);
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    auto pos = it - pivots_.begin();
    pivots_.insert(it, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  /// Clears entries above each pivot (reduced row-echelon form).
  void make_reduced() {
    const std::uint64_t p = mod_.p();
    for (std::size_t k = rows_.size(); k-- > 0;) {
      const int c = pivots_[k];
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t f = rows_[i][c];
        if (f == 0) continue;
        const std::uint64_t neg = p - f;
        for (int j = c; j < cols_; ++j)
          if (rows_[k][j] != 0) rows_[i][j] = (rows_[i][j] + mod_.mul(neg, rows_[k][j])) % p;
      }
    }
  }

  /// Basis of {x : row . x = 0 for all rows}; requires make_reduced().
  std::vector<ModRow> kernel() const {
    const std::uint64_t p = mod_.p();
    std::vector<char> is_pivot(static_cast<std::size_t>(cols_), 0);
    for (int c : pivots_) is_pivot[c] = 1;
    std::vector<ModRow> out;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      ModRow v(static_cast<std::size_t>(cols_), 0);
      v[f] = 1;
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint64_t x = rows_[k][f];
        if (x != 0) v[pivots_[k]] = p - x;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  Mod mod_;
  int cols_;
  std::vector<ModRow> rows_;
  std::vector<int> pivots_;
};

using IntRow = std::vector<mpz_class>;

/// Divides a row by the gcd of its entries and makes the first nonzero entry positive.
inline void make_primitive(IntRow& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) return;
  int sign = 0;
  for (const auto& x : v)
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  if (sign < 0) g = -g;
  if (g == 1) return;
  for (auto& x : v)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Clears denominators of a rational row.
inline IntRow to_int_row(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out[i] = v[i].get_num() * (l / v[i].get_den());
  }
  return out;
}

/// Fraction-free echelon form over the integers with primitive rows. Spans
/// over Q are what matter; every row is kept primitive to bound growth.
class IntEchelon {
 public:
  explicit IntEchelon(int cols) : cols_(cols) {}

  int cols() const noexcept { return cols_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<IntRow>& rows() const noexcept { return rows_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  int reduce(IntRow& v) const {
    mpz_class g, a, b, tmp;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int c = pivots_[k];
      if (v[c] == 0) continue;
      const IntRow& row = rows_[k];
      mpz_gcd(g.get_mpz_t(), row[c].get_mpz_t(), v[c].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), v[c].get_mpz_t(), g.get_mpz_t());
      // v = a * v - b * row
      for (int j = 0; j < cols_; ++j) {
        if (j >= c && row[j] != 0) {
          mpz_mul(tmp.get_mpz_t(), b.get_mpz_t(), row[j].get_mpz_t());
          if (a != 1) mpz_mul(v[j].get_mpz_t(), v[j].get_mpz_t(), a.get_mpz_t());
          mpz_sub(v[j].get_mpz_t(), v[j].get_mpz_t(), tmp.get_mpz_t());
        } else if (a != 1 && v[j] != 0) {
          mpz_mul(v[j].get_mpz_t(), v[j].get_mpz_t(), a.get_mpz_t());
        }
      }
      make_primitive(v);
    }
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) return j;
    return -1;
  }

  bool insert(IntRow v) {
    const int c = reduce(v);
    if (c < 0) return false;
    make_primitive(v);
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    auto pos = it - pivots_.begin();
    pivots_.insert(it, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  void make_reduced() {
    mpz_class g, a, b, tmp;
    for (std::size_t k = rows_.size(); k-- > 0;) {
      const int c = pivots_[k];
      const IntRow& piv = rows_[k];
      for (std::size_t i = 0; i < k; ++i) {
        IntRow& row = rows_[i];
        if (row[c] == 0) continue;
        mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), row[c].get_mpz_t());
        mpz_divexact(a.get_mpz_t(), piv[c].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
        for (int j = 0; j < cols_; ++j) {
          if (a != 1 && row[j] != 0) mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), a.get_mpz_t());
          if (j >= c && piv[j] != 0) {
            mpz_mul(tmp.get_mpz_t(), b.get_mpz_t(), piv[j].get_mpz_t());
            mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), tmp.get_mpz_t());
          }
        }
        make_primitive(row);
      }
    }
  }

  /// Rows scaled so that each pivot is 1.
  std::vector<std::vector<mpq_class>> rational_rows() const {
    std::vector<std::vector<mpq_class>> out;
    out.reserve(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const mpz_class& piv = rows_[k][pivots_[k]];
      std::vector<mpq_class> r(static_cast<std::size_t>(cols_));
      for (int j = 0; j < cols_; ++j) {
        if (rows_[k][j] == 0) continue;
        r[j] = mpq_class(rows_[k][j], piv);
        r[j].canonicalize();
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  /// Integer kernel basis, one vector per free column; requires make_reduced().
  std::vector<IntRow> kernel() const {
    std::vector<char> is_pivot(static_cast<std::size_t>(cols_), 0);
    for (int c : pivots_) is_pivot[c] = 1;
    mpz_class l = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rows_[k][pivots_[k]].get_mpz_t());
    std::vector<IntRow> out;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      IntRow v(static_cast<std::size_t>(cols_));
      v[f] = l;
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        const IntRow& row = rows_[k];
        if (row[f] == 0) continue;
        v[pivots_[k]] = -(row[f] * (l / row[pivots_[k]]));
      }
      make_primitive(v);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  int cols_;
  std::vector<IntRow> rows_;
  std::vector<int> pivots_;
};

}  // namespace mocurve::detail

#endif  // MOCURVE_SRC_ECHELON_HPP
