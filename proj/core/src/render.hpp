#ifndef MOCURVE_SRC_RENDER_HPP
#define MOCURVE_SRC_RENDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "mocurve/scalar.hpp"

namespace mocurve::detail {

/// Appends "base^e" (or "base" when e == 1) to a '*'-joined monomial.
inline void append_power(std::string& out, const std::string& base, int e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += base;
  if (e != 1) out += '^' + std::to_string(e);
}

/// Joins (monomial, coefficient) pairs as "c*m + m - c*m". An empty monomial
/// string denotes the constant monomial.
inline std::string render_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    bool negative = c.is_rational() && c.sign() < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + '*' + mono;
    }
  }
  return out;
}

}  // namespace mocurve::detail

#endif  // MOCURVE_SRC_RENDER_HPP
