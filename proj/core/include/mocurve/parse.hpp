#ifndef MOCURVE_PARSE_HPP
#define MOCURVE_PARSE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "mocurve/biform.hpp"
#include "mocurve/tform.hpp"
#include "mocurve/xform.hpp"

namespace mocurve {

/// Syntax and homogeneity failures carry the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Grammar, whitespace ignored:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' | '/') factor)*      '/' only by a nonzero constant
//   factor := primary ('^' nat)*
//   primary:= integer | variable | '(' expr ')'
// Implicit multiplication ("2t0") is a syntax error.

/// Parses a form in t0, t1. A zero polynomial takes zero_degree (default 0).
TForm parse_tform(std::string_view text, std::optional<int> zero_degree = std::nullopt);
/// Parses a form in X0, X1, X2.
XForm parse_xform(std::string_view text, std::optional<int> zero_degree = std::nullopt);
/// Parses a bihomogeneous form in t0, t1, X0, X1, X2.
BiForm parse_biform(std::string_view text);
/// Parses a univariate polynomial in t (affine input).
UPoly parse_upoly(std::string_view text);

}  // namespace mocurve

#endif  // MOCURVE_PARSE_HPP
