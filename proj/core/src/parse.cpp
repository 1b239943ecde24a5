#include "mocurve/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace mocurve {

namespace {

using Exponents = std::vector<int>;

struct Term {
  Scalar coeff;
  std::size_t position;
};

/// Sparse polynomial over a fixed variable list; remembers where each
/// monomial first appeared in the source text for error reporting.
struct Sparse {
  std::map<Exponents, Term> terms;

  void add(const Exponents& e, const Scalar& c, std::size_t pos) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(e, Term{c, pos});
    if (!inserted) {
      it->second.coeff += c;
      if (it->second.coeff.is_zero()) terms.erase(it);
    }
  }
};

constexpr int kMaxExponent = 512;

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars) : text_(text), vars_(std::move(vars)) {}

  Sparse parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(ErrorCode::Syntax, pos_, "empty expression");
    Sparse s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(ErrorCode::Syntax, pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Exponents zero() const { return Exponents(vars_.size(), 0); }

  Sparse constant(const Scalar& c, std::size_t pos) const {
    Sparse s;
    s.add(zero(), c, pos);
    return s;
  }

  static Sparse add(const Sparse& a, const Sparse& b, bool subtract) {
    Sparse r = a;
    for (const auto& [e, t] : b.terms) r.add(e, subtract ? -t.coeff : t.coeff, t.position);
    return r;
  }

  static Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse r;
    for (const auto& [ea, ta] : a.terms)
      for (const auto& [eb, tb] : b.terms) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add(e, ta.coeff * tb.coeff, std::min(ta.position, tb.position));
      }
    return r;
  }

  Sparse expr() {
    skip_ws();
    std::size_t start = pos_;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Sparse acc = term();
    if (negate) acc = add(constant(Scalar(0), start), acc, true);
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Sparse term() {
    Sparse acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, factor());
      } else if (accept('/')) {
        std::size_t at = pos_;
        Sparse den = factor();
        if (den.terms.size() != 1 || den.terms.begin()->first != zero())
          throw ParseError(ErrorCode::Syntax, at, "division is only allowed by a nonzero constant");
        acc = mul(acc, constant(den.terms.begin()->second.coeff.inverse(), at));
      } else {
        return acc;
      }
    }
  }

  Sparse factor() {
    Sparse base = primary();
    while (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      int e = natural();
      if (e > kMaxExponent) throw ParseError(ErrorCode::Syntax, at, "exponent too large");
      Sparse r = constant(Scalar(1), at);
      for (int k = 0; k < e; ++k) r = mul(r, base);
      base = std::move(r);
    }
    return base;
  }

  int natural() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a non-negative integer exponent");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 100000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  Sparse primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    std::size_t start = pos_;
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Sparse inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Scalar c(mpz_class(std::string(text_.substr(start, pos_ - start))));
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        fail("implicit multiplication is not allowed");
      return constant(c, start);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          Exponents e = zero();
          e[i] = 1;
          Sparse s;
          s.add(e, Scalar(1), start);
          return s;
        }
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

/// Checks that the exponents in [begin, end) have a common total degree.
int common_degree(const Sparse& s, std::size_t begin, std::size_t end, const char* what) {
  const Exponents* ref = nullptr;
  std::size_t ref_pos = 0;
  int ref_deg = 0;
  for (const auto& [e, t] : s.terms) {
    int deg = 0;
    for (std::size_t i = begin; i < end; ++i) deg += e[i];
    if (ref == nullptr) {
      ref = &e;
      ref_deg = deg;
      ref_pos = t.position;
    } else if (deg != ref_deg) {
      // Report the later of the two terms as the offender.
      std::size_t at = std::max(t.position, ref_pos);
      int d_at = t.position >= ref_pos ? deg : ref_deg;
      int d_other = t.position >= ref_pos ? ref_deg : deg;
      throw ParseError(ErrorCode::NotHomogeneous, at,
                       std::string("not homogeneous in ") + what + ": term of degree " + std::to_string(d_at) +
                           " next to a term of degree " + std::to_string(d_other));
    }
  }
  return ref_deg;
}

}  // namespace

TForm parse_tform(std::string_view text, std::optional<int> zero_degree) {
  Sparse s = Parser(text, {"t0", "t1"}).parse();
  if (s.terms.empty()) return TForm(zero_degree.value_or(0));
  int d = common_degree(s, 0, 2, "t0, t1");
  TForm f(d);
  for (const auto& [e, t] : s.terms) f.set_coeff(e[1], t.coeff);
  return f;
}

XForm parse_xform(std::string_view text, std::optional<int> zero_degree) {
  Sparse s = Parser(text, {"X0", "X1", "X2"}).parse();
  if (s.terms.empty()) return XForm(zero_degree.value_or(0));
  XForm f(common_degree(s, 0, 3, "X0, X1, X2"));
  for (const auto& [e, t] : s.terms) f.add_term({e[0], e[1], e[2]}, t.coeff);
  return f;
}

BiForm parse_biform(std::string_view text) {
  Sparse s = Parser(text, {"t0", "t1", "X0", "X1", "X2"}).parse();
  if (s.terms.empty()) return BiForm(0, 0);
  int dt = common_degree(s, 0, 2, "t0, t1");
  int dx = common_degree(s, 2, 5, "X0, X1, X2");
  BiForm L(dt, dx);
  std::vector<XForm> coeffs(static_cast<std::size_t>(dt + 1), XForm(dx));
  for (const auto& [e, t] : s.terms) coeffs[e[1]].add_term({e[2], e[3], e[4]}, t.coeff);
  for (int i = 0; i <= dt; ++i) L.set_coeff(i, std::move(coeffs[i]));
  return L;
}

UPoly parse_upoly(std::string_view text) {
  Sparse s = Parser(text, {"t"}).parse();
  UPoly p;
  for (const auto& [e, t] : s.terms) {
    if (static_cast<int>(p.size()) <= e[0]) p.resize(static_cast<std::size_t>(e[0] + 1));
    p[e[0]] = t.coeff;
  }
  trim(p);
  return p;
}

}  // namespace mocurve
