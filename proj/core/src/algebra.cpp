#include "mocurve/algebra.hpp"

#include <algorithm>

namespace mocurve {

namespace {

UPoly poly_rem(UPoly a, const UPoly& b) {
  int db = degree(b);
  Scalar inv_lead = b[db].inverse();
  for (int da = degree(a); da >= db; da = degree(a)) {
    Scalar q = a[da] * inv_lead;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
  }
  trim(a);
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

struct Split {
  int v0;  // t0 exponent
  int v1;  // t1 exponent
  UPoly core;
};

Split split_monomial(const TForm& f) {
  int v0 = f.t0_valuation();
  int v1 = f.t1_valuation();
  UPoly core;
  for (int i = v1; i <= f.degree() - v0; ++i) core.push_back(f.coeff(i));
  return {v0, v1, std::move(core)};
}

}  // namespace

TForm gcd_t(const TForm& f, const TForm& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::ZeroInput, "gcd of two zero forms");
  if (f.is_zero() || g.is_zero()) {
    const TForm& h = f.is_zero() ? g : f;
    Split s = split_monomial(h);
    Scalar inv = s.core.back().inverse();
    return h * inv;
  }
  Split sf = split_monomial(f);
  Split sg = split_monomial(g);
  int v0 = std::min(sf.v0, sg.v0);
  int v1 = std::min(sf.v1, sg.v1);
  UPoly h = upoly_gcd(sf.core, sg.core);
  int dh = degree(h);
  TForm out(v0 + v1 + dh);
  for (int k = 0; k <= dh; ++k) out.set_coeff(v1 + k, h[k]);
  return out;
}

TForm divide_t(const TForm& f, const TForm& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero form");
  int dq = f.degree() - g.degree();
  if (dq < 0) throw Error(ErrorCode::NotDivisible, "divisor degree exceeds dividend degree");
  int s = g.t1_valuation();
  Scalar inv = g.coeff(s).inverse();
  TForm q(dq);
  for (int k = 0; k <= dq; ++k) {
    if (k + s > f.degree()) break;
    Scalar acc = f.coeff(k + s);
    for (int j = 0; j < k; ++j) {
      int gi = k + s - j;
      if (gi <= g.degree()) acc -= q.coeff(j) * g.coeff(gi);
    }
    q.set_coeff(k, acc * inv);
  }
  if (q * g != f) throw Error(ErrorCode::NotDivisible, f.str() + " is not divisible by " + g.str());
  return q;
}

XForm kth_root(const XForm& G, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  if (G.is_zero()) throw Error(ErrorCode::ZeroInput, "root of the zero form");
  if (k == 1) return G.canonical();
  if (G.degree() % static_cast<int>(k) != 0)
    throw Error(ErrorCode::NotAPower, "degree " + std::to_string(G.degree()) + " is not divisible by " +
                                          std::to_string(k));
  FieldSpec field = G.field();
  if (!field.is_rational() && field.modulus % k == 0)
    throw Error(ErrorCode::InvalidArgument, "root index divisible by the characteristic");

  XForm target = G * G.leading_coeff().inverse();
  const XExp& lead = target.leading_exponent();
  for (int e : lead)
    if (e % static_cast<int>(k) != 0) throw Error(ErrorCode::NotAPower, "leading monomial is not a k-th power");
  XExp first{lead[0] / static_cast<int>(k), lead[1] / static_cast<int>(k), lead[2] / static_cast<int>(k)};

  XForm root = XForm::monomial(first, Scalar(1).in(field));
  XExp shift{first[0] * static_cast<int>(k - 1), first[1] * static_cast<int>(k - 1), first[2] * static_cast<int>(k - 1)};
  XExp last = first;
  Scalar k_inv = Scalar(static_cast<long>(k)).in(field).inverse();
  const int max_terms = x_monomial_count(root.degree());

  for (int iter = 0; iter <= max_terms; ++iter) {
    XForm residual = target - root.pow(k);
    if (residual.is_zero()) return root.canonical();
    const XExp& e = residual.leading_exponent();
    XExp next{e[0] - shift[0], e[1] - shift[1], e[2] - shift[2]};
    if (next[0] < 0 || next[1] < 0 || next[2] < 0 || !GrlexDesc{}(last, next))
      throw Error(ErrorCode::NotAPower, "form is not a perfect " + std::to_string(k) + "-th power");
    root.add_term(next, residual.leading_coeff() * k_inv);
    last = next;
  }
  throw Error(ErrorCode::NotAPower, "form is not a perfect " + std::to_string(k) + "-th power");
}

XForm exact_divide(const XForm& G, const XForm& F) {
  if (F.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero form");
  int dq = G.degree() - F.degree();
  if (dq < 0) throw Error(ErrorCode::NotDivisible, "divisor degree exceeds dividend degree");
  const XExp& lf = F.leading_exponent();
  Scalar inv = F.leading_coeff().inverse();
  XForm q(dq);
  XForm r = G;
  while (!r.is_zero()) {
    const XExp& lr = r.leading_exponent();
    XExp m{lr[0] - lf[0], lr[1] - lf[1], lr[2] - lf[2]};
    if (m[0] < 0 || m[1] < 0 || m[2] < 0)
      throw Error(ErrorCode::NotDivisible, "form is not divisible by " + F.str());
    XForm t = XForm::monomial(m, r.leading_coeff() * inv);
    q += t;
    r -= t * F;
  }
  return q;
}

int x_valuation(const XForm& G, int var) {
  if (G.is_zero()) return 0;
  int v = G.degree();
  for (const auto& [e, c] : G.terms()) v = std::min(v, e.at(static_cast<std::size_t>(var)));
  return v;
}

}  // namespace mocurve
