#pragma once

// Elements of Q(q,t) in canonical reduced form
//     scale * q^eq * t^et * num / den
// where num and den are coprime primitive polynomials in Z[q,t], neither
// divisible by q or t, each with positive leading coefficient.  Zero is the
// unique value with scale 0.  Equality is structural.

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "superpoly/algebra/laurent.hpp"
#include "superpoly/algebra/zpoly.hpp"
#include "superpoly/errors.hpp"

namespace superpoly::algebra {

class RatQT {
 public:
  RatQT() : num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {}
  RatQT(long c) : scale_(c), num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {}  // NOLINT
  RatQT(const Rat& c) : scale_(c), num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {  // NOLINT
    scale_.canonicalize();
  }

  static RatQT monomial(const Rat& c, int qe, int te) {
    RatQT r(c);
    if (sgn(c) != 0) {
      r.eq_ = qe;
      r.et_ = te;
    }
    return r;
  }
  static RatQT q() { return monomial(1, 1, 0); }
  static RatQT t() { return monomial(1, 0, 1); }

  /// q^qe t^te * scale * n / d for arbitrary integer polynomials.
  static RatQT fraction(const ZPoly& n, const ZPoly& d, int qe = 0, int te = 0, const Rat& scale = 1) {
    if (d.is_zero()) fail(ErrorKind::ZeroDenominator, "fraction with zero denominator");
    RatQT r;
    if (n.is_zero() || sgn(scale) == 0) return r;
    r.scale_ = scale;
    r.eq_ = qe;
    r.et_ = te;
    r.set_parts(n, d, true);
    return r;
  }

  /// Exact conversion of a u-free Laurent polynomial.
  static RatQT from_laurent(const LaurentQTU& p) {
    if (p.has_u()) fail(ErrorKind::InvalidArgument, "RatQT cannot hold u");
    if (p.is_zero()) return {};
    const int mq = p.min_exp('q'), mt = p.min_exp('t');
    mpz_class lcm_den = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<zx::ZX> rows(static_cast<std::size_t>(p.max_exp('t') - mt + 1));
    for (const auto& [m, c] : p.terms()) {
      auto& row = rows[m.t - mt];
      if (row.size() <= static_cast<std::size_t>(m.q - mq)) row.resize(m.q - mq + 1);
      mpz_class v = c.get_num() * (lcm_den / c.get_den());
      row[m.q - mq] = v;
    }
    return fraction(ZPoly(std::move(rows)), ZPoly::constant(1), mq, mt, Rat(1, 1) / Rat(lcm_den));
  }

  bool is_zero() const { return sgn(scale_) == 0; }
  bool is_one() const { return scale_ == 1 && eq_ == 0 && et_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_monomial() const { return num_.is_one() && den_.is_one(); }

  const Rat& scale() const { return scale_; }
  int q_shift() const { return eq_; }
  int t_shift() const { return et_; }
  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  /// Numerator and denominator as Laurent polynomials (den has no monomial part).
  LaurentQTU num_laurent() const { return is_zero() ? LaurentQTU() : LaurentQTU::from_zpoly(num_, eq_, et_, scale_); }
  LaurentQTU den_laurent() const { return LaurentQTU::from_zpoly(den_); }

  /// Laurent polynomial equal to this value; NotPolynomial otherwise.
  LaurentQTU as_laurent() const {
    if (!is_polynomial()) fail(ErrorKind::NotPolynomial, "denominator " + LaurentQTU::from_zpoly(den_).to_string() + " does not divide");
    return num_laurent();
  }

  RatQT operator-() const {
    RatQT r(*this);
    r.scale_ = -r.scale_;
    return r;
  }

  friend RatQT operator*(const RatQT& a, const RatQT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatQT r;
    r.scale_ = a.scale_ * b.scale_;
    r.eq_ = a.eq_ + b.eq_;
    r.et_ = a.et_ + b.et_;
    if (a.is_monomial()) {
      r.num_ = b.num_;
      r.den_ = b.den_;
      return r;
    }
    if (b.is_monomial()) {
      r.num_ = a.num_;
      r.den_ = a.den_;
      return r;
    }
    ZPoly n1 = a.num_, d2 = b.den_, n2 = b.num_, d1 = a.den_;
    cancel(n1, d2);
    cancel(n2, d1);
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    return r;
  }

  RatQT inverse() const {
    if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero");
    RatQT r;
    r.scale_ = 1 / scale_;
    r.eq_ = -eq_;
    r.et_ = -et_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
  }
  friend RatQT operator/(const RatQT& a, const RatQT& b) { return a * b.inverse(); }

  friend RatQT operator+(const RatQT& a, const RatQT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int mq = std::min(a.eq_, b.eq_), mt = std::min(a.et_, b.et_);
    mpz_class L;
    mpz_lcm(L.get_mpz_t(), a.scale_.get_den_mpz_t(), b.scale_.get_den_mpz_t());
    mpz_class ca = a.scale_.get_num() * (L / a.scale_.get_den());
    mpz_class cb = b.scale_.get_num() * (L / b.scale_.get_den());
    ZPoly na = a.num_.shifted_up(a.eq_ - mq, a.et_ - mt).scaled(ca);
    ZPoly nb = b.num_.shifted_up(b.eq_ - mq, b.et_ - mt).scaled(cb);
    RatQT r;
    r.eq_ = mq;
    r.et_ = mt;
    r.scale_ = Rat(1) / Rat(L);
    if (a.den_ == b.den_) {
      ZPoly n = na + nb;
      if (n.is_zero()) return {};
      r.set_parts(n, a.den_, !a.den_.is_one());
      return r;
    }
    if (a.den_.is_one() || b.den_.is_one()) {
      ZPoly n = na * b.den_ + nb * a.den_;
      if (n.is_zero()) return {};
      // Denominators are coprime here, so only content and monomials can cancel.
      r.set_parts(n, a.den_ * b.den_, false);
      return r;
    }
    ZPoly g = gcd(a.den_, b.den_);
    ZPoly da = *exact_div(a.den_, g), db = *exact_div(b.den_, g);
    ZPoly n = na * db + nb * da;
    if (n.is_zero()) return {};
    ZPoly den = da * b.den_;
    if (!g.is_one()) {
      ZPoly h = gcd(n, g);
      if (!h.is_constant()) {
        n = *exact_div(n, h);
        den = *exact_div(den, h);
      }
    }
    r.set_parts(n, den, false);
    return r;
  }
  friend RatQT operator-(const RatQT& a, const RatQT& b) { return a + (-b); }
  RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
  RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
  RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
  RatQT& operator/=(const RatQT& o) { return *this = *this / o; }

  RatQT pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatQT r(1), b(*this);
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      if (e > 1) b *= b;
    }
    return r;
  }

  friend bool operator==(const RatQT& a, const RatQT& b) {
    return a.scale_ == b.scale_ && a.eq_ == b.eq_ && a.et_ == b.et_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatQT& a, const RatQT& b) { return !(a == b); }

  // Substitutions.  Each maps num and den separately and renormalizes.
  RatQT swap_qt() const { return mapped(&ZPoly::transposed, et_, eq_); }
  RatQT t_inverse() const {
    if (is_zero()) return *this;
    return fraction(reverse_t(num_), reverse_t(den_), eq_, -et_ - num_.degt() + den_.degt(), scale_);
  }
  RatQT t_to_qinv() const;
  RatQT t_to_one() const;
  RatQT q_to_one() const { return swap_qt().t_to_one().swap_qt(); }

  /// Canonical text: "N" for polynomials, "(N)/(D)" otherwise.
  std::string to_string() const {
    if (is_polynomial()) return num_laurent().to_string();
    return "(" + num_laurent().to_string() + ")/(" + den_laurent().to_string() + ")";
  }

  static RatQT parse(std::string_view text);

 private:
  static void cancel(ZPoly& n, ZPoly& d) {
    if (n.is_one() || d.is_one()) return;
    ZPoly g = gcd(n, d);
    if (g.is_constant()) return;
    n = *exact_div(n, g);
    d = *exact_div(d, g);
  }

  static ZPoly reverse_t(const ZPoly& p) {
    std::vector<zx::ZX> rows(p.rows().rbegin(), p.rows().rend());
    return ZPoly(std::move(rows));
  }

  // Normalize content, sign and monomial factors of n/d into the scale and
  // shifts, then optionally divide out their gcd.
  void set_parts(ZPoly n, ZPoly d, bool reduce) {
    const int nq = n.min_q(), nt = n.min_t(), dq = d.min_q(), dt = d.min_t();
    if (nq || nt) n = n.shifted_down(nq, nt);
    if (dq || dt) d = d.shifted_down(dq, dt);
    eq_ += nq - dq;
    et_ += nt - dt;
    mpz_class cn = n.content(), cd = d.content();
    if (sgn(n.lead()) < 0) cn = -cn;
    if (sgn(d.lead()) < 0) cd = -cd;
    if (cn != 1) n = n.divexact(cn);
    if (cd != 1) d = d.divexact(cd);
    scale_ *= Rat(cn, 1) / Rat(cd, 1);
    scale_.canonicalize();
    if (reduce) cancel(n, d);
    num_ = std::move(n);
    den_ = std::move(d);
  }

  RatQT mapped(ZPoly (ZPoly::*f)() const, int new_eq, int new_et) const {
    if (is_zero()) return *this;
    RatQT r;
    r.scale_ = scale_;
    r.eq_ = new_eq;
    r.et_ = new_et;
    r.set_parts((num_.*f)(), (den_.*f)(), false);
    return r;
  }

  Rat scale_ = 0;
  int eq_ = 0, et_ = 0;
  ZPoly num_, den_;
};

namespace detail {

/// p(q, 1/q) = q^(-degt p) * result.
inline ZPoly t_to_qinv_poly(const ZPoly& p) {
  const int dt = p.degt();
  std::vector<zx::ZX> row(1);
  auto& r = row[0];
  for (int j = 0; j <= dt; ++j) {
    const auto& src = p.rows()[j];
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (sgn(src[i]) == 0) continue;
      std::size_t k = i + static_cast<std::size_t>(dt - j);
      if (r.size() <= k) r.resize(k + 1);
      r[k] += src[i];
    }
  }
  return ZPoly(std::move(row));
}

inline ZPoly t_to_one_poly(const ZPoly& p) {
  zx::ZX acc;
  for (const auto& row : p.rows()) acc = zx::add(acc, row);
  return ZPoly(std::vector<zx::ZX>{acc});
}

}  // namespace detail

inline RatQT RatQT::t_to_qinv() const {
  if (is_zero()) return *this;
  ZPoly n = detail::t_to_qinv_poly(num_), d = detail::t_to_qinv_poly(den_);
  if (d.is_zero()) fail(ErrorKind::SingularSubstitution, "denominator vanishes at t=1/q");
  if (n.is_zero()) return {};
  return fraction(n, d, eq_ - et_ - num_.degt() + den_.degt(), 0, scale_);
}

inline RatQT RatQT::t_to_one() const {
  if (is_zero()) return *this;
  ZPoly n = detail::t_to_one_poly(num_), d = detail::t_to_one_poly(den_);
  if (d.is_zero()) fail(ErrorKind::SingularSubstitution, "denominator vanishes at t=1");
  if (n.is_zero()) return {};
  return fraction(n, d, eq_, 0, scale_);
}

inline RatQT RatQT::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto unwrap = [](std::string x) {
    if (x.size() >= 2 && x.front() == '(' && x.back() == ')') return x.substr(1, x.size() - 2);
    return x;
  };
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) fail(ErrorKind::Parse, "unbalanced parentheses");
    if (depth == 0 && s[i] == '/' && i + 1 < s.size() && s[i + 1] == '(') {
      RatQT num = from_laurent(LaurentQTU::parse(unwrap(s.substr(0, i))));
      RatQT den = from_laurent(LaurentQTU::parse(unwrap(s.substr(i + 1))));
      if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "parsed zero denominator");
      return num / den;
    }
  }
  if (depth != 0) fail(ErrorKind::Parse, "unbalanced parentheses");
  return from_laurent(LaurentQTU::parse(unwrap(s)));
}

/// normalize(num, den) on u-free Laurent polynomials.
inline RatQT normalize(const LaurentQTU& num, const LaurentQTU& den) {
  if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "normalize with zero denominator");
  return RatQT::from_laurent(num) / RatQT::from_laurent(den);
}

/// Sum with pairwise merging, which keeps intermediate denominators balanced.
inline RatQT sum(std::vector<RatQT> terms) {
  if (terms.empty()) return {};
  while (terms.size() > 1) {
    std::vector<RatQT> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return std::move(terms[0]);
}

inline std::ostream& operator<<(std::ostream& os, const RatQT& x) { return os << x.to_string(); }

}  // namespace superpoly::algebra
