#pragma once

// Polynomials in u with coefficients in Q(q,t).  This is where principal
// evaluations and superpolynomials live before they are certified to be
// Laurent polynomials.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "superpoly/algebra/laurent.hpp"
#include "superpoly/algebra/ratqt.hpp"

namespace superpoly::algebra {

class UPoly {
 public:
  UPoly() = default;
  UPoly(const RatQT& c) : c_{c} { trim(); }  // NOLINT
  UPoly(long c) : UPoly(RatQT(c)) {}         // NOLINT
  explicit UPoly(std::vector<RatQT> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly u() { return UPoly(std::vector<RatQT>{RatQT(0), RatQT(1)}); }
  /// a + b*u
  static UPoly linear(const RatQT& a, const RatQT& b) { return UPoly(std::vector<RatQT>{a, b}); }

  static UPoly from_laurent(const LaurentQTU& p) {
    if (p.is_zero()) return {};
    const int lo = p.min_exp('u'), hi = p.max_exp('u');
    if (lo < 0) fail(ErrorKind::InvalidArgument, "negative power of u");
    std::vector<RatQT> c(static_cast<std::size_t>(hi + 1));
    for (int k = 0; k <= hi; ++k) c[k] = RatQT::from_laurent(p.u_coeff(k));
    return UPoly(std::move(c));
  }

  const std::vector<RatQT>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RatQT coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : RatQT(); }

  UPoly& operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const {
    UPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RatQT> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const RatQT& s) const {
    if (s.is_zero()) return {};
    UPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
  }

  /// Exact division by a polynomial in u; nullopt when the remainder is nonzero.
  std::optional<UPoly> divide(const UPoly& d) const {
    if (d.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero in Q(q,t)[u]");
    std::vector<RatQT> r(c_);
    const int dd = d.degree();
    if (degree() < dd) {
      if (is_zero()) return UPoly{};
      return std::nullopt;
    }
    std::vector<RatQT> quo(static_cast<std::size_t>(degree() - dd + 1));
    const RatQT lead_inv = d.c_.back().inverse();
    for (int k = degree(); k >= dd; --k) {
      if (r[k].is_zero()) continue;
      RatQT c = r[k] * lead_inv;
      for (int j = 0; j <= dd; ++j) r[k - dd + j] -= c * d.c_[j];
      quo[k - dd] = c;
    }
    for (int k = 0; k < dd; ++k) {
      if (!r[k].is_zero()) return std::nullopt;
    }
    return UPoly(std::move(quo));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  bool is_laurent() const {
    for (const auto& x : c_) {
      if (!x.is_polynomial()) return false;
    }
    return true;
  }
  LaurentQTU as_laurent() const {
    LaurentQTU r;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const LaurentQTU x = c_[k].as_laurent();
      for (const auto& [m, c] : x.terms()) r.add_term({m.q, m.t, static_cast<int>(k)}, c);
    }
    return r;
  }

  RatQT at_u_zero() const { return coeff(0); }
  RatQT at_u_tpow(int N) const {
    RatQT acc, tn = RatQT::monomial(1, 0, N);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * tn + c_[k];
    return acc;
  }
  template <class F>
  UPoly map_coeffs(F f) const {
    std::vector<RatQT> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(f(x));
    return UPoly(std::move(r));
  }
  UPoly swap_qt() const {
    return map_coeffs([](const RatQT& x) { return x.swap_qt(); });
  }
  UPoly t_inverse() const {
    return map_coeffs([](const RatQT& x) { return x.t_inverse(); });
  }

  std::string to_string() const {
    if (is_laurent()) return as_laurent().to_string();
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += "+";
      out += "(" + c_[k].to_string() + ")";
      if (k > 0) out += k == 1 ? "*u" : "*u^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<RatQT> c_;
};

inline std::ostream& operator<<(std::ostream& os, const UPoly& x) { return os << x.to_string(); }

}  // namespace superpoly::algebra
