#pragma once

// Dense integer polynomials: univariate Z[x] (namespace zx) and bivariate
// Z[q,t] stored recursively as rows in t with Z[q] coefficients.  These are
// the workhorses under the canonical fraction type RatQT; the gcd here is the
// heuristic integer-evaluation gcd with a primitive-PRS fallback.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superpoly/errors.hpp"

namespace superpoly::algebra {

using Int = mpz_class;

namespace zx {

/// Coefficient i multiplies x^i; trimmed so the last entry is nonzero.  The
/// empty vector is the zero polynomial.
using ZX = std::vector<Int>;

inline void trim(ZX& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline int deg(const ZX& a) { return static_cast<int>(a.size()) - 1; }

inline ZX add(const ZX& a, const ZX& b) {
  ZX r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline ZX sub(const ZX& a, const ZX& b) {
  ZX r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline void add_mul_to(ZX& acc, const ZX& a, const ZX& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

inline void sub_mul_to(ZX& acc, const ZX& a, const ZX& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

inline ZX mul(const ZX& a, const ZX& b) {
  ZX r;
  add_mul_to(r, a, b);
  trim(r);
  return r;
}

inline ZX scale(const ZX& a, const Int& c) {
  if (sgn(c) == 0) return {};
  ZX r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline ZX divexact(const ZX& a, const Int& c) {
  ZX r(a);
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

inline Int content(const ZX& a) {
  Int g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline Int max_norm(const ZX& a) {
  Int m = 0;
  for (const auto& x : a) {
    if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
  }
  return m;
}

inline Int eval(const ZX& a, const Int& x) {
  Int r = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    r *= x;
    r += a[i];
  }
  return r;
}

/// Primitive part with positive leading coefficient.
inline ZX primitive(const ZX& a) {
  if (a.empty()) return a;
  Int c = content(a);
  if (sgn(a.back()) < 0) c = -c;
  return divexact(a, c);
}

inline std::optional<ZX> exact_div(const ZX& a, const ZX& b) {
  if (b.empty()) fail(ErrorKind::ZeroDenominator, "division by the zero polynomial");
  if (a.empty()) return ZX{};
  if (a.size() < b.size()) return std::nullopt;
  const int da = deg(a), db = deg(b);
  ZX r(a), quo(static_cast<std::size_t>(da - db + 1));
  const Int& lb = b.back();
  Int c;
  for (int k = da; k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    quo[k - db] = c;
  }
  for (int k = 0; k < db; ++k) {
    if (sgn(r[k]) != 0) return std::nullopt;
  }
  trim(quo);
  return quo;
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
inline ZX prem(ZX a, const ZX& b) {
  const int db = deg(b);
  const Int& lb = b.back();
  while (deg(a) >= db && !a.empty()) {
    const int da = deg(a);
    Int la = a.back();
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    trim(a);
  }
  return a;
}

/// Symmetric-range base-xi digits of h, least significant first.
inline ZX xi_digits(Int h, const Int& xi) {
  ZX out;
  Int half = xi / 2, r;
  while (sgn(h) != 0) {
    mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    out.push_back(r);
    h -= r;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
  }
  return out;
}

inline ZX gcd_prs(ZX a, ZX b) {
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZX r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a);
}

/// Full gcd in Z[x] (integer content included), positive leading coefficient.
inline ZX gcd(const ZX& a0, const ZX& b0) {
  if (a0.empty()) return b0.empty() ? ZX{} : scale(primitive(b0), content(b0));
  if (b0.empty()) return scale(primitive(a0), content(a0));
  Int ca = content(a0), cb = content(b0), g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZX a = primitive(a0), b = primitive(b0);
  if (deg(a) == 0 || deg(b) == 0) return {g};
  if (a == b) return scale(a, g);
  Int xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Int ha = eval(a, xi), hb = eval(b, xi), h;
    mpz_gcd(h.get_mpz_t(), ha.get_mpz_t(), hb.get_mpz_t());
    ZX cand = primitive(xi_digits(h, xi));
    if (!cand.empty() && exact_div(a, cand) && exact_div(b, cand)) return scale(cand, g);
    xi = xi * 73794 / 27011;
  }
  return scale(gcd_prs(a, b), g);
}

}  // namespace zx

/// Dense polynomial in Z[q,t], stored as rows_[j] = coefficient of t^j in Z[q].
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<zx::ZX> rows) : rows_(std::move(rows)) { trim(); }

  static ZPoly constant(const Int& c) {
    if (sgn(c) == 0) return {};
    return ZPoly(std::vector<zx::ZX>{{c}});
  }
  static ZPoly monomial(const Int& c, int qe, int te) {
    if (sgn(c) == 0) return {};
    std::vector<zx::ZX> rows(static_cast<std::size_t>(te + 1));
    rows[te].assign(static_cast<std::size_t>(qe + 1), Int(0));
    rows[te][qe] = c;
    return ZPoly(std::move(rows));
  }

  bool is_zero() const { return rows_.empty(); }
  bool is_constant() const { return rows_.size() <= 1 && (rows_.empty() || rows_[0].size() <= 1); }
  bool is_one() const { return rows_.size() == 1 && rows_[0].size() == 1 && rows_[0][0] == 1; }
  int degt() const { return static_cast<int>(rows_.size()) - 1; }
  int degq() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, zx::deg(r));
    return d;
  }
  const std::vector<zx::ZX>& rows() const { return rows_; }

  Int coeff(int qe, int te) const {
    if (te < 0 || te >= static_cast<int>(rows_.size())) return 0;
    const auto& r = rows_[te];
    if (qe < 0 || qe >= static_cast<int>(r.size())) return 0;
    return r[qe];
  }

  /// Coefficient of the highest t-row's highest q-power; the sign convention
  /// for canonical forms is "this is positive".
  const Int& lead() const { return rows_.back().back(); }

  int min_q() const {
    int m = -1;
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (sgn(r[i]) != 0) {
          if (m < 0 || static_cast<int>(i) < m) m = static_cast<int>(i);
          break;
        }
      }
    }
    return std::max(m, 0);
  }
  int min_t() const {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (!rows_[j].empty()) return static_cast<int>(j);
    }
    return 0;
  }

  ZPoly shifted_down(int qe, int te) const {
    if (qe == 0 && te == 0) return *this;
    std::vector<zx::ZX> rows(rows_.begin() + te, rows_.end());
    for (auto& r : rows) {
      if (!r.empty()) r.erase(r.begin(), r.begin() + qe);
    }
    return ZPoly(std::move(rows));
  }
  ZPoly shifted_up(int qe, int te) const {
    if (is_zero() || (qe == 0 && te == 0)) return *this;
    std::vector<zx::ZX> rows(static_cast<std::size_t>(te));
    for (const auto& r : rows_) {
      zx::ZX nr;
      if (!r.empty()) {
        nr.assign(static_cast<std::size_t>(qe), Int(0));
        nr.insert(nr.end(), r.begin(), r.end());
      }
      rows.push_back(std::move(nr));
    }
    return ZPoly(std::move(rows));
  }

  Int content() const {
    Int g = 0;
    for (const auto& r : rows_) {
      for (const auto& x : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return g;
      }
    }
    return g;
  }
  Int max_norm() const {
    Int m = 0;
    for (const auto& r : rows_) {
      for (const auto& x : r) {
        if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
      }
    }
    return m;
  }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) {
      for (const auto& x : r) n += sgn(x) != 0;
    }
    return n;
  }

  ZPoly transposed() const {
    std::vector<zx::ZX> rows(static_cast<std::size_t>(degq() + 1));
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      for (std::size_t i = 0; i < rows_[j].size(); ++i) {
        if (sgn(rows_[j][i]) == 0) continue;
        auto& r = rows[i];
        if (r.size() <= j) r.resize(j + 1);
        r[j] = rows_[j][i];
      }
    }
    return ZPoly(std::move(rows));
  }

  /// Polynomial in q obtained by setting t = x.
  zx::ZX eval_t(const Int& x) const {
    zx::ZX acc;
    for (std::size_t j = rows_.size(); j-- > 0;) {
      for (auto& c : acc) c *= x;
      acc = zx::add(acc, rows_[j]);
    }
    return acc;
  }
  /// Polynomial in t obtained by setting q = x.
  zx::ZX eval_q(const Int& x) const {
    zx::ZX r(rows_.size());
    for (std::size_t j = 0; j < rows_.size(); ++j) r[j] = zx::eval(rows_[j], x);
    zx::trim(r);
    return r;
  }

  ZPoly operator-() const {
    ZPoly r(*this);
    for (auto& row : r.rows_) {
      for (auto& x : row) x = -x;
    }
    return r;
  }
  ZPoly& operator+=(const ZPoly& o) {
    if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] = zx::add(rows_[j], o.rows_[j]);
    trim();
    return *this;
  }
  ZPoly& operator-=(const ZPoly& o) {
    if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] = zx::sub(rows_[j], o.rows_[j]);
    trim();
    return *this;
  }
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<zx::ZX> rows(a.rows_.size() + b.rows_.size() - 1);
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
      if (a.rows_[i].empty()) continue;
      for (std::size_t j = 0; j < b.rows_.size(); ++j) zx::add_mul_to(rows[i + j], a.rows_[i], b.rows_[j]);
    }
    for (auto& r : rows) zx::trim(r);
    return ZPoly(std::move(rows));
  }
  ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
  ZPoly scaled(const Int& c) const {
    if (sgn(c) == 0) return {};
    ZPoly r(*this);
    for (auto& row : r.rows_) {
      for (auto& x : row) x *= c;
    }
    return r;
  }
  ZPoly divexact(const Int& c) const {
    ZPoly r(*this);
    for (auto& row : r.rows_) {
      for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return r;
  }
  /// Primitive part with positive leading coefficient.
  ZPoly primitive() const {
    if (is_zero()) return *this;
    Int c = content();
    if (sgn(lead()) < 0) c = -c;
    return c == 1 ? *this : divexact(c);
  }

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  /// Total order used only for deterministic containers.
  friend bool operator<(const ZPoly& a, const ZPoly& b) { return a.rows_ < b.rows_; }

 private:
  void trim() {
    for (auto& r : rows_) zx::trim(r);
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  }

  std::vector<zx::ZX> rows_;
};

/// a / b when b divides a in Z[q,t], nullopt otherwise.
inline std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "division by the zero polynomial");
  if (a.is_zero()) return ZPoly{};
  if (a.degt() < b.degt() || a.degq() < b.degq()) return std::nullopt;
  if (b.is_constant()) {
    const Int& c = b.lead();
    for (const auto& row : a.rows()) {
      for (const auto& x : row) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      }
    }
    return a.divexact(c);
  }
  std::vector<zx::ZX> r(a.rows());
  const int db = b.degt(), da = a.degt();
  const auto& brows = b.rows();
  const zx::ZX& lb = brows[db];
  std::vector<zx::ZX> quo(static_cast<std::size_t>(da - db + 1));
  for (int k = da; k >= db; --k) {
    zx::trim(r[k]);
    if (r[k].empty()) continue;
    auto c = zx::exact_div(r[k], lb);
    if (!c) return std::nullopt;
    for (int j = 0; j <= db; ++j) zx::sub_mul_to(r[k - db + j], *c, brows[j]);
    zx::trim(r[k]);
    if (!r[k].empty()) return std::nullopt;
    quo[k - db] = std::move(*c);
  }
  for (int k = 0; k < db; ++k) {
    zx::trim(r[k]);
    if (!r[k].empty()) return std::nullopt;
  }
  return ZPoly(std::move(quo));
}

namespace detail {

inline zx::ZX row_content(const ZPoly& a) {
  zx::ZX g;
  for (const auto& r : a.rows()) {
    if (r.empty()) continue;
    g = zx::gcd(g, r);
    if (zx::deg(g) == 0) break;
  }
  return g;
}

inline ZPoly divide_rows(const ZPoly& a, const zx::ZX& c) {
  std::vector<zx::ZX> rows;
  rows.reserve(a.rows().size());
  for (const auto& r : a.rows()) rows.push_back(r.empty() ? r : *zx::exact_div(r, c));
  return ZPoly(std::move(rows));
}

/// Primitive pseudo-remainder sequence over Z[q][t]; inputs primitive.
inline ZPoly gcd_prs(ZPoly a, ZPoly b) {
  zx::ZX ca = row_content(a), cb = row_content(b);
  zx::ZX cont = zx::gcd(ca, cb);
  a = divide_rows(a, ca);
  b = divide_rows(b, cb);
  if (a.degt() < b.degt()) std::swap(a, b);
  while (!b.is_zero() && b.degt() > 0) {
    const int db = b.degt();
    const zx::ZX& lb = b.rows()[db];
    std::vector<zx::ZX> r(a.rows());
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
      const int dr = static_cast<int>(r.size()) - 1;
      zx::ZX lr = r.back();
      for (auto& row : r) row = zx::mul(row, lb);
      for (int j = 0; j <= db; ++j) zx::sub_mul_to(r[dr - db + j], lr, b.rows()[j]);
      for (auto& row : r) zx::trim(row);
      while (!r.empty() && r.back().empty()) r.pop_back();
    }
    ZPoly rem(std::move(r));
    a = std::move(b);
    if (rem.is_zero()) {
      b = ZPoly{};
      break;
    }
    b = divide_rows(rem, row_content(rem));
  }
  if (!b.is_zero()) {
    // b has degree zero in t: the gcd lies in Z[q] and divides a's content, which is 1.
    a = ZPoly::constant(1);
  }
  ZPoly g = a * ZPoly(std::vector<zx::ZX>{cont});
  return g.primitive();
}

}  // namespace detail

/// Greatest common divisor in Z[q,t], normalized to be primitive with a
/// positive leading coefficient (integer contents are ignored: the caller
/// works over Q).
inline ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero()) return b0.primitive();
  if (b0.is_zero()) return a0.primitive();
  const int mq = std::min(a0.min_q(), b0.min_q());
  const int mt = std::min(a0.min_t(), b0.min_t());
  ZPoly a = a0.shifted_down(a0.min_q(), a0.min_t()).primitive();
  ZPoly b = b0.shifted_down(b0.min_q(), b0.min_t()).primitive();
  ZPoly mono = ZPoly::monomial(1, mq, mt);
  if (a.is_constant() || b.is_constant()) return mono;
  if (a == b) return a * mono;
  if (a.degt() == 0 && b.degt() == 0) {
    return ZPoly(std::vector<zx::ZX>{zx::primitive(zx::gcd(a.rows()[0], b.rows()[0]))}) * mono;
  }
  if (a.degq() == 0 && b.degq() == 0) {
    return ZPoly(std::vector<zx::ZX>{zx::primitive(zx::gcd(a.transposed().rows()[0], b.transposed().rows()[0]))})
               .transposed() *
           mono;
  }
  if (auto qa = exact_div(a, b)) return b * mono;
  if (auto qb = exact_div(b, a)) return a * mono;
  Int xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    zx::ZX ha = a.eval_t(xi), hb = b.eval_t(xi);
    zx::ZX h = zx::gcd(ha, hb);
    std::vector<zx::ZX> rows;
    for (std::size_t i = 0; i < h.size(); ++i) {
      zx::ZX digits = zx::xi_digits(h[i], xi);
      if (rows.size() < digits.size()) rows.resize(digits.size());
      for (std::size_t j = 0; j < digits.size(); ++j) {
        if (sgn(digits[j]) == 0) continue;
        if (rows[j].size() <= i) rows[j].resize(i + 1);
        rows[j][i] = digits[j];
      }
    }
    ZPoly cand = ZPoly(std::move(rows)).primitive();
    if (!cand.is_zero() && exact_div(a, cand) && exact_div(b, cand)) return cand * mono;
    xi = xi * 73794 / 27011;
  }
  return detail::gcd_prs(a, b) * mono;
}

}  // namespace superpoly::algebra
