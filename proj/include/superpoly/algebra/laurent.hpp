#pragma once

// Sparse Laurent polynomials in q, t, u with rational coefficients.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "superpoly/algebra/zpoly.hpp"
#include "superpoly/errors.hpp"

namespace superpoly::algebra {

using Rat = mpq_class;

struct Monomial {
  int q = 0, t = 0, u = 0;

  int degree() const { return q + t + u; }
  Monomial operator*(const Monomial& o) const { return {q + o.q, t + o.t, u + o.u}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex on (e_u, e_q, e_t): total degree first, then e_u, e_q, e_t.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.u != b.u) return a.u < b.u;
    if (a.q != b.q) return a.q < b.q;
    return a.t < b.t;
  }
};

class LaurentQTU {
 public:
  using Terms = std::map<Monomial, Rat, MonomialOrder>;

  LaurentQTU() = default;
  LaurentQTU(long c) { add_term({}, Rat(c)); }  // NOLINT: integers promote implicitly
  LaurentQTU(const Rat& c) { add_term({}, c); }  // NOLINT

  static LaurentQTU term(const Rat& c, int qe, int te, int ue = 0) {
    LaurentQTU r;
    r.add_term({qe, te, ue}, c);
    return r;
  }
  static LaurentQTU q() { return term(1, 1, 0); }
  static LaurentQTU t() { return term(1, 0, 1); }
  static LaurentQTU u() { return term(1, 0, 0, 1); }

  /// q^qe t^te times a Z[q,t] polynomial.
  static LaurentQTU from_zpoly(const ZPoly& p, int qe = 0, int te = 0, const Rat& scale = 1) {
    LaurentQTU r;
    const auto& rows = p.rows();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (std::size_t i = 0; i < rows[j].size(); ++i) {
        if (sgn(rows[j][i]) == 0) continue;
        r.terms_.emplace(Monomial{static_cast<int>(i) + qe, static_cast<int>(j) + te, 0}, scale * Rat(rows[j][i]));
      }
    }
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Monomial& m, Rat c) {
    c.canonicalize();
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  bool has_u() const {
    for (const auto& [m, c] : terms_) {
      if (m.u != 0) return true;
    }
    return false;
  }
  int min_exp(char var) const;
  int max_exp(char var) const;

  LaurentQTU& operator+=(const LaurentQTU& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentQTU& operator-=(const LaurentQTU& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  LaurentQTU operator-() const {
    LaurentQTU r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentQTU operator+(LaurentQTU a, const LaurentQTU& b) { return a += b; }
  friend LaurentQTU operator-(LaurentQTU a, const LaurentQTU& b) { return a -= b; }
  friend LaurentQTU operator*(const LaurentQTU& a, const LaurentQTU& b) {
    LaurentQTU r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  LaurentQTU& operator*=(const LaurentQTU& o) { return *this = *this * o; }
  LaurentQTU pow(int e) const {
    LaurentQTU r(1), b(*this);
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      if (e > 1) b *= b;
    }
    return r;
  }

  friend bool operator==(const LaurentQTU& a, const LaurentQTU& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentQTU& a, const LaurentQTU& b) { return !(a == b); }

  /// Replace each monomial q^a t^b u^c by the image monomial under the
  /// integer linear map given by the images of q, t, u.
  LaurentQTU monomial_map(const Monomial& qi, const Monomial& ti, const Monomial& ui) const {
    LaurentQTU r;
    for (const auto& [m, c] : terms_) {
      Monomial im{qi.q * m.q + ti.q * m.t + ui.q * m.u, qi.t * m.q + ti.t * m.t + ui.t * m.u,
                  qi.u * m.q + ti.u * m.t + ui.u * m.u};
      r.add_term(im, c);
    }
    return r;
  }
  LaurentQTU swap_qt() const { return monomial_map({0, 1, 0}, {1, 0, 0}, {0, 0, 1}); }
  LaurentQTU t_inverse() const { return monomial_map({1, 0, 0}, {0, -1, 0}, {0, 0, 1}); }
  LaurentQTU t_to_qinv() const { return monomial_map({1, 0, 0}, {-1, 0, 0}, {0, 0, 1}); }
  LaurentQTU t_to_one() const { return monomial_map({1, 0, 0}, {0, 0, 0}, {0, 0, 1}); }
  LaurentQTU q_to_one() const { return monomial_map({0, 0, 0}, {0, 1, 0}, {0, 0, 1}); }
  LaurentQTU u_to_zero() const {
    LaurentQTU r;
    for (const auto& [m, c] : terms_) {
      if (m.u == 0) r.terms_.emplace(m, c);
    }
    return r;
  }
  LaurentQTU u_to_tpow(int N) const { return monomial_map({1, 0, 0}, {0, 1, 0}, {0, N, 0}); }

  /// Coefficient of u^k as a (u-free) Laurent polynomial.
  LaurentQTU u_coeff(int k) const {
    LaurentQTU r;
    for (const auto& [m, c] : terms_) {
      if (m.u == k) r.terms_.emplace(Monomial{m.q, m.t, 0}, c);
    }
    return r;
  }

  /// Sum of all coefficients (value at q=t=u=1).
  Rat value_at_one() const {
    Rat s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  std::string to_string() const;
  static LaurentQTU parse(std::string_view text);

 private:
  Terms terms_;
};

inline int LaurentQTU::min_exp(char var) const {
  bool first = true;
  int v = 0;
  for (const auto& [m, c] : terms_) {
    int e = var == 'q' ? m.q : var == 't' ? m.t : m.u;
    if (first || e < v) v = e;
    first = false;
  }
  return v;
}

inline int LaurentQTU::max_exp(char var) const {
  bool first = true;
  int v = 0;
  for (const auto& [m, c] : terms_) {
    int e = var == 'q' ? m.q : var == 't' ? m.t : m.u;
    if (first || e > v) v = e;
    first = false;
  }
  return v;
}

inline std::string LaurentQTU::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string mono;
    auto put = [&mono](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e != 1) mono += "^" + std::to_string(e);
    };
    put("q", m.q);
    put("t", m.t);
    put("u", m.u);
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

inline LaurentQTU LaurentQTU::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) fail(ErrorKind::Parse, "empty polynomial text");
  LaurentQTU r;
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) -> long {
    std::size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail(ErrorKind::Parse, "expected integer in '" + s + "'");
    return std::stol(s.substr(start, i - start));
  };
  auto read_digits = [&]() -> std::string {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail(ErrorKind::Parse, "expected digits in '" + s + "'");
    return s.substr(start, i - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail(ErrorKind::Parse, "expected '+' or '-' at position " + std::to_string(i));
    }
    Rat coeff = sign;
    Monomial mono;
    bool need_factor = true;
    while (need_factor) {
      if (i >= s.size()) fail(ErrorKind::Parse, "truncated term in '" + s + "'");
      char ch = s[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Rat c{mpz_class(read_digits())};
        if (i < s.size() && s[i] == '/') {
          ++i;
          c /= Rat{mpz_class(read_digits())};
        }
        coeff *= c;
      } else if (ch == 'q' || ch == 't' || ch == 'u') {
        ++i;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = static_cast<int>(read_int(true));
        }
        (ch == 'q' ? mono.q : ch == 't' ? mono.t : mono.u) += e;
      } else {
        fail(ErrorKind::Parse, std::string("unexpected character '") + ch + "'");
      }
      need_factor = i < s.size() && s[i] == '*';
      if (need_factor) ++i;
    }
    r.add_term(mono, coeff);
  }
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentQTU& x) { return os << x.to_string(); }

}  // namespace superpoly::algebra
