#pragma once

// Superpolynomials of (n,m) torus knots: the tableau route, the direct
// (u,q,t) formula, colored invariants via plethystic substitution into the
// operators, and the reduced form with its transposition duality.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "superpoly/knots/operators.hpp"

namespace superpoly::knots {

struct SuperPoly {
  int n = 0, m = 0;
  Partition color{1};
  UPoly value;

  bool is_laurent() const { return value.is_laurent(); }
  LaurentQTU laurent() const { return value.as_laurent(); }
  std::string to_string() const { return is_laurent() ? laurent().to_string() : value.to_string(); }

  nlohmann::json to_json() const {
    nlohmann::json j{{"n", n}, {"m", m}, {"lambda", color.parts()}, {"value", to_string()}};
    if (is_laurent()) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [mono, c] : laurent().terms()) terms.push_back({mono.q, mono.t, mono.u, c.get_str()});
      j["terms"] = terms;
    }
    return j;
  }
};

/// prod over boxes of (1 - u / chi(box)).
inline UPoly inverse_weight_factor(const Partition& mu) {
  UPoly r(1);
  for (auto box : mu.boxes()) {
    const Weight w = box_weight(box);
    r *= UPoly::linear(RatQT(1), -RatQT::monomial(1, -w.q, -w.t));
  }
  return r;
}

/// (Lambda(u) | f) for f of homogeneous degree: H~_mu pairs to prod (chi - u).
inline UPoly lambda_pairing(const SymFunc& f) {
  const SymFunc h = symfunc::change_basis(f, Basis::Htilde);
  UPoly r;
  for (const auto& [mu, c] : h.terms()) {
    UPoly x(c);
    for (auto box : mu.boxes()) {
      const Weight w = box_weight(box);
      x *= UPoly::linear(w.value(), RatQT(-1));
    }
    r += x;
  }
  return r;
}

/// P~_{n,m}(u,q,t) as a sum over standard tableaux.
inline SuperPoly supertilde_syt(int n, int m) {
  require_coprime(n, m);
  if (n < 1 || m < 1) fail(ErrorKind::InvalidArgument, "supertilde_syt needs n, m >= 1");
  SuperPoly r{n, m, Partition{1}, {}};
  for (const auto& mu : partitions(n)) {
    const RatQT c = syt_coefficient_sum(n, m, mu) / young::hook_products(mu).g;
    if (!c.is_zero()) r.value += inverse_weight_factor(mu).scaled(c);
  }
  if (!r.value.is_laurent()) fail(ErrorKind::NotPolynomial, "tableau sum is not a Laurent polynomial");
  return r;
}

/// P = (-q)^{n|lam|} P~(u, q, 1/t).
inline SuperPoly untilde(const SuperPoly& s) {
  const int e = s.n * static_cast<int>(s.color.size());
  const RatQT scale = RatQT::monomial(e % 2 == 0 ? 1 : -1, e, 0);
  return {s.n, s.m, s.color, s.value.t_inverse().scaled(scale)};
}

inline SuperPoly tilde_from(const SuperPoly& s) {
  const int e = s.n * static_cast<int>(s.color.size());
  const RatQT scale = RatQT::monomial(e % 2 == 0 ? 1 : -1, -e, 0);
  return {s.n, s.m, s.color, s.value.scaled(scale).t_inverse()};
}

/// The direct formula in (u,q,t) with q,t^{-1} weights; used as an
/// independent check on the change of variables.
inline SuperPoly theorem_formula(int n, int m) {
  require_coprime(n, m);
  if (n < 1 || m < 1) fail(ErrorKind::InvalidArgument, "theorem_formula needs n, m >= 1");
  const RatQT gt = young::one_minus(0, 1) * young::one_minus(1, 0) / (RatQT::q() - RatQT::t());
  const std::vector<int> S = slope_profile(n, m, n);
  SuperPoly r{n, m, Partition{1}, {}};
  for (const auto& mu : partitions(n)) {
    std::vector<RatQT> terms;
    young::for_each_chain(Partition{}, mu, [&](const std::vector<std::pair<int, int>>& added) {
      std::vector<Weight> chi;
      for (auto it = added.rbegin(); it != added.rend(); ++it) {
        const Weight w = box_weight(*it);
        chi.push_back({w.q, -w.t});
      }
      detail::Product p;
      for (int i = 0; i < n; ++i) {
        p.mul(RatQT::monomial(1, chi[i].q * S[i], chi[i].t * S[i]));
        p.mul(binom(chi[i] * Weight{1, 0}, 1, {0, 1}, 1));
      }
      for (int i = 0; i + 1 < n; ++i) p.div(binom({0, 0}, 1, Weight{1, -1} * (chi[i + 1] / chi[i]), 1));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          p.mul(binom(chi[j], 1, chi[i] * Weight{1, 0}, 1) * binom(chi[j] * Weight{0, 1}, 1, chi[i], 1));
          p.div(binom(chi[j], 1, chi[i], 1) * binom(chi[j] * Weight{0, 1}, 1, chi[i] * Weight{1, 0}, 1));
        }
      }
      terms.push_back(p.value());
    });
    const RatQT c = gt.pow(n) / young::hook_products(mu).g_tilde * algebra::sum(std::move(terms));
    if (c.is_zero()) continue;
    UPoly f(1);
    for (auto box : mu.boxes()) {
      const Weight w = box_weight(box);
      f *= UPoly::linear(RatQT(1), -RatQT::monomial(1, -w.q, w.t));
    }
    r.value += f.scaled(c);
  }
  if (!r.value.is_laurent()) fail(ErrorKind::NotPolynomial, "direct formula is not a Laurent polynomial");
  return r;
}

/// t^{-n(lam)} / h_lam(q, 1/t) H~_lam [p_k -> P~_{kn,km}] applied to 1, in H~.
inline SymFunc colored_ptilde_one(int n, int m, const Partition& lam) {
  if (n > 0) require_coprime(n, m);
  symfunc::check_degree(n * static_cast<int>(lam.size()));
  const SymFunc hp = symfunc::change_basis(SymFunc::element(Basis::Htilde, lam), Basis::p);
  SymFunc out(Basis::Htilde);
  const SymFunc vacuum = SymFunc::element(Basis::Htilde, Partition{});
  for (const auto& [rho, a] : hp.terms()) {
    SymFunc v = vacuum;
    for (int k : rho.parts()) v = apply_operator(k, n, m, v, Normalization::PowerSum);
    out += a * v;
  }
  const RatQT scale = RatQT::monomial(1, 0, -lam.n()) / young::hook_products(lam).h.t_inverse();
  return scale * out;
}

/// P~^lam_{n,m}(u,q,t).  For lam = (1) this agrees with supertilde_syt.
inline SuperPoly colored_super(int n, int m, const Partition& lam) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "colored_super needs n >= 1");
  require_coprime(n, m);
  return {n, m, lam, lambda_pairing(colored_ptilde_one(n, m, lam))};
}

/// P_{n,m}^lam(u,q,t) through the change of variables.
inline SuperPoly cherednik_super(int n, int m, const Partition& lam = Partition{1}) {
  return untilde(lam == Partition{1} && m >= 1 ? supertilde_syt(n, m) : colored_super(n, m, lam));
}

struct Reduced {
  SuperPoly value;
  bool exact = true;  // false when the quotient by the unknot is not a polynomial in u
};

/// P~^lam_{n,m} / P~^lam_{1,0}.
inline Reduced reduced_super(int n, int m, const Partition& lam) {
  const SuperPoly full = colored_super(n, m, lam);
  const UPoly unknot = lambda_pairing(colored_ptilde_one(1, 0, lam));
  Reduced r{{n, m, lam, {}}, true};
  if (auto q = full.value.divide(unknot)) {
    r.value.value = *q;
  } else {
    r.exact = false;
    r.value.value = full.value;
  }
  return r;
}

/// reduced^{lam^t}(u,q,t) = reduced^lam(u,t,q).
inline bool duality_holds(int n, int m, const Partition& lam) {
  const Reduced a = reduced_super(n, m, lam.transpose());
  const Reduced b = reduced_super(n, m, lam);
  return a.exact && b.exact && a.value.value == b.value.value.swap_qt();
}

}  // namespace superpoly::knots
