#pragma once

// Macdonald polynomials P, J and the modified H~, basis changes routed
// through the power sums, the scalar products, plethystic rescalings, nabla,
// principal evaluation and the geometric pairing.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "superpoly/algebra/upoly.hpp"
#include "superpoly/symfunc/symfunc.hpp"
#include "superpoly/symfunc/transitions.hpp"
#include "superpoly/util/cache.hpp"

namespace superpoly::symfunc {

using algebra::UPoly;

/// <p_rho, p_rho> under the Hall product.
inline RatQT hall_weight(const Partition& rho) { return RatQT(Rat(rho.z())); }

/// <p_rho, p_rho>_{q,t} = z_rho prod (1 - q^k)/(1 - t^k).
inline RatQT qt_weight(const Partition& rho) {
  RatQT w = hall_weight(rho);
  for (int k : rho.parts()) w *= young::one_minus(k, 0) / young::one_minus(0, k);
  return w;
}

/// z_rho prod (1 - q^k)(1 - t^-k): the product under which H~ is orthogonal.
inline RatQT star_weight(const Partition& rho) {
  RatQT w = hall_weight(rho);
  for (int k : rho.parts()) w *= young::one_minus(k, 0) * young::one_minus(0, -k);
  return w;
}

namespace detail {

inline RatQT pair_terms(const Terms& a, const Terms& b, RatQT (*weight)(const Partition&)) {
  std::vector<RatQT> parts;
  const Terms& small = a.size() <= b.size() ? a : b;
  const Terms& large = a.size() <= b.size() ? b : a;
  for (const auto& [rho, c] : small) {
    auto it = large.find(rho);
    if (it != large.end()) parts.push_back(c * it->second * weight(rho));
  }
  return algebra::sum(std::move(parts));
}

inline void add_scaled(Terms& acc, const Terms& v, const RatQT& s) {
  if (s.is_zero()) return;
  for (const auto& [rho, c] : v) add_to(acc, rho, s * c);
}

/// Builds the transition pair from the p expansions of an orthogonal basis.
inline Transition orthogonal_transition(const std::vector<Partition>& parts, const Matrix& to_p,
                                        RatQT (*weight)(const Partition&)) {
  Transition tr;
  tr.to_p = to_p;
  for (const auto& mu : parts) {
    const Terms& v = to_p.at(mu);
    const RatQT norm = pair_terms(v, v, weight);
    for (const auto& [rho, c] : v) add_to(tr.from_p[rho], mu, c * weight(rho) / norm);
  }
  for (const auto& rho : parts) tr.from_p[rho];
  return tr;
}

/// P_lam in the p basis by Gram-Schmidt on m_lam in increasing
/// lexicographic order, a linear extension of dominance.
inline Matrix macdonald_P_table(int n) {
  const Transition& m = classical_transition(Basis::m, n);
  std::vector<Partition> order = partitions(n);
  std::reverse(order.begin(), order.end());
  Matrix P;
  std::vector<RatQT> norms;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Terms& m_lam = m.to_p.at(order[i]);
    Terms v = m_lam;
    for (std::size_t j = 0; j < i; ++j) {
      const Terms& pj = P.at(order[j]);
      add_scaled(v, pj, -(pair_terms(m_lam, pj, qt_weight) / norms[j]));
    }
    norms.push_back(pair_terms(v, v, qt_weight));
    P.emplace(order[i], std::move(v));
  }
  return P;
}

inline Transition macdonald(Basis b, int n) {
  const std::vector<Partition> parts = partitions(n);
  static util::ConcurrentCache<int, Matrix> p_tables;
  const Matrix& P = p_tables.get(n, [n] { return macdonald_P_table(n); });
  if (b == Basis::P) return orthogonal_transition(parts, P, qt_weight);
  Matrix J;
  for (const auto& lam : parts) {
    const RatQT h = young::hook_products(lam).h;
    Terms& row = J[lam];
    for (const auto& [rho, c] : P.at(lam)) row.emplace(rho, h * c);
  }
  if (b == Basis::J) return orthogonal_transition(parts, J, qt_weight);
  // H~_lam = t^{n(lam)} phi[J_lam(q, 1/t)] with phi(p_k) = p_k / (1 - t^-k).
  Matrix H;
  for (const auto& lam : parts) {
    const RatQT tn = RatQT::monomial(1, 0, lam.n());
    Terms& row = H[lam];
    for (const auto& [rho, c] : J.at(lam)) {
      RatQT x = tn * c.t_inverse();
      for (int k : rho.parts()) x /= young::one_minus(0, -k);
      row.emplace(rho, x);
    }
  }
  return orthogonal_transition(parts, H, star_weight);
}

}  // namespace detail

inline const Transition& transition(Basis b, int n) {
  check_degree(n);
  if (is_classical(b)) return classical_transition(b, n);
  static util::ConcurrentCache<std::pair<int, int>, Transition> cache;
  return cache.get({static_cast<int>(b), n}, [&] { return detail::macdonald(b, n); });
}

inline SymFunc change_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  SymFunc out(target);
  for (int d : f.degrees()) {
    const Transition& src = transition(f.basis(), d);
    const Transition& dst = transition(target, d);
    Terms in_p;
    for (const auto& [lam, c] : f.terms()) {
      if (lam.size() == d) detail::add_scaled(in_p, src.to_p.at(lam), c);
    }
    for (const auto& [rho, c] : in_p) {
      for (const auto& [mu, x] : dst.from_p.at(rho)) out.add_term(mu, c * x);
    }
  }
  return out;
}

inline SymFunc to_p(const SymFunc& f) { return change_basis(f, Basis::p); }

/// Product, returned in the basis of the left factor.
inline SymFunc multiply(const SymFunc& a, const SymFunc& b) {
  return change_basis(multiply_p(to_p(a), to_p(b)), a.basis());
}

inline RatQT qt_pairing(const SymFunc& f, const SymFunc& g) {
  return detail::pair_terms(to_p(f).terms(), to_p(g).terms(), qt_weight);
}
inline RatQT hall_pairing(const SymFunc& f, const SymFunc& g) {
  return detail::pair_terms(to_p(f).terms(), to_p(g).terms(), hall_weight);
}

inline SymFunc macdonald_P(const Partition& lam, Basis out = Basis::m) {
  return change_basis(SymFunc::element(Basis::P, lam), out);
}
inline SymFunc macdonald_J(const Partition& lam, Basis out = Basis::m) {
  return change_basis(SymFunc::element(Basis::J, lam), out);
}
inline SymFunc modified_macdonald(const Partition& lam, Basis out = Basis::s) {
  return change_basis(SymFunc::element(Basis::Htilde, lam), out);
}

/// A ring map p_k -> multiplier(k) p_k.
struct PlethysticMap {
  std::function<RatQT(int)> multiplier;

  PlethysticMap inverse() const {
    auto m = multiplier;
    return {[m](int k) {
      const RatQT x = m(k);
      if (x.is_zero()) fail(ErrorKind::NonInvertible, "plethystic multiplier vanishes at k=" + std::to_string(k));
      return x.inverse();
    }};
  }
  PlethysticMap then(const PlethysticMap& o) const {
    auto a = multiplier, b = o.multiplier;
    return {[a, b](int k) { return a(k) * b(k); }};
  }

  /// p_k -> p_k / (1 - t^-k), the map taking J(q, 1/t) to H~ up to t^{n(lam)}.
  static PlethysticMap modified() {
    return {[](int k) { return young::one_minus(0, -k).inverse(); }};
  }
  /// p_k -> p_k (1 - q^{km}) / (1 - q^k).
  static PlethysticMap q_integer(int m) {
    return {[m](int k) { return young::one_minus(k * m, 0) / young::one_minus(k, 0); }};
  }
};

inline SymFunc apply_plethysm(const SymFunc& f, const PlethysticMap& phi) {
  std::map<int, RatQT> mult;
  auto factor = [&](int k) -> const RatQT& {
    auto it = mult.find(k);
    if (it == mult.end()) it = mult.emplace(k, phi.multiplier(k)).first;
    return it->second;
  };
  SymFunc g = to_p(f).map_coeffs([&](const Partition& rho, const RatQT& c) {
    RatQT x = c;
    for (int k : rho.parts()) x *= factor(k);
    return x;
  });
  return change_basis(g, f.basis());
}

/// q^{n(lam^t)} t^{n(lam)}
inline RatQT nabla_eigenvalue(const Partition& lam) { return RatQT::monomial(1, lam.transpose().n(), lam.n()); }

inline SymFunc nabla(const SymFunc& f) {
  SymFunc h = change_basis(f, Basis::Htilde).map_coeffs([](const Partition& lam, const RatQT& c) { return c * nabla_eigenvalue(lam); });
  return change_basis(h, f.basis());
}
inline SymFunc nabla_inverse(const SymFunc& f) {
  SymFunc h = change_basis(f, Basis::Htilde).map_coeffs([](const Partition& lam, const RatQT& c) { return c / nabla_eigenvalue(lam); });
  return change_basis(h, f.basis());
}

/// The ring map p_k -> (1 - u^k)/(1 - t^k); at u = t^N this is the
/// evaluation at (t^{N-1}, ..., t, 1).
inline UPoly evaluate_principal(const SymFunc& f) {
  UPoly total;
  std::map<int, UPoly> cache;
  auto factor = [&](int k) -> const UPoly& {
    auto it = cache.find(k);
    if (it == cache.end()) {
      std::vector<RatQT> c(static_cast<std::size_t>(k + 1));
      const RatQT s = young::one_minus(0, k).inverse();
      c[0] = s;
      c[k] = -s;
      it = cache.emplace(k, UPoly(std::move(c))).first;
    }
    return it->second;
  };
  const SymFunc fp = to_p(f);
  for (const auto& [rho, c] : fp.terms()) {
    UPoly x(c);
    for (int k : rho.parts()) x *= factor(k);
    total += x;
  }
  return total;
}

/// prod over boxes of (t^{l'} - u q^{a'}): the principal evaluation of J_lam.
inline UPoly j_evaluation(const Partition& lam) {
  UPoly r(1);
  for (auto [i, j] : lam.boxes()) r *= UPoly::linear(RatQT::monomial(1, 0, j - 1), -RatQT::monomial(1, i - 1, 0));
  return r;
}

/// <f, v(u)>_{q,t} where v(u) = sum_lam J_lam eps(J_lam) / (h_lam h'_lam),
/// taken only over the degrees present in f.
inline UPoly evalv_pairing(const SymFunc& f) {
  UPoly total;
  const SymFunc fp = to_p(f);
  for (int d : fp.degrees()) {
    const SymFunc fd = fp.component(d);
    for (const auto& lam : partitions(d)) {
      const RatQT c = qt_pairing(fd, macdonald_J(lam, Basis::p));
      if (c.is_zero()) continue;
      const young::HookProducts hp = young::hook_products(lam);
      total += j_evaluation(lam).scaled(c / (hp.h * hp.h_prime));
    }
  }
  return total;
}

/// (H~_lam, H~_mu) = delta g_lam.
inline RatQT geometric_pairing(const SymFunc& f, const SymFunc& g) {
  const SymFunc a = change_basis(f, Basis::Htilde), b = change_basis(g, Basis::Htilde);
  std::vector<RatQT> parts;
  for (const auto& [lam, c] : a.terms()) {
    const RatQT d = b.coeff(lam);
    if (!d.is_zero()) parts.push_back(c * d * young::hook_products(lam).g);
  }
  return algebra::sum(std::move(parts));
}

/// (-q)^{-d} < phi^{-1} nabla^{-1} f, phi^{-1} g >_{q,1/t} summed over degrees d,
/// with phi the modified plethysm.
inline RatQT twisted_pairing(const SymFunc& f, const SymFunc& g) {
  const PlethysticMap undo = PlethysticMap::modified().inverse();
  const SymFunc a = to_p(apply_plethysm(nabla_inverse(f), undo));
  const SymFunc b = to_p(apply_plethysm(g, undo));
  std::vector<RatQT> parts;
  for (const auto& [rho, c] : a.terms()) {
    const RatQT d = b.coeff(rho);
    if (d.is_zero()) continue;
    const int deg = rho.size();
    const RatQT sign = RatQT(deg % 2 == 0 ? 1 : -1) * RatQT::monomial(1, -deg, 0);
    parts.push_back(sign * c * d * qt_weight(rho).t_inverse());
  }
  return algebra::sum(std::move(parts));
}

}  // namespace superpoly::symfunc
