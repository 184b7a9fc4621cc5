#pragma once

// Identity and conjecture checks.  Each returns both sides in canonical text
// so that a failure can be reported rather than merely detected.

#include <map>
#include <string>

#include "superpoly/knots/superpoly.hpp"
#include "superpoly/knots/tesler.hpp"
#include "superpoly/models/affine.hpp"
#include "superpoly/models/dyck.hpp"
#include "superpoly/models/parking.hpp"

namespace superpoly::knots {

struct CheckOutcome {
  bool pass = false;
  std::string left, right;
};

namespace detail {

inline CheckOutcome compare(const LaurentQTU& a, const LaurentQTU& b) { return {a == b, a.to_string(), b.to_string()}; }
inline CheckOutcome compare(const RatQT& a, const RatQT& b) { return {(a - b).is_zero(), a.to_string(), b.to_string()}; }

/// Compared and displayed in the Schur basis.
inline CheckOutcome compare(const SymFunc& a, const SymFunc& b) {
  const SymFunc sa = symfunc::change_basis(a, Basis::s), sb = symfunc::change_basis(b, Basis::s);
  SymFunc diff = sa;
  diff -= sb;
  return {diff.is_zero(), sa.to_string(), sb.to_string()};
}

inline CheckOutcome all_of(std::initializer_list<CheckOutcome> parts) {
  CheckOutcome r{true, "", ""};
  for (const auto& p : parts) {
    r.pass = r.pass && p.pass;
    r.left += (r.left.empty() ? "" : "; ") + p.left;
    r.right += (r.right.empty() ? "" : "; ") + p.right;
  }
  return r;
}

inline RatQT q_factorial_product(int k) {
  RatQT r(1);
  for (int i = 1; i <= k; ++i) r *= young::one_minus(i, 0);
  return r;
}

inline LaurentQTU tesler_value(int n, int m) { return super_tesler(n, m).laurent(); }

}  // namespace detail

// Proven identities.

inline CheckOutcome route_equivalence(int n, int m) {
  return detail::compare(supertilde_syt(n, m).laurent(), super_tesler(n, m).laurent());
}

/// P~(u,q,1) = sum over Dyck paths of q^{delta - |D|} (1 - u)^{corners}.
inline CheckOutcome t_one_theorem(int n, int m) {
  return detail::compare(supertilde_syt(n, m).laurent().t_to_one(), models::corner_formula(n, m));
}

/// P~(0,q,1/q) = [m+n-1]!/([m]![n]!) with symmetric q-integers.  The
/// half-integer shifts sum to -delta and the (1-q) denominators leave one
/// factor (1-q).
inline CheckOutcome q_factorial(int n, int m) {
  const LaurentQTU lhs = supertilde_syt(n, m).laurent().u_to_zero().t_to_qinv();
  const int delta = (m - 1) * (n - 1) / 2;
  const RatQT rhs = RatQT::monomial(1, -delta, 0) * young::one_minus(1, 0) * detail::q_factorial_product(m + n - 1) /
                    (detail::q_factorial_product(m) * detail::q_factorial_product(n));
  return detail::compare(RatQT::from_laurent(lhs), rhs);
}

inline CheckOutcome unknot(int m) {
  return detail::compare(supertilde_syt(1, m).laurent(), LaurentQTU(1) - LaurentQTU::u());
}

inline CheckOutcome ptilde_e(int n) {
  return detail::compare(ptilde_one(n, 1), SymFunc::element(Basis::e, Partition{n}));
}

inline CheckOutcome ptilde_nabla_e(int n) {
  return detail::compare(ptilde_one(n, n + 1), symfunc::nabla(SymFunc::element(Basis::e, Partition{n})));
}

/// P~_{n,0} on grade d against multiplication by p_n, in the given
/// normalization.  Under Hall the expected operator is (-1)^{n-1} p_n/[n].
inline CheckOutcome pieri(int n, int d, Normalization norm = Normalization::PowerSum) {
  const RatQT scale = norm == Normalization::PowerSum ? RatQT(1) : power_sum_factor(n).inverse();
  const SymFunc pn = SymFunc::element(Basis::p, Partition{n});
  CheckOutcome r{true, "", ""};
  for (const auto& lam : partitions(d)) {
    const SymFunc h = SymFunc::element(Basis::Htilde, lam);
    const CheckOutcome c = detail::compare(apply_operator(n, 1, 0, h, norm), scale * symfunc::multiply(pn, h));
    r = detail::all_of({r, c});
  }
  return r;
}

/// [P~_{0,1}, P~_{n,0}] = P~_{n,1} on grade d, Hall normalization.
inline CheckOutcome commutator(int n, int d) {
  CheckOutcome r{true, "", ""};
  for (const auto& lam : partitions(d)) {
    const SymFunc h = SymFunc::element(Basis::Htilde, lam);
    SymFunc lhs = apply_operator(1, 0, 1, apply_operator(n, 1, 0, h));
    lhs -= apply_operator(n, 1, 0, apply_operator(1, 0, 1, h));
    r = detail::all_of({r, detail::compare(lhs, apply_operator(1, n, 1, h))});
  }
  return r;
}

/// nabla P~_{kn,km} nabla^{-1} = P~_{kn,k(n+m)} on grade d.
inline CheckOutcome nabla_conjugation(int k, int n, int m, int d) {
  CheckOutcome r{true, "", ""};
  for (const auto& lam : partitions(d)) {
    const SymFunc h = SymFunc::element(Basis::Htilde, lam);
    const SymFunc lhs = symfunc::nabla(apply_operator(k, n, m, symfunc::nabla_inverse(h)));
    r = detail::all_of({r, detail::compare(lhs, apply_operator(k, n, n + m, h))});
  }
  return r;
}

inline CheckOutcome duality(int n, int m, const Partition& lam) {
  const Reduced a = reduced_super(n, m, lam.transpose());
  const Reduced b = reduced_super(n, m, lam);
  const UPoly swapped = b.value.value.swap_qt();
  return {a.exact && b.exact && a.value.value == swapped, a.value.to_string(), SuperPoly{n, m, lam, swapped}.to_string()};
}

/// Pi_lam B_lam = (1/M) sum_T c_{n,1}(T) with M = (1-q)(1-t)(qt)^{-n}.
inline CheckOutcome garsia_haiman(const Partition& lam) {
  const int n = lam.size();
  RatQT pi(1), b;
  for (auto box : lam.boxes()) {
    const Weight w = box_weight(box);
    b += w.value();
    if (w.q != 0 || w.t != 0) pi *= RatQT(1) - w.value();
  }
  const RatQT M = young::one_minus(1, 0) * young::one_minus(0, 1) * RatQT::monomial(1, -n, -n);
  return detail::compare(pi * b, syt_coefficient_sum(n, 1, lam) / M);
}

/// P~_{n,m}.1 at t = 1/q in terms of the hook Schur functions, with
/// phi: p_k -> p_k/(1 - q^k) and the prefactor (-1)^{n-1}(1-q) q^{delta+n-1}.
inline CheckOutcome schur_t_qinv(int n, int m) {
  const SymFunc lhs = symfunc::change_basis(ptilde_one(n, m), Basis::s).map_coeffs([](const Partition&, const RatQT& c) { return c.t_to_qinv(); });
  const symfunc::PlethysticMap phi{[](int k) { return young::one_minus(k, 0).inverse(); }};
  SymFunc sum(Basis::s);
  for (int k = 0; k < n; ++k) {
    std::vector<int> hook{n - k};
    hook.insert(hook.end(), k, 1);
    sum += RatQT::monomial(k % 2 ? -1 : 1, -k * m, 0) * symfunc::apply_plethysm(SymFunc::element(Basis::s, Partition(hook)), phi);
  }
  const int delta = (m - 1) * (n - 1) / 2;
  const RatQT pre = RatQT::monomial((n - 1) % 2 ? -1 : 1, delta + n - 1, 0) * young::one_minus(1, 0);
  const SymFunc rhs = symfunc::change_basis(pre * sum, Basis::s);
  SymFunc diff = lhs;
  diff -= rhs;
  return {diff.is_zero(), lhs.to_string(), rhs.to_string()};
}

/// Principal evaluation of J_lam against prod (t^{l'} - u q^{a'}).
inline CheckOutcome evaluation_theorem(const Partition& lam) {
  const UPoly a = symfunc::evaluate_principal(symfunc::macdonald_J(lam)), b = symfunc::j_evaluation(lam);
  return {a == b, a.to_string(), b.to_string()};
}

/// The pairing with the evaluation vector against the principal evaluation,
/// on J_lam and on s_lam.
inline CheckOutcome evalv_consistency(const Partition& lam) {
  CheckOutcome r{true, "", ""};
  for (const SymFunc& f : {symfunc::macdonald_J(lam), SymFunc::element(Basis::s, lam)}) {
    const UPoly a = symfunc::evalv_pairing(f), b = symfunc::evaluate_principal(f);
    r = detail::all_of({r, CheckOutcome{a == b, a.to_string(), b.to_string()}});
  }
  return r;
}

/// #Y_{m/n} = (m+n-1)!/(m!n!), #parking functions = #m-stable affine
/// permutations = m^{n-1}.
inline CheckOutcome counting_anchors(int n, int m) {
  mpz_class dyck_expected, fm, fn, power;
  mpz_fac_ui(dyck_expected.get_mpz_t(), m + n - 1);
  mpz_fac_ui(fm.get_mpz_t(), m);
  mpz_fac_ui(fn.get_mpz_t(), n);
  dyck_expected /= fm * fn;
  mpz_ui_pow_ui(power.get_mpz_t(), m, n - 1);
  const auto dyck = models::enumerate_dyck(n, m).size();
  const auto parking = models::enumerate_parking(n, m).size();
  const auto cells = models::affine_cells(n, m).size();
  auto text = [](auto a, auto b, auto c) { return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c); };
  const bool ok = dyck_expected == dyck && power == parking && power == cells;
  return {ok, text(dyck, parking, cells), dyck_expected.get_str() + "," + power.get_str() + "," + power.get_str()};
}

// Conjecture instances.

/// C_{n,m}(q,t) = sum_lam c_{n,m}(lam)/g_lam = P~_{n,m}(0,q,t).
inline CheckOutcome catalan_conjecture(int n, int m) {
  return detail::compare(models::catalan_qt(n, m), supertilde_syt(n, m).laurent().u_to_zero());
}

inline CheckOutcome catalan_symmetry(int n, int m) {
  const LaurentQTU c = models::catalan_qt(n, m);
  return detail::compare(c, c.swap_qt());
}

inline CheckOutcome schroeder_conjecture(int n, int m) {
  return detail::compare(models::schroeder_sum(n, m), supertilde_syt(n, m).laurent());
}

inline CheckOutcome shuffle_conjecture(int n, int m) {
  return detail::compare(models::frobenius_hikita(n, m), ptilde_one(n, m));
}

inline CheckOutcome qt_symmetry(int n, int m) {
  const LaurentQTU p = detail::tesler_value(n, m);
  return detail::compare(p, p.swap_qt());
}

inline CheckOutcome mn_symmetry(int n, int m) {
  return detail::compare(detail::tesler_value(n, m), detail::tesler_value(m, n));
}

/// Cell dimensions against delta - dinv over parking functions, as multisets.
inline CheckOutcome springer(int n, int m) {
  std::map<int, int> dims, codinv;
  for (const auto& c : models::affine_cells(n, m)) ++dims[c.dimension];
  const int delta = (m - 1) * (n - 1) / 2;
  for (const auto& f : models::enumerate_parking(n, m)) ++codinv[delta - f.dinv];
  auto text = [](const std::map<int, int>& h) {
    std::string s;
    for (const auto& [k, v] : h) s += (s.empty() ? "" : ",") + std::to_string(k) + ":" + std::to_string(v);
    return "{" + s + "}";
  };
  return {dims == codinv, text(dims), text(codinv)};
}

}  // namespace superpoly::knots
