#pragma once

// Operators P~_{kn,km} on the fixed-point basis, identified with the modified
// Macdonald basis H~.  A block stores expansion coefficients E with
// P~ H~_lam = sum_mu E[mu][lam] H~_mu.  The tableau formula computes the
// geometric coefficient (I_mu | P~ | I_lam); the two differ by the nabla
// eigenvalue ratio T_mu / T_lam.

#include <map>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "superpoly/symfunc/macdonald.hpp"
#include "superpoly/util/cache.hpp"
#include "superpoly/young/tableau.hpp"

namespace superpoly::knots {

using algebra::LaurentQTU;
using algebra::Rat;
using algebra::RatQT;
using algebra::UPoly;
using symfunc::Basis;
using symfunc::SymFunc;
using young::Partition;
using young::partitions;

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// S_{m/n}(i) = floor(im/n) - floor((i-1)m/n) for i = 1..len.
inline std::vector<int> slope_profile(int n, int m, int len) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "slope profile needs n >= 1");
  std::vector<int> s;
  for (int i = 1; i <= len; ++i) s.push_back(static_cast<int>(floor_div(long(i) * m, n) - floor_div(long(i - 1) * m, n)));
  return s;
}

inline void require_coprime(int n, int m) {
  if (std::gcd(n, m) != 1) fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(m) + ") != 1");
}

/// gamma = (q-1)(t-1)/(qt(qt-1))
inline RatQT gamma() {
  static const RatQT g = RatQT::parse("(1-q-t+q*t)/(-q*t+q^2*t^2)");
  return g;
}

/// [k] = (q^k-1)(t^k-1)/((q-1)(t-1))
inline RatQT qt_integer(int k) {
  return young::one_minus(k, 0) * young::one_minus(0, k) / (young::one_minus(1, 0) * young::one_minus(0, 1));
}

struct Weight {
  int q = 0, t = 0;
  Weight operator/(const Weight& o) const { return {q - o.q, t - o.t}; }
  Weight operator*(const Weight& o) const { return {q + o.q, t + o.t}; }
  RatQT value() const { return RatQT::monomial(1, q, t); }
};

inline Weight box_weight(std::pair<int, int> box) { return {box.first - 1, box.second - 1}; }

/// c * x^a - d * x^b as a polynomial factor (monomials in q, t).
inline RatQT binom(Weight a, const Rat& c, Weight b, const Rat& d) {
  return RatQT::monomial(c, a.q, a.t) - RatQT::monomial(d, b.q, b.t);
}

namespace detail {

/// Accumulates a product as separate numerator and denominator so that the
/// reduction to lowest terms happens once per summand.
struct Product {
  RatQT num{1}, den{1};
  void mul(const RatQT& x) { num *= x; }
  void div(const RatQT& x) {
    if (x.is_zero()) fail(ErrorKind::ZeroDenominator, "pole in a tableau summand");
    den *= x;
  }
  RatQT value() const { return num / den; }
};

/// omega^{-1}(x) = (x-q)(x-t)/((x-1)(x-qt))
inline void mul_omega_inv(Product& p, Weight x) {
  p.mul(binom(x, 1, {1, 0}, 1) * binom(x, 1, {0, 1}, 1));
  p.div(binom(x, 1, {0, 0}, 1) * binom(x, 1, {1, 1}, 1));
}

}  // namespace detail

/// The tableau summand of the fix3 formula without the gamma^{kn}/[k] and
/// g ratio prefactors.  chi[0] is the weight of the box labelled 1, which is
/// the last box added; inner lists the boxes of the starting diagram.
inline RatQT fix3_summand(int k, int n, int m, const std::vector<Weight>& chi, const std::vector<Weight>& inner) {
  const int N = static_cast<int>(chi.size());
  const std::vector<int> S = slope_profile(n, m, N);
  detail::Product p;
  RatQT bracket;
  for (int j = 0; j < k; ++j) {
    Weight w{j, j};
    for (int s = 1; s <= j; ++s) w = w * (chi[n * (k - s)] / chi[n * (k - s) - 1]);
    bracket += w.value();
  }
  p.mul(bracket);
  for (int i = 0; i < N; ++i) {
    p.mul(RatQT::monomial(1, chi[i].q * S[i], chi[i].t * S[i]));
    p.mul(binom(chi[i] * Weight{1, 1}, 1, {0, 0}, 1));
  }
  for (int i = 0; i + 1 < N; ++i) p.div(binom({0, 0}, 1, Weight{1, 1} * (chi[i + 1] / chi[i]), 1));
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) detail::mul_omega_inv(p, chi[j] / chi[i]);
    for (const Weight& b : inner) detail::mul_omega_inv(p, b / chi[i]);
  }
  return p.value();
}

/// Weights chi_1..chi_N from an addition order: the last-added box is chi_1.
inline std::vector<Weight> labelled_weights(const std::vector<std::pair<int, int>>& added) {
  std::vector<Weight> chi;
  for (auto it = added.rbegin(); it != added.rend(); ++it) chi.push_back(box_weight(*it));
  return chi;
}

/// c_{n,m}(T) for a standard tableau T of a straight shape with n boxes.
inline RatQT syt_coefficient(int n, int m, const young::Tableau& T) {
  require_coprime(n, m);
  if (!T.inner().empty() || static_cast<int>(T.length()) != n)
    fail(ErrorKind::ShapeMismatch, "tableau must be a straight shape of size n");
  return gamma().pow(n) * fix3_summand(1, n, m, labelled_weights(T.added), {});
}

/// c_{n,m}(lam), the sum over standard tableaux of shape lam.
inline RatQT syt_coefficient_sum(int n, int m, const Partition& lam) {
  require_coprime(n, m);
  if (lam.size() != n) fail(ErrorKind::ShapeMismatch, "shape size differs from n");
  std::vector<RatQT> terms;
  young::for_each_chain(Partition{}, lam, [&](const std::vector<std::pair<int, int>>& added) {
    terms.push_back(fix3_summand(1, n, m, labelled_weights(added), {}));
  });
  return gamma().pow(n) * algebra::sum(std::move(terms));
}

/// Closed formula for c_{n,m}(k, 1^{n-k}).
inline RatQT hook_coefficient(int n, int m, int k) {
  require_coprime(n, m);
  if (k < 1 || k > n) fail(ErrorKind::InvalidArgument, "hook arm must satisfy 1 <= k <= n");
  RatQT r = young::one_minus(1, 0) * young::one_minus(0, 1) * RatQT::monomial(1, -n, -n);
  for (int i = 1; i < k; ++i) r *= young::one_minus(i, 0);
  for (int i = 1; i <= n - k; ++i) r *= young::one_minus(0, i);
  RatQT s;
  for (int i = 0; i < n; ++i) {
    long qe = 0, te = 0;
    for (int j = 0; j < k; ++j) qe += floor_div(long(m) * j + i, n);
    for (int j = 1; j <= n - k; ++j) te += -floor_div(-(long(m) * j - i), n);
    s += RatQT::monomial(1, static_cast<int>(qe), static_cast<int>(te));
  }
  return r * s;
}

/// Expansion coefficients of one operator between grades d and d + kn.
struct OperatorBlock {
  int k = 1, n = 0, m = 1, d = 0;
  std::map<Partition, std::map<Partition, RatQT>> E;  // E[mu][lam]

  RatQT entry(const Partition& mu, const Partition& lam) const {
    auto it = E.find(mu);
    if (it == E.end()) return {};
    auto jt = it->second.find(lam);
    return jt == it->second.end() ? RatQT() : jt->second;
  }
  /// (I_mu | P~ | I_lam) times g_mu: the tableau sum with its gamma and g_lam
  /// prefactors but without the division by g_mu.
  RatQT matrix_coefficient(const Partition& mu, const Partition& lam) const {
    return young::hook_products(mu).g * symfunc::nabla_eigenvalue(mu) / symfunc::nabla_eigenvalue(lam) * entry(mu, lam);
  }
  int target_grade() const { return d + k * n; }
};

namespace detail {

inline OperatorBlock cartan_block(int k, int d) {
  OperatorBlock b{k, 0, 1, d, {}};
  const RatQT base = RatQT::monomial(1, k, k) / (young::one_minus(k, 0) * young::one_minus(0, k));
  for (const auto& lam : partitions(d)) {
    RatQT x = base;
    for (auto box : lam.boxes()) {
      const Weight w = box_weight(box);
      x += RatQT::monomial(1, w.q * k, w.t * k);
    }
    b.E[lam][lam] = x;
  }
  return b;
}

inline OperatorBlock fix3_block(int k, int n, int m, int d) {
  OperatorBlock b{k, n, m, d, {}};
  const int N = k * n;
  const RatQT pre = gamma().pow(N) / qt_integer(k);
  for (const auto& lam : partitions(d)) {
    std::vector<Weight> inner;
    for (auto box : lam.boxes()) inner.push_back(box_weight(box));
    std::map<Partition, std::vector<RatQT>> terms;
    young::for_each_growth(lam, N, [&](const Partition& mu, const std::vector<std::pair<int, int>>& added) {
      terms[mu].push_back(fix3_summand(k, n, m, labelled_weights(added), inner));
    });
    const RatQT g_lam = young::hook_products(lam).g;
    const RatQT t_lam = symfunc::nabla_eigenvalue(lam);
    for (auto& [mu, list] : terms) {
      const RatQT total = algebra::sum(std::move(list));
      if (total.is_zero()) continue;
      b.E[mu][lam] = pre * g_lam * t_lam / (young::hook_products(mu).g * symfunc::nabla_eigenvalue(mu)) * total;
    }
  }
  return b;
}

}  // namespace detail

/// Hall: the tableau formula with prefactor gamma^{kn}/[k]; this is the
/// normalization in which [P~_{0,1}, P~_{n,0}] = P~_{n,1}.  PowerSum rescales
/// by (-1)^{k-1}[k], so that P~_{k,0} is multiplication by p_k; plethystic
/// substitutions p_k -> P~_{kn,km} use this one.
enum class Normalization { Hall, PowerSum };

inline RatQT power_sum_factor(int k) { return (k % 2 == 1 ? RatQT(1) : RatQT(-1)) * qt_integer(k); }

/// The block of P~_{kn,km} from grade d.  n = 0 means the Cartan operator
/// P~_{0,k} (m must be 1).  Requires gcd(n, m) = 1 when n > 0.
inline const OperatorBlock& operator_block(int k, int n, int m, int d, Normalization norm = Normalization::Hall) {
  if (k < 1 || n < 0 || d < 0) fail(ErrorKind::InvalidArgument, "operator block needs k >= 1, n >= 0, d >= 0");
  if (n == 0 && m != 1) fail(ErrorKind::InvalidArgument, "only the Cartan operators P~_{0,k} are supported for n = 0");
  if (n > 0) require_coprime(n, m);
  symfunc::check_degree(d + k * n);
  if (n > 0 && norm == Normalization::PowerSum) {
    static util::ConcurrentCache<std::tuple<int, int, int, int>, OperatorBlock> scaled;
    return scaled.get({k, n, m, d}, [=] {
      OperatorBlock b = operator_block(k, n, m, d);
      const RatQT f = power_sum_factor(k);
      for (auto& [mu, row] : b.E) {
        for (auto& [lam, e] : row) e *= f;
      }
      return b;
    });
  }
  static util::ConcurrentCache<std::tuple<int, int, int, int>, OperatorBlock> cache;
  return cache.get({k, n, m, d}, [=] { return n == 0 ? detail::cartan_block(k, d) : detail::fix3_block(k, n, m, d); });
}

/// Applies P~_{kn,km} to f, returned in the H~ basis.
inline SymFunc apply_operator(int k, int n, int m, const SymFunc& f, Normalization norm = Normalization::Hall) {
  const SymFunc h = symfunc::change_basis(f, Basis::Htilde);
  SymFunc out(Basis::Htilde);
  for (int d : h.degrees()) {
    const OperatorBlock& b = operator_block(k, n, m, d, norm);
    for (const auto& [mu, row] : b.E) {
      for (const auto& [lam, e] : row) {
        const RatQT c = h.coeff(lam);
        if (!c.is_zero()) out.add_term(mu, e * c);
      }
    }
  }
  return out;
}

/// P~_{n,m} . 1 = sum_lam c_{n,m}(lam) H~_lam / (g_lam T_lam).
inline SymFunc ptilde_one(int n, int m) {
  require_coprime(n, m);
  SymFunc out(Basis::Htilde);
  for (const auto& lam : partitions(n)) {
    out.add_term(lam, syt_coefficient_sum(n, m, lam) / (young::hook_products(lam).g * symfunc::nabla_eigenvalue(lam)));
  }
  return out;
}

}  // namespace superpoly::knots
