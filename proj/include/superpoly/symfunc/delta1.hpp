#pragma once

// The first Macdonald difference operator acting on symmetric polynomials in
// N variables.  Used as an independent check on the P basis.

#include <algorithm>
#include <map>
#include <vector>

#include "superpoly/symfunc/macdonald.hpp"

namespace superpoly::symfunc {

/// Polynomial in x_1..x_N keyed by exponent vectors.
using MPoly = std::map<std::vector<int>, RatQT>;

inline void add_to(MPoly& p, const std::vector<int>& e, const RatQT& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_to(r, e, ca * cb);
    }
  }
  return r;
}

/// c1 x_a + c2 x_b.
inline MPoly binomial(int N, int a, const RatQT& c1, int b, const RatQT& c2) {
  MPoly r;
  std::vector<int> ea(N, 0), eb(N, 0);
  ea[a] = 1;
  eb[b] = 1;
  add_to(r, ea, c1);
  add_to(r, eb, c2);
  return r;
}

/// Exact quotient by (x_a - x_b); throws NotPolynomial if it does not divide.
inline MPoly divide_difference(MPoly p, int a, int b) {
  MPoly q;
  while (!p.empty()) {
    auto top = p.begin();
    for (auto it = p.begin(); it != p.end(); ++it) {
      if (it->first[a] > top->first[a]) top = it;
    }
    if (top->first[a] == 0) fail(ErrorKind::NotPolynomial, "not divisible by a variable difference");
    std::vector<int> e = top->first;
    const RatQT c = top->second;
    --e[a];
    add_to(q, e, c);
    p.erase(top);
    ++e[b];
    add_to(p, e, c);
  }
  return q;
}

/// f restricted to N variables, via its monomial expansion.
inline MPoly restrict_to_variables(const SymFunc& f, int N) {
  MPoly r;
  const SymFunc fm = change_basis(f, Basis::m);
  for (const auto& [lam, c] : fm.terms()) {
    if (lam.length() > N) continue;
    std::vector<int> e(lam.parts());
    e.resize(N, 0);
    std::sort(e.begin(), e.end());
    do {
      add_to(r, e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return r;
}

/// delta_1 f = sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) f(.., q x_i, ..).
inline MPoly delta1_oracle(const MPoly& f, int N) {
  if (N < 1 || N > 4) fail(ErrorKind::TooLarge, "delta1 oracle supports 1 <= N <= 4");
  for (const auto& [e, c] : f) {
    int d = 0;
    for (int x : e) d += x;
    if (static_cast<int>(e.size()) != N) fail(ErrorKind::ShapeMismatch, "exponent vector length differs from N");
    if (d > 6) fail(ErrorKind::TooLarge, "delta1 oracle supports degree <= 6");
  }
  // 1/prod_{j != i}(x_i - x_j) = (-1)^i V_i / V, with V the Vandermonde
  // prod_{a<b}(x_a - x_b) and V_i the same product without index i.
  MPoly numerator;
  for (int i = 0; i < N; ++i) {
    MPoly term;
    for (const auto& [e, c] : f) add_to(term, e, c * RatQT::monomial(1, e[i], 0));
    for (int j = 0; j < N; ++j) {
      if (j != i) term = mpoly_mul(term, binomial(N, i, RatQT::t(), j, RatQT(-1)));
    }
    for (int a = 0; a < N; ++a) {
      for (int b = a + 1; b < N; ++b) {
        if (a != i && b != i) term = mpoly_mul(term, binomial(N, a, RatQT(1), b, RatQT(-1)));
      }
    }
    for (const auto& [e, c] : term) add_to(numerator, e, i % 2 == 0 ? c : -c);
  }
  for (int a = 0; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) numerator = divide_difference(std::move(numerator), a, b);
  }
  return numerator;
}

/// sum_i t^{N-i} q^{lam_i}
inline RatQT delta1_eigenvalue(const Partition& lam, int N) {
  RatQT r;
  for (int i = 1; i <= N; ++i) r += RatQT::monomial(1, lam.row(i), N - i);
  return r;
}

}  // namespace superpoly::symfunc
