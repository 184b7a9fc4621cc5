#pragma once

// Graded Frobenius character of the finite-dimensional rational Cherednik
// algebra representation L_{m/n}.

#include <numeric>

#include "superpoly/symfunc/macdonald.hpp"

namespace superpoly::symfunc {

/// q^{-(m-1)(n-1)/2} (1 - q)/(1 - q^m) phi_{[m]}(h_n), in the Schur basis.
/// The q-integer here is the unsymmetrized one; that is the normalization
/// under which the character is invariant under q -> 1/q.
inline SymFunc cherednik_character(int n, int m) {
  if (n < 1 || m < 1) fail(ErrorKind::InvalidArgument, "n and m must be positive");
  if (std::gcd(n, m) != 1) fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(m) + ") != 1");
  const int delta = (m - 1) * (n - 1) / 2;
  const RatQT scale = RatQT::monomial(1, -delta, 0) * young::one_minus(1, 0) / young::one_minus(m, 0);
  const SymFunc h = SymFunc::element(Basis::h, Partition{n});
  return scale * change_basis(apply_plethysm(h, PlethysticMap::q_integer(m)), Basis::s);
}

/// <ch, p_1^n> at q = 1: the dimension of the underlying representation.
inline Rat cherednik_dimension(const SymFunc& ch) {
  const int n = ch.max_degree();
  const RatQT x = hall_pairing(ch, SymFunc::element(Basis::p, Partition(std::vector<int>(n, 1))));
  return x.q_to_one().as_laurent().value_at_one();
}

}  // namespace superpoly::symfunc
