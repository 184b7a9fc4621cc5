#pragma once

// m/n parking functions as labelings of the cells (rows[r], r) just right of
// a Dyck path, their dinv and descent statistics, and Hikita's symmetric
// function Fr_{n,m} through Gessel's quasisymmetric functions.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "superpoly/models/dyck.hpp"
#include "superpoly/symfunc/symfunc.hpp"

namespace superpoly::models {

using algebra::RatQT;
using symfunc::Basis;
using symfunc::SymFunc;
using young::Partition;

/// Readings of the pair count s(F).  diagonal_rank picks the rank of a cell.
/// swapped: count x > y with r(F(x)) < r(F(y)) < r(F(x)) + w, otherwise
/// r(F(y)) < r(F(x)) < r(F(y)) + w.  The window w is m or n.
struct ParkingConvention {
  bool swapped = true;
  bool window_m = true;
  bool diagonal_rank = true;
};

struct ParkingFunction {
  DyckPath path;
  std::vector<int> labels;  // labels[r] = label of the cell in row r, 1..n
  int s = 0, dinv = 0;
  std::set<int> descents;

  int area() const { return path.area(); }
};

/// r(i,j) = mn - m - n - m*i - n*j for the labelled cell in row i, column j.
/// With diagonal = false the box is read as (column, row) instead.
inline int rank_of_cell(const DyckPath& d, int row, bool diagonal = true) {
  const int c = d.rows[row];
  return d.m * d.n - d.m - d.n - (diagonal ? d.n * c + d.m * row : d.m * c + d.n * row);
}

namespace detail {

inline int pair_count(const DyckPath& d, const std::vector<int>& labels, const ParkingConvention& conv) {
  const int n = d.n;
  std::vector<int> r_of(n + 1);
  for (int row = 0; row < n; ++row) r_of[labels[row]] = rank_of_cell(d, row, conv.diagonal_rank);
  const int w = conv.window_m ? d.m : d.n;
  int s = 0;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y < x; ++y) {
      const int a = conv.swapped ? r_of[x] : r_of[y];
      const int b = conv.swapped ? r_of[y] : r_of[x];
      if (a < b && b < a + w) ++s;
    }
  }
  return s;
}

inline std::set<int> descent_set(const DyckPath& d, const std::vector<int>& labels, bool diagonal) {
  const int n = d.n;
  std::vector<int> r_of(n + 1);
  for (int row = 0; row < n; ++row) r_of[labels[row]] = rank_of_cell(d, row, diagonal);
  std::set<int> des;
  for (int x = 1; x < n; ++x) {
    if (r_of[x] > r_of[x + 1]) des.insert(x);
  }
  return des;
}

}  // namespace detail

/// Labelings increasing up each column.
inline std::vector<std::vector<int>> column_increasing_labelings(const DyckPath& d) {
  std::vector<int> perm(d.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int r = 0; r + 1 < d.n && ok; ++r) {
      if (d.rows[r] == d.rows[r + 1] && perm[r] > perm[r + 1]) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// All parking functions on all paths; dinv = s + h_+ - s_max.
inline std::vector<ParkingFunction> enumerate_parking(int n, int m, const ParkingConvention& conv = {}) {
  if (n > 8) fail(ErrorKind::TooLarge, "parking enumeration supports n <= 8");
  std::vector<ParkingFunction> out;
  for (const auto& d : enumerate_dyck(n, m)) {
    const int hp = d.h_plus();
    std::vector<ParkingFunction> here;
    int smax = 0;
    for (auto& lab : column_increasing_labelings(d)) {
      ParkingFunction f{d, lab, detail::pair_count(d, lab, conv), 0, detail::descent_set(d, lab, conv.diagonal_rank)};
      smax = std::max(smax, f.s);
      here.push_back(std::move(f));
    }
    for (auto& f : here) {
      f.dinv = f.s + hp - smax;
      out.push_back(std::move(f));
    }
  }
  return out;
}

/// Coefficient extraction: Q_S contributes to the monomial x^alpha exactly
/// when S is contained in the partial sums of the composition alpha.
inline SymFunc frobenius_hikita(int n, int m, const ParkingConvention& conv = {}) {
  symfunc::check_degree(n);
  std::map<std::set<int>, algebra::LaurentQTU> by_descent;
  for (const auto& f : enumerate_parking(n, m, conv)) by_descent[f.descents] += algebra::LaurentQTU::term(1, f.area(), f.dinv);

  std::map<std::vector<int>, algebra::LaurentQTU> coeff;
  // compositions of n via subsets of {1..n-1}
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::set<int> cuts;
    std::vector<int> alpha;
    int last = 0;
    for (int i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) {
        cuts.insert(i);
        alpha.push_back(i - last);
        last = i;
      }
    }
    alpha.push_back(n - last);
    algebra::LaurentQTU c;
    for (const auto& [des, w] : by_descent) {
      if (std::includes(cuts.begin(), cuts.end(), des.begin(), des.end())) c += w;
    }
    coeff[alpha] = c;
  }
  SymFunc out(Basis::m);
  for (const auto& [alpha, c] : coeff) {
    std::vector<int> sorted = alpha;
    std::sort(sorted.rbegin(), sorted.rend());
    if (coeff.at(sorted) != c) fail(ErrorKind::NotSymmetric, "parking sum is not symmetric");
    if (alpha == sorted && !c.is_zero()) out.add_term(Partition(sorted), RatQT::from_laurent(c));
  }
  return out;
}

}  // namespace superpoly::models
