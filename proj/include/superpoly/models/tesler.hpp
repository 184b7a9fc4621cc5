#pragma once

// Tesler matrices as combinatorial objects: the quasi-diagonal flag and the
// projection to Dyck paths through the diagonal partial sums.

#include <vector>

#include "superpoly/knots/tesler.hpp"
#include "superpoly/models/dyck.hpp"

namespace superpoly::models {

using knots::TeslerMatrix;

struct TeslerTerm {
  TeslerMatrix x;
  bool quasi_diagonal = false;  // x[i][j] = 0 whenever j > i + 1
  LaurentQTU weight;

  int diagonal(int i) const { return x[i][i]; }
};

inline bool is_quasi_diagonal(const TeslerMatrix& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 2; j < x.size(); ++j) {
      if (x[i][j] != 0) return false;
    }
  }
  return true;
}

/// Every m/n Tesler matrix in the order of the row-by-row search.
inline std::vector<TeslerTerm> tesler_enumerate(int n, int m) {
  require_coprime(n, m);
  std::vector<TeslerTerm> out;
  knots::for_each_tesler(n, m, [&](const TeslerMatrix& x) { out.push_back({x, is_quasi_diagonal(x), knots::tesler_weight(x)}); });
  return out;
}

/// The path whose run at height n - i is x_i^i, so row r has length
/// x_1^1 + ... + x_{n-1-r}^{n-1-r} (1-based).
inline DyckPath tesler_projection(int n, int m, const TeslerMatrix& x) {
  DyckPath d{n, m, std::vector<int>(n, 0)};
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n - 1 - r; ++i) d.rows[r] += x[i][i];
  }
  return d;
}

}  // namespace superpoly::models
