#pragma once

// Rational m/n Dyck paths as Young diagrams inscribed in the triangle with
// vertices (0,0), (m,0), (0,n), with the statistics h_+, corners and beta.

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "superpoly/algebra/laurent.hpp"
#include "superpoly/errors.hpp"

namespace superpoly::models {

using algebra::LaurentQTU;

inline void require_coprime(int n, int m) {
  if (n < 1 || m < 1) fail(ErrorKind::InvalidArgument, "n and m must be positive");
  if (std::gcd(n, m) != 1) fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(m) + ") != 1");
}

/// Box (c, r), 0-based column and row, lies under the diagonal.
inline bool under_diagonal(int n, int m, int c, int r) { return n * (c + 1) + m * (r + 1) <= m * n; }

/// A valley of the path: the lattice point where a horizontal run starts.
struct Vertex {
  int x = 0, y = 0;
};

struct DyckPath {
  int n = 0, m = 0;
  std::vector<int> rows;  // rows[r] = length of row r, bottom row first; size n

  int size() const { return std::accumulate(rows.begin(), rows.end(), 0); }
  int delta() const { return (m - 1) * (n - 1) / 2; }
  int area() const { return delta() - size(); }

  int row(int r) const { return r >= 0 && r < n ? rows[r] : 0; }
  int arm(int c, int r) const { return rows[r] - c - 1; }
  int leg(int c, int r) const {
    int l = 0;
    for (int s = r + 1; s < n && rows[s] > c; ++s) ++l;
    return l;
  }

  /// Length of the horizontal run of the path at height y (y = 0..n-1).
  int run(int y) const { return (y == 0 ? m : rows[y - 1]) - rows[y]; }

  /// Boxes with a/(l+1) < m/n < (a+1)/l, the right inequality vacuous at l = 0.
  int h_plus() const {
    int h = 0;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < rows[r]; ++c) {
        const int a = arm(c, r), l = leg(c, r);
        if (a * n < m * (l + 1) && (l == 0 || m * l < n * (a + 1))) ++h;
      }
    }
    return h;
  }

  /// Start points of the horizontal runs, bottom run first.
  std::vector<Vertex> valleys() const {
    std::vector<Vertex> v;
    for (int y = 0; y < n; ++y) {
      if (run(y) > 0) v.push_back({rows[y], y});
    }
    return v;
  }

  int corners() const { return static_cast<int>(valleys().size()); }

  /// Number of unit horizontal steps met by the line through P parallel to
  /// the diagonal, not counting the step that starts at P.
  int beta(const Vertex& p) const {
    const long k = long(n) * p.x + long(m) * p.y;
    int b = 0;
    for (int y = 0; y < n; ++y) {
      for (int x = rows[y]; x < rows[y] + run(y); ++x) {
        if (x == p.x && y == p.y) continue;
        const long lo = long(n) * x + long(m) * y;
        if (lo <= k && k <= lo + n) ++b;
      }
    }
    return b;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i]);
    return s + "]";
  }
};

/// Every m/n Dyck path, in decreasing lexicographic order of row vectors.
inline std::vector<DyckPath> enumerate_dyck(int n, int m) {
  require_coprime(n, m);
  std::vector<DyckPath> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int r, int prev) {
    if (r == n) {
      out.push_back({n, m, cur});
      return;
    }
    int cap = 0;
    while (under_diagonal(n, m, cap, r)) ++cap;
    for (int v = std::min(prev, cap); v >= 0; --v) {
      cur.push_back(v);
      rec(r + 1, v);
      cur.pop_back();
    }
  };
  rec(0, m);
  return out;
}

/// C_{n,m}(q,t) = sum q^{delta - |D|} t^{h_+(D)}.
inline LaurentQTU catalan_qt(int n, int m) {
  LaurentQTU r;
  for (const auto& d : enumerate_dyck(n, m)) r += LaurentQTU::term(1, d.area(), d.h_plus());
  return r;
}

/// sum q^{delta - |D|} t^{h_+(D)} prod_{P valley} (1 - u t^{-beta(P)}).
inline LaurentQTU schroeder_sum(int n, int m) {
  LaurentQTU r;
  for (const auto& d : enumerate_dyck(n, m)) {
    LaurentQTU w = LaurentQTU::term(1, d.area(), d.h_plus());
    for (const auto& p : d.valleys()) w *= LaurentQTU(1) - LaurentQTU::term(1, 0, -d.beta(p), 1);
    r += w;
  }
  return r;
}

/// The t = 1 corner formula: sum q^{delta - |D|} (1 - u)^{corners(D)}.
inline LaurentQTU corner_formula(int n, int m) {
  LaurentQTU r;
  const LaurentQTU one_minus_u = LaurentQTU(1) - LaurentQTU::u();
  for (const auto& d : enumerate_dyck(n, m)) r += LaurentQTU::term(1, d.area(), 0) * one_minus_u.pow(d.corners());
  return r;
}

}  // namespace superpoly::models
