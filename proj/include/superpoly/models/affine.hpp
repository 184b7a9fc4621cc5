#pragma once

// m-stable affine permutations, which index the cells of the affine Springer
// fiber, with the dimension of each cell.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "superpoly/models/dyck.hpp"

namespace superpoly::models {

/// omega(x + n) = omega(x) + n, determined by the window omega(1..n).
struct AffinePerm {
  std::vector<int> window;

  int n() const { return static_cast<int>(window.size()); }

  int operator()(int x) const {
    const int len = n();
    const int r = ((x - 1) % len + len) % len;
    return window[r] + (x - 1 - r) / len * len;
  }

  bool is_stable(int m) const {
    for (int x = 1; x <= n(); ++x) {
      if ((*this)(x + m) <= (*this)(x)) return false;
    }
    return true;
  }

  /// #{(i,j) : 1 <= j <= n, 0 < i - j < m, omega(i) < omega(j)}.
  int dimension(int m) const {
    int d = 0;
    for (int j = 1; j <= n(); ++j) {
      for (int i = j + 1; i < j + m; ++i) {
        if ((*this)(i) < (*this)(j)) ++d;
      }
    }
    return d;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < window.size(); ++i) s += (i ? "," : "") + std::to_string(window[i]);
    return s + "]";
  }
};

struct AffineCell {
  AffinePerm perm;
  int dimension = 0;
};

/// Windows with |omega(i) - i| <= m + n, distinct residues mod n and
/// sum n(n+1)/2, filtered by m-stability; lexicographic order.
inline std::vector<AffineCell> affine_cells(int n, int m) {
  require_coprime(n, m);
  if (n > 4 || m > 7) fail(ErrorKind::TooLarge, "affine cells are enumerated for n <= 4, m <= 7");
  const int bound = m + n;
  const int target = n * (n + 1) / 2;
  std::vector<AffineCell> out;
  std::vector<int> w;
  std::vector<bool> used(n, false);
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i > n) {
      if (sum != target) return;
      AffinePerm p{w};
      if (p.is_stable(m)) out.push_back({p, p.dimension(m)});
      return;
    }
    for (int v = i - bound; v <= i + bound; ++v) {
      const int r = ((v % n) + n) % n;
      if (used[r]) continue;
      used[r] = true;
      w.push_back(v);
      rec(i + 1, sum + v);
      w.pop_back();
      used[r] = false;
    }
  };
  rec(1, 0);
  return out;
}

/// sum over cells of q^dim.
inline LaurentQTU cell_poincare(int n, int m) {
  LaurentQTU r;
  for (const auto& c : affine_cells(n, m)) r += LaurentQTU::term(1, c.dimension, 0);
  return r;
}

}  // namespace superpoly::models
