#pragma once

// Transition matrices between the power sums and the classical bases
// m, e, h, s in a single degree.  Entries are rational numbers.

#include <map>
#include <vector>

#include "superpoly/symfunc/symfunc.hpp"
#include "superpoly/util/cache.hpp"

namespace superpoly::symfunc {

/// Row lam holds the expansion of the basis element indexed by lam.
using Matrix = std::map<Partition, Terms>;

struct Transition {
  Matrix to_p;    // basis element -> p expansion
  Matrix from_p;  // p_rho -> basis expansion
};

namespace detail {

using RatRow = std::map<Partition, Rat>;
using RatMatrix = std::map<Partition, RatRow>;

inline Matrix to_ratqt(const RatMatrix& m) {
  Matrix out;
  for (const auto& [lam, row] : m) {
    Terms& t = out[lam];
    for (const auto& [mu, c] : row) {
      if (sgn(c) != 0) t.emplace(mu, RatQT(c));
    }
  }
  return out;
}

/// Inverse of a square matrix over Q indexed by partitions of n.
inline RatMatrix invert(const RatMatrix& a, const std::vector<Partition>& index) {
  const std::size_t n = index.size();
  std::map<Partition, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[index[i]] = i;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    auto it = a.find(index[i]);
    if (it != a.end()) {
      for (const auto& [mu, c] : it->second) m[i][pos.at(mu)] = c;
    }
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) fail(ErrorKind::NonInvertible, "singular transition matrix");
    std::swap(m[piv], m[c]);
    const Rat inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const Rat f = m[r][c];
      for (std::size_t k = c; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  RatMatrix out;
  for (std::size_t i = 0; i < n; ++i) {
    RatRow& row = out[index[i]];
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(m[i][n + j]) != 0) row[index[j]] = m[i][n + j];
    }
  }
  return out;
}

/// Coefficient of m_lam in p_rho: the number of ways to distribute the parts
/// of rho into the rows of lam so that each row sum matches.  Sizes agree, so
/// placing every part without overflow fills each row exactly.
inline Rat p_in_m(const Partition& rho, const Partition& lam) {
  std::vector<int> room(lam.parts());
  const auto& parts = rho.parts();
  long count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == parts.size()) {
      ++count;
      return;
    }
    for (auto& r : room) {
      if (r >= parts[i]) {
        r -= parts[i];
        self(self, i + 1);
        r += parts[i];
      }
    }
  };
  rec(rec, 0);
  return Rat(count);
}

/// e_n (sign = true) or h_n in the p basis.
inline RatRow elementary_or_complete(int n, bool sign) {
  RatRow row;
  for (const auto& rho : partitions(n)) {
    Rat c(mpz_class(1), rho.z());
    c.canonicalize();
    if (sign && (n - rho.length()) % 2 != 0) c = -c;
    row[rho] = c;
  }
  return row;
}

inline RatRow multiply_rows(const RatRow& a, const RatRow& b) {
  RatRow r;
  for (const auto& [la, ca] : a) {
    for (const auto& [lb, cb] : b) r[join(la, lb)] += ca * cb;
  }
  return r;
}

/// Character of the irreducible S_n representation lam on cycle type rho,
/// by the Murnaghan-Nakayama rule on beta numbers.
inline long character(const Partition& lam, const Partition& rho) {
  std::vector<int> beta;
  const int l = lam.length();
  for (int i = 0; i < l; ++i) beta.push_back(lam.parts()[i] + (l - 1 - i));
  const auto& parts = rho.parts();
  auto rec = [&](auto&& self, std::vector<int>& b, std::size_t i) -> long {
    if (i == parts.size()) return 1;
    const int k = parts[i];
    long total = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const int to = b[j] - k;
      if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
      int between = 0;
      for (int x : b) between += (x > to && x < b[j]);
      const int from = b[j];
      b[j] = to;
      const long sub = self(self, b, i + 1);
      b[j] = from;
      total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
  };
  return rec(rec, beta, 0);
}

inline Transition classical(Basis b, int n) {
  const std::vector<Partition> parts = partitions(n);
  RatMatrix to_p, from_p;
  switch (b) {
    case Basis::p:
      for (const auto& lam : parts) to_p[lam][lam] = from_p[lam][lam] = 1;
      break;
    case Basis::m: {
      RatMatrix p_to_m;
      for (const auto& rho : parts) {
        for (const auto& lam : parts) {
          Rat c = p_in_m(rho, lam);
          if (sgn(c) != 0) p_to_m[rho][lam] = c;
        }
      }
      from_p = p_to_m;
      to_p = invert(p_to_m, parts);
      break;
    }
    case Basis::e:
    case Basis::h: {
      std::map<int, RatRow> single;
      for (int k = 1; k <= n; ++k) single[k] = elementary_or_complete(k, b == Basis::e);
      for (const auto& lam : parts) {
        RatRow row{{Partition{}, Rat(1)}};
        for (int k : lam.parts()) row = multiply_rows(row, single[k]);
        to_p[lam] = row;
      }
      from_p = invert(to_p, parts);
      break;
    }
    case Basis::s:
      for (const auto& lam : parts) {
        for (const auto& rho : parts) {
          const long chi = character(lam, rho);
          if (chi == 0) continue;
          Rat c(mpz_class(chi), rho.z());
          c.canonicalize();
          to_p[lam][rho] = c;
          from_p[rho][lam] = chi;
        }
      }
      break;
    default:
      fail(ErrorKind::InvalidArgument, "not a classical basis");
  }
  return {to_ratqt(to_p), to_ratqt(from_p)};
}

}  // namespace detail

inline bool is_classical(Basis b) { return b == Basis::p || b == Basis::m || b == Basis::e || b == Basis::h || b == Basis::s; }

inline const Transition& classical_transition(Basis b, int n) {
  check_degree(n);
  static util::ConcurrentCache<std::pair<int, int>, Transition> cache;
  return cache.get({static_cast<int>(b), n}, [&] { return detail::classical(b, n); });
}

}  // namespace superpoly::symfunc
