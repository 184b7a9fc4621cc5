#pragma once

// The Tesler-matrix route to P~_{n,m}: a sum over upper triangular
// nonnegative matrices with prescribed hook sums.

#include <functional>
#include <map>
#include <vector>

#include "superpoly/knots/superpoly.hpp"

namespace superpoly::knots {

/// Upper triangular, x[i][j] for i <= j.
using TeslerMatrix = std::vector<std::vector<int>>;

/// h_k(q,t) = sum_{i+j=k} q^i t^j, zero for k < 0.
inline LaurentQTU complete_qt(int k) {
  LaurentQTU r;
  for (int i = 0; i <= k; ++i) r += LaurentQTU::term(1, i, k - i);
  return r;
}

/// A(k) = -(q-1)(t-1) h_{k-1}(q,t); A(0) is never used.
inline LaurentQTU tesler_A(int k) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "A(k) needs k >= 1");
  return LaurentQTU::parse("-1+q+t-q*t") * complete_qt(k - 1);
}

/// B(k) = h_k(q,t) - h_{k-1}(q,t), so B(0) = 1.
inline LaurentQTU tesler_B(int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "B(k) needs k >= 0");
  return complete_qt(k) - complete_qt(k - 1);
}

namespace detail {

/// Visits every way of writing total as an ordered sum of len nonnegative parts.
inline void for_each_composition(int total, int len, std::vector<int>& parts,
                                 const std::function<void()>& visit) {
  if (len == 1) {
    parts.push_back(total);
    visit();
    parts.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    parts.push_back(v);
    for_each_composition(total - v, len - 1, parts, visit);
    parts.pop_back();
  }
}

inline LaurentQTU row_weight(const std::vector<int>& row) {
  // row[0] = x_{ii}, row[j - i] = x_{ij}
  LaurentQTU w(1);
  if (row[0] > 0) w *= LaurentQTU::parse("1-u");
  if (row.size() > 1) w *= tesler_B(row[1]);
  for (std::size_t s = 2; s < row.size(); ++s) {
    if (row[s] > 0) w *= tesler_A(row[s]);
  }
  return w;
}

}  // namespace detail

/// Calls visit on every m/n Tesler matrix.
inline std::size_t for_each_tesler(int n, int m, const std::function<void(const TeslerMatrix&)>& visit) {
  require_coprime(n, m);
  if (n < 1 || m < 0) fail(ErrorKind::InvalidArgument, "Tesler matrices need n >= 1, m >= 0");
  const std::vector<int> S = slope_profile(n, m, n);
  TeslerMatrix x(n, std::vector<int>(n, 0));
  std::vector<int> colsum(n, 0);
  std::size_t count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      ++count;
      visit(x);
      return;
    }
    const int total = S[i] + colsum[i];
    std::vector<int> parts;
    detail::for_each_composition(total, n - i, parts, [&] {
      for (int j = i; j < n; ++j) x[i][j] = parts[j - i];
      for (int j = i + 1; j < n; ++j) colsum[j] += parts[j - i];
      rec(i + 1);
      for (int j = i + 1; j < n; ++j) colsum[j] -= parts[j - i];
    });
    for (int j = i; j < n; ++j) x[i][j] = 0;
  };
  rec(0);
  return count;
}

inline LaurentQTU tesler_weight(const TeslerMatrix& x) {
  const int n = static_cast<int>(x.size());
  LaurentQTU w(1);
  for (int i = 0; i < n; ++i) w *= detail::row_weight(std::vector<int>(x[i].begin() + i, x[i].end()));
  return w;
}

/// P~_{n,m} as a Tesler sum.  Rows are processed in order with the column
/// sums still owed to later rows as the state, so equal states merge.
inline SuperPoly super_tesler(int n, int m) {
  require_coprime(n, m);
  if (n < 1 || m < 1) fail(ErrorKind::InvalidArgument, "super_tesler needs n, m >= 1");
  const std::vector<int> S = slope_profile(n, m, n);
  std::map<std::vector<int>, LaurentQTU> states{{std::vector<int>(n, 0), LaurentQTU(1)}};
  for (int i = 0; i < n; ++i) {
    std::map<std::vector<int>, LaurentQTU> next;
    for (const auto& [colsum, w] : states) {
      const int total = S[i] + colsum[i];
      if (i == n - 1) {
        next[colsum] += total > 0 ? w * LaurentQTU::parse("1-u") : w;
        continue;
      }
      std::vector<int> parts;
      detail::for_each_composition(total, n - i, parts, [&] {
        std::vector<int> cs = colsum;
        for (int j = i + 1; j < n; ++j) cs[j] += parts[j - i];
        cs[i] = 0;
        next[cs] += w * detail::row_weight(parts);
      });
    }
    states = std::move(next);
  }
  LaurentQTU total;
  for (const auto& [cs, w] : states) total += w;
  return {n, m, Partition{1}, UPoly::from_laurent(total)};
}

}  // namespace superpoly::knots
