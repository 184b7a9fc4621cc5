#pragma once

// Partitions drawn in French notation: row j (1-based, bottom up) has
// parts[j-1] boxes; the box in column i, row j has weight q^(i-1) t^(j-1).
// The arm of a box counts boxes to its right, the leg counts boxes above.

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superpoly/algebra/ratqt.hpp"
#include "superpoly/errors.hpp"

namespace superpoly::young {

using algebra::RatQT;

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        fail(ErrorKind::InvalidArgument, "parts must be weakly decreasing and positive");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  /// Row length, 1-based; zero past the last row.
  int row(int j) const { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }
  /// Column height, 1-based.
  int col(int i) const {
    int h = 0;
    while (h < length() && parts_[h] >= i) ++h;
    return h;
  }
  bool contains_box(int col_i, int row_j) const { return col_i >= 1 && row_j >= 1 && row(row_j) >= col_i; }
  bool contains(const Partition& o) const {
    if (o.length() > length()) return false;
    for (int j = 1; j <= o.length(); ++j) {
      if (o.row(j) > row(j)) return false;
    }
    return true;
  }

  Partition transpose() const {
    std::vector<int> t;
    for (int i = 1; i <= row(1); ++i) t.push_back(col(i));
    return Partition(std::move(t));
  }

  /// n(λ) = Σ (j-1) λ_j, the sum of legs.
  int n() const {
    int s = 0;
    for (int j = 0; j < length(); ++j) s += j * parts_[j];
    return s;
  }

  /// Boxes as (column, row), 1-based, row by row.
  std::vector<std::pair<int, int>> boxes() const {
    std::vector<std::pair<int, int>> b;
    for (int j = 1; j <= length(); ++j) {
      for (int i = 1; i <= row(j); ++i) b.emplace_back(i, j);
    }
    return b;
  }

  /// Cells (column, row) where a box can be added, bottom row first.
  std::vector<std::pair<int, int>> addable() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= length() + 1; ++j) {
      if (j == 1 || row(j) < row(j - 1)) out.emplace_back(row(j) + 1, j);
    }
    return out;
  }
  std::vector<std::pair<int, int>> removable() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= length(); ++j) {
      if (row(j) > row(j + 1)) out.emplace_back(row(j), j);
    }
    return out;
  }
  Partition add_box(int row_j) const {
    std::vector<int> p(parts_);
    if (row_j == length() + 1) {
      p.push_back(1);
    } else {
      ++p.at(row_j - 1);
    }
    return Partition(std::move(p));
  }
  Partition remove_box(int row_j) const {
    std::vector<int> p(parts_);
    --p.at(row_j - 1);
    return Partition(std::move(p));
  }

  /// z_λ = Π i^{m_i} m_i!.
  mpz_class z() const {
    mpz_class r = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
      std::size_t k = i;
      while (k < parts_.size() && parts_[k] == parts_[i]) ++k;
      const unsigned long mult = k - i;
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), mult);
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts_[i]), mult);
      r *= f * pw;
      i = k;
    }
    return r;
  }

  bool dominates(const Partition& o) const {
    int a = 0, b = 0;
    for (int j = 1; j <= std::max(length(), o.length()); ++j) {
      a += row(j);
      b += o.row(j);
      if (a < b) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }
  /// Accepts "[4,3,1]", "4,3,1", "4 3 1" or "431" (single digits).
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string digits;
    bool separated = text.find_first_of(", ") != std::string_view::npos;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        if (separated) {
          digits += ch;
        } else {
          parts.push_back(ch - '0');
        }
      } else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
        if (!digits.empty()) parts.push_back(std::stoi(digits));
        digits.clear();
      } else {
        fail(ErrorKind::Parse, "bad partition text '" + std::string(text) + "'");
      }
    }
    if (!digits.empty()) parts.push_back(std::stoi(digits));
    std::vector<int> sorted(parts);
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted != parts) fail(ErrorKind::Parse, "partition parts must be weakly decreasing");
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts, so (1,1,1) < (2,1) < (3).
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

struct BoxStats {
  int a = 0, l = 0, a_co = 0, l_co = 0;
  /// χ = q^qe t^te
  int qe = 0, te = 0;
  RatQT weight() const { return RatQT::monomial(1, qe, te); }
};

/// Statistics of the box in column col_i, row row_j (both 1-based).
inline BoxStats box_stats(const Partition& lam, int col_i, int row_j) {
  if (!lam.contains_box(col_i, row_j))
    fail(ErrorKind::BoxOutsideDiagram, "box (" + std::to_string(col_i) + "," + std::to_string(row_j) + ") not in " + lam.to_string());
  BoxStats s;
  s.a = lam.row(row_j) - col_i;
  s.l = lam.col(col_i) - row_j;
  s.a_co = col_i - 1;
  s.l_co = row_j - 1;
  s.qe = col_i - 1;
  s.te = row_j - 1;
  return s;
}

struct HookProducts {
  RatQT h, h_prime, g, g_tilde, Pi, B;
  int n = 0;
};

inline RatQT one_minus(int qe, int te) { return RatQT(1) - RatQT::monomial(1, qe, te); }

inline HookProducts hook_products(const Partition& lam) {
  HookProducts r;
  r.h = r.h_prime = r.g = r.Pi = RatQT(1);
  for (auto [i, j] : lam.boxes()) {
    BoxStats s = box_stats(lam, i, j);
    r.h *= one_minus(s.a, s.l + 1);
    r.h_prime *= one_minus(s.a + 1, s.l);
    r.g *= one_minus(s.a, -s.l - 1) * one_minus(-s.a - 1, s.l);
    r.B += s.weight();
    if (s.qe != 0 || s.te != 0) r.Pi *= one_minus(s.qe, s.te);
  }
  r.g_tilde = r.g.t_inverse();
  r.n = lam.n();
  return r;
}

/// Number of standard Young tableaux by the hook-length formula.
inline mpz_class hook_length_count(const Partition& lam) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(lam.size()));
  mpz_class hooks = 1;
  for (auto [i, j] : lam.boxes()) {
    BoxStats s = box_stats(lam, i, j);
    hooks *= s.a + s.l + 1;
  }
  return r / hooks;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& x) { return os << x.to_string(); }

}  // namespace superpoly::young
