#pragma once

// Standard tableaux stored as box-addition chains nu = rho_0 < ... < rho_l = mu.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "superpoly/young/partition.hpp"

namespace superpoly::young {

struct Tableau {
  std::vector<Partition> chain;
  /// Added boxes as (column, row), 1-based, in order of addition.
  std::vector<std::pair<int, int>> added;

  const Partition& inner() const { return chain.front(); }
  const Partition& outer() const { return chain.back(); }
  std::size_t length() const { return added.size(); }
  /// Weight exponents (q, t) of the k-th added box, 0-based k.
  std::pair<int, int> weight(std::size_t k) const { return {added[k].first - 1, added[k].second - 1}; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i) s += " < ";
      s += chain[i].to_string();
    }
    return s;
  }
};

/// Calls visit(added) for every addition chain from nu to mu, in a fixed
/// order (boxes tried bottom row first).  Returns the number of chains.
inline std::size_t for_each_chain(const Partition& nu, const Partition& mu,
                                  const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  if (!mu.contains(nu)) fail(ErrorKind::NotContained, nu.to_string() + " is not contained in " + mu.to_string());
  std::vector<int> rows(nu.parts());
  rows.resize(static_cast<std::size_t>(mu.length()), 0);
  std::vector<std::pair<int, int>> added;
  const int total = mu.size() - nu.size();
  std::size_t count = 0;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(added.size()) == total) {
      ++count;
      visit(added);
      return;
    }
    for (int j = 0; j < mu.length(); ++j) {
      if (rows[j] < mu.parts()[j] && (j == 0 || rows[j] < rows[j - 1])) {
        ++rows[j];
        added.emplace_back(rows[j], j + 1);
        self(self);
        added.pop_back();
        --rows[j];
      }
    }
  };
  rec(rec);
  return count;
}

inline std::vector<Tableau> enumerate_tableaux(const Partition& nu, const Partition& mu) {
  std::vector<Tableau> out;
  for_each_chain(nu, mu, [&](const std::vector<std::pair<int, int>>& added) {
    Tableau t;
    t.added = added;
    t.chain.push_back(nu);
    for (auto [c, r] : added) t.chain.push_back(t.chain.back().add_box(r));
    out.push_back(std::move(t));
  });
  return out;
}

/// All chains from nu adding exactly k boxes, grouped by the outer shape.
inline std::size_t for_each_growth(const Partition& nu, int k,
                                   const std::function<void(const Partition&, const std::vector<std::pair<int, int>>&)>& visit) {
  std::vector<int> rows(nu.parts());
  std::vector<std::pair<int, int>> added;
  std::size_t count = 0;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(added.size()) == k) {
      ++count;
      visit(Partition(rows), added);
      return;
    }
    for (std::size_t j = 0; j <= rows.size(); ++j) {
      if (j == rows.size()) {
        if (j > 0 && rows[j - 1] == 0) continue;
        rows.push_back(1);
        added.emplace_back(1, static_cast<int>(j) + 1);
        self(self);
        added.pop_back();
        rows.pop_back();
        break;
      }
      if (j == 0 || rows[j] < rows[j - 1]) {
        ++rows[j];
        added.emplace_back(rows[j], static_cast<int>(j) + 1);
        self(self);
        added.pop_back();
        --rows[j];
      }
    }
  };
  rec(rec);
  return count;
}

}  // namespace superpoly::young
