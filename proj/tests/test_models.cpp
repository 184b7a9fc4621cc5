#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "superpoly/knots/checks.hpp"
#include "superpoly/models/affine.hpp"
#include "superpoly/models/dyck.hpp"
#include "superpoly/models/parking.hpp"
#include "superpoly/models/tesler.hpp"

using namespace superpoly;
using namespace superpoly::models;
using algebra::LaurentQTU;
using algebra::RatQT;

namespace {
LaurentQTU L(const char* s) { return LaurentQTU::parse(s); }

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

TEST(Dyck, Counts) {
  EXPECT_EQ(enumerate_dyck(3, 5).size(), 7u);
  EXPECT_EQ(enumerate_dyck(5, 3).size(), 7u);
  EXPECT_EQ(enumerate_dyck(2, 3).size(), 2u);
  EXPECT_EQ(enumerate_dyck(3, 2).size(), 2u);
  EXPECT_EQ(enumerate_dyck(1, 4).size(), 1u);
  EXPECT_THROW(enumerate_dyck(2, 4), Error);
  EXPECT_THROW(enumerate_dyck(0, 3), Error);
}

TEST(Dyck, EmptyDiagram) {
  const DyckPath d{2, 3, {0, 0}};
  EXPECT_EQ(d.size(), 0);
  EXPECT_EQ(d.h_plus(), 0);
  EXPECT_EQ(d.area(), 1);
  EXPECT_EQ(d.corners(), 1);
}

TEST(Dyck, PathsStayUnderDiagonal) {
  for (const auto& d : enumerate_dyck(4, 7)) {
    for (int r = 0; r < 4; ++r) {
      if (r > 0) { EXPECT_LE(d.rows[r], d.rows[r - 1]); }
      for (int c = 0; c < d.rows[r]; ++c) EXPECT_TRUE(under_diagonal(4, 7, c, r));
    }
  }
}

TEST(Catalan, SmallValues) {
  EXPECT_EQ(catalan_qt(2, 3), L("q+t"));
  EXPECT_EQ(catalan_qt(2, 3).q_to_one().t_to_one(), LaurentQTU(2));
  EXPECT_EQ(catalan_qt(3, 5).q_to_one().t_to_one(), LaurentQTU(7));
  EXPECT_EQ(catalan_qt(3, 4), catalan_qt(3, 4).swap_qt());
}

TEST(Schroeder, TwoThree) {
  const LaurentQTU s = schroeder_sum(2, 3);
  EXPECT_EQ(s.u_to_zero(), catalan_qt(2, 3));
  EXPECT_EQ(s.t_to_one(), L("1-u") * L("q+1-u"));
  EXPECT_EQ(s, L("1-u") * L("q+t-u"));
  EXPECT_EQ(corner_formula(2, 3), L("1-u") * L("q+1-u"));
}

TEST(Parking, Counts) {
  EXPECT_EQ(enumerate_parking(2, 3).size(), 3u);
  EXPECT_EQ(enumerate_parking(3, 2).size(), 4u);
  for (auto [n, m] : {std::pair{3, 4}, {4, 3}, {4, 5}}) {
    EXPECT_EQ(static_cast<int>(enumerate_parking(n, m).size()), ipow(m, n - 1)) << n << "," << m;
  }
  EXPECT_THROW(enumerate_parking(9, 2), Error);
}

TEST(Parking, MaximizerHasHPlus) {
  for (auto [n, m] : {std::pair{3, 4}, {4, 5}}) {
    std::map<std::vector<int>, std::pair<int, int>> best;  // rows -> (max dinv, h_+)
    for (const auto& f : enumerate_parking(n, m)) {
      auto& b = best.try_emplace(f.path.rows, std::pair{-1, f.path.h_plus()}).first->second;
      b.first = std::max(b.first, f.dinv);
    }
    for (const auto& [rows, b] : best) EXPECT_EQ(b.first, b.second);
  }
}

TEST(Parking, LabelsIncreaseUpColumns) {
  for (const auto& f : enumerate_parking(4, 3)) {
    for (int r = 0; r + 1 < 4; ++r) {
      if (f.path.rows[r] == f.path.rows[r + 1]) { EXPECT_LT(f.labels[r], f.labels[r + 1]); }
    }
  }
}

TEST(Shuffle, Anchors) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(knots::detail::compare(frobenius_hikita(n, 1), SymFunc::element(Basis::e, Partition{n})).pass) << n;
  }
  const SymFunc nabla_e2 = symfunc::nabla(SymFunc::element(Basis::e, Partition{2}));
  EXPECT_TRUE(knots::detail::compare(frobenius_hikita(2, 3), nabla_e2).pass);
}

TEST(Shuffle, ParkingCountPairing) {
  for (auto [n, m] : {std::pair{2, 3}, {3, 2}, {3, 4}}) {
    const SymFunc p1n = SymFunc::element(Basis::p, Partition(std::vector<int>(n, 1)));
    const RatQT v = symfunc::hall_pairing(frobenius_hikita(n, m), p1n).q_to_one().t_to_one();
    EXPECT_EQ(v, RatQT(ipow(m, n - 1))) << n << "," << m;
  }
}

TEST(Shuffle, RejectedConventionsFail) {
  int failures = 0;
  for (int mask = 0; mask < 8; ++mask) {
    const ParkingConvention conv{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
    bool ok = true;
    for (auto [n, m] : {std::pair{2, 5}, {3, 4}, {3, 5}, {4, 3}}) {
      try {
        ok = ok && knots::detail::compare(frobenius_hikita(n, m, conv), knots::ptilde_one(n, m)).pass;
      } catch (const Error&) {
        ok = false;
      }
    }
    if (mask == 7) {
      EXPECT_TRUE(ok);
    } else {
      EXPECT_FALSE(ok) << mask;
      ++failures;
    }
  }
  EXPECT_EQ(failures, 7);
}

TEST(TeslerModel, ThreeHalves) {
  const auto terms = tesler_enumerate(2, 3);
  ASSERT_EQ(terms.size(), 2u);
  std::set<std::vector<int>> entries;
  for (const auto& t : terms) entries.insert({t.x[0][0], t.x[0][1], t.x[1][1]});
  EXPECT_EQ(entries, (std::set<std::vector<int>>{{1, 0, 2}, {0, 1, 3}}));
  EXPECT_EQ(tesler_enumerate(3, 2).size(), 2u);
}

TEST(TeslerModel, ProjectionAndQuasiDiagonal) {
  for (auto [n, m] : {std::pair{3, 4}, {4, 3}, {3, 5}, {4, 5}}) {
    LaurentQTU quasi;
    for (const auto& t : tesler_enumerate(n, m)) {
      const DyckPath d = tesler_projection(n, m, t.x);
      for (int r = 0; r < n; ++r) {
        if (r > 0) { EXPECT_LE(d.rows[r], d.rows[r - 1]); }
        EXPECT_FALSE(d.rows[r] > 0 && !under_diagonal(n, m, d.rows[r] - 1, r));
      }
      const LaurentQTU w1 = t.weight.t_to_one();
      if (!t.quasi_diagonal) { EXPECT_TRUE(w1.is_zero()); }
      quasi += w1;
    }
    EXPECT_EQ(quasi, corner_formula(n, m)) << n << "," << m;
  }
}

TEST(Affine, Counts) {
  EXPECT_EQ(affine_cells(2, 3).size(), 3u);
  EXPECT_EQ(affine_cells(3, 2).size(), 4u);
  for (auto [n, m] : {std::pair{3, 4}, {4, 3}, {4, 5}}) {
    EXPECT_EQ(static_cast<int>(affine_cells(n, m).size()), ipow(m, n - 1)) << n << "," << m;
  }
  EXPECT_EQ(cell_poincare(2, 3), L("1+2*q"));
  EXPECT_THROW(affine_cells(5, 2), Error);
}

TEST(Affine, Identity) {
  for (int n = 1; n <= 4; ++n) {
    AffinePerm id{std::vector<int>(n)};
    std::iota(id.window.begin(), id.window.end(), 1);
    for (int m : {1, 2, 3, 5}) {
      EXPECT_TRUE(id.is_stable(m));
      EXPECT_EQ(id.dimension(m), 0);
    }
    EXPECT_EQ(id(n + 1), n + 1);
    EXPECT_EQ(id(0), 0);
  }
  const AffinePerm w{{0, 3}};
  EXPECT_EQ(w(3), 2);
  EXPECT_EQ(w(-1), -2);
  EXPECT_EQ(w.to_string(), "[0,3]");
}

TEST(Affine, SpringerDimensions) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 5; ++m) {
      if (std::gcd(n, m) == 1) { EXPECT_TRUE(knots::springer(n, m).pass) << n << "," << m; }
    }
  }
  std::multiset<int> dims, dinvs;
  for (const auto& c : affine_cells(2, 3)) dims.insert(c.dimension);
  for (const auto& f : enumerate_parking(2, 3)) dinvs.insert(f.dinv);
  EXPECT_EQ(dims, (std::multiset<int>{0, 1, 1}));
  EXPECT_EQ(dinvs, (std::multiset<int>{0, 0, 1}));
}

TEST(Anchors, CountingCheck) {
  for (auto [n, m] : {std::pair{1, 3}, {2, 5}, {3, 7}, {4, 7}}) EXPECT_TRUE(knots::counting_anchors(n, m).pass) << n << "," << m;
}
