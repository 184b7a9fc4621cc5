#include <gtest/gtest.h>

#include "superpoly/symfunc/cherednik.hpp"
#include "superpoly/symfunc/delta1.hpp"
#include "superpoly/symfunc/macdonald.hpp"

using namespace superpoly;
using namespace superpoly::symfunc;
using algebra::LaurentQTU;
using algebra::UPoly;

namespace {
RatQT R(const char* s) { return RatQT::parse(s); }
SymFunc el(Basis b, const Partition& lam) { return SymFunc::element(b, lam); }
SymFunc p(const Partition& lam, const RatQT& c = RatQT(1)) { return SymFunc::element(Basis::p, lam, c); }
RatQT t_to_q(const RatQT& c) {
  auto sub = [](const LaurentQTU& x) { return x.monomial_map({1, 0, 0}, {1, 0, 0}, {0, 0, 1}); };
  return algebra::normalize(sub(c.num_laurent()), sub(c.den_laurent()));
}
const Basis kAll[] = {Basis::p, Basis::m, Basis::e, Basis::h, Basis::s, Basis::P, Basis::J, Basis::Htilde};
}  // namespace

TEST(SymFunc, ClassicalExamples) {
  SymFunc e2 = to_p(el(Basis::e, Partition{2}));
  EXPECT_EQ(e2, p(Partition{1, 1}, R("1/2")) + p(Partition{2}, R("-1/2")));
  SymFunc h2 = change_basis(el(Basis::h, Partition{2}), Basis::m);
  EXPECT_EQ(h2, el(Basis::m, Partition{2}) + el(Basis::m, Partition{1, 1}));
  SymFunc s21 = to_p(el(Basis::s, Partition{2, 1}));
  EXPECT_EQ(s21, p(Partition{1, 1, 1}, R("1/3")) + p(Partition{3}, R("-1/3")));
  // Jacobi-Trudi in degree 3: s_(2,1) = h_2 h_1 - h_3.
  EXPECT_EQ(change_basis(el(Basis::s, Partition{2, 1}), Basis::h),
            el(Basis::h, Partition{2, 1}) - el(Basis::h, Partition{3}));
}

TEST(SymFunc, RoundTrips) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lam : partitions(n)) {
      for (Basis a : kAll) {
        for (Basis b : kAll) {
          if (n > 4 && !is_classical(a) && !is_classical(b)) continue;
          EXPECT_EQ(change_basis(change_basis(el(a, lam), b), a), el(a, lam))
              << basis_name(a) << "->" << basis_name(b) << " " << lam.to_string();
        }
      }
    }
  }
}

TEST(SymFunc, HallPairingMakesSchurOrthonormal) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : partitions(n)) {
      for (const auto& b : partitions(n)) {
        EXPECT_EQ(hall_pairing(el(Basis::s, a), el(Basis::s, b)), RatQT(a == b ? 1 : 0));
        EXPECT_EQ(hall_pairing(el(Basis::h, a), el(Basis::m, b)), RatQT(a == b ? 1 : 0));
      }
    }
  }
}

TEST(SymFunc, PairingExamples) {
  EXPECT_EQ(qt_pairing(p(Partition{2}), p(Partition{2})), R("2") * R("1-q^2") / R("1-t^2"));
  EXPECT_TRUE(qt_pairing(p(Partition{2}), p(Partition{1, 1})).is_zero());
  EXPECT_EQ(hall_pairing(p(Partition{1, 1}), p(Partition{1, 1})), RatQT(2));
  EXPECT_TRUE(qt_pairing(p(Partition{2}), p(Partition{1})).is_zero());
}

TEST(Macdonald, PExamples) {
  EXPECT_EQ(macdonald_P(Partition{1}), el(Basis::m, Partition{1}));
  EXPECT_EQ(macdonald_P(Partition{1, 1}), el(Basis::m, Partition{1, 1}));
  SymFunc expect = el(Basis::m, Partition{2}) + SymFunc::element(Basis::m, Partition{1, 1}, R("1-t") * R("1+q") / R("1-q*t"));
  EXPECT_EQ(macdonald_P(Partition{2}), expect);
}

TEST(Macdonald, OrthogonalityAndNorms) {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions(n);
    std::vector<SymFunc> Ps;
    for (const auto& lam : parts) Ps.push_back(macdonald_P(lam, Basis::p));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      // Unitriangular over m in dominance order.
      const SymFunc Pm = macdonald_P(parts[i]);
      for (const auto& [mu, c] : Pm.terms()) {
        EXPECT_TRUE(parts[i].dominates(mu)) << parts[i].to_string() << " " << mu.to_string();
        if (mu == parts[i]) { EXPECT_TRUE(c.is_one()); }
      }
      const auto hp = young::hook_products(parts[i]);
      EXPECT_EQ(qt_pairing(Ps[i], Ps[i]), hp.h_prime / hp.h) << parts[i].to_string();
      for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(qt_pairing(Ps[i], Ps[j]).is_zero());
    }
  }
}

TEST(Macdonald, ClassicalSpecializations) {
  // q = t gives Schur functions; q = 0 gives Hall-Littlewood, so P_(1^n) = e_n.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions(n)) {
      SymFunc Pq = macdonald_P(lam, Basis::s).map_coeffs([](const Partition&, const RatQT& c) { return t_to_q(c); });
      EXPECT_EQ(Pq, el(Basis::s, lam)) << lam.to_string();
    }
    EXPECT_EQ(change_basis(el(Basis::P, Partition(std::vector<int>(n, 1))), Basis::e),
              el(Basis::e, Partition{n}));
  }
}

TEST(Macdonald, EvaluationTheorem) {
  EXPECT_EQ(evaluate_principal(p(Partition{1})), UPoly::linear(R("1"), R("-1")).scaled(R("1/(1-t)")));
  EXPECT_EQ(evaluate_principal(macdonald_J(Partition{2})),
            UPoly::linear(1, -1) * UPoly::linear(1, R("-q")));
  // The box (1,2) contributes t - u, so J_(1,1) -> (1-u)(t-u).
  EXPECT_EQ(evaluate_principal(macdonald_J(Partition{1, 1})),
            UPoly::linear(1, -1) * UPoly::linear(R("t"), -1));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions(n)) {
      EXPECT_EQ(evaluate_principal(macdonald_J(lam)), j_evaluation(lam)) << lam.to_string();
    }
  }
}

TEST(Macdonald, EvaluationVectorConsistency) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lam : partitions(n)) {
      EXPECT_EQ(evalv_pairing(macdonald_J(lam)), evaluate_principal(macdonald_J(lam)));
      EXPECT_EQ(evalv_pairing(el(Basis::s, lam)), evaluate_principal(el(Basis::s, lam)));
    }
  }
}

TEST(Macdonald, PrincipalEvaluationMatchesVariables) {
  // u = t^N against the direct evaluation at (t^{N-1}, ..., t, 1).
  for (int N = 1; N <= 3; ++N) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& lam : partitions(n)) {
        const SymFunc f = el(Basis::s, lam);
        RatQT direct;
        for (const auto& [e, c] : restrict_to_variables(f, N)) {
          int te = 0;
          for (int i = 0; i < N; ++i) te += e[i] * (N - 1 - i);
          direct += c * RatQT::monomial(1, 0, te);
        }
        EXPECT_EQ(evaluate_principal(f).at_u_tpow(N), direct);
      }
    }
  }
}

TEST(Macdonald, ModifiedExamples) {
  EXPECT_EQ(modified_macdonald(Partition{1}, Basis::p), p(Partition{1}));
  EXPECT_EQ(modified_macdonald(Partition{2}), el(Basis::s, Partition{2}) + SymFunc::element(Basis::s, Partition{1, 1}, R("q")));
  EXPECT_EQ(modified_macdonald(Partition{2, 1}),
            el(Basis::s, Partition{3}) + SymFunc::element(Basis::s, Partition{2, 1}, R("q+t")) +
                SymFunc::element(Basis::s, Partition{1, 1, 1}, R("q*t")));
}

TEST(Macdonald, ModifiedSymmetryAndPositivity) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions(n)) {
      const SymFunc H = modified_macdonald(lam);
      const SymFunc Ht = modified_macdonald(lam.transpose());
      EXPECT_EQ(Ht, H.map_coeffs([](const Partition&, const RatQT& c) { return c.swap_qt(); })) << lam.to_string();
      for (const auto& [mu, c] : H.terms()) {
        ASSERT_TRUE(c.is_polynomial());
        const LaurentQTU poly = c.as_laurent();
        for (const auto& [m, x] : poly.terms()) {
          EXPECT_GT(x, 0);
          EXPECT_GE(m.q, 0);
          EXPECT_GE(m.t, 0);
        }
        // At q = t = 1 every H~ becomes h_1^n.
        EXPECT_EQ(c.as_laurent().value_at_one(), Rat(young::hook_length_count(mu)));
      }
    }
  }
}

TEST(Macdonald, Plethysm) {
  const PlethysticMap phi = PlethysticMap::modified();
  EXPECT_EQ(apply_plethysm(p(Partition{1}), phi), p(Partition{1}, R("1-t^-1").inverse()));
  EXPECT_EQ(apply_plethysm(p(Partition{1}), PlethysticMap::q_integer(2)), p(Partition{1}, R("1+q")));
  const SymFunc s21 = el(Basis::s, Partition{2, 1});
  EXPECT_EQ(apply_plethysm(apply_plethysm(s21, phi), phi.inverse()), s21);
  const PlethysticMap zero{[](int) { return RatQT(); }};
  EXPECT_THROW(apply_plethysm(s21, zero.inverse()), Error);
}

TEST(Macdonald, Nabla) {
  EXPECT_EQ(nabla(el(Basis::e, Partition{1})), el(Basis::e, Partition{1}));
  EXPECT_EQ(nabla(el(Basis::Htilde, Partition{2})), SymFunc::element(Basis::Htilde, Partition{2}, R("q")));
  EXPECT_EQ(change_basis(nabla(el(Basis::e, Partition{2})), Basis::s),
            el(Basis::s, Partition{2}) + SymFunc::element(Basis::s, Partition{1, 1}, R("q+t")));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions(n)) {
      const SymFunc f = el(Basis::s, lam);
      EXPECT_EQ(nabla(nabla_inverse(f)), f);
    }
  }
  // The q,t-Catalan number is <nabla e_n, e_n>; at q = t = 1 it is Catalan(n).
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (int n = 1; n <= 5; ++n) {
    const RatQT c = hall_pairing(nabla(el(Basis::e, Partition{n})), el(Basis::e, Partition{n}));
    EXPECT_EQ(c.as_laurent().value_at_one(), Rat(catalan[n]));
  }
}

TEST(Macdonald, GeometricPairing) {
  EXPECT_EQ(geometric_pairing(el(Basis::Htilde, Partition{1}), el(Basis::Htilde, Partition{1})), R("1-t^-1") * R("1-q^-1"));
  EXPECT_TRUE(geometric_pairing(el(Basis::Htilde, Partition{2}), el(Basis::Htilde, Partition{1, 1})).is_zero());
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : partitions(n)) {
      for (const auto& b : partitions(n)) {
        const RatQT tw = twisted_pairing(el(Basis::Htilde, a), el(Basis::Htilde, b));
        EXPECT_EQ(tw, a == b ? young::hook_products(a).g : RatQT()) << a.to_string() << " " << b.to_string();
      }
    }
  }
}

TEST(Delta1, Examples) {
  const MPoly one = restrict_to_variables(el(Basis::p, Partition{}), 2);
  MPoly r = delta1_oracle(one, 2);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.begin()->second, R("1+t"));
  const MPoly p1 = restrict_to_variables(macdonald_P(Partition{1}), 2);
  MPoly expect;
  for (const auto& [e, c] : p1) add_to(expect, e, c * R("1+q*t"));
  EXPECT_EQ(delta1_oracle(p1, 2), expect);
  const MPoly x = restrict_to_variables(p(Partition{1}), 1);
  EXPECT_EQ(delta1_oracle(x, 1).begin()->second, R("q"));
  EXPECT_THROW(delta1_oracle(restrict_to_variables(p(Partition{1}), 5), 5), Error);
}

TEST(Delta1, MacdonaldEigenvectors) {
  const int N = 3;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lam : partitions(n)) {
      const MPoly f = restrict_to_variables(macdonald_P(lam), N);
      if (lam.length() > N) {
        EXPECT_TRUE(f.empty());
        continue;
      }
      MPoly expect;
      const RatQT ev = delta1_eigenvalue(lam, N);
      for (const auto& [e, c] : f) add_to(expect, e, c * ev);
      EXPECT_EQ(delta1_oracle(f, N), expect) << lam.to_string();
    }
  }
}

TEST(Cherednik, Characters) {
  EXPECT_EQ(cherednik_character(1, 4), el(Basis::s, Partition{1}));
  EXPECT_EQ(cherednik_dimension(cherednik_character(2, 3)), Rat(3));
  EXPECT_EQ(cherednik_dimension(cherednik_character(3, 2)), Rat(4));
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 7; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const SymFunc ch = cherednik_character(n, m);
      Rat dim = 1;
      for (int i = 1; i < n; ++i) dim *= m;
      EXPECT_EQ(cherednik_dimension(ch), dim);
      for (const auto& [lam, c] : ch.terms()) {
        ASSERT_TRUE(c.is_polynomial());
        const LaurentQTU x = c.as_laurent();
        EXPECT_EQ(x, x.monomial_map({-1, 0, 0}, {0, 1, 0}, {0, 0, 1}));
      }
    }
  }
  try {
    cherednik_character(2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
}

TEST(SymFunc, JsonAndBounds) {
  const SymFunc H = modified_macdonald(Partition{2, 1}, Basis::m);
  const nlohmann::json j = H.to_json();
  EXPECT_EQ(SymFunc::from_json(j), H);
  EXPECT_EQ(j.at("basis"), "m");
  const SymFunc h = change_basis(H, Basis::Htilde);
  EXPECT_EQ(h.to_json().dump(), R"({"basis":"Htilde","terms":[{"coeff":"1","partition":[2,1]}]})");
  EXPECT_THROW(SymFunc::from_json(nlohmann::json::parse(R"({"basis":"X","terms":[]})")), Error);
  const int old = degree_bound().exchange(3);
  try {
    change_basis(el(Basis::s, Partition{4}), Basis::p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeBound);
  }
  degree_bound() = old;
}
