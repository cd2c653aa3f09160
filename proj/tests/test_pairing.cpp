#include <gtest/gtest.h>

#include <random>

#include "qgroups/pairing.hpp"

using namespace qgroups;

namespace {

const QScalar q = QScalar::q();

// Oracle by the pairing axioms alone, starting from the 4x4 generator table:
// (u, X_ij) for a PBW monomial is the (i,j) entry of M(F)^f M(K)^k M(E)^e
// where M(g)_ij = (g, X_ij), and (u, Y_1...Y_d) = sum over the iterated
// coproduct of u of the products of generator pairings.
using Mat2 = std::array<std::array<QScalar, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Mat2 generator_matrix(const uq::PBWMonomial& m) {
  const Mat2 E{{{0, 1}, {0, 0}}};
  const Mat2 F{{{0, 0}, {1, 0}}};
  const Mat2 K{{{q, 0}, {0, q.inverse()}}};
  const Mat2 Ki{{{q.inverse(), 0}, {0, q}}};
  Mat2 r{{{1, 0}, {0, 1}}};
  for (int i = 0; i < m.f; ++i) r = mul(r, F);
  for (int i = 0; i < std::abs(m.k); ++i) r = mul(r, m.k > 0 ? K : Ki);
  for (int i = 0; i < m.e; ++i) r = mul(r, E);
  return r;
}

// Iterated coproduct as a map from leg tuples to coefficients.
std::map<std::vector<uq::PBWMonomial>, QScalar> iterated_coproduct(const uq::PBWMonomial& u, int legs) {
  std::map<std::vector<uq::PBWMonomial>, QScalar> cur{{{u}, QScalar(1)}};
  for (int n = 1; n < legs; ++n) {
    std::map<std::vector<uq::PBWMonomial>, QScalar> next;
    for (const auto& [t, c] : cur)
      for (const auto& [split, d] : uq::coproduct(uq::UElement(t.back()))) {
        auto w = t;
        w.back() = split.first;
        w.push_back(split.second);
        next[w] += c * d;
      }
    cur = std::move(next);
  }
  return cur;
}

QScalar axiomatic_pair(const uq::PBWMonomial& u, const oq::OMonomial& a) {
  std::vector<std::pair<int, int>> word;
  for (int t = 0; t < a.x12; ++t) word.emplace_back(0, 1);
  for (int t = 0; t < a.x21; ++t) word.emplace_back(1, 0);
  for (int t = 0; t < a.x11; ++t) word.emplace_back(0, 0);
  for (int t = 0; t < a.x22; ++t) word.emplace_back(1, 1);
  if (word.empty()) return uq::counit(uq::UElement(u));
  QScalar r;
  for (const auto& [t, c] : iterated_coproduct(u, static_cast<int>(word.size()))) {
    QScalar prod = c;
    for (std::size_t s = 0; s < word.size() && !prod.is_zero(); ++s)
      prod *= generator_matrix(t[s])[word[s].first][word[s].second];
    r += prod;
  }
  return r;
}

bool is_invariant(const oq::OElement& a, const uq::UElement& g) {
  return right_action(a, g) == a.scaled(uq::counit(g));
}

const uq::UElement EKi = uq::multiply(uq::E(), uq::K(-1));

}  // namespace

TEST(Pairing, GeneratorTable) {
  const PairingTable t = PairingTable::compute();
  EXPECT_EQ(t, PairingTable::expected()) << t.to_text();
  EXPECT_EQ(pair(uq::E(), oq::X12()), QScalar(1));
  EXPECT_EQ(pair(uq::F(), oq::X21()), QScalar(1));
  EXPECT_EQ(pair(uq::K(), oq::X11()), q);
  EXPECT_EQ(pair(uq::K(), oq::X22()), q.inverse());
  EXPECT_EQ(pair(uq::K(-1), oq::X11()), q.inverse());
  EXPECT_EQ(pair(uq::K(-1), oq::X22()), q);
}

TEST(Pairing, UnitPairsToCounit) {
  EXPECT_EQ(pair(uq::one(), oq::X11()), QScalar(1));
  EXPECT_EQ(pair(uq::one(), oq::X12()), QScalar(0));
  EXPECT_EQ(pair(uq::K(3), oq::one()), QScalar(1));
  EXPECT_EQ(pair(uq::E(), oq::one()), QScalar(0));
}

TEST(Pairing, HandComputedProduct) {
  // On V(1) (x) V(1): EF (u (x) Fu) = q u (x) Fu + Fu (x) u, read off at
  // f1 (x) f2.
  const uq::UElement ef = uq::multiply(uq::E(), uq::F());
  const oq::OElement x = oq::multiply(oq::X11(), oq::X22());
  EXPECT_EQ(pair(ef, x), q);
  EXPECT_EQ(pair(ef, oq::multiply(oq::X12(), oq::X21())), QScalar(1));
}

TEST(Pairing, AgreesWithAxiomaticRecursion) {
  for (const auto& u : uq::monomials_up_to(2))
    for (const auto& a : oq::monomials_up_to(3)) {
      const uq::PBWMonomial m = u.begin()->first;
      EXPECT_EQ(pair(u, oq::OElement(a)), axiomatic_pair(m, a))
          << uq::render(u) << " vs " << oq::render_monomial(a);
    }
}

TEST(Pairing, IsBilinear) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const uq::UElement u = uq::random_element(rng, 2), v = uq::random_element(rng, 2);
    const oq::OElement a = oq::random_element(rng, 2), b = oq::random_element(rng, 2);
    EXPECT_EQ(pair(u + v, a), pair(u, a) + pair(v, a));
    EXPECT_EQ(pair(u, a + b.scaled(q)), pair(u, a) + q * pair(u, b));
  }
}

TEST(Pairing, HopfPairingAxioms) {
  std::vector<oq::OElement> as;
  for (const auto& m : oq::monomials_up_to(2)) as.emplace_back(m);
  const Report r = check_pairing_axioms(uq::monomials_up_to(2), as);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Pairing, AxiomCheckerDetectsBrokenAntipode) {
  // Pairing against S^2(u) instead of S(u) must fail somewhere.
  bool all_equal = true;
  for (const auto& u : uq::monomials_up_to(1))
    for (const auto& a : oq::monomials_up_to(1))
      all_equal = all_equal && pair(uq::antipode(uq::antipode(u)), oq::OElement(a)) ==
                                   pair(u, oq::antipode(oq::OElement(a)));
  EXPECT_FALSE(all_equal);
}

TEST(Pairing, PerfectOnDegreeOne) {
  const Matrix m = pairing_matrix({uq::one(), uq::E(), uq::F(), uq::K(1), uq::K(-1)},
                                  {oq::one(), oq::X11(), oq::X12(), oq::X21(), oq::X22()});
  EXPECT_EQ(rank(m), 5u);
}

TEST(Pairing, MonomialsUpToDegree3AreIndependentFunctionals) {
  EXPECT_EQ(functional_rank(3), oq::monomials_up_to(3).size());
  EXPECT_EQ(oq::monomials_up_to(3).size(), 30u);
}

TEST(Actions, RightActionExamples) {
  EXPECT_EQ(right_action(oq::X11(), EKi), oq::X21().scaled(q));
  EXPECT_EQ(right_action(oq::X12(), EKi), oq::X22().scaled(q));
  EXPECT_TRUE(right_action(oq::X22(), EKi).is_zero());
  EXPECT_TRUE(right_action(oq::X21(), EKi).is_zero());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    const oq::OElement a = oq::random_element(rng, 2);
    EXPECT_EQ(right_action(a, uq::one()), a);
    EXPECT_EQ(left_action(uq::one(), a), a);
  }
}

TEST(Actions, LeftActionExamples) {
  EXPECT_EQ(left_action(uq::K(), oq::X11()), oq::X11().scaled(q));
  // Delta(X21) = X21 (x) X11 + X22 (x) X21 and (E, X11) = (E, X21) = 0
  EXPECT_TRUE(left_action(uq::E(), oq::X21()).is_zero());
  EXPECT_EQ(left_action(uq::E(), oq::X12()), oq::X11());
  EXPECT_EQ(left_action(uq::E(), oq::X22()), oq::X21());
}

TEST(Actions, AreModuleActions) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 8; ++t) {
    const oq::OElement a = oq::random_element(rng, 2);
    const uq::UElement u = uq::random_element(rng, 1), v = uq::random_element(rng, 1);
    // right action: (a.u).v = a.(uv);  left action: u.(v.a) = (uv).a
    EXPECT_EQ(right_action(right_action(a, u), v), right_action(a, uq::multiply(u, v)));
    EXPECT_EQ(left_action(u, left_action(v, a)), left_action(uq::multiply(u, v), a));
  }
}

TEST(Actions, BimoduleCompatibility) {
  // (ab).u = sum (a.u_(1)) (b.u_(2))
  std::mt19937_64 rng(13);
  for (int t = 0; t < 8; ++t) {
    const oq::OElement a = oq::random_element(rng, 1), b = oq::random_element(rng, 2);
    const uq::UElement u = uq::random_element(rng, 2);
    oq::OElement rhs;
    for (const auto& [legs, c] : uq::coproduct(u))
      rhs.add_scaled(oq::multiply(right_action(a, uq::UElement(legs.first)), right_action(b, uq::UElement(legs.second))), c);
    EXPECT_EQ(right_action(oq::multiply(a, b), u), rhs);
  }
}

TEST(Coideal, Examples) {
  EXPECT_TRUE(verify_right_coideal({EKi}, 3).passed());
  EXPECT_TRUE(verify_right_coideal({uq::K(2), uq::K(-2)}, 3).passed());
  const Report r = verify_right_coideal({uq::E()}, 3);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.checks.front().witness.find("K"), std::string::npos) << r.checks.front().witness;
  EXPECT_FALSE(verify_right_coideal({uq::F() + uq::K(1)}, 2).passed());
  EXPECT_THROW(verify_right_coideal({EKi}, 0), std::invalid_argument);
}

TEST(Coideal, VockeCatalogAllPass) {
  for (const auto& p : vocke_catalog()) {
    const Report r = verify_right_coideal(p.gens, 3);
    EXPECT_TRUE(r.passed()) << p.label << "\n" << r.to_text();
  }
  VockeParameters other;
  other.lambda = q.pow(3) - QScalar(2);
  other.c_F = QScalar(0);
  other.c_K = q;
  other.j = -3;
  for (const auto& p : vocke_catalog(other)) EXPECT_TRUE(verify_right_coideal(p.gens, 2).passed()) << p.label;
}

TEST(Coideal, VockeConstraint) {
  const QScalar c = vocke_constraint_value();
  EXPECT_EQ(c, q.pow(2) / ((QScalar(1) - q.pow(2)) * (q - q.inverse())));
  EXPECT_NO_THROW(vocke_two_generator_family(QScalar(2), c / QScalar(2)));
  EXPECT_THROW(vocke_two_generator_family(QScalar(1), QScalar(1)), std::invalid_argument);
  VockeParameters bad;
  bad.lambda_prime = QScalar(1);
  EXPECT_THROW(vocke_catalog(bad), std::invalid_argument);
  VockeParameters zero;
  zero.lambda = QScalar(0);
  EXPECT_THROW(vocke_catalog(zero), std::invalid_argument);
}

TEST(Coideal, FamilyWithZeroLambdaPrimeIsF) {
  const uq::UElement g = uq::F() + uq::K(-1).scaled(QScalar(0));
  EXPECT_EQ(g, uq::F());
  EXPECT_TRUE(verify_right_coideal({g}, 3).passed());
}

TEST(Invariants, DegreeOneForEKinv) {
  const auto basis = invariants({EKi}, 1, DegreeMode::Exact);
  ASSERT_EQ(basis.size(), 2u);
  EchelonSpan<oq::OMonomial> span;
  for (const auto& b : basis) span.insert(b.terms());
  EXPECT_TRUE(span.contains(oq::X21().terms()));
  EXPECT_TRUE(span.contains(oq::X22().terms()));
  EXPECT_FALSE(span.contains(oq::X11().terms()));
  EXPECT_FALSE(span.contains(oq::X12().terms()));
  // Up to degree 1 the constants join in.
  EXPECT_EQ(invariants({EKi}, 1).size(), 3u);
}

TEST(Invariants, NoGeneratorsGivesEverything) {
  EXPECT_EQ(invariants({}, 1).size(), 5u);
  EXPECT_EQ(invariants({EKi}, 0).size(), 1u);
}

TEST(Invariants, DegreeTwoForEKinv) {
  const auto basis = invariants({EKi}, 2, DegreeMode::Exact);
  for (const auto& b : basis) EXPECT_TRUE(is_invariant(b, EKi)) << oq::render(b);
  EchelonSpan<oq::OMonomial> span;
  for (const auto& b : basis) span.insert(b.terms());
  const oq::OElement x21 = oq::X21(), x22 = oq::X22();
  EXPECT_TRUE(span.contains(oq::multiply(x21, x21).terms()));
  EXPECT_TRUE(span.contains(oq::multiply(x21, x22).terms()));
  EXPECT_TRUE(span.contains(oq::multiply(x22, x22).terms()));
  // X12 X21 is moved: X12 X21 . EK^-1 = q^2 X22 X21 != 0
  const oq::OElement x12x21 = oq::multiply(oq::X12(), x21);
  EXPECT_FALSE(is_invariant(x12x21, EKi));
  EXPECT_FALSE(span.contains(x12x21.terms()));
  EXPECT_EQ(basis.size(), 3u);
}

TEST(Invariants, ProductsOfInvariantsAreInvariant) {
  const auto b1 = invariants({EKi}, 1, DegreeMode::Exact);
  for (const auto& a : b1)
    for (const auto& b : b1) EXPECT_TRUE(is_invariant(oq::multiply(a, b), EKi));
}

TEST(Takeuchi, Examples) {
  const auto ideal = takeuchi_quotient_ideal({oq::X21(), oq::X22()}, 1);
  ASSERT_EQ(ideal.size(), 2u);
  EXPECT_EQ(ideal[0], oq::X21());
  EXPECT_EQ(ideal[1], oq::X22() - oq::one());
  EXPECT_TRUE(takeuchi_quotient_ideal({oq::one()}, 3).empty());
  const auto borel = takeuchi_quotient_ideal({oq::X12()}, 2);
  EXPECT_EQ(borel.size(), 5u);
  for (const auto& x : borel) EXPECT_EQ(oq::counit(x), QScalar(0));
}

TEST(Takeuchi, IdealIsInKernelOfCounitAndClosedUnderLeftMultiplication) {
  const auto ideal = takeuchi_quotient_ideal({oq::X21(), oq::X22()}, 2);
  EchelonSpan<oq::OMonomial> span;
  for (const auto& x : ideal) {
    EXPECT_EQ(oq::counit(x), QScalar(0));
    span.insert(x.terms());
  }
  const auto deg1 = takeuchi_quotient_ideal({oq::X21(), oq::X22()}, 1);
  for (const auto& g : {oq::X11(), oq::X12(), oq::X21(), oq::X22()})
    for (const auto& x : deg1) EXPECT_TRUE(span.contains(oq::multiply(g, x).terms()));
}
