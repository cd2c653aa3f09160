#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qgroups/errors.hpp"
#include "qgroups/expression_parser.hpp"
#include "qgroups/qscalar.hpp"

using namespace qgroups;

namespace {

QScalar laurent(std::map<int, mpz_class> terms) { return QScalar(QPoly::from_map(terms)); }

// Classical binomial via Pascal's rule, independent of mpz_bin_ui.
mpz_class pascal(long m, long n) {
  std::vector<std::vector<mpz_class>> t(m + 1, std::vector<mpz_class>(m + 1, 0));
  for (long i = 0; i <= m; ++i) {
    t[i][0] = 1;
    for (long j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
  }
  return t[m][n];
}

// q-binomial from the recursion {m n} = q^n {m-1 n} + q^{n-m} {m-1 n-1}.
QScalar q_binomial_recursive(long m, long n) {
  if (n == 0 || n == m) return QScalar(1);
  return QScalar::q(n) * q_binomial_recursive(m - 1, n) +
         QScalar::q(n - m) * q_binomial_recursive(m - 1, n - 1);
}

QScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), expo(-3, 3), len(1, 3);
  auto poly = [&] {
    std::map<int, mpz_class> m;
    for (int i = 0, n = len(rng); i < n; ++i) m[expo(rng)] += coef(rng);
    return QPoly::from_map(m);
  };
  QPoly d = poly();
  while (d.is_zero()) d = poly();
  return QScalar(poly(), d);
}

}  // namespace

TEST(QPoly, DropsZeroCoefficients) {
  QPoly p = QPoly::monomial(3, 2) - QPoly::monomial(3, 2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(QPoly::from_map({{1, 2}, {0, 0}, {-1, 0}}), QPoly::monomial(2, 1));
}

TEST(QPoly, GcdIsPrimitiveWithPositiveLead) {
  // (q+1)(q-1) and (q+1)^2 share q+1
  QPoly a = QPoly::from_map({{2, 1}, {0, -1}});
  QPoly b = QPoly::from_map({{2, 1}, {1, 2}, {0, 1}});
  EXPECT_EQ(detail::poly_gcd(a, b), QPoly::from_map({{1, 1}, {0, 1}}));
  EXPECT_EQ(detail::poly_gcd(QPoly(6).shifted(3), QPoly(4)), QPoly(2));
}

TEST(QScalar, CanonicalFormMakesEqualityStructural) {
  const QScalar q = QScalar::q();
  // (q^2-1)/(q-1) = q+1
  EXPECT_EQ((q * q - 1) / (q - 1), q + 1);
  // same fraction written with a q-power and sign in the denominator
  EXPECT_EQ(QScalar(QPoly::from_map({{3, -2}}), QPoly::from_map({{5, -4}})), QScalar::q(-2) / 2);
  EXPECT_TRUE(QScalar(QPoly(5), QPoly(-5)).denominator().is_one());
  EXPECT_EQ(QScalar(QPoly(5), QPoly(-5)), QScalar(-1));
}

TEST(QScalar, DenominatorLowestTermPositive) {
  const QScalar x = QScalar(1) / (QScalar(1) - QScalar::q());
  EXPECT_EQ(x.denominator().low(), 0);
  EXPECT_GT(x.denominator().lowest_coeff(), 0);
}

TEST(QScalar, InverseOfZeroThrows) { EXPECT_THROW(QScalar().inverse(), std::domain_error); }

TEST(QScalar, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(QInt, Examples) {
  EXPECT_EQ(q_int(1), QScalar(1));
  EXPECT_EQ(q_int(0), QScalar(0));
  EXPECT_EQ(q_int(2), QScalar::q() + QScalar::q(-1));
  EXPECT_EQ(q_int(-3), -q_int(3));
}

TEST(QInt, MatchesDefiningQuotient) {
  const QScalar q = QScalar::q();
  for (int n = -6; n <= 6; ++n)
    EXPECT_EQ(q_int(n), (q.pow(n) - q.pow(-n)) / (q - q.pow(-1))) << n;
}

TEST(QFactorial, Examples) {
  const QScalar q = QScalar::q();
  EXPECT_EQ(q_factorial(0), QScalar(1));
  EXPECT_EQ(q_factorial(2), q + q.pow(-1));
  EXPECT_EQ(q_factorial(3), (q + q.pow(-1)) * (q.pow(2) + 1 + q.pow(-2)));
  EXPECT_THROW(q_factorial(-1), std::invalid_argument);
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(q_binomial(2, 1), QScalar::q() + QScalar::q(-1));
  EXPECT_EQ(q_binomial(3, 0), QScalar(1));
  EXPECT_EQ(q_binomial(4, 2), laurent({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
  EXPECT_THROW(q_binomial(2, 3), std::invalid_argument);
}

TEST(QBinomial, PropertiesUpToTwelve) {
  for (long m = 0; m <= 12; ++m)
    for (long n = 0; n <= m; ++n) {
      const QScalar b = q_binomial(m, n);
      EXPECT_TRUE(b.is_laurent());
      EXPECT_EQ(b.bar(), b) << m << " " << n;
      EXPECT_EQ(eval_at_one(b), mpq_class(pascal(m, n))) << m << " " << n;
      EXPECT_EQ(b, q_binomial_recursive(m, n)) << m << " " << n;
    }
}

TEST(EvalAtOne, Examples) {
  EXPECT_EQ(eval_at_one(q_int(5)), mpq_class(5));
  EXPECT_EQ(eval_at_one(q_binomial(4, 2)), mpq_class(6));
  EXPECT_EQ(eval_at_one(QScalar(1)), mpq_class(1));
  EXPECT_EQ(eval_at_one(QScalar(1) / (QScalar::q() + 1)), mpq_class(1, 2));
}

TEST(EvalAtOne, PoleIsReportedDistinctly) {
  const QScalar x = QScalar(1) / (QScalar::q() - QScalar::q(-1));
  EXPECT_THROW(eval_at_one(x), pole_error);
}

TEST(ScalarText, ParseExamples) {
  const QScalar q = QScalar::q();
  EXPECT_EQ(parse_scalar("q^2 - 3 + 2*q^-1"), q.pow(2) - 3 + 2 * q.pow(-1));
  EXPECT_EQ(parse_scalar("(q-q^-1)^-1"), (q - q.pow(-1)).inverse());
  EXPECT_EQ(parse_scalar("2q/(1+q)"), 2 * q / (1 + q));
  EXPECT_EQ(parse_scalar("-q^(-2)"), -q.pow(-2));
}

TEST(ScalarText, ParseErrorsCarryPosition) {
  try {
    parse_scalar("1 + x");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_scalar("1/0"), parse_error);
  EXPECT_THROW(parse_scalar("(q+1"), parse_error);
  EXPECT_THROW(parse_scalar("q^"), parse_error);
}

TEST(ScalarText, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const QScalar s = random_scalar(rng);
    EXPECT_EQ(parse_scalar(s.to_string()), s) << s.to_string();
  }
  EXPECT_EQ(QScalar::q().to_string(), "q");
  EXPECT_EQ(QScalar(0).to_string(), "0");
}
