#include <gtest/gtest.h>

#include <map>

#include "qgroups/serre.hpp"

using namespace qgroups;

namespace {

using IntWord = std::vector<int>;
using IntCombination = std::map<IntWord, mpz_class>;

// Classical ad(e_a)^m (e_b) in the free algebra, computed from commutators.
IntCombination classical_ad_power(int a, int b, int m) {
  IntCombination x{{{b}, 1}};
  for (int i = 0; i < m; ++i) {
    IntCombination next;
    for (const auto& [w, c] : x) {
      IntWord left{a};
      left.insert(left.end(), w.begin(), w.end());
      IntWord right = w;
      right.push_back(a);
      next[left] += c;
      next[right] -= c;
    }
    x = next;
  }
  for (auto it = x.begin(); it != x.end();) it = it->second == 0 ? x.erase(it) : std::next(it);
  return x;
}

IntWord flatten(const FreeWord& w) {
  IntWord out;
  for (const auto& l : w.letters()) out.insert(out.end(), l.exponent, l.root);
  return out;
}

}  // namespace

TEST(CartanMatrix, DerivesSymmetrizer) {
  EXPECT_EQ(CartanMatrix(CartanMatrix::Rows{{2}}).symmetrizer(), std::vector<int>({1}));
  EXPECT_EQ(CartanMatrix({{2, -1}, {-1, 2}}).symmetrizer(), std::vector<int>({1, 1}));
  EXPECT_EQ(CartanMatrix({{2, -2}, {-1, 2}}).symmetrizer(), std::vector<int>({1, 2}));
  EXPECT_EQ(CartanMatrix({{2, -1}, {-3, 2}}).symmetrizer(), std::vector<int>({3, 1}));
  EXPECT_EQ(CartanMatrix({{2, 0}, {0, 2}}).symmetrizer(), std::vector<int>({1, 1}));
}

TEST(CartanMatrix, RejectsInvalidInput) {
  EXPECT_THROW(CartanMatrix({}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, -1}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix(CartanMatrix::Rows{{3}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, -1}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}}), std::invalid_argument);
  EXPECT_THROW(CartanMatrix({{2, -2}, {-1, 2}}, {1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(CartanMatrix({{2, -2}, {-1, 2}}, {2, 4}));
}

TEST(Serre, RankOneHasNoRelations) { EXPECT_TRUE(serre_relations(CartanMatrix::sl2()).empty()); }

TEST(Serre, Sl3) {
  const auto rels = serre_relations(CartanMatrix({{2, -1}, {-1, 2}}));
  ASSERT_EQ(rels.size(), 4u);
  EXPECT_EQ(rels[0].to_string(), "E1^2*E2 - (q + q^-1)*E1*E2*E1 + E2*E1^2 = 0");
  EXPECT_EQ(rels[1].to_string(), "F1^2*F2 - (q + q^-1)*F1*F2*F1 + F2*F1^2 = 0");
  EXPECT_EQ(rels[2].to_string(), "E2^2*E1 - (q + q^-1)*E2*E1*E2 + E1*E2^2 = 0");
  EXPECT_EQ(rels[3].to_string(), "F2^2*F1 - (q + q^-1)*F2*F1*F2 + F1*F2^2 = 0");
  EXPECT_EQ(rels[0].terms[1].second, -q_binomial(2, 1));
}

TEST(Serre, B2UsesQAlpha) {
  const auto rels = serre_relations(CartanMatrix({{2, -2}, {-1, 2}}));
  ASSERT_EQ(rels.size(), 4u);
  // alpha = 1: length-4 relation, q_alpha = q
  ASSERT_EQ(rels[0].terms.size(), 4u);
  for (int k = 0; k <= 3; ++k) {
    const QScalar expected = (k % 2 ? -1 : 1) * q_binomial(3, k);
    EXPECT_EQ(rels[0].terms[k].second, expected) << k;
    EXPECT_EQ(rels[0].terms[k].first.length(), 4);
  }
  // alpha = 2: 1 - a_21 = 2 with q_alpha = q^2
  ASSERT_EQ(rels[2].terms.size(), 3u);
  EXPECT_EQ(rels[2].terms[1].second, -(QScalar::q(2) + QScalar::q(-2)));
}

TEST(Serre, ClassicalLimitMatchesAdjointAction) {
  const std::vector<CartanMatrix> cms = {
      CartanMatrix({{2, -1}, {-1, 2}}), CartanMatrix({{2, -2}, {-1, 2}}),
      CartanMatrix({{2, -1}, {-3, 2}}),
      CartanMatrix({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}),
      CartanMatrix({{2, 0}, {0, 2}})};
  for (const auto& cm : cms)
    for (const auto& rel : serre_relations(cm)) {
      const int m = 1 - cm(rel.alpha, rel.beta);
      const IntCombination oracle = classical_ad_power(rel.alpha, rel.beta, m);
      IntCombination got;
      for (const auto& [w, c] : rel.terms) {
        const mpq_class v = eval_at_one(c);
        ASSERT_EQ(v.get_den(), 1);
        got[flatten(w)] += v.get_num();
      }
      for (auto it = got.begin(); it != got.end();) it = it->second == 0 ? got.erase(it) : std::next(it);
      EXPECT_EQ(got, oracle) << rel.to_string();
    }
}
