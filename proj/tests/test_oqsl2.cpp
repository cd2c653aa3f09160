#include <gtest/gtest.h>

#include <random>

#include "qgroups/errors.hpp"
#include "qgroups/oqsl2.hpp"
#include "qgroups/rewriting.hpp"

using namespace qgroups;
using namespace qgroups::oq;
namespace rw = qgroups::rewriting;

namespace {

const QScalar q = QScalar::q();

OElement from_words(const rw::WordCombination& c) {
  OElement out;
  for (const auto& [w, coef] : c) {
    OMonomial m;
    for (int letter : w) {
      if (letter == rw::o11) ++m.x11;
      if (letter == rw::o12) ++m.x12;
      if (letter == rw::o21) ++m.x21;
      if (letter == rw::o22) ++m.x22;
    }
    EXPECT_TRUE(m.is_canonical());
    out.add_term(m, coef);
  }
  return out;
}

}  // namespace

TEST(OqMultiply, Examples) {
  EXPECT_EQ(multiply(X11(), X12()), monomial(1, 0, 1, 0).scaled(q));
  EXPECT_EQ(multiply(X11(), X22()), one() + monomial(1, 1, 0, 0).scaled(q));
  EXPECT_EQ(multiply(X22(), X11()), one() + monomial(1, 1, 0, 0).scaled(q.inverse()));
  EXPECT_EQ(multiply(X12(), X21()), multiply(X21(), X12()));
}

TEST(OqMultiply, NonCanonicalMonomialRejected) {
  EXPECT_THROW(monomial(0, 0, 1, 1), std::invalid_argument);
}

TEST(OqMultiply, DefiningRelationsHold) {
  const Report r = relations_check();
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.checks.size(), 7u);
}

TEST(OqMultiply, ClassicalLimitOfRelations) {
  // At q = 1 the first five relations say the generators commute and the
  // last two give x11x22 - x12x21 = 1 (and x11x22 = x22x11).
  const auto rels = defining_relations();
  ASSERT_EQ(rels.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    std::map<rw::Word, mpq_class> classical;
    for (const auto& [w, c] : rels[i].words) {
      rw::Word sorted = w;
      std::sort(sorted.begin(), sorted.end());
      classical[sorted] += eval_at_one(c);
    }
    for (auto it = classical.begin(); it != classical.end();)
      it = it->second == 0 ? classical.erase(it) : std::next(it);
    if (i < 6) {
      EXPECT_TRUE(classical.empty()) << rels[i].name;
    } else {
      const std::map<rw::Word, mpq_class> det = {
          {{rw::o11, rw::o22}, 1}, {{rw::o12, rw::o21}, -1}, {{}, -1}};
      EXPECT_EQ(classical, det);
    }
  }
}

// Every length-3 word: leftmost and rightmost reduction agree, and agree
// with the table-driven product.
TEST(OqConfluence, AllLengthThreeWords) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const rw::Word w{a, b, c};
        const OElement l = from_words(rw::o_system().reduce(w, rw::Strategy::Leftmost));
        const OElement r = from_words(rw::o_system().reduce(w, rw::Strategy::Rightmost));
        EXPECT_EQ(l, r) << a << b << c;
        EXPECT_EQ(evaluate(rw::WordCombination(w)), l) << a << b << c;
      }
}

TEST(OqConfluence, LongerWordsAgreeWithTable) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> letter(0, 3), len(4, 7);
  for (int i = 0; i < 200; ++i) {
    rw::Word w(len(rng));
    for (auto& x : w) x = letter(rng);
    const OElement l = from_words(rw::o_system().reduce(w, rw::Strategy::Leftmost));
    const OElement r = from_words(rw::o_system().reduce(w, rw::Strategy::Rightmost));
    ASSERT_EQ(l, r);
    ASSERT_EQ(evaluate(rw::WordCombination(w)), l);
  }
}

TEST(OqMultiply, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    const OElement x = random_element(rng, 3), y = random_element(rng, 3),
                   z = random_element(rng, 3);
    EXPECT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
  }
}

TEST(OqCoproduct, Examples) {
  EXPECT_EQ(coproduct(X11()), Hopf::tensor(X11(), X11()) + Hopf::tensor(X12(), X21()));
  EXPECT_EQ(coproduct(one()), Hopf::tensor(one(), one()));
  EXPECT_EQ(coproduct(multiply(X11(), X12())),
            Hopf::tensor_multiply(coproduct(X11()), coproduct(X12())));
}

TEST(OqCounit, Examples) {
  EXPECT_EQ(counit(X12()), QScalar(0));
  EXPECT_EQ(counit(multiply(X11(), X22())), QScalar(1));
  EXPECT_EQ(counit(one()), QScalar(1));
}

TEST(OqAntipode, Examples) {
  EXPECT_EQ(antipode(X21()), X21().scaled(-q));
  EXPECT_EQ(antipode(X12()), X12().scaled(-q.inverse()));
  EXPECT_EQ(antipode(one()), one());
  // S(X11)X11 + S(X12)X21 = X22X11 - q^-1 X12X21 = 1
  EXPECT_EQ(multiply(antipode(X11()), X11()) + multiply(antipode(X12()), X21()), one());
  EXPECT_EQ(Hopf::antipode_left_multiply(coproduct(X11())), one());
}

TEST(OqAntipode, IdentitiesOnDegreeTwoMonomials) {
  for (const auto& m : monomials_up_to(2)) {
    const OElement x(m);
    const OElement target = one().scaled(counit(x));
    EXPECT_EQ(Hopf::antipode_left_multiply(coproduct(x)), target) << render(x);
    EXPECT_EQ(Hopf::antipode_right_multiply(coproduct(x)), target) << render(x);
  }
}

TEST(OqHopf, Axioms) {
  EXPECT_TRUE(check_hopf_axioms({X11(), X12(), X21(), X22()}).passed());
  EXPECT_TRUE(check_hopf_axioms({one()}).passed());
  std::vector<OElement> samples;
  for (const auto& m : monomials_up_to(2)) samples.emplace_back(m);
  std::mt19937_64 rng(47);
  for (int i = 0; i < 8; ++i) samples.push_back(random_element(rng, 3));
  const Report r = check_hopf_axioms(samples);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(OqBasis, MonomialCounts) {
  // (d+2 choose 2) monomials without X22 plus (d+1 choose 2) with X22 = (d+1)^2
  for (int d = 0; d <= 5; ++d)
    EXPECT_EQ(monomials_of_degree(d).size(), static_cast<std::size_t>((d + 1) * (d + 1)));
}

TEST(OqText, ParseAndRender) {
  EXPECT_EQ(render(parse("X11*X22")), "1 + q*X12*X21");
  EXPECT_EQ(render(parse("X22 X11")), "1 + q^-1*X12*X21");
  EXPECT_EQ(render(parse("X11X12")), "q*X12*X11");
  EXPECT_THROW(parse("X13"), parse_error);
  EXPECT_THROW(parse("X11^-1"), parse_error);
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const OElement x = random_element(rng, 3, 4);
    EXPECT_EQ(parse(render(x)), x) << render(x);
  }
}
