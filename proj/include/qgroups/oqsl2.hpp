#pragma once

// O_q(SL2) with normal forms in the basis
//   { X12^b X21^c X11^a } u { X12^b X21^c X22^d : d > 0 }
// and its Hopf structure.

#include <algorithm>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qgroups/detail/memo.hpp"
#include "qgroups/expression_parser.hpp"
#include "qgroups/hopf.hpp"
#include "qgroups/linear_combination.hpp"
#include "qgroups/qscalar.hpp"
#include "qgroups/report.hpp"
#include "qgroups/rewriting.hpp"

namespace qgroups::oq {

/// X12^x12 X21^x21 X11^x11 X22^x22; canonical monomials never have both
/// x11 and x22 positive. Ordered by total degree, then (x12, x21, x11, x22).
struct OMonomial {
  int x11 = 0;
  int x12 = 0;
  int x21 = 0;
  int x22 = 0;

  int degree() const { return x11 + x12 + x21 + x22; }
  bool is_canonical() const {
    return x11 >= 0 && x12 >= 0 && x21 >= 0 && x22 >= 0 && (x11 == 0 || x22 == 0);
  }

  friend bool operator==(const OMonomial& a, const OMonomial& b) {
    return a.x11 == b.x11 && a.x12 == b.x12 && a.x21 == b.x21 && a.x22 == b.x22;
  }
  friend bool operator!=(const OMonomial& a, const OMonomial& b) { return !(a == b); }
  friend bool operator<(const OMonomial& a, const OMonomial& b) {
    return std::make_tuple(a.degree(), a.x12, a.x21, a.x11, a.x22) <
           std::make_tuple(b.degree(), b.x12, b.x21, b.x11, b.x22);
  }
};

using OElement = LinearCombination<OMonomial>;
using OTensorElement = Tensor2<OMonomial>;

inline std::string render_monomial(const OMonomial& m) {
  std::string out;
  auto factor = [&out](const char* g, int n) {
    if (n == 0) return;
    if (!out.empty()) out += "*";
    out += g;
    if (n != 1) out += "^" + std::to_string(n);
  };
  factor("X12", m.x12);
  factor("X21", m.x21);
  factor("X11", m.x11);
  factor("X22", m.x22);
  return out.empty() ? "1" : out;
}

inline std::string render(const OElement& x) { return render_combination(x, render_monomial); }

inline std::string render(const OTensorElement& t) {
  return render_combination(t, [](const std::pair<OMonomial, OMonomial>& k) {
    return render_monomial(k.first) + " (x) " + render_monomial(k.second);
  });
}

inline std::ostream& operator<<(std::ostream& os, const OElement& x) { return os << render(x); }

inline OElement monomial(int x12, int x21, int x11, int x22) {
  const OMonomial m{x11, x12, x21, x22};
  if (!m.is_canonical()) throw std::invalid_argument("X11 and X22 cannot both occur in a basis monomial");
  return OElement(m);
}
inline OElement one() { return OElement(OMonomial{}); }
inline OElement X11() { return monomial(0, 0, 1, 0); }
inline OElement X12() { return monomial(1, 0, 0, 0); }
inline OElement X21() { return monomial(0, 1, 0, 0); }
inline OElement X22() { return monomial(0, 0, 0, 1); }
inline OElement scalar(const QScalar& c) { return one().scaled(c); }

/// Generator X_ij for i, j in {1, 2}.
inline OElement generator(int i, int j) {
  if (i == 1 && j == 1) return X11();
  if (i == 1 && j == 2) return X12();
  if (i == 2 && j == 1) return X21();
  if (i == 2 && j == 2) return X22();
  throw std::invalid_argument("generator indices must be 1 or 2");
}

namespace detail {

// Right multiplication of a normal-form element by one generator.
inline OElement times_x12(const OElement& x) {
  OElement r;
  for (const auto& [m, c] : x)
    r.add_term({m.x11, m.x12 + 1, m.x21, m.x22}, c * QScalar::q(m.x11 - m.x22));
  return r;
}

inline OElement times_x21(const OElement& x) {
  OElement r;
  for (const auto& [m, c] : x)
    r.add_term({m.x11, m.x12, m.x21 + 1, m.x22}, c * QScalar::q(m.x11 - m.x22));
  return r;
}

inline OElement times_x11(const OElement& x) {
  // X22^d X11 = X22^{d-1} + q^{-1-2(d-1)} X12 X21 X22^{d-1}
  OElement r;
  for (const auto& [m, c] : x) {
    if (m.x22 == 0) {
      r.add_term({m.x11 + 1, m.x12, m.x21, 0}, c);
    } else {
      r.add_term({0, m.x12, m.x21, m.x22 - 1}, c);
      r.add_term({0, m.x12 + 1, m.x21 + 1, m.x22 - 1}, c * QScalar::q(-1 - 2 * (m.x22 - 1)));
    }
  }
  return r;
}

inline OElement times_x22(const OElement& x) {
  // X11^a X22 = X11^{a-1} + q^{1+2(a-1)} X12 X21 X11^{a-1}
  OElement r;
  for (const auto& [m, c] : x) {
    if (m.x11 == 0) {
      r.add_term({0, m.x12, m.x21, m.x22 + 1}, c);
    } else {
      r.add_term({m.x11 - 1, m.x12, m.x21, 0}, c);
      r.add_term({m.x11 - 1, m.x12 + 1, m.x21 + 1, 0}, c * QScalar::q(1 + 2 * (m.x11 - 1)));
    }
  }
  return r;
}

}  // namespace detail

struct Traits {
  using monomial = OMonomial;

  static const OElement& multiply_monomials(const OMonomial& a, const OMonomial& b) {
    static qgroups::detail::MemoTable<std::pair<OMonomial, OMonomial>, OElement> memo;
    return memo.get({a, b}, [&] {
      OElement x(a);
      for (int i = 0; i < b.x12; ++i) x = detail::times_x12(x);
      for (int i = 0; i < b.x21; ++i) x = detail::times_x21(x);
      for (int i = 0; i < b.x11; ++i) x = detail::times_x11(x);
      for (int i = 0; i < b.x22; ++i) x = detail::times_x22(x);
      return x;
    });
  }

  /// Delta(X_ij) = X_i1 (x) X_1j + X_i2 (x) X_2j, extended multiplicatively.
  static const OTensorElement& coproduct_monomial(const OMonomial& m) {
    static qgroups::detail::MemoTable<OMonomial, OTensorElement> memo;
    return memo.get(m, [&] {
      using H = HopfOps<Traits>;
      auto delta = [](int i, int j) {
        return H::tensor(generator(i, 1), generator(1, j)) +
               H::tensor(generator(i, 2), generator(2, j));
      };
      OTensorElement r = H::tensor(one(), one());
      for (int k = 0; k < m.x12; ++k) r = H::tensor_multiply(r, delta(1, 2));
      for (int k = 0; k < m.x21; ++k) r = H::tensor_multiply(r, delta(2, 1));
      for (int k = 0; k < m.x11; ++k) r = H::tensor_multiply(r, delta(1, 1));
      for (int k = 0; k < m.x22; ++k) r = H::tensor_multiply(r, delta(2, 2));
      return r;
    });
  }

  static QScalar counit_monomial(const OMonomial& m) {
    return (m.x12 == 0 && m.x21 == 0) ? QScalar(1) : QScalar(0);
  }

  /// S reverses products: S(X12^b X21^c X11^a X22^d) = S(X22)^d S(X11)^a S(X21)^c S(X12)^b.
  static const OElement& antipode_monomial(const OMonomial& m) {
    static qgroups::detail::MemoTable<OMonomial, OElement> memo;
    return memo.get(m, [&] {
      using H = HopfOps<Traits>;
      OElement r = H::power(X11(), static_cast<unsigned>(m.x22));
      r = H::multiply(r, H::power(X22(), static_cast<unsigned>(m.x11)));
      r = H::multiply(r, H::power(X21().scaled(-QScalar::q()), static_cast<unsigned>(m.x21)));
      return H::multiply(r, H::power(X12().scaled(-QScalar::q(-1)), static_cast<unsigned>(m.x12)));
    });
  }

  static std::string render(const OElement& x) { return oq::render(x); }
};

using Hopf = HopfOps<Traits>;

inline OElement multiply(const OElement& x, const OElement& y) { return Hopf::multiply(x, y); }
inline OElement power(const OElement& x, unsigned n) { return Hopf::power(x, n); }
inline OTensorElement coproduct(const OElement& x) { return Hopf::coproduct(x); }
inline QScalar counit(const OElement& x) { return Hopf::counit(x); }
inline OElement antipode(const OElement& x) { return Hopf::antipode(x); }

inline Report check_hopf_axioms(const std::vector<OElement>& samples, SamplePairs pairs = SamplePairs::All) {
  return check_hopf_axioms_with<Traits>(samples, "O_q(SL2) Hopf axioms", pairs);
}

/// Canonical monomials of total degree exactly `d`, in basis order.
inline std::vector<OMonomial> monomials_of_degree(int d) {
  std::vector<OMonomial> out;
  for (int b = 0; b <= d; ++b)
    for (int c = 0; b + c <= d; ++c) {
      const int rest = d - b - c;
      out.push_back({rest, b, c, 0});
      if (rest > 0) out.push_back({0, b, c, rest});
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical monomials of total degree <= d, in basis order.
inline std::vector<OMonomial> monomials_up_to(int d) {
  std::vector<OMonomial> out;
  for (int k = 0; k <= d; ++k) {
    const auto m = monomials_of_degree(k);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

/// A defining relation as a formal sum of words in X11, X12, X21, X22
/// (letters from rewriting::OLetter) that must vanish.
struct Relation {
  std::string name;
  rewriting::WordCombination words;
};

/// The seven defining relations of O_q(SL2), written as "lhs - rhs".
inline std::vector<Relation> defining_relations() {
  using namespace rewriting;
  const QScalar q = QScalar::q();
  auto w = [](Word x, QScalar c = QScalar(1)) { return WordCombination(x, c); };
  return {
      {"X11X12 = qX12X11", w({o11, o12}) - w({o12, o11}, q)},
      {"X11X21 = qX21X11", w({o11, o21}) - w({o21, o11}, q)},
      {"X12X22 = qX22X12", w({o12, o22}) - w({o22, o12}, q)},
      {"X21X22 = qX22X21", w({o21, o22}) - w({o22, o21}, q)},
      {"X12X21 = X21X12", w({o12, o21}) - w({o21, o12})},
      {"X11X22 - X22X11 = (q-q^-1)X12X21",
       w({o11, o22}) - w({o22, o11}) - w({o12, o21}, q - q.inverse())},
      {"X11X22 - qX12X21 = 1", w({o11, o22}) - w({o12, o21}, q) - w({})},
  };
}

/// Evaluates a word combination with the normal-form product.
inline OElement evaluate(const rewriting::WordCombination& x) {
  OElement r;
  for (const auto& [word, c] : x) {
    OElement p = one();
    for (int letter : word) {
      switch (letter) {
        case rewriting::o11: p = multiply(p, X11()); break;
        case rewriting::o12: p = multiply(p, X12()); break;
        case rewriting::o21: p = multiply(p, X21()); break;
        default: p = multiply(p, X22()); break;
      }
    }
    r.add_scaled(p, c);
  }
  return r;
}

/// Checks that the normal-form product satisfies all seven relations.
inline Report relations_check() {
  Report r;
  r.title = "O_q(SL2) relations";
  for (const auto& rel : defining_relations()) {
    const OElement v = evaluate(rel.words);
    r.add(rel.name).record(v.is_zero(), [&] { return render(v); });
  }
  return r;
}

/// Parser grammar: atoms X11, X12, X21, X22, q.
struct Algebra {
  using value_type = OElement;
  static std::vector<std::string_view> atoms() { return {"X11", "X12", "X21", "X22", "q"}; }
  static OElement atom(std::string_view a) {
    if (a == "X11") return X11();
    if (a == "X12") return X12();
    if (a == "X21") return X21();
    if (a == "X22") return X22();
    return scalar(QScalar::q());
  }
  static OElement from_scalar(const QScalar& s) { return scalar(s); }
  static OElement add(const OElement& a, const OElement& b) { return a + b; }
  static OElement mul(const OElement& a, const OElement& b) { return multiply(a, b); }
  static OElement negate(const OElement& a) { return -a; }
  static std::optional<QScalar> as_scalar(const OElement& a) {
    if (a.is_zero()) return QScalar();
    if (a.size() == 1 && a.begin()->first == OMonomial{}) return a.begin()->second;
    return std::nullopt;
  }
  static std::optional<OElement> inverse(const OElement& a) {
    const auto s = as_scalar(a);
    if (!s || s->is_zero()) return std::nullopt;
    return scalar(s->inverse());
  }
};

inline OElement parse(std::string_view text) { return parse_expression<Algebra>(text); }

/// Random element: up to `max_terms` canonical monomials of degree <= max_degree.
inline OElement random_element(std::mt19937_64& rng, int max_degree, int max_terms = 3) {
  static const std::vector<QScalar> pool = {
      QScalar(1),      QScalar(-1),       QScalar(3),         QScalar::q(),
      -QScalar::q(-2), QScalar::q(2) - 1, QScalar(1) / (QScalar::q() - 2),
      QScalar::q() / (QScalar::q(2) + QScalar::q() + 1)};
  const std::vector<OMonomial> basis = monomials_up_to(max_degree);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick_m(0, basis.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_c(0, pool.size() - 1);
  OElement x;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) x.add_term(basis[pick_m(rng)], pool[pick_c(rng)]);
  if (x.is_zero()) x = one();
  return x;
}

}  // namespace qgroups::oq
