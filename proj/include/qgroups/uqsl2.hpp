#pragma once

// U_q(sl2): PBW normal forms F^a K^b E^c, the Hopf structure and the
// U'_q(sl2) presentation check.

#include <optional>
#include <ostream>
#include <random>
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

namespace qgroups::uq {

/// PBW monomial F^f K^k E^e. Ordered lexicographically on (f, e, k).
struct PBWMonomial {
  int f = 0;
  int k = 0;
  int e = 0;

  int degree() const { return f + e + (k < 0 ? -k : k); }

  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.f == b.f && a.k == b.k && a.e == b.e;
  }
  friend bool operator!=(const PBWMonomial& a, const PBWMonomial& b) { return !(a == b); }
  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    return std::tie(a.f, a.e, a.k) < std::tie(b.f, b.e, b.k);
  }
};

using UElement = LinearCombination<PBWMonomial>;
using UTensorElement = Tensor2<PBWMonomial>;
using UTripleElement = Tensor3<PBWMonomial>;

inline std::string render_monomial(const PBWMonomial& m) {
  std::string out;
  auto factor = [&out](const char* g, int n) {
    if (n == 0) return;
    if (!out.empty()) out += "*";
    out += g;
    if (n != 1) out += "^" + std::to_string(n);
  };
  factor("F", m.f);
  factor("K", m.k);
  factor("E", m.e);
  return out.empty() ? "1" : out;
}

inline std::string render(const UElement& x) { return render_combination(x, render_monomial); }

inline std::string render(const UTensorElement& t) {
  return render_combination(t, [](const std::pair<PBWMonomial, PBWMonomial>& k) {
    return render_monomial(k.first) + " (x) " + render_monomial(k.second);
  });
}

inline std::ostream& operator<<(std::ostream& os, const UElement& x) { return os << render(x); }

inline UElement monomial(int f, int k, int e) { return UElement(PBWMonomial{f, k, e}); }
inline UElement one() { return monomial(0, 0, 0); }
inline UElement E() { return monomial(0, 0, 1); }
inline UElement F() { return monomial(1, 0, 0); }
inline UElement K(int power = 1) { return monomial(0, power, 0); }
inline UElement scalar(const QScalar& c) { return one().scaled(c); }

namespace detail {

/// 1 / (q - q^{-1})
inline const QScalar& inv_q_minus_qinv() {
  static const QScalar value = (QScalar::q() - QScalar::q(-1)).inverse();
  return value;
}

// Right multiplication of a normal-form element by one generator.
inline UElement times_E(const UElement& x) {
  UElement r;
  for (const auto& [m, c] : x) r.add_term({m.f, m.k, m.e + 1}, c);
  return r;
}

inline UElement times_K(const UElement& x, int s) {
  // E^c K^s = q^{-2cs} K^s E^c
  UElement r;
  for (const auto& [m, c] : x) r.add_term({m.f, m.k + s, m.e}, c * QScalar::q(-2 * m.e * s));
  return r;
}

inline UElement times_F(const UElement& x) {
  // K^b F = q^{-2b} F K^b and
  // E^c F = F E^c + [c] (q^{1-c} K - q^{c-1} K^{-1}) / (q - q^{-1}) E^{c-1}
  UElement r;
  for (const auto& [m, c] : x) {
    r.add_term({m.f + 1, m.k, m.e}, c * QScalar::q(-2 * m.k));
    if (m.e > 0) {
      const QScalar base = c * q_int(m.e) * inv_q_minus_qinv();
      r.add_term({m.f, m.k + 1, m.e - 1}, base * QScalar::q(1 - m.e));
      r.add_term({m.f, m.k - 1, m.e - 1}, -(base * QScalar::q(m.e - 1)));
    }
  }
  return r;
}

}  // namespace detail

/// Structure maps of U_q(sl2) on PBW monomials.
struct Traits {
  using monomial = PBWMonomial;

  static const UElement& multiply_monomials(const PBWMonomial& a, const PBWMonomial& b) {
    static qgroups::detail::MemoTable<std::pair<PBWMonomial, PBWMonomial>, UElement> memo;
    return memo.get({a, b}, [&] {
      UElement x(a);
      for (int i = 0; i < b.f; ++i) x = detail::times_F(x);
      if (b.k != 0) x = detail::times_K(x, b.k);
      for (int i = 0; i < b.e; ++i) x = detail::times_E(x);
      return x;
    });
  }

  static const UTensorElement& coproduct_monomial(const PBWMonomial& m) {
    static qgroups::detail::MemoTable<PBWMonomial, UTensorElement> memo;
    return memo.get(m, [&] {
      using H = HopfOps<Traits>;
      const PBWMonomial unit{};
      UTensorElement dE;
      dE.add_term({{0, 0, 1}, unit}, 1);
      dE.add_term({{0, 1, 0}, {0, 0, 1}}, 1);
      UTensorElement dF;
      dF.add_term({{1, 0, 0}, {0, -1, 0}}, 1);
      dF.add_term({unit, {1, 0, 0}}, 1);
      UTensorElement r;
      r.add_term({unit, unit}, 1);
      for (int i = 0; i < m.f; ++i) r = H::tensor_multiply(r, dF);
      if (m.k != 0) {
        UTensorElement dK;
        dK.add_term({{0, m.k, 0}, {0, m.k, 0}}, 1);
        r = H::tensor_multiply(r, dK);
      }
      for (int i = 0; i < m.e; ++i) r = H::tensor_multiply(r, dE);
      return r;
    });
  }

  static QScalar counit_monomial(const PBWMonomial& m) {
    return (m.f == 0 && m.e == 0) ? QScalar(1) : QScalar(0);
  }

  /// S(F^a K^b E^c) = S(E)^c S(K)^b S(F)^a with S(E) = -K^{-1}E, S(F) = -FK.
  static const UElement& antipode_monomial(const PBWMonomial& m) {
    static qgroups::detail::MemoTable<PBWMonomial, UElement> memo;
    return memo.get(m, [&] {
      using H = HopfOps<Traits>;
      const UElement sE = -uq::monomial(0, -1, 1);
      const UElement sF = -uq::monomial(1, 1, 0);
      UElement r = H::power(sE, static_cast<unsigned>(m.e));
      r = H::multiply(r, K(-m.k));
      return H::multiply(r, H::power(sF, static_cast<unsigned>(m.f)));
    });
  }

  static std::string render(const UElement& x) { return uq::render(x); }
};

using Hopf = HopfOps<Traits>;

inline UElement multiply(const UElement& x, const UElement& y) { return Hopf::multiply(x, y); }
inline UElement power(const UElement& x, unsigned n) { return Hopf::power(x, n); }
inline UElement commutator(const UElement& x, const UElement& y) {
  return multiply(x, y) - multiply(y, x);
}
inline UTensorElement coproduct(const UElement& x) { return Hopf::coproduct(x); }
inline QScalar counit(const UElement& x) { return Hopf::counit(x); }
inline UElement antipode(const UElement& x) { return Hopf::antipode(x); }

inline Report check_hopf_axioms(const std::vector<UElement>& samples, SamplePairs pairs = SamplePairs::All) {
  return check_hopf_axioms_with<Traits>(samples, "U_q(sl2) Hopf axioms", pairs);
}

/// L = (K - K^{-1}) / (q - q^{-1}).
inline UElement element_L() { return (K(1) - K(-1)).scaled(detail::inv_q_minus_qinv()); }

/// Verifies the U'_q(sl2) relations for L = (K - K^{-1})/(q - q^{-1}).
inline Report uprime_relations_check() {
  Report r;
  r.title = "U'_q(sl2) relations";
  const UElement L = element_L();
  const QScalar qq = QScalar::q();
  const QScalar qi = QScalar::q(-1);
  auto check = [&](const std::string& name, const UElement& lhs, const UElement& rhs) {
    r.add(name).record(lhs == rhs, [&] { return render(lhs) + " != " + render(rhs); });
  };
  check("KK^-1 = K^-1K = 1", multiply(K(1), K(-1)), one());
  check("K^-1K = 1", multiply(K(-1), K(1)), one());
  check("KEK^-1 = q^2 E", multiply(multiply(K(1), E()), K(-1)), E().scaled(QScalar::q(2)));
  check("KFK^-1 = q^-2 F", multiply(multiply(K(1), F()), K(-1)), F().scaled(QScalar::q(-2)));
  check("[E,F] = L", commutator(E(), F()), L);
  check("(q-q^-1)L = K-K^-1", L.scaled(qq - qi), K(1) - K(-1));
  check("[L,E] = q(EK+K^-1E)", commutator(L, E()),
        (multiply(E(), K(1)) + multiply(K(-1), E())).scaled(qq));
  check("[L,F] = -q^-1(FK+K^-1F)", commutator(L, F()),
        (multiply(F(), K(1)) + multiply(K(-1), F())).scaled(-qi));
  return r;
}

/// Parser grammar: atoms E, F, K, q.
struct Algebra {
  using value_type = UElement;
  static std::vector<std::string_view> atoms() { return {"E", "F", "K", "q"}; }
  static UElement atom(std::string_view a) {
    if (a == "E") return E();
    if (a == "F") return F();
    if (a == "K") return K(1);
    return scalar(QScalar::q());
  }
  static UElement from_scalar(const QScalar& s) { return scalar(s); }
  static UElement add(const UElement& a, const UElement& b) { return a + b; }
  static UElement mul(const UElement& a, const UElement& b) { return multiply(a, b); }
  static UElement negate(const UElement& a) { return -a; }
  static std::optional<QScalar> as_scalar(const UElement& a) {
    if (a.is_zero()) return QScalar();
    if (a.size() == 1 && a.begin()->first == PBWMonomial{}) return a.begin()->second;
    return std::nullopt;
  }
  /// Only nonzero multiples of K^b are invertible.
  static std::optional<UElement> inverse(const UElement& a) {
    if (a.size() != 1) return std::nullopt;
    const auto& [m, c] = *a.begin();
    if (m.f != 0 || m.e != 0) return std::nullopt;
    return monomial(0, -m.k, 0).scaled(c.inverse());
  }
};

inline UElement parse(std::string_view text) { return parse_expression<Algebra>(text); }

/// Random element with at most `max_terms` terms, each of degree
/// f + e + |k| <= max_degree, with coefficients drawn from a fixed pool of
/// integers, q-powers and proper fractions.
inline UElement random_element(std::mt19937_64& rng, int max_degree, int max_terms = 3) {
  static const std::vector<QScalar> pool = {
      QScalar(1),       QScalar(-1),       QScalar(2),         QScalar::q(),
      -QScalar::q(-1),  QScalar::q(2) + 1, QScalar(1) / (QScalar::q() + 1),
      (QScalar::q() - 1) / (QScalar::q(2) + 1)};
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  UElement x;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    PBWMonomial m;
    int budget = exp(rng);
    std::uniform_int_distribution<int> part(0, budget);
    m.f = part(rng);
    budget -= m.f;
    std::uniform_int_distribution<int> part2(0, budget);
    m.e = part2(rng);
    budget -= m.e;
    m.k = sign(rng) ? budget : -budget;
    x.add_term(m, pool[pick(rng)]);
  }
  if (x.is_zero()) x = one();
  return x;
}

/// All monomials with 0 <= f, e <= max_exp and |k| <= max_exp.
inline std::vector<UElement> monomials_up_to(int max_exp) {
  std::vector<UElement> out;
  for (int f = 0; f <= max_exp; ++f)
    for (int k = -max_exp; k <= max_exp; ++k)
      for (int e = 0; e <= max_exp; ++e) out.push_back(monomial(f, k, e));
  return out;
}

}  // namespace qgroups::uq
