#pragma once

// Hopf pairing U_q(sl2) x O_q(SL2) -> Q(q), the bimodule actions it induces,
// right coideal subalgebras of U_q(sl2), their invariants in O_q(SL2), and the
// Takeuchi-side quotient ideals.
//
// The pairing is not extended by axioms. X_ij is the matrix coefficient
// c_{f_i, v_j} of V(1) with v_1 = u, v_2 = Fu, and the canonical monomial
// X12^b X21^c X11^a X22^d is the coefficient c_{f_I, v_J} of V(1)^{(x)deg}
// with I = (1^b 2^c 1^a 2^d), J = (2^b 1^c 1^a 2^d), where U acts on the
// tensor power through the coproduct. (u, c_{f,v}) = f(u v).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgroups/detail/memo.hpp"
#include "qgroups/linalg.hpp"
#include "qgroups/oqsl2.hpp"
#include "qgroups/repmod.hpp"
#include "qgroups/report.hpp"
#include "qgroups/uqsl2.hpp"

namespace qgroups {

namespace detail {

inline Representation tensor_power_of_v1(std::size_t d) {
  static MemoTable<std::size_t, Representation> table;
  return table.get(d, [d] {
    if (d == 0) return build_module(0).rep;
    return tensor_representation(tensor_power_of_v1(d - 1), build_module(1).rep);
  });
}

/// Row and column multi-indices (0-based, first tensor leg first) of a
/// canonical monomial as a matrix coefficient.
inline std::pair<std::size_t, std::size_t> coefficient_indices(const oq::OMonomial& m) {
  std::size_t row = 0, col = 0;
  auto push = [&](int count, std::size_t i, std::size_t j) {
    for (int t = 0; t < count; ++t) {
      row = 2 * row + i;
      col = 2 * col + j;
    }
  };
  push(m.x12, 0, 1);
  push(m.x21, 1, 0);
  push(m.x11, 0, 0);
  push(m.x22, 1, 1);
  return {row, col};
}

inline QScalar pair_monomials(const uq::PBWMonomial& u, const oq::OMonomial& a) {
  static MemoTable<std::pair<std::tuple<int, int, int>, std::tuple<int, int, int, int>>, QScalar> table;
  return table.get({{u.f, u.k, u.e}, {a.x11, a.x12, a.x21, a.x22}}, [&] {
    const Representation rep = tensor_power_of_v1(static_cast<std::size_t>(a.degree()));
    const auto [row, col] = coefficient_indices(a);
    Vector v(rep.dim());
    v[col] = QScalar(1);
    return act(rep, uq::UElement(u), v)[row];
  });
}

}  // namespace detail

/// (u, a), bilinear.
inline QScalar pair(const uq::UElement& u, const oq::OElement& a) {
  QScalar r;
  for (const auto& [m, c] : u)
    for (const auto& [n, d] : a) {
      const QScalar p = detail::pair_monomials(m, n);
      if (!p.is_zero()) r += c * d * p;
    }
  return r;
}

/// The 4x4 table of generator pairings, rows E, F, K, K^-1 and columns
/// X11, X12, X21, X22.
struct PairingTable {
  static const std::vector<std::string>& row_names() {
    static const std::vector<std::string> names{"E", "F", "K", "K^-1"};
    return names;
  }
  static const std::vector<std::string>& column_names() {
    static const std::vector<std::string> names{"X11", "X12", "X21", "X22"};
    return names;
  }
  static std::vector<uq::UElement> rows() { return {uq::E(), uq::F(), uq::K(1), uq::K(-1)}; }
  static std::vector<oq::OElement> columns() { return {oq::X11(), oq::X12(), oq::X21(), oq::X22()}; }

  std::vector<std::vector<QScalar>> values;

  static PairingTable compute() {
    PairingTable t;
    for (const auto& u : rows()) {
      t.values.emplace_back();
      for (const auto& a : columns()) t.values.back().push_back(pair(u, a));
    }
    return t;
  }

  /// (E,X12) = 1, (F,X21) = 1, (K,X11) = q, (K,X22) = q^-1,
  /// (K^-1,X11) = q^-1, (K^-1,X22) = q, all others 0.
  static PairingTable expected() {
    const QScalar q = QScalar::q();
    PairingTable t;
    t.values = {{0, 1, 0, 0}, {0, 0, 1, 0}, {q, 0, 0, q.inverse()}, {q.inverse(), 0, 0, q}};
    return t;
  }

  std::string to_text() const {
    std::string out = "        ";
    for (const auto& c : column_names()) out += c + std::string(10 - c.size(), ' ');
    out += "\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out += row_names()[i] + std::string(8 - row_names()[i].size(), ' ');
      for (const auto& v : values[i]) {
        const std::string s = v.to_string();
        out += s + std::string(s.size() < 10 ? 10 - s.size() : 1, ' ');
      }
      out += "\n";
    }
    return out;
  }

  friend bool operator==(const PairingTable& a, const PairingTable& b) { return a.values == b.values; }
};

/// a . u = sum (u, a_(1)) a_(2)
inline oq::OElement right_action(const oq::OElement& a, const uq::UElement& u) {
  oq::OElement r;
  for (const auto& [legs, c] : oq::coproduct(a)) {
    const QScalar p = pair(u, oq::OElement(legs.first));
    if (!p.is_zero()) r.add_term(legs.second, c * p);
  }
  return r;
}

/// u . a = sum a_(1) (u, a_(2))
inline oq::OElement left_action(const uq::UElement& u, const oq::OElement& a) {
  oq::OElement r;
  for (const auto& [legs, c] : oq::coproduct(a)) {
    const QScalar p = pair(u, oq::OElement(legs.second));
    if (!p.is_zero()) r.add_term(legs.first, c * p);
  }
  return r;
}

// ------------------------------------------------------ pairing axiom checks

namespace detail {
template <class Tensor, class Fn>
QScalar sum_over_legs(const Tensor& t, Fn&& fn) {
  QScalar r;
  for (const auto& [legs, c] : t) r += c * fn(legs.first, legs.second);
  return r;
}
}  // namespace detail

/// The Hopf pairing axioms, checked on all products of the given samples:
///   (u, ab) = sum (u_(1), a)(u_(2), b)     (uv, a) = sum (u, a_(1))(v, a_(2))
///   (S u, a) = (u, S a)                    (1, a) = eps(a),  (u, 1) = eps(u)
inline Report check_pairing_axioms(const std::vector<uq::UElement>& us, const std::vector<oq::OElement>& as) {
  Report r;
  r.title = "Hopf pairing axioms";
  CheckResult& prod_o = r.add("(u, ab) = sum (u_(1), a)(u_(2), b)");
  CheckResult& prod_u = r.add("(uv, a) = sum (u, a_(1))(v, a_(2))");
  CheckResult& antipode = r.add("(S(u), a) = (u, S(a))");
  CheckResult& unit_u = r.add("(1, a) = eps(a)");
  CheckResult& unit_o = r.add("(u, 1) = eps(u)");

  auto p = [](const uq::PBWMonomial& x, const oq::OMonomial& y) { return detail::pair_monomials(x, y); };
  for (const auto& a : as) {
    unit_u.record(pair(uq::one(), a) == oq::counit(a), [&] { return oq::render(a); });
    const auto da = oq::coproduct(a);
    for (const auto& u : us) {
      antipode.record(pair(uq::antipode(u), a) == pair(u, oq::antipode(a)),
                      [&] { return "u = " + uq::render(u) + ", a = " + oq::render(a); });
      for (const auto& v : us) {
        const QScalar lhs = pair(uq::multiply(u, v), a);
        QScalar rhs;
        for (const auto& [m, c] : u)
          for (const auto& [n, d] : v)
            rhs += c * d * detail::sum_over_legs(da, [&](const oq::OMonomial& a1, const oq::OMonomial& a2) {
                     return p(m, a1) * p(n, a2);
                   });
        prod_u.record(lhs == rhs, [&] {
          return "u = " + uq::render(u) + ", v = " + uq::render(v) + ", a = " + oq::render(a);
        });
      }
    }
  }
  for (const auto& u : us) {
    unit_o.record(pair(u, oq::one()) == uq::counit(u), [&] { return uq::render(u); });
    const auto du = uq::coproduct(u);
    for (const auto& a : as)
      for (const auto& b : as) {
        const QScalar lhs = pair(u, oq::multiply(a, b));
        QScalar rhs;
        for (const auto& [m, c] : a)
          for (const auto& [n, d] : b)
            rhs += c * d * detail::sum_over_legs(du, [&](const uq::PBWMonomial& u1, const uq::PBWMonomial& u2) {
                     return p(u1, m) * p(u2, n);
                   });
        prod_o.record(lhs == rhs, [&] {
          return "u = " + uq::render(u) + ", a = " + oq::render(a) + ", b = " + oq::render(b);
        });
      }
  }
  return r;
}

/// Pairing matrix rows u_i, columns a_j.
inline Matrix pairing_matrix(const std::vector<uq::UElement>& us, const std::vector<oq::OElement>& as) {
  Matrix m(us.size(), as.size());
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < as.size(); ++j) m(i, j) = pair(us[i], as[j]);
  return m;
}

/// Rank of the functionals (., a) for the canonical monomials of degree <=
/// max_degree, tested against the PBW monomials with exponents <= max_degree.
/// Equal to the number of monomials iff they are linearly independent.
inline std::size_t functional_rank(int max_degree) {
  std::vector<oq::OElement> as;
  for (const auto& m : oq::monomials_up_to(max_degree)) as.emplace_back(m);
  return rank(pairing_matrix(uq::monomials_up_to(max_degree), as));
}

// ------------------------------------------------------ right coideals of U

namespace detail {

/// Products of at most `bound` generators (the empty product is 1), as
/// elements, without duplicates.
template <class Element, class Multiply>
std::vector<Element> words_in(const std::vector<Element>& gens, int bound, const Element& one, Multiply&& mul) {
  std::vector<Element> out{one};
  std::vector<Element> layer{one};
  for (int len = 1; len <= bound; ++len) {
    std::vector<Element> next;
    for (const auto& w : layer)
      for (const auto& g : gens) next.push_back(mul(w, g));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Delta(A) in A (x) U for A the subalgebra generated by `gens`, checked on
/// the span of products of at most `degree_bound` generators: for each such
/// product x, the left legs of Delta(x), grouped by the right PBW monomial,
/// must lie in the same span.
inline Report verify_right_coideal(const std::vector<uq::UElement>& gens, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be >= 1");
  Report r;
  r.title = "right coideal check";
  r.notes.push_back("span of products of at most " + std::to_string(degree_bound) + " generators");
  const auto words = detail::words_in(gens, degree_bound, uq::one(),
                                      [](const uq::UElement& a, const uq::UElement& b) { return uq::multiply(a, b); });
  EchelonSpan<uq::PBWMonomial> span;
  for (const auto& w : words) span.insert(w.terms());
  CheckResult& check = r.add("Delta(A) in A (x) U");
  for (const auto& x : words) {
    std::map<uq::PBWMonomial, uq::UElement> legs;
    for (const auto& [pair_, c] : uq::coproduct(x)) legs[pair_.second].add_term(pair_.first, c);
    for (const auto& [right, left] : legs)
      check.record(span.contains(left.terms()), [&] {
        return "left leg " + uq::render(left) + " of Delta(" + uq::render(x) + ") at right factor " +
               uq::render_monomial(right);
      });
  }
  return r;
}

enum class DegreeMode { UpTo, Exact };

/// Basis of { a : a . g = eps(g) a for every generator g } among elements
/// spanned by canonical monomials of degree <= bound (UpTo) or == bound
/// (Exact). Only the listed generators are imposed.
inline std::vector<oq::OElement> invariants(const std::vector<uq::UElement>& gens, int degree_bound,
                                            DegreeMode mode = DegreeMode::UpTo) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
  const std::vector<oq::OMonomial> cols =
      mode == DegreeMode::UpTo ? oq::monomials_up_to(degree_bound) : oq::monomials_of_degree(degree_bound);
  // One block of rows per generator, indexed by the monomials occurring.
  std::vector<std::map<oq::OMonomial, QScalar>> images(cols.size());
  std::map<std::pair<std::size_t, oq::OMonomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, QScalar>>> column_entries(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const oq::OElement a(cols[j]);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const oq::OElement d = right_action(a, gens[g]) - a.scaled(uq::counit(gens[g]));
      for (const auto& [m, c] : d) {
        const auto key = std::make_pair(g, m);
        auto it = row_of.find(key);
        if (it == row_of.end()) it = row_of.emplace(key, row_of.size()).first;
        column_entries[j].emplace_back(it->second, c);
      }
    }
  }
  Matrix m(row_of.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : column_entries[j]) m(i, j) = c;
  std::vector<oq::OElement> out;
  if (row_of.empty()) {
    for (const auto& c : cols) out.emplace_back(c);
    return out;
  }
  for (const auto& v : nullspace(m)) {
    oq::OElement a;
    for (std::size_t j = 0; j < cols.size(); ++j) a.add_term(cols[j], v[j]);
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), [](const oq::OElement& x, const oq::OElement& y) {
    return x.terms().rbegin()->first < y.terms().rbegin()->first;
  });
  return out;
}

/// Spanning set of the left ideal O_q(SL2) A^+ up to degree_bound, where A
/// is generated by `a_gens` and A^+ = A cap ker(eps). Elements are m (w -
/// eps(w)) for canonical monomials m and products w of generators with
/// deg(m) + deg(w) <= degree_bound; dependent elements are dropped.
inline std::vector<oq::OElement> takeuchi_quotient_ideal(const std::vector<oq::OElement>& a_gens, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
  auto degree = [](const oq::OElement& x) {
    int d = 0;
    for (const auto& [m, c] : x) d = std::max(d, m.degree());
    return d;
  };
  std::vector<oq::OElement> a_plus;
  for (const auto& w : detail::words_in(a_gens, degree_bound, oq::one(),
                                        [](const oq::OElement& a, const oq::OElement& b) { return oq::multiply(a, b); })) {
    if (degree(w) > degree_bound) continue;
    oq::OElement x = w - oq::scalar(oq::counit(w));
    if (!x.is_zero()) a_plus.push_back(std::move(x));
  }
  std::vector<oq::OElement> out;
  EchelonSpan<oq::OMonomial> span;
  for (const auto& m : oq::monomials_up_to(degree_bound))
    for (const auto& x : a_plus) {
      if (m.degree() + degree(x) > degree_bound) continue;
      oq::OElement y = oq::multiply(oq::OElement(m), x);
      if (span.insert(y.terms())) out.push_back(std::move(y));
    }
  return out;
}

// --------------------------------------------------------- the catalogue

struct CoidealPresentation {
  std::string label;
  std::vector<uq::UElement> gens;
};

struct VockeParameters {
  QScalar lambda{1};
  std::optional<QScalar> lambda_prime;  // derived from the constraint if unset
  QScalar c_F{1};
  QScalar c_K{1};
  int j = 2;
};

/// q^2 / ((1 - q^2)(q - q^-1)), the value lambda * lambda' must take in the
/// two-generator family.
inline QScalar vocke_constraint_value() {
  const QScalar q = QScalar::q();
  return q.pow(2) / ((QScalar(1) - q.pow(2)) * (q - q.inverse()));
}

/// {EK^-1 + lambda K^-1, F + lambda' K^-1}; throws std::invalid_argument
/// unless lambda lambda' = q^2/((1-q^2)(q-q^-1)).
inline CoidealPresentation vocke_two_generator_family(const QScalar& lambda, const QScalar& lambda_prime) {
  if (lambda * lambda_prime != vocke_constraint_value())
    throw std::invalid_argument("lambda*lambda' = " + (lambda * lambda_prime).to_string() +
                                " violates lambda*lambda' = q^2/((1-q^2)(q-q^-1))");
  const uq::UElement ek = uq::multiply(uq::E(), uq::K(-1));
  return {"{EK^-1 + lambda K^-1, F + lambda' K^-1}",
          {ek + uq::K(-1).scaled(lambda), uq::F() + uq::K(-1).scaled(lambda_prime)}};
}

/// Every family of the list of right coideal subalgebras of U_q(sl2),
/// instantiated at the given parameters.
inline std::vector<CoidealPresentation> vocke_catalog(const VockeParameters& p = {}) {
  const uq::UElement ek = uq::multiply(uq::E(), uq::K(-1));
  const uq::UElement ki = uq::K(-1);
  QScalar lambda_prime;
  if (p.lambda_prime) {
    lambda_prime = *p.lambda_prime;
  } else {
    if (p.lambda.is_zero()) throw std::invalid_argument("lambda = 0 admits no lambda' in the two-generator family");
    lambda_prime = vocke_constraint_value() / p.lambda;
  }
  const std::string j = std::to_string(p.j);
  return {
      {"U_q(sl2)", {uq::E(), uq::F(), uq::K(1), uq::K(-1)}},
      {"U_q^0(sl2)", {uq::K(1), uq::K(-1)}},
      {"U_q^>=0(sl2)", {uq::E(), uq::K(1), uq::K(-1)}},
      {"U_q^<=0(sl2)", {uq::F(), uq::K(1), uq::K(-1)}},
      {"{EK^-1, K^2, K^-2, F}", {ek, uq::K(2), uq::K(-2), uq::F()}},
      {"{EK^-1, K^" + j + "}", {ek, uq::K(p.j)}},
      {"{F, K^" + j + "}", {uq::F(), uq::K(p.j)}},
      {"{EK^-1 + lambda K^-1}", {ek + ki.scaled(p.lambda)}},
      {"{F + lambda' K^-1}", {uq::F() + ki.scaled(lambda_prime)}},
      {"{EK^-1 + c_F F + c_K K^-1}", {ek + uq::F().scaled(p.c_F) + ki.scaled(p.c_K)}},
      vocke_two_generator_family(p.lambda, lambda_prime),
  };
}

}  // namespace qgroups
