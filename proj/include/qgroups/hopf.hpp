#pragma once

// Generic Hopf-algebra machinery over a monomial basis.
//
// A `Traits` type supplies the structure maps on basis monomials:
//
//   using monomial = ...;                        // totally ordered, default = unit
//   static Element multiply_monomials(m, m);
//   static Tensor  coproduct_monomial(m);
//   static QScalar counit_monomial(m);
//   static Element antipode_monomial(m);
//   static std::string render(const Element&);
//
// Everything else extends (bi)linearly.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgroups/linear_combination.hpp"
#include "qgroups/report.hpp"

namespace qgroups {

template <class Monomial>
using Tensor2 = LinearCombination<std::pair<Monomial, Monomial>>;
template <class Monomial>
using Tensor3 = LinearCombination<std::tuple<Monomial, Monomial, Monomial>>;

template <class Traits>
struct HopfOps {
  using Monomial = typename Traits::monomial;
  using Element = LinearCombination<Monomial>;
  using Tensor = Tensor2<Monomial>;
  using Triple = Tensor3<Monomial>;

  static Element unit() { return Element(Monomial{}); }

  static Element multiply(const Element& x, const Element& y) {
    return bilinear<Element>(x, y, [](const Monomial& a, const Monomial& b) {
      return Traits::multiply_monomials(a, b);
    });
  }

  static Element power(const Element& x, unsigned n) {
    Element r = unit();
    for (unsigned i = 0; i < n; ++i) r = multiply(r, x);
    return r;
  }

  static Tensor coproduct(const Element& x) {
    return x.template map_linear<Tensor>(
        [](const Monomial& m) { return Traits::coproduct_monomial(m); });
  }

  static QScalar counit(const Element& x) {
    QScalar s;
    for (const auto& [m, c] : x) s += c * Traits::counit_monomial(m);
    return s;
  }

  static Element antipode(const Element& x) {
    return x.template map_linear<Element>(
        [](const Monomial& m) { return Traits::antipode_monomial(m); });
  }

  /// Product in the tensor square: (a (x) b)(c (x) d) = ac (x) bd.
  static Tensor tensor_multiply(const Tensor& x, const Tensor& y) {
    Tensor r;
    for (const auto& [k1, c1] : x)
      for (const auto& [k2, c2] : y) {
        const Element& left = Traits::multiply_monomials(k1.first, k2.first);
        const Element& right = Traits::multiply_monomials(k1.second, k2.second);
        const QScalar c = c1 * c2;
        for (const auto& [l, lc] : left)
          for (const auto& [rm, rc] : right) r.add_term({l, rm}, c * lc * rc);
      }
    return r;
  }

  /// Simple tensor a (x) b of two elements.
  static Tensor tensor(const Element& a, const Element& b) {
    Tensor r;
    for (const auto& [l, lc] : a)
      for (const auto& [rm, rc] : b) r.add_term({l, rm}, lc * rc);
    return r;
  }

  /// (Delta (x) id) Delta
  static Triple coproduct_left(const Element& x) {
    Triple r;
    for (const auto& [k, c] : coproduct(x))
      for (const auto& [k1, c1] : Traits::coproduct_monomial(k.first))
        r.add_term({k1.first, k1.second, k.second}, c * c1);
    return r;
  }

  /// (id (x) Delta) Delta
  static Triple coproduct_right(const Element& x) {
    Triple r;
    for (const auto& [k, c] : coproduct(x))
      for (const auto& [k2, c2] : Traits::coproduct_monomial(k.second))
        r.add_term({k.first, k2.first, k2.second}, c * c2);
    return r;
  }

  /// (eps (x) id)
  static Element counit_left(const Tensor& t) {
    Element r;
    for (const auto& [k, c] : t) r.add_term(k.second, c * Traits::counit_monomial(k.first));
    return r;
  }

  /// (id (x) eps)
  static Element counit_right(const Tensor& t) {
    Element r;
    for (const auto& [k, c] : t) r.add_term(k.first, c * Traits::counit_monomial(k.second));
    return r;
  }

  /// mu (S (x) id)
  static Element antipode_left_multiply(const Tensor& t) {
    Element r;
    for (const auto& [k, c] : t)
      r.add_scaled(multiply(Traits::antipode_monomial(k.first), Element(k.second)), c);
    return r;
  }

  /// mu (id (x) S)
  static Element antipode_right_multiply(const Tensor& t) {
    Element r;
    for (const auto& [k, c] : t)
      r.add_scaled(multiply(Element(k.first), Traits::antipode_monomial(k.second)), c);
    return r;
  }
};

/// Exact verification of the Hopf axioms on sample elements.
///
/// Per sample: coassociativity, both counit laws and both antipode identities
/// (mu(S(x)id)Delta = eta eps = mu(id(x)S)Delta). Per pair of samples:
/// Delta and eps are multiplicative and S is anti-multiplicative. `pairs`
/// chooses all ordered pairs or, for large random sample sets, the pairs
/// (x_i, x_i) and (x_i, x_{i+1 mod n}).
enum class SamplePairs { All, Adjacent };

template <class Traits>
Report check_hopf_axioms_with(const std::vector<typename HopfOps<Traits>::Element>& samples,
                              std::string title = "Hopf axioms", SamplePairs pairs = SamplePairs::All) {
  using H = HopfOps<Traits>;
  using Element = typename H::Element;
  Report report;
  report.title = std::move(title);
  auto render = [](const Element& x) { return Traits::render(x); };

  CheckResult& coassoc = report.add("coassociativity");
  CheckResult& counit_l = report.add("counit_left");
  CheckResult& counit_r = report.add("counit_right");
  CheckResult& anti_l = report.add("antipode_left");
  CheckResult& anti_r = report.add("antipode_right");
  CheckResult& delta_mult = report.add("coproduct_multiplicative");
  CheckResult& eps_mult = report.add("counit_multiplicative");
  CheckResult& s_anti = report.add("antipode_antimultiplicative");

  // Unit axioms are part of the bialgebra structure.
  CheckResult& unit = report.add("unit");
  {
    const Element one = H::unit();
    unit.record(H::coproduct(one) == H::tensor(one, one), [] { return std::string("Delta(1)"); });
    unit.record(H::counit(one).is_one(), [] { return std::string("eps(1)"); });
    unit.record(H::antipode(one) == one, [] { return std::string("S(1)"); });
  }

  for (const auto& x : samples) {
    const auto dx = H::coproduct(x);
    coassoc.record(H::coproduct_left(x) == H::coproduct_right(x), [&] { return render(x); });
    counit_l.record(H::counit_left(dx) == x, [&] { return render(x); });
    counit_r.record(H::counit_right(dx) == x, [&] { return render(x); });
    const Element eta_eps = H::unit().scaled(H::counit(x));
    anti_l.record(H::antipode_left_multiply(dx) == eta_eps, [&] {
      return render(x) + " -> " + render(H::antipode_left_multiply(dx));
    });
    anti_r.record(H::antipode_right_multiply(dx) == eta_eps, [&] {
      return render(x) + " -> " + render(H::antipode_right_multiply(dx));
    });
  }

  std::vector<typename H::Tensor> deltas;
  std::vector<Element> antipodes;
  deltas.reserve(samples.size());
  for (const auto& x : samples) {
    deltas.push_back(H::coproduct(x));
    antipodes.push_back(H::antipode(x));
  }
  std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (pairs == SamplePairs::All) {
      for (std::size_t j = 0; j < samples.size(); ++j) index_pairs.emplace_back(i, j);
    } else {
      index_pairs.emplace_back(i, i);
      if (samples.size() > 1) index_pairs.emplace_back(i, (i + 1) % samples.size());
    }
  }
  for (const auto& [i, j] : index_pairs) {
    const Element xy = H::multiply(samples[i], samples[j]);
    auto pair_witness = [&, i = i, j = j] {
      return "(" + render(samples[i]) + ") * (" + render(samples[j]) + ")";
    };
    delta_mult.record(H::coproduct(xy) == H::tensor_multiply(deltas[i], deltas[j]), pair_witness);
    eps_mult.record(H::counit(xy) == H::counit(samples[i]) * H::counit(samples[j]), pair_witness);
    s_anti.record(H::antipode(xy) == H::multiply(antipodes[j], antipodes[i]), pair_witness);
  }
  return report;
}

}  // namespace qgroups
