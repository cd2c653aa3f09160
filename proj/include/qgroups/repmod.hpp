#pragma once

// Simple type-1 modules V(n) of U_q(sl2) in the divided-power basis
// F^(k)u = F^k u / [k]!, tensor products through the coproduct, coordinate
// functions, and the crystal read off from the action matrices.
//
//   F F^(k)u = [k+1] F^(k+1)u
//   E F^(k)u = [n-k+1] F^(k-1)u   (induction on k via EF = FE + [K; 0]:
//                                  [k][n-k+1] - [k-1][n-k+2] = [n-2k+2])
//   K F^(k)u = q^{n-2k} F^(k)u

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgroups/crystal.hpp"
#include "qgroups/linalg.hpp"
#include "qgroups/report.hpp"
#include "qgroups/uqsl2.hpp"

namespace qgroups {

/// Action matrices of E, F, K, K^{-1} on some finite-dimensional module.
struct Representation {
  Matrix E, F, K, Kinv;

  std::size_t dim() const { return K.rows(); }

  /// Matrix of F^a K^b E^c.
  Matrix monomial_matrix(const uq::PBWMonomial& m) const {
    Matrix r = Matrix::identity(dim());
    for (int i = 0; i < m.e; ++i) r = E * r;
    for (int i = 0; i < (m.k < 0 ? -m.k : m.k); ++i) r = (m.k > 0 ? K : Kinv) * r;
    for (int i = 0; i < m.f; ++i) r = F * r;
    return r;
  }

  Matrix matrix_of(const uq::UElement& u) const {
    Matrix r(dim(), dim());
    for (const auto& [m, c] : u) r = r + c * monomial_matrix(m);
    return r;
  }
};

struct ModuleRep {
  int n = 0;
  Representation rep;

  std::size_t dim() const { return rep.dim(); }
};

inline ModuleRep build_module(int n) {
  if (n < 0) throw std::invalid_argument("V(n) needs n >= 0");
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  ModuleRep m{n, {Matrix(d, d), Matrix(d, d), Matrix(d, d), Matrix(d, d)}};
  for (int k = 0; k <= n; ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    m.rep.K(i, i) = QScalar::q(n - 2 * k);
    m.rep.Kinv(i, i) = QScalar::q(2 * k - n);
    if (k < n) m.rep.F(i + 1, i) = q_int(k + 1);
    if (k > 0) m.rep.E(i - 1, i) = q_int(n - k + 1);
  }
  return m;
}

/// u . v
inline Vector act(const Representation& r, const uq::UElement& u, const Vector& v) {
  if (v.size() != r.dim()) throw std::invalid_argument("vector has wrong dimension");
  Vector out(v.size());
  for (const auto& [m, c] : u) {
    Vector w = v;
    for (int i = 0; i < m.e; ++i) w = r.E * w;
    for (int i = 0; i < (m.k < 0 ? -m.k : m.k); ++i) w = (m.k > 0 ? r.K : r.Kinv) * w;
    for (int i = 0; i < m.f; ++i) w = r.F * w;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!w[i].is_zero()) out[i] += c * w[i];
  }
  return out;
}

inline Vector act(const ModuleRep& m, const uq::UElement& u, const Vector& v) { return act(m.rep, u, v); }

/// Checks KK^{-1} = K^{-1}K = 1, KEK^{-1} = q^2 E, KFK^{-1} = q^{-2} F and
/// EF - FE = (K - K^{-1})/(q - q^{-1}) as matrix identities.
inline Report verify_relations(const Representation& r, std::string title = "module relations") {
  Report rep;
  rep.title = std::move(title);
  const Matrix I = Matrix::identity(r.dim());
  const QScalar q = QScalar::q();
  rep.add("KK^-1 = K^-1K = 1").record(r.K * r.Kinv == I && r.Kinv * r.K == I);
  rep.add("KEK^-1 = q^2 E").record(r.K * r.E * r.Kinv == q.pow(2) * r.E);
  rep.add("KFK^-1 = q^-2 F").record(r.K * r.F * r.Kinv == q.pow(-2) * r.F);
  rep.add("EF - FE = (K - K^-1)/(q - q^-1)")
      .record(r.E * r.F - r.F * r.E == (q - q.inverse()).inverse() * (r.K - r.Kinv));
  return rep;
}

inline Report verify_relations(const ModuleRep& m) {
  Report r = verify_relations(m.rep, "V(" + std::to_string(m.n) + ") relations");
  Vector u(m.dim());
  u[0] = QScalar(1);
  r.add("Eu = 0").record(act(m, uq::E(), u) == Vector(m.dim()));
  Vector ku = u;
  ku[0] = QScalar::q(m.n);
  r.add("Ku = q^n u").record(act(m, uq::K(), u) == ku);
  r.add("K diagonal with q^(n-2k)").record([&] {
    if (!m.rep.K.is_diagonal()) return false;
    for (int k = 0; k <= m.n; ++k)
      if (m.rep.K(k, k) != QScalar::q(m.n - 2 * k)) return false;
    return true;
  }());
  return r;
}

/// Action on a (x) b through the coproduct: g acts by sum c m1 (x) m2 over
/// Delta(g).
inline Representation tensor_representation(const Representation& a, const Representation& b) {
  auto lift = [&](const uq::UElement& g) {
    Matrix r(a.dim() * b.dim(), a.dim() * b.dim());
    for (const auto& [legs, c] : uq::coproduct(g))
      r = r + c * kronecker(a.monomial_matrix(legs.first), b.monomial_matrix(legs.second));
    return r;
  };
  return {lift(uq::E()), lift(uq::F()), lift(uq::K(1)), lift(uq::K(-1))};
}

/// Exponents w of the K-eigenvalues q^w of a diagonal K, with multiplicity.
inline std::vector<long> k_spectrum(const Representation& r) {
  if (!r.K.is_diagonal()) throw std::logic_error("K is not diagonal in this basis");
  std::vector<long> out;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const QScalar& x = r.K(i, i);
    if (!x.is_laurent() || !x.numerator().is_monomial() || x.numerator().lowest_coeff() != 1)
      throw std::logic_error("K eigenvalue is not a power of q");
    out.push_back(x.numerator().low());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Matrix coefficient c_{f,v}: u -> f(u v) in the fixed basis and its dual.
struct CoordinateFunction {
  const ModuleRep* module;
  std::size_t f_index;
  std::size_t v_index;
};

inline QScalar coordinate_function_pair(const CoordinateFunction& cf, const uq::UElement& u) {
  if (cf.f_index >= cf.module->dim() || cf.v_index >= cf.module->dim())
    throw std::out_of_range("coordinate function index out of range");
  Vector v(cf.module->dim());
  v[cf.v_index] = QScalar(1);
  return act(*cf.module, u, v)[cf.f_index];
}

/// Crystal of V(n) read off from the matrices: vertices are the basis
/// vectors, wt is the exponent of the K-eigenvalue, the F-arrow follows the
/// nonzero entry of the F matrix, and eps/phi are the lengths of the E/F
/// strings (largest j with E^j v != 0, resp. F^j v != 0).
inline Crystal crystal_from_module(int n) {
  const ModuleRep m = build_module(n);
  const std::size_t d = m.dim();
  const std::vector<long> spectrum = [&] {
    std::vector<long> w;
    for (std::size_t i = 0; i < d; ++i) w.push_back(m.rep.K(i, i).numerator().low());
    return w;
  }();
  auto string_length = [&](const Matrix& X, std::size_t i) {
    Vector v(d);
    v[i] = QScalar(1);
    long len = 0;
    for (;;) {
      v = X * v;
      bool zero = true;
      for (const auto& x : v) zero = zero && x.is_zero();
      if (zero) return len;
      ++len;
    }
  };
  Crystal c;
  for (std::size_t i = 0; i < d; ++i)
    c.add_vertex({std::to_string(i), detail::divided_power_label(static_cast<long>(i)),
                  {spectrum[i]}, {string_length(m.rep.E, i)}, {string_length(m.rep.F, i)}});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!m.rep.F(j, i).is_zero()) c.add_edge(i, 0, j);
  return c;
}

}  // namespace qgroups
