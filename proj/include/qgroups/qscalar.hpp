#pragma once

// Exact arithmetic in Q(q): Laurent polynomials with big-integer coefficients
// and reduced fractions of them.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgroups/errors.hpp"

namespace qgroups {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest exponent. The representation is canonical:
/// the zero polynomial has no coefficients, otherwise the first and last
/// stored coefficients are nonzero.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) : QPoly(mpz_class(c)) {}  // NOLINT(google-explicit-constructor)
  QPoly(const mpz_class& c) {             // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }

  static QPoly monomial(const mpz_class& c, int exponent) {
    QPoly p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
  }
  static QPoly q_power(int exponent) { return monomial(1, exponent); }

  static QPoly from_map(const std::map<int, mpz_class>& terms) {
    QPoly p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && coeffs_[0] == 1; }

  /// Lowest/highest exponent with a nonzero coefficient. Zero for the zero polynomial.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
  }

  mpz_class coeff(int exponent) const {
    if (is_zero() || exponent < low() || exponent > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }
  const mpz_class& lowest_coeff() const { return coeffs_.front(); }
  const mpz_class& leading_coeff() const { return coeffs_.back(); }

  std::map<int, mpz_class> coefficients() const {
    std::map<int, mpz_class> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  /// Multiplies by q^k.
  QPoly shifted(int k) const {
    QPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  /// Substitutes q -> q^d for d >= 1.
  QPoly with_scaled_exponents(int d) const {
    if (d < 1) throw std::invalid_argument("exponent scale must be positive");
    std::map<int, mpz_class> terms;
    for (const auto& [e, c] : coefficients()) terms.emplace(e * d, c);
    return from_map(terms);
  }

  /// Substitutes q -> q^{-1}.
  QPoly bar() const {
    QPoly p;
    if (is_zero()) return p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = -high();
    return p;
  }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  mpz_class value_at_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  QPoly operator-() const {
    QPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  QPoly& operator+=(const QPoly& o) { return add_scaled(o, 1); }
  QPoly& operator-=(const QPoly& o) { return add_scaled(o, -1); }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        mpz_addmul(p.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                   b.coeffs_[j].get_mpz_t());
    }
    p.trim();
    return p;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  /// Divides every coefficient by an integer that divides them all.
  QPoly divexact(const mpz_class& d) const {
    QPoly p = *this;
    for (auto& c : p.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return p;
  }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// Total order used only for deterministic container ordering.
  friend bool operator<(const QPoly& a, const QPoly& b) {
    if (a.low_ != b.low_) return a.low_ < b.low_;
    return a.coeffs_ < b.coeffs_;
  }

  /// Renders with descending exponents, e.g. "q^2 - 3 + 2*q^-1".
  std::string to_string() const;

 private:
  int low_ = 0;
  std::vector<mpz_class> coeffs_;

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }

  QPoly& add_scaled(const QPoly& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = sign > 0 ? o : -o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto& slot = out[static_cast<std::size_t>(o.low_ - lo) + i];
      if (sign > 0)
        slot += o.coeffs_[i];
      else
        slot -= o.coeffs_[i];
    }
    coeffs_ = std::move(out);
    low_ = lo;
    trim();
    return *this;
  }
};

namespace detail {

inline void append_term(std::string& out, const mpz_class& c, int e, bool first) {
  mpz_class mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (e == 0) {
    out += mag.get_str();
    return;
  }
  if (mag != 1) out += mag.get_str() + "*";
  out += "q";
  if (e != 1) out += "^" + std::to_string(e);
}

// Pseudo-remainder of a by b; both must have low() == 0.
inline QPoly pseudo_remainder(QPoly a, const QPoly& b) {
  const mpz_class lb = b.leading_coeff();
  while (!a.is_zero() && a.high() >= b.high()) {
    const int shift = a.high() - b.high();
    const mpz_class la = a.leading_coeff();
    a = a * QPoly(lb) - QPoly::monomial(la, shift) * b;
  }
  return a;
}

inline QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (p.leading_coeff() < 0) c = -c;
  return p.divexact(c);
}

/// gcd in Z[q, q^-1], normalized to low() == 0 and positive leading
/// coefficient. Units q^k are ignored.
inline QPoly poly_gcd(const QPoly& x, const QPoly& y) {
  if (x.is_zero() && y.is_zero()) return QPoly();
  if (x.is_zero()) return primitive_part(y.shifted(-y.low())) * QPoly(y.content());
  if (y.is_zero()) return primitive_part(x.shifted(-x.low())) * QPoly(x.content());
  mpz_class cg;
  const mpz_class cx = x.content();
  const mpz_class cy = y.content();
  mpz_gcd(cg.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
  QPoly a = primitive_part(x.shifted(-x.low()));
  QPoly b = primitive_part(y.shifted(-y.low()));
  if (a.high() < b.high()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.high() == 0) {
      a = QPoly(1);
      break;
    }
    QPoly r = pseudo_remainder(a, b);
    if (!r.is_zero()) r = primitive_part(r.shifted(-r.low()));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a) * QPoly(cg);
}

/// Exact quotient a / b in Z[q, q^-1]; throws std::logic_error if b does not divide a.
inline QPoly poly_divexact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return a;
  if (b.is_monomial()) {
    const mpz_class& c = b.lowest_coeff();
    QPoly r = a.shifted(-b.low());
    for (const auto& [e, v] : r.coefficients())
      if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
        throw std::logic_error("inexact polynomial division");
    return r.divexact(c);
  }
  QPoly rem = a;
  std::map<int, mpz_class> quot;
  while (!rem.is_zero()) {
    if (rem.high() - rem.low() < b.high() - b.low())
      throw std::logic_error("inexact polynomial division");
    const mpz_class& lr = rem.leading_coeff();
    const mpz_class& lb = b.leading_coeff();
    if (!mpz_divisible_p(lr.get_mpz_t(), lb.get_mpz_t()))
      throw std::logic_error("inexact polynomial division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
    const int e = rem.high() - b.high();
    quot[e] += c;
    rem -= QPoly::monomial(c, e) * b;
  }
  return QPoly::from_map(quot);
}

}  // namespace detail

inline std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    detail::append_term(out, coeffs_[i], low_ + static_cast<int>(i), first);
    first = false;
  }
  return out;
}

/// Element of the field Q(q), kept as a reduced fraction of Laurent
/// polynomials. Canonical form: gcd(numerator, denominator) is a unit,
/// the denominator's lowest exponent is 0 and its lowest coefficient is
/// positive. Structural equality therefore decides equality in Q(q).
class QScalar {
 public:
  QScalar() : den_(1) {}
  QScalar(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  QScalar(const mpz_class& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
  QScalar(QPoly p) : num_(std::move(p)), den_(1) {}    // NOLINT(google-explicit-constructor)
  QScalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  QScalar(const mpq_class& r) : num_(r.get_num()), den_(r.get_den()) { normalize(); }  // NOLINT

  /// q^e.
  static QScalar q(int e = 1) { return QScalar(QPoly::q_power(e)); }

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  /// True when the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_one(); }

  QScalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(q)");
    return QScalar(den_, num_);
  }

  QScalar operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend QScalar operator+(const QScalar& a, const QScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return QScalar(a.num_ + b.num_);
    if (a.den_ == b.den_) return QScalar(a.num_ + b.num_, a.den_);
    if (b.den_.is_one()) return raw(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_one()) return raw(a.num_ * b.den_ + b.num_, b.den_);
    return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

  friend QScalar operator*(const QScalar& a, const QScalar& b) {
    if (a.is_zero() || b.is_zero()) return QScalar();
    if (a.den_.is_one() && b.den_.is_one()) return QScalar(a.num_ * b.num_);
    // +-q^k is a unit of Z[q, q^-1]: the product stays reduced.
    if (b.is_unit_monomial()) return raw(a.num_ * b.num_, a.den_);
    if (a.is_unit_monomial()) return raw(a.num_ * b.num_, b.den_);
    // Cross-cancel so that the product of reduced fractions stays reduced.
    const QPoly g1 = detail::poly_gcd(a.num_, b.den_);
    const QPoly g2 = detail::poly_gcd(b.num_, a.den_);
    QPoly n = detail::poly_divexact(a.num_, g1) * detail::poly_divexact(b.num_, g2);
    QPoly d = detail::poly_divexact(a.den_, g2) * detail::poly_divexact(b.den_, g1);
    return raw(std::move(n), std::move(d));
  }
  friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

  QScalar pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    QScalar result(1);
    QScalar base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// q -> q^d.
  QScalar substitute_q_power(int d) const {
    return QScalar(num_.with_scaled_exponents(d), den_.with_scaled_exponents(d));
  }
  /// q -> q^{-1}.
  QScalar bar() const { return QScalar(num_.bar(), den_.bar()); }

  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }
  friend bool operator<(const QScalar& a, const QScalar& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  /// True when the value, written with a positive leading denominator
  /// coefficient, has a negative leading numerator coefficient. Used by
  /// renderers to pull out a minus sign.
  bool renders_negative() const {
    if (is_zero()) return false;
    const bool den_neg = den_.leading_coeff() < 0;
    const bool num_neg = num_.leading_coeff() < 0;
    return den_neg != num_neg;
  }

  /// True when the rendering is a single signed term (no parentheses needed
  /// as a coefficient).
  bool is_atomic() const { return den_.is_one() && num_.term_count() <= 1; }

  /// +-q^k.
  bool is_unit_monomial() const {
    return den_.is_one() && num_.is_monomial() && abs(num_.lowest_coeff()) == 1;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    QPoly n = num_;
    QPoly d = den_;
    if (d.leading_coeff() < 0) {
      n = -n;
      d = -d;
    }
    auto wrap = [](const QPoly& p) {
      return p.term_count() == 1 && p.leading_coeff() > 0 ? p.to_string()
                                                           : "(" + p.to_string() + ")";
    };
    std::string ns = n.term_count() == 1 ? n.to_string() : "(" + n.to_string() + ")";
    return ns + "/" + wrap(d);
  }

  friend std::ostream& operator<<(std::ostream& os, const QScalar& s) {
    return os << s.to_string();
  }

 private:
  QPoly num_;
  QPoly den_;

  // Builds from a fraction already known to be reduced; only the unit
  // normalization is applied.
  static QScalar raw(QPoly n, QPoly d) {
    QScalar s;
    s.num_ = std::move(n);
    s.den_ = std::move(d);
    s.normalize_units();
    return s;
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator in Q(q)");
    if (num_.is_zero()) {
      den_ = QPoly(1);
      return;
    }
    if (den_.is_monomial()) {
      mpz_class g;
      const mpz_class c = num_.content();
      mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.lowest_coeff().get_mpz_t());
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    } else {
      const QPoly g = detail::poly_gcd(num_, den_);
      if (!g.is_one()) {
        num_ = detail::poly_divexact(num_, g);
        den_ = detail::poly_divexact(den_, g);
      }
    }
    normalize_units();
  }

  void normalize_units() {
    if (num_.is_zero()) {
      den_ = QPoly(1);
      return;
    }
    const int s = den_.low();
    if (s != 0) {
      num_ = num_.shifted(-s);
      den_ = den_.shifted(-s);
    }
    if (den_.lowest_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

/// Exact value at q = 1. Throws pole_error when the reduced denominator
/// vanishes at 1.
inline mpq_class eval_at_one(const QScalar& s) {
  const mpz_class d = s.denominator().value_at_one();
  if (d == 0) throw pole_error("rational function has a pole at q = 1: " + s.to_string());
  mpq_class r(s.numerator().value_at_one(), d);
  r.canonicalize();
  return r;
}

/// [n]_q = (q^n - q^{-n}) / (q - q^{-1}); [-n] = -[n].
inline QScalar q_int(long n) {
  if (n == 0) return QScalar();
  const long m = n < 0 ? -n : n;
  // q^{m-1} + q^{m-3} + ... + q^{1-m}
  std::map<int, mpz_class> terms;
  for (long k = 0; k < m; ++k) terms[static_cast<int>(m - 1 - 2 * k)] = 1;
  QScalar r(QPoly::from_map(terms));
  return n < 0 ? -r : r;
}

inline QScalar q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial of a negative integer");
  QScalar r(1);
  for (long k = 2; k <= n; ++k) r *= q_int(k);
  return r;
}

inline QScalar q_binomial(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("q_binomial needs nonnegative arguments");
  if (n > m) throw std::invalid_argument("q_binomial(m, n) needs n <= m");
  QScalar r = q_factorial(m) / (q_factorial(n) * q_factorial(m - n));
  if (!r.is_laurent()) throw std::logic_error("q-binomial did not reduce to a Laurent polynomial");
  for (const auto& [e, c] : r.numerator().coefficients())
    if (c < 0) throw std::logic_error("q-binomial has a negative coefficient");
  return r;
}

}  // namespace qgroups
