#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "qgroups/qscalar.hpp"

namespace qgroups {

/// Finite formal sum of basis keys with QScalar coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal. `Key` must be totally ordered.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, QScalar>;

  LinearCombination() = default;
  explicit LinearCombination(const Key& k, QScalar c = QScalar(1)) { add_term(k, std::move(c)); }

  static LinearCombination from_terms(const map_type& terms) {
    LinearCombination r;
    for (const auto& [k, c] : terms) r.add_term(k, c);
    return r;
  }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  QScalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QScalar() : it->second;
  }

  void add_term(const Key& k, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * other
  void add_scaled(const LinearCombination& other, const QScalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : other.terms_) add_term(k, c.is_one() ? v : v * c);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add_scaled(o, QScalar(1));
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add_scaled(o, QScalar(-1));
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  LinearCombination operator-() const { return scaled(QScalar(-1)); }

  LinearCombination scaled(const QScalar& c) const {
    LinearCombination r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, v * c);
    return r;
  }
  friend LinearCombination operator*(const QScalar& c, const LinearCombination& x) {
    return x.scaled(c);
  }

  /// Applies a linear map given on basis keys.
  template <class Out, class Fn>
  Out map_linear(Fn&& on_key) const {
    Out r;
    for (const auto& [k, v] : terms_) r.add_scaled(on_key(k), v);
    return r;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinearCombination& a, const LinearCombination& b) {
    return !(a == b);
  }
  friend bool operator<(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ < b.terms_;
  }

 private:
  map_type terms_;
};

/// Bilinear product of two combinations given a product on basis keys.
template <class Out, class A, class B, class Fn>
Out bilinear(const LinearCombination<A>& x, const LinearCombination<B>& y, Fn&& on_keys) {
  Out r;
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y) r.add_scaled(on_keys(ka, kb), ca * cb);
  return r;
}

}  // namespace qgroups
