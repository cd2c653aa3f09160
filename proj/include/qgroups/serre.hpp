#pragma once

// Cartan matrices and the quantum Serre relations
//
//   sum_{k=0}^{1-a} (-1)^k [1-a choose k]_{q_a} E_a^{1-a-k} E_b E_a^k = 0
//
// for every ordered pair a != b, with q_a = q^{d_a}. The relations are
// emitted as formal sums of free words; nothing is rewritten.

#include <gmpxx.h>

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgroups/qscalar.hpp"

namespace qgroups {

class CartanMatrix {
 public:
  using Rows = std::vector<std::vector<int>>;

  /// Validates `a`. Without `d` the minimal positive symmetrizer is derived;
  /// otherwise `d` is checked against d_i a_ij = d_j a_ji.
  explicit CartanMatrix(Rows a, std::vector<int> d = {}) : a_(std::move(a)), d_(std::move(d)) {
    validate_shape();
    if (d_.empty()) {
      d_ = derive_symmetrizer();
      return;
    }
    if (d_.size() != a_.size()) throw std::invalid_argument("symmetrizer has wrong length");
    for (int x : d_)
      if (x <= 0) throw std::invalid_argument("symmetrizer entries must be positive");
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (d_[i] * a_[i][j] != d_[j] * a_[j][i])
          throw std::invalid_argument("d_i a_ij != d_j a_ji for i=" + std::to_string(i + 1) +
                                      ", j=" + std::to_string(j + 1));
  }

  std::size_t rank() const { return a_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return a_; }
  const std::vector<int>& symmetrizer() const { return d_; }

  static CartanMatrix sl2() { return CartanMatrix(Rows{{2}}); }

  friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) {
    return x.a_ == y.a_ && x.d_ == y.d_;
  }

 private:
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;

  void validate_shape() const {
    if (a_.empty()) throw std::invalid_argument("Cartan matrix is empty");
    const std::size_t n = a_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a_[i].size() != n) throw std::invalid_argument("Cartan matrix is not square");
      if (a_[i][i] != 2) throw std::invalid_argument("diagonal entries must equal 2");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a_[i][j] > 0) throw std::invalid_argument("off-diagonal entries must be <= 0");
        if ((a_[i][j] == 0) != (a_[j][i] == 0))
          throw std::invalid_argument("a_ij = 0 must imply a_ji = 0");
      }
  }

  // d_j = d_i a_ij / a_ji along a spanning forest, then a consistency check.
  std::vector<int> derive_symmetrizer() const {
    const std::size_t n = a_.size();
    std::vector<std::optional<mpq_class>> d(n);
    for (std::size_t root = 0; root < n; ++root) {
      if (d[root]) continue;
      d[root] = mpq_class(1);
      std::vector<std::size_t> stack{root};
      while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || a_[i][j] == 0) continue;
          const mpq_class dj = *d[i] * a_[i][j] / mpq_class(a_[j][i]);
          if (!d[j]) {
            d[j] = dj;
            stack.push_back(j);
          } else if (*d[j] != dj) {
            throw std::invalid_argument("Cartan matrix is not symmetrizable");
          }
        }
      }
    }
    mpz_class l = 1;
    for (const auto& x : d) l = lcm(l, mpz_class(x->get_den()));
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& x : d) {
      const mpz_class v = mpz_class(*x * l);
      ints.push_back(v);
      g = gcd(g, v);
    }
    std::vector<int> out;
    for (const auto& v : ints) out.push_back(static_cast<int>(mpz_class(v / g).get_si()));
    return out;
  }
};

/// One letter of a free word: E_i^n or F_i^n with a 0-based root index.
struct FreeLetter {
  enum Kind : int { E = 0, F = 1 };
  Kind kind;
  int root;
  int exponent;

  friend bool operator==(const FreeLetter& a, const FreeLetter& b) {
    return a.kind == b.kind && a.root == b.root && a.exponent == b.exponent;
  }
  friend bool operator<(const FreeLetter& a, const FreeLetter& b) {
    return std::tie(a.kind, a.root, a.exponent) < std::tie(b.kind, b.root, b.exponent);
  }
};

/// Word in the free algebra; adjacent equal generators are merged so the
/// representation is unique.
class FreeWord {
 public:
  FreeWord() = default;

  FreeWord& append(FreeLetter::Kind kind, int root, int exponent = 1) {
    if (exponent < 0) throw std::invalid_argument("free word exponents must be positive");
    if (exponent == 0) return *this;
    if (!letters_.empty() && letters_.back().kind == kind && letters_.back().root == root)
      letters_.back().exponent += exponent;
    else
      letters_.push_back({kind, root, exponent});
    return *this;
  }

  const std::vector<FreeLetter>& letters() const { return letters_; }
  int length() const {
    int n = 0;
    for (const auto& l : letters_) n += l.exponent;
    return n;
  }

  /// "E1^2*E2", 1-based root indices; "1" for the empty word.
  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& l : letters_) {
      if (!out.empty()) out += "*";
      out += (l.kind == FreeLetter::E ? "E" : "F") + std::to_string(l.root + 1);
      if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
  }

  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.letters_ == b.letters_; }
  friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.letters_ < b.letters_; }

 private:
  std::vector<FreeLetter> letters_;
};

struct SerreRelation {
  FreeLetter::Kind kind;
  int alpha;  // 0-based
  int beta;
  /// Terms in order k = 0, 1, ..., 1 - a_{alpha beta}.
  std::vector<std::pair<FreeWord, QScalar>> terms;

  std::string to_string() const {
    std::string out;
    for (const auto& [w, c] : terms) {
      const bool neg = c.renders_negative();
      const QScalar mag = neg ? -c : c;
      std::string body = w.to_string();
      if (!mag.is_one()) body = (mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")") + "*" + body;
      if (out.empty())
        out = neg ? "-" + body : body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out + " = 0";
  }
};

/// For every ordered pair alpha != beta (lexicographic), the E-type relation
/// followed by the F-type relation.
inline std::vector<SerreRelation> serre_relations(const CartanMatrix& cm) {
  std::vector<SerreRelation> out;
  const int n = static_cast<int>(cm.rank());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (FreeLetter::Kind kind : {FreeLetter::E, FreeLetter::F}) {
        if (a == b) continue;
        const int m = 1 - cm(a, b);
        const int da = cm.symmetrizer()[a];
        SerreRelation rel{kind, a, b, {}};
        for (int k = 0; k <= m; ++k) {
          FreeWord w;
          w.append(kind, a, m - k).append(kind, b).append(kind, a, k);
          QScalar c = q_binomial(m, k).substitute_q_power(da);
          if (k % 2 == 1) c = -c;
          rel.terms.emplace_back(std::move(w), std::move(c));
        }
        out.push_back(std::move(rel));
      }
  return out;
}

}  // namespace qgroups
