#pragma once

// Plain word rewriting for the quadratic presentations of U_q(sl2) and
// O_q(SL2). This is deliberately independent of the closed-form
// multiplication tables in uqsl2.hpp / oqsl2.hpp and serves as the
// confluence oracle for them: reducing a word with different redex choices
// must give the same normal form, and that normal form must agree with the
// table-driven product.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgroups/linear_combination.hpp"
#include "qgroups/qscalar.hpp"

namespace qgroups::rewriting {

using Word = std::vector<int>;
using WordCombination = LinearCombination<Word>;

enum class Strategy { Leftmost, Rightmost };

/// Length-two rewrite rules ab -> sum c_i w_i.
class RewriteSystem {
 public:
  void add_rule(int a, int b, WordCombination rhs) { rules_[{a, b}] = std::move(rhs); }

  /// Position of the chosen redex in `w`, if any.
  std::optional<std::size_t> find_redex(const Word& w, Strategy s) const {
    if (w.size() < 2) return std::nullopt;
    if (s == Strategy::Leftmost) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (rules_.count({w[i], w[i + 1]})) return i;
    } else {
      for (std::size_t i = w.size() - 1; i-- > 0;)
        if (rules_.count({w[i], w[i + 1]})) return i;
    }
    return std::nullopt;
  }

  bool is_normal(const Word& w) const { return !find_redex(w, Strategy::Leftmost); }

  /// Rewrites until no redex remains. Throws if `max_steps` is exceeded.
  WordCombination reduce(const WordCombination& start, Strategy s,
                         std::size_t max_steps = 1000000) const {
    WordCombination done;
    std::map<Word, QScalar> pending(start.begin(), start.end());
    std::size_t steps = 0;
    while (!pending.empty()) {
      auto it = pending.begin();
      Word w = it->first;
      QScalar c = it->second;
      pending.erase(it);
      if (c.is_zero()) continue;
      const auto pos = find_redex(w, s);
      if (!pos) {
        done.add_term(w, c);
        continue;
      }
      if (++steps > max_steps) throw std::runtime_error("rewriting did not terminate");
      const auto& rhs = rules_.at({w[*pos], w[*pos + 1]});
      for (const auto& [r, rc] : rhs) {
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
        next.insert(next.end(), r.begin(), r.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos) + 2, w.end());
        auto [slot, inserted] = pending.try_emplace(std::move(next), c * rc);
        if (!inserted) slot->second += c * rc;
      }
    }
    return done;
  }

  WordCombination reduce(const Word& w, Strategy s) const { return reduce(WordCombination(w), s); }

 private:
  std::map<std::pair<int, int>, WordCombination> rules_;
};

namespace detail {
inline WordCombination term(Word w, QScalar c = QScalar(1)) { return WordCombination(w, c); }
}  // namespace detail

/// U_q(sl2) letters.
enum ULetter : int { uE = 0, uF = 1, uK = 2, uKi = 3 };

/// Rules orienting words towards F* (K*|Ki*) E*.
inline const RewriteSystem& u_system() {
  static const RewriteSystem sys = [] {
    using detail::term;
    RewriteSystem s;
    const QScalar q = QScalar::q();
    const QScalar inv = (q - q.inverse()).inverse();
    s.add_rule(uK, uKi, term({}));
    s.add_rule(uKi, uK, term({}));
    s.add_rule(uE, uF, term({uF, uE}) + term({uK}, inv) - term({uKi}, inv));
    s.add_rule(uE, uK, term({uK, uE}, q.pow(-2)));
    s.add_rule(uE, uKi, term({uKi, uE}, q.pow(2)));
    s.add_rule(uK, uF, term({uF, uK}, q.pow(-2)));
    s.add_rule(uKi, uF, term({uF, uKi}, q.pow(2)));
    return s;
  }();
  return sys;
}

/// O_q(SL2) letters.
enum OLetter : int { o11 = 0, o12 = 1, o21 = 2, o22 = 3 };

/// Rules orienting words towards X12* X21* (X11*|X22*).
inline const RewriteSystem& o_system() {
  static const RewriteSystem sys = [] {
    using detail::term;
    RewriteSystem s;
    const QScalar q = QScalar::q();
    s.add_rule(o11, o12, term({o12, o11}, q));
    s.add_rule(o11, o21, term({o21, o11}, q));
    s.add_rule(o22, o12, term({o12, o22}, q.inverse()));
    s.add_rule(o22, o21, term({o21, o22}, q.inverse()));
    s.add_rule(o21, o12, term({o12, o21}));
    s.add_rule(o11, o22, term({}) + term({o12, o21}, q));
    s.add_rule(o22, o11, term({}) + term({o12, o21}, q.inverse()));
    return s;
  }();
  return sys;
}

}  // namespace qgroups::rewriting
