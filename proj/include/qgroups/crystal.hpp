#pragma once

// Kashiwara crystals over an arbitrary Cartan datum: axioms, constructors,
// tensor products (Kashiwara's convention), duals, morphisms and connected
// components.
//
// Weights are written in fundamental-weight coordinates, so (alpha_i^v, wt)
// is simply wt[i] and the simple root alpha_j is column j of the Cartan
// matrix.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgroups/report.hpp"
#include "qgroups/serre.hpp"

namespace qgroups {

/// Integer or -infinity, with -inf + n = -inf and max(-inf, n) = n.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(long v) : finite_(true), v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr ExtInt neg_inf() {
    ExtInt x;
    x.finite_ = false;
    return x;
  }

  constexpr bool is_finite() const { return finite_; }
  long value() const {
    if (!finite_) throw std::logic_error("value() of -inf");
    return v_;
  }

  friend constexpr ExtInt operator+(ExtInt a, long n) { return a.finite_ ? ExtInt(a.v_ + n) : a; }
  friend constexpr ExtInt operator-(ExtInt a, long n) { return a.finite_ ? ExtInt(a.v_ - n) : a; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(ExtInt a, ExtInt b) { return !(a == b); }
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (!a.finite_) return b.finite_;
    return b.finite_ && a.v_ < b.v_;
  }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }

  std::string to_string() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  bool finite_ = true;
  long v_ = 0;
};

inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

using Weight = std::vector<long>;

class CartanDatum {
 public:
  explicit CartanDatum(CartanMatrix cm) : cm_(std::move(cm)) {}
  static CartanDatum sl2() { return CartanDatum(CartanMatrix::sl2()); }

  std::size_t rank() const { return cm_.rank(); }
  const CartanMatrix& cartan() const { return cm_; }

  /// (alpha_i^v, w)
  long pairing(std::size_t i, const Weight& w) const { return w.at(i); }

  /// alpha_j in fundamental-weight coordinates.
  Weight alpha(std::size_t j) const {
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = cm_(i, j);
    return w;
  }

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) { return a.cm_ == b.cm_; }
  friend bool operator!=(const CartanDatum& a, const CartanDatum& b) { return !(a == b); }

 private:
  CartanMatrix cm_;
};

inline Weight operator+(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b.at(i);
  return a;
}
inline Weight operator-(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b.at(i);
  return a;
}
inline Weight operator-(Weight a) {
  for (auto& x : a) x = -x;
  return a;
}

struct Vertex {
  std::string id;
  std::string label;
  Weight wt;
  std::vector<ExtInt> eps;
  std::vector<ExtInt> phi;
  bool boundary = false;  // truncation boundary: missing F-edges tolerated

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.id == b.id && a.label == b.label && a.wt == b.wt && a.eps == b.eps &&
           a.phi == b.phi && a.boundary == b.boundary;
  }
};

/// Finite crystal. Vertices are addressed by index; F-edges are stored and
/// E is the inverse partial map.
class Crystal {
 public:
  using EdgeMap = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

  explicit Crystal(CartanDatum datum = CartanDatum::sl2()) : datum_(std::move(datum)) {}

  const CartanDatum& datum() const { return datum_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  /// Unchecked mutable access, for building deliberately broken crystals.
  Vertex& mutable_vertex(std::size_t i) { return vertices_.at(i); }

  std::size_t add_vertex(Vertex v) {
    if (v.wt.size() != rank() || v.eps.size() != rank() || v.phi.size() != rank())
      throw std::invalid_argument("vertex data has wrong rank");
    if (index_.count(v.id)) throw std::invalid_argument("duplicate vertex id '" + v.id + "'");
    index_.emplace(v.id, vertices_.size());
    vertices_.push_back(std::move(v));
    return vertices_.size() - 1;
  }

  std::optional<std::size_t> find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Declares F_root(from) = to.
  void add_edge(std::size_t from, std::size_t root, std::size_t to) {
    if (from >= size() || to >= size() || root >= rank())
      throw std::out_of_range("edge endpoint or root out of range");
    if (!edges_.emplace(std::make_pair(from, root), to).second)
      throw std::invalid_argument("F already defined on vertex '" + vertices_[from].id + "'");
    reverse_.emplace(std::make_pair(to, root), from);
  }

  void remove_edge(std::size_t from, std::size_t root) {
    auto it = edges_.find({from, root});
    if (it == edges_.end()) return;
    auto range = reverse_.equal_range({it->second, root});
    for (auto r = range.first; r != range.second; ++r)
      if (r->second == from) {
        reverse_.erase(r);
        break;
      }
    edges_.erase(it);
  }

  std::optional<std::size_t> f(std::size_t b, std::size_t root) const {
    auto it = edges_.find({b, root});
    if (it == edges_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> e(std::size_t b, std::size_t root) const {
    auto it = reverse_.find({b, root});
    if (it == reverse_.end()) return std::nullopt;
    return it->second;
  }

  /// Number of F-edges into b for `root`; more than one breaks the axioms.
  std::size_t in_degree(std::size_t b, std::size_t root) const { return reverse_.count({b, root}); }

  const EdgeMap& edges() const { return edges_; }

  friend bool operator==(const Crystal& a, const Crystal& b) {
    return a.datum_ == b.datum_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Crystal& a, const Crystal& b) { return !(a == b); }

 private:
  CartanDatum datum_;
  std::vector<Vertex> vertices_;
  std::map<std::string, std::size_t> index_;
  EdgeMap edges_;
  std::multimap<std::pair<std::size_t, std::size_t>, std::size_t> reverse_;
};

struct ValidateOptions {
  /// Also require eps/phi to equal the lengths of the E/F strings wherever
  /// they are finite (true for B(n) and their tensor products, false for
  /// T_lambda-twisted crystals).
  bool seminormal = true;
  /// Skip the phi string-length check for strings that end at a flagged
  /// truncation boundary.
  bool tolerate_boundary = true;
};

/// Checks every crystal axiom on every vertex and edge.
inline Report validate_crystal(const Crystal& c, ValidateOptions opt = {}) {
  Report r;
  r.title = "crystal axioms";
  const CartanDatum& d = c.datum();
  CheckResult& inf_agree = r.add("eps = -inf iff phi = -inf");
  CheckResult& phi_law = r.add("phi = eps + (alpha^v, wt)");
  CheckResult& inf_isolated = r.add("phi = -inf implies no edges");
  CheckResult& injective = r.add("F injective (E well defined)");
  CheckResult& wt_law = r.add("wt(F b) = wt(b) - alpha");
  CheckResult& eps_law = r.add("eps(F b) = eps(b) + 1");
  CheckResult& phi_edge_law = r.add("phi(F b) = phi(b) - 1");
  CheckResult* upper = opt.seminormal ? &r.add("eps = length of E-string") : nullptr;
  CheckResult* lower = opt.seminormal ? &r.add("phi = length of F-string") : nullptr;

  auto vname = [&](std::size_t b) { return c.vertex(b).id; };
  for (std::size_t b = 0; b < c.size(); ++b) {
    const Vertex& v = c.vertex(b);
    for (std::size_t i = 0; i < c.rank(); ++i) {
      const auto where = [&] { return "vertex " + vname(b) + ", root " + std::to_string(i + 1); };
      inf_agree.record(v.eps[i].is_finite() == v.phi[i].is_finite(), where);
      if (v.eps[i].is_finite() && v.phi[i].is_finite())
        phi_law.record(v.phi[i] == v.eps[i] + d.pairing(i, v.wt), where);
      if (!v.phi[i].is_finite() || !v.eps[i].is_finite())
        inf_isolated.record(!c.f(b, i) && !c.e(b, i), where);
      injective.record(c.in_degree(b, i) <= 1, where);

      if (upper && v.eps[i].is_finite()) {
        long len = 0;
        std::optional<std::size_t> x = c.e(b, i);
        for (; x && len <= static_cast<long>(c.size()); x = c.e(*x, i)) ++len;
        upper->record(v.eps[i] == ExtInt(len), where);
      }
      if (lower && v.phi[i].is_finite()) {
        long len = 0;
        std::size_t last = b;
        for (auto x = c.f(b, i); x && len <= static_cast<long>(c.size()); x = c.f(*x, i)) {
          ++len;
          last = *x;
        }
        if (!(opt.tolerate_boundary && c.vertex(last).boundary))
          lower->record(v.phi[i] == ExtInt(len), where);
      }
    }
  }
  for (const auto& [key, to] : c.edges()) {
    const auto [from, i] = key;
    const Vertex& a = c.vertex(from);
    const Vertex& b = c.vertex(to);
    const auto where = [&, from = from, i = i, to = to] {
      return vname(from) + " -" + std::to_string(i + 1) + "-> " + vname(to);
    };
    wt_law.record(b.wt == a.wt - d.alpha(i), where);
    eps_law.record(b.eps[i] == a.eps[i] + 1, where);
    phi_edge_law.record(b.phi[i] == a.phi[i] - 1, where);
  }
  return r;
}

// ---------------------------------------------------------------- builders

namespace detail {
inline std::string divided_power_label(long k) {
  if (k == 0) return "u";
  if (k == 1) return "Fu";
  return "F^(" + std::to_string(k) + ")u";
}
}  // namespace detail

/// Rank-1 B(n): u -> Fu -> ... -> F^(n)u with wt = n-2k, eps = k, phi = n-k.
inline Crystal b_n(long n) {
  if (n < 0) throw std::invalid_argument("B(n) needs n >= 0");
  Crystal c;
  for (long k = 0; k <= n; ++k)
    c.add_vertex({std::to_string(k), detail::divided_power_label(k), {n - 2 * k}, {k}, {n - k}});
  for (long k = 0; k < n; ++k) c.add_edge(static_cast<std::size_t>(k), 0, static_cast<std::size_t>(k + 1));
  return c;
}

/// T_lambda: one vertex of weight lambda, eps = phi = -inf, no edges.
inline Crystal t_lambda(const Weight& lambda, const CartanDatum& datum) {
  if (lambda.size() != datum.rank()) throw std::invalid_argument("weight has wrong rank");
  Crystal c(datum);
  std::string w;
  for (std::size_t i = 0; i < lambda.size(); ++i) w += (i ? "," : "") + std::to_string(lambda[i]);
  c.add_vertex({"t", "t_" + w, lambda, std::vector<ExtInt>(datum.rank(), ExtInt::neg_inf()),
                std::vector<ExtInt>(datum.rank(), ExtInt::neg_inf())});
  return c;
}
inline Crystal t_lambda(long lambda) { return t_lambda(Weight{lambda}, CartanDatum::sl2()); }

/// Dual crystal: arrows reversed, wt negated, eps and phi swapped.
inline Crystal dual(const Crystal& c) {
  Crystal out(c.datum());
  for (const auto& v : c.vertices())
    out.add_vertex({v.id + "^v", "(" + v.label + ")^v", -v.wt, v.phi, v.eps, v.boundary});
  for (const auto& [key, to] : c.edges()) out.add_edge(to, key.second, key.first);
  return out;
}

/// Tensor product b1 (x) b2. Vertex (i, j) has index i * |b2| + j.
inline Crystal tensor(const Crystal& b1, const Crystal& b2) {
  if (b1.datum() != b2.datum()) throw std::invalid_argument("tensor of crystals over different data");
  const CartanDatum& d = b1.datum();
  const std::size_t n2 = b2.size();
  Crystal out(d);
  for (const auto& x : b1.vertices())
    for (const auto& y : b2.vertices()) {
      Vertex v{"(" + x.id + "," + y.id + ")", x.label + " (x) " + y.label, x.wt + y.wt, {}, {},
               x.boundary || y.boundary};
      for (std::size_t i = 0; i < d.rank(); ++i) {
        v.eps.push_back(max(x.eps[i], y.eps[i] - d.pairing(i, x.wt)));
        v.phi.push_back(max(y.phi[i], x.phi[i] + d.pairing(i, y.wt)));
      }
      out.add_vertex(std::move(v));
    }
  for (std::size_t a = 0; a < b1.size(); ++a)
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t i = 0; i < d.rank(); ++i) {
        std::optional<std::size_t> target;
        if (b1.vertex(a).phi[i] > b2.vertex(b).eps[i]) {
          if (auto fa = b1.f(a, i)) target = *fa * n2 + b;
        } else {
          if (auto fb = b2.f(b, i)) target = a * n2 + *fb;
        }
        if (target) out.add_edge(a * n2 + b, i, *target);
      }
  return out;
}

/// Tagged union; vertex ids become "<k>:<id>" for the k-th summand.
inline Crystal disjoint_union(const std::vector<Crystal>& cs,
                              const CartanDatum& datum = CartanDatum::sl2()) {
  Crystal out(cs.empty() ? datum : cs.front().datum());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].datum() != out.datum()) throw std::invalid_argument("union of crystals over different data");
    const std::size_t offset = out.size();
    for (auto v : cs[k].vertices()) {
      v.id = std::to_string(k) + ":" + v.id;
      out.add_vertex(std::move(v));
    }
    for (const auto& [key, to] : cs[k].edges()) out.add_edge(offset + key.first, key.second, offset + to);
  }
  return out;
}

/// Rank-1 B(infinity) truncated after `depth` steps: b_0 -> ... -> b_depth
/// with wt(b_k) = -k alpha = -2k, eps = k, phi = -k. b_depth is flagged as
/// the truncation boundary.
inline Crystal b_infinity_truncated(long depth, const CartanDatum& datum = CartanDatum::sl2()) {
  if (datum.rank() != 1) throw std::invalid_argument("truncated B(infinity) is only provided in rank 1");
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  Crystal c(datum);
  const long a = datum.alpha(0)[0];
  for (long k = 0; k <= depth; ++k) {
    const std::string label = k == 0 ? "1" : (k == 1 ? "F1" : "F^" + std::to_string(k) + "1");
    c.add_vertex({std::to_string(k), label, {-k * a}, {k}, {k - k * a}, k == depth});
  }
  for (long k = 0; k < depth; ++k) c.add_edge(static_cast<std::size_t>(k), 0, static_cast<std::size_t>(k + 1));
  return c;
}

/// The crystal of the invariants, truncated to the listed highest weights.
inline Crystal crystal_of_invariants(const std::vector<long>& lambdas) {
  std::vector<Crystal> parts;
  for (long n : lambdas) parts.push_back(b_n(n));
  return disjoint_union(parts);
}

/// B(O_q(SL2)) truncated to n <= N: the union of B(n) (x) B(n)^v.
inline Crystal coordinate_ring_crystal(long N) {
  std::vector<Crystal> parts;
  for (long n = 0; n <= N; ++n) parts.push_back(tensor(b_n(n), dual(b_n(n))));
  return disjoint_union(parts);
}

// --------------------------------------------------------------- morphisms

/// Map B1 u {0} -> B2 u {0}; std::nullopt stands for 0.
struct CrystalMorphism {
  std::vector<std::optional<std::size_t>> map;

  static CrystalMorphism identity(const Crystal& c) {
    CrystalMorphism m;
    for (std::size_t i = 0; i < c.size(); ++i) m.map.emplace_back(i);
    return m;
  }
};

/// Pointwise check of the morphism conditions: for psi(b) != 0, wt, eps and
/// phi are preserved, and psi commutes with E and F whenever both sides of
/// the guarded condition are nonzero.
inline Report is_crystal_morphism(const CrystalMorphism& psi, const Crystal& b1, const Crystal& b2) {
  Report r;
  r.title = "crystal morphism";
  CheckResult& shape = r.add("map defined on every vertex");
  shape.record(psi.map.size() == b1.size() && b1.datum() == b2.datum(),
               [] { return std::string("size or datum mismatch"); });
  if (!shape.passed) return r;
  CheckResult& data = r.add("wt, eps, phi preserved");
  CheckResult& ecomm = r.add("psi(E b) = E psi(b)");
  CheckResult& fcomm = r.add("psi(F b) = F psi(b)");
  auto image = [&](std::optional<std::size_t> b) -> std::optional<std::size_t> {
    if (!b) return std::nullopt;
    return psi.map[*b];
  };
  for (std::size_t b = 0; b < b1.size(); ++b) {
    const auto pb = psi.map[b];
    if (!pb) continue;
    if (*pb >= b2.size()) {
      data.record(false, [&] { return "image of " + b1.vertex(b).id + " out of range"; });
      continue;
    }
    const Vertex& x = b1.vertex(b);
    const Vertex& y = b2.vertex(*pb);
    data.record(x.wt == y.wt && x.eps == y.eps && x.phi == y.phi,
                [&] { return x.id + " -> " + y.id; });
    for (std::size_t i = 0; i < b1.rank(); ++i) {
      if (const auto pe = image(b1.e(b, i)))
        ecomm.record(b2.e(*pb, i) == pe, [&] { return "E on " + x.id; });
      if (const auto pf = image(b1.f(b, i)))
        fcomm.record(b2.f(*pb, i) == pf, [&] { return "F on " + x.id; });
    }
  }
  return r;
}

/// Vertex lists of the connected components of the undirected edge graph,
/// each in increasing index order, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> component_vertex_sets(const Crystal& c) {
  std::vector<std::vector<std::size_t>> adj(c.size());
  for (const auto& [key, to] : c.edges()) {
    adj[key.first].push_back(to);
    adj[to].push_back(key.first);
  }
  std::vector<bool> seen(c.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (auto y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Induced sub-crystal on a vertex subset.
inline Crystal subcrystal(const Crystal& c, const std::vector<std::size_t>& subset) {
  Crystal out(c.datum());
  std::map<std::size_t, std::size_t> where;
  for (auto v : subset) where[v] = out.add_vertex(c.vertex(v));
  for (const auto& [key, to] : c.edges()) {
    auto a = where.find(key.first);
    auto b = where.find(to);
    if (a != where.end() && b != where.end()) out.add_edge(a->second, key.second, b->second);
  }
  return out;
}

/// Connected components, each as a crystal.
inline std::vector<Crystal> components(const Crystal& c) {
  std::vector<Crystal> out;
  for (const auto& s : component_vertex_sets(c)) out.push_back(subcrystal(c, s));
  return out;
}

/// Vertices with no incoming E-move, i.e. E_i b = 0 for all i.
inline std::vector<std::size_t> highest_weight_vertices(const Crystal& c) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < c.size(); ++b) {
    bool top = true;
    for (std::size_t i = 0; i < c.rank() && top; ++i) top = !c.e(b, i);
    if (top) out.push_back(b);
  }
  return out;
}

/// Isomorphism a -> b if one exists. Components are matched by propagating
/// a seed assignment along E and F edges; every candidate seed is tried.
inline std::optional<CrystalMorphism> find_isomorphism(const Crystal& a, const Crystal& b) {
  if (a.datum() != b.datum() || a.size() != b.size() || a.edges().size() != b.edges().size())
    return std::nullopt;
  const auto same_data = [&](std::size_t x, std::size_t y) {
    const Vertex& u = a.vertex(x);
    const Vertex& v = b.vertex(y);
    return u.wt == v.wt && u.eps == v.eps && u.phi == v.phi && u.boundary == v.boundary;
  };
  CrystalMorphism psi;
  psi.map.assign(a.size(), std::nullopt);
  std::vector<bool> used(b.size(), false);

  // Extends psi from seed x -> y over x's component; rolls back on failure.
  const auto grow = [&](std::size_t x, std::size_t y) {
    std::vector<std::size_t> assigned;
    std::deque<std::pair<std::size_t, std::size_t>> queue{{x, y}};
    bool ok = true;
    while (!queue.empty() && ok) {
      const auto [u, v] = queue.front();
      queue.pop_front();
      if (psi.map[u]) {
        ok = *psi.map[u] == v;
        continue;
      }
      if (used[v] || !same_data(u, v)) {
        ok = false;
        break;
      }
      psi.map[u] = v;
      used[v] = true;
      assigned.push_back(u);
      for (std::size_t i = 0; i < a.rank() && ok; ++i) {
        const auto fu = a.f(u, i), fv = b.f(v, i);
        const auto eu = a.e(u, i), ev = b.e(v, i);
        if (fu.has_value() != fv.has_value() || eu.has_value() != ev.has_value()) ok = false;
        if (fu && fv) queue.emplace_back(*fu, *fv);
        if (eu && ev) queue.emplace_back(*eu, *ev);
      }
    }
    if (!ok)
      for (auto u : assigned) {
        used[*psi.map[u]] = false;
        psi.map[u].reset();
      }
    return ok;
  };

  for (const auto& comp : component_vertex_sets(a)) {
    const std::size_t seed = comp.front();
    bool matched = false;
    for (std::size_t y = 0; y < b.size() && !matched; ++y)
      if (!used[y] && same_data(seed, y)) matched = grow(seed, y);
    if (!matched) return std::nullopt;
  }
  return psi;
}

inline bool is_isomorphic(const Crystal& a, const Crystal& b) { return find_isomorphism(a, b).has_value(); }

/// Rank-1 decomposition: highest weights of the components in decreasing
/// order. Throws std::logic_error if some component is not isomorphic to a
/// B(m).
inline std::vector<long> decompose_rank1(const Crystal& c) {
  if (c.rank() != 1) throw std::invalid_argument("decompose_rank1 needs a rank-1 crystal");
  std::vector<long> out;
  for (const auto& comp : components(c)) {
    const auto tops = highest_weight_vertices(comp);
    if (tops.size() != 1) throw std::logic_error("component without a unique highest-weight vertex");
    const long m = comp.vertex(tops.front()).wt[0];
    if (m < 0 || !is_isomorphic(comp, b_n(m)))
      throw std::logic_error("component with top " + comp.vertex(tops.front()).id + " is not B(m)");
    out.push_back(m);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace qgroups
