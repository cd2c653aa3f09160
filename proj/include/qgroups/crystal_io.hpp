#pragma once

// DOT and JSON export of crystals. Node order is the natural sort of vertex
// ids (digit runs compare numerically), so output is stable for golden files.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgroups/crystal.hpp"

namespace qgroups {

/// "a2" < "a10"; otherwise lexicographic.
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

/// Vertex indices sorted by id.
inline std::vector<std::size_t> sorted_vertex_order(const Crystal& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return natural_less(c.vertex(x).id, c.vertex(y).id);
  });
  return order;
}

namespace detail {
inline std::string weight_text(const Weight& w) {
  if (w.size() == 1) return std::to_string(w[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '\\';
    out += ch;
  }
  return out + "\"";
}
}  // namespace detail

/// One node per vertex labelled "<label>\nwt=<wt>", one edge per F-arrow
/// labelled with its 1-based root index.
inline std::string to_dot(const Crystal& c, const std::string& name = "crystal") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  const auto order = sorted_vertex_order(c);
  for (auto v : order) {
    const Vertex& x = c.vertex(v);
    os << "  " << detail::dot_quote(x.id) << " [label=" << detail::dot_quote(x.label + "\\nwt=" + detail::weight_text(x.wt)) << "];\n";
  }
  for (auto v : order)
    for (std::size_t i = 0; i < c.rank(); ++i)
      if (auto to = c.f(v, i))
        os << "  " << detail::dot_quote(c.vertex(v).id) << " -> " << detail::dot_quote(c.vertex(*to).id)
           << " [label=\"" << i + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace detail {
inline nlohmann::json ext_to_json(ExtInt x) {
  return x.is_finite() ? nlohmann::json(x.value()) : nlohmann::json("-inf");
}
inline ExtInt ext_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "-inf") throw std::invalid_argument("expected integer or \"-inf\"");
    return ExtInt::neg_inf();
  }
  return ExtInt(j.get<long>());
}
}  // namespace detail

/// {datum:{cartan,symmetrizer}, vertices:[{id,label,wt,eps,phi[,boundary]}],
///  edges:[{from,to,root}]} with root 1-based and -inf as the string "-inf".
inline nlohmann::json to_json(const Crystal& c) {
  nlohmann::json j;
  j["datum"] = {{"cartan", c.datum().cartan().entries()},
                {"symmetrizer", c.datum().cartan().symmetrizer()}};
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : c.vertices()) {
    nlohmann::json vj{{"id", v.id}, {"label", v.label}, {"wt", v.wt}};
    vj["eps"] = nlohmann::json::array();
    vj["phi"] = nlohmann::json::array();
    for (auto x : v.eps) vj["eps"].push_back(detail::ext_to_json(x));
    for (auto x : v.phi) vj["phi"].push_back(detail::ext_to_json(x));
    if (v.boundary) vj["boundary"] = true;
    j["vertices"].push_back(vj);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [key, to] : c.edges())
    j["edges"].push_back({{"from", c.vertex(key.first).id}, {"to", c.vertex(to).id}, {"root", key.second + 1}});
  return j;
}

inline Crystal crystal_from_json(const nlohmann::json& j) {
  const auto& dj = j.at("datum");
  CartanMatrix cm(dj.at("cartan").get<CartanMatrix::Rows>(),
                  dj.contains("symmetrizer") ? dj.at("symmetrizer").get<std::vector<int>>()
                                             : std::vector<int>{});
  Crystal c{CartanDatum(cm)};
  for (const auto& vj : j.at("vertices")) {
    Vertex v;
    v.id = vj.at("id").get<std::string>();
    v.label = vj.value("label", v.id);
    v.wt = vj.at("wt").get<Weight>();
    for (const auto& x : vj.at("eps")) v.eps.push_back(detail::ext_from_json(x));
    for (const auto& x : vj.at("phi")) v.phi.push_back(detail::ext_from_json(x));
    v.boundary = vj.value("boundary", false);
    c.add_vertex(std::move(v));
  }
  for (const auto& ej : j.at("edges")) {
    const auto from = c.find(ej.at("from").get<std::string>());
    const auto to = c.find(ej.at("to").get<std::string>());
    const long root = ej.at("root").get<long>();
    if (!from || !to) throw std::invalid_argument("edge refers to an unknown vertex");
    if (root < 1 || static_cast<std::size_t>(root) > c.rank()) throw std::invalid_argument("edge root out of range");
    c.add_edge(*from, static_cast<std::size_t>(root - 1), *to);
  }
  return c;
}

}  // namespace qgroups
