// qgroups: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgroups/qgroups.hpp"
#include "qgroups/testing/fault_injection.hpp"

using namespace qgroups;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string path;
  std::ostringstream buffer;

  void flush() {
    if (path.empty() || path == "-") {
      std::cout << buffer.str();
      return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << buffer.str();
  }
};

std::string format_report(const Report& r, const std::string& format) {
  return format == "json" ? r.to_json().dump(2) + "\n" : r.to_text();
}

std::vector<uq::UElement> parse_u_list(const std::vector<std::string>& exprs) {
  std::vector<uq::UElement> out;
  for (const auto& e : exprs) out.push_back(uq::parse(e));
  return out;
}

std::vector<oq::OElement> parse_o_list(const std::vector<std::string>& exprs) {
  std::vector<oq::OElement> out;
  for (const auto& e : exprs) out.push_back(oq::parse(e));
  return out;
}

std::string read_matrix_text(const std::string& arg) {
  std::ifstream f(arg);
  if (f) {
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }
  return arg;
}

// "[[2,-1],[-1,2]]" (JSON) or "2,-1;-1,2".
CartanMatrix parse_cartan(const std::string& arg) {
  const std::string text = read_matrix_text(arg);
  CartanMatrix::Rows rows;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      rows = nlohmann::json::parse(text).get<CartanMatrix::Rows>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed Cartan matrix: ") + e.what());
    }
  } else {
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
      rows.emplace_back();
      std::stringstream cs(row);
      std::string cell;
      while (std::getline(cs, cell, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(cell, &used);
        } catch (const std::exception&) {
          throw UsageError("malformed Cartan matrix entry '" + cell + "'");
        }
        if (cell.find_first_not_of(" \t\r\n", used) != std::string::npos)
          throw UsageError("malformed Cartan matrix entry '" + cell + "'");
        rows.back().push_back(v);
      }
    }
  }
  try {
    return CartanMatrix(rows);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid Cartan matrix: ") + e.what());
  }
}

std::string render_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const bool neg = v[i].renders_negative();
    const QScalar mag = neg ? -v[i] : v[i];
    std::string body = detail::divided_power_label(static_cast<long>(i));
    if (!mag.is_one()) body = (mag.is_atomic() ? mag.to_string() : "(" + mag.to_string() + ")") + "*" + body;
    out += out.empty() ? (neg ? "-" : "") + body : (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in U_q(sl2), O_q(SL2) and Kashiwara crystals"};
  app.require_subcommand(1);
  app.footer("Expressions starting with '-' must follow '--', e.g. qgroups normalize uq -- \"-K + F\".");

  std::string format = "text";
  std::string out_path;
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  // normalize
  std::string algebra, expr;
  auto* normalize = app.add_subcommand("normalize", "Print the canonical form of an expression");
  normalize->add_option("algebra", algebra, "uq or oq")->required()->check(CLI::IsMember({"uq", "oq"}));
  normalize->add_option("expr", expr, "Expression")->required();
  add_common(normalize, {"text"});

  // hopf-check
  std::string hopf_algebra = "both";
  int samples = 100, degree = 2;
  std::uint64_t seed = 1;
  bool inject_fault = false, all_pairs = false;
  auto* hopf = app.add_subcommand("hopf-check", "Check the Hopf algebra axioms");
  hopf->add_option("--algebra", hopf_algebra, "uq, oq or both")->check(CLI::IsMember({"uq", "oq", "both"}));
  hopf->add_option("--samples", samples, "Number of random elements (degree <= 3)")->check(CLI::NonNegativeNumber);
  hopf->add_option("--seed", seed, "Random seed");
  hopf->add_option("--degree", degree, "Exponent/degree bound for the exhaustive monomials")
      ->check(CLI::Range(0, 4));
  hopf->add_flag("--inject-fault", inject_fault, "Use a deliberately wrong antipode on U_q(sl2)");
  hopf->add_flag("--all-pairs", all_pairs,
                 "Check the product axioms on all ordered pairs of random elements (default: adjacent pairs)");
  add_common(hopf, {"text", "json"});

  // pair
  std::string u_expr, a_expr;
  auto* pair_cmd = app.add_subcommand("pair", "Evaluate the Hopf pairing (u, a)");
  pair_cmd->add_option("u", u_expr, "Element of U_q(sl2)")->required();
  pair_cmd->add_option("a", a_expr, "Element of O_q(SL2)")->required();
  add_common(pair_cmd, {"text"});

  // act
  int module_n = 0;
  std::string vector_text;
  auto* act_cmd = app.add_subcommand("act", "Act with an element of U_q(sl2) on V(n)");
  act_cmd->add_option("n", module_n, "Highest weight of V(n)")->required()->check(CLI::NonNegativeNumber);
  act_cmd->add_option("u", u_expr, "Element of U_q(sl2)")->required();
  act_cmd->add_option("--vector", vector_text,
                      "Comma-separated coordinates in the basis u, Fu, F^(2)u, ...; default: every basis vector");
  add_common(act_cmd, {"text"});

  // invariants
  std::vector<std::string> gens;
  bool exact = false;
  auto* inv = app.add_subcommand("invariants", "Invariants in O_q(SL2) of a right coideal subalgebra");
  inv->add_option("gens", gens, "Generators in U_q(sl2)");
  inv->add_option("--degree", degree, "Degree bound")->check(CLI::NonNegativeNumber);
  inv->add_flag("--exact", exact, "Only monomials of exactly this degree");
  add_common(inv, {"text", "json"});

  // coideal-check
  auto* coideal = app.add_subcommand("coideal-check", "Check that generators span a right coideal subalgebra");
  coideal->add_option("gens", gens, "Generators in U_q(sl2)")->required();
  coideal->add_option("--degree", degree, "Degree bound")->check(CLI::PositiveNumber);
  add_common(coideal, {"text", "json"});

  // takeuchi
  auto* takeuchi = app.add_subcommand("takeuchi", "Left ideal O_q(SL2) A^+ of a right coideal subalgebra A");
  takeuchi->add_option("gens", gens, "Generators of A in O_q(SL2)")->required();
  takeuchi->add_option("--degree", degree, "Degree bound")->check(CLI::NonNegativeNumber);
  add_common(takeuchi, {"text", "json"});

  // crystal
  bool decompose = false;
  auto* crystal_cmd = app.add_subcommand("crystal", "Build a rank-1 crystal, e.g. \"B(2)(x)B(2)\"");
  crystal_cmd->add_option("expr", expr, "Crystal expression")->required();
  crystal_cmd->add_flag("--decompose", decompose, "Print the highest weights of the components");
  add_common(crystal_cmd, {"text", "dot", "json"});

  // serre
  std::string matrix;
  auto* serre = app.add_subcommand("serre", "List the quantum Serre relations of a Cartan matrix");
  serre->add_option("matrix", matrix, "Inline matrix \"[[2,-1],[-1,2]]\" or \"2,-1;-1,2\", or a file")->required();
  add_common(serre, {"text", "json"});

  // vocke
  std::string lambda = "1", lambda_prime, c_f = "1", c_k = "1";
  int j_power = 2;
  auto* vocke = app.add_subcommand("vocke", "Instantiate and check the list of right coideal subalgebras");
  vocke->add_option("--lambda", lambda, "lambda");
  vocke->add_option("--lambda-prime", lambda_prime, "lambda' (default: from lambda*lambda' = q^2/((1-q^2)(q-q^-1)))");
  vocke->add_option("--cF", c_f, "c_F");
  vocke->add_option("--cK", c_k, "c_K");
  vocke->add_option("--j", j_power, "Exponent j in {EK^-1, K^j} and {F, K^j}");
  vocke->add_option("--degree", degree, "Degree bound for the coideal check")->check(CLI::PositiveNumber);
  add_common(vocke, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Output out{out_path, {}};
  int status = kOk;
  try {
    if (*normalize) {
      out.buffer << (algebra == "uq" ? uq::render(uq::parse(expr)) : oq::render(oq::parse(expr))) << "\n";
    } else if (*hopf) {
      std::mt19937_64 rng(seed);
      const SamplePairs random_pairs = all_pairs ? SamplePairs::All : SamplePairs::Adjacent;
      std::vector<Report> reports;
      if (hopf_algebra != "oq") {
        std::vector<uq::UElement> xs = uq::monomials_up_to(degree);
        std::vector<uq::UElement> rs;
        for (int i = 0; i < samples; ++i) rs.push_back(uq::random_element(rng, 3));
        if (inject_fault) {
          reports.push_back(fault::check_hopf_axioms_with_wrong_antipode(xs));
        } else {
          reports.push_back(uq::check_hopf_axioms(xs));
          reports.back().title += " (monomials, exponents <= " + std::to_string(degree) + ")";
          reports.push_back(uq::check_hopf_axioms(rs, random_pairs));
          reports.back().title += " (" + std::to_string(samples) + " random elements, seed " + std::to_string(seed) + ")";
        }
      }
      if (hopf_algebra != "uq") {
        std::vector<oq::OElement> xs;
        for (const auto& m : oq::monomials_up_to(degree)) xs.emplace_back(m);
        std::vector<oq::OElement> rs;
        for (int i = 0; i < samples; ++i) rs.push_back(oq::random_element(rng, 3));
        reports.push_back(oq::check_hopf_axioms(xs));
        reports.back().title += " (monomials, degree <= " + std::to_string(degree) + ")";
        reports.push_back(oq::check_hopf_axioms(rs, random_pairs));
        reports.back().title += " (" + std::to_string(samples) + " random elements, seed " + std::to_string(seed) + ")";
      }
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(r.to_json());
        out.buffer << j.dump(2) << "\n";
      } else {
        for (const auto& r : reports) out.buffer << r.to_text();
      }
      for (const auto& r : reports)
        if (!r.passed()) status = kCheckFailed;
    } else if (*pair_cmd) {
      out.buffer << pair(uq::parse(u_expr), oq::parse(a_expr)).to_string() << "\n";
    } else if (*act_cmd) {
      const ModuleRep m = build_module(module_n);
      const uq::UElement u = uq::parse(u_expr);
      if (!vector_text.empty()) {
        Vector v;
        std::stringstream ss(vector_text);
        std::string cell;
        while (std::getline(ss, cell, ',')) v.push_back(parse_scalar(cell));
        if (v.size() != m.dim())
          throw UsageError("vector has " + std::to_string(v.size()) + " coordinates, V(" +
                           std::to_string(module_n) + ") has dimension " + std::to_string(m.dim()));
        out.buffer << render_vector(act(m, u, v)) << "\n";
      } else {
        for (std::size_t k = 0; k < m.dim(); ++k) {
          Vector v(m.dim());
          v[k] = QScalar(1);
          out.buffer << detail::divided_power_label(static_cast<long>(k)) << " -> " << render_vector(act(m, u, v))
                     << "\n";
        }
      }
    } else if (*inv) {
      const auto basis = invariants(parse_u_list(gens), degree, exact ? DegreeMode::Exact : DegreeMode::UpTo);
      if (format == "json") {
        nlohmann::json j{{"degree", degree}, {"mode", exact ? "exact" : "up_to"}, {"basis", nlohmann::json::array()}};
        for (const auto& b : basis) j["basis"].push_back(oq::render(b));
        j["note"] = "only the listed generators are imposed";
        out.buffer << j.dump(2) << "\n";
      } else {
        for (const auto& b : basis) out.buffer << oq::render(b) << "\n";
      }
    } else if (*coideal) {
      const Report r = verify_right_coideal(parse_u_list(gens), degree);
      out.buffer << format_report(r, format);
      if (!r.passed()) status = kCheckFailed;
    } else if (*takeuchi) {
      const auto ideal = takeuchi_quotient_ideal(parse_o_list(gens), degree);
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& x : ideal) j.push_back(oq::render(x));
        out.buffer << j.dump(2) << "\n";
      } else {
        for (const auto& x : ideal) out.buffer << oq::render(x) << "\n";
      }
    } else if (*crystal_cmd) {
      const Crystal c = parse_crystal(expr);
      if (decompose) {
        std::vector<long> hw;
        try {
          hw = decompose_rank1(c);
        } catch (const std::logic_error& e) {
          std::cerr << "error: " << e.what() << "\n";
          return kCheckFailed;
        }
        out.buffer << "components:";
        for (std::size_t i = 0; i < hw.size(); ++i) out.buffer << (i ? ", " : " ") << hw[i];
        out.buffer << "\n";
      } else if (format == "dot") {
        out.buffer << to_dot(c);
      } else if (format == "json") {
        out.buffer << to_json(c).dump(2) << "\n";
      } else {
        for (auto v : sorted_vertex_order(c)) {
          const Vertex& x = c.vertex(v);
          out.buffer << x.id << "  " << x.label << "  wt=" << x.wt[0] << " eps=" << x.eps[0].to_string()
                     << " phi=" << x.phi[0].to_string();
          if (auto t = c.f(v, 0)) out.buffer << "  F -> " << c.vertex(*t).id;
          out.buffer << "\n";
        }
      }
    } else if (*serre) {
      const auto rels = serre_relations(parse_cartan(matrix));
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rels) j.push_back(r.to_string());
        out.buffer << j.dump(2) << "\n";
      } else if (rels.empty()) {
        out.buffer << "(no Serre relations in rank 1)\n";
      } else {
        for (const auto& r : rels) out.buffer << r.to_string() << "\n";
      }
    } else if (*vocke) {
      VockeParameters p;
      p.lambda = parse_scalar(lambda);
      if (!lambda_prime.empty()) p.lambda_prime = parse_scalar(lambda_prime);
      p.c_F = parse_scalar(c_f);
      p.c_K = parse_scalar(c_k);
      p.j = j_power;
      const int bound = vocke->count("--degree") ? degree : 3;
      std::vector<CoidealPresentation> catalog;
      try {
        catalog = vocke_catalog(p);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      nlohmann::json j = nlohmann::json::array();
      for (const auto& c : catalog) {
        const Report r = verify_right_coideal(c.gens, bound);
        std::vector<std::string> rendered;
        for (const auto& g : c.gens) rendered.push_back(uq::render(g));
        if (format == "json") {
          j.push_back({{"family", c.label}, {"generators", rendered}, {"report", r.to_json()}});
        } else {
          out.buffer << (r.passed() ? "PASS  " : "FAIL  ") << c.label << ":";
          for (std::size_t i = 0; i < rendered.size(); ++i) out.buffer << (i ? ", " : " ") << rendered[i];
          out.buffer << "\n";
          if (!r.passed()) out.buffer << r.to_text();
        }
        if (!r.passed()) status = kCheckFailed;
      }
      if (format == "json") out.buffer << j.dump(2) << "\n";
    }
    out.flush();
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
