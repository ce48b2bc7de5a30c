#include "matpow/cli.hpp"

#include "matpow/asymptotic.hpp"
#include "matpow/closedform.hpp"
#include "matpow/contour.hpp"
#include "matpow/eigen.hpp"
#include "matpow/error.hpp"
#include "matpow/matrixpow.hpp"
#include "matpow/recurrence.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace matpow::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool is_exact_entry(const json& v) { return v.is_number_integer() || v.is_string(); }

Rational exact_entry(const json& v) {
  if (v.is_number_integer()) return parse_rational(v.dump());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::trunc(d)) return exact_from_double(d);
    throw ParseError("exact flavor requires integer or rational-string entries; got " + v.dump());
  }
  throw ParseError("expected a number or rational string; got " + v.dump());
}

double float_entry(const json& v) {
  if (v.is_number()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError("entry is not finite");
    return d;
  }
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  throw ParseError("expected a number or rational string; got " + v.dump());
}

template <Scalar T>
T entry(const json& v) {
  if constexpr (std::same_as<T, Rational>) {
    return exact_entry(v);
  } else {
    return float_entry(v);
  }
}

template <Scalar T>
SquareMatrix<T> matrix_from(const json& rows) {
  std::vector<std::vector<T>> out;
  for (const json& row : rows) {
    std::vector<T> r;
    for (const json& v : row) r.push_back(entry<T>(v));
    out.push_back(std::move(r));
  }
  return SquareMatrix<T>::from_rows(out);
}

template <Scalar T>
Polynomial<T> poly_from(const json& coeffs) {
  std::vector<T> out;
  for (const json& v : coeffs) out.push_back(entry<T>(v));
  return Polynomial<T>(std::move(out));
}

Flavor parse_flavor(std::string_view name) {
  if (name == "exact") return Flavor::exact;
  if (name == "float") return Flavor::floating;
  throw ParseError("flavor must be \"exact\" or \"float\"; got \"" + std::string(name) + "\"");
}

json exact_number(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(to_string(r));
}

json float_number(double d) {
  if (!std::isfinite(d)) throw RepresentableRangeError("result is not representable as a finite double");
  return json(d);
}

json coeff_json(const CoeffVector<Rational>& b) {
  json out = json::array();
  for (const Rational& v : b.values) out.push_back(to_string(v));
  return out;
}

json coeff_json(const CoeffVector<double>& b) {
  json out = json::array();
  for (double v : b.values) out.push_back(float_number(v));
  return out;
}

json matrix_json(const SquareMatrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const SquareMatrix<double>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(float_number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string cell_text(const Rational& v) { return to_string(v); }
std::string cell_text(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

template <Scalar T>
void print_matrix(std::ostream& out, const SquareMatrix<T>& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const T& v : m.entries()) {
    cells.push_back(cell_text(v));
    width = std::max(width, cells.back().size());
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const std::string& c = cells[i * m.dim() + j];
      out << " " << std::string(width - c.size(), ' ') << c;
    }
    out << "\n";
  }
}

struct Options {
  std::string input = "-";
  std::optional<long> n;
  std::string method = "recurrence";
  std::optional<double> radius;
  std::optional<int> nodes;
  bool verify = false;
  std::optional<std::string> flavor;
  bool json_output = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open input file " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

template <Scalar T>
const Polynomial<T>& poly_of(const InputDocument& doc, std::optional<Polynomial<T>>& storage) {
  if constexpr (std::same_as<T, Rational>) {
    if (doc.exact_poly) return *doc.exact_poly;
    storage = char_poly(*doc.exact_matrix);
  } else {
    if (doc.float_poly) return *doc.float_poly;
    storage = char_poly(*doc.float_matrix);
  }
  return *storage;
}

QuadratureConfig quadrature_for(const Options& opt, const EigenStructure& e) {
  QuadratureConfig cfg = default_quadrature(e);
  if (opt.radius) cfg.radius = *opt.radius;
  if (opt.nodes) cfg.nodes = *opt.nodes;
  return cfg;
}

template <Scalar T>
int cmd_charpoly(const InputDocument& doc, std::ostream& out) {
  std::optional<Polynomial<T>> storage;
  const Polynomial<T>& p = poly_of<T>(doc, storage);
  json arr = json::array();
  for (const T& a : p.low_coeffs()) {
    if constexpr (std::same_as<T, Rational>) {
      arr.push_back(exact_number(a));
    } else {
      arr.push_back(float_number(a));
    }
  }
  out << arr.dump() << "\n";
  return kOk;
}

template <Scalar T>
int cmd_coeffs(const InputDocument& doc, const Options& opt, std::ostream& out) {
  if (!opt.n) throw ParseError("coeffs requires --n");
  const Method method = parse_method(opt.method);
  if (method == Method::binary) throw ParseError("the binary route computes matrices, not coefficients");

  std::optional<Polynomial<T>> storage;
  const Polynomial<T>& p = poly_of<T>(doc, storage);
  const long n = *opt.n;

  ordered_json result;
  result["n"] = n;
  result["method"] = method_name(method);
  if (method == Method::recurrence) {
    result["b"] = coeff_json(coeffs_recurrence(p, n));
  } else {
    const Polynomial<double> pf = to_floating(p);
    if (n < static_cast<long>(pf.degree())) {
      throw RangeError("b_j(n) is defined for n >= k; got n = " + std::to_string(n));
    }
    const EigenStructure e = find_roots(pf);
    CoeffVector<double> b;
    if (method == Method::closedform) {
      b = coeffs_closed_distinct(e, pf, n);
    } else if (method == Method::contour) {
      b = coeffs_contour(pf, n, quadrature_for(opt, e), e);
    } else {
      b = eval_estimate(build_estimate(e, pf), n);
    }
    result["b"] = coeff_json(b);
  }
  out << result.dump() << "\n";
  return kOk;
}

template <Scalar T>
int cmd_power(const InputDocument& doc, const Options& opt, std::ostream& out, std::ostream& err) {
  if (!doc.has_matrix()) throw ParseError("power requires a matrix input");
  if (!opt.n) throw ParseError("power requires --n");
  if (*opt.n < 0) throw ParseError("--n must be non-negative");
  const Method method = parse_method(opt.method);
  const SquareMatrix<T>* m = nullptr;
  if constexpr (std::same_as<T, Rational>) {
    m = &*doc.exact_matrix;
  } else {
    m = &*doc.float_matrix;
  }
  const long n = *opt.n;
  const long k = static_cast<long>(m->dim());

  ordered_json result;
  result["n"] = n;
  Deviation deviation{0.0, 0.0, true};
  std::int64_t coeff_ns = 0;
  std::int64_t reconstruct_ns = 0;
  std::int64_t oracle_ns = 0;
  Method used = method;
  json matrix;
  std::function<void()> print_human;

  if (method == Method::binary || n < k) {
    if (method != Method::binary) {
      err << "note: n < k, using the binary oracle path\n";
      used = Method::binary;
    }
    SquareMatrix<T> power = matrix_power_binary(*m, n);
    matrix = matrix_json(power);
    print_human = [&out, power] { print_matrix(out, power); };
  } else {
    std::optional<QuadratureConfig> cfg;
    if (method == Method::contour && (opt.radius || opt.nodes)) {
      cfg = quadrature_for(opt, find_roots(to_floating(char_poly(*m))));
    }
    PowerReport<T> report = compare_methods(*m, n, {method}, cfg);
    const RouteResult<T>& route = report.routes.front();
    if (!route.ok()) throw UnsupportedStructureError(*route.error);
    deviation = route.deviation;
    coeff_ns = route.coeff_ns;
    reconstruct_ns = route.reconstruct_ns;
    oracle_ns = report.oracle_ns;
    if (route.native) {
      matrix = matrix_json(*route.native);
      print_human = [&out, power = *route.native] { print_matrix(out, power); };
    } else {
      matrix = matrix_json(*route.floating);
      print_human = [&out, power = *route.floating] { print_matrix(out, power); };
    }
  }

  if (opt.json_output) {
    result["method"] = method_name(used);
    result["flavor"] = flavor_name(flavor_of<T>);
    result["matrix"] = matrix;
    if (opt.verify) {
      result["verify"] = {{"max_abs", deviation.max_abs},
                          {"max_rel", deviation.max_rel},
                          {"exact_match", deviation.exact_match}};
    }
    result["timing_ns"] = {{"coefficients", coeff_ns}, {"reconstruction", reconstruct_ns}, {"oracle", oracle_ns}};
    out << result.dump() << "\n";
  } else {
    out << "A^" << n << " via " << method_name(used) << " (" << flavor_name(flavor_of<T>) << "):\n";
    print_human();
    if (opt.verify) {
      out << "max_abs_deviation: " << deviation.max_abs << "\n"
          << "max_rel_deviation: " << deviation.max_rel << "\n"
          << "exact_match: " << (deviation.exact_match ? "true" : "false") << "\n";
    }
  }
  return kOk;
}

}  // namespace

InputDocument parse_input(std::string_view text, std::optional<Flavor> flavor_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "matrix" && key != "poly" && key != "flavor") throw ParseError("unknown input key \"" + key + "\"");
  }
  const bool has_matrix = doc.contains("matrix");
  const bool has_poly = doc.contains("poly");
  if (has_matrix == has_poly) throw ParseError("input needs exactly one of \"matrix\" or \"poly\"");

  std::vector<const json*> entries;
  if (has_matrix) {
    const json& rows = doc["matrix"];
    if (!rows.is_array()) throw ParseError("\"matrix\" must be an array of rows");
    for (const json& row : rows) {
      if (!row.is_array()) throw ParseError("every matrix row must be an array");
      for (const json& v : row) entries.push_back(&v);
    }
  } else {
    const json& coeffs = doc["poly"];
    if (!coeffs.is_array()) throw ParseError("\"poly\" must be an array of coefficients");
    if (coeffs.empty()) throw ParseError("\"poly\" must not be empty");
    for (const json& v : coeffs) entries.push_back(&v);
  }

  InputDocument out;
  if (flavor_override) {
    out.flavor = *flavor_override;
  } else if (doc.contains("flavor")) {
    if (!doc["flavor"].is_string()) throw ParseError("\"flavor\" must be a string");
    out.flavor = parse_flavor(doc["flavor"].get<std::string>());
  } else {
    const bool all_exact = std::all_of(entries.begin(), entries.end(), [](const json* v) { return is_exact_entry(*v); });
    out.flavor = all_exact ? Flavor::exact : Flavor::floating;
  }

  try {
    if (has_matrix) {
      if (out.flavor == Flavor::exact) {
        out.exact_matrix = matrix_from<Rational>(doc["matrix"]);
      } else {
        out.float_matrix = matrix_from<double>(doc["matrix"]);
      }
    } else if (out.flavor == Flavor::exact) {
      out.exact_poly = poly_from<Rational>(doc["poly"]);
    } else {
      out.float_poly = poly_from<double>(doc["poly"]);
    }
  } catch (const InvalidInputError& ex) {
    throw ParseError(ex.what());
  }
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Powers of a square matrix as combinations of its first k powers"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("input", opt.input, "Input JSON file, or - for stdin");
    sub->add_option("--flavor", opt.flavor, "Arithmetic flavor")->check(CLI::IsMember({"exact", "float"}));
    sub->add_flag("--json", opt.json_output, "Machine-readable JSON output");
  };
  auto add_route = [&opt](CLI::App* sub) {
    sub->add_option("-n,--n", opt.n, "Exponent n")->required();
    sub->add_option("--method", opt.method, "Route")
        ->check(CLI::IsMember({"recurrence", "closedform", "contour", "asymptotic", "binary"}));
    sub->add_option("--radius", opt.radius, "Contour radius R (> spectral radius)");
    sub->add_option("--nodes", opt.nodes, "Quadrature nodes N (even, >= 16)");
  };

  CLI::App* charpoly = app.add_subcommand("charpoly", "Print the monic characteristic polynomial a_0..a_{k-1}");
  add_common(charpoly);
  CLI::App* coeffs = app.add_subcommand("coeffs", "Print b_0(n)..b_{k-1}(n)");
  add_common(coeffs);
  add_route(coeffs);
  CLI::App* power = app.add_subcommand("power", "Reconstruct A^n");
  add_common(power);
  add_route(power);
  power->add_flag("--verify", opt.verify, "Compare against the binary-exponentiation oracle");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kParseError;
  }

  InputDocument doc;
  try {
    std::optional<Flavor> flavor;
    if (opt.flavor) flavor = parse_flavor(*opt.flavor);
    doc = parse_input(read_input(opt.input, in), flavor);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kParseError;
  } catch (const DimensionError& ex) {
    err << "error: " << ex.what() << "\n";
    return kDimensionError;
  }

  const bool exact = doc.flavor == Flavor::exact;
  try {
    if (charpoly->parsed()) return exact ? cmd_charpoly<Rational>(doc, out) : cmd_charpoly<double>(doc, out);
    if (coeffs->parsed()) return exact ? cmd_coeffs<Rational>(doc, opt, out) : cmd_coeffs<double>(doc, opt, out);
    return exact ? cmd_power<Rational>(doc, opt, out, err) : cmd_power<double>(doc, opt, out, err);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kParseError;
  } catch (const DimensionError& ex) {
    err << "error: " << ex.what() << "\n";
    return kDimensionError;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kMethodError;
  }
}

}  // namespace matpow::cli
