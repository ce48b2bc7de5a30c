#pragma once

#include "matpow/matrix.hpp"
#include "matpow/polynomial.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matpow::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kDimensionError = 3,
  kMethodError = 4,
};

/// Malformed JSON, schema violations or bad flags.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed input document: exactly one of a matrix or a monic polynomial,
/// stored in the resolved flavor.
struct InputDocument {
  Flavor flavor = Flavor::exact;
  std::optional<SquareMatrix<Rational>> exact_matrix;
  std::optional<SquareMatrix<double>> float_matrix;
  std::optional<Polynomial<Rational>> exact_poly;
  std::optional<Polynomial<double>> float_poly;

  bool has_matrix() const noexcept { return exact_matrix || float_matrix; }
};

/// Schema: {"matrix": [[num, ...], ...]} or {"poly": [num | "p/q", ...]}, with
/// an optional "flavor": "exact" | "float". The override wins over the
/// document. Without either, the flavor is exact when every entry is an
/// integer or rational string, float otherwise.
InputDocument parse_input(std::string_view text, std::optional<Flavor> flavor_override = std::nullopt);

/// Entry point shared by the executable and the tests. args[0] is the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace matpow::cli
