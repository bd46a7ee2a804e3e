#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sparsetrace/errors.hpp"
#include "sparsetrace/polynomial.hpp"
#include "sparsetrace/traceform.hpp"

namespace sparsetrace {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDegenerate = 2;
inline constexpr int kExitMismatch = 3;

class InputError : public Error {
 public:
  InputError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct InputSystem {
  std::vector<std::string> vars;
  std::optional<Polynomial> f0;
  std::vector<Polynomial> f;  ///< f1, ..., fk
  std::optional<Polynomial> p;
  std::optional<Polynomial> q;
  std::vector<RootSpec> roots;
  std::optional<long> degree;
  std::optional<Point> monomial;
};

/// Lines `key: value`; keys vars, f0, f1.., p, q, root, degree, monomial; `#` starts a comment.
InputSystem parse_input(std::string_view text);
InputSystem load_input(const std::string& path);

inline const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> commands = {
      "trace",  "chow-trace", "residue",  "torus-residue", "resultant",    "mixed-volume",
      "facets", "denominator", "compare-denominators", "discriminant", "euler-jacobi", "verify"};
  return commands;
}

struct JobSpec {
  std::string command;
  std::string input;
  std::uint64_t seed = 1;
  std::string backend = "auto";  ///< auto, macaulay, ce, oracle
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::optional<std::string> monomial;
};

struct JobResult {
  nlohmann::json document;
  int exit_code = kExitOk;
};

JobResult run_job(const JobSpec& spec);
JobResult run_job(const JobSpec& spec, const InputSystem& input);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparsetrace
