#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ellip/grid.hpp"

namespace ellip::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInternal = 3,
  kIo = 4,
};

struct EvalArgs {
  std::string what;  // K, E, perimeter, toader
  std::optional<double> r;
  std::optional<double> a;
  std::optional<double> b;
};

struct CompareArgs {
  GridSpec grid{0.01, 0.99, 99, Spacing::Uniform};
  std::vector<std::string> families;
  std::optional<std::string> output;  // stdout when empty
};

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int cmd_enclose(double r, const std::vector<std::string>& families,
                std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& suite, std::size_t grid, std::ostream& out,
               std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);
int cmd_crossover(const std::string& a, const std::string& b,
                  std::size_t scan_points, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ellip::cli
