#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ellip::cli {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Check> lemmas_suite(std::size_t grid);
std::vector<Check> sharpness_suite(std::size_t grid);
std::vector<Check> remarks_suite(std::size_t grid);

/// Suite by name: lemmas, sharpness, remarks, all. Throws ConfigurationError
/// for anything else.
std::vector<Check> run_suite(std::string_view name, std::size_t grid);

/// The (u, p) pairs used for the sign-pattern classification check.
struct SignSample {
  double u;
  double p;
};
std::vector<SignSample> lemma26_sample();

}  // namespace ellip::cli
