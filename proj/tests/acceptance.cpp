// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ellip/bounds.hpp"
#include "ellip/constants.hpp"
#include "ellip/elliptic.hpp"
#include "ellip/grid.hpp"
#include "ellip/lemmas.hpp"
#include "ellip/verify.hpp"
#include "oracles.hpp"
#include "suites.hpp"

using namespace ellip;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

// True when the first six decimals of x are the digits of `shown`
// (published constants are truncated, as in 0.989539...).
bool six_decimals(double x, double shown) { return x >= shown && x < shown + 1e-6; }

// Runs the CLI binary and captures stdout; returns the exit status.
int shell(const std::string& args, std::string& out) {
  const std::string cmd = std::string(ELLIP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::array<char, 4096> buf{};
  out.clear();
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) out += buf.data();
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key, 0) == 0) {
      const auto pos = line.find_first_not_of(' ', key.size());
      return pos == std::string::npos ? "" : line.substr(pos);
    }
  }
  return "";
}

Outcome reference_accuracy() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double r : uniform_grid(0.01, 0.99, 1000)) {
    const auto v = complete_ke(Modulus(r));
    worst = std::max(worst, std::abs(v.k_val - oracle::quad_k(r)) / v.k_val);
    worst = std::max(worst, std::abs(v.e_val - oracle::quad_e(r)) / v.e_val);
  }
  const double secs = seconds_since(t0);
  return {worst < 1e-12 && secs < 1.0,
          "max relative error vs Gauss-Kronrod " + num(worst) + " on 1000 points, " +
              num(secs) + " s"};
}

Outcome limit_values() {
  const auto one = Modulus::from_complement(1e-14);
  const double aq = alzer_qiu_upper(one);
  const double vu = vuorinen_lower(one);
  const double f1 = lemma25_f1(2.0);
  const double f2 = lemma25_f2(2.0);
  const auto p7 = sweep_monotone("lemma22.7", 10000);
  const bool ok = six_decimals(aq, 1.026172) && six_decimals(vu, 0.989539) &&
                  six_decimals(f1, 1.265625) && six_decimals(f2, 1.306122) &&
                  std::abs(p7.left_limit - kPi * kPi / 2.0) < 1e-3 &&
                  std::abs(p7.right_limit - (16.0 - kPi * kPi)) < 1e-3;
  std::ostringstream d;
  d.precision(7);
  d << std::fixed << "alzer-qiu(1-) " << aq << ", vuorinen(1-) " << vu << ", f1(2) " << f1
    << ", f2(2) " << f2 << ", part 7 limits " << p7.left_limit << " / " << p7.right_limit;
  return {ok, d.str()};
}

Outcome validity() {
  const auto t0 = Clock::now();
  const auto fams = sharp_families();
  std::size_t violations = 0;
  for (const auto& v : validity_sweep(fams, 10000)) violations += v.violations;
  const double secs = seconds_since(t0);
  return {violations == 0 && fams.size() == 13 && secs < 10.0,
          std::to_string(fams.size()) + " families, 10000 points, " +
              std::to_string(violations) + " violations, " + num(secs) + " s"};
}

Outcome sharpness() {
  const auto& c = sharp_constants();
  std::vector<std::pair<BoundSpec, Side>> cases = {
      {BoundSpec::thm11(c.beta_star + 1e-3), Side::Lower},
      {BoundSpec::thm11(c.alpha_star - 1e-3), Side::Upper}};
  for (double p : {0.5, 1.0, 2.0}) {
    cases.emplace_back(BoundSpec::thm12(thm12_lower_threshold(p) + 1e-3, p), Side::Lower);
    cases.emplace_back(BoundSpec::thm12(thm12_upper_threshold(p) - 1e-3, p), Side::Upper);
  }
  std::size_t found = 0;
  double slowest = 0.0;
  for (const auto& [spec, side] : cases) {
    const auto t0 = Clock::now();
    found += falsify(spec, side).found;
    slowest = std::max(slowest, seconds_since(t0));
  }
  return {found == cases.size() && slowest < 1.0,
          std::to_string(found) + "/" + std::to_string(cases.size()) +
              " perturbed constants falsified, slowest search " + num(slowest) + " s"};
}

Outcome monotonicity() {
  std::size_t sweeps = 0;
  std::size_t clean = 0;
  const auto tally = [&](const MonotoneReport& r) {
    ++sweeps;
    clean += r.worst_violation == 0.0 && r.passed();
  };
  for (int i = 1; i <= 7; ++i) tally(sweep_monotone("lemma22." + std::to_string(i), 10000));
  tally(sweep_monotone("lemma23.g", 10000));
  for (double p : {0.5, 0.75, 1.0, 1.5, 2.0}) {
    tally(sweep_monotone("lemma24.h", 10000, LemmaParams{0.0, p}));
  }
  tally(sweep_monotone("lemma27.F", 10000));

  const auto sample = cli::lemma26_sample();
  std::set<int> cases;
  std::set<double> ps;
  std::size_t matches = 0;
  for (const auto& s : sample) {
    cases.insert(lemma26_proof_case(s.u, s.p));
    ps.insert(s.p);
    matches += lemma26_classify(s.u, s.p, 10000).case_id == lemma26_expected(s.u, s.p);
  }
  return {clean == sweeps && sweeps == 14 && matches == sample.size() &&
              sample.size() == 100 && ps.size() == 5 && cases.size() == 4,
          std::to_string(clean) + "/" + std::to_string(sweeps) +
              " sweeps with worst_violation 0; sign classification " +
              std::to_string(matches) + "/" + std::to_string(sample.size()) + " over " +
              std::to_string(ps.size()) + " p values, " + std::to_string(cases.size()) +
              " proof cases"};
}

Outcome identities() {
  const double g41 = remark41_max_gap(10000);
  const double g42 = remark42_max_residual(10000);
  double landen = 0.0;
  for (double r : uniform_grid(kSweepMargin, 1.0 - kSweepMargin, 10000)) {
    landen = std::max(landen, landen_residual(Modulus(r)));
  }
  const double d05 = derivative_residuals(Modulus(0.5), 1e-5).max();
  const double d09 = derivative_residuals(Modulus(0.9), 1e-5).max();
  double dgrid = 0.0;
  for (double r : uniform_grid(0.01, 0.99, 1000)) {
    dgrid = std::max(dgrid, derivative_residuals(Modulus(r), 1e-5).max());
  }
  return {g41 < 1e-15 && g42 < 1e-14 && landen < 1e-12 && d05 < 1e-9 && d09 < 1e-8 &&
              dgrid < 1e-8,
          "coincidence " + num(g41) + ", algebraic identity " + num(g42) + ", Landen " +
              num(landen) + ", derivatives " + num(d05) + " (r=0.5) " + num(d09) +
              " (r=0.9) " + num(dgrid) + " (grid)"};
}

Outcome crossovers() {
  constexpr double kDelta1 = 0.0136228129861631319560431778636;
  constexpr double kDelta2 = 0.00566683868864753758912151543869;
  const auto delta_of = [](const std::string& pair, std::size_t scan, std::string& out) {
    const int code = shell("crossover " + pair + " --scan-points " + std::to_string(scan), out);
    return code == 0 ? std::stod(field(out, "delta")) : NAN;
  };
  std::string o1, o1f, o2, o2f, o3;
  const std::string p1 = "--a cor31-upper --b alzer-qiu";
  const std::string p2 = "--a thm11-lower:q=beta_star --b vuorinen";
  const double d1 = delta_of(p1, 1000, o1);
  const double d1f = delta_of(p1, 10000, o1f);
  const double d2 = delta_of(p2, 1000, o2);
  const double d2f = delta_of(p2, 10000, o2f);
  const int c3 = shell("crossover --a cor31-lower --b vuorinen", o3);
  const bool ok = std::abs(d1 - d1f) < 1e-10 && std::abs(d2 - d2f) < 1e-10 &&
                  std::abs(d1 - kDelta1) < 1e-12 && std::abs(d2 - kDelta2) < 1e-12 &&
                  field(o1, "winner") == "cor31-upper" &&
                  field(o2, "winner") == BoundSpec::thm11(sharp_constants().beta_star).label() &&
                  c3 == 0 && o3.rfind("NO-CROSSOVER", 0) == 0 &&
                  field(o3, "winner") == "cor31-lower";
  std::ostringstream d;
  d.precision(16);
  d << "delta1 " << d1 << " (shift " << std::abs(d1 - d1f) << "), delta2 " << d2
    << " (shift " << std::abs(d2 - d2f) << "), cor31-lower vs vuorinen: "
    << o3.substr(0, o3.find('\n'));
  return {ok, d.str()};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "ellip_acceptance_a.csv";
  const auto b = dir / "ellip_acceptance_b.csv";
  const std::string args =
      "compare --start 0.01 --end 0.99 --points 99 --families all --output ";
  std::string out;
  const int ca = shell(args + a.string(), out);
  const int cb = shell(args + b.string(), out);
  const auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string ta = slurp(a);
  const std::string tb = slurp(b);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  return {ca == 0 && cb == 0 && !ta.empty() && ta == tb,
          "two compare runs, " + std::to_string(ta.size()) + " bytes each, " +
              (ta == tb ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reference accuracy", reference_accuracy},
      {"limit values", limit_values},
      {"bound validity sweep", validity},
      {"sharpness falsification", sharpness},
      {"monotonicity suite", monotonicity},
      {"identity checks", identities},
      {"crossover reproduction", crossovers},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    Outcome o{false, ""};
    const auto t0 = Clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << name
              << ", " << num(seconds_since(t0)) << " s): " << o.detail << '\n';
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
