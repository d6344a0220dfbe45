#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ellip/bounds.hpp"
#include "ellip/constants.hpp"
#include "ellip/elliptic.hpp"
#include "ellip/errors.hpp"
#include "ellip/family_spec.hpp"
#include "ellip/verify.hpp"
#include "format.hpp"
#include "suites.hpp"

namespace ellip::cli {

namespace {

std::vector<BoundSpec> parse_all(const std::vector<std::string>& items) {
  if (items.empty()) throw ConfigurationError("no bound families given");
  std::vector<BoundSpec> out;
  for (const auto& item : items) {
    for (auto&& s : parse_families(item)) out.push_back(std::move(s));
  }
  return out;
}

// The sharpness constraint an Invalid-side spec fails, in words.
std::string constraint_text(const BoundSpec& s) {
  if (s.family() == Family::Thm11) {
    const auto& c = sharp_constants();
    return s.label() + " is neither bound: lower requires q <= " +
           shortest(c.beta_star) + ", upper requires q >= " +
           shortest(c.alpha_star);
  }
  return s.label() + " is neither bound: at p = " + shortest(s.p()) +
         " lower requires t <= " + shortest(thm12_lower_threshold(s.p())) +
         ", upper requires t >= " + shortest(thm12_upper_threshold(s.p()));
}

// Rejects Invalid-side specs with the constraint they violate.
bool report_invalid(const std::vector<BoundSpec>& specs, std::ostream& err) {
  bool any = false;
  for (const auto& s : specs) {
    if (s.side() == Side::Invalid) {
      err << "error: " << constraint_text(s) << '\n';
      any = true;
    }
  }
  return any;
}

std::string csv_label(std::string label) {
  std::replace(label.begin(), label.end(), ',', ';');
  return label;
}

std::string csv_number(double x) { return significant(x, 17); }

}  // namespace

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  try {
    double value = 0.0;
    const auto need_r = [&]() {
      if (!args.r) throw ConfigurationError("--what " + args.what + " needs --r");
      return *args.r;
    };
    if (args.what == "K") {
      value = complete_k(Modulus(need_r()));
    } else if (args.what == "E") {
      value = complete_e(Modulus(need_r()));
    } else if (args.what == "perimeter") {
      value = ellipse_perimeter(need_r());
    } else if (args.what == "toader") {
      if (!args.a || !args.b) throw ConfigurationError("--what toader needs --a and --b");
      value = toader_mean(MeanPair(*args.a, *args.b));
    } else {
      throw ConfigurationError("--what must be K, E, perimeter or toader");
    }
    out << fixed(value, 15) << '\n';
    return kOk;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_enclose(double r, const std::vector<std::string>& families,
                std::ostream& out, std::ostream& err) {
  try {
    if (!(r > 0.0 && r < 1.0)) {
      if (r == 0.0 || r == 1.0) {
        err << "error: bound families are defined for 0 < r < 1; at r = "
            << shortest(r) << " the exact value is E = "
            << fixed(complete_e(Modulus(r)), 15) << '\n';
      } else {
        err << "error: r must lie in (0, 1), got " << shortest(r) << '\n';
      }
      return kUsage;
    }
    const auto specs = parse_all(families);
    if (report_invalid(specs, err)) return kUsage;
    const Modulus m(r);
    const auto enc = best_enclosure(m, specs);
    const double e = complete_e(m);
    const double width = enc.width();
    out << "r        " << shortest(r) << '\n'
        << "lo       " << significant(enc.lo, 17) << "  " << enc.lo_source.label() << '\n'
        << "hi       " << significant(enc.hi, 17) << "  " << enc.hi_source.label() << '\n'
        << "width    " << significant(width, 6) << '\n'
        << "E(r)     " << significant(e, 17) << '\n'
        << "position " << fixed(width > 0.0 ? (e - enc.lo) / width : 0.5, 6)
        << (enc.lo <= e && e <= enc.hi ? "  inside" : "  OUTSIDE") << '\n';
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_verify(const std::string& suite, std::size_t grid, std::ostream& out,
               std::ostream& err) {
  std::vector<Check> checks;
  try {
    checks = run_suite(suite, grid);
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    failed += !c.passed;
  }
  out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<BoundSpec> specs;
  std::vector<double> rs;
  try {
    args.grid.validate();
    specs = parse_all(args.families);
    if (report_invalid(specs, err)) return kUsage;
    rs = args.grid.points_in_order();
    for (double r : rs) {
      if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("compare needs grid points inside (0, 1); got r = " + shortest(r));
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  bool has_lo = false;
  bool has_hi = false;
  for (const auto& s : specs) {
    has_lo |= s.side() == Side::Lower;
    has_hi |= s.side() == Side::Upper;
  }

  std::ostringstream csv;
  csv << "r,e_ref";
  for (const auto& s : specs) csv << ',' << csv_label(s.label());
  csv << ",best_lo,best_hi\n";
  try {
    for (double r : rs) {
      const Modulus m(r);
      csv << csv_number(r) << ',' << csv_number(complete_e(m));
      double lo = -INFINITY;
      double hi = INFINITY;
      for (const auto& s : specs) {
        const double v = s(m);
        csv << ',' << csv_number(v);
        if (s.side() == Side::Lower) lo = std::max(lo, v);
        if (s.side() == Side::Upper) hi = std::min(hi, v);
      }
      csv << ',' << (has_lo ? csv_number(lo) : "") << ','
          << (has_hi ? csv_number(hi) : "") << '\n';
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }

  if (!args.output) {
    out << csv.str();
    return kOk;
  }
  std::ofstream file(*args.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << *args.output << "' for writing\n";
    return kIo;
  }
  file << csv.str();
  file.close();
  if (!file) {
    err << "error: failed writing '" << *args.output << "'\n";
    return kIo;
  }
  out << "wrote " << rs.size() << " rows to " << *args.output << '\n';
  return kOk;
}

int cmd_crossover(const std::string& a, const std::string& b,
                  std::size_t scan_points, std::ostream& out, std::ostream& err) {
  try {
    const auto sa = parse_family(a);
    const auto sb = parse_family(b);
    if (report_invalid({sa, sb}, err)) return kUsage;
    const auto res = find_crossover(sa, sb, scan_points);
    if (!res.found) {
      out << "NO-CROSSOVER\n"
          << "winner " << res.better_near_one.label() << '\n';
      return kOk;
    }
    out << "delta  " << significant(res.delta, 17) << '\n'
        << "radius " << significant(res.root, 17) << '\n'
        << "winner " << res.better_near_one.label() << '\n';
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enclosures and verification for the complete elliptic integral E(r)"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate K, E, the ellipse perimeter or the Toader mean");
  eval->add_option("--what", eval_args.what, "K, E, perimeter or toader")->required();
  eval->add_option("--r", eval_args.r, "Modulus r (perimeter: semi-axis ratio)");
  eval->add_option("--a", eval_args.a, "First argument of the Toader mean");
  eval->add_option("--b", eval_args.b, "Second argument of the Toader mean");

  double enclose_r = 0.0;
  std::vector<std::string> enclose_families{"all"};
  auto* enclose = app.add_subcommand("enclose", "Tightest enclosure of E(r) from the given families");
  enclose->add_option("--r", enclose_r, "Modulus in (0, 1)")->required();
  enclose->add_option("--families", enclose_families, "Family specs, e.g. all or thm12:t=0.85,p=2");

  std::string suite = "all";
  std::optional<std::size_t> grid;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "lemmas, sharpness, remarks or all");
  verify->add_option("--grid", grid, "Grid points (default ELLIP_GRID_POINTS or 10000)");

  CompareArgs cmp;
  std::string spacing = "uniform";
  std::string output;
  auto* compare = app.add_subcommand("compare", "CSV table of bounds over a grid");
  compare->add_option("--start", cmp.grid.start, "First r (uniform) or start of the range");
  compare->add_option("--end", cmp.grid.end, "Last r");
  compare->add_option("--points", cmp.grid.points, "Number of grid points");
  compare->add_option("--spacing", spacing, "uniform or log-near-one");
  compare->add_option("--families", cmp.families, "Family specs");
  compare->add_option("--output", output, "CSV path (stdout when omitted)");

  std::string cross_a;
  std::string cross_b;
  std::size_t scan_points = 1000;
  auto* crossover = app.add_subcommand("crossover", "Largest crossing radius of two bounds");
  crossover->add_option("--a", cross_a, "First family spec")->required();
  crossover->add_option("--b", cross_b, "Second family spec")->required();
  crossover->add_option("--scan-points", scan_points, "Sign-scan points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (*eval) return cmd_eval(eval_args, out, err);
  if (*enclose) return cmd_enclose(enclose_r, enclose_families, out, err);
  if (*verify) {
    std::size_t n = 0;
    try {
      n = grid ? *grid : verification_grid_points();
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    return cmd_verify(suite, n, out, err);
  }
  if (*compare) {
    if (spacing == "uniform") {
      cmp.grid.spacing = Spacing::Uniform;
    } else if (spacing == "log-near-one") {
      cmp.grid.spacing = Spacing::LogNearOne;
    } else {
      err << "error: --spacing must be uniform or log-near-one\n";
      return kUsage;
    }
    if (!output.empty()) cmp.output = output;
    return cmd_compare(cmp, out, err);
  }
  return cmd_crossover(cross_a, cross_b, scan_points, out, err);
}

}  // namespace ellip::cli
