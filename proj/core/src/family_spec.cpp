#include "ellip/family_spec.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <string>

#include "ellip/errors.hpp"

namespace ellip {

namespace {

using Params = std::map<std::string, double, std::less<>>;

double parse_value(std::string_view v) {
  const auto& c = sharp_constants();
  if (v == "beta_star") return c.beta_star;
  if (v == "alpha_star") return c.alpha_star;
  if (v == "lambda") return c.lambda_star;
  if (v == "mu") return c.mu_star;
  double out = 0.0;
  const auto* end = v.data() + v.size();
  auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ConfigurationError("cannot parse parameter value '" +
                             std::string(v) + "'");
  }
  return out;
}

Params parse_params(std::string_view text) {
  Params out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ConfigurationError("expected param=value, got '" +
                               std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    if (out.contains(key)) {
      throw ConfigurationError("parameter '" + key + "' given twice");
    }
    out.emplace(key, parse_value(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw ConfigurationError("trailing ',' in family spec");
  }
  return out;
}

class ParamReader {
 public:
  ParamReader(std::string_view name, Params params)
      : name_(name), params_(std::move(params)) {}

  double required(std::string_view key) {
    auto v = optional(key);
    if (!v) {
      throw ConfigurationError(name_ + " needs parameter '" +
                               std::string(key) + "'");
    }
    return *v;
  }

  std::optional<double> optional(std::string_view key) {
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    double v = it->second;
    params_.erase(it);
    return v;
  }

  void finish() const {
    if (!params_.empty()) {
      throw ConfigurationError(name_ + " does not take parameter '" +
                               params_.begin()->first + "'");
    }
  }

 private:
  std::string name_;
  Params params_;
};

BoundSpec require_side(BoundSpec s, Side want, std::string_view name) {
  if (s.side() != want) {
    throw ValidationError(std::string(name) + " with " + s.label() + " is " +
                          to_string(s.side()) + ", not " + to_string(want));
  }
  return s;
}

BoundSpec build(std::string_view name, ParamReader& in) {
  const auto& c = sharp_constants();
  if (name == "vuorinen") return BoundSpec::vuorinen_lower();
  if (name == "barnard") return BoundSpec::barnard_upper();
  if (name == "alzer-qiu") return BoundSpec::alzer_qiu_upper();
  if (name == "cor31-lower") return BoundSpec::cor31_lower();
  if (name == "cor31-upper") return BoundSpec::cor31_upper();
  if (name == "thm11") return BoundSpec::thm11(in.required("q"));
  if (name == "thm11-lower") {
    return require_side(BoundSpec::thm11(in.optional("q").value_or(c.beta_star)),
                        Side::Lower, name);
  }
  if (name == "thm11-upper") {
    return require_side(
        BoundSpec::thm11(in.optional("q").value_or(c.alpha_star)), Side::Upper,
        name);
  }
  if (name == "thm12") {
    const double t = in.required("t");
    return BoundSpec::thm12(t, in.required("p"));
  }
  if (name == "thm12-lower") {
    const double p = in.required("p");
    return BoundSpec::thm12(thm12_lower_threshold(p), p);
  }
  if (name == "thm12-upper") {
    const double p = in.required("p");
    return BoundSpec::thm12(thm12_upper_threshold(p), p);
  }
  throw ConfigurationError("unknown bound family '" + std::string(name) + "'");
}

}  // namespace

std::vector<BoundSpec> parse_families(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  Params params;
  if (colon != std::string_view::npos) {
    params = parse_params(text.substr(colon + 1));
  }
  if (name == "all") {
    if (!params.empty()) throw ConfigurationError("'all' takes no parameters");
    return sharp_families();
  }
  ParamReader in(name, std::move(params));
  auto spec = build(name, in);
  in.finish();
  return {spec};
}

BoundSpec parse_family(std::string_view text) {
  auto specs = parse_families(text);
  if (specs.size() != 1) {
    throw ConfigurationError("expected a single family, got '" +
                             std::string(text) + "'");
  }
  return specs.front();
}

}  // namespace ellip
