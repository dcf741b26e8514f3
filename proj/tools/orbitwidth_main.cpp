#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orbitwidth/json_io.hpp"
#include "orbitwidth/oracle.hpp"
#include "orbitwidth/reconstruction.hpp"
#include "orbitwidth/root_system.hpp"
#include "orbitwidth/width_bound.hpp"

namespace {

using nlohmann::json;
using namespace orbitwidth;

GroupSpec make_group(const std::string& family, int rank) {
  if (family != "B" && family != "D")
    throw InvalidInput("--family must be B or D");
  return GroupSpec(family == "B" ? Family::B : Family::D, rank);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

Rational parse_rational(const std::string& tok);

std::vector<double> parse_reals(const std::string& text, int expected,
                                const char* flag) {
  std::vector<double> out;
  for (const std::string& tok : split_commas(text)) {
    try {
      size_t used = 0;
      const double v = std::stod(tok, &used);
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
        ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      try {  // p/q fractions are not stod syntax
        out.push_back(parse_rational(tok).convert_to<double>());
      } catch (const std::exception&) {
        throw InvalidInput(std::string(flag) + ": cannot parse number '" +
                           tok + "'");
      }
    }
  }
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw InvalidInput(std::string(flag) + " needs exactly " +
                       std::to_string(expected) + " comma-separated values");
  return out;
}

// Accepts integers, decimals and p/q fractions; exact value, no rounding.
Rational parse_rational(const std::string& tok) {
  std::string s;
  for (char c : tok)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const Rational num = parse_rational(s.substr(0, slash));
    const Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + tok + "'");
    return num / den;
  }
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  boost::multiprecision::cpp_int mantissa = 0, pow10 = 1;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw InvalidInput("cannot parse number '" + tok + "'");
      seen_dot = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      mantissa = mantissa * 10 + (s[i] - '0');
      if (seen_dot) pow10 *= 10;
      seen_digit = true;
    } else {
      throw InvalidInput("cannot parse number '" + tok + "'");
    }
  }
  if (!seen_digit) throw InvalidInput("cannot parse number '" + tok + "'");
  Rational r(mantissa, pow10);
  return neg ? -r : r;
}

std::vector<Rational> parse_rationals(const std::string& text, int expected,
                                      const char* flag) {
  std::vector<Rational> out;
  for (const std::string& tok : split_commas(text)) out.push_back(parse_rational(tok));
  if (expected >= 0 && static_cast<int>(out.size()) != expected)
    throw InvalidInput(std::string(flag) + " needs exactly " +
                       std::to_string(expected) + " comma-separated values");
  return out;
}

std::string rational_str(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

json load_json_arg(const std::string& arg, const char* flag) {
  std::string body;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    body = arg;
  } else {
    std::ifstream in(arg);
    if (!in)
      throw InvalidInput(std::string(flag) + ": cannot open file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    body = buf.str();
  }
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded())
    throw InvalidInput(std::string(flag) + ": invalid JSON");
  return j;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ORBITWIDTH_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw InvalidInput("ORBITWIDTH_SEED must be a nonnegative integer");
  }
  return 12345;
}

void emit(const json& out, const std::string& format) {
  if (format == "table") {
    for (const auto& [key, value] : out.items())
      std::cout << key << "  " << value.dump() << "\n";
    return;
  }
  std::cout << out.dump(2) << "\n";
}

GroupSpec group_for_matrix_size(int m) {
  if (m >= 3 && m % 2 == 1) return GroupSpec(Family::B, (m - 1) / 2);
  if (m >= 4 && m % 2 == 0) return GroupSpec(Family::D, m / 2);
  throw InvalidInput("matrix size " + std::to_string(m) +
                     " does not match any supported group");
}

std::map<int, std::vector<double>> parse_gauges(const json& j) {
  if (!j.is_object())
    throw InvalidInput("--gauges must be a JSON object {level: [angles...]}");
  std::map<int, std::vector<double>> out;
  for (const auto& [key, value] : j.items()) {
    int level = 0;
    try {
      level = std::stoi(key);
    } catch (const std::exception&) {
      throw InvalidInput("--gauges keys must be integer levels");
    }
    out[level] = value.get<std::vector<double>>();
  }
  return out;
}

struct CliConfig {
  std::string family = "B";
  int rank = 0;
  std::string lambda_text;
  std::string p_text;
  std::string alpha_text;
  std::string beta_text;
  std::string pattern_arg;
  std::string matrix_arg;
  std::string gauges_arg;
  std::string suite = "all";
  std::string output = "json";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int trials = 200;
  double tol = -1.0;
  bool exact = false;
};

int run_bound(const CliConfig& cfg) {
  const GroupSpec group = make_group(cfg.family, cfg.rank);
  const WeylPoint lambda(group, parse_reals(cfg.lambda_text, cfg.rank, "--lambda"));
  const ChamberClass cls = chamber_classify(lambda);
  if (cls.kind == ChamberKind::outside_scope)
    throw InvalidInput(
        "lambda is outside the supported chamber region (sorted, strictly "
        "positive ends, at most one equal block)");
  const BoundReport report = cls.kind == ChamberKind::regular
                                 ? gromov_width_lower_bound(group, lambda)
                                 : nonregular_bound(group, lambda);
  json out = bound_report_to_json(report);
  if (cfg.exact) {
    const std::vector<Rational> lam =
        parse_rationals(cfg.lambda_text, cfg.rank, "--lambda");
    const ChamberClass ecls = chamber_classify_t(group.family, lam);
    Rational exact_bound;
    if (ecls.kind == ChamberKind::regular) {
      exact_bound = min_coroot_pairing_t(group, lam, false);
      const Rational edge = min_edge_length_t(group, lam);
      if (edge != exact_bound)
        throw NumericError("exact edge and coroot minima disagree");
    } else if (ecls.kind == ChamberKind::nonregular_single_block) {
      exact_bound = nonregular_bound_t(group, lam);
    } else {
      throw InvalidInput(
          "exact lambda is outside the supported chamber region");
    }
    out["bound_exact"] = rational_str(exact_bound);
  }
  emit(out, cfg.output);
  return 0;
}

int run_edges(const CliConfig& cfg) {
  const GroupSpec group = make_group(cfg.family, cfg.rank);
  const WeylPoint lambda(group, parse_reals(cfg.lambda_text, cfg.rank, "--lambda"));
  const auto edges = enumerate_edges_at_lambda(group, lambda);
  json list = json::array();
  for (const auto& e : edges) list.push_back(edge_to_json(e));
  if (cfg.exact) {
    const std::vector<Rational> lam =
        parse_rationals(cfg.lambda_text, cfg.rank, "--lambda");
    const auto shapes = edge_shapes(group);
    for (size_t i = 0; i < shapes.size(); ++i)
      list.at(i)["lattice_length_exact"] =
          rational_str(edge_length_t(group, shapes[i], lam));
  }
  json out{{"family", cfg.family},
           {"rank", cfg.rank},
           {"lambda", lambda.coords},
           {"edges", std::move(list)}};
  emit(out, cfg.output);
  return 0;
}

int run_gt(const CliConfig& cfg) {
  const SkewMatrix m = matrix_from_json(load_json_arg(cfg.matrix_arg, "--matrix"));
  const GroupSpec group = group_for_matrix_size(m.size());
  const GTPattern pattern = gt_map(m, group);
  double scale = 1.0;
  for (double v : pattern.lambda) scale = std::max(scale, 1.0 + std::fabs(v));
  const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-8 * scale;
  json out{{"family", std::string(1, family_letter(group.family))},
           {"rank", group.rank},
           {"pattern", pattern_to_json(pattern)},
           {"violations", violations_to_json(validate_pattern(pattern, tol))},
           {"tolerance_used", tol}};
  emit(out, cfg.output);
  return 0;
}

int run_reconstruct(const CliConfig& cfg) {
  const GTPattern pattern =
      pattern_from_json(load_json_arg(cfg.pattern_arg, "--pattern"));
  std::map<int, std::vector<double>> gauges;
  if (!cfg.gauges_arg.empty())
    gauges = parse_gauges(load_json_arg(cfg.gauges_arg, "--gauges"));
  const WeylPoint lambda(pattern.group, pattern.lambda);
  const ReconstructionReport report =
      build_orbit_point_report(pattern.group, lambda, pattern, gauges);
  json out = reconstruction_report_to_json(report, pattern);
  json gauge_list = json::array();
  for (const auto& [level, angles] : gauges)
    gauge_list.push_back(json{{"level", level}, {"angles", angles}});
  out["gauges"] = std::move(gauge_list);
  emit(out, cfg.output);
  return 0;
}

int run_verify(const CliConfig& cfg) {
  const GroupSpec group = make_group(cfg.family, cfg.rank);
  const WeylPoint lambda(group, parse_reals(cfg.lambda_text, cfg.rank, "--lambda"));
  if (cfg.suite != "interlacing" && cfg.suite != "roundtrip" &&
      cfg.suite != "all")
    throw InvalidInput("--suite must be interlacing, roundtrip or all");
  json out;
  bool failed = false;
  if (cfg.suite == "interlacing" || cfg.suite == "all") {
    const VerifyReport r = verify_interlacing(lambda, cfg.trials, cfg.seed);
    failed = failed || !r.failures.empty();
    out["interlacing"] = verify_report_to_json(r);
  }
  if (cfg.suite == "roundtrip" || cfg.suite == "all") {
    const VerifyReport r = verify_roundtrip(lambda, cfg.trials, cfg.seed);
    failed = failed || !r.failures.empty();
    out["roundtrip"] = verify_report_to_json(r);
  }
  out["seed"] = cfg.seed;
  out["trials"] = cfg.trials;
  emit(out, cfg.output);
  return failed ? 2 : 0;
}

int run_appendix_a(const CliConfig& cfg) {
  const GroupSpec group = make_group(cfg.family, cfg.rank);
  const WeylPoint p(group, parse_reals(cfg.p_text, cfg.rank, "--p"));
  const RootVector alpha = parse_root(cfg.alpha_text, cfg.rank);
  const RootVector beta = parse_root(cfg.beta_text, cfg.rank);
  const CenteredComparison c = standard_torus_comparison(group, p, alpha, beta);
  emit(comparison_to_json(c), cfg.output);
  return 0;
}

int run_pattern_check(const CliConfig& cfg) {
  const GTPattern pattern =
      pattern_from_json(load_json_arg(cfg.pattern_arg, "--pattern"));
  const double tol = cfg.tol >= 0.0 ? cfg.tol : 0.0;
  const auto violations = validate_pattern(pattern, tol);
  json out{{"valid", violations.empty()},
           {"violations", violations_to_json(violations)},
           {"tolerance_used", tol}};
  emit(out, cfg.output);
  return violations.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gromov-width lower bounds for SO(2n+1)/SO(2n) coadjoint orbits via "
      "Gelfand-Tsetlin data"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_group_flags = [&](CLI::App* sub, bool with_lambda) {
    sub->add_option("--family", cfg.family, "B or D")->required();
    sub->add_option("--rank", cfg.rank, "torus rank n")->required();
    if (with_lambda)
      sub->add_option("--lambda", cfg.lambda_text,
                      "chamber point, comma-separated")
          ->required();
  };
  auto add_output_flag = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* bound = app.add_subcommand("bound", "orbit width lower bound");
  add_group_flags(bound, true);
  bound->add_flag("--exact", cfg.exact, "rational lattice/pairing arithmetic");
  add_output_flag(bound);

  CLI::App* edges = app.add_subcommand("edges", "edge table at the lambda vertex");
  add_group_flags(edges, true);
  edges->add_flag("--exact", cfg.exact, "rational lattice lengths");
  add_output_flag(edges);

  CLI::App* gt = app.add_subcommand("gt", "Gelfand-Tsetlin pattern of a matrix");
  gt->add_option("--matrix", cfg.matrix_arg, "skew matrix JSON (file or inline)")
      ->required();
  gt->add_option("--tol", cfg.tol, "interlacing check tolerance");
  add_output_flag(gt);

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "orbit point realizing a pattern");
  reconstruct
      ->add_option("--pattern", cfg.pattern_arg, "pattern JSON (file or inline)")
      ->required();
  reconstruct->add_option("--gauges", cfg.gauges_arg,
                          "JSON object mapping level to gauge angles");
  add_output_flag(reconstruct);

  CLI::App* verify = app.add_subcommand("verify", "randomized oracle suites");
  add_group_flags(verify, true);
  verify->add_option("--suite", cfg.suite, "interlacing, roundtrip or all");
  verify->add_option("--trials", cfg.trials, "trials per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "base seed (default ORBITWIDTH_SEED)")
      ->each([&](const std::string&) { cfg.seed_set = true; });
  add_output_flag(verify);

  CLI::App* appendix =
      app.add_subcommand("appendix-a", "standard-torus centered-region cut");
  appendix->add_option("--family", cfg.family, "B or D")->required();
  appendix->add_option("--rank", cfg.rank, "torus rank n")->required();
  appendix->add_option("--p", cfg.p_text, "regular chamber point")->required();
  appendix->add_option("--alpha", cfg.alpha_text, "long root, e.g. e1+e2")
      ->required();
  appendix->add_option("--beta", cfg.beta_text, "short root, e.g. e2")
      ->required();
  add_output_flag(appendix);

  CLI::App* pattern_check =
      app.add_subcommand("pattern-check", "validate interlacing of a pattern");
  pattern_check
      ->add_option("--pattern", cfg.pattern_arg, "pattern JSON (file or inline)")
      ->required();
  pattern_check->add_option("--tol", cfg.tol, "slack for the inequalities");
  add_output_flag(pattern_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (!cfg.seed_set) cfg.seed = default_seed();
    if (bound->parsed()) return run_bound(cfg);
    if (edges->parsed()) return run_edges(cfg);
    if (gt->parsed()) return run_gt(cfg);
    if (reconstruct->parsed()) return run_reconstruct(cfg);
    if (verify->parsed()) return run_verify(cfg);
    if (appendix->parsed()) return run_appendix_a(cfg);
    if (pattern_check->parsed()) return run_pattern_check(cfg);
    std::cerr << "error: no subcommand selected\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
