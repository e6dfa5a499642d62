#include "radonlink/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "radonlink/errors.hpp"
#include "radonlink/generator.hpp"
#include "radonlink/io.hpp"
#include "radonlink/oracle.hpp"
#include "radonlink/sweep.hpp"
#include "radonlink/verify.hpp"

namespace radonlink {

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

/// Loads a point file and insists on general position.
Configuration load_general(const std::string& path) {
  Configuration c = read_point_file(path);
  require_general_position(c);
  return c;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open result file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("result file '" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Rational> parse_parameter_list(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

int cmd_find(const std::string& points_path, const std::string& output, std::ostream& out, std::ostream& err) {
  const Configuration c = load_general(points_path);
  const PartitionResult r = find_partition(c);
  const VerificationReport verdict = check_certificate(c, r);
  emit(dump(result_to_json(c, r, verdict)), output, out);
  if (!verdict.ok) {
    err << "verification failed: " << verdict.failed_clause << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_verify(const std::string& points_path, const std::string& result_path, std::ostream& out,
               std::ostream& err) {
  const Configuration c = load_general(points_path);
  const json doc = read_json_file(result_path);
  const PartitionResult r = result_from_json(doc);

  VerificationReport verdict;
  const auto recorded = doc.find("input");
  if (recorded != doc.end() && recorded->contains("sha256") && (*recorded)["sha256"] != input_hash(c)) {
    verdict = VerificationReport{false, "result was produced for a different point set"};
  } else {
    try {
      verdict = check_certificate(c, r);
    } catch (const ValidationError& e) {
      verdict = VerificationReport{false, std::string("malformed certificate: ") + e.what()};
    }
  }

  json report{{"format", "radonlink.verification/1"},
              {"input", {{"n", c.dimension()}, {"points", c.size()}, {"sha256", input_hash(c)}}},
              {"verdict", verdict.ok ? "pass" : "fail"}};
  if (!verdict.ok) report["failed_clause"] = verdict.failed_clause;
  out << dump(report);
  if (!verdict.ok) {
    err << "verification failed: " << verdict.failed_clause << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_enumerate(const std::string& points_path, const EnumerationOptions& options, std::ostream& out) {
  const Configuration c = load_general(points_path);
  out << dump(enumeration_to_json(c, enumerate_pairs(c, options)));
  return kExitOk;
}

int cmd_check_gp(const std::string& points_path, std::ostream& out, std::ostream& err) {
  const Configuration c = read_point_file(points_path);
  const GeneralPositionReport report = check_general_position(c);
  out << dump(general_position_to_json(c, report));
  if (!report.ok) {
    err << "not in general position: points " << format_index_set(*report.violation)
        << " lie in a common hyperplane\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radon-type partitions and linked simplices for n+3 points in R^n, with exact certificates"};
  app.name("radonlink");
  app.require_subcommand(1);

  std::string points_path;
  std::string result_path;
  std::string output;

  auto* find = app.add_subcommand("find", "find an intersecting (even n) or linked (odd n) pair and certify it");
  find->add_option("pointfile", points_path, "point set file")->required();
  find->add_option("-o,--output", output, "write the result document here instead of stdout");

  auto* verify = app.add_subcommand("verify", "re-check a result document against a point set");
  verify->add_option("pointfile", points_path, "point set file")->required();
  verify->add_option("resultfile", result_path, "result document produced by 'find'")->required();

  EnumerationOptions enum_options;
  auto* enumerate = app.add_subcommand("enumerate", "list every qualifying pair by brute force");
  enumerate->add_option("pointfile", points_path, "point set file")->required();
  enumerate->add_option("--jobs", enum_options.jobs, "worker threads (0 = all cores)")->capture_default_str();
  enumerate->add_option("--max-n", enum_options.max_n, "largest dimension brute force will accept")
      ->capture_default_str();

  GenSpec spec;
  std::string moment;
  auto* gen = app.add_subcommand("gen", "write a point set file");
  gen->add_option("--n", spec.n, "dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", spec.seed, "seed for random configurations")->required();
  auto* bound_opt = gen->add_option("--bound", spec.bound, "random coordinates lie in [-B, B]")->capture_default_str();
  auto* moment_opt = gen->add_option("--moment", moment, "comma-separated moment curve parameters t1,...,t_{n+3}");
  bound_opt->excludes(moment_opt);
  gen->add_option("-o,--output", output, "write the point file here instead of stdout");

  auto* check_gp = app.add_subcommand("check-gp", "report whether the points are in general position");
  check_gp->add_option("pointfile", points_path, "point set file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*find) return cmd_find(points_path, output, out, err);
    if (*verify) return cmd_verify(points_path, result_path, out, err);
    if (*enumerate) return cmd_enumerate(points_path, enum_options, out);
    if (*check_gp) return cmd_check_gp(points_path, out, err);
    if (*gen) {
      if (!moment.empty()) {
        spec.kind = GenKind::moment_curve;
        spec.moment_parameters = parse_parameter_list(moment);
      }
      emit(format_point_file(generate(spec)), output, out);
      return kExitOk;
    }
  } catch (const GeneralPositionError& e) {
    err << "not in general position: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const TheoremViolation& e) {
    err << "internal defect: " << e.what() << '\n';
    return kExitInternalDefect;
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const GenerationError& e) {
    err << "generation failed: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DimensionError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal defect: " << e.what() << '\n';
    return kExitInternalDefect;
  }
  return kExitInvalidInput;
}

}  // namespace radonlink
