// frege: exact-arithmetic engine for Frege's temporal voting method, the
// modified variant, seven apportionment methods, axiom checking, and the
// seeded bias experiment.
//
// Exit codes: 0 success, 1 validation error, 2 internal invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frege/apportionment.hpp"
#include "frege/axioms.hpp"
#include "frege/bias.hpp"
#include "frege/io.hpp"
#include "frege/modified.hpp"
#include "frege/original.hpp"

namespace {

using namespace frege;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

OutputFormat parse_format(const std::string& name) {
  const auto format = output_format_from_name(name);
  if (!format) throw ValidationError("unknown output format '" + name + "'");
  return *format;
}

Method parse_method(const std::string& name) {
  const auto method = method_from_name(name);
  if (!method) throw ValidationError("unknown method '" + name + "'");
  return *method;
}

std::vector<BigInt> parse_votes_list(const std::string& csv) {
  std::vector<BigInt> votes;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      votes.emplace_back(cell);
    } catch (const std::exception&) {
      throw ValidationError("not an integer vote count: '" + cell + "'");
    }
  }
  if (votes.empty()) throw ValidationError("empty vote list");
  return votes;
}

ApportionmentProblem problem_from_flags(const std::string& input, const std::string& votes_csv,
                                        std::int64_t seats, std::optional<Method>* method_out) {
  if (!votes_csv.empty()) {
    if (seats <= 0) throw ValidationError("--seats is required with --votes");
    return ApportionmentProblem::from_votes(parse_votes_list(votes_csv), seats);
  }
  if (input.empty())
    throw ValidationError("provide either --votes and --seats, or --problem FILE");
  const ApportionRequest request = parse_apportion_request(read_input(input));
  if (method_out && request.method) *method_out = request.method;
  return ApportionmentProblem::from_votes(request.votes,
                                          seats > 0 ? seats : request.seats);
}

struct SimulateArgs {
  std::string method = "original";
  std::string profile_path;
  std::int64_t horizon = 10;
  std::string format = "text";
  bool repeat = false;
  bool audit = false;
};

int cmd_simulate(const SimulateArgs& args) {
  Profile profile = parse_profile(read_input(args.profile_path));
  if (args.repeat && !profile.repeats()) {
    std::vector<Round> rounds;
    for (std::size_t t = 1; t <= profile.stored_rounds(); ++t)
      rounds.push_back(profile.round(static_cast<std::int64_t>(t)));
    profile = Profile::repeating(std::move(rounds), profile.labels());
  }
  const OutputFormat format = parse_format(args.format);
  if (args.method == "original") {
    const OriginalTrace trace = run_original(profile, args.horizon);
    std::cout << render_trace(trace, format);
    if (args.audit)
      std::cout << render_quota_report(audit_variable_quota(trace), trace.labels, format);
  } else if (args.method == "modified") {
    const ModifiedTrace trace = run_modified(profile, args.horizon);
    std::cout << render_trace(trace, format);
    if (args.audit)
      std::cout << render_quota_report(audit_variable_quota(trace), trace.labels, format);
  } else {
    throw ValidationError("unknown simulation method '" + args.method + "' (original|modified)");
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frege temporal voting and apportionment toolkit"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run the original or modified voting method");
  simulate->add_option("--method", sim.method, "original|modified")->capture_default_str();
  simulate->add_option("--profile", sim.profile_path, "profile file (JSON or CSV), '-' = stdin")
      ->required();
  simulate->add_option("--horizon,-T", sim.horizon, "number of rounds")->capture_default_str();
  simulate->add_option("--output", sim.format, "text|csv|json")->capture_default_str();
  simulate->add_flag("--repeat", sim.repeat, "repeat the parsed rounds indefinitely");
  simulate->add_flag("--audit", sim.audit, "append a variable-quota audit");

  std::string ap_input, ap_votes, ap_method = "frege", ap_format = "text";
  std::int64_t ap_seats = 0;
  auto* apportion_cmd = app.add_subcommand("apportion", "Apportion seats with one method");
  apportion_cmd->add_option("--problem", ap_input, "JSON {votes, seats[, method]}, '-' = stdin");
  apportion_cmd->add_option("--votes", ap_votes, "comma-separated vote counts");
  apportion_cmd->add_option("--seats", ap_seats, "house size");
  apportion_cmd->add_option("--method", ap_method,
                            "largest-remainder|dhondt|adams|sainte-lague|huntington-hill|quota|frege")
      ->capture_default_str();
  apportion_cmd->add_option("--output", ap_format, "text|csv|json")->capture_default_str();

  std::string cmp_input, cmp_votes, cmp_format = "text";
  std::int64_t cmp_seats = 0;
  auto* compare_cmd = app.add_subcommand("compare", "Apportion with all seven methods");
  compare_cmd->add_option("--problem", cmp_input, "JSON {votes, seats}, '-' = stdin");
  compare_cmd->add_option("--votes", cmp_votes, "comma-separated vote counts");
  compare_cmd->add_option("--seats", cmp_seats, "house size");
  compare_cmd->add_option("--output", cmp_format, "text|csv|json")->capture_default_str();

  std::string ax_method = "all", ax_format = "text";
  CorpusConfig corpus;
  auto* axiom_cmd = app.add_subcommand("axiom-check", "Regenerate the method/axiom table");
  axiom_cmd->add_option("--method", ax_method, "a method name or 'all'")->capture_default_str();
  axiom_cmd->add_option("--instances", corpus.instances, "random instances")->capture_default_str();
  axiom_cmd->add_option("--max-parties", corpus.max_parties, "max m")->capture_default_str();
  axiom_cmd->add_option("--max-seats", corpus.max_seats, "max k")->capture_default_str();
  axiom_cmd->add_option("--max-votes", corpus.max_votes, "max per-party votes")
      ->capture_default_str();
  axiom_cmd->add_option("--seed", corpus.seed, "corpus seed")->capture_default_str();
  axiom_cmd->add_option("--threads", corpus.threads, "0 = all cores")->capture_default_str();
  axiom_cmd->add_option("--output", ax_format, "text|json")->capture_default_str();

  BiasConfig bias;
  std::string bias_methods = "all", bias_format = "text", bias_json_out;
  auto* bias_cmd = app.add_subcommand("bias", "Smallest-vs-largest party bias experiment");
  bias_cmd->add_option("--samples", bias.samples, "instances to draw")->capture_default_str();
  bias_cmd->add_option("--seed", bias.seed, "experiment seed")->capture_default_str();
  bias_cmd->add_option("--parties", bias.parties, "party count")->capture_default_str();
  bias_cmd->add_option("--max-votes", bias.max_votes, "votes uniform on 1..max")
      ->capture_default_str();
  bias_cmd->add_option("--seats", bias.seats, "house size")->capture_default_str();
  bias_cmd->add_option("--methods", bias_methods, "'all' or comma-separated names")
      ->capture_default_str();
  bias_cmd->add_option("--threads", bias.threads, "0 = all cores")->capture_default_str();
  bias_cmd->add_option("--output", bias_format, "text|json")->capture_default_str();
  bias_cmd->add_option("--json-out", bias_json_out,
                       "also write the machine-readable report to this file");

  std::int64_t st_voters = 0;
  int st_candidates = 0;
  auto* stabilize_cmd =
      app.add_subcommand("stabilize", "Cost-of-winning stabilization time t0(n, m)");
  stabilize_cmd->add_option("--voters,-n", st_voters, "voter count n")->required();
  stabilize_cmd->add_option("--candidates,-m", st_candidates, "candidate count m")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) return cmd_simulate(sim);

    if (*apportion_cmd) {
      std::optional<Method> from_file;
      const ApportionmentProblem problem =
          problem_from_flags(ap_input, ap_votes, ap_seats, &from_file);
      const Method method =
          apportion_cmd->count("--method") == 0 && from_file ? *from_file
                                                             : parse_method(ap_method);
      std::cout << render_solution(method, apportion(method, problem),
                                   parse_format(ap_format));
      return 0;
    }

    if (*compare_cmd) {
      const ApportionmentProblem problem =
          problem_from_flags(cmp_input, cmp_votes, cmp_seats, nullptr);
      std::cout << render_comparison(compare_all(problem), parse_format(cmp_format));
      return 0;
    }

    if (*axiom_cmd) {
      const OutputFormat format = parse_format(ax_format);
      AxiomTable table = regenerate_axiom_table(corpus);
      if (ax_method != "all") {
        const Method method = parse_method(ax_method);
        std::string out;
        for (Axiom axiom : kAllAxioms) {
          out += render_axiom_report_json(table.cell(method, axiom));
          out += '\n';
        }
        std::cout << out;
      } else {
        std::cout << render_axiom_table(table, format);
      }
      return 0;
    }

    if (*bias_cmd) {
      if (bias_methods != "all") {
        bias.methods.clear();
        std::stringstream ss(bias_methods);
        std::string name;
        while (std::getline(ss, name, ',')) bias.methods.push_back(parse_method(name));
      }
      const BiasReport report = run_bias_experiment(bias);
      std::cout << render_bias_report(report, parse_format(bias_format));
      if (!bias_json_out.empty()) {
        std::ofstream out(bias_json_out, std::ios::binary);
        if (!out) throw ValidationError("cannot write '" + bias_json_out + "'");
        out << render_bias_report(report, OutputFormat::Json) << "\n";
      }
      return 0;
    }

    if (*stabilize_cmd) {
      std::cout << cost_stabilization_time(BigInt(st_voters), st_candidates) << "\n";
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
