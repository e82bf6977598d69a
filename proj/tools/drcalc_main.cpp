#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "drcalc/arclength.hpp"
#include "drcalc/computable.hpp"
#include "drcalc/eval.hpp"
#include "drcalc/oracle.hpp"

namespace {

using namespace drcalc;

// Exit codes: 0 ok, 1 internal failure (oracle refuted a digit or an output
// file could not be written), 2 undetermined at the fuel bound, 3 syntax
// error, 4 domain error.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitParse = 3;
constexpr int kExitDomain = 4;

std::string frequency_text(const Rational& q) {
  BigInt m = rational_floor(q * Rational(pow10(6)));
  return ScaledDecimal(m, 6).str();
}

struct EvalArgs {
  std::string input;
  int digits = 30;
  long fuel = 0;  // 0 means the default max(10 * digits, 1000)
  bool json = false;
  bool check = false;
  std::string dump_file;
};

int run_eval(const EvalArgs& args) {
  ExprPtr ast;
  try {
    ast = parse_expr(args.input);
  } catch (const ParseError& err) {
    std::cerr << err.what() << "\n";
    return kExitParse;
  }

  Fuel fuel{args.fuel > 0 ? args.fuel : std::max(10L * args.digits, 1000L)};
  DecimalReal value;
  Rendered rendered;
  try {
    value = evaluate(*ast, fuel);
    rendered = render_digits(value, args.digits);
  } catch (const UndeterminedError& err) {
    std::cerr << "undetermined: " << err.what() << "\n";
    return kExitUndetermined;
  } catch (const std::domain_error& err) {
    std::cerr << "domain error: " << err.what() << "\n";
    return kExitDomain;
  }

  bool checked = false;
  std::string check_note;
  int exit_code = rendered.status == EvalStatus::Undetermined ? kExitUndetermined : kExitOk;
  if (args.check) {
    if (rendered.status == EvalStatus::Undetermined) {
      check_note = "skipped: digits undetermined";
    } else {
      try {
        IntervalReal oracle = interval_real(ast);
        CertifyResult cert = certify_digits(value, oracle, args.digits);
        switch (cert.status) {
          case CertifyStatus::Certified:
            checked = true;
            check_note = "certified " + std::to_string(args.digits) + " digits";
            break;
          case CertifyStatus::Mismatch:
            check_note = "refuted at position " + std::to_string(cert.position);
            exit_code = kExitFailure;
            break;
          case CertifyStatus::Inconclusive:
          default:
            check_note = "inconclusive: enclosure straddles a digit-cell edge";
            break;
        }
      } catch (const OracleUnsupported& err) {
        check_note = std::string("unsupported: ") + err.what();
      } catch (const OracleError& err) {
        check_note = std::string("oracle error: ") + err.what();
      }
    }
  }

  if (!args.dump_file.empty() && rendered.digits_emitted >= 0) {
    std::ofstream out(args.dump_file);
    if (!out) {
      std::cerr << "cannot write " << args.dump_file << "\n";
      return kExitFailure;
    }
    out << dump_digits(value, rendered.digits_emitted);
  }

  if (args.json) {
    nlohmann::ordered_json j;
    j["input"] = args.input;
    j["value"] = rendered.text;
    j["digits"] = rendered.digits_emitted;
    j["status"] = status_text(rendered);
    j["fuel_used"] = value.scan_depth();
    j["checked"] = checked;
    if (!check_note.empty()) j["check_note"] = check_note;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rendered.text << "\n";
    std::cout << "status: " << status_text(rendered) << "\n";
    if (args.check) std::cout << "check: " << check_note << "\n";
  }
  return exit_code;
}

int run_pi(int digits) {
  DecimalReal pi = pi_real();
  Rendered rendered = render_digits(pi, digits);
  std::cout << rendered.text << "\n";
  IntervalReal oracle = interval_real(parse_expr("pi"));
  CertifyResult cert = certify_digits(pi, oracle, digits);
  if (cert.status != CertifyStatus::Certified) {
    std::cerr << "certification failed at position " << cert.position << "\n";
    return kExitFailure;
  }
  std::cout << "certified: " << digits << " digits against the interval oracle\n";
  return kExitOk;
}

int run_stats(const std::string& op, int k, long trials, std::uint64_t seed) {
  CarryStatsReport report =
      carry_stats(op == "mul" ? StatsOp::Mul : StatsOp::Add, k, trials, seed);
  std::cout << "op=" << report.operation << " k=" << k << " trials=" << report.trials
            << " seed=" << report.seed << "\n";
  std::cout << "frequency_first_choice: " << frequency_text(report.frequency_first_choice)
            << "\n";
  return kExitOk;
}

int run_selfcheck() {
  SmallCheckReport report = exhaustive_small_check(2, 1);
  std::cout << "pairs: " << report.pairs_checked << "\n";
  std::cout << "triples: " << report.triples_checked << "\n";
  std::cout << "counterexamples: " << report.counterexamples << "\n";
  if (report.counterexamples > 0) {
    std::cout << "first: " << report.first_counterexample << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculator on the decimal construction of the reals"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression to digits");
  eval_cmd->add_option("expr", eval_args.input, "expression text")->required();
  eval_cmd->add_option("--digits", eval_args.digits, "fractional digits to print")
      ->check(CLI::Range(0, 200));
  eval_cmd->add_option("--fuel", eval_args.fuel, "scan horizon (default max(10*digits, 1000))")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_flag("--json", eval_args.json, "machine-readable output");
  eval_cmd->add_flag("--check", eval_args.check, "certify digits against the interval oracle");
  eval_cmd->add_option("--dump", eval_args.dump_file, "write a digit dump to this file");

  int pi_digits = 30;
  CLI::App* pi_cmd = app.add_subcommand("pi", "certified digits of pi");
  pi_cmd->add_option("--digits", pi_digits, "fractional digits to print")
      ->check(CLI::Range(0, 200));

  std::string stats_op = "add";
  int stats_k = 6;
  long stats_trials = 100000;
  std::uint64_t stats_seed = 1;
  CLI::App* stats_cmd = app.add_subcommand("stats", "first-choice carry statistics");
  stats_cmd->add_option("--op", stats_op, "operation")->check(CLI::IsMember({"add", "mul"}));
  stats_cmd->add_option("--k", stats_k, "digit position")->check(CLI::Range(0, 40));
  stats_cmd->add_option("--trials", stats_trials, "number of trials")->check(CLI::PositiveNumber);
  stats_cmd->add_option("--seed", stats_seed, "stream seed");

  CLI::App* self_cmd = app.add_subcommand("selfcheck", "exhaustive small-value field laws");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (pi_cmd->parsed()) return run_pi(pi_digits);
    if (stats_cmd->parsed()) return run_stats(stats_op, stats_k, stats_trials, stats_seed);
    if (self_cmd->parsed()) return run_selfcheck();
  } catch (const UndeterminedError& err) {
    std::cerr << "undetermined: " << err.what() << "\n";
    return kExitUndetermined;
  } catch (const std::domain_error& err) {
    std::cerr << "domain error: " << err.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
