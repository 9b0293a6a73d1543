#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "zeroheavy/errors.hpp"

namespace zh = zeroheavy;

int main(int argc, char** argv) {
  CLI::App app{"Certified zero-heavy digit constructions, enriched Cantor values and cover bounds"};
  app.require_subcommand(1);

  zhcli::ConstructConfig cc;
  auto* construct = app.add_subcommand("construct", "Single-function zig-zag construction");
  construct->add_option("--f", cc.function, "Function of x, e.g. \"exp(x)\"")->required();
  construct->add_option("--base", cc.base, "Digit base")->check(CLI::Range(2u, 65536u));
  construct->add_option("--interval", cc.interval, "Domain as lo,hi (exact rationals)");
  construct->add_option("--digits", cc.digits, "Target x-interval width base^-digits");
  construct->add_option("--steps", cc.steps, "Maximum number of rounds");
  construct->add_option("--max-digits", cc.max_digits, "Digit budget for any single object");
  construct->add_option("--out", cc.out, "Output directory");

  zhcli::FamilyConfig fc;
  auto* family = app.add_subcommand("family", "Family / multi-base construction");
  family->add_option("--f", fc.functions, "Function of x (repeatable)");
  family->add_option("--gen", fc.generator, "Generator rule in q, e.g. \"exp(q*x)\"");
  family->add_option("--q-list", fc.q_list, "Comma-separated rationals substituted for q");
  family->add_option("--base", fc.base, "Digit base")->check(CLI::Range(2u, 65536u));
  family->add_option("--bases", fc.bases, "Comma-separated bases (multi-base mode)");
  family->add_option("--interval", fc.interval, "Domain as lo,hi");
  family->add_option("--steps", fc.steps, "Number of scheduler steps");
  family->add_option("--max-digits", fc.max_digits, "Digit budget for any single object");
  family->add_option("--jobs", fc.jobs, "Threads for per-(k, base) validation")->check(CLI::PositiveNumber);
  family->add_option("--out", fc.out, "Output directory");

  zhcli::CantorConfig kc;
  auto* cantor = app.add_subcommand("cantor", "Tabulate C, C_s and the enriched approximant");
  cantor->add_option("--grid", kc.grid, "Points i/N for i = 0..N");
  cantor->add_option("--ternary-depth", kc.ternary_depth, "Points i/3^D for i = 0..3^D");
  cantor->add_option("--points", kc.points, "Comma-separated rationals");
  cantor->add_option("--k", kc.k, "Approximation level");
  cantor->add_option("--format", kc.format, "csv or json");
  cantor->add_option("--out", kc.out, "Output file (stdout when omitted)");
  cantor->add_option("--jobs", kc.jobs, "Threads for grid evaluation")->check(CLI::PositiveNumber);

  zhcli::AnalyzeConfig ac;
  auto* analyze = app.add_subcommand("analyze", "Digit frequency report");
  analyze->add_option("--digits-file", ac.digits_file, "Digit file to analyse");
  analyze->add_option("--rational", ac.rational, "Rational whose |x| mod 1 is expanded");
  analyze->add_option("--base", ac.base, "Base for --rational")->check(CLI::Range(2u, 65536u));
  analyze->add_option("--depth", ac.depth, "Digits to expand for --rational");
  analyze->add_option("--certificates", ac.certificates, "certificates.json to cross-check");
  analyze->add_option("--label", ac.label, "Certificate label to cross-check, e.g. x or k=1");
  analyze->add_option("--format", ac.format, "text or json");

  zhcli::BoundConfig bc;
  auto* bound = app.add_subcommand("bound", "Cover-cost bound for the zero-heavy set");
  bound->add_option("--base", bc.base, "Digit base");
  bound->add_option("--s", bc.s, "Exponent s > 0 (rational)");
  bound->add_option("--K", bc.K, "First word length of the cover");
  bound->add_option("--M-cap", bc.M_cap, "Last exact row (default 2K)");
  bound->add_option("--epsilon", bc.epsilon, "Zero-heaviness slack (default: halving rule)");
  bound->add_option("--format", bc.format, "csv or json");
  bound->add_option("--out", bc.out, "Directory for cover.csv and cover.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : zhcli::kUsage;
  }

  try {
    if (*construct) return zhcli::cmd_construct(cc);
    if (*family) return zhcli::cmd_family(fc);
    if (*cantor) return zhcli::cmd_cantor(kc);
    if (*analyze) return zhcli::cmd_analyze(ac);
    if (*bound) return zhcli::cmd_bound(bc);
  } catch (const zh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return zhcli::kUsage;
  } catch (const zh::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return zhcli::kUsage;
  } catch (const zh::ConstraintError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return zhcli::kUsage;
  } catch (const zh::BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return zhcli::kBudget;
  } catch (const zh::NonIsolationError& e) {
    std::cerr << "critical points not isolated: " << e.what() << "\n";
    return zhcli::kBudget;
  } catch (const zh::WitnessNotFound& e) {
    std::cerr << "no distinct-value witness: " << e.what() << "\n";
    return zhcli::kBudget;
  } catch (const zh::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return zhcli::kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zhcli::kInvariant;
  }
  return zhcli::kUsage;
}
