#include "qbelief/cli.hpp"

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "qbelief/planner.hpp"
#include "qbelief/qbdl.hpp"
#include "qbelief/worldsim.hpp"

namespace qbelief {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DomainSpec load_domain(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_domain(buf.str());
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void print_row(std::ostream& out, const std::string& label, const std::vector<std::string>& cells,
               std::size_t label_width, std::size_t cell_width) {
  std::string line = pad(label, label_width);
  for (const auto& c : cells) line += pad(c, cell_width);
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out << line << '\n';
}

template <typename T, typename F>
std::vector<std::string> cells_of(const std::vector<T>& xs, F f) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

std::vector<std::string> quality_names(const QualityScale& scale, const std::vector<Quality>& qs) {
  return cells_of(qs, [&](Quality q) { return scale.name(q); });
}

std::vector<std::string> numbers(const std::vector<int>& xs) {
  return cells_of(xs, [](int x) { return std::to_string(x); });
}

void print_report_table(std::ostream& out, const Report& r) {
  const QualityScale& scale = r.domain.scale;
  std::vector<int> ids;
  for (int i = 1; i <= r.domain.columns; ++i) ids.push_back(i);
  std::vector<Quality> assigned;
  for (int c : r.domain.initial_counts) assigned.push_back(scale.classify(c));

  std::size_t cell = 4;
  for (const auto& b : scale.bands()) cell = std::max(cell, b.name.size() + 2);
  constexpr std::size_t label = 36;
  print_row(out, "Columns", numbers(ids), label, cell);
  print_row(out, "Initially blocks in col.", numbers(r.domain.initial_counts), label, cell);
  print_row(out, "Assigned qualities in initial sit.", quality_names(scale, assigned), label, cell);
  print_row(out, "Goal", quality_names(scale, r.domain.goals), label, cell);
  print_row(out, "Finally blocks in col.", numbers(r.final_counts), label, cell);
  print_row(out, "Goal achievement", cells_of(r.achieved, [](bool b) { return std::string(b ? "yes" : "no"); }),
            label, cell);
  out << "Plan: " << r.plan.size() << " moves (" << to_string(r.outcome_kind) << ")";
  if (!r.failed_moves.empty()) out << ", " << r.failed_moves.size() << " on an empty column";
  out << '\n';
}

int cmd_plan(const std::string& path, const PlannerConfig& cfg, bool json, std::ostream& out, std::ostream& err) {
  const DomainSpec spec = load_domain(path);
  const auto scale = std::make_shared<const QualityScale>(spec.scale);
  const PlanOutcome outcome = plan(BeliefState::observe(spec.initial_counts, scale), spec.goal_spec(), cfg);
  if (json) {
    nlohmann::json plan = nlohmann::json::array();
    for (const auto& a : outcome.plan.actions) plan.push_back({a.src().index(), a.dst().index()});
    out << nlohmann::json{{"plan", plan},
                          {"outcome_kind", std::string(to_string(outcome.kind))},
                          {"distance", outcome.distance},
                          {"expanded", outcome.expanded}}
               .dump(2)
        << '\n';
  } else {
    out << format_plan_text(outcome.plan.actions);
    err << "outcome: " << to_string(outcome.kind) << ", distance " << outcome.distance << ", "
        << outcome.plan.size() << " moves, " << outcome.expanded << " states expanded\n";
  }
  return outcome.kind == OutcomeKind::exact ? kExitOk : kExitUnachieved;
}

int cmd_simulate(const std::string& path, const PlannerConfig& cfg, bool json, std::ostream& out) {
  const Report report = run_scenario(load_domain(path), cfg);
  if (json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    print_report_table(out, report);
  }
  return report.all_achieved ? kExitOk : kExitUnachieved;
}

int cmd_trace(int blocks, int steps, int granularity, bool json, std::ostream& out) {
  if (blocks < 0) throw UsageError("--blocks must be non-negative");
  if (granularity < 2) throw UsageError("--granularity must be at least 2");
  const QualityScale scale = QualityScale::uniform(granularity, granularity);
  const Trajectory t = trajectory_table(blocks, scale, steps);
  const auto cell_text = [](Degree d) { return d.is_zero() ? std::string() : to_string(d); };
  if (json) {
    nlohmann::json rows = nlohmann::json::object();
    for (int q = 0; q < scale.granularity(); ++q) {
      rows[scale.name(Quality{q})] = cells_of(t.rows[static_cast<std::size_t>(q)], cell_text);
    }
    out << nlohmann::json{{"counts", t.counts}, {"rows", rows}, {"believe", quality_names(scale, t.believes)}}.dump(2)
        << '\n';
    return kExitOk;
  }
  std::size_t label = 16;
  for (const auto& b : scale.bands()) label = std::max(label, b.name.size() + 8);
  const std::size_t cell = std::to_string(granularity).size() * 2 + 3;
  print_row(out, "Blocks in col.", numbers(t.counts), label, cell);
  for (int q = scale.granularity() - 1; q >= 0; --q) {
    print_row(out, scale.name(Quality{q}) + "(n,s)", cells_of(t.rows[static_cast<std::size_t>(q)], cell_text), label,
              cell);
  }
  return kExitOk;
}

int cmd_experiment(const ExperimentParams& params, const PlannerConfig& cfg, bool json, std::ostream& out) {
  if (params.runs < 1) throw UsageError("--runs must be at least 1");
  if (params.columns < 1) throw UsageError("--columns must be at least 1");
  if (params.max_initial < 0) throw UsageError("--max-initial must be non-negative");
  const ExperimentResult result = run_experiment(params, cfg);
  if (json) {
    out << to_json(result).dump(2) << '\n';
    return kExitOk;
  }
  const QualityScale& scale = params.scale;
  for (std::size_t i = 0; i < result.runs.size(); ++i) {
    const Report& r = result.runs[i];
    out << "run " << i << ": initial";
    for (int c : r.domain.initial_counts) out << ' ' << c;
    out << " | goal";
    for (auto q : r.domain.goals) out << ' ' << scale.name(q);
    out << " | final";
    for (int c : r.final_counts) out << ' ' << c;
    out << " | " << r.plan.size() << " moves " << to_string(r.outcome_kind) << " | "
        << (r.all_achieved ? "achieved" : "not achieved") << '\n';
  }
  out << "prng: " << kPrngName << '\n';
  out << "success_rate: " << result.success_rate << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qualitative belief-state planner for the moving-blocks problem", "qbelief"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  PlannerConfig cfg;
  std::string domain_path;

  auto* plan_cmd = app.add_subcommand("plan", "Plan moves reaching the goal qualities");
  plan_cmd->add_option("domain", domain_path, "Domain file")->required();
  plan_cmd->add_option("--max-depth", cfg.max_depth, "Longest plan considered")->check(CLI::NonNegativeNumber);
  plan_cmd->add_option("--max-expansions", cfg.max_expansions, "Search budget")->check(CLI::PositiveNumber);

  auto* sim_cmd = app.add_subcommand("simulate", "Plan, execute on the real blocks and report goal achievement");
  sim_cmd->add_option("domain", domain_path, "Domain file")->required();
  sim_cmd->add_option("--max-depth", cfg.max_depth, "Longest plan considered")->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--max-expansions", cfg.max_expansions, "Search budget")->check(CLI::PositiveNumber);

  int blocks = 0;
  int steps = 0;
  int granularity = 4;
  auto* trace_cmd = app.add_subcommand("trace", "Belief degrees of one column across repeated moves");
  trace_cmd->add_option("--blocks", blocks, "Initial block count")->required();
  trace_cmd->add_option("--steps", steps, "Removals (negative) or additions (positive)")->required();
  trace_cmd->add_option("--granularity", granularity, "Number of qualities (bands of that width)");

  ExperimentParams params;
  auto* exp_cmd = app.add_subcommand("experiment", "Batch of random scenarios");
  exp_cmd->add_option("--runs", params.runs, "Number of scenarios");
  exp_cmd->add_option("--seed", params.seed, "Generator seed");
  exp_cmd->add_option("--columns", params.columns, "Columns per scenario");
  exp_cmd->add_option("--max-initial", params.max_initial, "Largest initial block count");
  exp_cmd->add_option("--max-depth", cfg.max_depth, "Longest plan considered")->check(CLI::NonNegativeNumber);

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a domain file");
  validate_cmd->add_option("domain", domain_path, "Domain file")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*plan_cmd) return cmd_plan(domain_path, cfg, json, out, err);
    if (*sim_cmd) return cmd_simulate(domain_path, cfg, json, out);
    if (*trace_cmd) return cmd_trace(blocks, steps, granularity, json, out);
    if (*exp_cmd) return cmd_experiment(params, cfg, json, out);
    if (*validate_cmd) {
      const DomainSpec spec = load_domain(domain_path);
      out << "ok: " << spec.columns << " columns, granularity " << spec.scale.granularity() << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << domain_path << ":" << e.line() << ": " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace qbelief
