#include "qbelief/worldsim.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <memory>
#include <numeric>
#include <random>

namespace qbelief {

int WorldState::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Execution execute(const WorldState& world, const Plan& plan) {
  Execution out{world, {}};
  auto& counts = out.world.counts;
  for (std::size_t k = 0; k < plan.actions.size(); ++k) {
    const Action& a = plan.actions[k];
    if (a.src().offset() >= counts.size() || a.dst().offset() >= counts.size()) {
      throw Error(ErrorCode::invalid_argument, to_string(a) + ": column outside the world");
    }
    int& src = counts[a.src().offset()];
    if (src == 0) {
      out.failed_moves.push_back(k);
      continue;
    }
    --src;
    ++counts[a.dst().offset()];
  }
  return out;
}

std::vector<bool> evaluate(const WorldState& final, const GoalSpec& goal, const QualityScale& scale) {
  if (final.counts.size() != goal.targets.size()) {
    throw Error(ErrorCode::invalid_argument, "world and goal cover different columns");
  }
  std::vector<bool> achieved;
  achieved.reserve(final.counts.size());
  for (std::size_t i = 0; i < final.counts.size(); ++i) {
    achieved.push_back(scale.classify(final.counts[i]) == goal.targets[i]);
  }
  return achieved;
}

Report run_scenario(const DomainSpec& spec, const PlannerConfig& cfg) {
  validate_domain(spec);
  const auto scale = std::make_shared<const QualityScale>(spec.scale);
  const GoalSpec goal = spec.goal_spec();
  const BeliefState initial = BeliefState::observe(spec.initial_counts, scale);
  PlanOutcome outcome = plan(initial, goal, cfg);
  Execution run = execute(WorldState{spec.initial_counts}, outcome.plan);

  Report report;
  report.domain = spec;
  report.outcome_kind = outcome.kind;
  report.final_counts = run.world.counts;
  report.final_believes = outcome.final_belief.believes();
  report.achieved = evaluate(run.world, goal, spec.scale);
  report.all_achieved = std::all_of(report.achieved.begin(), report.achieved.end(), [](bool b) { return b; });
  report.failed_moves = std::move(run.failed_moves);
  report.plan = std::move(outcome.plan);
  return report;
}

Trajectory trajectory_table(int initial_count, const QualityScale& scale, int steps) {
  const int g = scale.granularity();
  const long long limit = 10LL * g * (scale.bands().back().hi + 1);
  if (initial_count < 0) throw Error(ErrorCode::invalid_argument, "initial count must be non-negative");
  if (std::llabs(steps) > limit) {
    throw Error(ErrorCode::invalid_argument, "at most " + std::to_string(limit) + " steps");
  }
  Trajectory t;
  t.rows.assign(static_cast<std::size_t>(g), {});
  ColumnBelief cb = observe(initial_count, scale);
  int count = initial_count;
  const auto record = [&] {
    t.counts.push_back(count);
    t.believes.push_back(cb.believe());
    for (int q = 0; q < g; ++q) t.rows[static_cast<std::size_t>(q)].push_back(cb.degree(Quality{q}));
  };
  record();
  for (int i = 0; i < std::abs(steps); ++i) {
    if (steps < 0) {
      cb = apply_removal(cb);
      count = std::max(0, count - 1);
    } else {
      cb = apply_addition(cb);
      ++count;
    }
    record();
  }
  return t;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased draw from [0, n) by rejection; std distributions are not
// portable across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t v = 0;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace

DomainSpec random_scenario(const ExperimentParams& params, int run_index) {
  if (params.runs < 1 || params.columns < 1 || params.max_initial < 0) {
    throw Error(ErrorCode::invalid_argument, "experiment needs runs >= 1, columns >= 1, max_initial >= 0");
  }
  if (run_index < 0 || run_index >= params.runs) {
    throw Error(ErrorCode::invalid_argument, "run index outside [0, runs)");
  }
  std::mt19937_64 rng(splitmix64(params.seed ^ splitmix64(static_cast<std::uint64_t>(run_index))));
  DomainSpec spec;
  spec.columns = params.columns;
  spec.scale = params.scale;
  for (int i = 0; i < params.columns; ++i) {
    spec.initial_counts.push_back(static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(params.max_initial) + 1)));
  }
  for (int i = 0; i < params.columns; ++i) {
    spec.goals.push_back(Quality{static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(params.scale.granularity())))});
  }
  return spec;
}

ExperimentResult run_experiment(const ExperimentParams& params, const PlannerConfig& cfg) {
  ExperimentResult result{params, {}, 0.0};
  int achieved = 0;
  for (int i = 0; i < params.runs; ++i) {
    result.runs.push_back(run_scenario(random_scenario(params, i), cfg));
    if (result.runs.back().all_achieved) ++achieved;
  }
  result.success_rate = static_cast<double>(achieved) / params.runs;
  return result;
}

namespace {

nlohmann::json bands_json(const QualityScale& scale) {
  nlohmann::json bands = nlohmann::json::array();
  for (const auto& b : scale.bands()) bands.push_back({{"name", b.name}, {"lo", b.lo}, {"hi", b.hi}});
  return bands;
}

nlohmann::json names_json(const QualityScale& scale, const std::vector<Quality>& qs) {
  nlohmann::json out = nlohmann::json::array();
  for (auto q : qs) out.push_back(scale.name(q));
  return out;
}

}  // namespace

nlohmann::json to_json(const Report& report) {
  nlohmann::json plan = nlohmann::json::array();
  for (const auto& a : report.plan.actions) plan.push_back({a.src().index(), a.dst().index()});
  nlohmann::json achieved = nlohmann::json::array();
  for (bool b : report.achieved) achieved.push_back(b);
  const QualityScale& scale = report.domain.scale;
  return {
      {"domain",
       {{"columns", report.domain.columns},
        {"bands", bands_json(scale)},
        {"initial", report.domain.initial_counts},
        {"goal", names_json(scale, report.domain.goals)}}},
      {"plan", plan},
      {"outcome_kind", std::string(to_string(report.outcome_kind))},
      {"final_counts", report.final_counts},
      {"final_believes", names_json(scale, report.final_believes)},
      {"achieved", achieved},
      {"all_achieved", report.all_achieved},
      {"failed_moves", report.failed_moves},
  };
}

nlohmann::json to_json(const ExperimentResult& result) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : result.runs) runs.push_back(to_json(r));
  const auto& p = result.params;
  return {
      {"params",
       {{"runs", p.runs},
        {"columns", p.columns},
        {"max_initial", p.max_initial},
        {"seed", p.seed},
        {"bands", bands_json(p.scale)}}},
      {"prng", kPrngName},
      {"runs", runs},
      {"success_rate", result.success_rate},
  };
}

}  // namespace qbelief
