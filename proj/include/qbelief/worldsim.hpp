#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "qbelief/planner.hpp"
#include "qbelief/qbdl.hpp"

namespace qbelief {

/// Ground truth: the actual number of blocks in every column.
struct WorldState {
  std::vector<int> counts;  // index = column offset

  [[nodiscard]] int total() const;
  friend bool operator==(const WorldState&, const WorldState&) = default;
};

struct Execution {
  WorldState world;
  std::vector<std::size_t> failed_moves;  // steps that found the source empty
};

/// Applies the plan to the real blocks. A move from an actually empty
/// column does nothing and its step index is recorded.
[[nodiscard]] Execution execute(const WorldState& world, const Plan& plan);

/// Per column: does the actual count fall inside the goal quality's band?
[[nodiscard]] std::vector<bool> evaluate(const WorldState& final, const GoalSpec& goal, const QualityScale& scale);

struct Report {
  DomainSpec domain;
  Plan plan;
  OutcomeKind outcome_kind = OutcomeKind::exact;
  std::vector<int> final_counts;
  std::vector<Quality> final_believes;
  std::vector<bool> achieved;
  bool all_achieved = false;
  std::vector<std::size_t> failed_moves;
};

/// observe -> plan in belief space -> execute on the real blocks -> evaluate.
[[nodiscard]] Report run_scenario(const DomainSpec& spec, const PlannerConfig& cfg = {});

/// Degrees of a single column across successive moves.
struct Trajectory {
  std::vector<int> counts;                 // actual block count per step, clamped at 0
  std::vector<std::vector<Degree>> rows;   // rows[q][step]
  std::vector<Quality> believes;           // per step
};

/// Starts from observe(initial_count) and applies |steps| removals
/// (steps < 0) or additions (steps > 0). Throws Error(invalid_argument) if
/// initial_count is negative or |steps| exceeds 10 * g * (top band hi + 1).
[[nodiscard]] Trajectory trajectory_table(int initial_count, const QualityScale& scale, int steps);

struct ExperimentParams {
  int runs = 1;
  int columns = 5;
  int max_initial = 12;
  std::uint64_t seed = 0;
  QualityScale scale = QualityScale::standard();
};

/// Name of the generator used by random_scenario.
inline constexpr const char* kPrngName = "mt19937_64+splitmix64";

/// Deterministic scenario for (params.seed, run_index): counts uniform in
/// [0, max_initial], goals uniform over the scale's qualities.
[[nodiscard]] DomainSpec random_scenario(const ExperimentParams& params, int run_index);

struct ExperimentResult {
  ExperimentParams params;
  std::vector<Report> runs;
  double success_rate = 0.0;
};

/// Runs params.runs scenarios; results are ordered by run index.
[[nodiscard]] ExperimentResult run_experiment(const ExperimentParams& params, const PlannerConfig& cfg = {});

nlohmann::json to_json(const Report& report);
nlohmann::json to_json(const ExperimentResult& result);

}  // namespace qbelief
