#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qbelief/beliefs.hpp"

namespace qbelief {

struct Plan {
  std::vector<Action> actions;

  [[nodiscard]] std::size_t size() const { return actions.size(); }
  friend bool operator==(const Plan&, const Plan&) = default;
};

enum class OutcomeKind { exact, closest };

std::string_view to_string(OutcomeKind kind);  // "Exact" / "Closest"

struct PlanOutcome {
  Plan plan;
  OutcomeKind kind = OutcomeKind::exact;
  BeliefState final_belief;
  int distance = 0;
  std::uint64_t expanded = 0;
};

struct PlannerConfig {
  int max_depth = 64;
  std::uint64_t max_expansions = 5'000'000;
};

/// believe(n) = goal(n) for every column n.
[[nodiscard]] bool goal_satisfied(const BeliefState& state, const GoalSpec& goal);

/// Sum over columns of the ordinal gap between believed and goal quality.
[[nodiscard]] int distance(const BeliefState& state, const GoalSpec& goal);

/// Breadth-first search over belief states for a shortest move sequence
/// reaching the goal. Successors are generated in ascending (src, dst)
/// order and duplicate belief states are pruned, so among shortest plans
/// the lexicographically least is returned.
///
/// If the goal is not reached within cfg.max_depth moves or
/// cfg.max_expansions expanded states, the outcome is Closest: the visited
/// state minimizing (distance, plan length, action sequence).
///
/// Throws Error(limits) when max_expansions is 0 or max_depth negative,
/// Error(invalid_argument) when the goal does not cover every column.
[[nodiscard]] PlanOutcome plan(const BeliefState& initial, const GoalSpec& goal, const PlannerConfig& cfg = {});

/// Belief trace of a plan: element 0 is `initial`, element i+1 follows
/// plan.actions[i]. Throws NotPossibleError naming the first step whose
/// source column is believed empty.
[[nodiscard]] std::vector<BeliefState> simulate_beliefs(const BeliefState& initial, const Plan& plan);

}  // namespace qbelief
