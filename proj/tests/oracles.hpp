#pragma once

// Test-only reference models. Nothing here calls into the planner or the
// update engine's step rules, so they can check those independently.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <optional>
#include <vector>

#include "qbelief/beliefs.hpp"

namespace qbelief::oracle {

// Belief degrees rendered as quarters, rows ordered large, medium, small,
// zero; columns are block counts 12 down to 0. -1 marks a blank cell.
using QuarterTable = std::array<std::array<int, 13>, 4>;

constexpr int B = -1;

// Trajectory from 11 blocks.
inline constexpr QuarterTable kTraceFrom11 = {{
    {B, 4, 3, 2, 1, B, B, B, B, B, B, B, B},
    {B, B, 1, 2, 3, 4, 3, 2, 1, B, B, B, B},
    {B, B, B, B, B, B, 1, 2, 3, 4, 3, 2, 1},
    {B, B, B, B, B, B, B, B, B, B, 1, 2, 3},
}};

// Four blocks: trajectories from 12, 11, 10 and 9 blocks.
inline constexpr std::array<QuarterTable, 4> kStaircase = {{
    {{
        {4, 3, 2, 1, B, B, B, B, B, B, B, B, B},
        {B, 1, 2, 3, 4, 3, 2, 1, B, B, B, B, B},
        {B, B, B, B, B, 1, 2, 3, 4, 3, 2, 1, B},
        {B, B, B, B, B, B, B, B, B, 1, 2, 3, 4},
    }},
    kTraceFrom11,
    {{
        {B, B, 4, 3, 2, 1, B, B, B, B, B, B, B},
        {B, B, B, 1, 2, 3, 4, 3, 2, 1, B, B, B},
        {B, B, B, B, B, B, B, 1, 2, 3, 4, 3, 2},
        {B, B, B, B, B, B, B, B, B, B, B, 1, 2},
    }},
    {{
        {B, B, B, 4, 3, 2, 1, B, B, B, B, B, B},
        {B, B, B, B, 1, 2, 3, 4, 3, 2, 1, B, B},
        {B, B, B, B, B, B, B, B, 1, 2, 3, 4, 3},
        {B, B, B, B, B, B, B, B, B, B, B, B, 1},
    }},
}};

inline constexpr std::array<int, 4> kStaircaseStarts = {12, 11, 10, 9};

/// Triangular membership over a virtual height measured in 1/g steps:
/// position v means quality v / g with weight (g - v % g) / g and the next
/// quality with weight (v % g) / g. Moves shift v by one, clamped to the
/// scale. The main belief switches when another quality's weight exceeds
/// one half.
class TriangularColumn {
 public:
  TriangularColumn(int quality, int granularity)
      : g_(granularity), v_(quality * granularity), believe_(quality) {}

  void remove() { step(-1); }
  void add() { step(+1); }

  [[nodiscard]] int numerator(int q) const {
    const int lo = v_ / g_;
    const int r = v_ % g_;
    if (q == lo) return g_ - r;
    if (q == lo + 1) return r;
    return 0;
  }
  [[nodiscard]] int believe() const { return believe_; }

  [[nodiscard]] bool matches(const ColumnBelief& cb) const {
    for (int q = 0; q < g_; ++q) {
      if (cb.degree(Quality{q}).numerator() != numerator(q)) return false;
    }
    return cb.believe().index == believe_;
  }

 private:
  void step(int dir) {
    v_ = std::clamp(v_ + dir, 0, g_ * (g_ - 1));
    for (int q = 0; q < g_; ++q) {
      if (q != believe_ && 2 * numerator(q) > g_) believe_ = q;
    }
  }

  int g_;
  int v_;
  int believe_;
};

/// Lexicographically least among the shortest goal-reaching action
/// sequences, found by plain enumeration of every sequence up to `max_len`
/// (no pruning, no deduplication). `step` returns nullopt when the action
/// is not possible.
template <typename State, typename Action>
std::optional<std::vector<Action>> shortest_by_enumeration(
    const State& root, const std::vector<Action>& actions, int max_len,
    const std::function<std::optional<State>(const State&, const Action&)>& step,
    const std::function<bool(const State&)>& is_goal) {
  // Each level is kept in lexicographic order of its sequences.
  std::vector<std::pair<State, std::vector<Action>>> frontier{{root, {}}};
  for (int len = 0; len <= max_len; ++len) {
    for (const auto& [s, seq] : frontier) {
      if (is_goal(s)) return seq;
    }
    if (len == max_len) break;
    std::vector<std::pair<State, std::vector<Action>>> next;
    for (const auto& [s, seq] : frontier) {
      for (const auto& a : actions) {
        if (auto t = step(s, a)) {
          auto longer = seq;
          longer.push_back(a);
          next.emplace_back(std::move(*t), std::move(longer));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace qbelief::oracle
