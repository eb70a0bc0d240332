#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qbelief/beliefs.hpp"

namespace qbelief {

/// A moving-blocks domain: the scale, what the robot is shown initially,
/// and the goal quality of each column.
struct DomainSpec {
  int columns = 0;
  QualityScale scale = QualityScale::standard();
  std::vector<int> initial_counts;
  std::vector<Quality> goals;

  [[nodiscard]] GoalSpec goal_spec() const { return GoalSpec{goals}; }

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// Parses a domain document:
///
///   columns: 5
///   granularity: 4
///   bands: zero=0..0, small=1..4, medium=5..8, large=9..12
///   initial: 7 2 0 11 6
///   goal: small small medium medium small
///
/// `#` starts a comment; blank lines are ignored; keys may come in any
/// order but each exactly once. Throws ParseError for the first problem.
DomainSpec parse_domain(std::string_view text);

/// Canonical document (fixed key order, single spaces).
std::string serialize_domain(const DomainSpec& spec);

/// Throws Error if the fields disagree with each other (arity, goals
/// outside the scale, negative counts).
void validate_domain(const DomainSpec& spec);

}  // namespace qbelief
