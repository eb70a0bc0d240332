#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbelief {

/// 1-based column number.
class ColumnId {
 public:
  constexpr ColumnId() = default;
  constexpr explicit ColumnId(int index) : index_(index) {}

  [[nodiscard]] constexpr int index() const { return index_; }
  /// 0-based offset for container access.
  [[nodiscard]] constexpr std::size_t offset() const {
    return static_cast<std::size_t>(index_ - 1);
  }

  friend constexpr auto operator<=>(ColumnId, ColumnId) = default;

 private:
  int index_ = 1;
};

/// move(src, dst): the top block of `src` is put on top of `dst`.
class Action {
 public:
  /// Throws Error(invalid_argument) for non-positive ids or src == dst.
  Action(ColumnId src, ColumnId dst);

  [[nodiscard]] ColumnId src() const { return src_; }
  [[nodiscard]] ColumnId dst() const { return dst_; }

  // Lexicographic on (src, dst); this is the planner's expansion order.
  friend auto operator<=>(const Action&, const Action&) = default;

 private:
  ColumnId src_;
  ColumnId dst_;
};

/// "move <src> <dst>"
std::string to_string(const Action& a);

/// A situation is the finite history of actions performed since S0.
class Situation {
 public:
  Situation() = default;  // S0
  explicit Situation(std::vector<Action> history) : history_(std::move(history)) {}

  [[nodiscard]] static Situation initial() { return {}; }

  [[nodiscard]] const std::vector<Action>& history() const { return history_; }
  [[nodiscard]] bool is_initial() const { return history_.empty(); }
  [[nodiscard]] std::size_t length() const { return history_.size(); }

  friend bool operator==(const Situation&, const Situation&) = default;

 private:
  std::vector<Action> history_;
};

/// do(a, s)
[[nodiscard]] Situation do_action(const Action& a, const Situation& s);

/// The unique (a, s') with do(a, s') = s, or nullopt for S0.
[[nodiscard]] std::optional<std::pair<Action, Situation>> predecessor(const Situation& s);

/// s ⊂ t: s's history is a strict prefix of t's.
[[nodiscard]] bool precedes(const Situation& s, const Situation& t);

/// s ⊆ t
[[nodiscard]] bool precedes_eq(const Situation& s, const Situation& t);

/// Plan text: one "move <src> <dst>" per line, newline-terminated.
[[nodiscard]] std::string format_plan_text(std::span<const Action> actions);

/// Inverse of format_plan_text. Blank lines are skipped; anything else
/// malformed throws ParseError(parse) with the offending line.
[[nodiscard]] std::vector<Action> parse_plan_text(std::string_view text);

}  // namespace qbelief
