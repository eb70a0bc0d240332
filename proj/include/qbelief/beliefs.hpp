#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbelief/error.hpp"
#include "qbelief/sitcalc.hpp"

namespace qbelief {

/// Position of a quality on its scale; 0 is the empty-column quality.
struct Quality {
  int index = 0;

  friend constexpr auto operator<=>(Quality, Quality) = default;
};

/// Inclusive block-count interval denoted by a quality.
struct Band {
  std::string name;
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Band&, const Band&) = default;
};

/// Checks that bands start at 0 and are ascending and contiguous, and that
/// there are at least two of them with unique names.
/// Returns the offending category and a message, or nullopt when valid.
std::optional<std::pair<ErrorCode, std::string>> check_bands(std::span<const Band> bands);

/// Ordered qualities with their block-count bands. The granularity is the
/// number of qualities; every belief update moves 1/granularity of mass.
class QualityScale {
 public:
  /// Throws Error with the check_bands() code on an invalid arrangement.
  explicit QualityScale(std::vector<Band> bands);

  /// zero=0..0, small=1..4, medium=5..8, large=9..12
  static QualityScale standard();

  /// zero=0..0 followed by `granularity - 1` bands of `width` blocks each.
  /// Granularity 4 with width 4 yields standard().
  static QualityScale uniform(int granularity, int width);

  [[nodiscard]] int granularity() const { return static_cast<int>(bands_.size()); }
  [[nodiscard]] const std::vector<Band>& bands() const { return bands_; }
  [[nodiscard]] const Band& band(Quality q) const { return bands_.at(static_cast<std::size_t>(q.index)); }
  [[nodiscard]] const std::string& name(Quality q) const { return band(q).name; }
  [[nodiscard]] Quality top() const { return Quality{granularity() - 1}; }
  [[nodiscard]] std::optional<Quality> find(std::string_view name) const;

  /// Quality whose band contains `count`; counts beyond the top band map
  /// to the top quality.
  [[nodiscard]] Quality classify(int count) const;

  friend bool operator==(const QualityScale&, const QualityScale&) = default;

 private:
  std::vector<Band> bands_;
};

/// Exact belief degree numerator/granularity.
class Degree {
 public:
  constexpr Degree(int numerator, int granularity) : num_(numerator), den_(granularity) {}

  [[nodiscard]] constexpr int numerator() const { return num_; }
  [[nodiscard]] constexpr int granularity() const { return den_; }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool exceeds_half() const { return 2 * num_ > den_; }
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / den_; }

  // Rational comparison: 2/4 == 1/2.
  friend constexpr bool operator==(Degree a, Degree b) {
    return static_cast<long long>(a.num_) * b.den_ == static_cast<long long>(b.num_) * a.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    return static_cast<long long>(a.num_) * b.den_ <=> static_cast<long long>(b.num_) * a.den_;
  }

 private:
  int num_;
  int den_;
};

/// "k/g"
std::string to_string(Degree d);

/// Belief about one column: a degree per quality plus the main belief.
///
/// The support is always one quality or two adjacent ones, so the vector is
/// held as (lower support quality, numerator of the quality above it). A
/// pure belief has upper numerator 0.
class ColumnBelief {
 public:
  /// Full belief in `q`.
  static ColumnBelief pure(Quality q, int granularity);

  /// Builds a belief from per-quality numerators (size = granularity).
  /// Throws Error(invalid_argument) unless the numerators sum to the
  /// granularity, the support is adjacent, and degree(believe) >= 1/2.
  static ColumnBelief from_numerators(std::span<const int> numerators, Quality believe);

  [[nodiscard]] int granularity() const { return granularity_; }
  [[nodiscard]] Quality believe() const { return Quality{believe_}; }
  [[nodiscard]] Degree degree(Quality q) const;
  [[nodiscard]] std::vector<int> numerators() const;
  [[nodiscard]] bool is_pure() const { return upper_ == 0; }

  /// Lowest / highest quality with a positive degree.
  [[nodiscard]] Quality lowest_support() const { return Quality{base_}; }
  [[nodiscard]] Quality highest_support() const { return Quality{upper_ == 0 ? base_ : base_ + 1}; }

  /// Dense code in [0, granularity^3), unique per belief value.
  [[nodiscard]] std::uint32_t code() const;
  /// Inverse of code(); the code must come from a belief of this granularity.
  [[nodiscard]] static ColumnBelief from_code(std::uint32_t code, int granularity);

  friend bool operator==(const ColumnBelief&, const ColumnBelief&) = default;

 private:
  friend ColumnBelief apply_removal(const ColumnBelief& cb);
  friend ColumnBelief apply_addition(const ColumnBelief& cb);

  ColumnBelief(int granularity, int base, int upper, int believe)
      : granularity_(static_cast<std::uint8_t>(granularity)),
        base_(static_cast<std::uint8_t>(base)),
        upper_(static_cast<std::uint8_t>(upper)),
        believe_(static_cast<std::uint8_t>(believe)) {}

  std::uint8_t granularity_;
  std::uint8_t base_;
  std::uint8_t upper_;
  std::uint8_t believe_;
};

/// Initial belief of a freshly observed column holding `count` blocks.
ColumnBelief observe(int count, const QualityScale& scale);

/// Effect of taking the top block off a column: 1/g of mass moves one
/// quality down. A fully believed quality 0 is left unchanged. The main
/// belief switches to the gaining quality once its degree exceeds 1/2.
ColumnBelief apply_removal(const ColumnBelief& cb);

/// Mirror of apply_removal for putting a block on a column.
ColumnBelief apply_addition(const ColumnBelief& cb);

/// Target quality per column; constant across situations.
struct GoalSpec {
  std::vector<Quality> targets;  // index = column offset

  [[nodiscard]] Quality target(ColumnId n) const { return targets.at(n.offset()); }
  friend bool operator==(const GoalSpec&, const GoalSpec&) = default;
};

/// The robot's beliefs about every column in one situation.
class BeliefState {
 public:
  BeliefState(std::shared_ptr<const QualityScale> scale, std::vector<ColumnBelief> columns);

  /// observe() applied to every column count.
  static BeliefState observe(std::span<const int> counts, std::shared_ptr<const QualityScale> scale);

  [[nodiscard]] const QualityScale& scale() const { return *scale_; }
  [[nodiscard]] const std::shared_ptr<const QualityScale>& scale_ptr() const { return scale_; }
  [[nodiscard]] std::size_t size() const { return columns_.size(); }
  [[nodiscard]] bool contains(ColumnId n) const {
    return n.index() >= 1 && n.offset() < columns_.size();
  }
  [[nodiscard]] const ColumnBelief& column(ColumnId n) const { return columns_.at(n.offset()); }
  [[nodiscard]] Quality believe(ColumnId n) const { return column(n).believe(); }
  [[nodiscard]] const std::vector<ColumnBelief>& columns() const { return columns_; }
  [[nodiscard]] std::vector<Quality> believes() const;

  friend bool operator==(const BeliefState& a, const BeliefState& b) {
    return a.columns_ == b.columns_ && *a.scale_ == *b.scale_;
  }

 private:
  std::shared_ptr<const QualityScale> scale_;
  std::vector<ColumnBelief> columns_;
};

/// Executability of `a` with respect to the robot's beliefs: the source
/// column must not be believed empty. Throws Error(invalid_argument) if a
/// column id is outside the state.
[[nodiscard]] bool poss(const BeliefState& state, const Action& a);

/// Removal on a.src, addition on a.dst; all other columns are untouched.
/// Throws Error(not_possible) when poss() is false.
[[nodiscard]] BeliefState apply_move(const BeliefState& state, const Action& a);

}  // namespace qbelief
