#include "qbelief/planner.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace qbelief {

std::string_view to_string(OutcomeKind kind) {
  return kind == OutcomeKind::exact ? "Exact" : "Closest";
}

namespace {

void check_goal(const BeliefState& state, const GoalSpec& goal) {
  if (goal.targets.size() != state.size()) {
    throw Error(ErrorCode::invalid_argument, "goal and belief state cover different columns");
  }
  for (auto q : goal.targets) {
    if (q.index < 0 || q.index >= state.scale().granularity()) {
      throw Error(ErrorCode::invalid_argument, "goal quality outside the scale");
    }
  }
}

constexpr std::uint32_t kNoParent = UINT32_MAX;

// Linear-probing set of packed keys; much faster than std::unordered_set on
// the million-state searches that unreachable goals produce.
class PackedSet {
 public:
  PackedSet() : slots_(1u << 12, kEmpty) {}

  bool insert(std::uint64_t key) {
    if (key == kEmpty) {
      if (has_empty_key_) return false;
      has_empty_key_ = true;
      return true;
    }
    if ((size_ + 1) * 2 > slots_.size()) grow();
    return place(slots_, key);
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
  }

  bool place(std::vector<std::uint64_t>& slots, std::uint64_t key) {
    const std::size_t mask = slots.size() - 1;
    for (std::size_t i = mix(key) & mask;; i = (i + 1) & mask) {
      if (slots[i] == key) return false;
      if (slots[i] == kEmpty) {
        slots[i] = key;
        ++size_;
        return true;
      }
    }
  }

  void grow() {
    std::vector<std::uint64_t> bigger(slots_.size() * 2, kEmpty);
    size_ = 0;
    for (auto k : slots_) {
      if (k != kEmpty) place(bigger, k);
    }
    slots_.swap(bigger);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
  bool has_empty_key_ = false;
};

// A whole belief state packed into one integer, `bits` per column.
struct PackedKey {
  using Key = std::uint64_t;
  using Set = PackedSet;
  unsigned bits;
  Key mask;

  explicit PackedKey(unsigned b) : bits(b), mask((Key{1} << b) - 1) {}
  [[nodiscard]] Key empty(std::size_t) const { return 0; }
  [[nodiscard]] std::uint32_t get(Key k, std::size_t i) const {
    return static_cast<std::uint32_t>((k >> (i * bits)) & mask);
  }
  void set(Key& k, std::size_t i, std::uint32_t code) const {
    k = (k & ~(mask << (i * bits))) | (static_cast<Key>(code) << (i * bits));
  }
};

// Fallback for states too wide for 64 bits: three bytes per column.
struct StringKey {
  using Key = std::string;
  struct Set {
    std::unordered_set<std::string> keys;
    bool insert(const std::string& k) { return keys.insert(k).second; }
  };

  [[nodiscard]] Key empty(std::size_t width) const { return Key(width * 3, '\0'); }
  [[nodiscard]] std::uint32_t get(const Key& k, std::size_t i) const {
    const auto* p = reinterpret_cast<const unsigned char*>(k.data()) + i * 3;
    return p[0] | (std::uint32_t{p[1]} << 8) | (std::uint32_t{p[2]} << 16);
  }
  void set(Key& k, std::size_t i, std::uint32_t code) const {
    k[i * 3] = static_cast<char>(code & 0xff);
    k[i * 3 + 1] = static_cast<char>((code >> 8) & 0xff);
    k[i * 3 + 2] = static_cast<char>((code >> 16) & 0xff);
  }
};

template <typename Codec>
PlanOutcome search(const BeliefState& initial, const GoalSpec& goal, const PlannerConfig& cfg, const Codec& codec) {
  using Key = typename Codec::Key;
  const std::size_t width = initial.size();
  const int g = initial.scale().granularity();

  std::vector<Action> actions;
  for (std::size_t s = 1; s <= width; ++s) {
    for (std::size_t d = 1; d <= width; ++d) {
      if (s != d) actions.emplace_back(ColumnId(static_cast<int>(s)), ColumnId(static_cast<int>(d)));
    }
  }

  // Per-code transition tables, when the code space is small enough.
  const auto codes = static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(g);
  const bool tabulate = codes <= (1u << 18);
  std::vector<std::uint32_t> after_removal, after_addition;
  std::vector<int> believe_table;
  if (tabulate) {
    for (std::uint32_t c = 0; c < codes; ++c) {
      const ColumnBelief cb = ColumnBelief::from_code(c, g);
      after_removal.push_back(apply_removal(cb).code());
      after_addition.push_back(apply_addition(cb).code());
      believe_table.push_back(cb.believe().index);
    }
  }
  const auto removed = [&](std::uint32_t c) {
    return tabulate ? after_removal[c] : apply_removal(ColumnBelief::from_code(c, g)).code();
  };
  const auto added = [&](std::uint32_t c) {
    return tabulate ? after_addition[c] : apply_addition(ColumnBelief::from_code(c, g)).code();
  };
  const auto believe_of = [&](std::uint32_t c) {
    return tabulate ? believe_table[c] : static_cast<int>(c % static_cast<std::uint32_t>(g));
  };

  const auto distance_of = [&](const Key& k) {
    int d = 0;
    for (std::size_t i = 0; i < width; ++i) d += std::abs(believe_of(codec.get(k, i)) - goal.targets[i].index);
    return d;
  };

  Key root = codec.empty(width);
  for (std::size_t i = 0; i < width; ++i) codec.set(root, i, initial.columns()[i].code());

  std::vector<Key> nodes{root};
  std::vector<std::uint32_t> parent{kNoParent};
  std::vector<std::uint32_t> via{0};  // index into `actions`
  std::vector<int> depth{0};
  typename Codec::Set seen;
  seen.insert(root);

  const auto finish = [&](std::uint32_t node, OutcomeKind kind, std::uint64_t expanded) {
    std::vector<ColumnBelief> columns;
    for (std::size_t i = 0; i < width; ++i) columns.push_back(ColumnBelief::from_code(codec.get(nodes[node], i), g));
    PlanOutcome out{Plan{}, kind, BeliefState(initial.scale_ptr(), std::move(columns)), distance_of(nodes[node]),
                    expanded};
    for (std::uint32_t n = node; parent[n] != kNoParent; n = parent[n]) {
      out.plan.actions.push_back(actions[via[n]]);
    }
    std::reverse(out.plan.actions.begin(), out.plan.actions.end());
    return out;
  };

  std::uint32_t best = 0;
  int best_distance = distance_of(root);
  if (best_distance == 0) return finish(0, OutcomeKind::exact, 0);

  std::uint64_t expanded = 0;
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    if (depth[i] >= cfg.max_depth) break;  // nodes are stored in depth order
    if (expanded >= cfg.max_expansions) break;
    ++expanded;
    const Key current = nodes[i];
    for (std::uint32_t a = 0; a < actions.size(); ++a) {
      const std::size_t src = actions[a].src().offset();
      const std::size_t dst = actions[a].dst().offset();
      const std::uint32_t src_code = codec.get(current, src);
      if (believe_of(src_code) == 0) continue;  // poss
      Key child = current;
      codec.set(child, src, removed(src_code));
      codec.set(child, dst, added(codec.get(current, dst)));
      if (!seen.insert(child)) continue;
      const auto id = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back(child);
      parent.push_back(i);
      via.push_back(a);
      depth.push_back(depth[i] + 1);
      const int d = distance_of(child);
      if (d == 0) return finish(id, OutcomeKind::exact, expanded);
      if (d < best_distance) {
        best = id;
        best_distance = d;
      }
    }
  }
  return finish(best, OutcomeKind::closest, expanded);
}

}  // namespace

bool goal_satisfied(const BeliefState& state, const GoalSpec& goal) {
  check_goal(state, goal);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state.columns()[i].believe() != goal.targets[i]) return false;
  }
  return true;
}

int distance(const BeliefState& state, const GoalSpec& goal) {
  check_goal(state, goal);
  int d = 0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    d += std::abs(state.columns()[i].believe().index - goal.targets[i].index);
  }
  return d;
}

PlanOutcome plan(const BeliefState& initial, const GoalSpec& goal, const PlannerConfig& cfg) {
  check_goal(initial, goal);
  if (cfg.max_expansions == 0 || cfg.max_depth < 0) {
    throw Error(ErrorCode::limits, "planner limits leave no room to expand the initial state");
  }
  const auto g = static_cast<std::uint32_t>(initial.scale().granularity());
  const auto bits = static_cast<unsigned>(std::bit_width(g * g * g - 1));
  if (bits * initial.size() <= 64) return search(initial, goal, cfg, PackedKey(bits));
  return search(initial, goal, cfg, StringKey{});
}

std::vector<BeliefState> simulate_beliefs(const BeliefState& initial, const Plan& plan) {
  std::vector<BeliefState> trace{initial};
  trace.reserve(plan.size() + 1);
  for (std::size_t k = 0; k < plan.actions.size(); ++k) {
    const Action& a = plan.actions[k];
    if (!poss(trace.back(), a)) {
      throw NotPossibleError(k, "step " + std::to_string(k) + " (" + to_string(a) +
                                    "): source column is believed to be " +
                                    initial.scale().name(trace.back().believe(a.src())));
    }
    trace.push_back(apply_move(trace.back(), a));
  }
  return trace;
}

}  // namespace qbelief
