#include "qbelief/beliefs.hpp"

#include <numeric>
#include <set>
#include <utility>

namespace qbelief {

namespace {

constexpr int kMaxGranularity = 255;

std::string band_text(const Band& b) {
  return b.name + "=" + std::to_string(b.lo) + ".." + std::to_string(b.hi);
}

}  // namespace

std::optional<std::pair<ErrorCode, std::string>> check_bands(std::span<const Band> bands) {
  if (bands.size() < 2) {
    return std::make_pair(ErrorCode::parse, std::string("at least two qualities are required"));
  }
  if (bands.size() > static_cast<std::size_t>(kMaxGranularity)) {
    return std::make_pair(ErrorCode::parse, std::string("too many qualities"));
  }
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const Band& b = bands[i];
    if (b.name.empty()) {
      return std::make_pair(ErrorCode::parse, std::string("empty quality name"));
    }
    if (!names.insert(b.name).second) {
      return std::make_pair(ErrorCode::parse, "duplicate quality name '" + b.name + "'");
    }
    if (b.lo < 0 || b.hi < b.lo) {
      return std::make_pair(ErrorCode::bands_order, "band " + band_text(b) + " is not an ascending range");
    }
    if (i == 0) {
      if (b.lo != 0) {
        return std::make_pair(ErrorCode::bands_gap, "first band " + band_text(b) + " must start at 0");
      }
      continue;
    }
    const Band& prev = bands[i - 1];
    if (b.lo < prev.lo) {
      return std::make_pair(ErrorCode::bands_order,
                            "band " + band_text(b) + " precedes " + band_text(prev));
    }
    if (b.lo <= prev.hi) {
      return std::make_pair(ErrorCode::bands_overlap,
                            "band " + band_text(b) + " overlaps " + band_text(prev));
    }
    if (b.lo > prev.hi + 1) {
      return std::make_pair(ErrorCode::bands_gap,
                            "gap between " + band_text(prev) + " and " + band_text(b));
    }
  }
  return std::nullopt;
}

QualityScale::QualityScale(std::vector<Band> bands) : bands_(std::move(bands)) {
  if (auto err = check_bands(bands_)) throw Error(err->first, err->second);
}

QualityScale QualityScale::standard() {
  return QualityScale({{"zero", 0, 0}, {"small", 1, 4}, {"medium", 5, 8}, {"large", 9, 12}});
}

QualityScale QualityScale::uniform(int granularity, int width) {
  if (granularity < 2 || granularity > kMaxGranularity || width < 1) {
    throw Error(ErrorCode::invalid_argument, "uniform scale needs granularity in [2,255] and width >= 1");
  }
  if (granularity == 4 && width == 4) return standard();
  std::vector<Band> bands{{"q0", 0, 0}};
  for (int i = 1; i < granularity; ++i) {
    bands.push_back({"q" + std::to_string(i), 1 + (i - 1) * width, i * width});
  }
  return QualityScale(std::move(bands));
}

std::optional<Quality> QualityScale::find(std::string_view name) const {
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    if (bands_[i].name == name) return Quality{static_cast<int>(i)};
  }
  return std::nullopt;
}

Quality QualityScale::classify(int count) const {
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    if (count <= bands_[i].hi) return Quality{static_cast<int>(i)};
  }
  return top();
}

std::string to_string(Degree d) {
  return std::to_string(d.numerator()) + "/" + std::to_string(d.granularity());
}

ColumnBelief ColumnBelief::pure(Quality q, int granularity) {
  if (granularity < 2 || granularity > kMaxGranularity || q.index < 0 || q.index >= granularity) {
    throw Error(ErrorCode::invalid_argument, "quality outside scale");
  }
  return ColumnBelief(granularity, q.index, 0, q.index);
}

ColumnBelief ColumnBelief::from_numerators(std::span<const int> numerators, Quality believe) {
  const int g = static_cast<int>(numerators.size());
  if (g < 2 || g > kMaxGranularity) throw Error(ErrorCode::invalid_argument, "bad granularity");
  int lo = -1;
  int hi = -1;
  for (int i = 0; i < g; ++i) {
    const int k = numerators[static_cast<std::size_t>(i)];
    if (k < 0) throw Error(ErrorCode::invalid_argument, "negative degree");
    if (k > 0) {
      if (lo < 0) lo = i;
      hi = i;
    }
  }
  if (std::accumulate(numerators.begin(), numerators.end(), 0) != g) {
    throw Error(ErrorCode::invalid_argument, "degrees must sum to 1");
  }
  if (hi - lo > 1) throw Error(ErrorCode::invalid_argument, "support is not adjacent");
  if (believe.index < 0 || believe.index >= g ||
      2 * numerators[static_cast<std::size_t>(believe.index)] < g) {
    throw Error(ErrorCode::invalid_argument, "main belief must carry degree >= 1/2");
  }
  const int upper = hi == lo ? 0 : numerators[static_cast<std::size_t>(hi)];
  return ColumnBelief(g, lo, upper, believe.index);
}

Degree ColumnBelief::degree(Quality q) const {
  const int g = granularity_;
  if (q.index == base_) return {g - upper_, g};
  if (q.index == base_ + 1) return {upper_, g};
  return {0, g};
}

std::vector<int> ColumnBelief::numerators() const {
  std::vector<int> out(granularity_, 0);
  out[base_] = granularity_ - upper_;
  if (upper_ > 0) out[base_ + 1u] = upper_;
  return out;
}

std::uint32_t ColumnBelief::code() const {
  const std::uint32_t g = granularity_;
  return (static_cast<std::uint32_t>(base_) * g + upper_) * g + believe_;
}

ColumnBelief ColumnBelief::from_code(std::uint32_t code, int granularity) {
  const auto g = static_cast<std::uint32_t>(granularity);
  return ColumnBelief(granularity, static_cast<int>(code / (g * g)), static_cast<int>(code / g % g),
                      static_cast<int>(code % g));
}

ColumnBelief observe(int count, const QualityScale& scale) {
  return ColumnBelief::pure(scale.classify(count), scale.granularity());
}

ColumnBelief apply_removal(const ColumnBelief& cb) {
  const int g = cb.granularity_;
  int base = cb.base_;
  int upper = cb.upper_;
  int gaining = 0;
  int gained = 0;  // numerator of the gaining quality afterwards
  if (upper == 0) {
    if (base == 0) return cb;  // saturated at the bottom
    gaining = base - 1;
    base -= 1;
    upper = g - 1;
    gained = 1;
  } else {
    gaining = base;
    upper -= 1;
    gained = g - upper;
  }
  const int believe = 2 * gained > g ? gaining : cb.believe_;
  return ColumnBelief(g, base, upper, believe);
}

ColumnBelief apply_addition(const ColumnBelief& cb) {
  const int g = cb.granularity_;
  int base = cb.base_;
  int upper = cb.upper_;
  int gaining = 0;
  int gained = 0;
  if (upper == 0) {
    if (base == g - 1) return cb;  // saturated at the top
    gaining = base + 1;
    upper = 1;
    gained = 1;
  } else {
    gaining = base + 1;
    upper += 1;
    gained = upper;
    if (upper == g) {
      base += 1;
      upper = 0;
    }
  }
  const int believe = 2 * gained > g ? gaining : cb.believe_;
  return ColumnBelief(g, base, upper, believe);
}

BeliefState::BeliefState(std::shared_ptr<const QualityScale> scale, std::vector<ColumnBelief> columns)
    : scale_(std::move(scale)), columns_(std::move(columns)) {
  if (!scale_) throw Error(ErrorCode::invalid_argument, "belief state needs a scale");
  for (const auto& cb : columns_) {
    if (cb.granularity() != scale_->granularity()) {
      throw Error(ErrorCode::invalid_argument, "column belief granularity differs from scale");
    }
  }
}

BeliefState BeliefState::observe(std::span<const int> counts, std::shared_ptr<const QualityScale> scale) {
  if (!scale) throw Error(ErrorCode::invalid_argument, "belief state needs a scale");
  std::vector<ColumnBelief> columns;
  columns.reserve(counts.size());
  for (int c : counts) columns.push_back(qbelief::observe(c, *scale));
  return BeliefState(std::move(scale), std::move(columns));
}

std::vector<Quality> BeliefState::believes() const {
  std::vector<Quality> out;
  out.reserve(columns_.size());
  for (const auto& cb : columns_) out.push_back(cb.believe());
  return out;
}

bool poss(const BeliefState& state, const Action& a) {
  if (!state.contains(a.src()) || !state.contains(a.dst())) {
    throw Error(ErrorCode::invalid_argument, to_string(a) + ": column outside the domain");
  }
  return state.believe(a.src()) != Quality{0};
}

BeliefState apply_move(const BeliefState& state, const Action& a) {
  if (!poss(state, a)) {
    throw Error(ErrorCode::not_possible,
                to_string(a) + ": source column is believed to be " +
                    state.scale().name(state.believe(a.src())));
  }
  std::vector<ColumnBelief> columns = state.columns();
  columns[a.src().offset()] = apply_removal(columns[a.src().offset()]);
  columns[a.dst().offset()] = apply_addition(columns[a.dst().offset()]);
  return BeliefState(state.scale_ptr(), std::move(columns));
}

}  // namespace qbelief
