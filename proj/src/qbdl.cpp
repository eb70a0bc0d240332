#include "qbelief/qbdl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace qbelief {

namespace {

constexpr std::array<std::string_view, 5> kKeys = {"columns", "granularity", "bands", "initial", "goal"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<int> to_int(std::string_view token) {
  int value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return alpha(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-';
  });
}

struct Entry {
  int line = 0;
  std::string_view value;
};

[[noreturn]] void fail(ErrorCode code, int line, const std::string& msg) {
  throw ParseError(code, line, msg);
}

int parse_positive(const Entry& e, std::string_view key) {
  const auto tokens = split_ws(e.value);
  std::optional<int> v;
  if (tokens.size() == 1) v = to_int(tokens[0]);
  if (!v || *v < 1) fail(ErrorCode::parse, e.line, std::string(key) + " expects a positive integer");
  return *v;
}

std::vector<Band> parse_bands(const Entry& e) {
  std::vector<Band> bands;
  std::string_view rest = e.value;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto eq = item.find('=');
    const auto dots = item.find("..");
    if (eq == std::string_view::npos || dots == std::string_view::npos || dots < eq) {
      fail(ErrorCode::parse, e.line, "expected <name>=<lo>..<hi>, got '" + std::string(item) + "'");
    }
    const std::string_view name = trim(item.substr(0, eq));
    const auto lo = to_int(trim(item.substr(eq + 1, dots - eq - 1)));
    const auto hi = to_int(trim(item.substr(dots + 2)));
    if (!is_identifier(name) || !lo || !hi) {
      fail(ErrorCode::parse, e.line, "expected <name>=<lo>..<hi>, got '" + std::string(item) + "'");
    }
    bands.push_back(Band{std::string(name), *lo, *hi});
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (auto err = check_bands(bands)) fail(err->first, e.line, err->second);
  return bands;
}

std::vector<int> parse_counts(const Entry& e) {
  std::vector<int> counts;
  for (auto token : split_ws(e.value)) {
    const auto v = to_int(token);
    if (!v) fail(ErrorCode::parse, e.line, "'" + std::string(token) + "' is not an integer");
    if (*v < 0) fail(ErrorCode::count_negative, e.line, "block count " + std::to_string(*v) + " is negative");
    counts.push_back(*v);
  }
  return counts;
}

}  // namespace

DomainSpec parse_domain(std::string_view text) {
  std::map<std::string_view, Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(ErrorCode::parse, line_no, "expected '<key>: <value>'");
    const std::string_view key = trim(line.substr(0, colon));
    const auto known = std::find(kKeys.begin(), kKeys.end(), key);
    if (known == kKeys.end()) fail(ErrorCode::parse, line_no, "unknown key '" + std::string(key) + "'");
    if (entries.contains(*known)) {
      fail(ErrorCode::dup_key, line_no,
           "key '" + std::string(key) + "' already given on line " + std::to_string(entries[*known].line));
    }
    entries[*known] = Entry{line_no, trim(line.substr(colon + 1))};
  }
  const int last_line = std::max(1, line_no - (text.ends_with('\n') ? 1 : 0));

  // Per-line syntax first, in document order.
  std::vector<std::pair<std::string_view, Entry>> ordered(entries.begin(), entries.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.second.line < b.second.line; });

  DomainSpec spec;
  std::optional<int> granularity;
  std::vector<Band> bands;
  std::vector<std::string_view> goal_names;
  for (const auto& [key, e] : ordered) {
    if (key == "columns") {
      spec.columns = parse_positive(e, key);
    } else if (key == "granularity") {
      granularity = parse_positive(e, key);
    } else if (key == "bands") {
      bands = parse_bands(e);
    } else if (key == "initial") {
      spec.initial_counts = parse_counts(e);
    } else {
      for (auto token : split_ws(e.value)) {
        if (!is_identifier(token)) fail(ErrorCode::parse, e.line, "'" + std::string(token) + "' is not a quality name");
        goal_names.push_back(token);
      }
    }
  }

  for (auto key : kKeys) {
    if (!entries.contains(key)) fail(ErrorCode::missing_key, last_line, "missing key '" + std::string(key) + "'");
  }

  // Cross-key checks; report the earliest line.
  std::vector<std::tuple<int, ErrorCode, std::string>> problems;
  const QualityScale scale(bands);
  if (*granularity != scale.granularity()) {
    problems.emplace_back(entries["granularity"].line, ErrorCode::arity,
                          "granularity " + std::to_string(*granularity) + " but " +
                              std::to_string(scale.granularity()) + " bands declared");
  }
  if (static_cast<int>(spec.initial_counts.size()) != spec.columns) {
    problems.emplace_back(entries["initial"].line, ErrorCode::arity,
                          "initial lists " + std::to_string(spec.initial_counts.size()) + " counts for " +
                              std::to_string(spec.columns) + " columns");
  }
  if (static_cast<int>(goal_names.size()) != spec.columns) {
    problems.emplace_back(entries["goal"].line, ErrorCode::arity,
                          "goal lists " + std::to_string(goal_names.size()) + " qualities for " +
                              std::to_string(spec.columns) + " columns");
  }
  for (auto name : goal_names) {
    if (auto q = scale.find(name)) {
      spec.goals.push_back(*q);
    } else {
      problems.emplace_back(entries["goal"].line, ErrorCode::unknown_quality,
                            "unknown quality '" + std::string(name) + "'");
      break;
    }
  }
  if (!problems.empty()) {
    const auto& [line, code, msg] =
        *std::min_element(problems.begin(), problems.end(),
                          [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    fail(code, line, msg);
  }
  spec.scale = scale;
  return spec;
}

std::string serialize_domain(const DomainSpec& spec) {
  std::ostringstream out;
  out << "columns: " << spec.columns << '\n';
  out << "granularity: " << spec.scale.granularity() << '\n';
  out << "bands: ";
  const auto& bands = spec.scale.bands();
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (i > 0) out << ", ";
    out << bands[i].name << '=' << bands[i].lo << ".." << bands[i].hi;
  }
  out << "\ninitial:";
  for (int c : spec.initial_counts) out << ' ' << c;
  out << "\ngoal:";
  for (auto q : spec.goals) out << ' ' << spec.scale.name(q);
  out << '\n';
  return out.str();
}

void validate_domain(const DomainSpec& spec) {
  if (spec.columns < 1) throw Error(ErrorCode::parse, "a domain needs at least one column");
  if (static_cast<int>(spec.initial_counts.size()) != spec.columns ||
      static_cast<int>(spec.goals.size()) != spec.columns) {
    throw Error(ErrorCode::arity, "initial counts and goals must list every column");
  }
  for (int c : spec.initial_counts) {
    if (c < 0) throw Error(ErrorCode::count_negative, "negative block count");
  }
  for (auto q : spec.goals) {
    if (q.index < 0 || q.index >= spec.scale.granularity()) {
      throw Error(ErrorCode::unknown_quality, "goal quality outside the scale");
    }
  }
}

}  // namespace qbelief
