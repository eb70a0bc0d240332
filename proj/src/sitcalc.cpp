#include "qbelief/sitcalc.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qbelief/error.hpp"

namespace qbelief {

Action::Action(ColumnId src, ColumnId dst) : src_(src), dst_(dst) {
  if (src.index() < 1 || dst.index() < 1) {
    throw Error(ErrorCode::invalid_argument, "column ids are 1-based");
  }
  if (src == dst) {
    throw Error(ErrorCode::invalid_argument,
                "move(" + std::to_string(src.index()) + "," +
                    std::to_string(dst.index()) + "): source equals destination");
  }
}

std::string to_string(const Action& a) {
  return "move " + std::to_string(a.src().index()) + " " + std::to_string(a.dst().index());
}

Situation do_action(const Action& a, const Situation& s) {
  std::vector<Action> history = s.history();
  history.push_back(a);
  return Situation(std::move(history));
}

std::optional<std::pair<Action, Situation>> predecessor(const Situation& s) {
  if (s.is_initial()) return std::nullopt;
  const auto& h = s.history();
  return std::make_pair(h.back(), Situation(std::vector<Action>(h.begin(), h.end() - 1)));
}

bool precedes(const Situation& s, const Situation& t) {
  const auto& a = s.history();
  const auto& b = t.history();
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

bool precedes_eq(const Situation& s, const Situation& t) {
  return s == t || precedes(s, t);
}

std::string format_plan_text(std::span<const Action> actions) {
  std::string out;
  for (const auto& a : actions) {
    out += to_string(a);
    out += '\n';
  }
  return out;
}

namespace {

bool parse_int(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::vector<Action> parse_plan_text(std::string_view text) {
  std::vector<Action> actions;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string verb, src, dst, extra;
    fields >> verb >> src >> dst;
    int s = 0;
    int d = 0;
    if (verb != "move" || !parse_int(src, s) || !parse_int(dst, d) || (fields >> extra)) {
      throw ParseError(ErrorCode::parse, line_no, "expected 'move <src> <dst>'");
    }
    try {
      actions.emplace_back(ColumnId(s), ColumnId(d));
    } catch (const Error& e) {
      throw ParseError(ErrorCode::parse, line_no, e.what());
    }
  }
  return actions;
}

}  // namespace qbelief
