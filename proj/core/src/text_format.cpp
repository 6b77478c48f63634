#include "blockrank/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "blockrank/error.hpp"

namespace blockrank {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_index(std::string_view s, std::size_t& out) {
  if (s.empty() || s.front() == '+' || s.front() == '-') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

WeightedDigraph parse_digraph(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (!n) {
      std::size_t count = 0;
      if (tokens.size() != 2 || tokens[0] != "digraph" || !parse_index(tokens[1], count)) {
        fail(line_no, "expected 'digraph <n>' header");
      }
      n = count;
      continue;
    }
    if (tokens[0] != "a") fail(line_no, "unknown record '" + std::string(tokens[0]) + "'");
    if (tokens.size() != 4) fail(line_no, "arc line needs 'a <u> <v> <weight>'");
    std::size_t u = 0;
    std::size_t v = 0;
    if (!parse_index(tokens[1], u) || !parse_index(tokens[2], v)) fail(line_no, "bad vertex id");
    if (u >= *n || v >= *n) fail(line_no, "vertex out of range");
    auto w = Rational::parse(tokens[3]);
    if (!w) fail(line_no, "bad weight '" + std::string(tokens[3]) + "'");
    if (w->is_zero()) fail(line_no, "zero weight");
    arcs.push_back({u, v, *w});
  }
  if (!n) throw Error(ErrorCode::ParseError, "missing 'digraph <n>' header");
  try {
    return WeightedDigraph::build(*n, std::move(arcs));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

WeightedDigraph read_digraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

std::string format_digraph(const WeightedDigraph& g) {
  std::string out = "digraph " + std::to_string(g.order()) + "\n";
  for (const Arc& a : g.arcs()) {
    out += "a " + std::to_string(a.from) + " " + std::to_string(a.to) + " " + a.weight.to_string() + "\n";
  }
  return out;
}

}  // namespace blockrank
