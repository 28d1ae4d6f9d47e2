#include "artemis/io.hpp"

#include "json.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "artemis/error.hpp"

namespace artemis::io {
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

long long to_int(std::string_view tok, int line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

DimacsGraph parse_dimacs(std::string_view text) {
  DimacsGraph out;
  long long n = -1;
  std::set<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'p' line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      n = to_int(tok[2], line_no);
      out.declared_edges = to_int(tok[3], line_no);
      if (n < 0 || out.declared_edges < 0) throw ParseError(line_no, "negative count on 'p' line");
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError(line_no, "'e' line before 'p' line");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      long long u = to_int(tok[1], line_no);
      long long v = to_int(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop");
      Edge e{static_cast<int>(std::min(u, v) - 1), static_cast<int>(std::max(u, v) - 1)};
      if (!edges.insert(e).second) ++out.duplicate_edges;
    } else {
      throw ParseError(line_no, "unknown record type '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing 'p edge <n> <m>' line");
  std::vector<Edge> list(edges.begin(), edges.end());
  out.graph = Graph(static_cast<int>(n), list);
  out.edge_count_mismatch = out.declared_edges != static_cast<long long>(list.size());
  return out;
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::string write_coloring(const Coloring& c) {
  std::ostringstream os;
  os << "s " << c.num_colors << '\n';
  for (std::size_t v = 0; v < c.color.size(); ++v) os << "v " << v + 1 << ' ' << c.color[v] + 1 << '\n';
  return os.str();
}

std::string trace_json(const ArtemisColoring& result) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : result.trace.steps)
    steps.push_back({{"a", s.a}, {"b", s.b}, {"merged", s.merged}, {"depth", s.chain_depth}, {"vertex_map", s.vertex_map}});
  nlohmann::json doc = {
      {"original_n", result.trace.original_n},
      {"steps", std::move(steps)},
      {"residue", result.residue.cliques},
      {"num_colors", result.coloring.num_colors},
  };
  return doc.dump(2) + "\n";
}

}  // namespace artemis::io
