#include "cubefold/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cubefold/hyperplane.hpp"

namespace cubefold {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& what) {
  fail(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source) {
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "graph" || lines[0].tokens.size() != 2)
    parse_fail(source, lines.empty() ? 1 : lines[0].number, "expected `graph <name>`");
  std::string name = lines[0].tokens[1];
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> edge_line;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (t[0] == "v" && t.size() == 2) {
      vertices.push_back(t[1]);
    } else if (t[0] == "e" && t.size() == 3) {
      edges.emplace_back(t[1], t[2]);
      edge_line.push_back(lines[i].number);
    } else {
      parse_fail(source, lines[i].number, "unrecognized line `" + t[0] + "`");
    }
  }
  std::vector<std::string> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) fail(ErrorKind::DuplicateVertex, "vertex " + sorted[i] + " declared twice");
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (const auto* id : {&edges[i].first, &edges[i].second})
      if (!std::binary_search(sorted.begin(), sorted.end(), *id))
        parse_fail(source, edge_line[i], "unknown endpoint " + *id);
  return build_graph(std::move(vertices), edges, name);
}

Graph read_graph(const std::string& path) {
  auto in = open(path);
  return parse_graph(in, path);
}

std::string format_graph(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << '\n';
  for (const auto& id : g.ids()) out << "v " << id << '\n';
  for (const Edge& e : g.edges()) out << "e " << g.id(e.u) << ' ' << g.id(e.v) << '\n';
  return out.str();
}

std::string format_graph(const Graph& g) { return format_graph(g, g.name()); }

void write_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << format_graph(g);
}

MapFile parse_map(std::istream& in, const std::string& source) {
  auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "map" || lines[0].tokens.size() != 2)
    parse_fail(source, lines.empty() ? 1 : lines[0].number, "expected `map <name>`");
  MapFile m;
  m.name = lines[0].tokens[1];
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (t[0] != "m" || t.size() != 3) parse_fail(source, lines[i].number, "expected `m <id> <id>`");
    m.pairs.emplace_back(t[1], t[2]);
  }
  return m;
}

MapFile read_map(const std::string& path) {
  auto in = open(path);
  return parse_map(in, path);
}

std::string format_map(const PPMap& psi, const std::string& name) {
  std::ostringstream out;
  out << "map " << name << '\n';
  for (std::size_t v = 0; v < psi.domain().order(); ++v)
    out << "m " << psi.domain().id(Vertex(v)) << ' ' << psi.codomain().id(psi(Vertex(v))) << '\n';
  return out.str();
}

GroupFile parse_group(std::istream& in, const std::string& source) {
  GroupFile out;
  for (const auto& line : tokenize(in)) {
    if (line.tokens[0] != "gen") parse_fail(source, line.number, "expected `gen a->b ...`");
    std::vector<std::pair<std::string, std::string>> moves;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const auto& t = line.tokens[i];
      auto arrow = t.find("->");
      if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= t.size())
        parse_fail(source, line.number, "bad move `" + t + "`");
      moves.emplace_back(t.substr(0, arrow), t.substr(arrow + 2));
    }
    out.push_back(std::move(moves));
  }
  return out;
}

GroupFile read_group(const std::string& path) {
  auto in = open(path);
  return parse_group(in, path);
}

std::string format_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.id(s[i]);
  return out + "}";
}

std::string format_hyperplanes(const Graph& g) {
  const auto& hs = hyperplanes(g);
  std::ostringstream out;
  const auto edges = g.edges();
  for (const auto& h : hs) {
    out << 'H' << h.id << ": {";
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      const Edge& e = edges[h.edges[i]];
      out << (i ? "," : "") << g.id(e.u) << '-' << g.id(e.v);
    }
    out << "} | ";
    if (h.has_halfspaces())
      out << "plus=" << format_set(g, *h.plus) << " minus=" << format_set(g, *h.minus);
    else
      out << "no halfspaces";
    out << '\n';
  }
  return out.str();
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};

}  // namespace

std::string export_dot(const Graph& g, std::optional<HyperplaneId> highlight) {
  const auto& hs = hyperplanes(g);
  if (highlight) hs.check(*highlight);
  std::ostringstream out;
  out << "graph " << quoted(g.name()) << " {\n";
  for (const auto& id : g.ids()) out << "  " << quoted(id) << ";\n";
  for (const Edge& e : g.edges()) {
    auto j = hs.class_of(*g.edge_between(e.u, e.v));
    out << "  " << quoted(g.id(e.u)) << " -- " << quoted(g.id(e.v)) << " [label="
        << quoted(hyperplane_label(j)) << ", color=" << quoted(kPalette[j % std::size(kPalette)]);
    if (highlight && *highlight == j) out << ", penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_trace(const FactorizationTrace& t) {
  std::ostringstream out;
  out << "trace " << mode_name(t.mode) << '\n';
  for (std::size_t k = 0; k < t.moves.size(); ++k) {
    const auto& m = t.moves[k];
    out << "move " << k + 1 << ' ' << move_name(m.kind) << ' ' << format_pairs(m.pairs) << '\n';
    out << format_graph(m.after, "step" + std::to_string(k + 1));
  }
  out << format_map(t.eta, "eta");
  out << format_map(t.iota, "iota");
  return out.str();
}

PairCollection parse_pairs(const Graph& g, const std::string& text) {
  const auto& hs = hyperplanes(g);
  PairCollection out;
  std::istringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorKind::ParseError, "pair `" + item + "` lacks ':'");
    out.emplace_back(parse_hyperplane(hs, item.substr(0, colon)),
                     parse_hyperplane(hs, item.substr(colon + 1)));
  }
  return out;
}

}  // namespace cubefold
