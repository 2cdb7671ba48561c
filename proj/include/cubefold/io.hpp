#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubefold/factorize.hpp"
#include "cubefold/graph.hpp"
#include "cubefold/morphism.hpp"

namespace cubefold {

// Line formats; `#` starts a comment, blank lines are skipped.
//   graph <name> / v <id> / e <id> <id>
//   map <name> / m <domain-id> <codomain-id>
//   gen <a>-><b> <c>-><d> ...

Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Graph read_graph(const std::string& path);
std::string format_graph(const Graph& g);
std::string format_graph(const Graph& g, const std::string& name);
void write_graph(const Graph& g, const std::string& path);

struct MapFile {
  std::string name;
  std::vector<std::pair<std::string, std::string>> pairs;
};

MapFile parse_map(std::istream& in, const std::string& source = "<input>");
MapFile read_map(const std::string& path);
std::string format_map(const PPMap& psi, const std::string& name);

using GroupFile = std::vector<std::vector<std::pair<std::string, std::string>>>;
GroupFile parse_group(std::istream& in, const std::string& source = "<input>");
GroupFile read_group(const std::string& path);

/// `H<k>: {u-v,...} | plus={...} minus={...}` per hyperplane.
std::string format_hyperplanes(const Graph& g);

std::string format_set(const Graph& g, const VertexSet& s);

/// Undirected DOT with one colour per hyperplane.
std::string export_dot(const Graph& g, std::optional<HyperplaneId> highlight = std::nullopt);

/// Move lines, each intermediate graph, then the terminal maps.
std::string format_trace(const FactorizationTrace& trace);

/// Reads `A:B,C:D` against the hyperplanes of g.
PairCollection parse_pairs(const Graph& g, const std::string& text);

}  // namespace cubefold
