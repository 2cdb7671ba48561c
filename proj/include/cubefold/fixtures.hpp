#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubefold/graph.hpp"
#include "cubefold/morphism.hpp"

namespace cubefold::fixtures {

Graph path(int edges);             // v0 .. vn
Graph cycle(int n);                // c0 .. c(n-1)
Graph hypercube(int dim);          // bit strings
Graph grid(int rows, int cols);    // r_c, with rows x cols vertices
Graph star(int leaves);            // c, l1 .. lk
Graph tripod();                    // star(3)
Graph product(const Graph& a, const Graph& b, const std::string& name);
Graph k23();
Graph corner();                    // Q3 minus one vertex
Graph ladder(int squares);         // path(squares) x edge
Graph staircase(int steps);        // staircase polyomino of squares
Graph two_squares();               // two 4-cycles sharing an edge

/// Random tree on n vertices named t0 .. t(n-1).
Graph random_tree(int n, std::mt19937& rng);

/// Random median graph: a random tree reshaped by random swells and folds,
/// capped at `max_vertices`.
Graph random_median(int tree_size, int moves, std::size_t max_vertices, std::mt19937& rng);

/// Median fixtures used across the property tests, at most 50 vertices.
std::vector<Graph> median_corpus();

}  // namespace cubefold::fixtures
