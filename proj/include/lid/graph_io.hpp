#pragma once

#include <iosfwd>
#include <string>

#include "lid/coloring.hpp"
#include "lid/graph.hpp"
#include "lid/treedepth.hpp"

namespace lid {

// Edge list:  "p <n> <m>" then m lines "e <u> <v>", 0-based. Lines starting with
// 'c' are comments. Duplicate edges, loops and a wrong edge count are rejected.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Coloring / class file: one "<vertex> <color>" line per vertex, any order.
Coloring read_coloring(std::istream& in, std::size_t n);
void write_coloring(std::ostream& out, const Coloring& c);

// Forest file: one "<vertex> <parent|-1>" line per vertex.
EliminationForest read_forest(std::istream& in, std::size_t n);
void write_forest(std::ostream& out, const EliminationForest& t);

// File wrappers. An unreadable path throws parse_error at line 0.
Graph load_graph(const std::string& path);
Coloring load_coloring(const std::string& path, std::size_t n);
EliminationForest load_forest(const std::string& path, std::size_t n);

}  // namespace lid
