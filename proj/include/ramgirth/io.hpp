#pragma once

#include <ramgirth/colouring.hpp>
#include <ramgirth/graph.hpp>
#include <ramgirth/hypergraph.hpp>

#include <iosfwd>
#include <string>

namespace ramgirth {

// Text formats, newline-delimited ASCII:
//   graph       "n m", then m lines "u v" (0-indexed, u < v)
//   hypergraph  "h N m", then m lines of h ascending vertex indices
//   colouring   "N c", then N lines with one colour in 1..c each
// Malformed input raises FormatError naming the line.

Graph read_graph(std::istream & in);
void write_graph(std::ostream & out, const Graph & g);

UniformHypergraph read_hypergraph(std::istream & in);
void write_hypergraph(std::ostream & out, const UniformHypergraph & h);

Colouring read_colouring(std::istream & in);
void write_colouring(std::ostream & out, const Colouring & c);

Graph read_graph_file(const std::string & path);
void write_graph_file(const std::string & path, const Graph & g);
UniformHypergraph read_hypergraph_file(const std::string & path);
void write_hypergraph_file(const std::string & path, const UniformHypergraph & h);
Colouring read_colouring_file(const std::string & path);
void write_colouring_file(const std::string & path, const Colouring & c);

} // namespace ramgirth
