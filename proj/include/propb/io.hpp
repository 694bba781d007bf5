#pragma once

#include <iosfwd>
#include <string>

#include "propb/core.hpp"

namespace propb {

// JSON schema:
//   {"n": int, "vertex_count": int,
//    "labels": [{"role": str, "index": int}, ...],
//    "edges": [[int, ...], ...]}
// with edges in lexicographic order. Output is byte-stable for equal inputs.
std::string to_json_string(const UniformHypergraph& h);
void write_json(const UniformHypergraph& h, std::ostream& out);
UniformHypergraph read_json(std::istream& in);
UniformHypergraph from_json_string(const std::string& text);

// Plain edge-list format: first line "n vertex_count edge_count", then one
// edge per line as space-separated ids. Labels default to Core 1..V on read.
void write_edge_list(const UniformHypergraph& h, std::ostream& out);
UniformHypergraph read_edge_list(std::istream& in);

// Sniffs the format: a leading '{' means JSON, anything else edge-list.
UniformHypergraph read_hypergraph(std::istream& in);
UniformHypergraph load_hypergraph_file(const std::string& path);

}  // namespace propb
