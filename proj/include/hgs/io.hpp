#pragma once

#include <iosfwd>
#include <string>

#include "hgs/certify.hpp"
#include "hgs/hypergraph.hpp"

namespace hgs {

// Hypergraph files are JSON objects with exactly the fields
//   k            integer uniformity
//   n            integer vertex count
//   edges        list of integer lists
//   vertex_roles optional string -> integer map
//   edge_roles   optional string -> integer map
// Unknown fields are rejected. Output is byte-stable for a given graph.

LabeledHypergraph read_hypergraph(std::istream& in);
LabeledHypergraph read_hypergraph_file(const std::string& path);

void write_hypergraph(std::ostream& out, const LabeledHypergraph& labeled);
void write_hypergraph_file(const std::string& path, const LabeledHypergraph& labeled);
std::string hypergraph_to_json(const LabeledHypergraph& labeled);

/// Reads a weighted incidence matrix as whitespace-separated
/// "vertex edge weight" triples, one per line ('#' starts a comment).
/// The triples must cover every incident pair of `h` exactly once with a
/// positive weight.
WeightedIncidence read_weight_triples(std::istream& in, const Hypergraph& h);
WeightedIncidence read_weight_triples_file(const std::string& path, const Hypergraph& h);

}  // namespace hgs
