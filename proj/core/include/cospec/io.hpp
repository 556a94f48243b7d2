#pragma once

#include <string>

#include "cospec/graph.hpp"

namespace cospec {

/// Graph JSON document:
///   {"name": str?, "n": int, "index_base": 0|1 (default 0), "edges": [[u,v],...]}
/// Both readers reject self-loops and out-of-range indices.
Graph parse_graph_json(const std::string& text);
Graph read_graph_json_file(const std::string& path);

/// Plain-text alternative: first line "n", subsequent lines "u v" (0-based).
Graph parse_graph_text(const std::string& text);
Graph read_graph_text_file(const std::string& path);

/// Serialize with the requested index base; deterministic field order and
/// edge order (sorted).
std::string graph_to_json(const Graph& g, int index_base = 0);

/// Partition JSON: {"index_base": 0|1 (default 0), "blocks": [[v,...],...]}
VertexPartition parse_partition_json(const std::string& text);
VertexPartition read_partition_json_file(const std::string& path);

/// Floats rendered with 12 significant digits (%.12g).
std::string format_sig(double x, int digits = 12);
/// Nearest double to the 12-significant-digit rendering; applied to every
/// float placed in a CLI report so identical runs serialize identically.
double round_sig(double x, int digits = 12);

std::string read_file(const std::string& path);

}  // namespace cospec
