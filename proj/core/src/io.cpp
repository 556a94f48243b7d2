#include "cospec/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cospec {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON needs fields n and edges");
  const int n = j.at("n").get<int>();
  const int base = j.value("index_base", 0);
  if (base != 0 && base != 1) throw ParseError("index_base must be 0 or 1");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u,v]");
    edges.emplace_back(e[0].get<int>() - base, e[1].get<int>() - base);
  }
  return Graph::from_edge_list(n, edges, j.value("name", std::string{}));
}

}  // namespace

Graph parse_graph_json(const std::string& text) {
  json j = json::parse(text, nullptr, true, /*ignore_comments=*/false);
  return graph_from_json(j);
}

Graph read_graph_json_file(const std::string& path) {
  return parse_graph_json(read_file(path));
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw ParseError("text graph: missing vertex count");
  std::vector<int> endpoints;
  int x;
  while (in >> x) endpoints.push_back(x);
  if (!in.eof()) throw ParseError("text graph: non-numeric token");
  if (endpoints.size() % 2 != 0) throw ParseError("text graph: dangling endpoint");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < endpoints.size(); i += 2)
    edges.emplace_back(endpoints[i], endpoints[i + 1]);
  return Graph::from_edge_list(n, edges);
}

Graph read_graph_text_file(const std::string& path) {
  return parse_graph_text(read_file(path));
}

std::string graph_to_json(const Graph& g, int index_base) {
  if (index_base != 0 && index_base != 1) throw BadParams("index_base must be 0 or 1");
  nlohmann::ordered_json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["n"] = g.order();
  j["index_base"] = index_base;
  auto edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + index_base, v + index_base});
  j["edges"] = std::move(edges);
  return j.dump();
}

VertexPartition parse_partition_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("blocks")) throw ParseError("partition JSON needs field blocks");
  const int base = j.value("index_base", 0);
  VertexPartition p;
  for (const auto& blk : j.at("blocks")) {
    std::vector<int> b;
    for (const auto& v : blk) b.push_back(v.get<int>() - base);
    p.blocks.push_back(std::move(b));
  }
  return p;
}

VertexPartition read_partition_json_file(const std::string& path) {
  return parse_partition_json(read_file(path));
}

std::string format_sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double round_sig(double x, int digits) {
  return std::strtod(format_sig(x, digits).c_str(), nullptr);
}

}  // namespace cospec
