#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cospec/errors.hpp"

namespace cospec {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Undirected graph stored as a sorted, deduplicated edge list.
///
/// Self-loops are rejected by from_edge_list and by both file readers;
/// only with_loops() creates them (the T4/T5 families place identity and
/// B-diagonal blocks on the adjacency diagonal, so their instances carry
/// loops). A loop contributes 1 to the adjacency diagonal and 2 to the
/// degree of its vertex.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs,
                              std::string name = {});
  static Graph with_loops(int n, const std::vector<std::pair<int, int>>& pairs,
                          const std::vector<int>& loop_vertices, std::string name = {});

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Proper edges (u < v), sorted; loops listed separately.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& loops() const { return loops_; }
  bool has_loops() const { return !loops_.empty(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  /// Loop counts 2, as usual for multigraph degree.
  int degree(int v) const;
  std::vector<int> degrees() const;
  std::vector<int> degree_multiset() const;  // sorted ascending

  const std::vector<std::vector<int>>& adjacency_lists() const { return adj_; }

  Matrix adjacency_matrix() const;
  /// L = diag(row sums of A) - A; loops cancel, every row sums to zero.
  Matrix laplacian() const;
  /// Entry (u,v) = 1 iff the BFS distance between u and v equals i.
  Matrix distance_adjacency(int i) const;

  /// BFS distances from origin; unreachable vertices get no value.
  std::vector<std::optional<int>> bfs_distances(int origin) const;
  int diameter_from(int origin) const;  // max finite distance

  /// Relabeling: vertex v becomes pi[v]. pi must be a permutation of 0..n-1.
  Graph permuted(const std::vector<int>& pi) const;

  bool same_edge_set(const Graph& other) const;

 private:
  int n_ = 0;
  std::string name_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> loops_;
  std::vector<std::vector<int>> adj_;  // neighbor lists, loops excluded

  void build_adjacency_lists();
};

/// Ordered list of disjoint, non-empty vertex blocks.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int covered_count() const;
  /// Throws EmptyBlock / IndexOutOfRange / Error on overlap.
  void validate(int n) const;
  bool covers_all(int n) const { return covered_count() == n; }
};

}  // namespace cospec
