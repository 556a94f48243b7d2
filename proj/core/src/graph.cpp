#include "cospec/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cospec {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs,
                            std::string name) {
  if (n < 0) throw BadParams("vertex count must be non-negative");
  std::set<std::pair<int, int>> dedup;
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw IndexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for n=" + std::to_string(n));
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
    dedup.emplace(std::min(u, v), std::max(u, v));
  }
  Graph g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.edges_.assign(dedup.begin(), dedup.end());
  g.build_adjacency_lists();
  return g;
}

Graph Graph::with_loops(int n, const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<int>& loop_vertices, std::string name) {
  Graph g = from_edge_list(n, pairs, std::move(name));
  std::set<int> ls;
  for (int v : loop_vertices) {
    if (v < 0 || v >= n) throw IndexOutOfRange("loop vertex out of range");
    ls.insert(v);
  }
  g.loops_.assign(ls.begin(), ls.end());
  return g;
}

void Graph::build_adjacency_lists() {
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return std::binary_search(loops_.begin(), loops_.end(), u);
  auto e = std::minmax(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second));
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw IndexOutOfRange("vertex out of range");
  int d = static_cast<int>(adj_[v].size());
  if (std::binary_search(loops_.begin(), loops_.end(), v)) d += 2;
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<int> Graph::degree_multiset() const {
  auto out = degrees();
  std::sort(out.begin(), out.end());
  return out;
}

Matrix Graph::adjacency_matrix() const {
  Matrix a = Matrix::Zero(n_, n_);
  for (auto [u, v] : edges_) a(u, v) = a(v, u) = 1.0;
  for (int v : loops_) a(v, v) = 1.0;
  return a;
}

Matrix Graph::laplacian() const {
  Matrix a = adjacency_matrix();
  Matrix l = -a;
  for (int i = 0; i < n_; ++i) l(i, i) += a.row(i).sum();
  return l;
}

std::vector<std::optional<int>> Graph::bfs_distances(int origin) const {
  if (origin < 0 || origin >= n_) throw IndexOutOfRange("origin out of range");
  std::vector<std::optional<int>> dist(n_);
  std::queue<int> q;
  dist[origin] = 0;
  q.push(origin);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj_[u]) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int Graph::diameter_from(int origin) const {
  int d = 0;
  for (const auto& x : bfs_distances(origin))
    if (x) d = std::max(d, *x);
  return d;
}

Matrix Graph::distance_adjacency(int i) const {
  if (i < 0) throw BadParams("distance must be non-negative");
  Matrix out = Matrix::Zero(n_, n_);
  for (int v = 0; v < n_; ++v) {
    auto dist = bfs_distances(v);
    for (int w = 0; w < n_; ++w)
      if (dist[w] && *dist[w] == i) out(v, w) = 1.0;
  }
  return out;
}

Graph Graph::permuted(const std::vector<int>& pi) const {
  if (static_cast<int>(pi.size()) != n_) throw DimensionMismatch("permutation size != n");
  std::vector<bool> seen(n_, false);
  for (int x : pi) {
    if (x < 0 || x >= n_ || seen[x]) throw BadParams("not a permutation");
    seen[x] = true;
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.emplace_back(pi[u], pi[v]);
  std::vector<int> ls;
  for (int v : loops_) ls.push_back(pi[v]);
  return with_loops(n_, es, ls, name_);
}

bool Graph::same_edge_set(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_ && loops_ == other.loops_;
}

int VertexPartition::covered_count() const {
  int c = 0;
  for (const auto& b : blocks) c += static_cast<int>(b.size());
  return c;
}

void VertexPartition::validate(int n) const {
  std::vector<bool> seen(n, false);
  for (const auto& b : blocks) {
    if (b.empty()) throw EmptyBlock("partition block is empty");
    for (int v : b) {
      if (v < 0 || v >= n) throw IndexOutOfRange("partition vertex out of range");
      if (seen[v]) throw Error("partition blocks overlap at vertex " + std::to_string(v));
      seen[v] = true;
    }
  }
}

}  // namespace cospec
