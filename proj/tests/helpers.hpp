#pragma once

#include <random>
#include <set>

#include "cospec/graph.hpp"

namespace cospec::testing {

inline Graph k2() { return Graph::from_edge_list(2, {{0, 1}}, "K2"); }
inline Graph path3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}, "P3"); }

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  // random spanning tree first, then extra edges
  std::set<std::pair<int, int>> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.emplace(u, v);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace(u, v);
  return Graph::from_edge_list(n, {edges.begin(), edges.end()});
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

inline Matrix random_symmetric(std::mt19937& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

inline Matrix random_positive_definite(std::mt19937& rng, int n, double ridge = 0.5) {
  Matrix m = random_symmetric(rng, n);
  return Matrix(m * m.transpose()) + ridge * static_cast<double>(n) * Matrix::Identity(n, n);
}

inline Matrix random_orthogonal(std::mt19937& rng, int n) {
  std::normal_distribution<double> gauss;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = gauss(rng);
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(n, n);
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace cospec::testing
