#include "cospec/strata.hpp"

#include <cmath>

namespace cospec {

BfsStrata bfs_stratification(const Graph& g, int origin) {
  auto dist = g.bfs_distances(origin);
  int maxd = 0, covered = 0;
  for (const auto& d : dist)
    if (d) {
      maxd = std::max(maxd, *d);
      ++covered;
    }
  BfsStrata out;
  out.partition.blocks.assign(maxd + 1, {});
  for (int v = 0; v < g.order(); ++v)
    if (dist[v]) out.partition.blocks[*dist[v]].push_back(v);
  out.covers_all = covered == g.order();
  return out;
}

QuotientResult quotient_of(const Matrix& a, const VertexPartition& p, double tol) {
  const int n = static_cast<int>(a.rows());
  p.validate(n);
  const int k = p.block_count();

  Matrix ind = Matrix::Zero(n, k);  // normalized indicator columns
  for (int j = 0; j < k; ++j) {
    const double c = 1.0 / std::sqrt(static_cast<double>(p.blocks[j].size()));
    for (int v : p.blocks[j]) ind(v, j) = c;
  }

  QuotientResult out;
  out.matrix = ind.transpose() * a * ind;
  out.matrix = 0.5 * (out.matrix + out.matrix.transpose().eval());
  out.residual = (a * ind - ind * out.matrix).cwiseAbs().maxCoeff();
  out.closed = out.residual <= tol;
  return out;
}

QuotientResult quotient(const Graph& g, const VertexPartition& p, double tol) {
  return quotient_of(g.adjacency_matrix(), p, tol);
}

double distance_basis_identity_check(const Graph& g, int origin, int i) {
  auto strata = bfs_stratification(g, origin);
  if (i < 0 || i >= strata.partition.block_count() || strata.partition.blocks[i].empty())
    throw EmptyStratum("stratum " + std::to_string(i) + " is empty");
  const auto& block = strata.partition.blocks[i];

  Vector lhs = g.distance_adjacency(i).col(origin);
  Vector phi = Vector::Zero(g.order());
  const double c = 1.0 / std::sqrt(static_cast<double>(block.size()));
  for (int v : block) phi(v) = c;
  return (lhs - std::sqrt(static_cast<double>(block.size())) * phi).cwiseAbs().maxCoeff();
}

}  // namespace cospec
