#pragma once

#include "cospec/graph.hpp"

namespace cospec {

struct BfsStrata {
  VertexPartition partition;  // block i = vertices at distance i from origin
  bool covers_all;            // false when the graph is disconnected from origin
};

BfsStrata bfs_stratification(const Graph& g, int origin);

struct QuotientResult {
  Matrix matrix;    // k x k, Q_ij = phi_i^T A phi_j
  double residual;  // max-abs of A P - P Q, P = normalized indicator columns
  bool closed;      // residual <= tol
};

/// Projection of the adjacency matrix onto normalized block indicators.
/// Blocks need not cover all vertices; the residual is then measured on
/// the span of the given blocks only.
QuotientResult quotient(const Graph& g, const VertexPartition& p, double tol = 1e-10);
QuotientResult quotient_of(const Matrix& a, const VertexPartition& p, double tol = 1e-10);

/// Max-abs of A_i e_origin - sqrt(kappa_i) phi_i; zero by construction for
/// every graph, kept as a runnable self-check.
double distance_basis_identity_check(const Graph& g, int origin, int i);

}  // namespace cospec
