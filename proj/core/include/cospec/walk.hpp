#pragma once

#include <complex>
#include <optional>
#include <string>

#include "cospec/families.hpp"
#include "cospec/fermion.hpp"
#include "cospec/graph.hpp"
#include "cospec/strata.hpp"

namespace cospec {

using ComplexVector = Eigen::VectorXcd;

struct AmplitudeVector {
  ComplexVector entries;
  double time = 0.0;
};

/// exp(-i h t) init, via the full symmetric eigendecomposition of h.
AmplitudeVector ctqw(const Matrix& h, double t, const ComplexVector& init);

struct TimeGrid {
  double start = 0.0;
  double stop = 10.0;
  double step = 0.1;
  std::vector<double> times() const;
};

struct ProbabilityTable {
  std::vector<double> times;
  VertexPartition partition;
  Matrix probabilities;  // times x blocks, full-space per-block mass
  bool partition_closed = false;
  /// Max gap between full-space and quotient-space block masses across the
  /// grid; only computed when the partition is closed.
  double dual_path_gap = 0.0;
};

/// Walk started at e_origin; partition defaults to the BFS strata of origin.
ProbabilityTable stratum_probabilities(const Graph& g, int origin, const TimeGrid& grid,
                                       double closure_tol = 1e-10);
ProbabilityTable stratum_probabilities(const Graph& g, const VertexPartition& p, int origin,
                                       const TimeGrid& grid, double closure_tol = 1e-10);

/// The eight antisymmetric basis vectors of the a-particle walk on a
/// family instance: first-cloud Slater state, six normalized one-particle
/// transfers into the b-strata, last-cloud Slater state. Columns of the
/// returned dim x 8 matrix.
Matrix g45_fermionic_vectors(const FamilyInstance& inst,
                             std::int64_t cap = FermionSpace::kDefaultCap);

struct FermiQuotient {
  Matrix matrix;    // 8x8 projection B^T H B
  double residual;  // max-abs of H B - B Q (out-of-span leakage)
  Matrix basis;     // dim x 8
};

FermiQuotient fermionic_quotient(const FamilyInstance& inst,
                                 std::int64_t cap = FermionSpace::kDefaultCap);

/// The reference 8x8 stratification-basis matrix for a family. The T5
/// display has a (5,4)/(4,5) asymmetry; the symmetric version (entry 0)
/// consistent with its action list is returned.
Matrix reference_fermionic_quotient(FamilyTag tag, int a, int b);

enum class WalkOutcome { Distinguished, Inconclusive };

struct WalkWitness {
  std::string kind;  // "quotient-entry" | "trace" | "fermionic-entry" | ...
  int row = -1, col = -1;
  std::optional<double> time;
  double gap = 0.0;
};

struct WalkVerdict {
  WalkOutcome outcome = WalkOutcome::Inconclusive;
  WalkWitness witness;
};

/// Compare strata-basis quotients under explicitly supplied partitions.
WalkVerdict walk_verdict_quotient(const Graph& g1, const VertexPartition& p1, const Graph& g2,
                                  const VertexPartition& p2, double tol = 1e-8);
/// Compare per-block probability traces over a time grid.
WalkVerdict walk_verdict_traces(const Graph& g1, const VertexPartition& p1, int origin1,
                                const Graph& g2, const VertexPartition& p2, int origin2,
                                const TimeGrid& grid, double tol = 1e-8);
/// Compare a-particle 8x8 projections of two family instances.
WalkVerdict walk_verdict_fermionic(const FamilyInstance& i1, const FamilyInstance& i2,
                                   double tol = 1e-8);

}  // namespace cospec
