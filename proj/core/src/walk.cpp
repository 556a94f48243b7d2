#include "cospec/walk.hpp"

#include <cmath>

#include "cospec/spectral.hpp"

namespace cospec {

AmplitudeVector ctqw(const Matrix& h, double t, const ComplexVector& init) {
  if (init.size() != h.rows()) throw DimensionMismatch("initial state size != dim(h)");
  if (std::abs(init.norm() - 1.0) > 1e-10)
    throw UnnormalizedInput("initial state must be a unit vector");
  EigenSystem es = sym_eig_full(h);
  const auto& u = es.vectors;
  ComplexVector coeff = u.transpose() * init;
  for (int i = 0; i < coeff.size(); ++i)
    coeff(i) *= std::exp(std::complex<double>(0.0, -es.spectrum.values[i] * t));
  return {u * coeff, t};
}

std::vector<double> TimeGrid::times() const {
  if (step <= 0) throw BadParams("time grid step must be positive");
  std::vector<double> ts;
  for (int k = 0;; ++k) {
    double t = start + k * step;
    if (t > stop + 0.5 * step) break;
    ts.push_back(t);
  }
  return ts;
}

ProbabilityTable stratum_probabilities(const Graph& g, int origin, const TimeGrid& grid,
                                       double closure_tol) {
  return stratum_probabilities(g, bfs_stratification(g, origin).partition, origin, grid,
                               closure_tol);
}

ProbabilityTable stratum_probabilities(const Graph& g, const VertexPartition& p, int origin,
                                       const TimeGrid& grid, double closure_tol) {
  if (origin < 0 || origin >= g.order()) throw IndexOutOfRange("origin out of range");
  p.validate(g.order());

  const Matrix a = g.adjacency_matrix();
  QuotientResult q = quotient_of(a, p, closure_tol);

  ProbabilityTable out;
  out.times = grid.times();
  out.partition = p;
  out.partition_closed = q.closed;
  const int k = p.block_count();
  out.probabilities = Matrix::Zero(static_cast<int>(out.times.size()), k);

  EigenSystem es = sym_eig_full(a);
  Vector e0 = Vector::Zero(g.order());
  e0(origin) = 1.0;
  Vector c0 = es.vectors.transpose() * e0;

  // quotient-space route, valid when the partition is closed and the origin
  // is a singleton block (the walk then stays inside the indicator span)
  int origin_block = -1;
  for (int j = 0; j < k; ++j)
    if (p.blocks[j].size() == 1 && p.blocks[j][0] == origin) origin_block = j;
  const bool dual = q.closed && origin_block >= 0;
  EigenSystem qes;
  Vector qc0;
  if (dual) {
    qes = sym_eig_full(q.matrix);
    Vector qe0 = Vector::Zero(k);
    qe0(origin_block) = 1.0;
    qc0 = qes.vectors.transpose() * qe0;
  }

  for (size_t ti = 0; ti < out.times.size(); ++ti) {
    const double t = out.times[ti];
    ComplexVector phase(c0.size());
    for (int i = 0; i < c0.size(); ++i)
      phase(i) = c0(i) * std::exp(std::complex<double>(0.0, -es.spectrum.values[i] * t));
    ComplexVector psi = es.vectors * phase;
    for (int j = 0; j < k; ++j) {
      double mass = 0.0;
      for (int v : p.blocks[j]) mass += std::norm(psi(v));
      out.probabilities(static_cast<int>(ti), j) = mass;
    }
    if (dual) {
      ComplexVector qphase(k);
      for (int i = 0; i < k; ++i)
        qphase(i) = qc0(i) * std::exp(std::complex<double>(0.0, -qes.spectrum.values[i] * t));
      ComplexVector qpsi = qes.vectors * qphase;
      for (int j = 0; j < k; ++j) {
        const double gap =
            std::abs(std::norm(qpsi(j)) - out.probabilities(static_cast<int>(ti), j));
        out.dual_path_gap = std::max(out.dual_path_gap, gap);
      }
    }
  }
  if (dual && out.dual_path_gap > 1e-8)
    throw Error("closed partition but quotient/full-space walks disagree: gap = " +
                std::to_string(out.dual_path_gap));
  return out;
}

Matrix g45_fermionic_vectors(const FamilyInstance& inst, std::int64_t cap) {
  const int n = inst.graph.order();
  const int a = inst.a, b = inst.b;
  FermionSpace space(n, a, cap);

  Matrix basis = Matrix::Zero(space.dim(), 8);
  std::vector<int> cloud1(a), cloud2(a);
  for (int i = 0; i < a; ++i) {
    cloud1[i] = i;
    cloud2[i] = n - a + i;
  }
  basis(space.index_of(cloud1), 0) = 1.0;
  basis(space.index_of(cloud2), 7) = 1.0;

  std::vector<int> target;
  for (int l = 1; l <= 6; ++l) {
    const double c = 1.0 / std::sqrt(static_cast<double>(a) * b);
    for (int m : cloud1) {
      for (int j : inst.blocks.blocks[l]) {
        target = cloud1;
        *std::find(target.begin(), target.end(), m) = j;
        std::sort(target.begin(), target.end());
        basis(space.index_of(target), l) += FermionSpace::hop_sign(cloud1, m, j) * c;
      }
    }
  }
  return basis;
}

FermiQuotient fermionic_quotient(const FamilyInstance& inst, std::int64_t cap) {
  Eigen::SparseMatrix<double> h = fermion_hop_operator(inst.graph, inst.a, cap);
  Matrix basis = g45_fermionic_vectors(inst, cap);
  Matrix hb = h * basis;
  FermiQuotient out;
  out.matrix = basis.transpose() * hb;
  out.matrix = 0.5 * (out.matrix + out.matrix.transpose().eval());
  out.residual = (hb - basis * out.matrix).cwiseAbs().maxCoeff();
  out.basis = std::move(basis);
  return out;
}

Matrix reference_fermionic_quotient(FamilyTag tag, int a, int b) {
  const double s = std::sqrt(static_cast<double>(a) * b);
  const double c = b - 1;
  Matrix m(8, 8);
  switch (tag) {
    case FamilyTag::G4:
      m << 0, s, 0, 0, 0, 0, 0, 0,
           s, 0, 1, 0, 1, 0, 0, 0,
           0, 1, 0, c, 0, 0, 0, 0,
           0, 0, c, 0, 0, 0, 1, 0,
           0, 1, 0, 0, 0, 1, 0, s,
           0, 0, 0, 0, 1, 0, c, 0,
           0, 0, 0, 1, 0, c, 0, 0,
           0, 0, 0, 0, s, 0, 0, 0;
      break;
    case FamilyTag::G5:
      m << 0, s, 0, 0, 0, 0, 0, 0,
           s, 0, 1, 1, 0, 0, 0, 0,
           0, 1, 0, 0, 0, c, 0, 0,
           0, 1, 0, 0, 0, 0, c, 0,
           0, 0, 0, 0, 0, 1, 1, s,
           0, 0, c, 0, 1, 0, 0, 0,
           0, 0, 0, c, 1, 0, 0, 0,
           0, 0, 0, 0, s, 0, 0, 0;
      break;
    case FamilyTag::T4:
      m << 0, 0, 0, 0, s, 0, 0, 0,
           0, 1, 0, 0, 0, 1, 0, s,
           0, 0, 0, 0, 1, 0, c, 0,
           0, 0, 0, 1, 0, c, 0, 0,
           s, 0, 1, 0, 1, 0, 0, 0,
           0, 1, 0, c, 0, 0, 0, 0,
           0, 0, c, 0, 0, 0, 1, 0,
           0, s, 0, 0, 0, 0, 0, 0;
      break;
    case FamilyTag::T5:
      m << 0, 0, 0, 0, s, 0, 0, 0,
           0, 0, 0, 0, 0, 1, 1, s,
           0, 0, c, 0, 1, 0, 0, 0,
           0, 0, 0, c, 1, 0, 0, 0,
           s, 0, 1, 1, 0, 0, 0, 0,
           0, 1, 0, 0, 0, c, 0, 0,
           0, 1, 0, 0, 0, 0, c, 0,
           0, s, 0, 0, 0, 0, 0, 0;
      break;
  }
  return m;
}

namespace {

WalkVerdict matrix_verdict(const Matrix& q1, const Matrix& q2, double tol,
                           const std::string& kind) {
  WalkVerdict v;
  if (q1.rows() != q2.rows()) {
    v.outcome = WalkOutcome::Distinguished;
    v.witness.kind = kind + "-dim";
    v.witness.gap = std::abs(static_cast<double>(q1.rows() - q2.rows()));
    return v;
  }
  double best = 0.0;
  for (int i = 0; i < q1.rows(); ++i)
    for (int j = 0; j < q1.cols(); ++j) {
      const double gap = std::abs(q1(i, j) - q2(i, j));
      if (gap > best) {
        best = gap;
        v.witness.row = i;
        v.witness.col = j;
      }
    }
  v.witness.kind = kind;
  v.witness.gap = best;
  v.outcome = best > tol ? WalkOutcome::Distinguished : WalkOutcome::Inconclusive;
  return v;
}

}  // namespace

WalkVerdict walk_verdict_quotient(const Graph& g1, const VertexPartition& p1, const Graph& g2,
                                  const VertexPartition& p2, double tol) {
  return matrix_verdict(quotient(g1, p1).matrix, quotient(g2, p2).matrix, tol,
                        "quotient-entry");
}

WalkVerdict walk_verdict_traces(const Graph& g1, const VertexPartition& p1, int origin1,
                                const Graph& g2, const VertexPartition& p2, int origin2,
                                const TimeGrid& grid, double tol) {
  WalkVerdict v;
  if (p1.block_count() != p2.block_count()) {
    v.outcome = WalkOutcome::Distinguished;
    v.witness.kind = "trace-dim";
    v.witness.gap = std::abs(p1.block_count() - p2.block_count());
    return v;
  }
  auto t1 = stratum_probabilities(g1, p1, origin1, grid);
  auto t2 = stratum_probabilities(g2, p2, origin2, grid);
  double best = 0.0;
  for (int i = 0; i < t1.probabilities.rows(); ++i)
    for (int j = 0; j < t1.probabilities.cols(); ++j) {
      const double gap = std::abs(t1.probabilities(i, j) - t2.probabilities(i, j));
      if (gap > best) {
        best = gap;
        v.witness.time = t1.times[i];
        v.witness.col = j;
      }
    }
  v.witness.kind = "trace";
  v.witness.gap = best;
  v.outcome = best > tol ? WalkOutcome::Distinguished : WalkOutcome::Inconclusive;
  return v;
}

WalkVerdict walk_verdict_fermionic(const FamilyInstance& i1, const FamilyInstance& i2,
                                   double tol) {
  return matrix_verdict(fermionic_quotient(i1).matrix, fermionic_quotient(i2).matrix, tol,
                        "fermionic-entry");
}

}  // namespace cospec
