#include "cospec/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "cospec/block_matrix.hpp"

namespace cospec {

double Spectrum::max_abs_dev(const Spectrum& other) const {
  if (values.size() != other.values.size()) return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (size_t i = 0; i < values.size(); ++i)
    dev = std::max(dev, std::abs(values[i] - other.values[i]));
  return dev;
}

namespace {

Eigen::SelfAdjointEigenSolver<Matrix> solve(const Matrix& m, bool vectors) {
  if (!is_symmetric(m)) throw NonSymmetric("sym_eig requires a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceFailure("eigensolver did not converge");
  return es;
}

}  // namespace

Spectrum sym_eig(const Matrix& m) {
  auto es = solve(m, false);
  Spectrum s;
  s.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  return s;
}

EigenSystem sym_eig_full(const Matrix& m) {
  auto es = solve(m, true);
  EigenSystem out;
  out.spectrum.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  out.vectors = es.eigenvectors();
  return out;
}

CospectralResult cospectral(const Spectrum& s1, const Spectrum& s2, double tol) {
  double dev = s1.max_abs_dev(s2);
  return {dev <= tol, dev};
}

CospectralResult cospectral(const Graph& g1, const Graph& g2, double tol) {
  if (g1.order() != g2.order())
    return {false, std::numeric_limits<double>::infinity()};
  return cospectral(sym_eig(g1.adjacency_matrix()), sym_eig(g2.adjacency_matrix()), tol);
}

Spectrum closed_form_spectrum_G45(int n) {
  if (n < 1) throw BadParams("closed_form_spectrum_G45 requires n >= 1");
  const int b = n + 2;
  std::vector<double> half;
  half.push_back(n + 2);
  half.insert(half.end(), 2, n + 1);
  half.push_back(n);
  half.insert(half.end(), b - 1, 2.0);
  half.insert(half.end(), 2 * (b - 1), 1.0);

  Spectrum s;
  for (double v : half) {
    s.values.push_back(v);
    s.values.push_back(-v);
  }
  s.values.insert(s.values.end(), 2 * (n - 1), 0.0);
  std::sort(s.values.begin(), s.values.end());
  return s;
}

namespace {

std::vector<double> laplacian_eigs(const Graph& g, double coupling) {
  if (coupling < 0) throw NegativeCoupling("coupling must be non-negative");
  return sym_eig(g.laplacian()).values;
}

}  // namespace

double ground_state_energy(const Graph& g, double coupling) {
  double e = 0.0;
  for (double a : laplacian_eigs(g, coupling)) e += std::sqrt(1.0 + 2.0 * coupling * a);
  return 0.5 * e;
}

double ground_state_energy_product(const Graph& g, double coupling) {
  double p = 1.0;
  for (double a : laplacian_eigs(g, coupling)) p *= 1.0 + 2.0 * coupling * a;
  return 0.5 * p;
}

}  // namespace cospec
