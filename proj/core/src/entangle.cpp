#include "cospec/entangle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <set>

#include "cospec/block_matrix.hpp"
#include "cospec/spectral.hpp"

namespace cospec {

GaussianNetwork potential_matrix(const Graph& g, double coupling) {
  if (coupling < 0) throw NegativeCoupling("coupling must be non-negative");
  GaussianNetwork net;
  net.v = Matrix::Identity(g.order(), g.order()) + 2.0 * coupling * g.laplacian();
  net.coupling = coupling;
  net.source = g.name();
  return net;
}

namespace {

std::vector<int> complement_of(const std::vector<int>& subset, int n) {
  std::set<int> s(subset.begin(), subset.end());
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!s.count(i)) out.push_back(i);
  return out;
}

Matrix submatrix(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

}  // namespace

Matrix schur_eliminate(const Matrix& v, const std::vector<int>& eliminate) {
  const int n = static_cast<int>(v.rows());
  if (!is_symmetric(v)) throw NonSymmetric("schur_eliminate requires a symmetric matrix");
  std::vector<int> elim(eliminate);
  std::sort(elim.begin(), elim.end());
  elim.erase(std::unique(elim.begin(), elim.end()), elim.end());
  if (!elim.empty() && (elim.front() < 0 || elim.back() >= n))
    throw IndexOutOfRange("eliminated index out of range");
  if (static_cast<int>(elim.size()) == n)
    throw BadParams("cannot eliminate every index");
  if (elim.empty()) return v;

  std::vector<int> keep = complement_of(elim, n);
  Matrix vkk = submatrix(v, keep, keep);
  Matrix vke = submatrix(v, keep, elim);
  Matrix vee = submatrix(v, elim, elim);

  Eigen::LLT<Matrix> llt(vee);
  if (llt.info() != Eigen::Success)
    throw SingularBlock("eliminated block is not positive definite");
  return symmetrized(vkk - vke * llt.solve(vke.transpose()));
}

SchurFactors generalized_schur_factors(const Matrix& v, const std::array<int, 4>& sizes) {
  const int n = sizes[0] + sizes[1] + sizes[2] + sizes[3];
  if (v.rows() != n) throw DimensionMismatch("block sizes do not sum to dim(v)");
  std::array<int, 4> off{};
  for (int i = 1; i < 4; ++i) off[i] = off[i - 1] + sizes[i - 1];
  auto blk = [&](int i, int j) { return v.block(off[i], off[j], sizes[i], sizes[j]); };

  Matrix v11 = blk(0, 0), v12 = blk(0, 1), v22 = blk(1, 1), v23 = blk(1, 2);
  Matrix v33 = blk(2, 2), v34 = blk(2, 3), v44 = blk(3, 3);

  Eigen::LLT<Matrix> l11(v11), l44(v44);
  if (l11.info() != Eigen::Success || l44.info() != Eigen::Success)
    throw SingularBlock("corner blocks must be positive definite");
  Matrix w21 = l11.solve(v12).transpose();  // V12^T V11^{-1}
  Matrix w34 = l44.solve(v34.transpose()).transpose();  // V34 V44^{-1}

  SchurFactors f;
  f.lower = Matrix::Identity(n, n);
  f.lower.block(off[1], off[0], sizes[1], sizes[0]) = w21;
  f.lower.block(off[2], off[3], sizes[2], sizes[3]) = w34;

  f.middle = Matrix::Zero(n, n);
  f.middle.block(off[0], off[0], sizes[0], sizes[0]) = v11;
  f.middle.block(off[1], off[1], sizes[1], sizes[1]) = v22 - w21 * v12;
  f.middle.block(off[1], off[2], sizes[1], sizes[2]) = v23;
  f.middle.block(off[2], off[1], sizes[2], sizes[1]) = v23.transpose();
  f.middle.block(off[2], off[2], sizes[2], sizes[2]) = v33 - w34 * v34.transpose();
  f.middle.block(off[3], off[3], sizes[3], sizes[3]) = v44;
  return f;
}

double mode_entropy(double d, double log_base) {
  if (d < 0.0 || d >= 1.0) throw OutOfRange("mode_entropy requires 0 <= d < 1");
  const double nu = 1.0 / std::sqrt(1.0 - d * d);
  if (nu <= 1.0) return 0.0;  // d ~ 0: (nu-1)/2 * log(...) -> 0
  const double lb = std::log(log_base);
  auto lg = [lb](double x) { return std::log(x) / lb; };
  return (nu + 1) / 2 * lg((nu + 1) / 2) - (nu - 1) / 2 * lg((nu - 1) / 2);
}

EntanglementSpectrum bipartite_entropy(const Matrix& v, const std::vector<int>& part_a,
                                       double log_base) {
  const int n = static_cast<int>(v.rows());
  if (!is_symmetric(v)) throw NonSymmetric("potential must be symmetric");
  if (part_a.empty() || static_cast<int>(part_a.size()) >= n)
    throw BadParams("part A must be a non-empty proper subset");
  std::vector<int> ia(part_a);
  std::sort(ia.begin(), ia.end());
  if (std::unique(ia.begin(), ia.end()) != ia.end() || ia.front() < 0 || ia.back() >= n)
    throw IndexOutOfRange("bad part A indices");
  std::vector<int> ib = complement_of(ia, n);

  EigenSystem ea = sym_eig_full(submatrix(v, ia, ia));
  EigenSystem ec = sym_eig_full(submatrix(v, ib, ib));
  if (ea.spectrum.values.front() <= 0 || ec.spectrum.values.front() <= 0)
    throw NotPositiveDefinite("diagonal block of the potential is not positive definite");

  Vector sa(ea.spectrum.size()), sc(ec.spectrum.size());
  for (int i = 0; i < sa.size(); ++i) sa(i) = 1.0 / std::sqrt(ea.spectrum.values[i]);
  for (int i = 0; i < sc.size(); ++i) sc(i) = 1.0 / std::sqrt(ec.spectrum.values[i]);

  Matrix coupling = submatrix(v, ia, ib);
  Matrix rescaled =
      sa.asDiagonal() * (ea.vectors.transpose() * coupling * ec.vectors) * sc.asDiagonal();

  Eigen::JacobiSVD<Matrix> svd(rescaled);
  EntanglementSpectrum out;
  out.log_base = log_base;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    const double d = svd.singularValues()(i);
    if (d >= 1.0 - 1e-12)
      throw DegenerateMode("singular value " + std::to_string(d) +
                           " at the degenerate boundary");
    out.d.push_back(d);
    out.nu.push_back(1.0 / std::sqrt(1.0 - d * d));
    out.mode_entropies.push_back(mode_entropy(d, log_base));
    out.total += out.mode_entropies.back();
  }
  return out;
}

std::vector<double> g45_reference_d(FamilyTag family, int a, int b, double coupling) {
  if (b != a + 2) throw BadParams("reference d lists are only valid for b = a+2");
  if (coupling < 0) throw NegativeCoupling("coupling must be non-negative");
  const double g = coupling;
  const double p = 1.0 + 2.0 * g * b;
  std::vector<double> d;
  if (family == FamilyTag::G4) {
    auto lam = [&](double mu) { return p - 4.0 * g * g * mu / p; };
    d.push_back(2 * g / lam(a * b + b));
    d.push_back(2 * g / lam(a * b - b + 2));
    d.insert(d.end(), b - 1, 2 * g / lam(2.0));
    d.insert(d.end(), b - 1, 2 * g / lam(0.0));
  } else if (family == FamilyTag::G5) {
    const double l1 = p * (p * p - 4 * g * g * a * b - 8 * g * g) / (p * p - 4 * g * g * a * b);
    const double l2 = (p * p - 8 * g * g) / p;
    d.push_back(2 * g * (b - 1) / l1);
    d.insert(d.end(), b - 1, 2 * g / l2);
    d.push_back(2 * g * (b - 1) / p);
    d.insert(d.end(), b - 1, 2 * g / p);
  } else {
    throw BadParams("reference d lists exist for G4/G5 only");
  }
  for (double& x : d) x = std::abs(x);
  std::sort(d.rbegin(), d.rend());
  return d;
}

G45EntropyResult g45_entropy_experiment(FamilyTag family, int a, int b, double coupling,
                                        double log_base) {
  if (b != a + 2) throw BadParams("entropy experiment requires b = a+2");
  FamilyInstance inst = build_family(family, a, b);
  GaussianNetwork net = potential_matrix(inst.graph, coupling);
  const auto order = schur_block_order(family);

  std::vector<int> eliminate, kept, part_a_vertices;
  for (int pos : {0, 1, 6, 7})
    for (int v : inst.blocks.blocks[order[pos]]) eliminate.push_back(v);
  for (int pos : {2, 3, 4, 5})
    for (int v : inst.blocks.blocks[order[pos]]) kept.push_back(v);
  for (int pos : {2, 3})
    for (int v : inst.blocks.blocks[order[pos]]) part_a_vertices.push_back(v);

  Matrix reduced = schur_eliminate(net.v, eliminate);

  // rows of `reduced` follow the kept vertices sorted ascending
  std::vector<int> kept_sorted(kept);
  std::sort(kept_sorted.begin(), kept_sorted.end());
  std::vector<int> part_a;
  for (int v : part_a_vertices) {
    auto it = std::lower_bound(kept_sorted.begin(), kept_sorted.end(), v);
    part_a.push_back(static_cast<int>(it - kept_sorted.begin()));
  }

  G45EntropyResult out;
  out.spectrum = bipartite_entropy(reduced, part_a, log_base);
  out.reference_d = g45_reference_d(family, a, b, coupling);

  out.matches_reference = out.spectrum.d.size() == out.reference_d.size();
  if (out.matches_reference)
    for (size_t i = 0; i < out.reference_d.size(); ++i)
      if (std::abs(out.spectrum.d[i] - out.reference_d[i]) > 1e-10) {
        out.matches_reference = false;
        break;
      }

  out.direct_full_entropy = bipartite_entropy(net.v, part_a_vertices, log_base).total;
  return out;
}

}  // namespace cospec
