#pragma once

#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Eigenvalues sorted ascending, with multiplicity.
struct Spectrum {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double max_abs_dev(const Spectrum& other) const;
};

Spectrum sym_eig(const Matrix& m);

struct EigenSystem {
  Spectrum spectrum;
  Matrix vectors;  // orthonormal columns, m = V diag(w) V^T
};
EigenSystem sym_eig_full(const Matrix& m);

struct CospectralResult {
  bool equal;
  double max_dev;  // +inf when orders differ
};
CospectralResult cospectral(const Graph& g1, const Graph& g2, double tol = 1e-8);
CospectralResult cospectral(const Spectrum& s1, const Spectrum& s2, double tol = 1e-8);

/// Adjacency spectrum of G4(n, n+2) / G5(n, n+2):
/// +-(n+2), +-(n+1) twice, +-n, +-2 (b-1 times), +-1 (2(b-1) times),
/// plus 2(n-1) zeros from the a-cloud directions orthogonal to the
/// all-ones vector (those decouple in A0 +- A1).
Spectrum closed_form_spectrum_G45(int n);

/// Oscillator-network zero-point energy, (1/2) sum_i sqrt(1 + 2g a_i) over
/// Laplacian eigenvalues a_i.
double ground_state_energy(const Graph& g, double coupling);
/// The literal product form (1/2) prod_i (1 + 2g a_i); kept alongside the
/// sum because both are constant across a cospectral pair.
double ground_state_energy_product(const Graph& g, double coupling);

}  // namespace cospec
