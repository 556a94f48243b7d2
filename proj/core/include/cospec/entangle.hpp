#pragma once

#include <array>

#include "cospec/families.hpp"
#include "cospec/graph.hpp"

namespace cospec {

struct GaussianNetwork {
  Matrix v;  // potential matrix I + 2gL, positive definite
  double coupling = 0.0;
  std::string source;  // graph name, for reports
};

GaussianNetwork potential_matrix(const Graph& g, double coupling);

/// Effective potential on the kept indices: V_SS - V_SE V_EE^{-1} V_ES.
/// Row/column order of the result follows the kept indices sorted ascending.
Matrix schur_eliminate(const Matrix& v, const std::vector<int>& eliminate);

/// Three-factor form of the generalized Schur complement for the banded
/// 4-block layout (V13 = V14 = V24 = 0): V = lower * middle * lower^T.
struct SchurFactors {
  Matrix lower;
  Matrix middle;
};
SchurFactors generalized_schur_factors(const Matrix& v, const std::array<int, 4>& sizes);

/// Per-mode entanglement entropy of a singular value d in [0, 1):
/// nu = (1-d^2)^{-1/2}, S = ((nu+1)/2)log((nu+1)/2) - ((nu-1)/2)log((nu-1)/2).
double mode_entropy(double d, double log_base = 2.0);

struct EntanglementSpectrum {
  std::vector<double> d;               // singular values, descending
  std::vector<double> nu;              // (1-d^2)^{-1/2}
  std::vector<double> mode_entropies;
  double total = 0.0;
  double log_base = 2.0;
};

/// Appendix-style three-stage computation on a positive-definite potential:
/// diagonalize both diagonal blocks, rescale them to the identity, then take
/// the SVD of the rescaled coupling block.
EntanglementSpectrum bipartite_entropy(const Matrix& v, const std::vector<int>& part_a,
                                       double log_base = 2.0);

/// Closed-form |d_i| list for the reduced G4/G5 system (b = a+2 only),
/// sorted descending. G4: 2g over the eigenvalues of A~22; G5 pairs the
/// +-2g(b-1), +-2g coupling eigenvalues with the commuting A~22 spectrum.
std::vector<double> g45_reference_d(FamilyTag family, int a, int b, double coupling);

struct G45EntropyResult {
  EntanglementSpectrum spectrum;       // from the Schur-reduced 4b system
  std::vector<double> reference_d;     // closed-form magnitudes
  bool matches_reference = false;      // multiset equality within 1e-10
  double direct_full_entropy = 0.0;    // full-V entropy, kept blocks vs rest
};

/// Reduce V on the stored reduction block order (eliminate groups {0,1} and {6,7}),
/// split the kept 4b oscillators into the two 2b groups, and compare the
/// numeric |d| multiset with the closed form.
G45EntropyResult g45_entropy_experiment(FamilyTag family, int a, int b, double coupling,
                                        double log_base = 2.0);

}  // namespace cospec
