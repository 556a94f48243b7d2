#include "cospec/fermion.hpp"

#include <algorithm>

namespace cospec {

std::int64_t binomial_or_cap(int n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

FermionSpace::FermionSpace(int n_vertices, int particles, std::int64_t cap)
    : n_(n_vertices), a_(particles) {
  if (a_ < 1 || a_ > n_)
    throw BadParticleCount("particle count must be in [1, n]");
  const std::int64_t d = binomial_or_cap(n_, a_, cap);
  if (d > cap)
    throw CapExceeded("C(" + std::to_string(n_) + "," + std::to_string(a_) +
                      ") exceeds the configured cap");
  basis_.reserve(d);
  std::vector<int> cur(a_);
  for (int i = 0; i < a_; ++i) cur[i] = i;
  while (true) {
    basis_.push_back(cur);
    int i = a_ - 1;
    while (i >= 0 && cur[i] == n_ - a_ + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < a_; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::int64_t FermionSpace::index_of(const std::vector<int>& sorted_subset) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), sorted_subset);
  if (it == basis_.end() || *it != sorted_subset)
    throw IndexOutOfRange("subset not in fermion basis");
  return it - basis_.begin();
}

int FermionSpace::hop_sign(const std::vector<int>& occupied, int from, int to) {
  const int lo = std::min(from, to), hi = std::max(from, to);
  int crossings = 0;
  for (int s : occupied)
    if (s > lo && s < hi && s != from) ++crossings;
  return crossings % 2 ? -1 : 1;
}

Eigen::SparseMatrix<double> fermion_hop_operator(const Graph& g, int particles,
                                                 std::int64_t cap) {
  FermionSpace space(g.order(), particles, cap);
  const Matrix a = g.adjacency_matrix();

  // rough nonzero estimate: every particle can hop to every neighbor
  int max_deg = 0;
  for (int v = 0; v < g.order(); ++v)
    max_deg = std::max(max_deg, static_cast<int>(g.adjacency_lists()[v].size()));
  if (space.dim() * (static_cast<std::int64_t>(particles) * max_deg + 1) > cap)
    throw CapExceeded("estimated nonzero count exceeds the configured cap");

  std::vector<Eigen::Triplet<double>> trip;
  std::vector<int> target;
  for (std::int64_t i = 0; i < space.dim(); ++i) {
    const auto& s = space.subset(i);
    double diag = 0.0;
    for (int v : s) diag += a(v, v);
    if (diag != 0.0) trip.emplace_back(i, i, diag);
    for (int v : s) {
      for (int w : g.adjacency_lists()[v]) {
        if (std::binary_search(s.begin(), s.end(), w)) continue;  // Pauli blocked
        target = s;
        *std::find(target.begin(), target.end(), v) = w;
        std::sort(target.begin(), target.end());
        trip.emplace_back(space.index_of(target), i,
                          FermionSpace::hop_sign(s, v, w) * a(v, w));
      }
    }
  }
  Eigen::SparseMatrix<double> h(space.dim(), space.dim());
  h.setFromTriplets(trip.begin(), trip.end());
  return h;
}

}  // namespace cospec
