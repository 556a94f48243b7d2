#pragma once

#include <Eigen/SparseCore>
#include <cstdint>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Antisymmetric a-particle sector: basis of strictly increasing a-subsets
/// of the vertex set, in lexicographic order. A hop v -> w carries the sign
/// (-1)^(number of occupied sites strictly between v and w).
class FermionSpace {
 public:
  static constexpr std::int64_t kDefaultCap = 2'000'000;

  FermionSpace(int n_vertices, int particles, std::int64_t cap = kDefaultCap);

  int vertex_count() const { return n_; }
  int particles() const { return a_; }
  std::int64_t dim() const { return static_cast<std::int64_t>(basis_.size()); }
  const std::vector<int>& subset(std::int64_t index) const { return basis_[index]; }
  std::int64_t index_of(const std::vector<int>& sorted_subset) const;

  static int hop_sign(const std::vector<int>& occupied, int from, int to);

 private:
  int n_, a_;
  std::vector<std::vector<int>> basis_;
};

/// Restriction of the summed one-body hop operator to the antisymmetric
/// sector. Diagonal adjacency entries (self-loops) act as occupancy terms,
/// which keeps fermion_hop_operator(g, 1) == adjacency for every graph.
Eigen::SparseMatrix<double> fermion_hop_operator(
    const Graph& g, int particles, std::int64_t cap = FermionSpace::kDefaultCap);

std::int64_t binomial_or_cap(int n, int k, std::int64_t cap);

}  // namespace cospec
