#pragma once

#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Symbolic block for grid assembly: all-ones J, identity I, zeros Z, or an
/// explicit matrix.
class Block {
 public:
  static Block J(int rows, int cols);
  static Block I(int n);
  static Block Z(int rows, int cols);
  static Block M(Matrix m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Matrix materialize() const;
  Block transposed() const;

 private:
  enum class Kind { Ones, Identity, Zero, Explicit };
  Block(Kind kind, int rows, int cols) : kind_(kind), rows_(rows), cols_(cols) {}
  Kind kind_;
  int rows_, cols_;
  Matrix m_;
};

/// Assemble a dense matrix from a block grid. Row/column sizes must be
/// consistent and the result symmetric (AsymmetricLayout otherwise).
Matrix block_compose(const std::vector<std::vector<Block>>& grid);

/// I2 (x) diag_part + sigma_x (x) off_part, i.e. [[D, F], [F, D]].
Matrix two_copy_compose(const Matrix& diag_part, const Matrix& off_part);

Matrix kronecker(const Matrix& a, const Matrix& b);

bool is_symmetric(const Matrix& m, double tol = 0.0);
/// 0.5*(m + m^T); used after Schur complements to restore exact symmetry.
Matrix symmetrized(const Matrix& m);

}  // namespace cospec
