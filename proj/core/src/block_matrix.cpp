#include "cospec/block_matrix.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace cospec {

Block Block::J(int rows, int cols) { return Block(Kind::Ones, rows, cols); }
Block Block::I(int n) { return Block(Kind::Identity, n, n); }
Block Block::Z(int rows, int cols) { return Block(Kind::Zero, rows, cols); }

Block Block::M(Matrix m) {
  Block b(Kind::Explicit, static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  b.m_ = std::move(m);
  return b;
}

Matrix Block::materialize() const {
  switch (kind_) {
    case Kind::Ones:
      return Matrix::Ones(rows_, cols_);
    case Kind::Identity:
      return Matrix::Identity(rows_, cols_);
    case Kind::Zero:
      return Matrix::Zero(rows_, cols_);
    case Kind::Explicit:
      return m_;
  }
  return {};
}

Block Block::transposed() const {
  Block b(kind_, cols_, rows_);
  if (kind_ == Kind::Explicit) b.m_ = m_.transpose();
  return b;
}

Matrix block_compose(const std::vector<std::vector<Block>>& grid) {
  if (grid.empty()) throw DimensionMismatch("empty block grid");
  const size_t nrows = grid.size();
  const size_t ncols = grid.front().size();
  for (const auto& row : grid)
    if (row.size() != ncols) throw DimensionMismatch("ragged block grid");

  std::vector<int> rsz(nrows, -1), csz(ncols, -1);
  for (size_t i = 0; i < nrows; ++i) {
    for (size_t j = 0; j < ncols; ++j) {
      const Block& b = grid[i][j];
      if (rsz[i] < 0) rsz[i] = b.rows();
      if (csz[j] < 0) csz[j] = b.cols();
      if (b.rows() != rsz[i] || b.cols() != csz[j])
        throw DimensionMismatch("inconsistent block sizes at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
  }
  int total_r = 0, total_c = 0;
  std::vector<int> roff(nrows), coff(ncols);
  for (size_t i = 0; i < nrows; ++i) {
    roff[i] = total_r;
    total_r += rsz[i];
  }
  for (size_t j = 0; j < ncols; ++j) {
    coff[j] = total_c;
    total_c += csz[j];
  }

  Matrix out = Matrix::Zero(total_r, total_c);
  for (size_t i = 0; i < nrows; ++i)
    for (size_t j = 0; j < ncols; ++j)
      out.block(roff[i], coff[j], rsz[i], csz[j]) = grid[i][j].materialize();

  if (total_r != total_c || !is_symmetric(out))
    throw AsymmetricLayout("assembled block matrix is not symmetric");
  return out;
}

Matrix two_copy_compose(const Matrix& diag_part, const Matrix& off_part) {
  if (diag_part.rows() != off_part.rows() || diag_part.cols() != off_part.cols())
    throw DimensionMismatch("two_copy_compose: block shapes differ");
  Matrix i2 = Matrix::Identity(2, 2);
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  return kronecker(i2, diag_part) + kronecker(sx, off_part);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

bool is_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace cospec
