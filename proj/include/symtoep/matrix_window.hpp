#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "symtoep/operator.hpp"
#include "symtoep/partition.hpp"

namespace symtoep {

/// Exact sparse matrix of an operator between two windows.
///
/// Entry (i, j) is <Op e_col, e_row> for row = rows.members()[i % rows.size()]
/// and col likewise. A block matrix (row_blocks x col_blocks copies of the
/// windows) uses the global index block * window_size + local.
struct MatrixWindow {
  using Index = std::pair<std::size_t, std::size_t>;

  Window rows;
  Window cols;
  int row_blocks = 1;
  int col_blocks = 1;
  std::map<Index, Scalar> entries;
  bool exact = true;

  std::size_t n_rows() const { return rows.size() * static_cast<std::size_t>(row_blocks); }
  std::size_t n_cols() const { return cols.size() * static_cast<std::size_t>(col_blocks); }
  bool is_zero() const { return entries.empty(); }
  Scalar at(std::size_t i, std::size_t j) const;

  const Partition& row_index(std::size_t i) const { return rows.members()[i % rows.size()]; }
  const Partition& col_index(std::size_t j) const { return cols.members()[j % cols.size()]; }

  Eigen::SparseMatrix<std::complex<double>> to_sparse() const;
  Eigen::MatrixXcd to_dense() const;
};

/// A nonzero entry located by its partitions.
struct Witness {
  std::string label;
  Partition row;
  Partition col;
  Scalar value;
};

/// First nonzero entry in (row, col) order, if any.
std::optional<Witness> first_nonzero(const MatrixWindow& m, std::string label = {});

/// Exact window matrix of op. Rows must lie in op.codomain() and columns in
/// op.domain() (DomainError otherwise). Columns are computed in parallel;
/// SYMTOEP_THREADS caps the worker count.
MatrixWindow assemble(const Operator& op, const Window& rows, const Window& cols);
inline MatrixWindow assemble(const Operator& op, const Window& w) { return assemble(op, w, w); }

/// Block matrix whose (a, b) block is the window matrix of blocks[a][b].
MatrixWindow assemble_blocks(const std::vector<std::vector<Operator>>& blocks, const Window& rows, const Window& cols);

/// Exact difference of two window matrices over identical windows.
MatrixWindow subtract(const MatrixWindow& a, const MatrixWindow& b);

/// Number of worker threads for assembly (env SYMTOEP_THREADS, else hardware).
unsigned worker_threads();

}  // namespace symtoep
