#pragma once

// Exact linear algebra over the rationals.
//
// Every invariant computed in this project is the dimension of a kernel or
// cokernel of a matrix whose entries are polynomial in rational input data,
// so working over Q gives the same dimensions as working over C.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "zk/rational.hpp"

namespace zk {

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;
using DenseVector = std::vector<Rational>;

SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, std::size_t dim);

/// Returns a + factor * b.
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_dense(const std::vector<DenseVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Setting a zero erases the entry. Throws std::out_of_range on bad indices.
  void set(std::size_t r, std::size_t c, const Rational& value);
  Rational get(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const { return entries_.size(); }

  SparseMatrix transpose() const;
  std::vector<SparseVector> row_vectors() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

/// Incremental row echelon form. Each stored row has leading coefficient 1
/// at a column no other stored row leads with.
class RowReducer {
 public:
  explicit RowReducer(std::size_t dim);

  std::size_t dim() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }

  /// Remainder of `v` after elimination; empty iff `v` lies in the row span.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Adds `v` to the span. Returns false when it was already dependent.
  bool insert(SparseVector v);

  const std::vector<SparseVector>& rows() const { return rows_; }

  /// Basis of the right kernel of the stored rows (fully back-substituted).
  std::vector<SparseVector> kernel() const;

 private:
  std::vector<long> pivot_row_;
  std::vector<SparseVector> rows_;
};

std::size_t rank(const SparseMatrix& m);
std::size_t rank(const std::vector<SparseVector>& rows, std::size_t cols);

std::vector<DenseVector> nullspace_basis(const SparseMatrix& m);
std::vector<SparseVector> nullspace_basis(const std::vector<SparseVector>& rows, std::size_t cols);

/// ambient_dim minus the rank of the span. Throws std::invalid_argument when
/// a vector has the wrong length.
std::size_t quotient_dim(std::size_t ambient_dim, const std::vector<DenseVector>& spanning_vectors);

}  // namespace zk
