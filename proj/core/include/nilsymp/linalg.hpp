#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nilsymp/rational.hpp"

namespace nilsymp {

using QVec = std::vector<Rational>;

/// Dense matrix over exact rationals. Row-reduction is deterministic
/// (leftmost pivot first), so reduced forms are canonical.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, QVec(cols)) {}
  explicit QMatrix(std::vector<QVec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const QVec& row(std::size_t i) const { return a_[i]; }

  void append_row(QVec r);

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of the right kernel, one QVec per kernel element.
  std::vector<QVec> kernel() const;
  Rational det() const;             // square only
  QMatrix inverse() const;          // square, nonsingular
  QMatrix transpose() const;
  QMatrix mul(const QMatrix& other) const;
  QVec apply(const QVec& v) const;  // matrix * column vector

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QVec> a_;
};

/// A linear subspace of Q^n stored as the canonical RREF basis of its
/// row span. Equal subspaces compare equal bit for bit.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, std::vector<QVec> spanning);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVec>& basis() const { return basis_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Rows of `candidates` that extend this space to span this+candidates,
  /// reduced against the basis; used to pick graded complements.
  std::vector<QVec> complement_within(const std::vector<QVec>& candidates) const;
  /// Reduce v modulo the subspace (returns canonical residue).
  QVec reduce(const QVec& v) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<QVec> basis_;  // RREF rows, pivots strictly increasing
  std::vector<std::size_t> pivots_;
};

/// Sparse row: (column, value) pairs sorted by column.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Rank of a sparse row collection; destructive elimination with a
/// shortest-row pivot heuristic to limit fill-in.
std::size_t sparse_rank(std::vector<SparseVec> rows);

/// Row-space basis of a sparse row collection as dense vectors; at most
/// `ambient` rows survive, so follow-up dense work stays small.
std::vector<QVec> sparse_row_basis(std::size_t ambient, std::vector<SparseVec> rows);

SparseVec to_sparse(const QVec& v);

}  // namespace nilsymp
