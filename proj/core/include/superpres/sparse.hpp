#pragma once

#include "superpres/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace superpres {

/// Sparse vector over the rationals with a declared ambient dimension.
/// Entries are kept sorted by index and never store an explicit zero.
class SparseVector {
public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}

  /// Entries may arrive unsorted and with repeated indices; they are summed.
  SparseVector(std::size_t dim, std::vector<Entry> entries);

  static SparseVector from_dense(std::span<const Rational> values);
  static SparseVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Rational at(std::size_t index) const;
  std::vector<Rational> to_dense() const;

  /// this += a * x
  SparseVector& axpy(const Rational& a, const SparseVector& x);
  SparseVector scaled(const Rational& a) const;

  SparseVector operator+(const SparseVector& o) const;
  SparseVector operator-(const SparseVector& o) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Row-major sparse matrix. Every row has dimension ncols.
class SparseMatrix {
public:
  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t ncols) : ncols_(ncols) {}
  SparseMatrix(std::size_t ncols, std::vector<SparseVector> rows);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows,
                                 std::size_t ncols);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const SparseVector& row(std::size_t i) const { return rows_[i]; }

  void push_row(SparseVector row);

  /// Matrix-vector product m * v (v has dimension ncols).
  SparseVector apply(const SparseVector& v) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }

private:
  std::size_t ncols_ = 0;
  std::vector<SparseVector> rows_;
};

struct RrefResult {
  SparseMatrix rref;                 // nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by fraction-free elimination over primitive
/// integer rows. Pivot: first nonzero column, ties broken by the smallest
/// absolute leading entry, then by row order.
RrefResult rref(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Basis of the right null space {v : m v = 0}, one vector per free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Dimension of the span. Throws std::invalid_argument on mixed dimensions.
std::size_t span_dim(std::span<const SparseVector> vectors);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);

/// Incrementally grown row space kept in echelon form with unit pivots.
/// Used wherever spans are accumulated one candidate at a time.
class RowSpace {
public:
  explicit RowSpace(std::size_t ncols);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Remainder of v after elimination against the current rows.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

  /// Adds v if independent; returns whether the rank grew.
  bool insert(const SparseVector& v);

  /// Fully reduced echelon basis of the span.
  RrefResult rref() const;

private:
  std::size_t ncols_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row, -1 if none
};

/// Coordinates of v with respect to a fully reduced basis (as produced by
/// rref): component i is v[pivots[i]]. Returns nullopt if v is not in the
/// span.
std::optional<std::vector<Rational>> coordinates_in(const RrefResult& basis,
                                                    const SparseVector& v);

} // namespace superpres
