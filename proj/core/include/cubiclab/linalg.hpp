#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "cubiclab/polynomial.hpp"

namespace cubiclab {

/// Dense row-major matrix over a Field, used for graded pieces, linear
/// syzygies and quadratic-form ranks.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const Field& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> reduce();
  std::size_t rank() const;
  /// Basis of { v : M v = 0 }, one vector per free column.
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

/// Incremental row space: vectors are reduced against stored pivots and
/// kept when independent. Membership tests reduce a copy.
class RowSpace {
 public:
  RowSpace(std::size_t dim, const Field& field) : dim_(dim), field_(field) {}

  /// Adds v; returns true if it enlarged the space.
  bool add(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void reduce(std::vector<Scalar>& v) const;

  std::size_t dim_;
  Field field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Column indexing of a fixed list of monomials.
class MonomialIndex {
 public:
  explicit MonomialIndex(std::vector<Monomial> monomials);

  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  /// Column of m; throws PreconditionError if m is not indexed.
  std::size_t operator()(const Monomial& m) const;
  /// Coefficient vector of p (every term must be indexed).
  std::vector<Scalar> coefficients(const Polynomial& p) const;

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace cubiclab
