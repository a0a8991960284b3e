#include "cubiclab/linalg.hpp"

#include "cubiclab/error.hpp"

namespace cubiclab {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

std::vector<std::size_t> DenseMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && at(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(p, k), at(r, k));
    }
    const Scalar inv = at(r, c).inverse();
    for (std::size_t k = c; k < cols_; ++k) at(r, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      const Scalar f = at(i, c);
      for (std::size_t k = c; k < cols_; ++k) {
        if (!at(r, k).is_zero()) at(i, k) -= f * at(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t DenseMatrix::rank() const {
  DenseMatrix copy = *this;
  return copy.reduce().size();
}

std::vector<std::vector<Scalar>> DenseMatrix::nullspace() const {
  DenseMatrix m = *this;
  const auto pivots = m.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpace::reduce(std::vector<Scalar>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Scalar f = v[p];
    const auto& row = rows_[i];
    for (std::size_t k = p; k < dim_; ++k) {
      if (!row[k].is_zero()) v[k] -= f * row[k];
    }
  }
}

bool RowSpace::add(std::vector<Scalar> v) {
  if (v.size() != dim_) throw PreconditionError("row length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = v[p].inverse();
  for (std::size_t k = p; k < dim_; ++k) v[k] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::vector<Scalar> v) const {
  if (v.size() != dim_) throw PreconditionError("row length mismatch");
  reduce(v);
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialIndex::operator()(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw PreconditionError("monomial outside the indexed set");
  return it->second;
}

std::vector<Scalar> MonomialIndex::coefficients(const Polynomial& p) const {
  std::vector<Scalar> v(monomials_.size(), Scalar::zero(p.ring()->field()));
  for (const auto& t : p.terms()) v[(*this)(t.monomial)] = t.coefficient;
  return v;
}

}  // namespace cubiclab
