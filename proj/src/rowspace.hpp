#pragma once

#include <vector>

#include "field.hpp"

namespace hp0 {

/// Row space over F in reduced echelon form. Rows keep unit pivots and
/// cleared pivot columns, so membership reduces a vector to zero.
template <class F>
struct RowSpace {
  using Elem = typename F::Elem;
  F field;
  size_t ambient = 0;
  std::vector<std::vector<Elem>> rows;  // sorted by pivot column
  std::vector<size_t> pivots;

  RowSpace(const F& K, size_t dim) : field(K), ambient(dim) {}

  size_t rank() const { return rows.size(); }

  /// Appends v to the span; returns true iff v was already in the span.
  bool rank_append(std::vector<Elem> v) {
    const F& K = field;
    if (v.size() != ambient) throw std::invalid_argument("row dimension mismatch");
    for (size_t r = 0; r < rows.size(); ++r) {
      const Elem& c = v[pivots[r]];
      if (K.is_zero(c)) continue;
      Elem s = c;  // pivot entries are 1
      for (size_t j = pivots[r]; j < ambient; ++j)
        v[j] = K.sub(v[j], K.mul(s, rows[r][j]));
    }
    size_t pivot = ambient;
    for (size_t j = 0; j < ambient; ++j)
      if (!K.is_zero(v[j])) {
        pivot = j;
        break;
      }
    if (pivot == ambient) return true;
    Elem inv = K.inv(v[pivot]);
    for (size_t j = pivot; j < ambient; ++j) v[j] = K.mul(v[j], inv);
    // clear the new pivot column in existing rows
    for (size_t r = 0; r < rows.size(); ++r) {
      const Elem& c = rows[r][pivot];
      if (K.is_zero(c)) continue;
      Elem s = c;
      for (size_t j = pivot; j < ambient; ++j)
        rows[r][j] = K.sub(rows[r][j], K.mul(s, v[j]));
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < pivot) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, pivot);
    return false;
  }

  bool contains(std::vector<Elem> v) const {
    const F& K = field;
    if (v.size() != ambient) throw std::invalid_argument("row dimension mismatch");
    for (size_t r = 0; r < rows.size(); ++r) {
      const Elem& c = v[pivots[r]];
      if (K.is_zero(c)) continue;
      Elem s = c;
      for (size_t j = pivots[r]; j < ambient; ++j)
        v[j] = K.sub(v[j], K.mul(s, rows[r][j]));
    }
    for (const Elem& x : v)
      if (!K.is_zero(x)) return false;
    return true;
  }
};

/// Maintains the joint kernel of a stream of sparse linear constraints on
/// F^n, i.e. the space of functionals vanishing on every appended vector.
/// The final dimension is n minus the rank of the constraints. Storage is
/// coordinate-major so sparse constraints touch contiguous memory; cost per
/// constraint is O(nnz * current_dim), which collapses once the kernel is
/// small.
template <class F>
struct KernelTracker {
  using Elem = typename F::Elem;
  F field;
  size_t ambient;
  size_t dim_;
  // coord[i][j] = i-th coordinate of the j-th kernel basis vector
  std::vector<std::vector<Elem>> coord;

  KernelTracker(const F& K, size_t n) : field(K), ambient(n), dim_(n) {
    coord.assign(n, {});
    for (size_t i = 0; i < n; ++i) {
      coord[i].assign(n, K.zero());
      coord[i][i] = K.one();
    }
  }

  size_t dim() const { return dim_; }

  /// Imposes the constraint <c, x> = 0 where c is given sparsely.
  void constrain(const std::vector<std::pair<size_t, Elem>>& c) {
    const F& K = field;
    if (dim_ == 0) return;
    std::vector<Elem> dot(dim_, K.zero());
    for (const auto& [idx, val] : c) {
      if (idx >= ambient) throw std::out_of_range("constraint index out of range");
      if (K.is_zero(val)) continue;
      const auto& row = coord[idx];
      for (size_t j = 0; j < dim_; ++j) dot[j] = K.add(dot[j], K.mul(val, row[j]));
    }
    size_t piv = dim_;
    for (size_t j = 0; j < dim_; ++j)
      if (!K.is_zero(dot[j])) {
        piv = j;
        break;
      }
    if (piv == dim_) return;  // constraint already satisfied
    Elem inv = K.inv(dot[piv]);
    std::vector<Elem> factor(dim_, K.zero());
    for (size_t j = 0; j < dim_; ++j)
      if (j != piv) factor[j] = K.mul(dot[j], inv);
    size_t last = dim_ - 1;
    for (size_t i = 0; i < ambient; ++i) {
      auto& row = coord[i];
      Elem pv = row[piv];
      if (!K.is_zero(pv)) {
        for (size_t j = 0; j < dim_; ++j) {
          if (j == piv || K.is_zero(factor[j])) continue;
          row[j] = K.sub(row[j], K.mul(factor[j], pv));
        }
      }
      row[piv] = row[last];
      row.resize(last);
    }
    dim_ = last;
  }
};

}  // namespace hp0
