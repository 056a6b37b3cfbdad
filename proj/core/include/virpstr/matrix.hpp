#ifndef VIRPSTR_MATRIX_HPP
#define VIRPSTR_MATRIX_HPP

#include <cassert>
#include <optional>
#include <vector>

#include "virpstr/poly.hpp"
#include "virpstr/rat.hpp"

namespace virpstr {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<BivarPoly>;
using RatVector = std::vector<Rat>;

RatVector mat_vec(const RatMatrix& m, const RatVector& v);

// In-place reduced row echelon form with leftmost-pivot selection.
// Returns the pivot column indices in order.
std::vector<int> rat_rref(RatMatrix& m);

int rat_rank(const RatMatrix& m);

// Basis of the right kernel; vectors come from the reduced echelon form of
// the null space, one free variable set to 1 at a time (ascending index).
std::vector<RatVector> rat_kernel(const RatMatrix& m);

// One particular solution of m x = rhs with all free variables set to 0,
// or nullopt when inconsistent.
std::optional<RatVector> rat_solve(const RatMatrix& m, const RatVector& rhs);

// True iff v lies in the span of the given vectors.
bool in_span(const std::vector<RatVector>& vectors, const RatVector& v);

// True iff the two lists span the same subspace.
bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b);

// Exact determinant of a square polynomial matrix by Bareiss fraction-free
// elimination over the polynomial ring.
BivarPoly fraction_free_det(const PolyMatrix& m);

RatMatrix eval_matrix(const PolyMatrix& m, const Rat& c, const Rat& h);

}  // namespace virpstr

#endif
