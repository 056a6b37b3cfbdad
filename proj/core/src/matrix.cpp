#include "virpstr/matrix.hpp"

#include <stdexcept>

namespace virpstr {

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  assert(static_cast<int>(v.size()) == m.cols());
  RatVector out(m.rows(), Rat(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

std::vector<int> rat_rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.swap_rows(sel, row);
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rat_rank(const RatMatrix& m) {
  RatMatrix r = m;
  return static_cast<int>(rat_rref(r).size());
}

std::vector<RatVector> rat_kernel(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<int> pivots = rat_rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(static_cast<int>(pr), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> rat_solve(const RatMatrix& m, const RatVector& rhs) {
  assert(static_cast<int>(rhs.size()) == m.rows());
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  std::vector<int> pivots = rat_rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols(), Rat(0));
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(static_cast<int>(pr), m.cols());
  return x;
}

bool in_span(const std::vector<RatVector>& vectors, const RatVector& v) {
  if (vectors.empty()) {
    for (const Rat& x : v)
      if (x != 0) return false;
    return true;
  }
  int n = static_cast<int>(v.size());
  RatMatrix m(n, static_cast<int>(vectors.size()));
  for (int j = 0; j < static_cast<int>(vectors.size()); ++j) {
    assert(static_cast<int>(vectors[j].size()) == n);
    for (int i = 0; i < n; ++i) m.at(i, j) = vectors[j][i];
  }
  return rat_solve(m, v).has_value();
}

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  for (const auto& v : a)
    if (!in_span(b, v)) return false;
  for (const auto& v : b)
    if (!in_span(a, v)) return false;
  return true;
}

BivarPoly fraction_free_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("fraction_free_det: non-square matrix");
  int n = m.rows();
  if (n == 0) return BivarPoly(Rat(1));
  PolyMatrix a = m;
  int sign = 1;
  BivarPoly prev(Rat(1));
  for (int k = 0; k + 1 < n; ++k) {
    // Pivot: the sparsest nonzero entry in column k keeps growth down.
    int sel = -1;
    std::size_t best = 0;
    for (int i = k; i < n; ++i) {
      const BivarPoly& e = a.at(i, k);
      if (e.is_zero()) continue;
      if (sel < 0 || e.terms().size() < best) {
        sel = i;
        best = e.terms().size();
      }
    }
    if (sel < 0) return BivarPoly();
    if (sel != k) {
      a.swap_rows(sel, k);
      sign = -sign;
    }
    const BivarPoly pivot = a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BivarPoly num = a.at(i, j) * pivot - a.at(i, k) * a.at(k, j);
        if (num.is_zero()) {
          a.at(i, j) = BivarPoly();
          continue;
        }
        auto q = num.div_exact(prev);
        if (!q) throw std::logic_error("fraction_free_det: inexact Bareiss division");
        a.at(i, j) = std::move(*q);
      }
      a.at(i, k) = BivarPoly();
    }
    prev = pivot;
  }
  BivarPoly det = a.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

RatMatrix eval_matrix(const PolyMatrix& m, const Rat& c, const Rat& h) {
  RatMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).eval(c, h);
  return out;
}

}  // namespace virpstr
