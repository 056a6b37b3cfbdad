#ifndef VIRPSTR_SHAPOVALOV_HPP
#define VIRPSTR_SHAPOVALOV_HPP

#include <utility>
#include <vector>

#include "virpstr/matrix.hpp"
#include "virpstr/virasoro.hpp"

namespace virpstr {

// Symbolic Gram matrix of the Shapovalov form at one degree.
struct GramMatrix {
  int degree = 0;
  PolyMatrix matrix;                // p(degree) x p(degree), symmetric
  std::vector<Partition> basis;     // canonical partition order
};

// Entry (i,j) = shapovalov_entry(basis[i], basis[j]); entries computed in
// parallel, whole matrices cached per degree.
const GramMatrix& gram_matrix(int degree);

// The Kac determinant curve polynomial Phi_{r,s}(c,h); Phi_{r,s} = Phi_{s,r}.
BivarPoly phi(int r, int s);
// sqrt(Phi_{a,a}) = h + (a^2-1)(c-1)/24.
BivarPoly sqrt_phi(int a);

// c(t) = 13 + 6t + 6/t and h_{r,s}(t); t must be nonzero.
Rat c_of_t(const Rat& t);
Rat h_rs_of_t(int r, int s, const Rat& t);

struct KacDetResult {
  int degree = 0;
  BivarPoly determinant;  // fraction_free_det(gram_matrix(degree))
  BivarPoly product;      // prod Phi_{a,b}^{p(l-ab)} * prod sqrt(Phi_{a,a})^{p(l-a^2)}
  Rat constant;           // determinant / product, inferred
  bool exact = false;     // product divides determinant with constant quotient
};

KacDetResult kac_det_formula(int degree);

// All (r,s), r >= s >= 1, rs <= bound with Phi_{r,s}(c,h) = 0 (sqrt form on
// the diagonal r = s); sorted by rs, then r.
std::vector<std::pair<int, int>> curves_through(const Rat& c, const Rat& h, int bound);

}  // namespace virpstr

#endif
