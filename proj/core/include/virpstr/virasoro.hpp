#ifndef VIRPSTR_VIRASORO_HPP
#define VIRPSTR_VIRASORO_HPP

#include <map>
#include <string>
#include <vector>

#include "virpstr/partitions.hpp"
#include "virpstr/poly.hpp"

namespace virpstr {

// Word in the modes L_n, leftmost factor applied last. Indices are the
// nonzero mode subscripts; L_0 is allowed inside act_on_lw input words.
struct VirWord {
  std::vector<int> modes;

  VirWord() = default;
  explicit VirWord(std::vector<int> m) : modes(std::move(m)) {}

  bool operator==(const VirWord& o) const { return modes == o.modes; }
  std::string to_string() const;
};

// L_{-n_1} ... L_{-n_m} for the partition [n_1 >= ... >= n_m].
VirWord word_of(const Partition& p);

// The anti-automorphism: reverse factor order, negate every index.
VirWord adjoint(const VirWord& w);

// Finite U(L^-)-combination applied to a lowest-weight vector; coefficients
// are exact polynomials in (c, h).
using LWVectorExpr = std::map<Partition, BivarPoly>;

void lw_add(LWVectorExpr& e, const Partition& p, const BivarPoly& coeff);
LWVectorExpr lw_scale(const LWVectorExpr& e, const BivarPoly& s);
LWVectorExpr lw_sum(const LWVectorExpr& a, const LWVectorExpr& b);
std::string lw_to_string(const LWVectorExpr& e);

// Applies the word left-to-right innermost-first: positive modes commute
// rightward via [L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 delta_{m+n,0} c and
// annihilate the lowest-weight vector, L_0 acts as h + degree, negative
// modes re-enter PBW order.
LWVectorExpr act_on_lw(const VirWord& w, const LWVectorExpr& v);

// L_{-m} applied to a PBW monomial, renormal-ordered.
LWVectorExpr lower_by_mode(int m, const Partition& p);

// The monomial word of b applied to an expression.
LWVectorExpr multiply_monomial(const Partition& b, const LWVectorExpr& v);

// <B_i.1, B_j.1> = coefficient of the lowest-weight vector in
// adjoint(word(b_i)) word(b_j) . 1; a polynomial a_{B_i,B_j}(c,h).
// Requires weight(b_i) == weight(b_j). Memoized.
BivarPoly shapovalov_entry(const Partition& b_i, const Partition& b_j);

}  // namespace virpstr

#endif
