#ifndef VIRPSTR_INDUCED_HPP
#define VIRPSTR_INDUCED_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "virpstr/errors.hpp"
#include "virpstr/shapovalov.hpp"

namespace virpstr {

// Gram matrix of the Shapovalov form on M(c,h,k)(l) in the basis
// (B_1 u_1, ..., B_1 u_k, B_2 u_1, ..., B_{p(l)} u_k). Each k x k block is
// upper triangular with the A_l entry on the diagonal and (1/n!) d^n/dh^n of
// it on superdiagonal n.
struct BlockGram {
  int degree = 0;
  int k = 0;
  PolyMatrix matrix;
};

BlockGram block_gram(int degree, int k);
RatMatrix block_gram_eval(int degree, int k, const Rat& c, const Rat& h);

struct BlockDetCheck {
  BivarPoly lhs;  // det of the block matrix
  BivarPoly rhs;  // (det A_l)^k
  bool equal = false;
};

BlockDetCheck block_det_check(int degree, int k);

// An element sum_j R^j u_j of Ker A_l^(k)(c,h); levels[j] holds R^{j+1}
// (index 0 is the socle generator u_1). Coefficients are constants.
struct KernelVector {
  int degree = 0;
  int k = 0;
  std::vector<LWVectorExpr> levels;

  // Flat coordinates in the block-basis order (partition-major, level-minor).
  RatVector coords() const;
  std::string to_string() const;
};

// Basis of J(c,h,k)(l) = Ker A_l^(k)(c,h) by direct row reduction of the
// evaluated block system.
std::vector<KernelVector> kernel_J(int degree, int k, const Rat& c, const Rat& h);

// Debug oracle: the same space from the derivative cascade, solved level by
// level from the top with rat_solve particular solutions plus homogeneous
// freedom. Spans must agree with kernel_J.
std::vector<KernelVector> kernel_J_cascade(int degree, int k, const Rat& c, const Rat& h);

// Debug oracle: the block Gram matrix by direct normal-ordered reduction of
// B_i^dag B_j against the Jordan vectors u_1, ..., u_k (no derivatives).
RatMatrix block_gram_direct(int degree, int k, const Rat& c, const Rat& h);

// The unique (up to scale) singular vector at degree rs on the curve (r,s),
// normalized so the L(-1)^{rs} coefficient is 1. Throws SingularVectorError
// when the degree-rs kernel is not one-dimensional.
LWVectorExpr singular_vector(int r, int s, const Rat& t);

struct KappaResult {
  int r = 0, s = 0;
  int t_sign = 0;                          // +1 (c=25) or -1 (c=1)
  int kappa = 0;                           // exact value, or cap when at_least
  bool at_least = false;                   // true: only "kappa >= cap" is known
  std::vector<LWVectorExpr> representatives;  // R^{+-,1}, ..., canonical reps
};

// The derivative-cascade depth at (c, h) = (c(+-1), h_{r,s}(+-1)). Requires
// r != s; cap >= 2.
KappaResult kappa(int r, int s, int t_sign, int cap = 8);

enum class CaseTag { Case0, Case1i, Case1ii, Case2OrDeeper };

std::string case_tag_name(CaseTag tag);

struct Classification {
  CaseTag tag = CaseTag::Case0;
  int k = 0;
  int bound = 0;
  bool interlocked = false;
  bool undetermined = false;  // kappa hit its cap and k exceeds it
  std::optional<std::pair<int, int>> minimal_rs;
  std::vector<std::pair<int, int>> curves;
  std::optional<KappaResult> kappa;
  std::string notes;
};

// Interlocked predicate for W(c,h,k): Case 0, or Case 1(ii) with k <= kappa;
// k = 1 is always interlocked. Curve scan up to rs <= bound.
Classification classify(const Rat& c, const Rat& h, int k, int bound, int kappa_cap = 8);

struct DegreeDims {
  int degree = 0;
  long dim_w = 0;
  long dim_soc = 0;
  long dim_rad = 0;
  bool interlocked_shape = false;  // dim W(l) == k * dim Soc(l)
};

std::vector<DegreeDims> socle_radical_dims(const Rat& c, const Rat& h, int k, int lmax);

}  // namespace virpstr

#endif
