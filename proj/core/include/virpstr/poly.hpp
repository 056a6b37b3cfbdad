#ifndef VIRPSTR_POLY_HPP
#define VIRPSTR_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "virpstr/rat.hpp"

namespace virpstr {

// Sparse exact polynomial in the two formal variables c and h over Rat.
// No zero coefficients are ever stored.
class BivarPoly {
 public:
  // exponent pair (e_c, e_h) -> coefficient
  using Exp = std::pair<int, int>;
  using TermMap = std::map<Exp, Rat>;

  BivarPoly() = default;
  BivarPoly(const Rat& constant) { add_term(0, 0, constant); }  // NOLINT(google-explicit-constructor)
  BivarPoly(long constant) { add_term(0, 0, Rat(constant)); }   // NOLINT(google-explicit-constructor)

  static BivarPoly var_c() { return monomial(1, 0, 1); }
  static BivarPoly var_h() { return monomial(0, 1, 1); }
  static BivarPoly monomial(int ec, int eh, const Rat& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (valid for any polynomial; the full value when constant).
  Rat constant_value() const;

  int degree_h() const;
  int degree_c() const;

  void add_term(int ec, int eh, const Rat& coeff);

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator-() const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly& operator*=(const BivarPoly& o);
  BivarPoly operator*(const Rat& s) const;
  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

  BivarPoly pow(int e) const;

  // (d/dh)^order, exact.
  BivarPoly diff_h(int order = 1) const;

  Rat eval(const Rat& c, const Rat& h) const;

  // Exact division: returns quotient iff divisor divides *this exactly.
  std::optional<BivarPoly> div_exact(const BivarPoly& divisor) const;

  // Text form per the CLI contract: terms sorted by (e_h desc, e_c desc),
  // e.g. "8*h^2 + 4*h", "c/2", "-1/3".
  std::string to_string() const;

  const TermMap& terms() const { return terms_; }

 private:
  TermMap terms_;
};

inline BivarPoly operator*(const Rat& s, const BivarPoly& p) { return p * s; }

}  // namespace virpstr

#endif
