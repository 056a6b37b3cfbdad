#ifndef VIRPSTR_RAT_HPP
#define VIRPSTR_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace virpstr {

// Arbitrary-precision rational, always reduced, denominator > 0.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Strict "p" or "p/q" parser (optional leading '-'). Returns nullopt on
// malformed input; never throws.
std::optional<Rat> rat_from_string(const std::string& s);

// "p/q", with "/q" omitted when q == 1.
std::string rat_to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor of the difference a - b when it is integral; nullopt otherwise.
std::optional<long> integer_difference(const Rat& a, const Rat& b);

Rat rat_pow(const Rat& base, int exp);

Rat factorial(int n);
Rat binomial(int n, int k);

}  // namespace virpstr

#endif
