#include "virpstr/rat.hpp"

#include <cctype>

namespace virpstr {

std::optional<Rat> rat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '-') {
    neg = true;
    ++i;
  } else if (s[i] == '+') {
    ++i;
  }
  auto read_digits = [&](std::string& out) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
    return !out.empty();
  };
  std::string num, den;
  if (!read_digits(num)) return std::nullopt;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    ++i;
    if (!read_digits(den)) return std::nullopt;
    if (i != s.size()) return std::nullopt;
  }
  mpz_class n(num), d(den.empty() ? "1" : den);
  if (d == 0) return std::nullopt;
  if (neg) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<long> integer_difference(const Rat& a, const Rat& b) {
  Rat d = a - b;
  if (d.get_den() != 1) return std::nullopt;
  if (!d.get_num().fits_slong_p()) return std::nullopt;
  return d.get_num().get_si();
}

Rat rat_pow(const Rat& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero base, negative exponent");
    return 1 / rat_pow(base, -exp);
  }
  Rat out = 1;
  Rat b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

Rat factorial(int n) {
  Rat out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rat out = 1;
  for (int i = 0; i < k; ++i) {
    out *= (n - i);
    out /= (i + 1);
  }
  return out;
}

}  // namespace virpstr
