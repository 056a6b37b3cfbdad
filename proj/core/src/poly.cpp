#include "virpstr/poly.hpp"

#include <algorithm>
#include <vector>

namespace virpstr {

BivarPoly BivarPoly::monomial(int ec, int eh, const Rat& coeff) {
  BivarPoly p;
  p.add_term(ec, eh, coeff);
  return p;
}

bool BivarPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0};
}

Rat BivarPoly::constant_value() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BivarPoly::degree_h() const {
  int d = 0;
  for (const auto& [e, coeff] : terms_) d = std::max(d, e.second);
  return d;
}

int BivarPoly::degree_c() const {
  int d = 0;
  for (const auto& [e, coeff] : terms_) d = std::max(d, e.first);
  return d;
}

void BivarPoly::add_term(int ec, int eh, const Rat& coeff) {
  if (coeff == 0) return;
  Exp e{ec, eh};
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, coeff] : o.terms_) add_term(e.first, e.second, coeff);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [e, coeff] : o.terms_) add_term(e.first, e.second, -coeff);
  return *this;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly out = *this;
  out += o;
  return out;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  BivarPoly out = *this;
  out -= o;
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, -coeff);
  return out;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) {
  *this = *this * o;
  return *this;
}

BivarPoly BivarPoly::operator*(const Rat& s) const {
  BivarPoly out;
  if (s == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * s);
  return out;
}

BivarPoly BivarPoly::pow(int e) const {
  BivarPoly out(Rat(1));
  BivarPoly b = *this;
  while (e > 0) {
    if (e & 1) out *= b;
    if (e >>= 1) b *= b;
  }
  return out;
}

BivarPoly BivarPoly::diff_h(int order) const {
  BivarPoly cur = *this;
  for (int n = 0; n < order; ++n) {
    BivarPoly next;
    for (const auto& [e, coeff] : cur.terms_) {
      if (e.second == 0) continue;
      next.add_term(e.first, e.second - 1, coeff * e.second);
    }
    cur = std::move(next);
  }
  return cur;
}

Rat BivarPoly::eval(const Rat& c, const Rat& h) const {
  Rat out = 0;
  for (const auto& [e, coeff] : terms_) out += coeff * rat_pow(c, e.first) * rat_pow(h, e.second);
  return out;
}

namespace {

// (e_h, e_c) graded-free lex order used for leading terms and printing.
bool term_order_less(const BivarPoly::Exp& a, const BivarPoly::Exp& b) {
  if (a.second != b.second) return a.second < b.second;
  return a.first < b.first;
}

}  // namespace

std::optional<BivarPoly> BivarPoly::div_exact(const BivarPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  BivarPoly rem = *this;
  BivarPoly quot;
  auto lead = [](const BivarPoly& p) {
    auto best = p.terms_.begin();
    for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
      if (term_order_less(best->first, it->first)) best = it;
    return best;
  };
  const auto dlead = lead(divisor);
  while (!rem.is_zero()) {
    auto rlead = lead(rem);
    int ec = rlead->first.first - dlead->first.first;
    int eh = rlead->first.second - dlead->first.second;
    if (ec < 0 || eh < 0) return std::nullopt;
    BivarPoly t = monomial(ec, eh, rlead->second / dlead->second);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exp, Rat>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    return term_order_less(b.first, a.first);  // descending
  });
  std::string out;
  bool first = true;
  for (const auto& [e, coeff] : ts) {
    Rat a = coeff;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    if (e.first > 0) {
      mono = "c";
      if (e.first > 1) mono += "^" + std::to_string(e.first);
    }
    if (e.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += "h";
      if (e.second > 1) mono += "^" + std::to_string(e.second);
    }
    if (mono.empty()) {
      out += rat_to_string(a);
    } else if (a == 1) {
      out += mono;
    } else if (a.get_num() == 1) {
      out += mono + "/" + a.get_den().get_str();
    } else if (a.get_den() == 1) {
      out += a.get_num().get_str() + "*" + mono;
    } else {
      out += rat_to_string(a) + "*" + mono;
    }
  }
  return out;
}

}  // namespace virpstr
