#include "virpstr/virasoro.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace virpstr {

std::string VirWord::to_string() const {
  if (modes.empty()) return "1";
  std::string out;
  for (int n : modes) out += "L(" + std::to_string(n) + ")";
  return out;
}

VirWord word_of(const Partition& p) {
  VirWord w;
  w.modes.reserve(p.size());
  for (int n : p.parts) w.modes.push_back(-n);
  return w;
}

VirWord adjoint(const VirWord& w) {
  VirWord out;
  out.modes.reserve(w.modes.size());
  for (auto it = w.modes.rbegin(); it != w.modes.rend(); ++it) out.modes.push_back(-*it);
  return out;
}

void lw_add(LWVectorExpr& e, const Partition& p, const BivarPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = e.find(p);
  if (it == e.end()) {
    e.emplace(p, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) e.erase(it);
  }
}

LWVectorExpr lw_scale(const LWVectorExpr& e, const BivarPoly& s) {
  LWVectorExpr out;
  if (s.is_zero()) return out;
  for (const auto& [p, coeff] : e) out.emplace(p, coeff * s);
  return out;
}

LWVectorExpr lw_sum(const LWVectorExpr& a, const LWVectorExpr& b) {
  LWVectorExpr out = a;
  for (const auto& [p, coeff] : b) lw_add(out, p, coeff);
  return out;
}

std::string lw_to_string(const LWVectorExpr& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, coeff] : e) {
    std::string cs = coeff.to_string();
    bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(" - ") == std::string::npos &&
               cs.find(" + ") == std::string::npos;
    if (first) {
      first = false;
      if (neg) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      if (neg) {
        out += " - ";
        cs = cs.substr(1);
      } else {
        out += " + ";
      }
    }
    bool atom = cs.find(' ') == std::string::npos;
    if (p.empty()) {
      out += atom ? cs : "(" + cs + ")";
    } else if (cs == "1") {
      out += p.to_string();
    } else {
      out += (atom ? cs : "(" + cs + ")") + "*" + p.to_string();
    }
  }
  return out;
}

namespace {

std::mutex g_memo_mutex;
std::map<std::pair<int, Partition>, LWVectorExpr> g_apply_pos_memo;
std::map<std::pair<Partition, Partition>, BivarPoly> g_entry_memo;

LWVectorExpr apply_pos(int n, const Partition& p);

// L_{-m} L_{-p0} = L_{-p0} L_{-m} + (p0 - m) L_{-(m+p0)}
LWVectorExpr insert_neg(int m, const Partition& p) {
  if (p.empty() || m >= p.parts[0]) {
    Partition q;
    q.parts.reserve(p.size() + 1);
    q.parts.push_back(m);
    q.parts.insert(q.parts.end(), p.parts.begin(), p.parts.end());
    LWVectorExpr out;
    out.emplace(std::move(q), BivarPoly(Rat(1)));
    return out;
  }
  int p0 = p.parts[0];
  Partition rest(std::vector<int>(p.parts.begin() + 1, p.parts.end()));
  LWVectorExpr out;
  for (const auto& [mono, coeff] : insert_neg(m, rest)) {
    Partition q;
    q.parts.reserve(mono.size() + 1);
    q.parts.push_back(p0);
    q.parts.insert(q.parts.end(), mono.parts.begin(), mono.parts.end());
    lw_add(out, q, coeff);
  }
  for (const auto& [mono, coeff] : insert_neg(m + p0, rest)) lw_add(out, mono, coeff * Rat(p0 - m));
  return out;
}

LWVectorExpr apply_pos_uncached(int n, const Partition& p) {
  if (p.empty()) return {};
  int p0 = p.parts[0];
  Partition rest(std::vector<int>(p.parts.begin() + 1, p.parts.end()));
  LWVectorExpr out;
  // L_n L_{-p0} = L_{-p0} L_n + (n + p0) L_{n-p0} + delta_{n,p0} (n^3-n)/12 c
  for (const auto& [mono, coeff] : apply_pos(n, rest))
    for (const auto& [m2, c2] : insert_neg(p0, mono)) lw_add(out, m2, coeff * c2);
  int k = n - p0;
  Rat f(n + p0);
  if (k > 0) {
    for (const auto& [mono, coeff] : apply_pos(k, rest)) lw_add(out, mono, coeff * f);
  } else if (k == 0) {
    BivarPoly l0 = BivarPoly::var_h() + BivarPoly(Rat(rest.weight()));
    lw_add(out, rest, l0 * f);
    lw_add(out, rest, BivarPoly::var_c() * Rat(static_cast<long>(n) * n * n - n, 12));
  } else {
    for (const auto& [mono, coeff] : insert_neg(-k, rest)) lw_add(out, mono, coeff * f);
  }
  return out;
}

LWVectorExpr apply_pos(int n, const Partition& p) {
  std::pair<int, Partition> key{n, p};
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_apply_pos_memo.find(key);
    if (it != g_apply_pos_memo.end()) return it->second;
  }
  LWVectorExpr out = apply_pos_uncached(n, p);
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  return g_apply_pos_memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

LWVectorExpr lower_by_mode(int m, const Partition& p) { return insert_neg(m, p); }

LWVectorExpr multiply_monomial(const Partition& b, const LWVectorExpr& v) {
  LWVectorExpr cur = v;
  for (auto it = b.parts.rbegin(); it != b.parts.rend(); ++it) {
    LWVectorExpr next;
    for (const auto& [p, coeff] : cur)
      for (const auto& [m2, c2] : insert_neg(*it, p)) lw_add(next, m2, coeff * c2);
    cur = std::move(next);
  }
  return cur;
}

LWVectorExpr act_on_lw(const VirWord& w, const LWVectorExpr& v) {
  LWVectorExpr cur = v;
  for (auto it = w.modes.rbegin(); it != w.modes.rend(); ++it) {
    int n = *it;
    LWVectorExpr next;
    if (n == 0) {
      for (const auto& [p, coeff] : cur) {
        BivarPoly l0 = BivarPoly::var_h() + BivarPoly(Rat(p.weight()));
        lw_add(next, p, coeff * l0);
      }
    } else if (n < 0) {
      for (const auto& [p, coeff] : cur)
        for (const auto& [m2, c2] : insert_neg(-n, p)) lw_add(next, m2, coeff * c2);
    } else {
      for (const auto& [p, coeff] : cur)
        for (const auto& [m2, c2] : apply_pos(n, p)) lw_add(next, m2, coeff * c2);
    }
    cur = std::move(next);
  }
  return cur;
}

BivarPoly shapovalov_entry(const Partition& b_i, const Partition& b_j) {
  if (b_i.weight() != b_j.weight())
    throw std::invalid_argument("shapovalov_entry: weight mismatch");
  std::pair<Partition, Partition> key{b_i, b_j};
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_entry_memo.find(key);
    if (it != g_entry_memo.end()) return it->second;
  }
  LWVectorExpr start;
  start.emplace(b_j, BivarPoly(Rat(1)));
  LWVectorExpr res = act_on_lw(adjoint(word_of(b_i)), start);
  BivarPoly out;
  auto it = res.find(Partition{});
  if (it != res.end()) out = it->second;
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  return g_entry_memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace virpstr
