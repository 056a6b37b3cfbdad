#include "virpstr/shapovalov.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "virpstr/parallel.hpp"

namespace virpstr {

namespace {
std::mutex g_gram_mutex;
std::map<int, GramMatrix> g_gram_cache;
}  // namespace

const GramMatrix& gram_matrix(int degree) {
  if (degree < 1) throw std::invalid_argument("gram_matrix: degree must be >= 1");
  {
    std::lock_guard<std::mutex> lock(g_gram_mutex);
    auto it = g_gram_cache.find(degree);
    if (it != g_gram_cache.end()) return it->second;
  }
  GramMatrix g;
  g.degree = degree;
  g.basis = partitions_of(degree);
  int n = static_cast<int>(g.basis.size());
  g.matrix = PolyMatrix(n, n);
  // Upper triangle only; the form is contravariant, hence symmetric.
  std::vector<std::pair<int, int>> jobs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) jobs.emplace_back(i, j);
  parallel_for(static_cast<int>(jobs.size()), [&](int idx) {
    auto [i, j] = jobs[idx];
    g.matrix.at(i, j) = shapovalov_entry(g.basis[i], g.basis[j]);
  });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) g.matrix.at(i, j) = g.matrix.at(j, i);
  std::lock_guard<std::mutex> lock(g_gram_mutex);
  return g_gram_cache.emplace(degree, std::move(g)).first->second;
}

BivarPoly phi(int r, int s) {
  auto factor = [&](int a) {
    BivarPoly f = BivarPoly::var_h();
    f += (BivarPoly::var_c() - BivarPoly(Rat(13))) * Rat(static_cast<long>(a) * a - 1, 24);
    f += BivarPoly(Rat(static_cast<long>(r) * s - 1, 2));
    return f;
  };
  BivarPoly out = factor(r) * factor(s);
  long d = static_cast<long>(r) * r - static_cast<long>(s) * s;
  out += BivarPoly(Rat(d * d, 16));
  return out;
}

BivarPoly sqrt_phi(int a) {
  return BivarPoly::var_h() +
         (BivarPoly::var_c() - BivarPoly(Rat(1))) * Rat(static_cast<long>(a) * a - 1, 24);
}

Rat c_of_t(const Rat& t) {
  if (t == 0) throw std::domain_error("c_of_t: t must be nonzero");
  return Rat(13) + 6 * t + 6 / t;
}

Rat h_rs_of_t(int r, int s, const Rat& t) {
  if (t == 0) throw std::domain_error("h_rs_of_t: t must be nonzero");
  return Rat(1 - static_cast<long>(r) * r, 4) * t + Rat(1 - static_cast<long>(r) * s, 2) +
         Rat(1 - static_cast<long>(s) * s, 4) / t;
}

KacDetResult kac_det_formula(int degree) {
  KacDetResult out;
  out.degree = degree;
  out.determinant = fraction_free_det(gram_matrix(degree).matrix);
  BivarPoly prod(Rat(1));
  for (int a = 1; a * a <= degree; ++a) prod *= sqrt_phi(a).pow(static_cast<int>(partition_count(degree - a * a)));
  for (int a = 1; a <= degree; ++a)
    for (int b = a + 1; a * b <= degree; ++b)
      prod *= phi(b, a).pow(static_cast<int>(partition_count(degree - a * b)));
  out.product = prod;
  auto q = out.determinant.div_exact(prod);
  if (q && q->is_constant() && !q->is_zero()) {
    out.constant = q->constant_value();
    out.exact = true;
  }
  return out;
}

std::vector<std::pair<int, int>> curves_through(const Rat& c, const Rat& h, int bound) {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s * s <= bound; ++s) {
    for (int r = s; r * s <= bound; ++r) {
      bool on;
      if (r == s)
        on = sqrt_phi(r).eval(c, h) == 0;
      else
        on = phi(r, s).eval(c, h) == 0;
      if (on) out.emplace_back(r, s);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long pa = static_cast<long>(a.first) * a.second, pb = static_cast<long>(b.first) * b.second;
    if (pa != pb) return pa < pb;
    return a.first < b.first;
  });
  return out;
}

}  // namespace virpstr
