#include "virpstr/partitions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace virpstr {

std::string Partition::to_string() const {
  if (parts.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out += "L(-" + std::to_string(parts[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

void gen(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int first = 1; first <= std::min(n, maxp); ++first) {
    cur.push_back(first);
    gen(n - first, first, cur, out);
    cur.pop_back();
  }
}

std::mutex g_mutex;
std::map<int, std::vector<Partition>> g_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_cache.find(n);
  if (it != g_cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, cur, out);
  // Generation emits non-increasing part lists in lexicographic order,
  // which is the canonical basis order.
  return g_cache.emplace(n, std::move(out)).first->second;
}

long partition_count(int n) {
  if (n < 0) return 0;
  return static_cast<long>(partitions_of(n).size());
}

int partition_index(const Partition& p) {
  const auto& all = partitions_of(p.weight());
  auto it = std::lower_bound(all.begin(), all.end(), p);
  if (it == all.end() || !(*it == p)) throw std::logic_error("partition_index: not a canonical partition");
  return static_cast<int>(it - all.begin());
}

}  // namespace virpstr
