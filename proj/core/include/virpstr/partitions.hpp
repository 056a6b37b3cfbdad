#ifndef VIRPSTR_PARTITIONS_HPP
#define VIRPSTR_PARTITIONS_HPP

#include <string>
#include <vector>

#include "virpstr/rat.hpp"

namespace virpstr {

// Integer partition with non-increasing parts; encodes the PBW monomial
// L_{-n_1} ... L_{-n_m} with n_1 >= ... >= n_m.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int weight() const {
    int w = 0;
    for (int p : parts) w += p;
    return w;
  }
  bool empty() const { return parts.empty(); }
  std::size_t size() const { return parts.size(); }

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  // Canonical basis order: ascending by largest part, ties broken
  // recursively on the remainder. All-ones first, [n] last.
  bool operator<(const Partition& o) const { return parts < o.parts; }

  // "L(-3)L(-2)L(-1)^2"; "1" for the empty partition.
  std::string to_string() const;
};

// All partitions of n in canonical order; cached. |result| = p(n).
const std::vector<Partition>& partitions_of(int n);

// p(n), with p(n) = 0 for n < 0.
long partition_count(int n);

// Index of p in partitions_of(p.weight()).
int partition_index(const Partition& p);

}  // namespace virpstr

#endif
