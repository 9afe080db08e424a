#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace shuffles {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (of 0) has no parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  void validate() const {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int num_parts() const { return static_cast<int>(parts.size()); }
  int part(int i) const {  // 1-based, 0 beyond the last part
    return (i >= 1 && i <= num_parts()) ? parts[i - 1] : 0;
  }

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts < o.parts; }  // lex
};

inline std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts[i]);
  }
  return s + ")";
}

// All partitions of n in descending lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.emplace_back();
      out.back().parts = cur;
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

inline Partition conjugate_partition(const Partition& p) {
  std::vector<int> c;
  for (int col = 1; col <= p.part(1); ++col) {
    int h = 0;
    while (h < p.num_parts() && p.parts[h] >= col) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

// Number of standard Young tableaux by the hook length formula.
inline long long count_syt(const Partition& p) {
  Partition conj = conjugate_partition(p);
  __int128 fact = 1, hookprod = 1;
  int cell = 0;
  for (int i = 1; i <= p.num_parts(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      fact *= ++cell;
      hookprod *= (p.part(i) - j) + (conj.part(j) - i) + 1;
    }
  return static_cast<long long>(fact / hookprod);
}

}  // namespace shuffles
