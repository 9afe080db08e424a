#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "shuffles/lacunar.hpp"
#include "shuffles/partition.hpp"

namespace shuffles {

// Finite integer combination of Schur functions, keyed by partition.
using SchurExpansion = std::map<Partition, long long>;

inline SchurExpansion schur_unit() { return SchurExpansion{{Partition(), 1}}; }

inline SchurExpansion schur_single(const Partition& p) { return SchurExpansion{{p, 1}}; }

inline void schur_add(SchurExpansion& dst, const Partition& p, long long c) {
  auto it = dst.find(p);
  if (it == dst.end()) {
    if (c != 0) dst.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

inline SchurExpansion schur_sum(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion r = a;
  for (const auto& [p, c] : b) schur_add(r, p, c);
  return r;
}

namespace detail {

// All partitions obtained from p by adding a horizontal strip of size m:
// mu interlaces p (mu_1 >= p_1 >= mu_2 >= p_2 >= ...) with |mu| = |p| + m.
inline void horizontal_strip_adds(const Partition& p, int m, std::vector<Partition>& out) {
  const int rows = p.num_parts();
  std::vector<int> mu(rows + 1, 0);
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == rows + 1) {
      if (remaining == 0) {
        std::vector<int> parts;
        for (int i = 0; i <= rows; ++i)
          if (mu[i] > 0) parts.push_back(mu[i]);
        out.push_back(Partition(std::move(parts)));
      }
      return;
    }
    // mu[row] ranges over [p.part(row+1), min(p.part(row), ...)] with the
    // convention p.part(0) = infinity.
    int lo = p.part(row + 1);
    int hi = (row == 0) ? p.part(1) + remaining : p.part(row);
    for (int v = lo; v <= hi; ++v) {
      int add = v - p.part(row + 1);
      if (add > remaining) break;
      mu[row] = v;
      self(self, row + 1, remaining - add);
    }
    mu[row] = 0;
  };
  rec(rec, 0, m);
}

}  // namespace detail

// Multiplication by the complete homogeneous function of degree m: each Schur
// term spreads over its horizontal-strip extensions.
inline SchurExpansion pieri_mul_h(const SchurExpansion& f, int m) {
  if (m < 0) throw std::invalid_argument("pieri_mul_h: negative degree");
  if (m == 0) return f;
  SchurExpansion r;
  std::vector<Partition> strips;
  for (const auto& [p, c] : f) {
    strips.clear();
    detail::horizontal_strip_adds(p, m, strips);
    for (const Partition& mu : strips) schur_add(r, mu, c);
  }
  return r;
}

// Multiplication by z_m = h_{m-1} h_1 - h_m (the hook Schur function of shape
// (m-1, 1)); needs m > 1.
inline SchurExpansion mul_z(const SchurExpansion& f, int m) {
  if (m <= 1) throw std::invalid_argument("mul_z needs m > 1");
  SchurExpansion a = pieri_mul_h(pieri_mul_h(f, m - 1), 1);
  SchurExpansion b = pieri_mul_h(f, m);
  for (const auto& [p, c] : b) schur_add(a, p, -c);
  return a;
}

// The symmetric function attached to a lacunar set via its gap sequence:
// h_{j_1} * z_{j_2} * ... * z_{j_m}.
inline SchurExpansion z_of_lacunar(const LacunarSet& I) {
  GapDecomposition g = gap_decomposition(I);
  SchurExpansion r = schur_unit();
  r = pieri_mul_h(r, g.j_seq[0]);
  for (size_t k = 1; k < g.j_seq.size(); ++k) r = mul_z(r, g.j_seq[k]);
  return r;
}

inline long long schur_coeff(const SchurExpansion& f, const Partition& p) {
  auto it = f.find(p);
  return it == f.end() ? 0 : it->second;
}

inline long long c_coeff(const LacunarSet& I, const Partition& lambda) {
  if (lambda.size() != I.n)
    throw std::invalid_argument("c_coeff: partition size must equal the degree");
  return schur_coeff(z_of_lacunar(I), lambda);
}

namespace detail {

// Murnaghan-Nakayama on beta-sets.  beta holds L strictly decreasing entries
// representing lambda_i + (L - i), zeros padded.
inline long long mn_rec(std::set<int>& beta, const std::vector<int>& parts, size_t which) {
  if (which == parts.size()) return 1;
  const int r = parts[which];
  long long total = 0;
  std::vector<int> snapshot(beta.begin(), beta.end());
  for (int b : snapshot) {
    if (b < r || beta.count(b - r)) continue;
    int between = 0;
    for (int x : snapshot)
      if (b - r < x && x < b) ++between;
    beta.erase(b);
    beta.insert(b - r);
    long long sub = mn_rec(beta, parts, which + 1);
    beta.erase(b - r);
    beta.insert(b);
    total += (between % 2 == 0 ? sub : -sub);
  }
  return total;
}

}  // namespace detail

// Irreducible character value chi^lambda at the given cycle type.
inline long long mn_character(const Partition& lambda, const Partition& type) {
  if (lambda.size() != type.size())
    throw std::invalid_argument("mn_character: partition and cycle type have different sizes");
  const int L = std::max(1, lambda.size());
  std::set<int> beta;
  for (int i = 1; i <= L; ++i) beta.insert(lambda.part(i) + (L - i));
  return detail::mn_rec(beta, type.parts, 0);
}

}  // namespace shuffles
