#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shuffles/rational.hpp"

namespace shuffles {

// Sparse vector: entries sorted by index, all coefficients nonzero.
struct SparseVec {
  std::vector<std::pair<int, Rational>> e;

  bool is_zero() const { return e.empty(); }
  int leading() const {
    if (e.empty()) throw std::logic_error("leading index of zero vector");
    return e.front().first;
  }
  const Rational& leading_coeff() const { return e.front().second; }
  size_t support() const { return e.size(); }

  void scale(const Rational& s) {
    if (s == 0) {
      e.clear();
      return;
    }
    for (auto& [i, c] : e) c *= s;
  }

  Rational coeff(int idx) const {
    auto it = std::lower_bound(e.begin(), e.end(), idx,
                               [](const auto& p, int v) { return p.first < v; });
    if (it != e.end() && it->first == idx) return it->second;
    return Rational(0);
  }

  bool operator==(const SparseVec& o) const { return e == o.e; }
};

// dst += s * src, merging sorted supports.
inline void sparse_axpy(SparseVec& dst, const Rational& s, const SparseVec& src) {
  if (s == 0 || src.is_zero()) return;
  std::vector<std::pair<int, Rational>> out;
  out.reserve(dst.e.size() + src.e.size());
  size_t i = 0, j = 0;
  while (i < dst.e.size() || j < src.e.size()) {
    if (j == src.e.size() || (i < dst.e.size() && dst.e[i].first < src.e[j].first)) {
      out.push_back(std::move(dst.e[i++]));
    } else if (i == dst.e.size() || src.e[j].first < dst.e[i].first) {
      out.emplace_back(src.e[j].first, s * src.e[j].second);
      ++j;
    } else {
      Rational c = dst.e[i].second + s * src.e[j].second;
      if (c != 0) out.emplace_back(dst.e[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  dst.e = std::move(out);
}

// Builds a sparse vector from unsorted (index, coeff) terms, combining duplicates.
inline SparseVec sparse_from_terms(std::vector<std::pair<int, Rational>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec v;
  v.e.reserve(terms.size());
  for (auto& [i, c] : terms) {
    if (!v.e.empty() && v.e.back().first == i)
      v.e.back().second += c;
    else
      v.e.emplace_back(i, std::move(c));
  }
  std::erase_if(v.e, [](const auto& p) { return p.second == 0; });
  return v;
}

// Row echelon structure grown incrementally and never back-substituted, so the
// first r rows at any point stay a basis of the span at that point.  Each row
// is normalized to leading coefficient 1; leading indices are distinct but the
// insertion order is arbitrary, which keeps earlier rows immutable while later
// spaces are stacked on top.
struct Echelon {
  std::vector<SparseVec> rows;
  std::map<int, size_t> by_pivot;  // leading index -> position in rows

  size_t rank() const { return rows.size(); }

  // Reduces v against rows[0..limit).  Returns the remainder; if coeffs is
  // given, records the multiplier applied to each used row (by row position),
  // i.e. v = sum coeffs[pos] * rows[pos] + remainder.
  SparseVec reduce(SparseVec v, size_t limit,
                   std::vector<std::pair<size_t, Rational>>* coeffs = nullptr) const {
    while (!v.is_zero()) {
      auto it = by_pivot.find(v.leading());
      if (it == by_pivot.end() || it->second >= limit) break;
      const size_t pos = it->second;
      Rational c = v.leading_coeff();  // rows are monic at their pivot
      if (coeffs) coeffs->emplace_back(pos, c);
      sparse_axpy(v, -c, rows[pos]);
    }
    return v;
  }

  SparseVec reduce(SparseVec v) const { return reduce(std::move(v), rows.size()); }

  bool member(SparseVec v, size_t limit) const { return reduce(std::move(v), limit).is_zero(); }
  bool member(SparseVec v) const { return member(std::move(v), rows.size()); }

  // Inserts v if independent of the current rows; returns true if rank grew.
  bool insert(SparseVec v) {
    v = reduce(std::move(v), rows.size());
    if (v.is_zero()) return false;
    v.scale(Rational(1) / v.leading_coeff());
    by_pivot[v.leading()] = rows.size();
    rows.push_back(std::move(v));
    return true;
  }
};

}  // namespace shuffles
