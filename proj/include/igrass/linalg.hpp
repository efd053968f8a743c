#pragma once

#include "igrass/bigint.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace igrass {

/// Sparse integer vector: (column, nonzero value) sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

namespace detail {

/// lhs_scale * lhs - rhs_scale * rhs.
inline SparseRow combine(const BigInt& lhs_scale, const SparseRow& lhs, const BigInt& rhs_scale, const SparseRow& rhs) {
  SparseRow out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < lhs.size() || b < rhs.size()) {
    if (b == rhs.size() || (a < lhs.size() && lhs[a].first < rhs[b].first)) {
      out.emplace_back(lhs[a].first, lhs_scale * lhs[a].second);
      ++a;
    } else if (a == lhs.size() || rhs[b].first < lhs[a].first) {
      out.emplace_back(rhs[b].first, -rhs_scale * rhs[b].second);
      ++b;
    } else {
      BigInt v = lhs_scale * lhs[a].second - rhs_scale * rhs[b].second;
      if (v != 0) out.emplace_back(lhs[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

inline BigInt content(const SparseRow& row) {
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

}  // namespace detail

/// Fraction-free row echelon form over Z, rows kept primitive.
class SparseEchelon {
 public:
  /// Adds a row; returns true if the rank grew.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      const SparseRow& pivot = it->second;
      row = detail::combine(pivot.front().second, row, row.front().second, pivot);
      normalize(row);
    }
    if (row.empty()) return false;
    normalize(row);
    const std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

  /// Clears every pivot column of v. Returns (scale, r) with scale * v - r in the row space, scale != 0.
  [[nodiscard]] std::pair<BigInt, SparseRow> reduce(SparseRow v) const {
    BigInt scale = 1;
    std::size_t cursor = 0;
    for (;;) {
      std::size_t pos = 0;
      while (pos < v.size() && (v[pos].first < cursor || !pivots_.contains(v[pos].first))) ++pos;
      if (pos == v.size()) break;
      const std::size_t col = v[pos].first;
      const SparseRow& pivot = pivots_.at(col);
      const BigInt lead = pivot.front().second;
      const BigInt coeff = v[pos].second;
      v = detail::combine(lead, v, coeff, pivot);
      scale *= lead;
      BigInt g = boost::multiprecision::gcd(detail::content(v), scale);
      if (g > 1) {
        for (auto& [c, x] : v) x /= g;
        scale /= g;
      }
      cursor = col + 1;
    }
    return {scale, v};
  }

  [[nodiscard]] bool in_row_space(const SparseRow& v) const { return reduce(v).second.empty(); }

 private:
  static void normalize(SparseRow& row) {
    const BigInt g = detail::content(row);
    if (g > 1)
      for (auto& [c, x] : row) x /= g;
  }

  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace igrass
