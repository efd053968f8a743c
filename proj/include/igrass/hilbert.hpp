#pragma once

#include "igrass/bigint.hpp"
#include "igrass/classify.hpp"
#include "igrass/error.hpp"
#include "igrass/grading.hpp"
#include "igrass/linalg.hpp"
#include "igrass/plucker.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace igrass {

/// lambda with lambda . w >= 1 for every generator weight.
///
/// Scans primitive functionals with coordinates bounded by 2M + 2 (M the largest absolute
/// weight coordinate); smallest L1 norm wins, ties go to the larger first, then second, entry.
inline Weight positivity_certificate(const GradingData& g) {
  if (!is_pointed(g)) fail(ErrorCode::NoCertificate, "grading is not pointed");
  const auto ws = g.all_weights();
  std::int64_t big = 0;
  for (const Weight& w : ws) big = std::max({big, std::abs(w.x), std::abs(w.y)});
  const std::int64_t bound = 2 * big + 2;
  std::optional<Weight> best;
  auto better = [](Weight a, Weight b) {
    const auto na = std::abs(a.x) + std::abs(a.y);
    const auto nb = std::abs(b.x) + std::abs(b.y);
    if (na != nb) return na < nb;
    if (a.x != b.x) return a.x > b.x;
    return a.y > b.y;
  };
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b) {
      const Weight l{a, b};
      if (l.is_zero() || gcd_of(l) != 1) continue;
      if (!std::all_of(ws.begin(), ws.end(), [&](Weight w) { return dot(l, w) >= 1; })) continue;
      if (!best || better(l, *best)) best = l;
    }
  if (!best) fail(ErrorCode::NoCertificate, "no positive functional within the search bound");
  return *best;
}

/// The pairs (i,j) under (i,j) <= (i',j') iff i <= i' and j <= j', with their weights.
class ColumnPoset {
 public:
  explicit ColumnPoset(const GradingData& g) : pairs_(lex_pairs(g.n())) {
    for (const auto& p : pairs_) weights_.push_back(g.t(p));
    above_.resize(pairs_.size());
    for (std::size_t c = 0; c < pairs_.size(); ++c)
      for (std::size_t d = 0; d < pairs_.size(); ++d)
        if (pairs_[c].precedes(pairs_[d])) above_[c].push_back(d);
  }

  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] const PairIndex& pair(std::size_t c) const { return pairs_[c]; }
  [[nodiscard]] Weight weight(std::size_t c) const { return weights_[c]; }
  /// Elements c' with c <= c', c included.
  [[nodiscard]] const std::vector<std::size_t>& above(std::size_t c) const { return above_[c]; }

 private:
  std::vector<PairIndex> pairs_;
  std::vector<Weight> weights_;
  std::vector<std::vector<std::size_t>> above_;
};

/// Number of multichains c_1 <= ... <= c_s with total weight target.
///
/// f(c, w) counts chains whose elements all lie above c and sum to w; lambda . w >= 0 bounds the table.
inline BigInt chain_count(const ColumnPoset& poset, Weight target, Weight lambda) {
  std::map<std::tuple<std::size_t, std::int64_t, std::int64_t>, BigInt> memo;
  auto f = [&](auto&& self, std::size_t c, Weight w) -> BigInt {
    if (dot(lambda, w) < 0) return 0;
    const auto key = std::tuple{c, w.x, w.y};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = w.is_zero() ? 1 : 0;
    for (std::size_t d : poset.above(c)) {
      const Weight rest = w - poset.weight(d);
      if (dot(lambda, rest) >= 0) total += self(self, d, rest);
    }
    memo.emplace(key, total);
    return total;
  };
  BigInt total = target.is_zero() ? 1 : 0;
  for (std::size_t c = 0; c < poset.size(); ++c) {
    const Weight rest = target - poset.weight(c);
    if (dot(lambda, rest) >= 0) total += f(f, c, rest);
  }
  return total;
}

namespace detail {

/// Number of exponent vectors for each reachable free degree w with lambda . w <= limit.
inline std::map<Weight, BigInt> free_distribution(const std::vector<Weight>& s_weights, Weight lambda,
                                                  std::int64_t limit) {
  std::map<Weight, BigInt> dist{{Weight{}, BigInt(1)}};
  for (const Weight& w : s_weights) {
    if (dot(lambda, w) < 1) fail(ErrorCode::Precondition, "certificate is not positive on " + to_string(w));
    std::map<Weight, BigInt> next;
    for (const auto& [p, count] : dist)
      for (Weight q = p; dot(lambda, q) <= limit; q += w) next[q] += count;
    dist = std::move(next);
  }
  return dist;
}

}  // namespace detail

inline BigInt free_count(const std::vector<Weight>& s_weights, Weight target, Weight lambda) {
  const auto dist = detail::free_distribution(s_weights, lambda, dot(lambda, target));
  const auto it = dist.find(target);
  return it == dist.end() ? BigInt(0) : it->second;
}

/// dim R_target as the number of standard monomials of degree target.
inline BigInt graded_dim(const GradingData& g, Weight target) {
  if (!is_homogeneous(g)) fail(ErrorCode::Precondition, "graded dimension needs a homogeneous grading");
  if (!is_pointed(g)) fail(ErrorCode::Precondition, "graded dimension needs a pointed grading");
  const Weight lambda = positivity_certificate(g);
  const auto limit = dot(lambda, target);
  if (limit < 0) return 0;
  const ColumnPoset poset(g);
  BigInt total = 0;
  for (const auto& [w, count] : detail::free_distribution(g.s_weights(), lambda, limit))
    total += count * chain_count(poset, target - w, lambda);
  return total;
}

/// Exponent vectors over the columns of Q (pairs in lex order, then free variables).
using Exponents = std::vector<unsigned>;

/// All monomials of degree target; lambda must be positive on every column.
inline std::vector<Exponents> monomials_of_degree(const GradingData& g, Weight target, Weight lambda) {
  const auto ws = g.all_weights();
  std::vector<Exponents> out;
  Exponents e(ws.size(), 0);
  auto rec = [&](auto&& self, std::size_t c, Weight rest) -> void {
    if (c == ws.size()) {
      if (rest.is_zero()) out.push_back(e);
      return;
    }
    for (unsigned k = 0;; ++k) {
      e[c] = k;
      self(self, c + 1, rest);
      rest -= ws[c];
      if (dot(lambda, rest) < 0) break;
    }
    e[c] = 0;
  };
  if (dot(lambda, target) >= 0) rec(rec, 0, target);
  return out;
}

inline Monomial to_monomial(const GradingData& g, const Exponents& e) {
  Monomial m;
  const auto pairs = lex_pairs(g.n());
  for (std::size_t c = 0; c < pairs.size(); ++c) m.multiply(pairs[c], e[c]);
  m.s_exponents.assign(e.begin() + static_cast<std::ptrdiff_t>(pairs.size()), e.end());
  return m;
}

inline Exponents to_exponents(const GradingData& g, const Monomial& m) {
  Exponents e(static_cast<std::size_t>(g.columns()), 0);
  for (const auto& [p, k] : m.t_exponents) e[static_cast<std::size_t>(checked_lex_position(p, g.n()))] = k;
  for (std::size_t l = 0; l < m.s_exponents.size(); ++l) {
    if (static_cast<int>(l) >= g.m()) {
      if (m.s_exponents[l] != 0) fail(ErrorCode::InvalidParameter, "monomial uses more free variables than the grading");
      continue;
    }
    e[static_cast<std::size_t>(pair_count(g.n())) + l] = m.s_exponents[l];
  }
  return e;
}

/// The homogeneous component of I_{2,n} at target, spanned by mu * g_I.
///
/// column_of maps a monomial of degree target to its column in the returned rows.
template <class ColumnOf>
std::vector<SparseRow> ideal_component(const GradingData& g, Weight target, Weight lambda, ColumnOf&& column_of) {
  std::vector<SparseRow> rows;
  for_each_quadruple(g.n(), [&](const Quad& q) {
    const auto rel = relation(q);
    const Weight deg = g.t(rel.terms[0].left) + g.t(rel.terms[0].right);
    for (const auto& mu : monomials_of_degree(g, target - deg, lambda)) {
      SparseRow row;
      for (const auto& term : rel.terms) {
        Exponents e = mu;
        ++e[static_cast<std::size_t>(lex_position(term.left, g.n()))];
        ++e[static_cast<std::size_t>(lex_position(term.right, g.n()))];
        row.emplace_back(column_of(e), BigInt(term.sign));
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  });
  return rows;
}

/// Bound on lambda . target for the dense oracle; GRASS_ORACLE_BOUND overrides the default 8.
inline std::int64_t oracle_bound() {
  if (const char* env = std::getenv("GRASS_ORACLE_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return v;
  }
  return 8;
}

/// dim R_target = (number of monomials) - rank of the ideal component, by exact elimination.
inline BigInt graded_dim_oracle(const GradingData& g, Weight target, std::int64_t bound = oracle_bound()) {
  if (!is_homogeneous(g)) fail(ErrorCode::Precondition, "oracle needs a homogeneous grading");
  const Weight lambda = positivity_certificate(g);
  const auto size = dot(lambda, target);
  if (size > bound)
    fail(ErrorCode::OracleTooLarge,
         "lambda . target = " + std::to_string(size) + " exceeds the oracle bound " + std::to_string(bound));
  const auto monos = monomials_of_degree(g, target, lambda);
  std::map<Exponents, std::size_t> index;
  for (std::size_t c = 0; c < monos.size(); ++c) index.emplace(monos[c], c);
  SparseEchelon ech;
  for (auto& row : ideal_component(g, target, lambda, [&](const Exponents& e) { return index.at(e); }))
    ech.insert(std::move(row));
  return BigInt(monos.size() - ech.rank());
}

inline BigInt h0_anticanonical(const TypedVariety& v) {
  const auto built = build(v);
  return graded_dim(built.grading, anticanonical(built.grading));
}

}  // namespace igrass
