#pragma once

#include "igrass/bigint.hpp"
#include "igrass/error.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace igrass {

/// Subscript of a Plücker variable T_ij, 1 <= i < j.
struct PairIndex {
  int i{1};
  int j{2};

  friend constexpr auto operator<=>(const PairIndex&, const PairIndex&) = default;

  /// Componentwise order of the column poset.
  [[nodiscard]] constexpr bool precedes(const PairIndex& o) const { return i <= o.i && j <= o.j; }
};

inline std::ostream& operator<<(std::ostream& os, const PairIndex& p) {
  return os << 'T' << p.i << p.j;
}

/// Pair with range checking against n.
inline PairIndex make_pair_index(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    fail(ErrorCode::InvalidParameter,
         "pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n=" + std::to_string(n));
  return {i, j};
}

using Quad = std::array<int, 4>;

/// Advances to the next strictly increasing quadruple in [1,n], lexicographically.
inline bool next_quadruple(Quad& q, int n) {
  for (int pos = 3; pos >= 0; --pos) {
    if (q[pos] < n - (3 - pos)) {
      ++q[pos];
      for (int r = pos + 1; r < 4; ++r) q[r] = q[r - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Calls f(quad) for every quadruple without materializing the list.
template <class F>
void for_each_quadruple(int n, F&& f) {
  if (n < 4) fail(ErrorCode::InvalidParameter, "quadruples need n >= 4, got " + std::to_string(n));
  Quad q{1, 2, 3, 4};
  do {
    f(static_cast<const Quad&>(q));
  } while (next_quadruple(q, n));
}

inline std::vector<Quad> quadruples(int n) {
  std::vector<Quad> out;
  for_each_quadruple(n, [&](const Quad& q) { out.push_back(q); });
  return out;
}

struct RelationTerm {
  int sign{1};
  PairIndex left;
  PairIndex right;
};

/// g_abcd = T_ab T_cd - T_ac T_bd + T_ad T_bc.
struct PluckerRelation {
  Quad quad{};
  std::array<RelationTerm, 3> terms{};
};

inline PluckerRelation relation(const Quad& q) {
  const auto [a, b, c, d] = q;
  if (!(1 <= a && a < b && b < c && c < d))
    fail(ErrorCode::InvalidParameter, "relation needs strictly increasing positive indices");
  return {q,
          {{{+1, {a, b}, {c, d}}, {-1, {a, c}, {b, d}}, {+1, {a, d}, {b, c}}}}};
}

inline std::string to_string(const PluckerRelation& r) {
  std::ostringstream os;
  for (std::size_t t = 0; t < r.terms.size(); ++t) {
    const auto& term = r.terms[t];
    if (t > 0) os << ' ';
    os << (term.sign > 0 ? '+' : '-') << term.left << '*' << term.right;
  }
  return os.str();
}

/// Monomial in the T_ij and S_l.
struct Monomial {
  std::map<PairIndex, unsigned> t_exponents;
  std::vector<unsigned> s_exponents;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  static Monomial of_pairs(std::initializer_list<PairIndex> pairs) {
    Monomial m;
    for (const auto& p : pairs) ++m.t_exponents[p];
    return m;
  }

  void multiply(const PairIndex& p, unsigned e = 1) {
    if (e != 0) t_exponents[p] += e;
  }

  /// Removes one factor T_p; the factor must be present.
  void divide(const PairIndex& p) {
    auto it = t_exponents.find(p);
    if (it == t_exponents.end()) fail(ErrorCode::Precondition, "monomial does not contain the factor");
    if (--it->second == 0) t_exponents.erase(it);
  }

  [[nodiscard]] unsigned t_degree() const {
    unsigned d = 0;
    for (const auto& [p, e] : t_exponents) d += e;
    return d;
  }

  /// The T-factors as a sorted list with repetition.
  [[nodiscard]] std::vector<PairIndex> pairs() const {
    std::vector<PairIndex> out;
    for (const auto& [p, e] : t_exponents) out.insert(out.end(), e, p);
    return out;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  bool first = true;
  for (const auto& [p, e] : m.t_exponents) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  for (std::size_t l = 0; l < m.s_exponents.size(); ++l) {
    if (m.s_exponents[l] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'S' << (l + 1);
    if (m.s_exponents[l] > 1) os << '^' << m.s_exponents[l];
  }
  if (first) os << '1';
  return os;
}

/// Pairs sorted by (i,j) form a multichain iff the second row weakly increases.
inline bool is_standard(const Monomial& m) {
  int last_j = 0;
  for (const auto& [p, e] : m.t_exponents) {
    if (p.j < last_j) return false;
    last_j = p.j;
  }
  return true;
}

using Combination = std::map<Monomial, BigInt>;

namespace detail {

inline std::int64_t straightening_potential(const Monomial& m) {
  std::int64_t s = 0;
  for (const auto& [p, e] : m.t_exponents) s += static_cast<std::int64_t>(e) * (p.j - p.i) * (p.j - p.i);
  return s;
}

/// Lexicographically largest incomparable pair (p, q), p < q; p = (a,d), q = (b,c) with a<b<c<d.
inline std::optional<std::pair<PairIndex, PairIndex>> largest_violation(const Monomial& m) {
  const auto ps = m.pairs();
  for (std::size_t x = ps.size(); x-- > 0;) {
    for (std::size_t y = ps.size(); y-- > x + 1;) {
      if (ps[x].j > ps[y].j && ps[x].i < ps[y].i) return std::pair{ps[x], ps[y]};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Standard-monomial normal form modulo I_{2,n}.
///
/// T_ad T_bc -> T_ac T_bd - T_ab T_cd strictly lowers the sum of (j-i)^2, so work is
/// drained from the highest potential downward and every monomial is expanded once.
inline Combination straighten(const Monomial& start) {
  using Key = std::pair<std::int64_t, Monomial>;
  std::map<Key, BigInt, std::greater<>> pending;
  pending[{detail::straightening_potential(start), start}] = 1;
  Combination result;

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Monomial& m = node.key().second;
    const BigInt coeff = std::move(node.mapped());
    if (coeff == 0) continue;

    const auto violation = detail::largest_violation(m);
    if (!violation) {
      BigInt& slot = result[m];
      slot += coeff;
      if (slot == 0) result.erase(m);
      continue;
    }
    const auto [p, q] = *violation;
    const int a = p.i, d = p.j, b = q.i, c = q.j;
    Monomial base = m;
    base.divide(p);
    base.divide(q);

    auto push = [&](PairIndex x, PairIndex y, const BigInt& k) {
      Monomial next = base;
      next.multiply(x);
      next.multiply(y);
      const auto pot = detail::straightening_potential(next);
      pending[{pot, std::move(next)}] += k;
    };
    push({a, c}, {b, d}, coeff);
    push({a, b}, {c, d}, -coeff);
  }
  return result;
}

}  // namespace igrass
