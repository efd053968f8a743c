#pragma once

#include "igrass/cone.hpp"
#include "igrass/error.hpp"
#include "igrass/plucker.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace igrass {

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// 0-based column of T_ij in the order 12, 13, ..., 1n, 23, ..., (n-1)n.
constexpr int lex_position(PairIndex p, int n) {
  return (p.i - 1) * n - (p.i - 1) * p.i / 2 + (p.j - p.i - 1);
}

inline int checked_lex_position(PairIndex p, int n) {
  make_pair_index(p.i, p.j, n);
  return lex_position(p, n);
}

/// All pairs in lex order.
inline std::vector<PairIndex> lex_pairs(int n) {
  std::vector<PairIndex> out;
  out.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

/// The degree matrix Q = [w_12, ..., w_(n-1)n, w_1, ..., w_m].
class GradingData {
 public:
  GradingData(int n, std::vector<Weight> t_weights, std::vector<Weight> s_weights = {})
      : n_(n), t_(std::move(t_weights)), s_(std::move(s_weights)) {
    if (n < 4) fail(ErrorCode::InvalidParameter, "grading needs n >= 4, got " + std::to_string(n));
    if (static_cast<int>(t_.size()) != pair_count(n))
      fail(ErrorCode::InvalidParameter, "expected " + std::to_string(pair_count(n)) + " pair weights, got " +
                                            std::to_string(t_.size()));
  }

  /// Grading with w_ij = f(i, j).
  template <class F>
  static GradingData from_function(int n, F&& f, std::vector<Weight> s_weights = {}) {
    std::vector<Weight> t;
    for (const auto& p : lex_pairs(n)) t.push_back(f(p.i, p.j));
    return GradingData(n, std::move(t), std::move(s_weights));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int m() const { return static_cast<int>(s_.size()); }
  [[nodiscard]] int columns() const { return static_cast<int>(t_.size() + s_.size()); }

  [[nodiscard]] Weight t(PairIndex p) const { return t_[static_cast<std::size_t>(lex_position(p, n_))]; }
  [[nodiscard]] Weight t(int i, int j) const {
    return i < j ? t(PairIndex{i, j}) : t(PairIndex{j, i});
  }
  [[nodiscard]] Weight s(int l) const { return s_.at(static_cast<std::size_t>(l - 1)); }

  [[nodiscard]] const std::vector<Weight>& t_weights() const { return t_; }
  [[nodiscard]] const std::vector<Weight>& s_weights() const { return s_; }

  void set_t(PairIndex p, Weight w) { t_[static_cast<std::size_t>(checked_lex_position(p, n_))] = w; }
  void set_s(int l, Weight w) { s_.at(static_cast<std::size_t>(l - 1)) = w; }

  /// Column c of Q (pairs first, then free variables).
  [[nodiscard]] Weight column(int c) const {
    const auto tc = static_cast<int>(t_.size());
    return c < tc ? t_[static_cast<std::size_t>(c)] : s_[static_cast<std::size_t>(c - tc)];
  }

  [[nodiscard]] std::vector<Weight> all_weights() const {
    std::vector<Weight> out = t_;
    out.insert(out.end(), s_.begin(), s_.end());
    return out;
  }

  friend bool operator==(const GradingData&, const GradingData&) = default;

 private:
  int n_;
  std::vector<Weight> t_;
  std::vector<Weight> s_;
};

/// Applies a basis change of Z^2 to every weight.
inline GradingData transform(const GradingData& g, const Mat2& phi) {
  std::vector<Weight> t;
  std::vector<Weight> s;
  for (const Weight& w : g.t_weights()) t.push_back(phi(w));
  for (const Weight& w : g.s_weights()) s.push_back(phi(w));
  return GradingData(g.n(), std::move(t), std::move(s));
}

/// Relabels indices: the result has w'_ij = w_{sigma(i) sigma(j)} and w'_l = w_{tau(l)}.
///
/// sigma and tau are 1-based permutations stored 0-based (sigma[i-1] = sigma(i)); an empty tau is the identity.
inline GradingData permute(const GradingData& g, const std::vector<int>& sigma, const std::vector<int>& tau = {}) {
  const int n = g.n();
  auto check_perm = [](const std::vector<int>& p, int size, const char* what) {
    std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
    if (static_cast<int>(p.size()) != size) fail(ErrorCode::InvalidParameter, std::string(what) + " has wrong length");
    for (int v : p) {
      if (v < 1 || v > size || seen[static_cast<std::size_t>(v)])
        fail(ErrorCode::InvalidParameter, std::string(what) + " is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  };
  check_perm(sigma, n, "index permutation");
  std::vector<int> free_perm = tau;
  if (free_perm.empty()) {
    free_perm.resize(static_cast<std::size_t>(g.m()));
    std::iota(free_perm.begin(), free_perm.end(), 1);
  }
  check_perm(free_perm, g.m(), "free-variable permutation");
  std::vector<Weight> s;
  for (int l = 1; l <= g.m(); ++l) s.push_back(g.s(free_perm[static_cast<std::size_t>(l - 1)]));
  return GradingData::from_function(
      n, [&](int i, int j) { return g.t(sigma[static_cast<std::size_t>(i - 1)], sigma[static_cast<std::size_t>(j - 1)]); },
      std::move(s));
}

/// w_ab + w_cd = w_ac + w_bd = w_ad + w_bc for every quadruple.
inline bool is_homogeneous(const GradingData& g) {
  bool ok = true;
  for_each_quadruple(g.n(), [&](const Quad& q) {
    if (!ok) return;
    const auto r = relation(q);
    const Weight first = g.t(r.terms[0].left) + g.t(r.terms[0].right);
    for (const auto& term : r.terms)
      if (g.t(term.left) + g.t(term.right) != first) ok = false;
  });
  return ok;
}

/// No zero weight and the weights span a salient cone.
inline bool is_pointed(const GradingData& g) {
  const auto ws = g.all_weights();
  for (const Weight& w : ws)
    if (w.is_zero()) return false;
  return Cone2::hull(ws).is_salient();
}

/// gcd of all 2x2 minors of the columns except `skip` (pass -1 to keep all).
inline std::int64_t minor_gcd(const std::vector<Weight>& ws, int skip = -1) {
  std::int64_t g = 0;
  for (std::size_t a = 0; a < ws.size(); ++a) {
    if (static_cast<int>(a) == skip) continue;
    for (std::size_t b = a + 1; b < ws.size(); ++b) {
      if (static_cast<int>(b) == skip) continue;
      g = std::gcd(g, cross(ws[a], ws[b]));
      if (g == 1) return 1;
    }
  }
  return g;
}

/// Any C(n,2)+m-1 of the weights generate Z^2.
inline bool is_almost_free(const GradingData& g) {
  const auto ws = g.all_weights();
  for (int skip = 0; skip < static_cast<int>(ws.size()); ++skip)
    if (minor_gcd(ws, skip) != 1) return false;
  return true;
}

inline Cone2 effective_cone(const GradingData& g) {
  if (!is_pointed(g)) fail(ErrorCode::Precondition, "effective cone needs a pointed grading");
  return Cone2::hull(g.all_weights());
}

/// Intersection of the images of the orthant facets.
///
/// Facets dropping columns of equal weight have equal images; one hull per distinct weight.
inline Cone2 moving_cone(const GradingData& g) {
  if (!is_pointed(g)) fail(ErrorCode::Precondition, "moving cone needs a pointed grading");
  const auto ws = g.all_weights();
  Cone2 result = Cone2::hull(ws);
  std::vector<Weight> seen;
  for (std::size_t c = 0; c < ws.size(); ++c) {
    if (std::find(seen.begin(), seen.end(), ws[c]) != seen.end()) continue;
    seen.push_back(ws[c]);
    std::vector<Weight> rest;
    rest.reserve(ws.size() - 1);
    for (std::size_t d = 0; d < ws.size(); ++d)
      if (d != c) rest.push_back(ws[d]);
    result = result.intersect(Cone2::hull(rest));
  }
  return result;
}

constexpr int dim_x(int n, int m) { return 2 * n + m - 5; }

}  // namespace igrass
