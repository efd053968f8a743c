#pragma once

#include "igrass/bigint.hpp"
#include "igrass/cone.hpp"
#include "igrass/error.hpp"
#include "igrass/faces.hpp"
#include "igrass/grading.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace igrass {

/// alpha holds alpha_k..alpha_n.
struct Type1Params {
  int k{4};
  int a{0};
  std::vector<int> alpha;
  std::vector<int> beta;
  friend bool operator==(const Type1Params&, const Type1Params&) = default;
};

struct Type2Params {
  int a{0};
  int alpha{0};
  std::vector<int> beta;
  friend bool operator==(const Type2Params&, const Type2Params&) = default;
};

struct Type3Params {
  int k{4};
  friend bool operator==(const Type3Params&, const Type3Params&) = default;
};

struct Type4Params {
  friend bool operator==(const Type4Params&, const Type4Params&) = default;
};

/// alpha holds alpha_4..alpha_n; b_3 = 0.
struct Type5Params {
  int b1{0};
  int b2{0};
  std::vector<int> alpha;
  friend bool operator==(const Type5Params&, const Type5Params&) = default;
};

struct Type6Params {
  std::vector<int> beta;
  friend bool operator==(const Type6Params&, const Type6Params&) = default;
};

using TypeParams = std::variant<Type1Params, Type2Params, Type3Params, Type4Params, Type5Params, Type6Params>;

struct TypedVariety {
  int n{4};
  int m{0};
  TypeParams params;

  /// 1..6.
  [[nodiscard]] int type() const { return static_cast<int>(params.index()) + 1; }

  friend bool operator==(const TypedVariety&, const TypedVariety&) = default;
};

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

inline bool nondecreasing(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); }

inline int max_or(const std::vector<int>& v, int fallback) { return v.empty() ? fallback : v.back(); }

inline int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

inline std::string to_string(const TypedVariety& v) {
  std::ostringstream os;
  os << "Type" << v.type() << "(n=" << v.n << ",m=" << v.m;
  std::visit(detail::overloaded{
                 [&](const Type1Params& p) {
                   os << ",k=" << p.k << ",a=" << p.a << ",alpha=" << detail::join(p.alpha)
                      << ",beta=" << detail::join(p.beta);
                 },
                 [&](const Type2Params& p) {
                   os << ",a=" << p.a << ",alpha=" << p.alpha << ",beta=" << detail::join(p.beta);
                 },
                 [&](const Type3Params& p) { os << ",k=" << p.k; },
                 [&](const Type4Params&) {},
                 [&](const Type5Params& p) {
                   os << ",b1=" << p.b1 << ",b2=" << p.b2 << ",alpha=" << detail::join(p.alpha);
                 },
                 [&](const Type6Params& p) { os << ",beta=" << detail::join(p.beta); },
             },
             v.params);
  os << ')';
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const TypedVariety& v) { return os << to_string(v); }

/// Throws InvalidParameter naming the first violated constraint.
inline void validate(const TypedVariety& v) {
  auto bad = [&](const std::string& why) { fail(ErrorCode::InvalidParameter, to_string(v) + ": " + why); };
  if (v.n < 4) bad("n must be at least 4");
  if (v.m < 0) bad("m must be nonnegative");
  auto check_beta = [&](const std::vector<int>& beta, const char* name) {
    if (static_cast<int>(beta.size()) != v.m) bad(std::string(name) + " must have m entries");
    if (!detail::nondecreasing(beta)) bad(std::string(name) + " must be nondecreasing");
    if (!beta.empty() && beta.front() < 0) bad(std::string(name) + " must be nonnegative");
  };
  std::visit(detail::overloaded{
                 [&](const Type1Params& p) {
                   if (p.k < 4 || p.k > v.n) bad("need 4 <= k <= n");
                   if (static_cast<int>(p.alpha.size()) != v.n - p.k + 1) bad("alpha must hold alpha_k..alpha_n");
                   if (!detail::nondecreasing(p.alpha) || p.alpha.front() < 0)
                     bad("need 0 <= alpha_k <= ... <= alpha_n");
                   check_beta(p.beta, "beta");
                   if (p.a != std::max(p.alpha.back(), detail::max_or(p.beta, 0)))
                     bad("(a,1) must be the largest weight of the form (x,1)");
                   if (std::min(p.alpha.front(), p.beta.empty() ? p.alpha.front() : p.beta.front()) != 0)
                     bad("(0,1) must occur among the weights");
                 },
                 [&](const Type2Params& p) {
                   if (p.alpha < 0) bad("need alpha >= 0");
                   check_beta(p.beta, "beta");
                   if (p.a != std::max(p.alpha, detail::max_or(p.beta, 0)))
                     bad("(a,1) must be the largest weight of the form (x,1)");
                   if (std::min(p.alpha, p.beta.empty() ? p.alpha : p.beta.front()) != 0)
                     bad("(0,1) must occur among the weights");
                 },
                 [&](const Type3Params& p) {
                   if (p.k < 4 || p.k >= v.n) bad("need 4 <= k < n");
                 },
                 [&](const Type4Params&) {
                   if (v.m < 1) bad("need m >= 1");
                 },
                 [&](const Type5Params& p) {
                   if (v.m < 2) bad("need m >= 2");
                   if (static_cast<int>(p.alpha.size()) != v.n - 3) bad("alpha must hold alpha_4..alpha_n");
                   if (p.b2 < 0 || p.b2 > p.b1 || p.b1 > p.alpha.front() || !detail::nondecreasing(p.alpha))
                     bad("need 0 <= b2 <= b1 <= alpha_4 <= ... <= alpha_n");
                 },
                 [&](const Type6Params& p) {
                   if (v.m < 2) bad("need m >= 2");
                   check_beta(p.beta, "beta");
                   if (p.beta.front() != 0) bad("need beta_1 = 0");
                 },
             },
             v.params);
}

inline TypedVariety make_type1(int n, int k, std::vector<int> alpha, std::vector<int> beta = {}) {
  const int a = std::max(alpha.empty() ? 0 : alpha.back(), detail::max_or(beta, 0));
  const int m = static_cast<int>(beta.size());
  TypedVariety v{n, m, Type1Params{k, a, std::move(alpha), std::move(beta)}};
  validate(v);
  return v;
}

inline TypedVariety make_type2(int n, int alpha, std::vector<int> beta = {}) {
  const int a = std::max(alpha, detail::max_or(beta, 0));
  const int m = static_cast<int>(beta.size());
  TypedVariety v{n, m, Type2Params{a, alpha, std::move(beta)}};
  validate(v);
  return v;
}

inline TypedVariety make_type3(int n, int k, int m) {
  TypedVariety v{n, m, Type3Params{k}};
  validate(v);
  return v;
}

inline TypedVariety make_type4(int n, int m) {
  TypedVariety v{n, m, Type4Params{}};
  validate(v);
  return v;
}

inline TypedVariety make_type5(int n, int m, int b1, int b2, std::vector<int> alpha) {
  TypedVariety v{n, m, Type5Params{b1, b2, std::move(alpha)}};
  validate(v);
  return v;
}

inline TypedVariety make_type6(int n, std::vector<int> beta) {
  const int m = static_cast<int>(beta.size());
  TypedVariety v{n, m, Type6Params{std::move(beta)}};
  validate(v);
  return v;
}

/// The type's weight matrix together with its canonical ample class.
struct BuiltVariety {
  GradingData grading;
  Weight ample;
  Cone2 semiample;
};

namespace detail {

inline std::vector<Weight> rows_of(const std::vector<int>& xs, std::int64_t y) {
  std::vector<Weight> out;
  for (int x : xs) out.push_back({x, y});
  return out;
}

/// x-coordinates of the Type 5 pair weights, indexed 1..n.
inline std::int64_t type5_x(const Type5Params& p, int i, int j) {
  const auto b = [&](int idx) { return idx == 1 ? p.b1 : idx == 2 ? p.b2 : 0; };
  const auto alpha = [&](int idx) { return p.alpha[static_cast<std::size_t>(idx - 4)]; };
  if (j <= 3) {
    if (i == 1 && j == 2) return 0;
    return i == 1 ? p.b2 : p.b1;
  }
  if (i <= 3) return alpha(j) - b(i);
  return alpha(i) + alpha(j) - p.b1 - p.b2;
}

}  // namespace detail

inline BuiltVariety build(const TypedVariety& v) {
  validate(v);
  const int n = v.n;
  return std::visit(
      detail::overloaded{
          [&](const Type1Params& p) {
            const auto alpha = [&](int j) { return p.alpha[static_cast<std::size_t>(j - p.k)]; };
            auto g = GradingData::from_function(
                n,
                [&](int i, int j) -> Weight {
                  if (j < p.k) return {1, 0};
                  if (i < p.k) return {alpha(j), 1};
                  return {alpha(i) + alpha(j) - 1, 2};
                },
                detail::rows_of(p.beta, 1));
            return BuiltVariety{std::move(g), Weight{1 + p.a, 1}, Cone2::spanned_by({1, 0}, {p.a, 1})};
          },
          [&](const Type2Params& p) {
            auto g = GradingData::from_function(
                n, [&](int, int j) -> Weight { return j == n ? Weight{1, 0} : Weight{p.alpha, 1}; },
                detail::rows_of(p.beta, 1));
            return BuiltVariety{std::move(g), Weight{1 + p.a, 1}, Cone2::spanned_by({1, 0}, {p.a, 1})};
          },
          [&](const Type3Params& p) {
            auto g = GradingData::from_function(
                n,
                [&](int i, int j) -> Weight {
                  if (j < p.k) return {2, 1};
                  if (i < p.k) return {1, 1};
                  return {0, 1};
                },
                std::vector<Weight>(static_cast<std::size_t>(v.m), Weight{1, 0}));
            return BuiltVariety{std::move(g), Weight{3, 2}, Cone2::spanned_by({2, 1}, {1, 1})};
          },
          [&](const Type4Params&) {
            auto g = GradingData::from_function(
                n,
                [&](int i, int j) -> Weight {
                  if (j < 3) return {2, 1};
                  if (i < 3) return {1, 1};
                  return {0, 1};
                },
                std::vector<Weight>(static_cast<std::size_t>(v.m), Weight{1, 0}));
            return BuiltVariety{std::move(g), Weight{3, 2}, Cone2::spanned_by({2, 1}, {1, 1})};
          },
          [&](const Type5Params& p) {
            std::int64_t top = 0;
            auto g = GradingData::from_function(
                n,
                [&](int i, int j) -> Weight {
                  const auto x = detail::type5_x(p, i, j);
                  top = std::max(top, x);
                  return {x, 1};
                },
                std::vector<Weight>(static_cast<std::size_t>(v.m), Weight{1, 0}));
            return BuiltVariety{std::move(g), Weight{1 + top, 1}, Cone2::spanned_by({1, 0}, {top, 1})};
          },
          [&](const Type6Params& p) {
            auto g = GradingData::from_function(
                n, [](int, int) { return Weight{1, 0}; }, detail::rows_of(p.beta, 1));
            const int top = p.beta.back();
            return BuiltVariety{std::move(g), Weight{1 + top, 1}, Cone2::spanned_by({1, 0}, {top, 1})};
          },
      },
      v.params);
}

/// -K = (2/(n-1)) sum w_ij + sum w_l.
inline Weight anticanonical(const GradingData& g) {
  Weight t{};
  for (const Weight& w : g.t_weights()) t += w;
  Weight s{};
  for (const Weight& w : g.s_weights()) s += w;
  const auto d = g.n() - 1;
  if ((2 * t.x) % d != 0 || (2 * t.y) % d != 0)
    fail(ErrorCode::NonIntegralClass, "2 * sum of pair weights " + to_string(2 * t) + " is not divisible by " +
                                          std::to_string(d));
  return Weight{2 * t.x / d, 2 * t.y / d} + s;
}

/// Per-type closed form of -K in the parameters.
inline Weight anticanonical_closed_form(const TypedVariety& v) {
  validate(v);
  const int n = v.n;
  const int m = v.m;
  return std::visit(detail::overloaded{
                        [&](const Type1Params& p) {
                          return Weight{2 * detail::sum(p.alpha) + detail::sum(p.beta) + 2 * p.k - n - 2,
                                        2 * (n - p.k + 1) + m};
                        },
                        [&](const Type2Params& p) {
                          return Weight{detail::sum(p.beta) + (n - 2) * p.alpha + 2, n + m - 2};
                        },
                        [&](const Type3Params& p) { return Weight{2 * (p.k - 1) + m, n}; },
                        [&](const Type4Params&) { return Weight{4 + m, n}; },
                        [&](const Type5Params& p) {
                          return Weight{2 * detail::sum(p.alpha) - (n - 4) * (p.b1 + p.b2) + m, n};
                        },
                        [&](const Type6Params& p) { return Weight{n + detail::sum(p.beta), m}; },
                    },
                    v.params);
}

enum class FanoStatus { Fano, TrulyAlmostFano, Neither };

constexpr std::string_view to_string(FanoStatus s) {
  switch (s) {
    case FanoStatus::Fano: return "fano";
    case FanoStatus::TrulyAlmostFano: return "truly_almost";
    case FanoStatus::Neither: return "neither";
  }
  return "?";
}

namespace detail {

/// Fano when lhs < rhs, truly almost Fano on equality.
constexpr FanoStatus compare_status(std::int64_t lhs, std::int64_t rhs) {
  if (lhs < rhs) return FanoStatus::Fano;
  if (lhs == rhs) return FanoStatus::TrulyAlmostFano;
  return FanoStatus::Neither;
}

/// n < q < 2n is Fano, q in {n, 2n} truly almost Fano.
constexpr FanoStatus window_status(std::int64_t q, std::int64_t n) {
  if (n < q && q < 2 * n) return FanoStatus::Fano;
  if (q == n || q == 2 * n) return FanoStatus::TrulyAlmostFano;
  return FanoStatus::Neither;
}

}  // namespace detail

/// Fano criteria in the parameters, all halves cleared by doubling.
inline FanoStatus fano_status_by_criterion(const TypedVariety& v) {
  validate(v);
  const std::int64_t n = v.n;
  const std::int64_t m = v.m;
  return std::visit(
      detail::overloaded{
          [&](const Type1Params& p) {
            const std::int64_t lhs = (2 * n + m - 2 * p.k + 2) * p.a;
            const std::int64_t rhs = 2 * detail::sum(p.alpha) + 2 * p.k - n - 2 + detail::sum(p.beta);
            return detail::compare_status(lhs, rhs);
          },
          [&](const Type2Params& p) {
            const std::int64_t lhs = (n + m - 2) * p.a;
            const std::int64_t rhs = detail::sum(p.beta) + (n - 2) * p.alpha + 2;
            return detail::compare_status(lhs, rhs);
          },
          [&](const Type3Params& p) { return detail::window_status(2 * (p.k - 1) + m, n); },
          [&](const Type4Params&) { return detail::window_status(4 + m, n); },
          [&](const Type5Params& p) {
            std::int64_t top = 0;
            for (int i = 1; i <= v.n; ++i)
              for (int j = i + 1; j <= v.n; ++j) top = std::max(top, detail::type5_x(p, i, j));
            const std::int64_t rhs = 2 * detail::sum(p.alpha) - (n - 4) * (p.b1 + p.b2) + m;
            return detail::compare_status(n * top, rhs);
          },
          [&](const Type6Params& p) { return detail::compare_status(m * p.beta.back(), n + detail::sum(p.beta)); },
      },
      v.params);
}

/// Position of -K relative to the semiample cone of the chamber of u.
inline FanoStatus fano_status_by_cone(const GradingData& g, Weight u) {
  const Cone2 sample = semiample_cone(g, u);
  const Weight k = anticanonical(g);
  if (sample.contains_in_relative_interior(k)) return FanoStatus::Fano;
  if (sample.contains(k)) return FanoStatus::TrulyAlmostFano;
  return FanoStatus::Neither;
}

/// Full (m = 0) Type 1 parameter sets with the given status, k descending then alpha lex.
///
/// Fano and truly almost Fano both force 2 alpha_n <= 2k - n - 2, which bounds the search.
inline std::vector<TypedVariety> enumerate_full(int n, FanoStatus wanted) {
  if (n < 4) fail(ErrorCode::InvalidParameter, "enumeration needs n >= 4");
  std::vector<TypedVariety> out;
  for (int k = n; k >= 4; --k) {
    const int twice_bound = 2 * k - n - 2;
    if (twice_bound < 0) continue;
    const int cap = twice_bound / 2;
    std::vector<int> alpha(static_cast<std::size_t>(n - k + 1), 0);
    for (;;) {
      const auto v = make_type1(n, k, alpha);
      if (fano_status_by_criterion(v) == wanted) out.push_back(v);
      // Next nondecreasing tail alpha_{k+1..n} in [0, cap], lexicographically; alpha_k stays 0.
      const auto tail_end = std::prev(alpha.rend());
      const auto bump = std::find_if(alpha.rbegin(), tail_end, [&](int x) { return x < cap; });
      if (bump == tail_end) break;
      std::fill(alpha.rbegin(), std::next(bump), *bump + 1);
    }
  }
  return out;
}

inline std::vector<TypedVariety> enumerate_smooth_fano_full(int n) { return enumerate_full(n, FanoStatus::Fano); }

/// Full Type 1 parameter sets with alpha_n <= max_alpha, any status, same order.
inline std::vector<TypedVariety> enumerate_smooth_full(int n, int max_alpha) {
  if (n < 4) fail(ErrorCode::InvalidParameter, "enumeration needs n >= 4");
  if (max_alpha < 0) fail(ErrorCode::InvalidParameter, "max alpha must be nonnegative");
  std::vector<TypedVariety> out;
  for (int k = n; k >= 4; --k) {
    std::vector<int> alpha(static_cast<std::size_t>(n - k + 1), 0);
    for (;;) {
      out.push_back(make_type1(n, k, alpha));
      int pos = static_cast<int>(alpha.size()) - 1;
      while (pos >= 1 && alpha[static_cast<std::size_t>(pos)] == max_alpha) --pos;
      if (pos < 1) break;
      const int next = alpha[static_cast<std::size_t>(pos)] + 1;
      for (std::size_t r = static_cast<std::size_t>(pos); r < alpha.size(); ++r) alpha[r] = next;
    }
  }
  return out;
}

/// Number of sequences 0 <= a_1 <= ... <= a_y <= z with sum x.
/// a(0, y<=0, z) = 1, a(x != 0, y<=0, z) = 0, a(x<0, ...) = 0.
inline BigInt a_count(std::int64_t x, std::int64_t y, std::int64_t z) {
  if (x < 0) return 0;
  if (y <= 0) return x == 0 ? 1 : 0;
  if (z < 0) return 0;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, BigInt> memo;
  // f(x, y, z): last entry v in [0, min(z, x)], the rest bounded by v.
  auto f = [&](auto&& self, std::int64_t xs, std::int64_t ys, std::int64_t zs) -> BigInt {
    if (xs < 0) return 0;
    if (ys == 0) return xs == 0 ? 1 : 0;
    if (xs > ys * zs) return 0;
    const auto key = std::tuple{xs, ys, zs};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (std::int64_t v = 0; v <= std::min(zs, xs); ++v) total += self(self, xs - v, ys - 1, v);
    memo.emplace(key, total);
    return total;
  };
  return f(f, x, y, z);
}

/// The closed counting formula: a triple sum of a_count values.
inline BigInt count_fano_formula(int n) {
  if (n < 4) fail(ErrorCode::InvalidParameter, "count needs n >= 4");
  const int h = n / 2;
  BigInt total = 0;
  for (int i = h + 2; i <= n; ++i)
    for (int j = 0; j <= i - h - 2; ++j)
      for (int k = 0; k <= i - h - 2 - j; ++k)
        total += a_count(static_cast<std::int64_t>(j) * (n - i - 1) - k, n - i - 1, j);
  return total;
}

inline BigInt count_fano_oracle(int n) { return BigInt(enumerate_smooth_fano_full(n).size()); }

using GeneratorDegreeProfile = std::map<Weight, int>;

inline GeneratorDegreeProfile degree_profile(const GradingData& g) {
  GeneratorDegreeProfile p;
  for (const Weight& w : g.all_weights()) ++p[w];
  return p;
}

inline bool profiles_distinct(const GeneratorDegreeProfile& a, const GeneratorDegreeProfile& b) { return a != b; }

/// 2 c_i where w_ij = c_i + c_j; exact for homogeneous gradings.
inline std::vector<Weight> doubled_index_classes(const GradingData& g) {
  const int n = g.n();
  std::vector<Weight> out;
  for (int i = 1; i <= n; ++i) {
    int j = i == 1 ? 2 : 1;
    int k = j + 1;
    if (k == i) ++k;
    out.push_back(g.t(i, j) + g.t(i, k) - g.t(j, k));
  }
  return out;
}

/// A match of a grading against a classified type.
///
/// permute(transform(g, basis), index_perm, free_perm) == build(variety).grading.
struct Recognition {
  TypedVariety variety;
  Mat2 basis;
  std::vector<int> index_perm;
  std::vector<int> free_perm;
  std::vector<int> matching_types;
};

namespace detail {

inline std::optional<TypedVariety> guarded(auto&& make) {
  try {
    return make();
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::vector<int> xs_of(const std::vector<Weight>& ws) {
  std::vector<int> out;
  for (const Weight& w : ws) out.push_back(static_cast<int>(w.x));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool all_y(const std::vector<Weight>& ws, std::int64_t y) {
  return std::all_of(ws.begin(), ws.end(), [&](Weight w) { return w.y == y; });
}

inline bool all_equal(const std::vector<Weight>& ws, Weight w) {
  return std::all_of(ws.begin(), ws.end(), [&](Weight v) { return v == w; });
}

/// Candidates from normalized data whose chamber is cone((1,0),(a,1)).
inline std::vector<TypedVariety> family_a_candidates(int n, const std::vector<Weight>& c, const std::vector<Weight>& s) {
  std::vector<TypedVariety> out;
  const auto add = [&](std::optional<TypedVariety> v) {
    if (v) out.push_back(std::move(*v));
  };

  // Type 1: C = (1,0) for i < k, (2 alpha_j - 1, 2) for j >= k.
  if (all_y(s, 1)) {
    add(guarded([&]() -> std::optional<TypedVariety> {
      int low = 0;
      std::vector<int> alpha;
      for (const Weight& w : c) {
        if (w == Weight{1, 0}) {
          ++low;
        } else if (w.y == 2 && (w.x + 1) % 2 == 0) {
          alpha.push_back(static_cast<int>((w.x + 1) / 2));
        } else {
          return std::nullopt;
        }
      }
      std::sort(alpha.begin(), alpha.end());
      if (alpha.empty()) return std::nullopt;
      return make_type1(n, low + 1, alpha, xs_of(s));
    }));
  }

  // Type 2: C = (alpha, 1) for i < n, (2 - alpha, -1) once.
  if (all_y(s, 1)) {
    add(guarded([&]() -> std::optional<TypedVariety> {
      std::vector<Weight> up;
      std::vector<Weight> down;
      for (const Weight& w : c) (w.y == -1 ? down : up).push_back(w);
      if (down.size() != 1 || up.empty() || !all_equal(up, up.front()) || up.front().y != 1) return std::nullopt;
      const auto alpha = up.front().x;
      if (down.front() != Weight{2 - alpha, -1}) return std::nullopt;
      return make_type2(n, static_cast<int>(alpha), xs_of(s));
    }));
  }

  // Type 5: pair weights all (x,1); sorted C gives the canonical parameters.
  if (s.size() >= 2 && all_equal(s, {1, 0}) && all_y(c, 1)) {
    add(guarded([&]() -> std::optional<TypedVariety> {
      const auto sx = xs_of(c);
      for (int a : sx)
        for (int b : sx)
          if ((a + b) % 2 != 0) return std::nullopt;
      std::vector<int> alpha;
      for (std::size_t j = 3; j < sx.size(); ++j) alpha.push_back((sx[2] + sx[j]) / 2);
      return make_type5(n, static_cast<int>(s.size()), (sx[1] + sx[2]) / 2, (sx[0] + sx[2]) / 2, alpha);
    }));
  }

  // Type 6: every pair weight (1,0).
  if (s.size() >= 2 && all_y(s, 1) && all_equal(c, {1, 0})) {
    add(guarded([&]() -> std::optional<TypedVariety> { return make_type6(n, xs_of(s)); }));
  }
  return out;
}

/// Candidates from normalized data whose chamber is cone((2,1),(1,1)).
inline std::vector<TypedVariety> family_b_candidates(int n, const std::vector<Weight>& c, const std::vector<Weight>& s) {
  std::vector<TypedVariety> out;
  if (!all_equal(s, {1, 0})) return out;
  const auto high = std::count(c.begin(), c.end(), Weight{2, 1});
  const auto low = std::count(c.begin(), c.end(), Weight{0, 1});
  if (high + low != n) return out;
  const int m = static_cast<int>(s.size());
  if (high >= 3) {
    if (auto v = guarded([&]() -> std::optional<TypedVariety> { return make_type3(n, static_cast<int>(high) + 1, m); }))
      out.push_back(*v);
  } else if (high == 2) {
    if (auto v = guarded([&]() -> std::optional<TypedVariety> { return make_type4(n, m); })) out.push_back(*v);
  }
  return out;
}

/// Permutation pairing indices of equal class; nullopt if the multisets differ.
inline std::optional<std::vector<int>> match_by_sorting(const std::vector<Weight>& target,
                                                        const std::vector<Weight>& source) {
  if (target.size() != source.size()) return std::nullopt;
  std::vector<int> ti(target.size());
  std::vector<int> si(source.size());
  std::iota(ti.begin(), ti.end(), 0);
  std::iota(si.begin(), si.end(), 0);
  std::stable_sort(ti.begin(), ti.end(), [&](int a, int b) { return target[static_cast<std::size_t>(a)] < target[static_cast<std::size_t>(b)]; });
  std::stable_sort(si.begin(), si.end(), [&](int a, int b) { return source[static_cast<std::size_t>(a)] < source[static_cast<std::size_t>(b)]; });
  std::vector<int> perm(target.size());
  for (std::size_t r = 0; r < ti.size(); ++r) {
    if (target[static_cast<std::size_t>(ti[r])] != source[static_cast<std::size_t>(si[r])]) return std::nullopt;
    perm[static_cast<std::size_t>(ti[r])] = si[r] + 1;
  }
  return perm;
}

}  // namespace detail

/// Matches a homogeneous grading with ample class u against the six types.
///
/// For each orientation the chamber rays are sent to (1,0),(0,1); family A then shears so
/// that the smallest (x,1) weight becomes (0,1), family B applies (x,y) -> (2x+y, x+y).
/// Parameters are read off the index classes and free weights, and every candidate is
/// checked by rebuilding its matrix.
inline std::optional<Recognition> recognize(const GradingData& g, Weight u) {
  if (!is_homogeneous(g)) return std::nullopt;
  std::vector<Recognition> found;
  for (const Mat2 base : {Mat2::identity(), Mat2::swap_xy()}) {
    const GradingData g1 = transform(g, base);
    const Weight u1 = base(u);
    TauSplit split;
    try {
      split = tau_split(g1, u1);
    } catch (const Error&) {
      continue;
    }
    const Weight cw = split.chamber.first_ray();
    const Weight ccw = split.chamber.second_ray();
    if (cross(cw, ccw) != 1) continue;
    const Mat2 phi0 = unimodular_inverse(Mat2::from_columns(cw, ccw));
    const GradingData g2 = transform(g1, phi0);

    std::vector<std::pair<Mat2, bool>> maps;
    {
      std::optional<std::int64_t> min_x;
      for (const Weight& w : g2.all_weights())
        if (w.y == 1 && (!min_x || w.x < *min_x)) min_x = w.x;
      if (min_x) maps.emplace_back(Mat2{1, -*min_x, 0, 1} * phi0 * base, true);
      maps.emplace_back(Mat2{2, 1, 1, 1} * phi0 * base, false);
    }

    for (const auto& [phi, family_a] : maps) {
      const GradingData g3 = transform(g, phi);
      const Weight u3 = phi(u);
      const auto c = doubled_index_classes(g3);
      const auto& s = g3.s_weights();
      const auto candidates =
          family_a ? detail::family_a_candidates(g.n(), c, s) : detail::family_b_candidates(g.n(), c, s);
      for (const auto& v : candidates) {
        const BuiltVariety built = build(v);
        const auto sigma = detail::match_by_sorting(doubled_index_classes(built.grading), c);
        const auto tau = detail::match_by_sorting(built.grading.s_weights(), s);
        if (!sigma || !tau) continue;
        if (permute(g3, *sigma, *tau) != built.grading) continue;
        const Cone2 chamber = tau_split(built.grading, built.ample).chamber;
        if (!chamber.contains_in_relative_interior(u3)) continue;
        found.push_back({v, phi, *sigma, *tau, {}});
      }
    }
  }
  if (found.empty()) return std::nullopt;
  std::vector<int> types;
  for (const auto& r : found) types.push_back(r.variety.type());
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  auto best = std::min_element(found.begin(), found.end(),
                               [](const Recognition& a, const Recognition& b) { return a.variety.type() < b.variety.type(); });
  Recognition r = *best;
  r.matching_types = types;
  return r;
}

/// Deletes every column involving index `index` and relabels the remaining indices in order.
inline GradingData restrict_index(const GradingData& g, int index) {
  const int n = g.n();
  if (n < 5) fail(ErrorCode::InvalidParameter, "restriction needs n >= 5");
  if (index < 1 || index > n) fail(ErrorCode::InvalidParameter, "index out of range");
  auto old_index = [&](int i) { return i < index ? i : i + 1; };
  return GradingData::from_function(
      n - 1, [&](int i, int j) { return g.t(old_index(i), old_index(j)); }, g.s_weights());
}

namespace detail {

inline bool two_on_each_side(const GradingData& g, Weight u) {
  int plus = 0;
  int minus = 0;
  for (const Weight& w : g.t_weights()) {
    const auto side = cross(w, u);
    if (side > 0) ++plus;
    if (side < 0) ++minus;
  }
  return plus >= 2 && minus >= 2;
}

}  // namespace detail

/// Drops the columns w_in of a full grading.
///
/// The chamber is that of u; at least two remaining pair weights must lie on each side.
inline GradingData restrict_last_index(const GradingData& g, Weight u) {
  if (g.m() != 0) fail(ErrorCode::InvalidParameter, "restriction expects a full grading (m = 0)");
  GradingData r = restrict_index(g, g.n());
  if (!detail::two_on_each_side(r, u))
    fail(ErrorCode::NeedsPermutation, "dropping index " + std::to_string(g.n()) +
                                          " leaves fewer than two weights on one side; relabel first");
  return r;
}

/// First index, from n downward, whose deletion keeps two pair weights on each side.
inline std::pair<int, GradingData> restrict_grading(const GradingData& g, Weight u) {
  if (g.m() != 0) fail(ErrorCode::InvalidParameter, "restriction expects a full grading (m = 0)");
  for (int index = g.n(); index >= 1; --index) {
    GradingData r = restrict_index(g, index);
    if (detail::two_on_each_side(r, u)) return {index, std::move(r)};
  }
  fail(ErrorCode::NeedsPermutation, "no index deletion keeps two weights on each side");
}

}  // namespace igrass
