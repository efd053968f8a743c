#pragma once

#include "igrass/igrass.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace igrass;

/// One published row: n, k, the tail alpha_{k+1..n}, the lex matrix rows, -K and h0.
struct PublishedRow {
  int n;
  int k;
  std::vector<int> alpha_tail;
  std::vector<int> xs;
  std::vector<int> ys;
  Weight antican;
  std::int64_t h0;
};

/// Copied by hand from the published table; independent of build().
inline const std::vector<PublishedRow>& published_rows() {
  static const std::vector<PublishedRow> rows{
      {5, 5, {}, {1, 1, 1, 0, 1, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 0, 1, 0, 1, 1}, {3, 2}, 280},
      {5, 4, {0}, {1, 1, 0, 0, 1, 0, 0, 0, 0, -1}, {0, 0, 1, 1, 0, 1, 1, 1, 1, 2}, {1, 4}, 266},
      {6, 6, {}, {1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1}, {4, 2}, 3750},
      {6, 5, {0}, {1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, -1}, {0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 2}, {2, 4}, 2745},
      {7, 7, {}, {1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 0},
       {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1}, {5, 2}, 37422},
      {7, 6, {0}, {1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, -1},
       {0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 2}, {3, 4}, 31251},
      {7, 6, {1}, {1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 0},
       {0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 2}, {5, 4}, 48206},
      {7, 5, {0, 0}, {1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, -1, -1},
       {0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2}, {1, 6}, 30030},
      {8, 8, {}, {1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 0},
       {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1}, {6, 2}, 462462},
      {8, 7, {0}, {1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, -1},
       {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 2}, {4, 4}, 376376},
      {8, 7, {1}, {1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 0},
       {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 2}, {6, 4}, 640333},
      {8, 6, {0, 0}, {1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, -1, -1},
       {0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2}, {2, 6}, 348985},
  };
  return rows;
}

/// The single cell where the published value disagrees with every computation here.
/// Standard monomials, dense elimination and the hook-content formula all give 3150.
constexpr int erratum_row = 3;
constexpr std::int64_t erratum_recomputed = 3150;

inline GradingData published_grading(const PublishedRow& r) {
  std::vector<Weight> t;
  for (std::size_t c = 0; c < r.xs.size(); ++c) t.push_back({r.xs[c], r.ys[c]});
  return GradingData(r.n, std::move(t));
}

inline TypedVariety published_variety(const PublishedRow& r) {
  std::vector<int> alpha{0};
  alpha.insert(alpha.end(), r.alpha_tail.begin(), r.alpha_tail.end());
  return make_type1(r.n, r.k, alpha);
}

/// The unique smooth full grading for n = 4.
inline GradingData quadric_grading() {
  return GradingData(4, {{1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {0, 1}});
}

/// All nondecreasing sequences of the given length with entries in [lo, hi].
inline void nondecreasing_sequences(int length, int lo, int hi, std::vector<std::vector<int>>& out,
                                    std::vector<int> prefix = {}) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  const int start = prefix.empty() ? lo : prefix.back();
  for (int v = start; v <= hi; ++v) {
    prefix.push_back(v);
    nondecreasing_sequences(length, lo, hi, out, prefix);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> sequences(int length, int lo, int hi) {
  std::vector<std::vector<int>> out;
  nondecreasing_sequences(length, lo, hi, out);
  return out;
}

/// Every valid instance of the six types with n <= max_n, m <= max_m and parameters <= max_param.
inline std::vector<TypedVariety> six_type_grid(int max_n = 8, int max_m = 3, int max_param = 3) {
  std::vector<TypedVariety> out;
  auto keep = [&](auto&& make) {
    try {
      out.push_back(make());
    } catch (const Error&) {
    }
  };
  for (int n = 4; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m) {
      const auto betas = sequences(m, 0, max_param);
      for (int k = 4; k <= n; ++k)
        for (const auto& tail : sequences(n - k, 0, max_param))
          for (const auto& beta : betas) {
            std::vector<int> alpha{0};
            alpha.insert(alpha.end(), tail.begin(), tail.end());
            keep([&] { return make_type1(n, k, alpha, beta); });
          }
      for (int alpha = 0; alpha <= max_param; ++alpha)
        for (const auto& beta : betas) keep([&] { return make_type2(n, alpha, beta); });
      for (int k = 4; k < n; ++k) keep([&] { return make_type3(n, k, m); });
      if (m >= 1) keep([&] { return make_type4(n, m); });
      if (m >= 2) {
        for (const auto& seq : sequences(n - 1, 0, max_param)) {
          // seq = (b2, b1, alpha_4, ..., alpha_n), nondecreasing.
          std::vector<int> alpha(seq.begin() + 2, seq.end());
          keep([&] { return make_type5(n, m, seq[1], seq[0], alpha); });
        }
        for (const auto& beta : betas)
          if (beta.front() == 0) keep([&] { return make_type6(n, beta); });
      }
    }
  return out;
}

struct CuratedCase {
  std::string name;
  GradingData grading;
  Weight ample;
};

/// Homogeneous gradings that are not smooth, each with a face witness.
inline std::vector<CuratedCase> curated_not_smooth() {
  std::vector<CuratedCase> out;
  out.push_back({"quadric-y-doubled",
                 GradingData(4, {{1, 0}, {1, 0}, {0, 2}, {1, 0}, {0, 2}, {0, 2}}),
                 {1, 1}});
  // Smooth instances pushed through lattice maps of determinant 2 or 3.
  const std::vector<std::pair<std::string, Mat2>> maps{
      {"x-doubled", {2, 0, 0, 1}}, {"y-doubled", {1, 0, 0, 2}}, {"y-tripled", {1, 0, 0, 3}}, {"shear-det2", {1, 1, 0, 2}}};
  const std::vector<std::pair<std::string, TypedVariety>> bases{
      {"type1-n5", make_type1(5, 5, {0})},
      {"type2-n5", make_type2(5, 1, {0})},
      {"type3-n5", make_type3(5, 4, 1)},
      {"type6-n4", make_type6(4, {0, 1})},
  };
  for (const auto& [bname, v] : bases)
    for (const auto& [mname, phi] : maps) {
      const auto built = build(v);
      out.push_back({bname + "-" + mname, transform(built.grading, phi), phi(built.ample)});
    }
  // Free weights on both sides of the chamber.
  auto with_free = [](const GradingData& g, std::vector<Weight> s) { return GradingData(g.n(), g.t_weights(), s); };
  const auto row1 = build(make_type1(5, 5, {0})).grading;
  out.push_back({"row1-free-split", with_free(row1, {{2, 1}, {1, 2}}), {1, 1}});
  const auto quad = quadric_grading();
  out.push_back({"quadric-free-split", with_free(quad, {{2, 1}, {1, 2}}), {1, 1}});
  out.push_back({"quadric-free-split-three", with_free(quad, {{2, 1}, {1, 2}, {1, 1}}), {3, 2}});
  return out;
}

/// Homogeneous pointed gradings w_ij = (C_i + C_j) / 2 with a common parity for all C_i.
inline std::vector<GradingData> random_homogeneous(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(-1, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> size(4, 5);
  std::uniform_int_distribution<int> frees(0, 2);
  std::uniform_int_distribution<int> small(0, 2);
  std::vector<GradingData> out;
  while (out.size() < count) {
    const int n = size(rng);
    const Weight parity{bit(rng), bit(rng)};
    std::vector<Weight> c;
    for (int i = 0; i < n; ++i) c.push_back(parity + 2 * Weight{coord(rng), coord(rng)});
    std::vector<Weight> s;
    for (int l = frees(rng); l > 0; --l) s.push_back({small(rng), small(rng)});
    bool integral = true;
    auto g = GradingData::from_function(
        n,
        [&](int i, int j) {
          const Weight sum = c[static_cast<std::size_t>(i - 1)] + c[static_cast<std::size_t>(j - 1)];
          if (sum.x % 2 != 0 || sum.y % 2 != 0) integral = false;
          return Weight{sum.x / 2, sum.y / 2};
        },
        s);
    if (integral && is_homogeneous(g) && is_pointed(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace fixtures
