#include "oracles.hpp"

#include "igrass/igrass.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace igrass;

namespace {

Monomial from_list(const oracles::PairList& ps) {
  Monomial m;
  for (const auto& [i, j] : ps) m.multiply({i, j});
  return m;
}

oracles::PairList to_list(const Monomial& m) {
  oracles::PairList out;
  for (const auto& p : m.pairs()) out.emplace_back(p.i, p.j);
  return out;
}

void expect_matches_oracle(int n, const oracles::PairList& mono) {
  const auto got = straighten(from_list(mono));
  const auto want = oracles::normal_form(n, mono);
  ASSERT_EQ(got.size(), want.size());
  for (const auto& [m, c] : got) {
    const auto it = want.find(to_list(m));
    ASSERT_NE(it, want.end()) << m;
    EXPECT_EQ(oracles::Rational(c), it->second) << m;
  }
}

}  // namespace

TEST(Quadruples, CountsAreBinomial) {
  EXPECT_EQ(quadruples(4), (std::vector<Quad>{{1, 2, 3, 4}}));
  EXPECT_EQ(quadruples(5).size(), 5u);
  EXPECT_EQ(quadruples(8).size(), 70u);
  EXPECT_THROW(quadruples(3), Error);
}

TEST(Quadruples, LexicographicAndIncreasing) {
  const auto qs = quadruples(7);
  EXPECT_TRUE(std::is_sorted(qs.begin(), qs.end()));
  for (const auto& q : qs) EXPECT_TRUE(q[0] < q[1] && q[1] < q[2] && q[2] < q[3]);
}

TEST(Relation, SignPattern) {
  EXPECT_EQ(to_string(relation({1, 2, 3, 4})), "+T12*T34 -T13*T24 +T14*T23");
  EXPECT_EQ(to_string(relation({1, 2, 3, 5})), "+T12*T35 -T13*T25 +T15*T23");
  EXPECT_EQ(to_string(relation({2, 4, 6, 8})), "+T24*T68 -T26*T48 +T28*T46");
}

TEST(Relation, RejectsBadQuadruples) {
  EXPECT_THROW(relation({1, 3, 2, 4}), Error);
  EXPECT_THROW(relation({1, 1, 2, 3}), Error);
  EXPECT_THROW(relation({0, 1, 2, 3}), Error);
}

TEST(Standard, Examples) {
  EXPECT_TRUE(is_standard(Monomial::of_pairs({{1, 2}, {3, 4}})));
  EXPECT_FALSE(is_standard(Monomial::of_pairs({{1, 4}, {2, 3}})));
  EXPECT_TRUE(is_standard(Monomial::of_pairs({{1, 3}, {1, 3}, {2, 4}})));
  EXPECT_TRUE(is_standard(Monomial{}));
}

TEST(Standard, AgreesWithPairwiseComparability) {
  for (const std::vector<int>& content : {std::vector<int>{1, 1, 1, 1, 1, 1}, std::vector<int>{2, 1, 2, 1, 1, 1}})
    for (const auto& ps : oracles::pair_multisets(6, content, std::accumulate(content.begin(), content.end(), 0) / 2))
      EXPECT_EQ(is_standard(from_list(ps)), oracles::pairwise_comparable(ps));
}

TEST(Straighten, TwoByTwo) {
  const auto r = straighten(Monomial::of_pairs({{1, 4}, {2, 3}}));
  const Combination want{{Monomial::of_pairs({{1, 3}, {2, 4}}), 1}, {Monomial::of_pairs({{1, 2}, {3, 4}}), -1}};
  EXPECT_EQ(r, want);
}

TEST(Straighten, IdentityOnStandard) {
  const auto m = Monomial::of_pairs({{1, 2}, {3, 4}});
  EXPECT_EQ(straighten(m), (Combination{{m, 1}}));
}

TEST(Straighten, DegreeThreeMatchesDenseOracle) {
  expect_matches_oracle(6, {{1, 5}, {2, 4}, {3, 6}});
}

TEST(Straighten, EveryMonomialUpToDegreeThreeMatchesOracle) {
  for (int n = 4; n <= 6; ++n)
    for (int d = 2; d <= 3; ++d) {
      // Every content vector with entries <= 2 summing to 2d.
      std::vector<int> content(static_cast<std::size_t>(n), 0);
      std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int left) {
        if (pos == content.size()) {
          if (left != 0) return;
          for (const auto& ps : oracles::pair_multisets(n, content, d)) expect_matches_oracle(n, ps);
          return;
        }
        for (int v = 0; v <= std::min(2, left); ++v) {
          content[pos] = v;
          walk(pos + 1, left - v);
        }
        content[pos] = 0;
      };
      walk(0, 2 * d);
    }
}

TEST(Straighten, OutputIsStandardAndIdempotent) {
  const auto m = Monomial::of_pairs({{1, 6}, {2, 5}, {3, 4}, {1, 5}});
  const auto r = straighten(m);
  for (const auto& [mono, c] : r) {
    EXPECT_TRUE(is_standard(mono));
    EXPECT_EQ(straighten(mono), (Combination{{mono, 1}}));
  }
}

TEST(Straighten, RelationsStraightenToZero) {
  for (const auto& q : quadruples(6)) {
    Combination total;
    for (const auto& t : relation(q).terms)
      for (const auto& [mono, c] : straighten(Monomial::of_pairs({t.left, t.right}))) total[mono] += t.sign * c;
    for (const auto& [mono, c] : total) EXPECT_EQ(c, 0) << mono;
  }
}

TEST(Straighten, KeepsFreeExponents) {
  Monomial m = Monomial::of_pairs({{1, 4}, {2, 3}});
  m.s_exponents = {2, 0, 1};
  for (const auto& [mono, c] : straighten(m)) EXPECT_EQ(mono.s_exponents, m.s_exponents);
}

TEST(Relation, HomogeneousUnderHomogeneousGradings) {
  const auto g = build(make_type1(7, 5, {0, 1, 2})).grading;
  for (const auto& q : quadruples(7)) {
    const auto r = relation(q);
    const Weight w0 = g.t(r.terms[0].left) + g.t(r.terms[0].right);
    for (const auto& t : r.terms) EXPECT_EQ(g.t(t.left) + g.t(t.right), w0);
  }
}
