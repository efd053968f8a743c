#pragma once

#include "igrass/cone.hpp"
#include "igrass/error.hpp"
#include "igrass/grading.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace igrass {

/// A generator of the Cox ring: T_ij or S_l.
struct Generator {
  enum class Kind { T, S };
  Kind kind{Kind::T};
  PairIndex pair{};
  int free_index{0};

  static Generator t(PairIndex p) { return {Kind::T, p, 0}; }
  static Generator s(int l) { return {Kind::S, {}, l}; }

  [[nodiscard]] bool is_free() const { return kind == Kind::S; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Generator& g) {
  if (g.is_free()) return os << 'S' << g.free_index;
  return os << 'T' << g.pair.i << g.pair.j;
}

/// Column of a generator in Q.
inline int column_of(const Generator& gen, int n) {
  return gen.is_free() ? pair_count(n) + gen.free_index - 1 : lex_position(gen.pair, n);
}

inline Generator generator_at(int column, int n) {
  const int tc = pair_count(n);
  if (column >= tc) return Generator::s(column - tc + 1);
  int i = 1;
  while (column >= n - i) {
    column -= n - i;
    ++i;
  }
  return Generator::t({i, i + 1 + column});
}

inline Weight weight_of(const GradingData& g, const Generator& gen) {
  return gen.is_free() ? g.s(gen.free_index) : g.t(gen.pair);
}

/// Orthant face spanned by the listed coordinate rays.
struct Face {
  std::set<PairIndex> t_members;
  std::set<int> s_members;

  static Face of(std::initializer_list<Generator> gens) {
    Face f;
    for (const auto& g : gens) f.add(g);
    return f;
  }

  void add(const Generator& g) {
    if (g.is_free())
      s_members.insert(g.free_index);
    else
      t_members.insert(g.pair);
  }

  [[nodiscard]] std::size_t size() const { return t_members.size() + s_members.size(); }

  [[nodiscard]] std::vector<Generator> generators() const {
    std::vector<Generator> out;
    for (const auto& p : t_members) out.push_back(Generator::t(p));
    for (int l : s_members) out.push_back(Generator::s(l));
    return out;
  }

  friend auto operator<=>(const Face&, const Face&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Face& f) {
  os << '{';
  bool first = true;
  for (const auto& p : f.t_members) {
    if (!first) os << ',';
    first = false;
    os << p.i << p.j;
  }
  for (int l : f.s_members) {
    if (!first) os << ',';
    first = false;
    os << 'S' << l;
  }
  return os << '}';
}

inline std::string to_string(const Face& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

/// Two generators span an X-bar face unless they are two pairs with four distinct indices.
inline bool is_x_face_pair(const Generator& a, const Generator& b) {
  if (a.is_free() || b.is_free()) return true;
  std::set<int> idx{a.pair.i, a.pair.j, b.pair.i, b.pair.j};
  return idx.size() == 3;
}

/// All X-bar faces with at most two rays, ordered by (size, columns).
inline std::vector<Face> two_dim_x_faces(int n, int m) {
  if (n < 4) fail(ErrorCode::InvalidParameter, "faces need n >= 4");
  if (m < 0) fail(ErrorCode::InvalidParameter, "m must be nonnegative");
  const int cols = pair_count(n) + m;
  std::vector<Face> out;
  for (int c = 0; c < cols; ++c) out.push_back(Face::of({generator_at(c, n)}));
  for (int c = 0; c < cols; ++c)
    for (int d = c + 1; d < cols; ++d) {
      const auto a = generator_at(c, n);
      const auto b = generator_at(d, n);
      if (is_x_face_pair(a, b)) out.push_back(Face::of({a, b}));
    }
  return out;
}

/// Generators on either side of the chamber of u.
///
/// plus lies clockwise of u (cross(w,u) > 0), minus counterclockwise.
struct TauSplit {
  std::vector<Generator> plus;
  std::vector<Generator> minus;
  Cone2 chamber;

  [[nodiscard]] bool in_plus(const Generator& g) const {
    return std::find(plus.begin(), plus.end(), g) != plus.end();
  }
};

inline TauSplit tau_split(const GradingData& g, Weight u) {
  if (!is_pointed(g)) fail(ErrorCode::Precondition, "tau split needs a pointed grading");
  const Cone2 mov = moving_cone(g);
  if (!mov.is_full_dimensional() || !mov.contains_in_relative_interior(u))
    fail(ErrorCode::ChamberDegenerate, "class " + to_string(u) + " is not in the interior of " + mov.to_string());

  TauSplit split;
  std::optional<Weight> cw;
  std::optional<Weight> ccw;
  for (int c = 0; c < g.columns(); ++c) {
    const Weight w = g.column(c);
    const auto side = cross(w, u);
    if (side == 0)
      fail(ErrorCode::ChamberDegenerate, "class " + to_string(u) + " lies on the weight ray " + to_string(w));
    if (side > 0) {
      split.plus.push_back(generator_at(c, g.n()));
      if (!cw || cross(*cw, w) > 0) cw = w;
    } else {
      split.minus.push_back(generator_at(c, g.n()));
      if (!ccw || cross(w, *ccw) > 0) ccw = w;
    }
  }
  if (!cw || !ccw) fail(ErrorCode::ChamberDegenerate, "all weights lie on one side of " + to_string(u));
  split.chamber = Cone2::spanned_by(*cw, *ccw);
  return split;
}

/// Two-dimensional X-bar faces with one ray on each side of the chamber, in column order.
inline std::vector<Face> relevant_two_faces(const GradingData& g, const TauSplit& split) {
  std::vector<Face> out;
  const int n = g.n();
  for (int c = 0; c < g.columns(); ++c)
    for (int d = c + 1; d < g.columns(); ++d) {
      const auto a = generator_at(c, n);
      const auto b = generator_at(d, n);
      if (split.in_plus(a) == split.in_plus(b)) continue;
      if (is_x_face_pair(a, b)) out.push_back(Face::of({a, b}));
    }
  return out;
}

/// Connecting-pair search for disjoint i1j1 (plus) and i2j2 (minus): a face containing
/// both meets X-bar only if it also contains {i1i2, j1j2} or {i1j2, i2j1}; one of these
/// must complete a relevant X-bar 2-face inside it.
inline bool minimal_relevant_faces_two_dimensional(const TauSplit& split) {
  auto has_relevant_pair = [&](const std::vector<Generator>& gens) {
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b)
        if (split.in_plus(gens[a]) != split.in_plus(gens[b]) && is_x_face_pair(gens[a], gens[b])) return true;
    return false;
  };
  auto pair_gen = [](int a, int b) { return Generator::t({std::min(a, b), std::max(a, b)}); };
  for (const auto& p : split.plus) {
    if (p.is_free()) continue;
    for (const auto& q : split.minus) {
      if (q.is_free()) continue;
      const int i1 = p.pair.i, j1 = p.pair.j, i2 = q.pair.i, j2 = q.pair.j;
      if (std::set<int>{i1, j1, i2, j2}.size() != 4) continue;
      const bool connected = has_relevant_pair({p, q, pair_gen(i1, i2), pair_gen(j1, j2)}) ||
                             has_relevant_pair({p, q, pair_gen(i1, j2), pair_gen(i2, j1)});
      if (!connected) return false;
    }
  }
  return true;
}

inline std::vector<Face> checked_relevant_faces(const GradingData& g, Weight u, TauSplit& split) {
  split = tau_split(g, u);
  if (!minimal_relevant_faces_two_dimensional(split))
    fail(ErrorCode::UnknownStructure, "could not rule out minimal relevant faces of dimension above two");
  auto faces = relevant_two_faces(g, split);
  if (faces.empty()) fail(ErrorCode::UnknownStructure, "no relevant two-dimensional faces");
  return faces;
}

inline std::pair<Weight, Weight> face_weights(const GradingData& g, const Face& f) {
  const auto gens = f.generators();
  return {weight_of(g, gens.at(0)), weight_of(g, gens.at(1))};
}

inline Cone2 semiample_cone(const GradingData& g, Weight u) {
  TauSplit split;
  const auto faces = checked_relevant_faces(g, u, split);
  Cone2 result = Cone2::full();
  for (const auto& f : faces) {
    const auto [w1, w2] = face_weights(g, f);
    result = result.intersect(Cone2::spanned_by(w1, w2));
  }
  return result;
}

inline bool is_unimodular_face(const GradingData& g, const Face& f) {
  const auto [w1, w2] = face_weights(g, f);
  return std::llabs(cross(w1, w2)) == 1;
}

inline bool picard_subgroup_is_full(const GradingData& g, Weight u) {
  TauSplit split;
  const auto faces = checked_relevant_faces(g, u, split);
  return std::all_of(faces.begin(), faces.end(), [&](const Face& f) { return is_unimodular_face(g, f); });
}

/// Lattice points p with |p.x|,|p.y| <= radius where membership in SAmple and in every
/// face monoid N w + N w' disagree. Empty iff the BPF monoid is saturated on the box.
inline std::vector<Weight> bpf_defects_in_box(const GradingData& g, Weight u, int radius) {
  TauSplit split;
  const auto faces = checked_relevant_faces(g, u, split);
  Cone2 sample = Cone2::full();
  for (const auto& f : faces) {
    const auto [w1, w2] = face_weights(g, f);
    sample = sample.intersect(Cone2::spanned_by(w1, w2));
  }
  auto in_monoid = [](Weight p, Weight w1, Weight w2) {
    const auto det = cross(w1, w2);
    const auto a = cross(p, w2);
    const auto b = cross(w1, p);
    return a % det == 0 && b % det == 0 && a / det >= 0 && b / det >= 0;
  };
  std::vector<Weight> defects;
  for (int x = -radius; x <= radius; ++x)
    for (int y = -radius; y <= radius; ++y) {
      const Weight p{x, y};
      bool all = true;
      for (const auto& f : faces) {
        const auto [w1, w2] = face_weights(g, f);
        if (!in_monoid(p, w1, w2)) {
          all = false;
          break;
        }
      }
      if (all != sample.contains(p)) defects.push_back(p);
    }
  return defects;
}

}  // namespace igrass
