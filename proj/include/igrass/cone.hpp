#pragma once

#include "igrass/error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace igrass {

/// A class in Cl(X) = Z^2.
struct Weight {
  std::int64_t x{0};
  std::int64_t y{0};

  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  constexpr Weight& operator+=(Weight o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Weight& operator-=(Weight o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Weight operator+(Weight a, Weight b) { return a += b; }
  friend constexpr Weight operator-(Weight a, Weight b) { return a -= b; }
  friend constexpr Weight operator-(Weight a) { return {-a.x, -a.y}; }
  friend constexpr Weight operator*(std::int64_t s, Weight a) { return {s * a.x, s * a.y}; }

  [[nodiscard]] constexpr bool is_zero() const { return x == 0 && y == 0; }
};

inline std::ostream& operator<<(std::ostream& os, Weight w) {
  return os << '(' << w.x << ',' << w.y << ')';
}

inline std::string to_string(Weight w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

constexpr std::int64_t cross(Weight a, Weight b) { return a.x * b.y - a.y * b.x; }
constexpr std::int64_t dot(Weight a, Weight b) { return a.x * b.x + a.y * b.y; }

constexpr std::int64_t gcd_of(Weight w) { return std::gcd(w.x, w.y); }

/// Divides by the gcd of the coordinates; the zero vector is returned unchanged.
constexpr Weight primitive(Weight w) {
  const std::int64_t g = gcd_of(w);
  if (g == 0) return w;
  return {w.x / g, w.y / g};
}

/// Same direction (positive multiples, both nonzero).
constexpr bool same_ray(Weight a, Weight b) {
  return !a.is_zero() && !b.is_zero() && cross(a, b) == 0 && dot(a, b) > 0;
}

/// Counterclockwise angular order on nonzero vectors, starting at the positive x-axis.
constexpr bool angle_less(Weight a, Weight b) {
  auto half = [](Weight w) { return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1; };
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

/// Integer 2x2 matrix acting on column vectors; used for basis changes of Z^2.
struct Mat2 {
  std::int64_t a{1}, b{0}, c{0}, d{1};

  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;

  [[nodiscard]] constexpr std::int64_t det() const { return a * d - b * c; }
  [[nodiscard]] constexpr Weight apply(Weight w) const { return {a * w.x + b * w.y, c * w.x + d * w.y}; }
  constexpr Weight operator()(Weight w) const { return apply(w); }

  friend constexpr Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }

  /// Matrix whose columns are the given vectors.
  static constexpr Mat2 from_columns(Weight first, Weight second) {
    return {first.x, second.x, first.y, second.y};
  }

  static constexpr Mat2 identity() { return {}; }
  static constexpr Mat2 swap_xy() { return {0, 1, 1, 0}; }
};

/// Inverse of a unimodular matrix.
inline Mat2 unimodular_inverse(const Mat2& m) {
  const auto det = m.det();
  if (det != 1 && det != -1) fail(ErrorCode::InvalidParameter, "matrix is not unimodular");
  return {m.d * det, -m.b * det, -m.c * det, m.a * det};
}

/// A closed convex rational cone in Q^2.
///
/// Salient cones keep their rays counterclockwise: cross(first, second) > 0.
/// A half-plane is {v : cross(first, v) >= 0}; a line is spanned by +-first.
class Cone2 {
 public:
  enum class Kind { Zero, Ray, Salient, Line, HalfPlane, Full };

  Cone2() = default;

  static Cone2 zero() { return Cone2{}; }
  static Cone2 full() { return Cone2(Kind::Full, {}, {}); }
  static Cone2 ray(Weight r) {
    if (r.is_zero()) return zero();
    return Cone2(Kind::Ray, primitive(r), {});
  }
  static Cone2 line(Weight r) {
    if (r.is_zero()) return zero();
    r = primitive(r);
    if (angle_less(-r, r)) r = -r;
    return Cone2(Kind::Line, r, {});
  }
  static Cone2 half_plane(Weight boundary) {
    if (boundary.is_zero()) fail(ErrorCode::InvalidParameter, "half-plane needs a nonzero boundary");
    return Cone2(Kind::HalfPlane, primitive(boundary), {});
  }
  /// cone(first, second); the order of the arguments does not matter.
  static Cone2 spanned_by(Weight first, Weight second) {
    const std::vector<Weight> gens{first, second};
    return hull(gens);
  }

  /// Smallest closed cone containing all given vectors.
  static Cone2 hull(std::span<const Weight> generators) {
    std::vector<Weight> dirs;
    for (const Weight& w : generators)
      if (!w.is_zero()) dirs.push_back(primitive(w));
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    if (dirs.empty()) return zero();
    if (dirs.size() == 1) return ray(dirs.front());

    const std::size_t k = dirs.size();
    std::optional<std::size_t> straight_gap;
    for (std::size_t i = 0; i < k; ++i) {
      const Weight from = dirs[i];
      const Weight to = dirs[(i + 1) % k];
      const auto cr = cross(from, to);
      if (cr < 0) return Cone2(Kind::Salient, to, from);
      if (cr == 0) straight_gap = i;
    }
    if (straight_gap) {
      if (k == 2) return line(dirs[0]);
      return half_plane(dirs[(*straight_gap + 1) % k]);
    }
    return full();
  }

  [[nodiscard]] Kind kind() const { return kind_; }

  /// Linear dimension of the cone.
  [[nodiscard]] int dimension() const {
    switch (kind_) {
      case Kind::Zero: return 0;
      case Kind::Ray:
      case Kind::Line: return 1;
      default: return 2;
    }
  }

  [[nodiscard]] bool is_full_dimensional() const { return dimension() == 2; }
  [[nodiscard]] bool is_salient() const {
    return kind_ == Kind::Zero || kind_ == Kind::Ray || kind_ == Kind::Salient;
  }

  /// Primitive extremal rays (Ray: one, Salient: two counterclockwise, otherwise empty).
  [[nodiscard]] std::vector<Weight> rays() const {
    switch (kind_) {
      case Kind::Ray: return {first_};
      case Kind::Salient: return {first_, second_};
      default: return {};
    }
  }

  [[nodiscard]] Weight first_ray() const { return first_; }
  [[nodiscard]] Weight second_ray() const { return second_; }

  [[nodiscard]] bool contains(Weight v) const {
    switch (kind_) {
      case Kind::Zero: return v.is_zero();
      case Kind::Ray: return v.is_zero() || same_ray(first_, v);
      case Kind::Line: return cross(first_, v) == 0;
      case Kind::HalfPlane: return cross(first_, v) >= 0;
      case Kind::Full: return true;
      case Kind::Salient: return cross(first_, v) >= 0 && cross(v, second_) >= 0;
    }
    return false;
  }

  /// Membership in the relative interior.
  [[nodiscard]] bool contains_in_relative_interior(Weight v) const {
    switch (kind_) {
      case Kind::Zero: return v.is_zero();
      case Kind::Ray: return same_ray(first_, v);
      case Kind::Line: return cross(first_, v) == 0;
      case Kind::HalfPlane: return cross(first_, v) > 0;
      case Kind::Full: return true;
      case Kind::Salient: return cross(first_, v) > 0 && cross(v, second_) > 0;
    }
    return false;
  }

  /// Relative boundary: in the cone, not in its relative interior.
  [[nodiscard]] bool on_boundary(Weight v) const {
    return contains(v) && !contains_in_relative_interior(v);
  }

  /// Finite generating set; used for intersections.
  [[nodiscard]] std::vector<Weight> generators() const {
    switch (kind_) {
      case Kind::Zero: return {};
      case Kind::Ray: return {first_};
      case Kind::Salient: return {first_, second_};
      case Kind::Line: return {first_, -first_};
      case Kind::HalfPlane: return {first_, -first_, Weight{-first_.y, first_.x}};
      case Kind::Full: return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    }
    return {};
  }

  /// In the plane every boundary ray of an intersection is a boundary ray of one operand,
  /// so the intersection is spanned by the generators of each operand lying in the other.
  [[nodiscard]] Cone2 intersect(const Cone2& other) const {
    std::vector<Weight> gens;
    for (const Weight& g : generators())
      if (other.contains(g)) gens.push_back(g);
    for (const Weight& g : other.generators())
      if (contains(g)) gens.push_back(g);
    return hull(gens);
  }

  [[nodiscard]] bool contains(const Cone2& other) const {
    for (const Weight& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  friend bool operator==(const Cone2&, const Cone2&) = default;

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    switch (kind_) {
      case Kind::Zero: os << "zero"; break;
      case Kind::Ray: os << "ray" << first_; break;
      case Kind::Salient: os << "cone(" << first_ << ',' << second_ << ')'; break;
      case Kind::Line: os << "line" << first_; break;
      case Kind::HalfPlane: os << "halfplane" << first_; break;
      case Kind::Full: os << "full"; break;
    }
    return os.str();
  }

 private:
  Cone2(Kind kind, Weight first, Weight second) : kind_(kind), first_(first), second_(second) {}

  Kind kind_{Kind::Zero};
  Weight first_{};
  Weight second_{};
};

inline std::ostream& operator<<(std::ostream& os, const Cone2& c) { return os << c.to_string(); }

constexpr std::string_view to_string(Cone2::Kind k) {
  switch (k) {
    case Cone2::Kind::Zero: return "zero";
    case Cone2::Kind::Ray: return "ray";
    case Cone2::Kind::Salient: return "salient";
    case Cone2::Kind::Line: return "line";
    case Cone2::Kind::HalfPlane: return "halfplane";
    case Cone2::Kind::Full: return "full";
  }
  return "?";
}

}  // namespace igrass
