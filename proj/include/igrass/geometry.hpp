#pragma once

#include "igrass/classify.hpp"
#include "igrass/error.hpp"
#include "igrass/faces.hpp"
#include "igrass/grading.hpp"
#include "igrass/smoothness.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace igrass {

enum class ContractionKind { FiberType, Divisorial, Small };

constexpr std::string_view to_string(ContractionKind k) {
  switch (k) {
    case ContractionKind::FiberType: return "fiber-type";
    case ContractionKind::Divisorial: return "divisorial";
    case ContractionKind::Small: return "small";
  }
  return "?";
}

/// Kind of the contraction defined by a semiample, non-ample class.
inline ContractionKind contraction_kind(const GradingData& g, Weight u, Weight cls) {
  const Cone2 sample = semiample_cone(g, u);
  if (cls.is_zero() || !sample.contains(cls))
    fail(ErrorCode::Precondition, "class " + to_string(cls) + " is not a nonzero element of " + sample.to_string());
  if (sample.contains_in_relative_interior(cls))
    fail(ErrorCode::NoContraction, "class " + to_string(cls) + " is ample");
  if (effective_cone(g).on_boundary(cls)) return ContractionKind::FiberType;
  if (moving_cone(g).on_boundary(cls)) return ContractionKind::Divisorial;
  return ContractionKind::Small;
}

/// Split-bundle data read off the normalized weights: s weights (1,0), then (a,1) and (a,2).
struct BundleData {
  int s{0};
  int t1{0};
  int t2{0};
  std::vector<int> twists1;
  std::vector<int> twists2;

  [[nodiscard]] int t() const { return t1 + t2; }
};

inline BundleData bundle_data(const GradingData& g, Weight u) {
  const auto rec = recognize(g, u);
  if (!rec) fail(ErrorCode::NotApplicable, "grading is not recognized as a classified type");
  const int type = rec->variety.type();
  if (type == 3 || type == 4)
    fail(ErrorCode::NotApplicable, "the plus side of Type " + std::to_string(type) + " is not all (1,0)");
  BundleData out;
  for (const Weight& w : transform(g, rec->basis).all_weights()) {
    if (w == Weight{1, 0}) {
      ++out.s;
    } else if (w.y == 1) {
      out.twists1.push_back(static_cast<int>(w.x));
    } else if (w.y == 2) {
      out.twists2.push_back(static_cast<int>(w.x));
    } else {
      fail(ErrorCode::NotApplicable, "weight " + to_string(w) + " does not fit a split bundle");
    }
  }
  std::sort(out.twists1.begin(), out.twists1.end());
  std::sort(out.twists2.begin(), out.twists2.end());
  out.t1 = static_cast<int>(out.twists1.size());
  out.t2 = static_cast<int>(out.twists2.size());
  return out;
}

struct ContractionRecord {
  Weight cls;
  ContractionKind kind{ContractionKind::FiberType};
  std::string description;
};

struct Fibration {
  std::string base;
  std::string fiber;
  int base_dimension{0};
  /// dim X - dim base.
  int fiber_dimension{0};
  /// Fiber dimension as quoted for the type, when it is given in closed form.
  std::optional<int> stated_fiber_dimension;
};

struct GeometryReport {
  TypedVariety variety;
  int dim_x{0};
  Cone2 effective;
  Cone2 moving;
  Cone2 semiample;
  std::vector<ContractionRecord> contractions;
  std::optional<BundleData> bundle;
  std::optional<Fibration> fibration;
  std::vector<std::string> centers;
  bool fujita{false};
};

inline bool fujita_statement(const TypedVariety& v) {
  const auto built = build(v);
  return bpf_saturated(built.grading, built.ample);
}

namespace detail {

inline std::string proj(int d) { return "P^" + std::to_string(d); }

inline int choose2(int k) { return k * (k - 1) / 2; }

inline std::string describe_contraction(ContractionKind kind) {
  switch (kind) {
    case ContractionKind::FiberType: return "fibration onto a lower-dimensional variety";
    case ContractionKind::Divisorial: return "birational contraction of a prime divisor";
    case ContractionKind::Small: return "birational small contraction";
  }
  return "";
}

}  // namespace detail

inline GeometryReport geometry_report(const TypedVariety& v) {
  const auto built = build(v);
  const auto& g = built.grading;
  GeometryReport r;
  r.variety = v;
  r.dim_x = dim_x(v.n, v.m);
  r.effective = effective_cone(g);
  r.moving = moving_cone(g);
  r.semiample = semiample_cone(g, built.ample);
  for (const Weight& ray : r.semiample.rays()) {
    const auto kind = contraction_kind(g, built.ample, ray);
    r.contractions.push_back({ray, kind, detail::describe_contraction(kind)});
  }
  const int n = v.n;
  const int m = v.m;
  std::visit(detail::overloaded{
                 [&](const Type1Params& p) {
                   const int base_dim = 2 * (p.k - 3);
                   r.bundle = bundle_data(g, built.ample);
                   r.fibration = Fibration{"Gr(2," + std::to_string(p.k - 1) + ") in " +
                                               detail::proj(detail::choose2(p.k - 1) - 1),
                                           "subvariety of the weighted projective space with weights 1^" +
                                               std::to_string(r.bundle->t1) + ",2^" + std::to_string(r.bundle->t2),
                                           base_dim, r.dim_x - base_dim, 2 * (n - p.k) + 3};
                 },
                 [&](const Type2Params&) {
                   r.bundle = bundle_data(g, built.ample);
                   r.fibration = Fibration{detail::proj(n - 2), detail::proj(n + m - 3), n - 2, r.dim_x - (n - 2),
                                           n + m - 3};
                 },
                 [&](const Type3Params& p) {
                   if (m == 1)
                     r.centers.push_back("divisorial contraction with center V(I_{2," + std::to_string(p.k - 1) +
                                         "}, T_ij; j >= " + std::to_string(p.k) + ")");
                 },
                 [&](const Type4Params&) {
                   if (m == 1) r.centers.push_back("divisorial contraction with center V(T_ij; j >= 3)");
                   if (n == 4) {
                     std::string ideal = "T13*T24-T14*T23";
                     for (int l = 1; l <= m; ++l) ideal += ", S" + std::to_string(l);
                     r.centers.push_back("blow-up of " + detail::proj(3 + m) + " with center V(" + ideal + ")");
                   }
                 },
                 [&](const Type5Params&) {
                   r.bundle = bundle_data(g, built.ample);
                   r.fibration = Fibration{detail::proj(m - 1), "Gr(2," + std::to_string(n) + ")", m - 1,
                                           r.dim_x - (m - 1), 2 * (n - 2)};
                 },
                 [&](const Type6Params&) {
                   r.bundle = bundle_data(g, built.ample);
                   r.fibration = Fibration{"Gr(2," + std::to_string(n) + ")", detail::proj(m - 1), 2 * (n - 2),
                                           r.dim_x - 2 * (n - 2), m - 1};
                 },
             },
             v.params);
  r.fujita = fujita_statement(v);
  return r;
}

}  // namespace igrass
