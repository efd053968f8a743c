#pragma once

#include "igrass/classify.hpp"
#include "igrass/error.hpp"
#include "igrass/faces.hpp"
#include "igrass/grading.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace igrass {

enum class Smoothness { Smooth, NotSmooth, Unknown };

constexpr std::string_view to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::NotSmooth: return "not-smooth";
    case Smoothness::Unknown: return "unknown";
  }
  return "?";
}

/// NotSmooth carries a witness face or the name of the failed predicate.
struct SmoothnessVerdict {
  Smoothness status{Smoothness::Unknown};
  std::optional<Face> witness;
  std::string predicate;
  std::optional<Recognition> recognition;

  [[nodiscard]] std::string describe() const {
    std::string out(to_string(status));
    if (witness) out += " witness " + to_string(*witness);
    if (!predicate.empty()) out += " (" + predicate + ")";
    if (recognition) out += " " + to_string(recognition->variety);
    return out;
  }
};

/// Necessary conditions first, each with a witness; Smooth needs a type match on top.
inline SmoothnessVerdict verify_smooth(const GradingData& g, Weight u) {
  auto not_smooth = [](std::string predicate, std::optional<Face> witness = std::nullopt) {
    return SmoothnessVerdict{Smoothness::NotSmooth, std::move(witness), std::move(predicate), std::nullopt};
  };
  if (!is_homogeneous(g)) return not_smooth("homogeneous");
  if (!is_pointed(g)) return not_smooth("pointed");
  if (!moving_cone(g).is_full_dimensional()) return not_smooth("moving-cone-full");

  TauSplit split;
  try {
    split = tau_split(g, u);
  } catch (const Error&) {
    return not_smooth("ample-class");
  }

  for (const auto& p : split.plus)
    if (p.is_free())
      for (const auto& q : split.minus)
        if (q.is_free()) return not_smooth("free-weights-split", Face::of({p, q}));

  for (const auto& f : relevant_two_faces(g, split)) {
    if (!is_unimodular_face(g, f)) return not_smooth("unimodular", f);
    if (f.t_members.empty()) return not_smooth("pair-generator-in-face", f);
  }

  if (!is_almost_free(g)) return not_smooth("almost-free");
  if (!minimal_relevant_faces_two_dimensional(split)) return {Smoothness::Unknown, std::nullopt, "minimal-faces", std::nullopt};

  auto rec = recognize(g, u);
  if (!rec) return {Smoothness::Unknown, std::nullopt, "unrecognized", std::nullopt};
  return {Smoothness::Smooth, std::nullopt, "", std::move(rec)};
}

/// Every relevant 2-face maps onto a lattice basis, so each face monoid is saturated
/// and so is their intersection BPF = SAmple ∩ Z^2.
inline bool bpf_saturated(const GradingData& g, Weight u) {
  const auto verdict = verify_smooth(g, u);
  if (verdict.status != Smoothness::Smooth)
    fail(ErrorCode::Precondition, "base-point-free check needs a smooth instance, got " + verdict.describe());
  return picard_subgroup_is_full(g, u);
}

}  // namespace igrass
