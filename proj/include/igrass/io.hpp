#pragma once

#include "igrass/classify.hpp"
#include "igrass/cone.hpp"
#include "igrass/error.hpp"
#include "igrass/grading.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace igrass {

using json = nlohmann::ordered_json;

inline json to_json(Weight w) { return json::array({w.x, w.y}); }

inline json to_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const Weight& w : ws) out.push_back(to_json(w));
  return out;
}

inline json to_json(const Cone2& c) {
  json out{{"kind", std::string(to_string(c.kind()))}};
  out["rays"] = to_json(c.rays());
  if (c.kind() == Cone2::Kind::Line || c.kind() == Cone2::Kind::HalfPlane) out["boundary"] = to_json(c.first_ray());
  return out;
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { fail(ErrorCode::Parse, what); }

inline std::int64_t int_field(const json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) parse_fail(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

inline std::vector<int> int_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& v = j.at(key);
  if (!v.is_array()) parse_fail(std::string("field '") + key + "' must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) parse_fail(std::string("field '") + key + "' must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace detail

inline Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    detail::parse_fail("a weight must be a pair of integers [x, y]; other class groups are not supported");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

inline std::vector<Weight> weights_from_json(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array()) detail::parse_fail(std::string("field '") + key + "' must be an array");
  std::vector<Weight> out;
  for (const auto& w : j.at(key)) out.push_back(weight_from_json(w));
  return out;
}

inline json to_json(const GradingData& g) {
  return json{{"n", g.n()}, {"m", g.m()}, {"t_weights", to_json(g.t_weights())}, {"s_weights", to_json(g.s_weights())}};
}

inline GradingData grading_from_json(const json& j) {
  if (!j.is_object()) detail::parse_fail("grading must be a JSON object");
  const auto n = static_cast<int>(detail::int_field(j, "n"));
  auto t = weights_from_json(j, "t_weights");
  auto s = weights_from_json(j, "s_weights");
  if (j.contains("m") && detail::int_field(j, "m") != static_cast<std::int64_t>(s.size()))
    detail::parse_fail("field 'm' does not match the number of s_weights");
  try {
    return GradingData(n, std::move(t), std::move(s));
  } catch (const Error& e) {
    detail::parse_fail(e.what());
  }
}

inline json params_to_json(const TypedVariety& v) {
  return std::visit(detail::overloaded{
                        [](const Type1Params& p) {
                          return json{{"k", p.k}, {"a", p.a}, {"alpha", p.alpha}, {"beta", p.beta}};
                        },
                        [](const Type2Params& p) { return json{{"a", p.a}, {"alpha", p.alpha}, {"beta", p.beta}}; },
                        [](const Type3Params& p) { return json{{"k", p.k}}; },
                        [](const Type4Params&) { return json::object(); },
                        [](const Type5Params& p) { return json{{"b1", p.b1}, {"b2", p.b2}, {"alpha", p.alpha}}; },
                        [](const Type6Params& p) { return json{{"beta", p.beta}}; },
                    },
                    v.params);
}

/// Variety record with its matrix, -K and Fano status.
inline json to_json(const TypedVariety& v) {
  const auto built = build(v);
  return json{{"type", v.type()},
              {"n", v.n},
              {"m", v.m},
              {"params", params_to_json(v)},
              {"matrix", to_json(built.grading.all_weights())},
              {"antican", to_json(anticanonical(built.grading))},
              {"fano", std::string(to_string(fano_status_by_criterion(v)))}};
}

inline TypedVariety variety_from_json(const json& j) {
  if (!j.is_object()) detail::parse_fail("variety must be a JSON object");
  const auto type = detail::int_field(j, "type");
  const auto n = static_cast<int>(detail::int_field(j, "n"));
  const json params = j.contains("params") ? j.at("params") : json::object();
  TypedVariety v;
  v.n = n;
  v.m = j.contains("m") ? static_cast<int>(detail::int_field(j, "m")) : 0;
  switch (type) {
    case 1: {
      auto alpha = detail::int_list(params, "alpha");
      auto beta = detail::int_list(params, "beta");
      v.m = static_cast<int>(beta.size());
      const int a = params.contains("a") ? static_cast<int>(detail::int_field(params, "a"))
                                         : std::max(alpha.empty() ? 0 : alpha.back(), beta.empty() ? 0 : beta.back());
      v.params = Type1Params{static_cast<int>(detail::int_field(params, "k")), a, std::move(alpha), std::move(beta)};
      break;
    }
    case 2: {
      auto beta = detail::int_list(params, "beta");
      v.m = static_cast<int>(beta.size());
      const int alpha = static_cast<int>(detail::int_field(params, "alpha"));
      const int a = params.contains("a") ? static_cast<int>(detail::int_field(params, "a"))
                                         : std::max(alpha, beta.empty() ? 0 : beta.back());
      v.params = Type2Params{a, alpha, std::move(beta)};
      break;
    }
    case 3: v.params = Type3Params{static_cast<int>(detail::int_field(params, "k"))}; break;
    case 4: v.params = Type4Params{}; break;
    case 5:
      v.params = Type5Params{static_cast<int>(detail::int_field(params, "b1")),
                             static_cast<int>(detail::int_field(params, "b2")), detail::int_list(params, "alpha")};
      break;
    case 6: {
      auto beta = detail::int_list(params, "beta");
      v.m = static_cast<int>(beta.size());
      v.params = Type6Params{std::move(beta)};
      break;
    }
    default: detail::parse_fail("type must be between 1 and 6");
  }
  if (j.contains("m") && detail::int_field(j, "m") != v.m) detail::parse_fail("field 'm' does not match the parameters");
  validate(v);
  return v;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::parse_fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    detail::parse_fail(path + ": " + e.what());
  }
}

/// "x,y" -> Weight.
inline Weight parse_weight(const std::string& text) {
  std::istringstream in(text);
  std::int64_t x = 0;
  std::int64_t y = 0;
  char comma = 0;
  if (!(in >> x >> comma >> y) || comma != ',' || !(in >> std::ws).eof())
    detail::parse_fail("expected a class as x,y but got '" + text + "'");
  return {x, y};
}

}  // namespace igrass
