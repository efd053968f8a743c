#pragma once

#include "igrass/bigint.hpp"
#include "igrass/classify.hpp"
#include "igrass/error.hpp"
#include "igrass/faces.hpp"
#include "igrass/geometry.hpp"
#include "igrass/grading.hpp"
#include "igrass/hilbert.hpp"
#include "igrass/io.hpp"
#include "igrass/plucker.hpp"
#include "igrass/smoothness.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace igrass::cli {

enum class OutputFormat { Md, Csv, Json, Text };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "md") return OutputFormat::Md;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  return OutputFormat::Text;
}

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_usage = 64;

/// Runs f(i) for i in [0, count) on up to jobs threads; results land at their index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, F&& f) {
  std::vector<T> out(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          out[i] = f(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Rows of the matrix as "[x1 x2 ...; y1 y2 ...]".
inline std::string matrix_string(const GradingData& g) {
  std::ostringstream os;
  const auto ws = g.all_weights();
  os << '[';
  for (std::size_t c = 0; c < ws.size(); ++c) os << (c ? " " : "") << ws[c].x;
  os << ';';
  for (std::size_t c = 0; c < ws.size(); ++c) os << ' ' << ws[c].y;
  os << ']';
  return os.str();
}

struct TableRow {
  int number{0};
  TypedVariety variety;
  GradingData grading;
  Weight antican;
  std::optional<BigInt> h0;
};

inline std::vector<TableRow> make_rows(const std::vector<TypedVariety>& vs, bool with_h0, unsigned jobs) {
  auto h0s = parallel_map<std::optional<BigInt>>(vs.size(), jobs, [&](std::size_t i) -> std::optional<BigInt> {
    if (!with_h0) return std::nullopt;
    return h0_anticanonical(vs[i]);
  });
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto built = build(vs[i]);
    rows.push_back({static_cast<int>(i) + 1, vs[i], built.grading, anticanonical(built.grading), h0s[i]});
  }
  return rows;
}

inline void print_rows(const std::vector<TableRow>& rows, OutputFormat format, bool with_h0, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json j{{"no", r.number}};
        j.update(to_json(r.variety));
        if (r.h0) j["h0"] = to_decimal(*r.h0);
        arr.push_back(j);
      }
      out << arr.dump(2) << '\n';
      return;
    }
    case OutputFormat::Csv: {
      out << "no,n,matrix,antican" << (with_h0 ? ",h0" : "") << '\n';
      for (const auto& r : rows) {
        out << r.number << ',' << r.variety.n << ",\"" << matrix_string(r.grading) << "\",\"" << r.antican << '"';
        if (r.h0) out << ',' << to_decimal(*r.h0);
        out << '\n';
      }
      return;
    }
    case OutputFormat::Md:
    case OutputFormat::Text: {
      out << "| No. | n | Q | -K_X |" << (with_h0 ? " h0(-K_X) |" : "") << '\n';
      out << "|---|---|---|---|" << (with_h0 ? "---|" : "") << '\n';
      for (const auto& r : rows) {
        out << "| " << r.number << " | " << r.variety.n << " | " << matrix_string(r.grading) << " | " << r.antican
            << " |";
        if (r.h0) out << ' ' << to_decimal(*r.h0) << " |";
        out << '\n';
      }
      return;
    }
  }
}

inline void print_relations(int n, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    json rels = json::array();
    for_each_quadruple(n, [&](const Quad& q) {
      const auto r = relation(q);
      json terms = json::array();
      for (const auto& t : r.terms)
        terms.push_back(json::array({t.sign, json::array({t.left.i, t.left.j}), json::array({t.right.i, t.right.j})}));
      rels.push_back(json{{"quad", q}, {"terms", terms}});
    });
    out << json{{"n", n}, {"relations", rels}}.dump() << '\n';
    return;
  }
  for_each_quadruple(n, [&](const Quad& q) {
    out << "g_" << q[0] << q[1] << q[2] << q[3] << " = " << to_string(relation(q)) << '\n';
  });
}

inline json validate_report(const GradingData& g) {
  json j{{"homogeneous", is_homogeneous(g)},
         {"pointed", is_pointed(g)},
         {"almost_free", is_almost_free(g)}};
  if (is_pointed(g)) {
    const auto mov = moving_cone(g);
    j["moving_cone_full"] = mov.is_full_dimensional();
    j["effective_cone"] = effective_cone(g).to_string();
    j["moving_cone"] = mov.to_string();
  } else {
    j["moving_cone_full"] = false;
  }
  return j;
}

inline json analyze_report(const GradingData& g, Weight u) {
  json j = validate_report(g);
  j["ample_class"] = to_string(u);
  try {
    const auto split = tau_split(g, u);
    j["tau_plus"] = split.plus.size();
    j["tau_minus"] = split.minus.size();
    j["chamber"] = split.chamber.to_string();
    const auto sample = semiample_cone(g, u);
    j["semiample_cone"] = sample.to_string();
    j["ample_cone"] = "interior of " + sample.to_string();
    j["picard_full"] = picard_subgroup_is_full(g, u);
  } catch (const Error& e) {
    j["chamber_error"] = e.what();
  }
  const auto verdict = verify_smooth(g, u);
  j["smoothness"] = std::string(to_string(verdict.status));
  if (verdict.witness) j["witness"] = to_string(*verdict.witness);
  if (!verdict.predicate.empty()) j["failed_check"] = verdict.predicate;
  if (verdict.recognition) {
    j["recognized"] = to_string(verdict.recognition->variety);
    j["matching_types"] = verdict.recognition->matching_types;
    j["bpf_saturated"] = bpf_saturated(g, u);
    j["fano"] = std::string(to_string(fano_status_by_cone(g, u)));
    j["anticanonical"] = to_string(anticanonical(g));
  }
  return j;
}

inline void print_flat(const json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    out << key << ": ";
    if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
    out << '\n';
  }
}

inline json geometry_json(const GeometryReport& r) {
  json j{{"variety", to_string(r.variety)},
         {"dim_x", r.dim_x},
         {"effective_cone", r.effective.to_string()},
         {"moving_cone", r.moving.to_string()},
         {"semiample_cone", r.semiample.to_string()}};
  json cs = json::array();
  for (const auto& c : r.contractions)
    cs.push_back(json{{"class", to_string(c.cls)}, {"kind", std::string(to_string(c.kind))}, {"description", c.description}});
  j["contractions"] = cs;
  if (r.bundle)
    j["bundle"] = json{{"s", r.bundle->s},
                       {"t", r.bundle->t()},
                       {"t1", r.bundle->t1},
                       {"t2", r.bundle->t2},
                       {"twists1", r.bundle->twists1},
                       {"twists2", r.bundle->twists2}};
  if (r.fibration) {
    json f{{"base", r.fibration->base},
           {"base_dimension", r.fibration->base_dimension},
           {"fiber", r.fibration->fiber},
           {"fiber_dimension", r.fibration->fiber_dimension}};
    if (r.fibration->stated_fiber_dimension) f["stated_fiber_dimension"] = *r.fibration->stated_fiber_dimension;
    j["fibration"] = f;
  }
  if (!r.centers.empty()) j["centers"] = r.centers;
  j["fujita"] = r.fujita;
  return j;
}

/// Parses "A..B" into an inclusive range.
inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorCode::Parse, "expected a range A..B but got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "expected a range A..B but got '" + text + "'");
  }
}

inline void print_error(const Error& e, std::ostream& err) {
  err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
}

/// Entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smooth intrinsic Grassmannians of type (2,n) with Picard number two", "igrass"};
  app.require_subcommand(1);

  std::string format = "text";
  int n = 0;
  std::string matrix_path;
  std::string variety_path;
  std::string ample;
  std::string degree;
  std::string range;
  bool as_json = false;
  bool fano = false;
  bool almost_fano = false;
  bool no_h0 = false;
  bool oracle = false;
  int max_alpha = -1;
  int n_from = 5;
  int n_to = 8;
  unsigned jobs = 1;

  auto* relations = app.add_subcommand("relations", "print the Plücker relations g_I");
  relations->add_option("--n", n, "number of indices")->required();
  relations->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* validate_cmd = app.add_subcommand("validate", "grading predicates and cones");
  validate_cmd->add_option("--matrix", matrix_path, "grading JSON")->required()->check(CLI::ExistingFile);
  validate_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* analyze = app.add_subcommand("analyze", "cones, chamber, smoothness and Fano status for an ample class");
  analyze->add_option("--matrix", matrix_path, "grading JSON")->required()->check(CLI::ExistingFile);
  analyze->add_option("--ample", ample, "ample class x,y")->required();
  analyze->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "full smooth varieties (Type 1, m = 0) for one n");
  enumerate->add_option("--n", n)->required();
  auto* fano_flag = enumerate->add_flag("--fano", fano);
  enumerate->add_flag("--almost-fano", almost_fano)->excludes(fano_flag);
  enumerate->add_option("--max-alpha", max_alpha, "cap on alpha_n when listing every status");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"md", "csv", "json", "text"}));
  enumerate->add_flag("--no-h0", no_h0);
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "number of smooth Fano full varieties");
  count->add_option("--n", n);
  count->add_option("--range", range, "inclusive range A..B");
  count->add_flag("--oracle", oracle, "count by brute-force enumeration");

  auto* hilbert = app.add_subcommand("hilbert", "dimension of a graded component");
  hilbert->add_option("--matrix", matrix_path, "grading JSON")->required()->check(CLI::ExistingFile);
  hilbert->add_option("--degree", degree, "class x,y")->required();
  hilbert->add_flag("--oracle", oracle, "cross-check with dense linear algebra");

  auto* table = app.add_subcommand("table", "smooth Fano full varieties with -K and h0(-K)");
  table->add_option("--n-from", n_from);
  table->add_option("--n-to", n_to);
  table->add_option("--format", format)->check(CLI::IsMember({"md", "csv", "json", "text"}));
  table->add_flag("--no-h0", no_h0);
  table->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* geometry = app.add_subcommand("geometry", "contractions and fibrations of a classified variety");
  geometry->add_option("--variety", variety_path, "variety JSON")->required()->check(CLI::ExistingFile);
  geometry->add_flag("--json", as_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << e.what() << '\n' << app.help();
    return exit_usage;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    if (*relations) {
      print_relations(n, fmt, out);
    } else if (*validate_cmd) {
      const auto j = validate_report(grading_from_json(read_json_file(matrix_path)));
      if (fmt == OutputFormat::Json)
        out << j.dump(2) << '\n';
      else
        print_flat(j, out);
    } else if (*analyze) {
      const auto j = analyze_report(grading_from_json(read_json_file(matrix_path)), parse_weight(ample));
      if (as_json)
        out << j.dump(2) << '\n';
      else
        print_flat(j, out);
    } else if (*enumerate) {
      std::vector<TypedVariety> vs;
      if (fano)
        vs = enumerate_full(n, FanoStatus::Fano);
      else if (almost_fano)
        vs = enumerate_full(n, FanoStatus::TrulyAlmostFano);
      else if (max_alpha >= 0)
        vs = enumerate_smooth_full(n, max_alpha);
      else
        fail(ErrorCode::InvalidParameter, "the family is infinite without --fano, --almost-fano or --max-alpha");
      print_rows(make_rows(vs, !no_h0, jobs), fmt, !no_h0, out);
    } else if (*count) {
      std::pair<int, int> bounds{n, n};
      if (!range.empty()) bounds = parse_range(range);
      if (bounds.first < 4 || bounds.second < bounds.first)
        fail(ErrorCode::InvalidParameter, "need 4 <= A <= B (or --n N with N >= 4)");
      for (int k = bounds.first; k <= bounds.second; ++k)
        out << (k == bounds.first ? "" : ",") << to_decimal(oracle ? count_fano_oracle(k) : count_fano_formula(k));
      out << '\n';
    } else if (*hilbert) {
      const auto g = grading_from_json(read_json_file(matrix_path));
      const Weight target = parse_weight(degree);
      const BigInt dim = graded_dim(g, target);
      out << to_decimal(dim) << '\n';
      if (oracle) {
        const BigInt check = graded_dim_oracle(g, target);
        if (check != dim)
          fail(ErrorCode::Precondition, "oracle disagrees: standard monomials " + to_decimal(dim) + ", dense " +
                                            to_decimal(check));
        out << "oracle: " << to_decimal(check) << '\n';
      }
    } else if (*table) {
      if (n_from < 4 || n_to < n_from) fail(ErrorCode::InvalidParameter, "need 4 <= n-from <= n-to");
      std::vector<TypedVariety> vs;
      for (int k = n_from; k <= n_to; ++k) {
        auto part = enumerate_smooth_fano_full(k);
        vs.insert(vs.end(), part.begin(), part.end());
      }
      print_rows(make_rows(vs, !no_h0, jobs), fmt == OutputFormat::Text ? OutputFormat::Md : fmt, !no_h0, out);
    } else if (*geometry) {
      const auto report = geometry_report(variety_from_json(read_json_file(variety_path)));
      const auto j = geometry_json(report);
      if (as_json)
        out << j.dump(2) << '\n';
      else
        print_flat(j, out);
    }
  } catch (const Error& e) {
    print_error(e, err);
    return exit_validation;
  }
  return exit_ok;
}

}  // namespace igrass::cli
