#include "extropy_cli/app.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "extropy/analysis.hpp"
#include "extropy/errors.hpp"
#include "extropy_cli/figures.hpp"
#include "extropy_cli/verify.hpp"
#include "json.hpp"

namespace extropy::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json };

struct Globals {
  double abs_tol = QuadratureConfig{}.abs_tol;
  double rel_tol = QuadratureConfig{}.rel_tol;
  int grid_points = kDefaultGridPoints;
  std::string output;
  Format format = Format::text;

  MeasureOptions options() const {
    MeasureOptions o;
    o.quadrature.abs_tol = abs_tol;
    o.quadrature.rel_tol = rel_tol;
    o.quadrature.validate();
    return o;
  }
};

// Which endpoint arguments a measure reads.
enum class Needs { none, residual, past, window };

struct MeasureTag {
  std::string_view tag;
  MeasureId id;
  Needs needs;
};

constexpr MeasureTag kMeasureTags[] = {
    {"j", MeasureId::extropy, Needs::none},
    {"rex", MeasureId::residual_extropy, Needs::residual},
    {"pex", MeasureId::past_extropy, Needs::past},
    {"ij", MeasureId::interval_extropy, Needs::window},
    {"jw", MeasureId::weighted_extropy, Needs::none},
    {"wrex", MeasureId::weighted_residual_extropy, Needs::residual},
    {"wpex", MeasureId::weighted_past_extropy, Needs::past},
    {"ijw", MeasureId::weighted_interval_extropy, Needs::window},
    {"ih", MeasureId::interval_entropy, Needs::window},
    {"ihw", MeasureId::weighted_interval_entropy, Needs::window},
};

const MeasureTag& find_measure(std::string_view tag) {
  for (const auto& m : kMeasureTags)
    if (m.tag == tag) return m;
  throw UsageError(fmt::format("unknown measure '{}' (expected j, rex, pex, ij, jw, wrex, wpex, ijw, ih or ihw)", tag));
}

// Accepts decimal literals and "inf".
double parse_real(const std::string& text, std::string_view flag) {
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || std::isnan(v))
    throw UsageError(fmt::format("{}: '{}' is not a number", flag, text));
  return v;
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

void emit(const Globals& g, const std::string& payload, std::ostream& out) {
  if (g.output.empty() || g.output == "-") {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream file(g.output, std::ios::binary | std::ios::trunc);
  if (!file) throw WriteError(fmt::format("cannot open '{}' for writing", g.output));
  file << payload;
  file.flush();
  if (!file) throw WriteError(fmt::format("failed writing '{}'", g.output));
}

struct ComputeArgs {
  std::string dist;
  std::string measure;
  std::optional<std::string> t, t1, t2;
};

std::string cmd_compute(const Globals& g, const ComputeArgs& a) {
  const Distribution d = parse_distribution(a.dist);
  const MeasureTag& m = find_measure(a.measure);
  auto value_of = [](const std::optional<std::string>& s, std::string_view flag) -> std::optional<double> {
    if (!s) return std::nullopt;
    return parse_real(*s, flag);
  };
  const auto t = value_of(a.t, "--t");
  const auto t1 = value_of(a.t1, "--t1");
  const auto t2 = value_of(a.t2, "--t2");

  double w1 = d.support().lower;
  double w2 = std::numeric_limits<double>::infinity();
  switch (m.needs) {
    case Needs::none: break;
    case Needs::residual:
      if (!t && !t1) throw UsageError(fmt::format("measure '{}' needs --t", m.tag));
      w1 = t ? *t : *t1;
      break;
    case Needs::past:
      if (!t && !t2) throw UsageError(fmt::format("measure '{}' needs --t", m.tag));
      w1 = 0.0;
      w2 = t ? *t : *t2;
      break;
    case Needs::window:
      if (!t1 || !t2) throw UsageError(fmt::format("measure '{}' needs --t1 and --t2", m.tag));
      w1 = *t1;
      w2 = *t2;
      break;
  }

  const MeasureResult r = evaluate(m.id, d, w1, w2, g.options());
  const std::string dist = d.describe();
  switch (g.format) {
    case Format::text:
      return fmt::format(
          "measure        {}\ndistribution   {}\nt1             {}\nt2             {}\nvalue          {}\n"
          "error_estimate {:.3e}\nmethod         {}\n",
          name(r.measure), dist, num(w1), num(w2), num(r.value), r.error_estimate, name(r.method));
    case Format::csv:
      return fmt::format("measure,distribution,t1,t2,value,error_estimate,method\n{},\"{}\",{},{},{},{},{}\n",
                         name(r.measure), dist, num(w1), num(w2), num(r.value), num(r.error_estimate),
                         name(r.method));
    case Format::json: {
      Json j{{"measure", name(r.measure)}, {"distribution", dist}, {"t1", w1}, {"t2", w2},
             {"value", r.value},           {"error_estimate", r.error_estimate}, {"method", name(r.method)}};
      if (std::isinf(w2)) j["t2"] = "inf";
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string figure_list(const Globals& g) {
  std::string out;
  if (g.format == Format::json) {
    Json rows = Json::array();
    for (const auto& f : figure_table())
      rows.push_back({{"id", f.id},
                      {"source_label", f.source_label},
                      {"distribution", f.dist_spec},
                      {"measure", name(f.measure)},
                      {"direction", name(f.direction)},
                      {"fixed", f.fixed}});
    return rows.dump(2) + "\n";
  }
  const bool csv = g.format == Format::csv;
  out += csv ? "id,source_label,distribution,measure,direction,fixed\n"
             : fmt::format("{:<6} {:<13} {:<28} {:<26} {:<8} {}\n", "id", "source_label", "distribution", "measure",
                           "vary", "fixed");
  for (const auto& f : figure_table()) {
    const std::string fixed = fmt::format("{}", fmt::join(f.fixed, csv ? ";" : ","));
    out += csv ? fmt::format("{},{},\"{}\",{},{},{}\n", f.id, f.source_label, f.dist_spec, name(f.measure),
                             name(f.direction), fixed)
               : fmt::format("{:<6} {:<13} {:<28} {:<26} {:<8} {}\n", f.id, f.source_label, f.dist_spec,
                             name(f.measure), name(f.direction) == "vary_t1" ? "t1" : "t2", fixed);
  }
  return out;
}

std::string cmd_figure(const Globals& g, const std::string& id) {
  const FigureSpec* spec = find_figure(id);
  if (!spec) throw UsageError(fmt::format("unknown figure '{}'; see `figure --list`", id));
  const auto series = build_figure(*spec, g.grid_points, g.options());
  std::ostringstream os;
  if (g.format == Format::json)
    write_figure_json(os, series);
  else
    write_figure_csv(os, series);
  return os.str();
}

struct ScanArgs {
  std::string dist;
  std::string measure = "ij";
  std::string vary = "t1";
  std::string fixed;
  std::string from;
  std::string to;
  double inset = kFigureInset;
};

std::string cmd_scan(const Globals& g, const ScanArgs& a) {
  const Distribution d = parse_distribution(a.dist);
  const MeasureTag& m = find_measure(a.measure);
  if (m.needs != Needs::window) throw UsageError(fmt::format("scan needs an interval measure, got '{}'", m.tag));
  if (a.vary != "t1" && a.vary != "t2") throw UsageError("--vary must be t1 or t2");
  const auto dir = a.vary == "t1" ? ScanDirection::vary_t1 : ScanDirection::vary_t2;
  const double fixed = parse_real(a.fixed, "--fixed");
  const auto grid = inset_grid(parse_real(a.from, "--from"), parse_real(a.to, "--to"), g.grid_points, a.inset);
  const ScanReport r = scan(d, dir, fixed, grid, m.id, g.options());

  std::string out;
  switch (g.format) {
    case Format::csv:
      out = "t,value,error_estimate\n";
      for (const auto& p : r.grid) out += fmt::format("{},{},{}\n", num(p.t), num(p.value), num(p.error_estimate));
      return out;
    case Format::json: {
      Json j{{"distribution", d.describe()}, {"measure", name(r.measure)},   {"direction", name(r.direction)},
             {"fixed", fixed},               {"verdict", name(r.verdict)},   {"noise_floor", r.noise_floor}};
      if (r.extremum) {
        j["extremum_kind"] = r.extremum_is_maximum ? "max" : "min";
        j["extremum_t"] = r.extremum->t;
        j["extremum_value"] = r.extremum->value;
      }
      Json pts = Json::array();
      for (const auto& p : r.grid) pts.push_back({{"t", p.t}, {"value", p.value}, {"error_estimate", p.error_estimate}});
      j["points"] = std::move(pts);
      return j.dump(2) + "\n";
    }
    case Format::text:
      out = fmt::format("{:<24} {:<24} {}\n", "t", "value", "error_estimate");
      for (const auto& p : r.grid) out += fmt::format("{:<24} {:<24} {:.3e}\n", num(p.t), num(p.value), p.error_estimate);
      out += fmt::format("verdict     {}\nnoise_floor {:.3e}\n", name(r.verdict), r.noise_floor);
      if (r.extremum)
        out += fmt::format("extremum    {} at t = {} (value {})\n", r.extremum_is_maximum ? "max" : "min",
                           num(r.extremum->t), num(r.extremum->value));
      return out;
  }
  return out;
}

std::string cmd_verify(const Globals& g, const std::string& suite_name, bool& all_pass) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw UsageError(fmt::format("unknown suite '{}' (expected all, oracles, theorems or figures)", suite_name));
  const auto results = run_verify(*suite, {g.options(), g.grid_points});
  all_pass = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });

  std::string out;
  switch (g.format) {
    case Format::json: {
      Json rows = Json::array();
      for (const auto& c : results)
        rows.push_back({{"id", c.id},
                        {"max_gap", std::isnan(c.max_gap) ? Json(nullptr) : Json(c.max_gap)},
                        {"threshold", c.threshold},
                        {"relation", c.lower_bound ? ">" : "<"},
                        {"status", c.pass ? "pass" : "fail"},
                        {"detail", c.detail}});
      return rows.dump(2) + "\n";
    }
    case Format::csv:
      out = "id,max_gap,threshold,relation,status,detail\n";
      for (const auto& c : results)
        out += fmt::format("{},{:.6e},{:.1e},{},{},\"{}\"\n", c.id, c.max_gap, c.threshold, c.lower_bound ? ">" : "<",
                           c.pass ? "pass" : "fail", c.detail);
      return out;
    case Format::text: {
      int passed = 0;
      for (const auto& c : results) {
        passed += c.pass;
        out += fmt::format("{:<42} max_gap={:<12.4e} {} {:<8.1e} {}  {}\n", c.id, c.max_gap, c.lower_bound ? ">" : "<",
                           c.threshold, c.pass ? "pass" : "FAIL", c.detail);
      }
      out += fmt::format("{}/{} checks passed\n", passed, results.size());
      return out;
    }
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval extropy and weighted interval extropy of lifetime distributions", "extropy"};
  app.require_subcommand(1);

  Globals g;
  std::string format = "text";
  app.add_option("--abs-tol", g.abs_tol, "absolute quadrature tolerance")->capture_default_str();
  app.add_option("--rel-tol", g.rel_tol, "relative quadrature tolerance")->capture_default_str();
  app.add_option("--grid-points", g.grid_points, "points per figure or scan series")
      ->capture_default_str()
      ->check(CLI::Range(2, 1'000'000));
  app.add_option("--output", g.output, "write results to this file instead of stdout");
  app.add_option("--format", format, "text, csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "csv", "json"}));

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "evaluate one measure");
  compute->add_option("--dist", ca.dist, "distribution, e.g. \"exp(rate=1)\"")->required();
  compute->add_option("--measure", ca.measure, "j, rex, pex, ij, jw, wrex, wpex, ijw, ih or ihw")->required();
  compute->add_option("--t", ca.t, "endpoint of a residual or past measure");
  compute->add_option("--t1", ca.t1, "left endpoint");
  compute->add_option("--t2", ca.t2, "right endpoint (may be inf)");

  std::string figure_id;
  bool list = false;
  auto* figure = app.add_subcommand("figure", "write the data behind a figure as CSV");
  figure->add_option("id", figure_id, "figure id, see --list");
  figure->add_flag("--list", list, "print the figure table");

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "evaluate an interval measure over a grid");
  scan_cmd->add_option("--dist", sa.dist, "distribution")->required();
  scan_cmd->add_option("--measure", sa.measure, "ij, ijw, ih or ihw")->capture_default_str();
  scan_cmd->add_option("--vary", sa.vary, "t1 or t2")->capture_default_str();
  scan_cmd->add_option("--fixed", sa.fixed, "value of the other endpoint")->required();
  scan_cmd->add_option("--from", sa.from, "start of the varied range")->required();
  scan_cmd->add_option("--to", sa.to, "end of the varied range")->required();
  scan_cmd->add_option("--inset", sa.inset, "distance kept from both range ends")->capture_default_str();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--suite", suite, "all, oracles, theorems or figures")->capture_default_str();

  for (auto* sub : {compute, figure, scan_cmd, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  g.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;

  try {
    if (compute->parsed()) {
      emit(g, cmd_compute(g, ca), out);
    } else if (figure->parsed()) {
      if (list) {
        emit(g, figure_list(g), out);
      } else {
        if (figure_id.empty()) throw UsageError("figure needs an id or --list");
        emit(g, cmd_figure(g, figure_id), out);
      }
    } else if (scan_cmd->parsed()) {
      emit(g, cmd_scan(g, sa), out);
    } else if (verify->parsed()) {
      bool all_pass = false;
      emit(g, cmd_verify(g, suite, all_pass), out);
      return all_pass ? kOk : kVerifyFailed;
    }
    return kOk;
  } catch (const WindowError& e) {
    err << "window error: " << e.what() << '\n';
    return kWindowError;
  } catch (const ConvergenceError& e) {
    err << "not converged: " << e.what() << '\n';
    return kNotConverged;
  } catch (const EvaluationError& e) {
    err << "not converged: " << e.what() << '\n';
    return kNotConverged;
  } catch (const WriteError& e) {
    err << "write error: " << e.what() << '\n';
    return kWriteFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace extropy::cli
