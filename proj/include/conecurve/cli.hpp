#pragma once

/**
 * @file cli.hpp
 * @brief `conecurve eval|assess|figure`: configuration, dispatch, exit codes.
 *
 * Exit codes: 0 success, 2 usage or configuration error, 3 empty domain.
 * A JSON config file (--config) mirrors RunConfig; flags given on the
 * command line override it.
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conecurve/arclength.hpp"
#include "conecurve/assessment.hpp"
#include "conecurve/csv.hpp"
#include "conecurve/curve.hpp"
#include "conecurve/figure.hpp"
#include "conecurve/frame.hpp"
#include "conecurve/smarandache.hpp"

namespace conecurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEmptyDomain = 3;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string curve = "example1";
  double lo = -2.0;
  double hi = 2.0;
  std::optional<int> n;  ///< default 401 (eval, assess) or 201 (figure)
  std::vector<Kind> kinds;  ///< empty: all four
  std::optional<double> b, c, cstar;
  std::vector<SmarandacheSpec> specs;  ///< explicit list (config file only)
  std::vector<std::pair<std::string, double>> tolerances;
  std::string out = ".";
  std::vector<char> panels;  ///< empty: all ten
  Projection projection = Projection::Iso;
  int n_theta = 64;

  int grid_n() const { return n.value_or(command == "figure" ? 201 : 401); }

  void validate() const {
    if (!(lo < hi)) throw ConfigError("range must satisfy lo < hi");
    if (grid_n() < 2) throw ConfigError("n must be >= 2");
    if (n_theta < 1) throw ConfigError("n_theta must be >= 1");
    for (const auto& [name, v] : tolerances) {
      if (!(v > 0.0)) throw ConfigError("tolerance " + name + " must be > 0");
    }
    for (char p : panels) {
      if (!valid_panel(p)) throw ConfigError(std::string("panel must be A..J, got ") + p);
    }
    for (const auto& s : resolved_specs(false)) s.validate();
  }

  /// Specs for a run. `sweep`: use the default parameter sweep when no
  /// constants were given.
  std::vector<SmarandacheSpec> resolved_specs(bool sweep) const {
    if (!specs.empty()) return specs;
    const std::vector<Kind> ks = kinds.empty() ? std::vector<Kind>(kAllKinds.begin(), kAllKinds.end()) : kinds;
    if (sweep && !b && !c && !cstar) return default_specs(ks);
    std::vector<SmarandacheSpec> out;
    for (Kind k : ks) out.push_back({k, b.value_or(1.0), c.value_or(1.0), cstar.value_or(1.0)});
    return out;
  }

  TolerancePolicy policy() const {
    TolerancePolicy p;
    for (const auto& [name, v] : tolerances) {
      try {
        p.set(name, v);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    return p;
  }
};

namespace detail {

inline Kind kind_or_throw(const std::string& token) {
  const auto k = parse_kind(token);
  if (!k) throw ConfigError("unknown kind '" + token + "' (expected xa, xy, ay or xay)");
  return *k;
}

inline std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':', text.empty() ? 0 : 1);
  if (colon == std::string::npos) throw ConfigError("range must be LO:HI, got '" + text + "'");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const double lo = std::stod(a, &u1);
    const double hi = std::stod(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("trailing");
    return {lo, hi};
  } catch (const std::exception&) {
    throw ConfigError("range must be LO:HI, got '" + text + "'");
  }
}

inline std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("tolerance must be NAME=V, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string v = text.substr(eq + 1);
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return {text.substr(0, eq), x};
  } catch (const std::exception&) {
    throw ConfigError("tolerance must be NAME=V, got '" + text + "'");
  }
}

inline std::vector<char> parse_panels(const std::vector<std::string>& items) {
  std::vector<char> out;
  for (const auto& it : items) {
    if (it == "all" || it == "A..J") {
      out.assign(kPanels.begin(), kPanels.end());
      continue;
    }
    if (it.size() != 1 || !valid_panel(static_cast<char>(std::toupper(static_cast<unsigned char>(it[0]))))) {
      throw ConfigError("panel must be one of A..J, got '" + it + "'");
    }
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(it[0]))));
  }
  return out;
}

/// Apply a JSON config object onto `cfg`.
inline void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ConfigError("config file must contain a JSON object");
    for (const auto& [key, v] : j.items()) {
      if (key == "curve") cfg.curve = v.get<std::string>();
      else if (key == "grid") {
        if (v.contains("lo")) cfg.lo = v.at("lo").get<double>();
        if (v.contains("hi")) cfg.hi = v.at("hi").get<double>();
        if (v.contains("n")) cfg.n = v.at("n").get<int>();
      } else if (key == "kinds") {
        cfg.kinds.clear();
        for (const auto& k : v) cfg.kinds.push_back(kind_or_throw(k.get<std::string>()));
      } else if (key == "b") cfg.b = v.get<double>();
      else if (key == "c") cfg.c = v.get<double>();
      else if (key == "cstar") cfg.cstar = v.get<double>();
      else if (key == "specs") {
        cfg.specs.clear();
        for (const auto& s : v) {
          cfg.specs.push_back({kind_or_throw(s.at("kind").get<std::string>()), s.value("b", 1.0), s.value("c", 1.0),
                               s.value("cstar", 1.0)});
        }
      } else if (key == "tolerances") {
        for (const auto& [name, t] : v.items()) cfg.tolerances.emplace_back(name, t.get<double>());
      } else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "panels") cfg.panels = parse_panels(v.get<std::vector<std::string>>());
      else if (key == "projection") {
        const auto p = parse_projection(v.get<std::string>());
        if (!p) throw ConfigError("projection must be iso or xy");
        cfg.projection = *p;
      } else if (key == "n_theta") cfg.n_theta = v.get<int>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

}  // namespace detail

/// Parse argv into a RunConfig. Returns nullopt after printing help.
inline std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Cone curves, their partner constructions, and closed-form assessment", "conecurve"};
  std::string command, curve, range, projection, config_path, out_dir;
  int n = 0, n_theta = 0;
  double b = 0, c = 0, cstar = 0;
  std::vector<std::string> kinds, tols, panels;
  app.add_option("command", command, "eval | assess | figure")->required()->check(CLI::IsMember({"eval", "assess", "figure"}));
  app.add_option("--config", config_path, "JSON file mirroring the run configuration");
  app.add_option("--curve", curve, "example1 | f:NAME | csv:PATH");
  app.add_option("--range", range, "parameter range LO:HI");
  app.add_option("--n", n, "grid points");
  app.add_option("--kind", kinds, "partner kinds: xa xy ay xay");
  app.add_option("--b", b, "construction constant b");
  app.add_option("--c", c, "construction constant c");
  app.add_option("--cstar", cstar, "construction constant c* (xay)");
  app.add_option("--tol", tols, "tolerance override NAME=V");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--panel", panels, "figure panels A..J");
  app.add_option("--projection", projection, "iso | xy");
  app.add_option("--n-theta", n_theta, "angular samples for surfaces");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file " + config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config file: ") + e.what());
    }
    detail::apply_json(cfg, j);
  }
  cfg.command = command;
  if (app.count("--curve")) cfg.curve = curve;
  if (app.count("--range")) std::tie(cfg.lo, cfg.hi) = detail::parse_range(range);
  if (app.count("--n")) cfg.n = n;
  if (app.count("--kind")) {
    cfg.kinds.clear();
    cfg.specs.clear();
    for (const auto& k : kinds) cfg.kinds.push_back(detail::kind_or_throw(k));
  }
  if (app.count("--b")) cfg.b = b;
  if (app.count("--c")) cfg.c = c;
  if (app.count("--cstar")) cfg.cstar = cstar;
  if (app.count("--b") || app.count("--c") || app.count("--cstar")) cfg.specs.clear();
  for (const auto& t : tols) cfg.tolerances.push_back(detail::parse_tolerance(t));
  if (app.count("--out")) cfg.out = out_dir;
  if (app.count("--panel")) cfg.panels = detail::parse_panels(panels);
  if (app.count("--projection")) {
    const auto p = parse_projection(projection);
    if (!p) throw ConfigError("projection must be iso or xy, got '" + projection + "'");
    cfg.projection = *p;
  }
  if (app.count("--n-theta")) cfg.n_theta = n_theta;
  cfg.validate();
  return cfg;
}

/// example1 | f:NAME | csv:PATH.
inline CurveSource load_curve(const std::string& selector) {
  if (selector == "example1") return CurveSource::example1();
  if (selector.rfind("f:", 0) == 0) {
    const auto g = named_generator(selector.substr(2));
    if (!g) {
      std::string names;
      for (const auto& n : generator_names()) names += (names.empty() ? "" : ", ") + n;
      throw ConfigError("unknown generator '" + selector.substr(2) + "' (known: " + names + ")");
    }
    return *g;
  }
  if (selector.rfind("csv:", 0) == 0) {
    const std::string path = selector.substr(4);
    try {
      return CurveSource::sampled(read_sampled_curve_file(path), path);
    } catch (const CsvError& e) {
      throw ConfigError(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
  }
  throw ConfigError("curve must be example1, f:NAME or csv:PATH, got '" + selector + "'");
}

namespace detail {

inline std::filesystem::path prepare_out(const RunConfig& cfg) {
  std::filesystem::path dir(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + cfg.out + ": " + ec.message());
  return dir;
}

inline void write_file(const std::filesystem::path& p, const std::string& bytes) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + p.string());
  f << bytes;
}

inline std::vector<double> run_grid(const CurveSource& curve, const RunConfig& cfg) {
  if (const auto native = curve.native_grid()) {
    std::vector<double> out;
    for (double s : *native) {
      if (s >= cfg.lo - 1e-12 && s <= cfg.hi + 1e-12) out.push_back(s);
    }
    if (out.empty()) throw ConfigError("no sampled nodes inside the requested range");
    return out;
  }
  return uniform_grid(cfg.lo, cfg.hi, cfg.grid_n());
}

inline std::string partner_file_name(const std::vector<SmarandacheSpec>& specs, std::size_t i) {
  std::size_t same = 0;
  for (const auto& s : specs) same += s.kind == specs[i].kind;
  std::string name = std::string("partner_") + kind_token(specs[i].kind);
  if (same > 1) name += "_" + std::to_string(i);
  return name + ".csv";
}

}  // namespace detail

/// curve.csv, frame.csv and one partner CSV per spec.
inline int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CurveSource curve = load_curve(cfg.curve);
  const auto grid = detail::run_grid(curve, cfg);
  const auto dir = detail::prepare_out(cfg);
  const TolerancePolicy pol = cfg.policy();

  std::vector<CurveJet> jets;
  std::vector<FrameJet> frames;
  for (double s : grid) {
    jets.push_back(curve.jet(s));
    frames.push_back(frame_jet_at(jets.back(), pol.frame_tolerances(jets.back().accuracy)));
  }
  std::ostringstream cs, fs;
  write_curve_csv(cs, jets);
  write_frame_csv(fs, frames);
  detail::write_file(dir / "curve.csv", cs.str());
  detail::write_file(dir / "frame.csv", fs.str());

  ArcLengthOptions ao;
  ao.admissible_tol = pol.admissible_tol;
  ao.frame_tol = pol.frame_tolerances(curve.exact() ? JetAccuracy::Exact : JetAccuracy::Centered);
  const auto specs = cfg.resolved_specs(false);
  bool empty = false;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const PartnerTrajectory t = partner_trajectory(specs[i], curve, grid, ao);
    std::ostringstream ps;
    write_partner_csv(ps, t);
    const auto name = detail::partner_file_name(specs, i);
    detail::write_file(dir / name, ps.str());
    out << name << ": " << t.samples.size() << " admissible, " << t.skipped << " skipped\n";
    if (t.samples.empty()) {
      err << kind_label(specs[i].kind) << " partner: no admissible sample on the grid\n";
      empty = true;
    }
  }
  return empty ? kExitEmptyDomain : kExitOk;
}

inline int cmd_assess(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CurveSource curve = load_curve(cfg.curve);
  const auto dir = detail::prepare_out(cfg);
  const AssessmentReport r = assess(curve, cfg.resolved_specs(true), {cfg.lo, cfg.hi, cfg.grid_n()}, cfg.policy());
  detail::write_file(dir / "report.json", render_report(r, ReportFormat::Json));
  detail::write_file(dir / "report.md", render_report(r, ReportFormat::Markdown));
  std::size_t confirmed = 0, discrepant = 0, empty = 0;
  for (const auto& v : r.verdicts) {
    confirmed += v.verdict == Verdict::Confirmed;
    discrepant += v.verdict == Verdict::Discrepant;
    empty += v.verdict == Verdict::DomainEmpty;
  }
  out << r.verdicts.size() << " verdicts: " << confirmed << " confirmed, " << discrepant << " discrepant, " << empty
      << " domain-empty\n";
  if (all_domain_empty(r)) {
    err << "every registered formula is outside its domain on this grid\n";
    return kExitEmptyDomain;
  }
  return kExitOk;
}

inline int cmd_figure(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const CurveSource curve = load_curve(cfg.curve);
  const auto dir = detail::prepare_out(cfg);
  FigureOptions o;
  o.lo = cfg.lo;
  o.hi = cfg.hi;
  o.n_s = cfg.grid_n();
  o.n_theta = cfg.n_theta;
  o.b = cfg.b.value_or(1.0);
  o.c = cfg.c.value_or(1.0);
  o.cstar = cfg.cstar.value_or(1.0);
  o.projection = cfg.projection;
  o.admissible_tol = cfg.policy().admissible_tol;
  const std::vector<char> panels = cfg.panels.empty() ? std::vector<char>(kPanels.begin(), kPanels.end()) : cfg.panels;
  for (char p : panels) {
    const PanelOutput po = render_panel(p, curve, o);
    const std::string stem = std::string("panel_") + p;
    detail::write_file(dir / (stem + ".svg"), po.svg);
    if (po.obj) detail::write_file(dir / (stem + ".obj"), *po.obj);
    out << stem << (po.obj ? ".obj + .svg" : ".svg") << "\n";
  }
  return kExitOk;
}

/// Entry point shared by the executable and the in-process tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    const auto cfg = parse_args(argc, argv, out);
    if (!cfg) return kExitOk;
    if (cfg->command == "eval") return cmd_eval(*cfg, out, err);
    if (cfg->command == "assess") return cmd_assess(*cfg, out, err);
    return cmd_figure(*cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotOnCone& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonUnitSpeed& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitEmptyDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace conecurve::cli
