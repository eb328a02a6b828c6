#pragma once

/**
 * @file assessment.hpp
 * @brief Evaluate every registered closed form against the oracle and
 *        classify the outcome.
 *
 * The oracle side is always the chain-rule partner frame. Row targets are
 * compared in the (x, alpha, y) basis via the dual pairing, so the layout of
 * a printed matrix never matters. Deviations are sup norms over components;
 * the relative deviation divides by max(|oracle|_inf, rel_floor).
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "conecurve/curve.hpp"
#include "conecurve/frame.hpp"
#include "conecurve/registry.hpp"
#include "conecurve/smarandache.hpp"

namespace conecurve {

class UnknownTolerance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TolerancePolicy {
  double confirm_tol = 1e-6;
  double min_samples = 50;
  double rel_floor = 1e-3;
  double claim_tol = 1e-9;
  double admissible_tol = kAdmissibleTol;
  /// Frame checks; unset means "by jet accuracy".
  std::optional<double> cone_tol;
  std::optional<double> speed_tol;
  std::optional<double> frame_tol;

  static std::vector<std::string> names() {
    return {"confirm", "min_samples", "rel_floor", "claim", "admissible", "cone", "speed", "frame"};
  }

  void set(const std::string& name, double v) {
    if (!std::isfinite(v) || !(v > 0.0)) throw std::invalid_argument("tolerance " + name + " must be > 0");
    if (name == "confirm") confirm_tol = v;
    else if (name == "min_samples") min_samples = std::floor(v);
    else if (name == "rel_floor") rel_floor = v;
    else if (name == "claim") claim_tol = v;
    else if (name == "admissible") admissible_tol = v;
    else if (name == "cone") cone_tol = v;
    else if (name == "speed") speed_tol = v;
    else if (name == "frame") frame_tol = v;
    else throw UnknownTolerance("unknown tolerance '" + name + "'");
  }

  FrameTolerances frame_tolerances(JetAccuracy a) const {
    FrameTolerances t = FrameTolerances::for_accuracy(a);
    if (cone_tol) t.cone_tol = *cone_tol;
    if (speed_tol) t.speed_tol = *speed_tol;
    if (frame_tol) t.frame_tol = *frame_tol;
    return t;
  }
};

enum class Verdict { Confirmed, Discrepant, DomainEmpty, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "Confirmed";
    case Verdict::Discrepant: return "Discrepant";
    case Verdict::DomainEmpty: return "DomainEmpty";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

/// Confirmed needs a quorum; a small deviation below quorum is Inconclusive.
inline Verdict classify(std::size_t samples, double max_rel_dev, const TolerancePolicy& tol) {
  if (samples == 0) return Verdict::DomainEmpty;
  if (!(max_rel_dev <= tol.confirm_tol)) return Verdict::Discrepant;
  return static_cast<double>(samples) >= tol.min_samples ? Verdict::Confirmed : Verdict::Inconclusive;
}

struct FormulaVerdict {
  std::string formula_id;
  std::string variant;
  OracleTarget target = OracleTarget::GammaRow;
  std::string description;
  SmarandacheSpec spec;
  std::size_t samples = 0;
  std::size_t skipped = 0;
  double max_abs_dev = 0.0;
  double max_rel_dev = 0.0;
  Verdict verdict = Verdict::DomainEmpty;
};

/// A measured inner product against the value asserted for it.
struct ClaimCheck {
  std::string claim;
  std::string quantity;
  SmarandacheSpec spec;
  double asserted = 0.0;
  std::size_t samples = 0;
  double measured_min = 0.0;
  double measured_max = 0.0;
  double max_dev = 0.0;  ///< max |measured - asserted|
  bool holds = false;    ///< max_dev <= claim_tol
};

struct GridSpec {
  double lo = -2.0;
  double hi = 2.0;
  int n = 401;
};

struct AssessmentReport {
  std::string curve;
  GridSpec grid;
  TolerancePolicy tolerances;
  std::vector<FormulaVerdict> verdicts;
  std::vector<ClaimCheck> claims;
  std::vector<std::string> notes;
};

/// (b, c) in {(1,1), (1,2), (2,3)}; c* in {1, 2} for the x-alpha-y kind.
inline std::vector<SmarandacheSpec> default_specs(const std::vector<Kind>& kinds = {kAllKinds.begin(), kAllKinds.end()}) {
  const std::array<std::pair<double, double>, 3> bc = {{{1.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}}};
  std::vector<SmarandacheSpec> out;
  for (Kind k : kinds) {
    for (auto [b, c] : bc) {
      if (k == Kind::XAlphaY) {
        for (double cs : {1.0, 2.0}) out.push_back({k, b, c, cs});
      } else {
        out.push_back({k, b, c, 1.0});
      }
    }
  }
  return out;
}

/// Evaluation nodes: uniform for exact sources, native nodes in range for sampled ones.
inline std::vector<double> assessment_grid(const CurveSource& curve, const GridSpec& g) {
  if (const auto native = curve.native_grid()) {
    std::vector<double> out;
    for (double s : *native) {
      if (s >= g.lo - 1e-12 && s <= g.hi + 1e-12) out.push_back(s);
    }
    return out;
  }
  return uniform_grid(g.lo, g.hi, g.n);
}

namespace detail {

struct PointData {
  FrameJet fj;
  std::optional<ScalarJet3> f;  ///< recovered generating function
};

struct SpecPoint {
  LorentzVector gamma;
  std::optional<PartnerSample> partner;
};

inline FormulaValue as_row(const FrameCoordinates& c) { return {c.x, c.alpha, c.y}; }

inline FormulaValue oracle_value(OracleTarget t, const SmarandacheSpec& spec, const PointData& pt, const SpecPoint& sp) {
  const FrameSample& fr = pt.fj.frame;
  switch (t) {
    case OracleTarget::GammaRow: return as_row(frame_coordinates(sp.gamma, fr));
    case OracleTarget::Position: return {sp.gamma.x1, sp.gamma.x2, sp.gamma.x3};
    default: break;
  }
  const PartnerSample& p = *sp.partner;
  switch (t) {
    case OracleTarget::AlphaRow: return as_row(frame_coordinates(p.alpha_g, fr));
    case OracleTarget::YRow: return as_row(frame_coordinates(p.y_g, fr));
    case OracleTarget::GammaPP: return as_row(frame_coordinates(p.gamma_pp, fr));
    case OracleTarget::Speed: return {p.sigma};
    case OracleTarget::Curvature: return {p.kappa_g};
    case OracleTarget::Normalizer: return {spec.c / (spec.b * p.sigma)};
    default: return {};
  }
}

inline double sup(const FormulaValue& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct ClaimAccumulator {
  std::string claim, quantity;
  double asserted;
  std::size_t n = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double dev = 0.0;

  void add(double v) {
    ++n;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    dev = std::max(dev, std::abs(v - asserted));
  }

  ClaimCheck finish(const SmarandacheSpec& spec, double tol) const {
    ClaimCheck c{claim, quantity, spec, asserted, n, n ? lo : 0.0, n ? hi : 0.0, dev, false};
    c.holds = n > 0 && dev <= tol;
    return c;
  }
};

}  // namespace detail

inline AssessmentReport assess(const CurveSource& curve, const std::vector<SmarandacheSpec>& specs, const GridSpec& grid,
                               const TolerancePolicy& tol = {}) {
  for (const auto& s : specs) s.validate();
  const std::vector<double> nodes = assessment_grid(curve, grid);
  if (nodes.empty()) throw std::invalid_argument("assessment grid is empty");

  AssessmentReport report;
  report.curve = curve.descriptor();
  report.grid = grid;
  report.tolerances = tol;
  report.notes = {
      "The printed tuple (1.0, 1) in the generating-function forms is read as the vector (1, 0, 1).",
      "Row targets are compared in the (x, alpha, y) basis via the dual pairing (<v,y>, <v,alpha>, <v,x>).",
      "d/ds readings differentiate in the base arc length; d/ds* readings divide by the oracle speed.",
      "Partner-frame targets are evaluated only where <gamma_s, gamma_s> > admissible tolerance."};

  std::vector<detail::PointData> points;
  points.reserve(nodes.size());
  for (double s : nodes) {
    const CurveJet j = curve.jet(s);
    detail::PointData pd{frame_jet_at(j, tol.frame_tolerances(j.accuracy)), std::nullopt};
    try {
      pd.f = recover_generating_function(j);
    } catch (const std::domain_error&) {
    }
    points.push_back(pd);
  }

  const auto& registry = closed_form_registry();
  std::vector<std::vector<detail::SpecPoint>> per_spec(specs.size());
  for (std::size_t k = 0; k < specs.size(); ++k) {
    per_spec[k].reserve(points.size());
    for (const auto& pt : points) {
      detail::SpecPoint sp{construct(specs[k], pt.fj.frame), std::nullopt};
      if (admissible(specs[k], pt.fj, tol.admissible_tol)) sp.partner = partner_frame_oracle(specs[k], pt.fj, tol.admissible_tol);
      per_spec[k].push_back(sp);
    }
  }

  for (const auto& entry : registry) {
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const SmarandacheSpec& spec = specs[k];
      if (spec.kind != entry.kind) continue;
      FormulaVerdict v{entry.formula_id, entry.variant, entry.target, entry.description, spec};
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        const auto& sp = per_spec[k][i];
        if (needs_partner_frame(entry.target) && !sp.partner) {
          ++v.skipped;
          continue;
        }
        if (entry.target == OracleTarget::Position && !pt.f) {
          ++v.skipped;
          continue;
        }
        ClosedFormInput in;
        in.spec = spec;
        in.kappa = pt.fj.frame.kappa;
        in.dkappa = pt.fj.dkappa;
        in.sigma = sp.partner ? sp.partner->sigma : 1.0;
        in.x = pt.fj.frame.x;
        if (pt.f) {
          in.f = pt.f->value;
          in.fs = pt.f->d1;
          in.fss = pt.f->d2;
        }
        FormulaValue got;
        try {
          got = closed_form_eval(entry, in);
        } catch (const DomainViolation&) {
          ++v.skipped;
          continue;
        }
        const FormulaValue want = detail::oracle_value(entry.target, spec, pt, sp);
        double abs_dev = 0.0;
        for (std::size_t c = 0; c < want.size(); ++c) abs_dev = std::max(abs_dev, std::abs(got[c] - want[c]));
        if (!std::isfinite(abs_dev)) abs_dev = std::numeric_limits<double>::infinity();
        v.max_abs_dev = std::max(v.max_abs_dev, abs_dev);
        v.max_rel_dev = std::max(v.max_rel_dev, abs_dev / std::max(detail::sup(want), tol.rel_floor));
        ++v.samples;
      }
      v.verdict = classify(v.samples, v.max_rel_dev, tol);
      report.verdicts.push_back(std::move(v));
    }
  }

  for (std::size_t k = 0; k < specs.size(); ++k) {
    using Acc = detail::ClaimAccumulator;
    Acc cone{"cone-membership", "<gamma,gamma>", 0.0};
    Acc ynull{"y-null", "<y_g,y_g>", 0.0};
    Acc gy{"gamma-y-unit", "<gamma,y_g>", 1.0};
    Acc unit{"tangent-unit", "<alpha_g,alpha_g>", 1.0};
    Acc gt{"gamma-tangent-orthogonal", "<gamma,alpha_g>", 0.0};
    Acc yt{"y-tangent-orthogonal", "<y_g,alpha_g>", 0.0};
    for (const auto& sp : per_spec[k]) {
      cone.add(inner(sp.gamma, sp.gamma));
      if (!sp.partner) continue;
      const PartnerSample& p = *sp.partner;
      ynull.add(inner(p.y_g, p.y_g));
      gy.add(inner(p.gamma, p.y_g));
      unit.add(inner(p.alpha_g, p.alpha_g));
      gt.add(inner(p.gamma, p.alpha_g));
      yt.add(inner(p.y_g, p.alpha_g));
    }
    for (const Acc* a : {&cone, &ynull, &gy, &unit, &gt, &yt}) report.claims.push_back(a->finish(specs[k], tol.claim_tol));
  }
  return report;
}

/// True when every verdict is DomainEmpty (and there is at least one).
inline bool all_domain_empty(const AssessmentReport& r) {
  return !r.verdicts.empty() &&
         std::all_of(r.verdicts.begin(), r.verdicts.end(), [](const auto& v) { return v.verdict == Verdict::DomainEmpty; });
}

// ---------------------------------------------------------------- rendering

enum class ReportFormat { Json, Markdown };

namespace detail {

inline nlohmann::ordered_json spec_json(const SmarandacheSpec& s) {
  nlohmann::ordered_json j;
  j["kind"] = kind_token(s.kind);
  j["b"] = s.b;
  j["c"] = s.c;
  j["cstar"] = s.cstar;
  return j;
}

inline nlohmann::ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

inline std::string sci(double v) {
  if (!std::isfinite(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline std::string spec_label(const SmarandacheSpec& s) {
  char buf[96];
  if (s.kind == Kind::XAlphaY) {
    std::snprintf(buf, sizeof buf, "b=%g c=%g c*=%g", s.b, s.c, s.cstar);
  } else {
    std::snprintf(buf, sizeof buf, "b=%g c=%g", s.b, s.c);
  }
  return buf;
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const AssessmentReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["curve"] = r.curve;
  j["grid"] = {{"lo", r.grid.lo}, {"hi", r.grid.hi}, {"n", r.grid.n}};
  ordered_json t;
  t["confirm"] = r.tolerances.confirm_tol;
  t["min_samples"] = r.tolerances.min_samples;
  t["rel_floor"] = r.tolerances.rel_floor;
  t["claim"] = r.tolerances.claim_tol;
  t["admissible"] = r.tolerances.admissible_tol;
  j["tolerances"] = t;
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : r.verdicts) {
    ordered_json e;
    e["formula_id"] = v.formula_id;
    e["variant"] = v.variant;
    e["spec"] = detail::spec_json(v.spec);
    e["samples"] = v.samples;
    e["skipped"] = v.skipped;
    const bool empty = v.verdict == Verdict::DomainEmpty;
    e["max_abs_dev"] = empty ? ordered_json(nullptr) : detail::finite_or_null(v.max_abs_dev);
    e["max_rel_dev"] = empty ? ordered_json(nullptr) : detail::finite_or_null(v.max_rel_dev);
    e["verdict"] = to_string(v.verdict);
    e["target"] = to_string(v.target);
    e["expression"] = v.description;
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.claims) {
    ordered_json e;
    e["claim"] = c.claim;
    e["quantity"] = c.quantity;
    e["spec"] = detail::spec_json(c.spec);
    e["asserted"] = c.asserted;
    e["samples"] = c.samples;
    e["measured_min"] = c.samples ? ordered_json(c.measured_min) : ordered_json(nullptr);
    e["measured_max"] = c.samples ? ordered_json(c.measured_max) : ordered_json(nullptr);
    e["max_dev"] = c.samples ? ordered_json(c.max_dev) : ordered_json(nullptr);
    e["holds"] = c.holds;
    claims.push_back(std::move(e));
  }
  j["claims"] = std::move(claims);
  j["notes"] = r.notes;
  return j;
}

inline std::string render_markdown(const AssessmentReport& r) {
  std::ostringstream o;
  o << "# Closed-form assessment\n\n";
  o << "- curve: `" << r.curve << "`\n";
  o << "- grid: [" << r.grid.lo << ", " << r.grid.hi << "], n = " << r.grid.n << "\n";
  o << "- confirm tolerance (relative): " << detail::sci(r.tolerances.confirm_tol)
    << ", quorum: " << r.tolerances.min_samples << " samples\n\n";

  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& v : r.verdicts) ++counts[static_cast<int>(v.verdict)];
  o << "| Confirmed | Discrepant | DomainEmpty | Inconclusive |\n|---|---|---|---|\n";
  o << "| " << counts[0] << " | " << counts[1] << " | " << counts[2] << " | " << counts[3] << " |\n\n";

  for (Kind k : kAllKinds) {
    bool any = false;
    for (const auto& v : r.verdicts) any = any || v.spec.kind == k;
    if (!any) continue;
    o << "## " << kind_label(k) << " partner\n\n";
    o << "| formula | variant | target | spec | samples | skipped | max abs dev | max rel dev | verdict |\n";
    o << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& v : r.verdicts) {
      if (v.spec.kind != k) continue;
      const bool empty = v.verdict == Verdict::DomainEmpty;
      o << "| " << v.formula_id << " | " << v.variant << " | " << to_string(v.target) << " | "
        << detail::spec_label(v.spec) << " | " << v.samples << " | " << v.skipped << " | "
        << (empty ? "-" : detail::sci(v.max_abs_dev)) << " | " << (empty ? "-" : detail::sci(v.max_rel_dev)) << " | ";
      if (v.verdict == Verdict::Discrepant) {
        o << "**Discrepant** (rel " << detail::sci(v.max_rel_dev) << ")";
      } else {
        o << to_string(v.verdict);
      }
      o << " |\n";
    }
    o << "\n";
  }
  if (r.verdicts.empty()) o << "_No verdicts: the spec list was empty._\n\n";

  o << "## Claims\n\n";
  o << "| claim | quantity | kind | spec | asserted | samples | measured min | measured max | holds |\n";
  o << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& c : r.claims) {
    o << "| " << c.claim << " | " << c.quantity << " | " << kind_token(c.spec.kind) << " | " << detail::spec_label(c.spec)
      << " | " << c.asserted << " | " << c.samples << " | " << (c.samples ? detail::sci(c.measured_min) : "-") << " | "
      << (c.samples ? detail::sci(c.measured_max) : "-") << " | " << (c.holds ? "yes" : "no") << " |\n";
  }
  o << "\n## Notes\n\n";
  for (const auto& n : r.notes) o << "- " << n << "\n";
  return o.str();
}

inline std::string render_report(const AssessmentReport& r, ReportFormat f) {
  if (f == ReportFormat::Json) return report_json(r).dump(2) + "\n";
  return render_markdown(r);
}

}  // namespace conecurve
