#include "rosette/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace rosette {

using nlohmann::json;

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json point(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json params_json(const RosetteParams& p) { return {{"n", p.n}, {"beta", p.beta}}; }

} // namespace

json feature_report_json(const FeatureReport& rep, double beta_input, const BetaReduction& red) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "feature_report";
  j["n"] = rep.params.n;
  j["beta_input"] = beta_input;
  j["beta"] = red.beta;
  j["l"] = red.l;
  const auto ev = endpoint_values(rep.params.n);
  j["K_n"] = ev.K_n;
  j["rotation_to_input"] = point(reduction_rotation(rep.params.n, red.l));
  json feats = json::array();
  for (const auto& f : rep.features) {
    feats.push_back({{"kind", to_string(f.kind)},
                     {"t", f.t},
                     {"location", point(f.location)},
                     {"magnitude", f.magnitude},
                     {"argument", f.argument},
                     {"axis_arg", opt(f.axis_arg)},
                     {"tangent_arg", opt(f.tangent_arg)},
                     {"interior_angle", opt(f.interior_angle)},
                     {"left_tangent", f.left_tangent},
                     {"right_tangent", f.right_tangent},
                     {"confirmed", f.confirmed}});
  }
  j["features"] = feats;
  j["separations"] = rep.separations;
  j["total_curvature_per_petal"] = rep.total_curvature_per_petal;
  return j;
}

json checks_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"max_residual", c.max_residual},
                   {"tolerance", c.tolerance},
                   {"samples_used", c.samples_used},
                   {"detail", c.detail}});
  return arr;
}

json verification_report_json(const VerificationReport& rep, double beta_input,
                              const BetaReduction& red, const std::string& level) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "verification_report";
  j["params"] = params_json(rep.params);
  j["beta_input"] = beta_input;
  j["beta"] = red.beta;
  j["l"] = red.l;
  j["level"] = level;
  j["seed"] = rep.seed;
  j["checks"] = checks_json(rep.checks);
  j["all_passed"] = rep.all_passed();
  return j;
}

json decomposition_json(const DecompositionResult& res) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "decomposition_report";
  j["params"] = params_json(res.params_tilde);
  j["beta"] = res.reduction.beta;
  j["l"] = res.reduction.l;
  json sets = json::array();
  for (const auto& s : res.sets)
    sets.push_back({{"sector", {s.sector_start, s.sector_end}},
                    {"rotation", point(s.rotation)},
                    {"boundary_vertices", s.boundary_polyline.size()}});
  j["sets"] = sets;
  j["probes"] = res.probes;
  j["probes_inside_one"] = res.probes_inside_one;
  j["probes_on_shared_boundary"] = res.probes_on_shared_boundary;
  j["checks"] = checks_json(res.checks);
  bool ok = true;
  for (const auto& c : res.checks) ok = ok && c.passed;
  j["all_passed"] = ok;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_field(fields[i]);
  }
  os << "\r\n";
}

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

static std::string fmt_opt(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

void write_feature_csv(std::ostream& os, const FeatureReport& rep) {
  write_csv_row(os, {"kind", "t", "re", "im", "magnitude", "argument", "axis_arg", "tangent_arg",
                     "interior_angle", "confirmed"});
  for (const auto& f : rep.features)
    write_csv_row(os, {to_string(f.kind), format_number(f.t), format_number(f.location.real()),
                       format_number(f.location.imag()), format_number(f.magnitude),
                       format_number(f.argument), fmt_opt(f.axis_arg), fmt_opt(f.tangent_arg),
                       fmt_opt(f.interior_angle), f.confirmed ? "true" : "false"});
}

void write_boundary_csv(std::ostream& os, const RosetteParams& p, int count) {
  write_csv_row(os, {"t", "re", "im", "d_arg", "d_mag"});
  for (int i = 0; i < count; ++i) {
    const double t = 2.0 * kPi * i / count;
    const double u = t * p.n / kPi;
    const bool exact = std::fabs(u - std::nearbyint(u)) < 1e-12;
    const cplx v = exact ? f_at_multiple(p, std::lround(u)).f : boundary_point(p, t);
    std::string darg, dmag;
    if (distance_to_singular(p.n, t) >= kSingularTol) {
      auto d = boundary_derivative_any(p, t);
      darg = fmt_opt(d.d_arg);
      dmag = format_number(d.d_mag);
    }
    write_csv_row(os, {format_number(t), format_number(v.real()), format_number(v.imag()), darg,
                       dmag});
  }
}

void write_radial_csv(std::ostream& os, const RosetteParams& p, int count) {
  write_csv_row(os, {"theta", "r", "re", "im", "abs", "arg"});
  const int rays[] = {0, 1, 2};
  for (int j : rays) {
    const double th = j * kPi / p.n;
    for (int i = 0; i < count; ++i) {
      const double r = count == 1 ? 1.0 : double(i) / (count - 1);
      const cplx v = r == 1.0 ? f_at_multiple(p, j).f : f(p, std::polar(r, th)).f;
      write_csv_row(os, {format_number(th), format_number(r), format_number(v.real()),
                         format_number(v.imag()), format_number(std::abs(v)),
                         format_number(std::arg(v))});
    }
  }
}

} // namespace rosette
