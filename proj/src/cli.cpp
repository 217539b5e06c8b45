#include "rosette/cli.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "rosette/errors.hpp"
#include "rosette/render.hpp"
#include "rosette/serialize.hpp"
#include "rosette/verification.hpp"

namespace rosette {

namespace {

constexpr int kUsageError = 2;

struct Levels {
  int symmetry, univalence, oracle;
  bool decompose;
};

Levels level_of(const std::string& level) {
  if (level == "full") return {1000, 50, 100, true};
  return {200, 20, 10, false};
}

double parse_number(const std::string& s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (pos != s.size() || !std::isfinite(v)) throw ParseError("not a number: '" + s + "'");
  return v;
}

void note_reduction(std::ostream& err, double beta, const BetaReduction& red) {
  if (red.l != 0 || red.beta != beta)
    err << "note: beta " << format_number(beta) << " reduced to " << format_number(red.beta)
        << " with l = " << red.l << "\n";
}

// writes to --out when given, otherwise to the command's output stream
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

} // namespace

double parse_beta(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
  if (s.empty()) throw ParseError("empty beta");
  static const std::regex sym(R"(^([+-]?)([0-9]*\.?[0-9]*)\*?(pi|π)(?:/([0-9]*\.?[0-9]+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, sym)) {
    double k = m[2].length() ? parse_number(m[2].str()) : 1.0;
    double d = m[4].matched ? parse_number(m[4].str()) : 1.0;
    if (d == 0) throw ParseError("zero denominator in beta '" + raw + "'");
    double v = k * kPi / d;
    return m[1].str() == "-" ? -v : v;
  }
  return parse_number(s);
}

std::pair<int, int> parse_grid(const std::string& s) {
  static const std::regex re(R"(^([0-9]+)[xX]([0-9]+)$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("grid must look like RxC, got '" + s + "'");
  int r = std::stoi(m[1].str()), c = std::stoi(m[2].str());
  if (r < 1 || c < 1) throw ParseError("grid dimensions must be >= 1");
  return {r, c};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rosette harmonic mappings: figures, feature tables and verification reports",
               "rosette"};
  app.require_subcommand(1);

  int n = 0;
  std::string beta_str = "0";
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string grid = "24x16";
  int samples = -1;
  std::string level = "quick";
  std::string what = "boundary";
  int width = 800;
  double margin = 0.08;
  std::vector<std::string> overlays;

  auto add_params = [&](CLI::App* sc) {
    sc->add_option("--n", n, "number of cusps (>= 3)")->required()->check(CLI::Range(3, 100000));
    sc->add_option("--beta", beta_str, "radians or a multiple of pi such as pi/4, -2pi/5");
  };

  auto* render_cmd = app.add_subcommand("render", "draw the image of a polar grid as SVG");
  add_params(render_cmd);
  render_cmd->add_option("--out", out_path, "output file (default stdout)");
  render_cmd->add_option("--grid", grid, "radial lines x circles");
  render_cmd->add_option("--samples", samples, "initial samples per curve (>= 16)");
  render_cmd->add_option("--width", width, "image width in px");
  render_cmd->add_option("--margin", margin, "margin fraction");
  render_cmd->add_option("--overlay", overlays, "features, axes, fundamental, hypocycloid")
      ->delimiter(',');

  auto* features_cmd = app.add_subcommand("features", "list cusps and nodes of the boundary");
  add_params(features_cmd);
  features_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  features_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "run the numerical verification suite");
  add_params(verify_cmd);
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--out", out_path);

  auto* dump_cmd = app.add_subcommand("dump", "dump boundary or radial samples as CSV");
  add_params(dump_cmd);
  dump_cmd->add_option("--what", what)->check(CLI::IsMember({"boundary", "radial"}));
  dump_cmd->add_option("--samples", samples, "row count");
  dump_cmd->add_option("--format", format)->check(CLI::IsMember({"csv"}));
  dump_cmd->add_option("--out", out_path);

  auto* decompose_cmd =
      app.add_subcommand("decompose", "draw the fundamental sets and report their tiling");
  add_params(decompose_cmd);
  decompose_cmd->add_option("--out", out_path, "SVG output (omitted: report only)");
  decompose_cmd->add_option("--grid", grid, "probe grid RxC (uses R)");
  decompose_cmd->add_option("--samples", samples);
  decompose_cmd->add_option("--width", width);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const double beta = parse_beta(beta_str);
    RosetteParams p{n, beta, {}};
    const BetaReduction red = reduce_beta(beta);
    const RosetteParams pc{n, red.beta, {}};

    if (render_cmd->parsed()) {
      auto [r, c] = parse_grid(grid);
      RenderSpec spec;
      spec.params = p;
      spec.radial_lines = r;
      spec.circles = c;
      if (samples > 0) spec.samples_per_curve = samples;
      spec.width_px = width;
      spec.margin_frac = margin;
      for (const auto& o : overlays) spec.overlays.insert(parse_overlay(o));
      note_reduction(err, beta, red);
      emit(out_path, out, render(spec).svg);
      return 0;
    }
    if (features_cmd->parsed()) {
      const FeatureReport rep = extract_features(pc);
      if (format == "csv") {
        note_reduction(err, beta, red);
        std::ostringstream os;
        write_feature_csv(os, rep);
        emit(out_path, out, os.str());
      } else {
        emit(out_path, out, feature_report_json(rep, beta, red).dump(2) + "\n");
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      const Levels lv = level_of(level);
      VerificationReport rep;
      rep.params = p;
      rep.seed = seed;
      rep.append(symmetry_suite(p, lv.symmetry, seed));
      rep.append(univalence_scan(pc, lv.univalence));
      rep.append(integral_oracle_sweep(p, lv.oracle, seed));
      if (lv.decompose) rep.append(fundamental_decomposition(p).checks);
      if (format == "csv") {
        note_reduction(err, beta, red);
        std::ostringstream os;
        write_csv_row(os, {"name", "passed", "max_residual", "tolerance", "samples_used", "detail"});
        for (const auto& c : rep.checks)
          write_csv_row(os, {c.name, c.passed ? "true" : "false", format_number(c.max_residual),
                             format_number(c.tolerance), std::to_string(c.samples_used),
                             c.detail});
        emit(out_path, out, os.str());
      } else {
        emit(out_path, out, verification_report_json(rep, beta, red, level).dump(2) + "\n");
      }
      for (const auto& c : rep.checks)
        if (!c.passed) err << "FAILED " << c.name << ": " << c.detail << "\n";
      return rep.all_passed() ? 0 : 1;
    }
    if (dump_cmd->parsed()) {
      const int count = samples > 0 ? samples : 256;
      note_reduction(err, beta, red);
      std::ostringstream os;
      if (what == "boundary")
        write_boundary_csv(os, p, count);
      else
        write_radial_csv(os, p, count);
      emit(out_path, out, os.str());
      return 0;
    }
    if (decompose_cmd->parsed()) {
      const int probe_grid = grid == "24x16" ? 100 : parse_grid(grid).first;
      const DecompositionResult res = fundamental_decomposition(p, probe_grid);
      if (!out_path.empty()) {
        RenderSpec spec;
        spec.params = p;
        spec.radial_lines = 2 * n;
        spec.circles = 8;
        if (samples > 0) spec.samples_per_curve = samples;
        spec.width_px = width;
        spec.overlays = {Overlay::FundamentalSet, Overlay::Features};
        spec.all_fundamental_copies = true;
        write_text_file(out_path, render(spec).svg);
      }
      const nlohmann::json j = decomposition_json(res);
      out << j.dump(2) << "\n";
      return j["all_passed"].get<bool>() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}

} // namespace rosette
