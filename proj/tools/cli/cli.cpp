#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "legendre/frontal/catalog.hpp"
#include "legendre/frontal/data_io.hpp"
#include "legendre/frontal/engine.hpp"
#include "legendre/lab/data_catalog.hpp"
#include "legendre/lab/membership.hpp"
#include "legendre/lab/transforms.hpp"
#include "legendre/proof/verify_all.hpp"
#include "legendre/sphere/sphere.hpp"
#include "svg.hpp"

namespace legendre::cli {

namespace fs = std::filesystem;
using frontal::GridSpec;
using frontal::LegendrianData;
using frontal::Vec;
using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> args;
  std::vector<std::string> grids;
  std::optional<double> fd_step;
  std::optional<double> tol;
  std::optional<std::string> out_dir;
  std::optional<std::string> formats_text;
  std::optional<std::string> catalog;
  int n = 3;
  std::string mutate = "none";
  std::string fill = "nearest";

  std::set<std::string> formats;
};

// ---- output ---------------------------------------------------------------

std::string csv_number(double v) { return format_double(v); }

class Outputs {
 public:
  Outputs(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  [[nodiscard]] bool has_dir() const { return cfg_.out_dir.has_value(); }
  [[nodiscard]] bool wants(const std::string& f) const { return cfg_.formats.count(f) > 0; }
  /// JSON goes to stdout instead of the table when no directory is given.
  [[nodiscard]] bool json_to_stdout() const { return !has_dir() && wants("json"); }

  void table(const std::string& text) const {
    if (!json_to_stdout()) out_ << text;
  }

  void json_payload(const std::string& file, const json& payload) const {
    if (json_to_stdout()) {
      out_ << payload.dump(2) << '\n';
    } else if (has_dir() && wants("json")) {
      write(file, payload.dump(2) + "\n");
    }
  }

  void csv(const std::string& file, const std::string& text) const {
    if (has_dir() && wants("csv")) write(file, text);
  }

  void svg(const std::string& file, const std::string& text) const {
    if (has_dir() && wants("svg")) write(file, text);
  }

  void write(const std::string& file, const std::string& text) const {
    const fs::path p = fs::path(*cfg_.out_dir) / file;
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text;
    if (!f) throw std::runtime_error("cannot write " + p.string());
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string report_table(const std::vector<Report>& reports) {
  std::size_t width = 10;
  for (const auto& r : reports) width = std::max(width, r.check_name.size() + 2);
  std::ostringstream os;
  for (const auto& r : reports) {
    os << pad(r.check_name, width) << to_string(r.status);
    std::string failing;
    for (const auto& b : r.branches) {
      if (b.status == Status::fail) failing += (failing.empty() ? "" : "; ") + b.name;
    }
    if (!failing.empty()) os << "  [" << failing << ']';
    os << '\n';
  }
  return os.str();
}

// ---- config parsing ---------------------------------------------------------

std::set<std::string> parse_formats(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "json" && item != "csv" && item != "svg") {
      throw UsageError("unknown format '" + item + "' (expected json, csv, svg)");
    }
    out.insert(item);
  }
  if (out.empty()) throw UsageError("empty --format list");
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(v)) throw UsageError("bad " + what + " '" + text + "'");
  return v;
}

std::optional<GridSpec> parse_grid(const RunConfig& cfg) {
  if (cfg.grids.empty()) return std::nullopt;
  GridSpec g;
  for (const auto& text : cfg.grids) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
      throw UsageError("--grid expects lo:hi:count, got '" + text + "'");
    }
    const double lo = parse_number(text.substr(0, c1), "grid bound");
    const double hi = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "grid bound");
    const double count = parse_number(text.substr(c2 + 1), "grid count");
    if (count != std::floor(count) || count > 1e7) throw UsageError("grid count must be an integer: '" + text + "'");
    g.box.emplace_back(lo, hi);
    g.counts.push_back(static_cast<int>(count));
  }
  if (cfg.fd_step) g.fd_step = *cfg.fd_step;
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return g;
}

void apply_fd_step(const RunConfig& cfg, GridSpec& g) {
  if (cfg.fd_step) g.fd_step = *cfg.fd_step;
}

// ---- input resolution -------------------------------------------------------

struct Input {
  std::string label;
  LegendrianData data;
  GridSpec grid;
};

bool is_catalog(const std::string& name) {
  const auto& names = lab::data_catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

GridSpec default_catalog_grid(const std::string& name) {
  const auto& fn = frontal::frontal_catalog_names();
  if (std::find(fn.begin(), fn.end(), name) != fn.end()) return frontal::frontal_catalog(name).grid;
  return GridSpec::line(-1, 1, 201);
}

Input resolve_input(const RunConfig& cfg, const std::string& source) {
  const auto grid_override = parse_grid(cfg);
  if (is_catalog(source)) {
    GridSpec g = grid_override.value_or(default_catalog_grid(source));
    apply_fd_step(cfg, g);
    try {
      return {source, lab::catalog_data(source, g), g};
    } catch (const std::invalid_argument& e) {
      if (dynamic_cast<const frontal::NotCreative*>(&e) == nullptr) throw UsageError(e.what());
      throw;
    }
  }
  if (!fs::exists(source)) {
    throw UsageError("input '" + source + "' is neither a catalog name nor an existing file");
  }
  LegendrianData d = frontal::read_data_file(source);
  GridSpec g = d.sampled()->grid;
  if (grid_override && !(grid_override->box == g.box && grid_override->counts == g.counts)) {
    throw UsageError("--grid does not match the grid stored in " + source);
  }
  if (cfg.fd_step) {
    g.fd_step = *cfg.fd_step;
    auto s = *d.sampled();
    s.grid = g;
    d = LegendrianData(d.n(), std::move(s));
  }
  return {source, std::move(d), g};
}

// ---- commands ---------------------------------------------------------------

int cmd_verify_proof(const RunConfig& cfg, const Outputs& io) {
  if (cfg.n < 1 || cfg.n > 6) throw UsageError("--n must be between 1 and 6");
  proof::Mutation mutation{};
  try {
    mutation = proof::parse_mutation(cfg.mutate);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto reports = proof::verify_all(cfg.n, mutation);
  bool all = true;
  for (const auto& r : reports) all = all && r.passed();
  io.table(report_table(reports));
  json payload;
  payload["command"] = "verify-proof";
  payload["n"] = cfg.n;
  payload["mutate"] = cfg.mutate;
  payload["status"] = to_string(all ? Status::pass : Status::fail);
  payload["reports"] = to_json(reports);
  io.json_payload("verify-proof.json", payload);
  std::ostringstream csv;
  csv << "check_name,status\n";
  for (const auto& r : reports) csv << r.check_name << ',' << to_string(r.status) << '\n';
  io.csv("verify-proof.csv", csv.str());
  return all ? ExitCode::ok : ExitCode::verification_failure;
}

int cmd_example1(const RunConfig& cfg, const Outputs& io) {
  GridSpec g = parse_grid(cfg).value_or(GridSpec::line(-1, 1, 2001));
  apply_fd_step(cfg, g);
  if (g.n() != 1) throw UsageError("example1 is a plane curve; give exactly one --grid axis");
  const double tol = cfg.tol.value_or(1e-9);
  const auto f = frontal::example1_frontal();
  const auto d = frontal::example1_data();

  std::ostringstream csv;
  csv << "x,phi1,phi2,nu1,nu2,a,b,theta,rec1,rec2,residual\n";
  std::vector<Point2> curve, rec;
  double worst = 0.0, at_zero = NAN;
  Vec where = g.point(0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Vec x = g.point(k);
    const Vec phi = f.phi(x), nu = f.nu(x);
    const auto s = d.evaluate(x);
    const Vec r = frontal::envelope_reconstruct(s.theta, s.a, s.b);
    const double e = (r - phi).norm();
    if (e > worst || std::isnan(e)) {
      worst = e;
      where = x;
    }
    if (x(0) == 0.0) at_zero = e;
    csv << csv_number(x(0)) << ',' << csv_number(phi(0)) << ',' << csv_number(phi(1)) << ',' << csv_number(nu(0))
        << ',' << csv_number(nu(1)) << ',' << csv_number(s.a) << ',' << csv_number(s.b(0)) << ','
        << csv_number(s.theta(0)) << ',' << csv_number(r(0)) << ',' << csv_number(r(1)) << ',' << csv_number(e)
        << '\n';
    curve.emplace_back(phi(0), phi(1));
    rec.emplace_back(r(0), r(1));
  }

  Report rep;
  rep.check_name = "example1";
  rep.add_branch("closed-form reconstruction matches (x^2, x^5)", worst <= tol, format_double(worst));
  if (!std::isnan(at_zero)) rep.add_branch("reconstruction exact at the singular point x = 0", at_zero == 0.0,
                                           format_double(at_zero));
  const Vec one = Vec::Constant(1, 1.0);
  const double incidence = std::abs(Vec::Constant(2, 1.0).dot(f.nu(one)) - d.evaluate(one).a);
  rep.add_branch("tangent line at x = 1 passes through (1, 1)", incidence <= 1e-12, format_double(incidence));
  rep.residuals.push_back(format_double(worst));

  json loc = json::array({where(0)});
  rep.details["samples"] = g.size();
  rep.details["tolerance"] = tol;
  rep.details["max_residual"] = worst;
  rep.details["location"] = loc;
  // Finite-difference pipeline, for reference.
  const auto pipeline = frontal::data_of_frontal(f, g);
  double pipe = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    pipe = std::max(pipe, (frontal::envelope_reconstruct(pipeline.data, g.point(k)) - f.phi(g.point(k))).norm());
  }
  rep.details["pipeline_max_error"] = pipe;
  rep.details["fd_step"] = g.fd_step;

  io.table(report_table({rep}) + "max residual " + format_double(worst) + " (tolerance " + format_double(tol) +
           "), finite-difference pipeline " + format_double(pipe) + "\n");
  io.json_payload("example1.json", to_json(rep));
  io.csv("example1.csv", csv.str());

  SvgPlot plot;
  const std::size_t stride = std::max<std::size_t>(1, g.size() / 20);
  for (std::size_t k = 0; k < g.size(); k += stride) {
    const Vec x = g.point(k);
    const Vec nu = f.nu(x);
    const double a = d.evaluate(x).a;
    plot.line({a * nu(0), a * nu(1)}, {-nu(1), nu(0)}, "#b0b0b0");
  }
  plot.polyline(curve, "#1f4e9c", 3.0, false, "phi(x) = (x^2, x^5)");
  plot.polyline(rec, "#d62728", 1.5, true, "envelope reconstruction");
  io.svg("example1.svg", plot.render("example1: curve, tangent lines, reconstructed envelope"));
  return rep.passed() ? ExitCode::ok : ExitCode::verification_failure;
}

json verdict_json(const lab::MembershipVerdict& v) { return lab::to_json(v); }

std::vector<Point2> envelope_points(const LegendrianData& d, const GridSpec& g) {
  std::vector<Point2> pts;
  const auto s = d.sample(g);
  for (std::size_t k = 0; k < g.size(); ++k) {
    try {
      const Vec r = frontal::envelope_reconstruct(s.theta[k], s.a[k], s.b[k]);
      pts.emplace_back(r(0), r(1));
    } catch (const std::exception&) {
      pts.emplace_back(NAN, NAN);
    }
  }
  return pts;
}

std::string data_csv(const LegendrianData& d, const GridSpec& g) {
  const auto s = d.sample(g);
  const int n = d.n();
  std::ostringstream os;
  for (int i = 1; i <= n; ++i) os << 'x' << i << ',';
  for (int i = 1; i <= n; ++i) os << "theta" << i << ',';
  os << 'a';
  for (int i = 1; i <= n; ++i) os << ",b" << i;
  os << '\n';
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Vec x = g.point(k);
    for (int i = 0; i < n; ++i) os << csv_number(x(i)) << ',';
    for (int i = 0; i < n; ++i) os << csv_number(s.theta[k](i)) << ',';
    os << csv_number(s.a[k]);
    for (int i = 0; i < n; ++i) os << ',' << csv_number(s.b[k](i));
    os << '\n';
  }
  return os.str();
}

std::string source_of(const RunConfig& cfg, std::size_t positional_without_catalog) {
  const std::size_t want = cfg.catalog ? positional_without_catalog - 1 : positional_without_catalog;
  if (cfg.args.size() != want) {
    throw UsageError(cfg.command + " expects " + std::to_string(want) + " positional argument(s)" +
                     (cfg.catalog ? " with --catalog" : ""));
  }
  return cfg.catalog ? *cfg.catalog : cfg.args.front();
}

int cmd_transform(const RunConfig& cfg, const Outputs& io) {
  const std::string source = source_of(cfg, 2);
  lab::Transform tr;
  try {
    tr = lab::parse_transform(cfg.args.back());
  } catch (const lab::TransformParseError& e) {
    throw UsageError(e.what());
  }
  const Input in = resolve_input(cfg, source);
  if (tr.kind == lab::Transform::Kind::fake) {
    try {
      (void)tr.params.expanded(in.data.n());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto vin = lab::membership(in.data, in.grid, cfg.tol);
  if (!vin.in_X) {
    const auto check = frontal::creative_check(in.data, in.grid, vin.creative_tolerance);
    const auto& loc = check.details["location"];
    Vec x(static_cast<Eigen::Index>(loc.size()));
    for (std::size_t i = 0; i < loc.size(); ++i) x(static_cast<Eigen::Index>(i)) = loc[i].get<double>();
    throw frontal::NotCreative(x, vin.creative_residual);
  }
  const LegendrianData out = lab::apply(tr, in.data);
  const auto vout = lab::membership(out, in.grid, cfg.tol);
  const Report inv = lab::involution_check(tr, in.data, in.grid, cfg.tol.value_or(1e-9));

  auto flags = [](const lab::MembershipVerdict& v) {
    return std::string("in_X=") + (v.in_X ? "yes" : "no") + " in_GX=" + (v.in_GX() ? "yes" : "no") +
           " in_Y=" + (v.in_Y ? "yes" : "no") + " in_GY=" + (v.in_GY ? "yes" : "no") + " genericity=" +
           frontal::to_string(v.genericity.verdict);
  };
  std::ostringstream table;
  table << "input      " << in.label << " (n=" << in.data.n() << ", " << frontal::to_string(in.data.mode())
        << ")\ntransform  " << tr.name() << "\ninput      " << flags(vin) << "\noutput     " << flags(vout) << '\n'
        << report_table({inv});
  io.table(table.str());

  json payload;
  payload["command"] = "transform";
  payload["input"] = in.label;
  payload["transform"] = tr.name();
  payload["n"] = in.data.n();
  payload["input_membership"] = verdict_json(vin);
  payload["output_membership"] = verdict_json(vout);
  payload["involution_check"] = to_json(inv);
  io.json_payload("transform.json", payload);
  if (io.has_dir() && io.wants("json")) io.write("transformed.json", frontal::data_to_json(out, in.grid).dump(1) + "\n");
  io.csv("transformed.csv", data_csv(out, in.grid));
  if (in.data.n() == 1) {
    SvgPlot plot;
    plot.polyline(envelope_points(in.data, in.grid), "#1f4e9c", 2.5, false, "input envelope");
    plot.polyline(envelope_points(out, in.grid), "#d62728", 1.5, true, "transformed envelope");
    io.svg("transform.svg", plot.render(in.label + " under " + tr.name()));
  }
  return inv.passed() ? ExitCode::ok : ExitCode::verification_failure;
}

int cmd_membership(const RunConfig& cfg, const Outputs& io) {
  const std::string source = source_of(cfg, 1);
  const Input in = resolve_input(cfg, source);
  const auto v = lab::membership(in.data, in.grid, cfg.tol);
  std::ostringstream table;
  table << "input  " << in.label << " (n=" << in.data.n() << ", " << frontal::to_string(in.data.mode()) << ")\n"
        << "in_X   " << (v.in_X ? "yes" : "no") << "  creative residual " << format_double(v.creative_residual)
        << " (tolerance " << format_double(v.creative_tolerance) << ")\n"
        << "in_GX  " << (v.in_GX() ? "yes" : "no") << "  " << frontal::to_string(v.genericity.verdict)
        << ", regular fractions theta " << format_double(v.genericity.fraction_regular_theta) << ", b "
        << format_double(v.genericity.fraction_regular_b) << '\n'
        << "in_Y   " << (v.in_Y ? "yes" : "no") << "  fixed-point residual " << format_double(v.fixed_residual)
        << " (tolerance " << format_double(v.fixed_tolerance) << ")\n"
        << "in_GY  " << (v.in_GY ? "yes" : "no") << '\n';
  io.table(table.str());
  json payload;
  payload["command"] = "membership";
  payload["input"] = in.label;
  payload["n"] = in.data.n();
  payload["membership"] = verdict_json(v);
  io.json_payload("membership.json", payload);
  if (in.data.n() == 1) {
    SvgPlot plot;
    plot.polyline(envelope_points(in.data, in.grid), "#1f4e9c", 2.0, false, "envelope");
    io.svg("membership.svg", plot.render(in.label));
  }
  io.csv("membership.csv", data_csv(in.data, in.grid));
  return ExitCode::ok;
}

int cmd_roundtrip(const RunConfig& cfg, const Outputs& io) {
  if (!cfg.args.empty()) throw UsageError("roundtrip takes no positional arguments; use --catalog NAME");
  frontal::DataOptions opts;
  if (cfg.fill == "extrapolate") {
    opts.fill = frontal::DataOptions::Fill::extrapolate;
  } else if (cfg.fill != "nearest") {
    throw UsageError("--fill must be nearest or extrapolate");
  }
  std::vector<std::string> names = frontal::frontal_catalog_names();
  if (cfg.catalog) {
    if (std::find(names.begin(), names.end(), *cfg.catalog) == names.end()) {
      throw UsageError("roundtrip needs a frontal catalog name, got '" + *cfg.catalog + "'");
    }
    names = {*cfg.catalog};
  }
  const auto grid_override = parse_grid(cfg);
  std::vector<Report> reports;
  std::ostringstream csv;
  csv << "frontal,max_error,max_incidence,max_tangency,status\n";
  for (const auto& name : names) {
    const auto c = frontal::frontal_catalog(name);
    GridSpec g = grid_override.value_or(c.grid);
    apply_fd_step(cfg, g);
    if (g.n() != c.map.n) {
      throw UsageError(name + " needs " + std::to_string(c.map.n) + " grid axes, got " + std::to_string(g.n()));
    }
    reports.push_back(frontal::roundtrip_check(c.map, g, cfg.tol.value_or(1e-6), opts));
    const auto& r = reports.back();
    csv << name << ',' << csv_number(r.details["max_error"].get<double>()) << ','
        << csv_number(r.details["max_incidence"].get<double>()) << ','
        << csv_number(r.details["max_tangency"].get<double>()) << ',' << to_string(r.status) << '\n';
  }
  bool all = true;
  std::ostringstream table;
  std::size_t width = 10;
  for (const auto& r : reports) width = std::max(width, r.check_name.size() + 2);
  for (const auto& r : reports) {
    all = all && r.passed();
    table << pad(r.check_name, width) << to_string(r.status) << "  max error "
          << format_double(r.details["max_error"].get<double>()) << '\n';
  }
  io.table(table.str());
  json payload;
  payload["command"] = "roundtrip";
  payload["fill"] = cfg.fill;
  payload["reports"] = to_json(reports);
  io.json_payload("roundtrip.json", payload);
  io.csv("roundtrip.csv", csv.str());
  return all ? ExitCode::ok : ExitCode::verification_failure;
}

// ---- errors -----------------------------------------------------------------

void emit_error(std::ostream& err, const std::string& kind, const std::string& message, json extra = json::object()) {
  json e;
  e["kind"] = kind;
  e["message"] = message;
  for (auto it = extra.begin(); it != extra.end(); ++it) e[it.key()] = it.value();
  err << json{{"error", e}}.dump() << '\n';
}

json point(const Vec& x) {
  json j = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) j.push_back(x(i));
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Legendre involution toolkit: proof verification, envelopes of hyperplane families, transforms"};
  app.require_subcommand(1);
  app.add_option("--grid", cfg.grids, "Sample axis lo:hi:count (repeat per axis)")->type_name("LO:HI:COUNT");
  app.add_option("--fd-step", cfg.fd_step, "Finite-difference step h")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Tolerance override")->check(CLI::NonNegativeNumber);
  app.add_option("--out", cfg.out_dir, "Directory for output files");
  app.add_option("--format", cfg.formats_text, "Comma-separated subset of json,csv,svg");
  app.add_option("--catalog", cfg.catalog, "Catalog entry used as input");
  app.add_option("--n", cfg.n, "Largest dimension for verify-proof (checks run for 1..N)")->capture_default_str();
  app.add_option("--mutate", cfg.mutate, "Negative control for verify-proof: none, P_b2, eq3")->capture_default_str();
  app.add_option("--fill", cfg.fill, "b at non-regular nodes for roundtrip: nearest, extrapolate")->capture_default_str();

  struct Sub {
    const char* name;
    const char* help;
    const char* positional;
  };
  const Sub subs[] = {
      {"verify-proof", "Run the exact proof checks", nullptr},
      {"example1", "Reproduce the envelope of (x^2, x^5)", nullptr},
      {"transform", "Apply legendre or fake:t=... to data: [INPUT] TRANSFORM", "args"},
      {"membership", "Classify data in X, GX, Y, GY: [INPUT]", "args"},
      {"roundtrip", "Frontal -> data -> envelope for catalog frontals", nullptr},
  };
  for (const auto& s : subs) {
    auto* sc = app.add_subcommand(s.name, s.help);
    sc->fallthrough();
    sc->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
    if (s.positional) sc->add_option(s.positional, cfg.args, "Catalog name or data file, then transform");
    else sc->allow_extras(false);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return ExitCode::usage_error;
  }

  try {
    // Validate everything cheap before computing.
    if (cfg.formats_text) {
      cfg.formats = parse_formats(*cfg.formats_text);
    } else if (cfg.out_dir) {
      cfg.formats = {"json", "csv", "svg"};
    }
    if (!cfg.out_dir && (cfg.formats.count("csv") || cfg.formats.count("svg"))) {
      throw UsageError("--format csv/svg needs --out DIR");
    }
    (void)parse_grid(cfg);
    if (cfg.catalog && cfg.command != "roundtrip" && !is_catalog(*cfg.catalog)) {
      throw UsageError("unknown catalog entry '" + *cfg.catalog + "'");
    }
    if (cfg.out_dir) {
      std::error_code ec;
      fs::create_directories(*cfg.out_dir, ec);
      if (ec || !fs::is_directory(*cfg.out_dir)) throw std::runtime_error("cannot create output directory " + *cfg.out_dir);
    }
    const Outputs io(cfg, out);
    if (cfg.command == "verify-proof") return cmd_verify_proof(cfg, io);
    if (cfg.command == "example1") return cmd_example1(cfg, io);
    if (cfg.command == "transform") return cmd_transform(cfg, io);
    if (cfg.command == "membership") return cmd_membership(cfg, io);
    return cmd_roundtrip(cfg, io);
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.what());
    return ExitCode::usage_error;
  } catch (const frontal::DataFormatError& e) {
    emit_error(err, "parse", e.what());
    return ExitCode::usage_error;
  } catch (const frontal::UnknownCatalogEntry& e) {
    emit_error(err, "usage", e.what());
    return ExitCode::usage_error;
  } catch (const frontal::NotCreative& e) {
    emit_error(err, "not_creative", e.what(), {{"x", point(e.x())}, {"residual", e.residual()}});
    return ExitCode::verification_failure;
  } catch (const frontal::ChartFailure& e) {
    emit_error(err, "chart_failure", e.what(), {{"x", point(e.x())}});
    return ExitCode::verification_failure;
  } catch (const frontal::SparseRegularSet& e) {
    emit_error(err, "sparse_regular_set", e.what(), {{"fraction", e.fraction()}});
    return ExitCode::verification_failure;
  } catch (const frontal::AntipodalBase& e) {
    emit_error(err, "antipodal_base", e.what());
    return ExitCode::verification_failure;
  } catch (const std::exception& e) {
    emit_error(err, "runtime", e.what());
    return ExitCode::verification_failure;
  }
}

}  // namespace legendre::cli
