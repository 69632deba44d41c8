#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <optional>

#include "tricenter/approx.hpp"
#include "tricenter/electro_center.hpp"
#include "tricenter/general_p.hpp"
#include "tricenter/potential.hpp"

namespace tricenter::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kRefLambda = 4.010297202743007522718690055346;
constexpr Point2 kRefCenter{0.272557906914867702, 0.704148189723077020};
constexpr double kRefSearchValue = 2.110731796690289177459836888182;

// ---- number formatting and parsing ----------------------------------------

// Shortest decimal that round-trips; locale independent.
std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<double> parse_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::size_t b = pos, e = end;
    while (b < e && text[b] == ' ') ++b;
    while (e > b && text[e - 1] == ' ') --e;
    const char* first = text.data() + b;
    if (b < e && *first == '+') ++first;
    double v = 0;
    auto res = std::from_chars(first, text.data() + e, v);
    if (b == e || res.ec != std::errc() || res.ptr != text.data() + e || !std::isfinite(v)) {
      throw InvalidArgument(std::string("cannot parse ") + what + " from '" + text + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

// CLI11 would read "-1,0" or "-2" as option names. Values that start with a
// minus sign and a digit or dot are glued to the preceding long option, and
// --vertices / --sides swallow all of their value tokens into one.
std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
  auto numeric_like = [](const std::string& s) {
    if (s.empty()) return false;
    const std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    return i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.');
  };
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool long_opt = a.rfind("--", 0) == 0 && a.size() > 2 && a.find('=') == std::string::npos;
    if (!long_opt) {
      out.push_back(a);
      continue;
    }
    if (a == "--vertices" || a == "--sides") {
      std::string joined;
      while (i + 1 < args.size() && numeric_like(args[i + 1])) {
        if (!joined.empty()) joined += ',';
        joined += args[++i];
      }
      out.push_back(joined.empty() ? a : a + "=" + joined);
      continue;
    }
    if (i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' && numeric_like(args[i + 1])) {
      out.push_back(a + "=" + args[++i]);
      continue;
    }
    out.push_back(a);
  }
  return out;
}

// ---- request -----------------------------------------------------------------

struct Request {
  std::string vertices;
  std::string sides;
  std::string format;
  double tol = 1e-12;
  int digits = 15;
  std::string out_path;
  bool json_flag = false;  // verify --json
};

struct TriangleInput {
  Triangle tri;
  bool from_sides;
};

TriangleInput make_triangle(const Request& req) {
  const bool has_v = !req.vertices.empty(), has_s = !req.sides.empty();
  if (has_v == has_s) throw InvalidArgument("give exactly one of --vertices and --sides");
  if (has_v) {
    const auto v = parse_numbers(req.vertices, "vertices");
    if (v.size() != 6) throw InvalidArgument("--vertices needs three x,y pairs");
    return {Triangle({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}), false};
  }
  const auto s = parse_numbers(req.sides, "sides");
  if (s.size() != 3) throw InvalidArgument("--sides needs three lengths a,b,c");
  return {triangle_from_sides(s[0], s[1], s[2]), true};
}

json triangle_json(const Triangle& t) {
  const SideLengths s = side_lengths(t);
  json v = json::array();
  for (const Point2& p : t.vertices()) v.push_back({p.x, p.y});
  return {{"vertices", v}, {"sides", {s.a(), s.b(), s.c()}}};
}

json point_json(Point2 p) { return {{"x", jnum(p.x)}, {"y", jnum(p.y)}}; }

json trilinears_json(const Trilinears& t) {
  return {{"tau_a", jnum(t.tau_a)}, {"tau_b", jnum(t.tau_b)}, {"tau_c", jnum(t.tau_c)}};
}

// Simple CSV writer: frozen header, shortest round-trip numbers.
class Csv {
 public:
  explicit Csv(std::ostream& os) : os_(os) {}
  void header(std::initializer_list<const char*> cols) {
    bool first = true;
    for (const char* c : cols) {
      os_ << (first ? "" : ",") << c;
      first = false;
    }
    os_ << '\n';
  }
  Csv& cell(const std::string& s) {
    os_ << (first_ ? "" : ",") << s;
    first_ = false;
    return *this;
  }
  Csv& cell(double v) { return cell(num(v)); }
  Csv& cell(int v) { return cell(std::to_string(v)); }
  void end() {
    os_ << '\n';
    first_ = true;
  }

 private:
  std::ostream& os_;
  bool first_ = true;
};

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

// ---- commands ----------------------------------------------------------------

int cmd_center(const Request& req, std::ostream& os) {
  const TriangleInput in = make_triangle(req);
  const Triangle& t = in.tri;
  const ElectrostaticCenter c = electrostatic_center(t, req.tol);
  const LambdaSolution& s = c.solution;
  const Trilinears tri = cartesian_to_trilinear(t, c.point);
  const Theorem1Spreads spreads = theorem1_check(t, c.point);
  const double field = norm(field_closed(t, c.point));
  const double v = potential_closed(t, c.point);

  if (req.format == "csv") {
    Csv csv(os);
    csv.header({"lambda", "u", "v", "w", "r_a", "r_b", "r_c", "x", "y", "tau_a", "tau_b", "tau_c",
                "side_relation_spread", "angle_relation_spread", "field_norm", "potential", "residual",
                "iterations"});
    csv.cell(s.lambda).cell(s.u).cell(s.v).cell(s.w).cell(s.r_a).cell(s.r_b).cell(s.r_c);
    csv.cell(c.point.x).cell(c.point.y).cell(tri.tau_a).cell(tri.tau_b).cell(tri.tau_c);
    csv.cell(spreads.side_relation_spread).cell(spreads.angle_relation_spread).cell(field).cell(v);
    csv.cell(s.residual).cell(s.iterations).end();
    return kSuccess;
  }
  json j;
  j["command"] = "center";
  j["triangle"] = triangle_json(t);
  j["lambda"] = s.lambda;
  j["u"] = s.u;
  j["v"] = s.v;
  j["w"] = s.w;
  j["r_a"] = s.r_a;
  j["r_b"] = s.r_b;
  j["r_c"] = s.r_c;
  j["center"] = point_json(c.point);
  j["trilinears"] = trilinears_json(tri);
  j["theorem1"] = {{"side_relation_spread", spreads.side_relation_spread},
                   {"angle_relation_spread", spreads.angle_relation_spread}};
  j["field_norm"] = field;
  j["potential"] = v;
  j["residual"] = s.residual;
  j["iterations"] = s.iterations;
  j["units"] = {{"lengths", "input length unit (u, v, w, r_*, center, trilinears)"},
                {"lambda", "dimensionless"},
                {"theorem1", "dimensionless log spreads"},
                {"potential", "length (constant factors dropped)"},
                {"field_norm", "dimensionless (constant factors dropped)"},
                {"residual", "squared length, |lhs - rhs| of the lambda equation"}};
  emit_json(os, j);
  return kSuccess;
}

int cmd_rp_center(const Request& req, double p, std::ostream& os) {
  const Triangle t = make_triangle(req).tri;
  const RpSolveReport r = rp_center(t, PExponent(p), req.tol);
  const double spread = illuminating_center_check(t, r.point);
  const double thomson = thomson_residual(t, r.point);
  if (req.format == "csv") {
    Csv csv(os);
    csv.header({"p", "x", "y", "residual_norm", "iterations", "illuminating_spread", "thomson_residual"});
    csv.cell(p).cell(r.point.x).cell(r.point.y).cell(r.residual_norm).cell(r.iterations);
    csv.cell(spread).cell(thomson).end();
    return kSuccess;
  }
  json j;
  j["command"] = "rp-center";
  j["triangle"] = triangle_json(t);
  j["p"] = p;
  j["center"] = point_json(r.point);
  j["trilinears"] = trilinears_json(cartesian_to_trilinear(t, r.point));
  j["residual_norm"] = r.residual_norm;
  j["iterations"] = r.iterations;
  j["illuminating_spread"] = spread;
  j["thomson_residual"] = thomson;
  emit_json(os, j);
  return kSuccess;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  if (n > 1) v.back() = hi;
  return v;
}

int cmd_arc(const Request& req, double p_min, double p_max, int steps, std::ostream& os) {
  if (!(p_min < p_max)) throw InvalidArgument("--p-min must be below --p-max");
  if (steps < 2) throw InvalidArgument("--steps must be at least 2");
  const Triangle t = make_triangle(req).tri;
  const std::vector<double> ps = linspace(p_min, p_max, steps);
  const std::vector<ArcPoint> arc = potential_arc(t, ps, req.tol);
  const bool all_failed = std::none_of(arc.begin(), arc.end(), [](const ArcPoint& a) { return a.converged; });

  auto thomson = [&](const ArcPoint& a) { return a.converged ? thomson_residual(t, a.point) : NAN; };
  if (req.format == "csv") {
    Csv csv(os);
    csv.header({"p", "x", "y", "converged", "residual_norm", "iterations", "thomson_residual", "error"});
    for (const ArcPoint& a : arc) {
      csv.cell(a.p).cell(a.point.x).cell(a.point.y).cell(a.converged ? 1 : 0).cell(a.residual_norm);
      csv.cell(a.iterations).cell(thomson(a)).cell(a.error).end();
    }
  } else {
    json rows = json::array();
    for (const ArcPoint& a : arc) {
      json row{{"p", a.p},
               {"x", jnum(a.point.x)},
               {"y", jnum(a.point.y)},
               {"converged", a.converged},
               {"residual_norm", jnum(a.residual_norm)},
               {"iterations", a.iterations},
               {"thomson_residual", jnum(thomson(a))}};
      if (!a.converged) row["error"] = a.error;
      rows.push_back(row);
    }
    json j;
    j["command"] = "arc";
    j["triangle"] = triangle_json(t);
    j["points"] = rows;
    emit_json(os, j);
  }
  return all_failed ? kInputOrSolverError : kSuccess;
}

int cmd_lambda_curve(const Request& req, double l_min, double l_max, int steps, std::ostream& os) {
  if (!(l_min > 0.0 && l_min < l_max)) throw InvalidArgument("need 0 < --lambda-min < --lambda-max");
  if (steps < 2) throw InvalidArgument("--steps must be at least 2");
  const Triangle t = make_triangle(req).tri;
  const double lambda_max = solve_lambda(side_lengths(t), req.tol).lambda;
  std::vector<double> ls;
  for (int i = 0; i < steps; ++i) ls.push_back(l_min * std::pow(l_max / l_min, double(i) / (steps - 1)));
  ls.back() = l_max;
  if (lambda_max >= l_min && lambda_max <= l_max &&
      std::find(ls.begin(), ls.end(), lambda_max) == ls.end()) {
    ls.insert(std::upper_bound(ls.begin(), ls.end(), lambda_max), lambda_max);
  }
  const std::vector<CurvePoint> curve = lambda_curve(t, ls);
  if (req.format == "csv") {
    Csv csv(os);
    csv.header({"lambda", "x", "y", "is_lambda_max"});
    for (const CurvePoint& c : curve) {
      csv.cell(c.lambda).cell(c.point.x).cell(c.point.y).cell(c.lambda == lambda_max ? 1 : 0).end();
    }
    return kSuccess;
  }
  json rows = json::array();
  for (const CurvePoint& c : curve) {
    rows.push_back({{"lambda", c.lambda},
                    {"x", jnum(c.point.x)},
                    {"y", jnum(c.point.y)},
                    {"is_lambda_max", c.lambda == lambda_max}});
  }
  json j;
  j["command"] = "lambda-curve";
  j["triangle"] = triangle_json(t);
  j["lambda_max"] = lambda_max;
  j["points"] = rows;
  emit_json(os, j);
  return kSuccess;
}

int cmd_grid(const Request& req, int resolution, std::ostream& os) {
  if (resolution < 8 || resolution > 2048) throw InvalidArgument("--resolution must be in [8, 2048]");
  if (req.format != "csv") throw InvalidArgument("grid writes CSV only");
  const Triangle t = make_triangle(req).tri;
  double x0 = t.a().x, x1 = x0, y0 = t.a().y, y1 = y0;
  for (const Point2& p : t.vertices()) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double px = 0.2 * (x1 - x0), py = 0.2 * (y1 - y0);
  const std::vector<double> xs = linspace(x0 - px, x1 + px, resolution);
  const std::vector<double> ys = linspace(y0 - py, y1 + py, resolution);
  const double band = kBoundaryBand * t.diameter();

  Csv csv(os);
  csv.header({"x", "y", "V", "Ex", "Ey", "inside"});
  for (double y : ys) {
    for (double x : xs) {
      const Point2 p{x, y};
      const PointLocation loc = classify_point(t, p);
      const bool in_band = loc == PointLocation::Boundary || distance_to_boundary(t, p) <= band;
      csv.cell(x).cell(y);
      if (in_band) {
        double v = NAN;
        try {
          v = potential_quadrature(t, p);
        } catch (const Error&) {
        }
        csv.cell(v).cell(std::string()).cell(std::string()).cell(-1).end();
        continue;
      }
      double v = NAN;
      FieldVector e{NAN, NAN};
      try {
        v = potential_closed(t, p);
        e = field_closed(t, p);
      } catch (const Error&) {
      }
      csv.cell(v).cell(e.ex).cell(e.ey).cell(loc == PointLocation::Interior ? 1 : 0).end();
    }
  }
  return kSuccess;
}

struct Check {
  std::string name;
  double value;
  double expected;
  double diff;
  double tol;
  std::string measure;  // "abs" or "rel"
  bool pass() const { return std::isfinite(diff) && diff <= tol; }
};

int cmd_verify(const Request& req, std::optional<double> tol_override, std::ostream& os) {
  std::vector<Check> checks;
  auto add = [&](std::string name, double value, double expected, double tol, bool relative) {
    const double diff = relative ? std::abs(value - expected) / std::abs(expected) : std::abs(value - expected);
    checks.push_back({std::move(name), value, expected, diff, tol_override.value_or(tol), relative ? "rel" : "abs"});
  };

  const Triangle ref({-1, 0}, {2, 0}, {0, 2});
  const ElectrostaticCenter c = electrostatic_center(ref);
  add("lambda_max", c.solution.lambda, kRefLambda, 1e-12, true);
  add("center_x", c.point.x, kRefCenter.x, 1e-10, false);
  add("center_y", c.point.y, kRefCenter.y, 1e-10, false);
  add("search_value_6_9_13", kimberling_search_value(SideLengths(6, 9, 13)), kRefSearchValue, 1e-10, true);
  const double lambda0 = 3.0 * std::log(2.0 + std::sqrt(3.0));
  add("lambda_equilateral", solve_lambda(SideLengths(1, 1, 1)).lambda, lambda0, 1e-12, true);
  const Triangle eq({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
  add("equilateral_center_offset", distance(electrostatic_center(eq).point, eq.centroid()) / eq.diameter(), 0.0,
      1e-12, false);
  add("p2_center_offset", distance(rp_center(ref, PExponent(2)).point, ref.centroid()) / ref.diameter(), 0.0,
      1e-9, false);
  const Theorem1Spreads s = theorem1_check(ref, c.point);
  add("theorem1_side_spread", s.side_relation_spread, 0.0, 1e-9, false);
  add("theorem1_angle_spread", s.angle_relation_spread, 0.0, 1e-9, false);
  add("field_norm_at_center", norm(field_closed(ref, c.point)), 0.0, 1e-8, false);

  const int failed = int(std::count_if(checks.begin(), checks.end(), [](const Check& k) { return !k.pass(); }));
  if (req.json_flag || req.format == "json") {
    json rows = json::array();
    for (const Check& k : checks) {
      rows.push_back({{"name", k.name},
                      {"value", jnum(k.value)},
                      {"expected", k.expected},
                      {"diff", jnum(k.diff)},
                      {"measure", k.measure},
                      {"tol", k.tol},
                      {"pass", k.pass()}});
    }
    json j;
    j["command"] = "verify";
    j["checks"] = rows;
    j["passed"] = int(checks.size()) - failed;
    j["failed"] = failed;
    j["ok"] = failed == 0;
    emit_json(os, j);
  } else if (req.format == "csv") {
    Csv csv(os);
    csv.header({"name", "value", "expected", "diff", "measure", "tol", "pass"});
    for (const Check& k : checks) {
      csv.cell(k.name).cell(k.value).cell(k.expected).cell(k.diff).cell(k.measure).cell(k.tol);
      csv.cell(k.pass() ? 1 : 0).end();
    }
  } else {
    os << std::left << std::setw(28) << "check" << std::setw(26) << "value" << std::setw(26) << "expected"
       << std::setw(12) << "diff" << std::setw(6) << "" << std::setw(10) << "tol"
       << "status\n";
    for (const Check& k : checks) {
      char diff[32], tol[32];
      std::snprintf(diff, sizeof diff, "%.3e", k.diff);
      std::snprintf(tol, sizeof tol, "%.1e", k.tol);
      os << std::left << std::setw(28) << k.name << std::setw(26) << num(k.value) << std::setw(26)
         << num(k.expected) << std::setw(12) << diff << std::setw(6) << k.measure << std::setw(10) << tol
         << (k.pass() ? "PASS" : "FAIL") << '\n';
    }
    if (failed == 0) {
      os << "all " << checks.size() << " checks passed\n";
    } else {
      os << failed << " of " << checks.size() << " checks failed\n";
    }
  }
  return failed == 0 ? kSuccess : kVerificationFailed;
}

int cmd_search_value(const Request& req, std::ostream& os) {
  const Triangle t = make_triangle(req).tri;
  const SideLengths s = side_lengths(t);
  const double d = kimberling_search_value(s, std::max(req.tol, 1e-14));
  if (req.format == "json") {
    json j;
    j["command"] = "search-value";
    j["sides"] = {s.a(), s.b(), s.c()};
    j["d_a"] = d;
    j["d_a_text"] = fixed(d, req.digits);
    emit_json(os, j);
  } else if (req.format == "csv") {
    Csv csv(os);
    csv.header({"a", "b", "c", "d_a"});
    csv.cell(s.a()).cell(s.b()).cell(s.c()).cell(d).end();
  } else {
    os << fixed(d, req.digits) << '\n';
  }
  return kSuccess;
}

int cmd_survey(const Request& req, int n, std::uint64_t seed, std::ostream& os) {
  const RatioBandSummary s = ratio_band_survey(n, seed);
  if (req.format == "csv") {
    Csv csv(os);
    csv.header({"n", "seed", "min", "max", "mean", "used", "excluded"});
    csv.cell(n).cell(std::to_string(seed)).cell(s.min).cell(s.max).cell(s.mean).cell(s.used).cell(s.excluded);
    csv.end();
    return kSuccess;
  }
  json j;
  j["command"] = "survey";
  j["n"] = n;
  j["seed"] = seed;
  j["min"] = s.min;
  j["max"] = s.max;
  j["mean"] = s.mean;
  j["used"] = s.used;
  j["excluded"] = s.excluded;
  j["lambda0"] = lambda_equilateral();
  emit_json(os, j);
  return kSuccess;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message,
                 const std::optional<RpSolveReport>& best = std::nullopt) {
  std::string human = kind;
  std::replace(human.begin(), human.end(), '_', ' ');
  json j{{"error", human}, {"kind", kind}, {"message", message}};
  if (best) {
    j["best"] = {{"p", best->p},
                 {"x", jnum(best->point.x)},
                 {"y", jnum(best->point.y)},
                 {"residual_norm", jnum(best->residual_norm)},
                 {"iterations", best->iterations}};
  }
  err << j.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Electrostatic and Riesz-potential centers of triangles", "tricenter"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  Request req;
  double p = 0.0, p_min = -10.0, p_max = 10.0, l_min = 1e-3, l_max = 1e3;
  int steps = 81, l_steps = 61, resolution = 64, n = 1000;
  std::uint64_t seed = 42;
  std::optional<double> verify_tol;

  auto add_common = [&](CLI::App* sub, const std::string& default_format, bool triangle, bool tol = true) {
    if (triangle) {
      sub->add_option("--vertices", req.vertices, "Three vertices: x1,y1 x2,y2 x3,y3");
      sub->add_option("--sides", req.sides, "Three side lengths: a,b,c (a = BC, b = CA, c = AB)");
    }
    req.format = default_format;
    sub->add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    if (tol) {
      sub->add_option("--tol", req.tol, "Solver tolerance")->check(CLI::Range(1e-14, 1e-4));
    }
    sub->add_option("--digits", req.digits, "Decimal places for scalar text output")->check(CLI::Range(0, 15));
    sub->add_option("--out", req.out_path, "Write the result to this file instead of stdout");
  };

  auto* center = app.add_subcommand("center", "Electrostatic center: lambda, u, v, w, distances, checks");
  add_common(center, "json", true);
  auto* rp = app.add_subcommand("rp-center", "Extreme point of the Riesz potential with exponent p");
  add_common(rp, "json", true);
  rp->add_option("--p", p, "Riesz exponent")->required();
  auto* arc = app.add_subcommand("arc", "Potential arc: rp centers over a range of p");
  add_common(arc, "json", true);
  arc->add_option("--p-min", p_min, "Smallest p")->capture_default_str();
  arc->add_option("--p-max", p_max, "Largest p")->capture_default_str();
  arc->add_option("--steps", steps, "Number of evenly spaced p values")->capture_default_str();
  auto* curve = app.add_subcommand("lambda-curve", "Center formula with lambda as a free parameter");
  add_common(curve, "json", true);
  curve->add_option("--lambda-min", l_min, "Smallest lambda")->capture_default_str();
  curve->add_option("--lambda-max", l_max, "Largest lambda")->capture_default_str();
  curve->add_option("--steps", l_steps, "Number of geometrically spaced lambda values")->capture_default_str();
  auto* grid = app.add_subcommand("grid", "CSV x,y,V,Ex,Ey,inside over the bounding box padded 20%; inside is 1/0/-1 (boundary band: V by quadrature, field empty); failed values print nan");
  add_common(grid, "csv", true);
  grid->add_option("--resolution", resolution, "Points per axis (8-2048)")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Golden-value regression; exit 1 on any failure");
  add_common(verify, "text", false, false);
  verify->add_option("--tol", verify_tol, "Override every check tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--json", req.json_flag, "Machine-readable output");
  auto* search = app.add_subcommand("search-value", "Distance from the center to side BC");
  add_common(search, "text", true);
  auto* survey = app.add_subcommand("survey", "Ratio (lambda_max - lambda0) / t over random triangles");
  add_common(survey, "json", false, false);
  survey->add_option("--n", n, "Number of triangles (>= 100)")->capture_default_str();
  survey->add_option("--seed", seed, "Random seed")->capture_default_str();

  // add_common reset the format for every subcommand; restore the default of
  // the one actually chosen after parsing.
  std::vector<std::string> args = normalize_args(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    print_error(err, "invalid_argument", e.what());
    return kInputOrSolverError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->count("--format") == 0) {
    const std::string name = chosen->get_name();
    req.format = (name == "grid") ? "csv" : (name == "verify" || name == "search-value") ? "text" : "json";
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    const std::string name = chosen->get_name();
    if (req.format == "text" && name != "verify" && name != "search-value") {
      throw InvalidArgument("text format is only available for verify and search-value");
    }
    if (name == "center") code = cmd_center(req, buffer);
    else if (name == "rp-center") code = cmd_rp_center(req, p, buffer);
    else if (name == "arc") code = cmd_arc(req, p_min, p_max, steps, buffer);
    else if (name == "lambda-curve") code = cmd_lambda_curve(req, l_min, l_max, l_steps, buffer);
    else if (name == "grid") code = cmd_grid(req, resolution, buffer);
    else if (name == "verify") code = cmd_verify(req, verify_tol, buffer);
    else if (name == "search-value") code = cmd_search_value(req, buffer);
    else if (name == "survey") code = cmd_survey(req, n, seed, buffer);
  } catch (const NoConvergence& e) {
    print_error(err, to_string(e.kind()), e.what(), e.best());
    return kInputOrSolverError;
  } catch (const Error& e) {
    print_error(err, to_string(e.kind()), e.what());
    return kInputOrSolverError;
  } catch (const std::exception& e) {
    print_error(err, "internal_error", e.what());
    return kInputOrSolverError;
  }

  if (req.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(req.out_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      print_error(err, "io_error", "cannot write " + req.out_path);
      return kInputOrSolverError;
    }
  }
  return code;
}

}  // namespace tricenter::cli
