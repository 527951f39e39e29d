#include "dunkl/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "dunkl/besov.hpp"
#include "dunkl/error.hpp"
#include "dunkl/inequalities.hpp"
#include "dunkl/rearrange.hpp"
#include "dunkl/report_io.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/weights.hpp"

namespace dunkl::cli {

namespace {

using io::Json;

const std::vector<std::string> kCommands = {
    "transform",   "rearrange",  "bp-check",     "hardy-check",     "thm1-verify",
    "pitt-verify", "hlp-verify", "besov-verify", "necessity-probe", "sweep"};

// flag values of one subcommand
struct Opts {
  int d = 3;
  double gamma = 0.0;
  std::string out, csv, expect, config;

  std::string family = "gaussian";
  double sigma = 1.0;
  double R = 1.0;
  double a = 0.0;
  std::string profile;
  std::string interp = "pchip";

  double p = 2.0;
  double q = 2.0;
  double alpha = -1.0;
  double beta = 1.0;
  double lambda = 1.0;
  double r = 1.0;
  int samples = 50;
  std::string weight = "power:0";
  std::string u = "power:-1";
  std::string v = "power:1";
  std::string mu = "power:0";
  std::string theta = "power:0";
  std::string grid;

  // sweep: every parameter is a range
  std::string target = "pitt";
  std::string solve;
  std::string p_range = "2";
  std::string q_range = "2";
  std::string alpha_range = "-1";
  std::string beta_range = "1";
  std::string a_range = "0";
};

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string num(double x) { return io::format_double(x); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& s) {
  const std::string t = trim(s);
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) fail(ErrorKind::invalid_input, "not a number: '" + s + "'");
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// Config-file entries go right after the subcommand, so flags given later win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_input, "cannot read config file " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string command;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::invalid_input, "config line without '=': " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key == "command") {
      command = value;
    } else if (key != "config") {
      entries.emplace_back(key, value);
    }
  }
  std::vector<std::string> out(args.begin(), args.begin() + (args.empty() ? 0 : 1));
  std::size_t sub = args.size();
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (std::find(kCommands.begin(), kCommands.end(), args[i]) != kCommands.end()) {
      sub = i;
      break;
    }
  }
  std::size_t rest = 1;
  if (sub < args.size()) {
    out.insert(out.end(), args.begin() + 1, args.begin() + sub + 1);
    rest = sub + 1;
  } else if (!command.empty()) {
    out.push_back(command);
  }
  for (const auto& [k, v] : entries) {
    out.push_back("--" + k);
    out.push_back(v);
  }
  out.insert(out.end(), args.begin() + std::min(rest, args.size()), args.end());
  return out;
}

// "lo:hi:n" geometric or a comma list
std::vector<double> parse_grid(const std::string& text, std::vector<double> fallback) {
  if (text.empty()) return fallback;
  const auto parts = split(text, ':');
  if (parts.size() == 3) {
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    const int n = static_cast<int>(to_double(parts[2]));
    if (!(lo > 0.0) || !(hi > lo) || n < 2) fail(ErrorKind::invalid_input, "grid needs 0 < lo < hi and n >= 2");
    return geometric_grid(lo, hi, n);
  }
  std::vector<double> g = parse_range(text);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] > 0.0) || (i > 0 && !(g[i] > g[i - 1]))) {
      fail(ErrorKind::invalid_input, "grid must be positive and increasing");
    }
  }
  return g;
}

RadialFunction make_family(const Opts& o) {
  if (o.family == "gaussian") return RadialFunction::gaussian(o.sigma);
  if (o.family == "indicator") return RadialFunction::indicator(o.R);
  if (o.family == "power_gaussian") return RadialFunction::power_gaussian(o.a, o.sigma);
  if (o.family == "power") return RadialFunction::power(o.a);
  if (o.family == "zero") return RadialFunction::zero();
  if (o.family == "tabulated") {
    if (o.profile.empty()) fail(ErrorKind::invalid_input, "tabulated family needs --profile");
    std::ifstream in(o.profile);
    if (!in) fail(ErrorKind::invalid_input, "cannot read profile " + o.profile);
    if (o.interp != "pchip" && o.interp != "step") fail(ErrorKind::invalid_input, "--interp is pchip or step");
    return read_profile_csv(in, o.interp == "step" ? Interp::step : Interp::pchip);
  }
  fail(ErrorKind::invalid_input, "unknown family " + o.family);
}

std::string finite_label(double x) { return std::isfinite(x) ? "finite" : "infinite"; }

void sup_csv(Csv& csv, const std::vector<const SupReport*>& reps) {
  csv.header = {"s"};
  for (const SupReport* r : reps) csv.header.push_back(r->expression);
  const auto& grid = reps.front()->grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{num(grid[i])};
    for (const SupReport* r : reps) row.push_back(i < r->ratios.size() ? num(r->ratios[i]) : "nan");
    csv.rows.push_back(std::move(row));
  }
}

Json cmd_transform(const Opts& o, const DunklIndex& idx, Csv& csv) {
  const RadialFunction f = make_family(o);
  const TransformResult t = dunkl_transform_radial(idx, f, parse_grid(o.grid, default_frequency_grid()));
  csv.header = {"s", "value", "error_estimate"};
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    csv.rows.push_back({num(t.grid[i]), num(t.values[i]), num(t.errors[i])});
  }
  return {{"index", io::to_json(idx)},
          {"transform", io::to_json(t)},
          {"verdict", std::isfinite(t.quadrature_error_estimate) ? "ok" : "unreliable"}};
}

Json cmd_rearrange(const Opts& o, const DunklIndex& idx, Csv& csv) {
  const RadialFunction f = make_family(o);
  const Rearrangement R = decreasing_rearrangement(idx, f);
  const std::vector<double> grid = parse_grid(o.grid, geometric_grid(1e-3, 1e3, 61));
  std::vector<double> fs;
  std::vector<double> D;
  csv.header = {"x", "f_star", "distribution"};
  for (double x : grid) {
    fs.push_back(R.f_star(x));
    D.push_back(R.D(x));
    csv.rows.push_back({num(x), num(fs.back()), num(D.back())});
  }
  Json rep = {{"index", io::to_json(idx)},
              {"function", f.description()},
              {"method", R.method},
              {"sup", io::number(R.sup)},
              {"grid", io::numbers(grid)},
              {"f_star", io::numbers(fs)},
              {"distribution", io::numbers(D)}};
  const LpIdentity L = lp_identity_check(idx, f, o.p);
  const double base = std::abs(L.space_norm);
  const double spread = std::max(std::abs(L.layer_cake - L.space_norm),
                                 std::abs(L.rearranged_norm - L.space_norm));
  const double rel = base > 0.0 ? spread / base : spread;
  rep["lp_identity"] = io::to_json(L);
  rep["lp_relative_spread"] = io::number(rel);
  rep["verdict"] = rel <= 1e-6 ? "consistent" : "inconsistent";
  return rep;
}

Json cmd_bp_check(const Opts& o, const DunklIndex&, Csv& csv) {
  const WeightSpec w = WeightSpec::parse(o.weight);
  const SupReport bp = bp_check(w, o.p);
  const SupReport eq = bp_equivalent_condition(w, o.p);
  sup_csv(csv, {&bp, &eq});
  return {{"weight", w.describe()},
          {"bp", io::to_json(bp)},
          {"bp_equivalent", io::to_json(eq)},
          {"equivalence_agrees", bp.verdict == eq.verdict},
          {"sup", io::number(bp.sup)},
          {"verdict", verdict_label(bp)}};
}

Json cmd_hardy_check(const Opts& o, const DunklIndex&, Csv& csv) {
  const WeightSpec mu = WeightSpec::parse(o.mu);
  const WeightSpec th = WeightSpec::parse(o.theta);
  const SupReport A = hardy_condition_A(mu, th, o.p, o.q);
  const SupReport B = hardy_condition_B(mu, th, o.p, o.q);
  sup_csv(csv, {&A, &B});
  std::string verdict = "finite";
  for (const SupReport* r : {&A, &B}) {
    const std::string l = verdict_label(*r);
    if (l == "infinite") verdict = l;
    if (l == "inconclusive" && verdict == "finite") verdict = l;
  }
  return {{"mu", mu.describe()},
          {"theta", th.describe()},
          {"condition_A", io::to_json(A)},
          {"condition_B", io::to_json(B)},
          {"verdict", verdict}};
}

Json pitt_json(const DunklIndex& idx, const WeightSpec& u, const WeightSpec& v, double p, double q) {
  if (u.kind() != WeightSpec::Kind::power || v.kind() != WeightSpec::Kind::power) return nullptr;
  return io::to_json(pitt_index_check(idx, u.exponent(), v.exponent(), p, q));
}

Json cmd_thm1(const Opts& o, const DunklIndex& idx, Csv& csv) {
  const WeightSpec u = WeightSpec::parse(o.u);
  const WeightSpec v = WeightSpec::parse(o.v);
  const RadialFunction f = make_family(o);
  const Curve u_star = weight_rearrangement(idx, u);
  const Curve inv_v = reciprocal_rearrangement(idx, v);
  const SupReport cond = theorem1_condition(idx, u_star, inv_v.pow(-1.0), o.p, o.q);
  const Theorem2Hypotheses hyp = theorem2_hypotheses(idx, u_star, inv_v, o.p, o.q);
  const InequalityReport ineq = verify_theorem1(idx, f, u, v, o.p, o.q);
  sup_csv(csv, {&cond});
  return {{"index", io::to_json(idx)},
          {"u", u.describe()},
          {"v", v.describe()},
          {"condition", io::to_json(cond)},
          {"weight_class", io::to_json(hyp.weight_class)},
          {"hypotheses_hold", hyp.holds},
          {"pitt_index", pitt_json(idx, u, v, o.p, o.q)},
          {"inequality", io::to_json(ineq)},
          {"verdict", verdict_label(cond)}};
}

Json cmd_pitt(const Opts& o, const DunklIndex& idx, Csv&) {
  if (!(o.lambda > 0.0)) fail(ErrorKind::domain, "--lambda must be positive");
  RadialFunction f = make_family(o);
  if (o.lambda != 1.0) f = f.dilated(o.lambda);
  const InequalityReport rep = verify_pitt(idx, f, o.alpha, o.beta, o.p, o.q);
  return {{"index", io::to_json(idx)},
          {"lambda", io::number(o.lambda)},
          {"pitt_index", io::to_json(pitt_index_check(idx, o.alpha, o.beta, o.p, o.q))},
          {"inequality", io::to_json(rep)},
          {"ratio", io::number(rep.ratio)},
          {"verdict", finite_label(rep.ratio)}};
}

Json cmd_hlp(const Opts& o, const DunklIndex& idx, Csv&) {
  const InequalityReport rep = verify_hlp(idx, make_family(o), o.p);
  return {{"index", io::to_json(idx)},
          {"inequality", io::to_json(rep)},
          {"ratio", io::number(rep.ratio)},
          {"verdict", finite_label(rep.ratio)}};
}

Json cmd_besov(const Opts& o, const DunklIndex& idx, Csv& csv) {
  const BesovParams par = BesovParams::make(idx, o.p, o.q, o.alpha, o.beta);
  const PhiSpec phi = make_phi(idx);
  const Theorem3Report t3 = verify_theorem3(par, make_family(o), phi);
  const double drift = std::abs(t3.annulus_sup_refined - t3.annulus_sup);
  const bool stable = std::isfinite(drift) && drift <= 0.1 * std::abs(t3.annulus_sup_refined);
  csv.header = {"t", "norm", "integrand"};
  for (std::size_t i = 0; i < t3.besov.t_grid.size(); ++i) {
    csv.rows.push_back({num(t3.besov.t_grid[i]), num(t3.besov.norms[i]), num(t3.besov.integrand[i])});
  }
  std::string verdict = "holds";
  if (!t3.besov.converged()) {
    verdict = "not_converged";
  } else if (!t3.conclusion || !stable) {
    verdict = "fails";
  }
  return {{"index", io::to_json(idx)},
          {"params",
           {{"p", io::number(par.p)},
            {"q", io::number(par.q)},
            {"alpha", io::number(par.alpha)},
            {"beta", io::number(par.beta)},
            {"delta", io::number(par.delta)},
            {"hlp_corner", par.hlp_corner}}},
          {"theorem3", io::to_json(t3)},
          {"annulus_stable", stable},
          {"verdict", verdict}};
}

Json cmd_probe(const Opts& o, const DunklIndex& idx, Csv&) {
  const NecessityProbe pr = theorem1_necessity_probe(idx, o.r, WeightSpec::parse(o.u),
                                                     WeightSpec::parse(o.v), o.p, o.q, o.samples);
  return {{"index", io::to_json(idx)}, {"probe", io::to_json(pr)}, {"verdict", pr.all_ok() ? "ok" : "violated"}};
}

// sweep -----------------------------------------------------------------

bool is_range(const std::string& s) { return s.find(':') != std::string::npos || s.find(',') != std::string::npos; }

Json cmd_sweep(const Opts& o, const DunklIndex& idx, Csv& csv) {
  if (o.target != "pitt" && o.target != "thm1" && o.target != "bp") {
    fail(ErrorKind::invalid_input, "--target is pitt, thm1 or bp");
  }
  if (!o.solve.empty() && o.solve != "alpha" && o.solve != "beta") {
    fail(ErrorKind::invalid_input, "--solve is alpha or beta");
  }
  const std::vector<std::pair<std::string, std::string>> specs = {
      {"p", o.p_range}, {"q", o.q_range}, {"alpha", o.alpha_range}, {"beta", o.beta_range}, {"a", o.a_range}};
  std::vector<std::vector<double>> values;
  int swept = 0;
  for (const auto& [name, text] : specs) {
    if (name == o.solve) {
      values.push_back({std::nan("")});
      continue;
    }
    if (is_range(text)) ++swept;
    values.push_back(parse_range(text));
  }
  if (swept > 2) fail(ErrorKind::invalid_input, "at most two parameters can be swept");

  // tuples in lexicographic order, p outermost
  std::vector<std::array<double, 5>> tuples;
  std::size_t total = 1;
  for (const auto& v : values) total *= v.size();
  for (std::size_t k = 0; k < total; ++k) {
    std::array<double, 5> t{};
    std::size_t rem = k;
    for (int j = 4; j >= 0; --j) {
      t[j] = values[j][rem % values[j].size()];
      rem /= values[j].size();
    }
    const double p = t[0];
    const double q = t[1];
    const double rhs = idx.N * (1.0 - 1.0 / p - 1.0 / q);
    if (o.solve == "beta") t[3] = p * (rhs - t[2] / q);
    if (o.solve == "alpha") t[2] = q * (rhs - t[3] / p);
    tuples.push_back(t);
  }

  const RadialFunction f = o.target == "pitt" ? make_family(o) : RadialFunction::zero();
  if (o.target == "bp") {
    csv.header = {"index", "a", "p", "sup", "verdict", "equivalent_verdict", "status"};
  } else if (o.target == "thm1") {
    csv.header = {"index", "p", "q", "alpha", "beta", "admissible", "constraint_residual", "sup", "verdict", "status"};
  } else {
    csv.header = {"index", "p", "q", "alpha", "beta", "admissible", "constraint_residual", "lhs", "rhs", "ratio", "status"};
  }

  Json rows = Json::array();
  bool consistent = true;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const auto& t = tuples[k];
    const double p = t[0], q = t[1], alpha = t[2], beta = t[3], a = t[4];
    Json row = {{"index", k}};
    std::string status = "ok";
    if (o.target == "bp") {
      row["a"] = io::number(a);
      row["p"] = io::number(p);
      std::string v1, v2;
      double sup = std::nan("");
      try {
        const WeightSpec w = WeightSpec::power(a);
        const SupReport r1 = bp_check(w, p);
        const SupReport r2 = bp_equivalent_condition(w, p);
        sup = r1.sup;
        v1 = verdict_label(r1);
        v2 = verdict_label(r2);
        consistent = consistent && v1 == v2;
      } catch (const Error& e) {
        status = to_string(e.kind());
      }
      row["sup"] = io::number(sup);
      row["verdict"] = v1;
      row["equivalent_verdict"] = v2;
      csv.rows.push_back({std::to_string(k), num(a), num(p), num(sup), v1, v2, status});
    } else {
      const PittIndex chk = pitt_index_check(idx, alpha, beta, p, q);
      row["p"] = io::number(p);
      row["q"] = io::number(q);
      row["alpha"] = io::number(alpha);
      row["beta"] = io::number(beta);
      row["admissible"] = chk.admissible;
      row["constraint_residual"] = io::number(chk.constraint_residual);
      std::vector<std::string> line{std::to_string(k), num(p),    num(q), num(alpha), num(beta),
                                    chk.admissible ? "true" : "false", num(chk.constraint_residual)};
      if (o.target == "thm1") {
        std::string verdict;
        double sup = std::nan("");
        try {
          const SupReport r = theorem1_condition(idx, weight_rearrangement(idx, WeightSpec::power(alpha)),
                                                 reciprocal_rearrangement(idx, WeightSpec::power(beta)).pow(-1.0),
                                                 p, q);
          sup = r.sup;
          verdict = verdict_label(r);
          consistent = consistent && ((verdict == "finite") == chk.admissible);
        } catch (const Error& e) {
          status = to_string(e.kind());
        }
        row["sup"] = io::number(sup);
        row["verdict"] = verdict;
        line.insert(line.end(), {num(sup), verdict, status});
      } else {
        double lhs = std::nan(""), rhs = std::nan(""), ratio = std::nan("");
        try {
          const InequalityReport r = pitt_sides(idx, f, alpha, beta, p, q);
          lhs = r.lhs;
          rhs = r.rhs;
          ratio = r.ratio;
          if (r.lhs_status != "ok") status = r.lhs_status;
          if (r.rhs_status != "ok") status = r.rhs_status;
          if (chk.admissible && !std::isfinite(ratio)) consistent = false;
        } catch (const Error& e) {
          status = to_string(e.kind());
          if (chk.admissible) consistent = false;
        }
        if (!chk.admissible && status == "ok") status = "inadmissible";
        row["lhs"] = io::number(lhs);
        row["rhs"] = io::number(rhs);
        row["ratio"] = io::number(ratio);
        line.insert(line.end(), {num(lhs), num(rhs), num(ratio), status});
      }
      csv.rows.push_back(std::move(line));
    }
    row["status"] = status;
    rows.push_back(std::move(row));
  }
  std::string verdict;
  if (o.target == "pitt") {
    verdict = consistent ? "bounded" : "unbounded";
  } else {
    verdict = consistent ? "consistent" : "inconsistent";
  }
  return {{"index", io::to_json(idx)},
          {"target", o.target},
          {"columns", csv.header},
          {"rows", rows},
          {"verdict", verdict}};
}

Json dispatch(const std::string& cmd, const Opts& o, const DunklIndex& idx, Csv& csv) {
  if (cmd == "transform") return cmd_transform(o, idx, csv);
  if (cmd == "rearrange") return cmd_rearrange(o, idx, csv);
  if (cmd == "bp-check") return cmd_bp_check(o, idx, csv);
  if (cmd == "hardy-check") return cmd_hardy_check(o, idx, csv);
  if (cmd == "thm1-verify") return cmd_thm1(o, idx, csv);
  if (cmd == "pitt-verify") return cmd_pitt(o, idx, csv);
  if (cmd == "hlp-verify") return cmd_hlp(o, idx, csv);
  if (cmd == "besov-verify") return cmd_besov(o, idx, csv);
  if (cmd == "necessity-probe") return cmd_probe(o, idx, csv);
  return cmd_sweep(o, idx, csv);
}

// registration ----------------------------------------------------------

void add_common(CLI::App* s, Opts& o) {
  s->add_option("--d", o.d, "Euclidean dimension");
  s->add_option("--gamma", o.gamma, "sum of the multiplicities");
  s->add_option("--out", o.out, "JSON report path; stdout when absent");
  s->add_option("--csv", o.csv, "CSV curve path");
  s->add_option("--expect", o.expect, "expected verdict; a mismatch exits with 1");
  s->add_option("--config", o.config, "key=value file; flags take precedence");
}

void add_family(CLI::App* s, Opts& o) {
  s->add_option("--family", o.family, "gaussian, indicator, power_gaussian, power, tabulated or zero");
  s->add_option("--sigma", o.sigma, "gaussian width");
  s->add_option("--R", o.R, "indicator radius");
  s->add_option("--a", o.a, "power exponent");
  s->add_option("--profile", o.profile, "two-column CSV for the tabulated family");
  s->add_option("--interp", o.interp, "pchip or step");
}

void add_pq(CLI::App* s, Opts& o) {
  s->add_option("--p", o.p, "exponent p");
  s->add_option("--q", o.q, "exponent q");
}

void add_uv(CLI::App* s, Opts& o) {
  s->add_option("--u", o.u, "transform-side weight: power:<a>, unit or table:<csv>");
  s->add_option("--v", o.v, "function-side weight");
}

void register_commands(CLI::App& app, std::map<std::string, Opts>& opts) {
  CLI::App* s = nullptr;

  s = app.add_subcommand("transform", "radial transform on a frequency grid");
  add_common(s, opts["transform"]);
  add_family(s, opts["transform"]);
  s->add_option("--grid", opts["transform"].grid, "lo:hi:n geometric or a comma list");

  {
    Opts& o = opts["rearrange"];
    s = app.add_subcommand("rearrange", "distribution function and decreasing rearrangement");
    add_common(s, o);
    add_family(s, o);
    s->add_option("--p", o.p, "exponent of the layer-cake check");
    s->add_option("--grid", o.grid, "lo:hi:n geometric or a comma list");
  }
  {
    Opts& o = opts["bp-check"];
    s = app.add_subcommand("bp-check", "B_p class of a weight and its equivalent form");
    add_common(s, o);
    s->add_option("--weight", o.weight, "power:<a>, power:<a>:<c>, unit or table:<csv>");
    s->add_option("--p", o.p, "exponent p");
  }
  {
    Opts& o = opts["hardy-check"];
    s = app.add_subcommand("hardy-check", "weight conditions of the two Hardy inequalities");
    add_common(s, o);
    add_pq(s, o);
    s->add_option("--mu", o.mu, "weight on the left");
    s->add_option("--theta", o.theta, "weight on the right");
  }
  {
    Opts& o = opts["thm1-verify"];
    s = app.add_subcommand("thm1-verify", "weight condition and rearranged inequality for q >= 2");
    add_common(s, o);
    add_family(s, o);
    add_pq(s, o);
    add_uv(s, o);
  }
  {
    Opts& o = opts["pitt-verify"];
    s = app.add_subcommand("pitt-verify", "power-weighted transform inequality");
    add_common(s, o);
    add_family(s, o);
    add_pq(s, o);
    s->add_option("--alpha", o.alpha, "transform-side exponent");
    s->add_option("--beta", o.beta, "function-side exponent");
    s->add_option("--lambda", o.lambda, "dilation applied to the function");
  }
  {
    Opts& o = opts["hlp-verify"];
    s = app.add_subcommand("hlp-verify", "Hardy-Littlewood-Paley inequality");
    add_common(s, o);
    add_family(s, o);
    s->add_option("--p", o.p, "exponent, 1 < p <= 2");
  }
  {
    Opts& o = opts["besov-verify"];
    o.alpha = -0.5;
    o.beta = 0.5;
    s = app.add_subcommand("besov-verify", "Besov seminorm, L^1 norm of the transform and annulus bound");
    add_common(s, o);
    add_family(s, o);
    add_pq(s, o);
    s->add_option("--alpha", o.alpha, "transform-side exponent");
    s->add_option("--beta", o.beta, "function-side exponent");
  }
  {
    Opts& o = opts["necessity-probe"];
    s = app.add_subcommand("necessity-probe", "chain of estimates for an indicator test function");
    add_common(s, o);
    add_pq(s, o);
    add_uv(s, o);
    s->add_option("--r", o.r, "probe scale");
    s->add_option("--samples", o.samples, "sample points per link");
  }
  {
    Opts& o = opts["sweep"];
    s = app.add_subcommand("sweep", "parameter sweep to CSV");
    add_common(s, o);
    add_family(s, o);
    s->remove_option(s->get_option("--a"));
    s->add_option("--target", o.target, "pitt, thm1 or bp");
    s->add_option("--solve", o.solve, "alpha or beta, filled in from the index constraint");
    s->add_option("--p", o.p_range, "value, list or lo:hi:n");
    s->add_option("--q", o.q_range, "value, list or lo:hi:n");
    s->add_option("--alpha", o.alpha_range, "value, list or lo:hi:n");
    s->add_option("--beta", o.beta_range, "value, list or lo:hi:n");
    s->add_option("--a", o.a_range, "weight exponent for the bp target");
  }
}

Json resolved_config(const CLI::App* sub) {
  Json c = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string& name = opt->get_single_name();
    if (name == "help" || name == "out" || name == "csv" || name == "config") continue;
    c[name] = opt->count() > 0 ? opt->results().back() : opt->get_default_str();
  }
  return c;
}

void write_csv(const std::string& path, const Csv& csv) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::invalid_input, "cannot write " + path);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) f << (i ? "," : "") << cells[i];
    f << '\n';
  };
  line(csv.header);
  for (const auto& r : csv.rows) line(r);
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) fail(ErrorKind::invalid_input, "empty parameter value");
  const auto parts = split(t, ':');
  if (parts.size() == 3) {
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    const double nd = to_double(parts[2]);
    if (nd < 0.0 || nd != std::floor(nd)) fail(ErrorKind::invalid_input, "range count must be a whole number");
    const int n = static_cast<int>(nd);
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return v;
  }
  if (parts.size() != 1) fail(ErrorKind::invalid_input, "range is lo:hi:n, not " + text);
  std::vector<double> v;
  for (const auto& s : split(t, ',')) v.push_back(to_double(s));
  return v;
}

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_config(args_in);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Radial Dunkl analysis experiments", "dunkl_cli"};
  app.set_version_flag("--version", kVersion);
  app.option_defaults()->always_capture_default()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::map<std::string, Opts> opts;
  register_commands(app, opts);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  const Opts& o = opts[cmd];
  Json report;
  Csv csv;
  try {
    const DunklIndex idx = DunklIndex::make(o.d, o.gamma);
    report = dispatch(cmd, o, idx, csv);
  } catch (const Error& e) {
    const ErrorKind k = e.kind();
    if (k != ErrorKind::divergence && k != ErrorKind::divergent_tail && k != ErrorKind::degenerate) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    report = {{"verdict", "divergent"}, {"status", to_string(k)}, {"message", e.what()}};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  report["command"] = cmd;
  report["version"] = kVersion;
  report["config"] = resolved_config(sub);

  try {
    if (o.out.empty()) {
      io::write_json(out, report);
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) fail(ErrorKind::invalid_input, "cannot write " + o.out);
      io::write_json(f, report);
    }
    if (!o.csv.empty()) write_csv(o.csv, csv);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string verdict = report["verdict"].get<std::string>();
  if (!o.expect.empty() && verdict != o.expect) {
    err << "verdict " << verdict << " differs from expected " << o.expect << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace dunkl::cli
