#include "qcplane/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "qcplane/bott.hpp"
#include "qcplane/represent.hpp"

namespace qcplane::cli {

using nlohmann::json;

namespace {

constexpr const char* kNormAssumption =
    "estimate from one truncated regular representation of full support; equality with the universal norm "
    "assumes amenability of Z (external, not checked)";

TruncationWindow window_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ConfigurationError("window must be [n_min, n_max] with integers");
  }
  TruncationWindow w{j[0].get<long>(), j[1].get<long>()};
  if (w.n_max < w.n_min) throw ConfigurationError("window has n_min > n_max");
  return w;
}

std::vector<std::string> element_terms(const json& j) {
  std::vector<std::string> terms;
  auto split = [&terms](const std::string& s) {
    std::stringstream in(s);
    std::string piece;
    while (std::getline(in, piece, ';')) {
      if (piece.find_first_not_of(" \t") != std::string::npos) terms.push_back(piece);
    }
  };
  if (j.is_string()) {
    split(j.get<std::string>());
  } else if (j.is_array()) {
    for (const auto& t : j) {
      if (!t.is_string()) throw ConfigurationError("element terms must be strings");
      split(t.get<std::string>());
    }
  } else {
    throw ConfigurationError("element must be a string or an array of strings");
  }
  return terms;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigurationError(std::string("config field '") + key + "' has the wrong type");
  }
}

json window_json(const TruncationWindow& w) { return json::array({w.n_min, w.n_max}); }

json provenance(const std::string& identity, bool exact, const TruncationWindow& w, long margin) {
  return {{"identity_checked", identity},
          {"mode", exact ? "exact" : "numeric"},
          {"window", window_json(w)},
          {"interior_margin", margin}};
}

DeformationParameter deformed_q(const RunConfig& c) {
  DeformationParameter q(parse_rational(c.q));
  if (q.classical()) throw ConfigurationError("q = 1 is only accepted by the limit command");
  return q;
}

QInvariantMeasure config_measure(const DeformationParameter& q, const RunConfig& c) {
  std::vector<Atom> atoms;
  for (const auto& g : c.generators) atoms.push_back({parse_rational(g), Rational(1)});
  Rational zero = parse_rational(c.zero_mass);
  if (atoms.empty()) return QInvariantMeasure::point_at_zero(q);
  return {q, std::move(atoms), zero};
}

std::vector<TruncationWindow> sweep(const RunConfig& c) {
  return c.windows_sweep.empty() ? std::vector<TruncationWindow>{c.window} : c.windows_sweep;
}

bool wants(const RunConfig& c, const std::string& name) {
  return c.commands.empty() || std::find(c.commands.begin(), c.commands.end(), name) != c.commands.end();
}

std::vector<AlgebraElement> config_elements(const DeformationParameter& q, const RunConfig& c) {
  std::vector<AlgebraElement> out;
  for (const auto& terms : c.elements) out.push_back(parse_element(q, terms));
  return out;
}

void record(CommandResult& r, bool ok, const std::string& check) {
  if (!ok) {
    r.failed_checks.push_back(check);
    r.exit_code = kVerificationFailure;
  }
}

void finish(CommandResult& r) { r.report["failed_checks"] = r.failed_checks; }

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigurationError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigurationError("config must be a JSON object");
  RunConfig c;
  c.q = get_or<std::string>(j, "q", c.q);
  c.generators = get_or<std::vector<std::string>>(j, "generators", c.generators);
  c.zero_mass = get_or<std::string>(j, "zero_mass", c.zero_mass);
  if (j.contains("window")) c.window = window_from_json(j["window"]);
  if (j.contains("windows_sweep")) {
    if (!j["windows_sweep"].is_array()) throw ConfigurationError("windows_sweep must be a list of windows");
    for (const auto& w : j["windows_sweep"]) c.windows_sweep.push_back(window_from_json(w));
  }
  c.tolerance = get_or<double>(j, "tolerance", c.tolerance);
  if (!(c.tolerance >= 0.0)) throw ConfigurationError("tolerance must be nonnegative");
  c.exact_mode = get_or<bool>(j, "exact_mode", c.exact_mode);
  if (j.contains("elements")) {
    if (!j["elements"].is_array()) throw ConfigurationError("elements must be a list");
    for (const auto& e : j["elements"]) c.elements.push_back(element_terms(e));
  }
  c.commands = get_or<std::vector<std::string>>(j, "commands", c.commands);
  c.bott_orders = get_or<std::vector<long>>(j, "bott_orders", c.bott_orders);
  c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
  c.random_pairs = get_or<int>(j, "random_pairs", c.random_pairs);
  // Validate the scalar grammar early so that errors surface as exit 2.
  (void)parse_rational(c.q);
  (void)parse_rational(c.zero_mass);
  for (const auto& g : c.generators) (void)parse_rational(g);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot read config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

CommandResult cmd_simulate(const RunConfig& c) {
  const DeformationParameter q = deformed_q(c);
  const QInvariantMeasure mu = config_measure(q, c);
  const SpectralSet x = mu.support();
  const std::vector<std::pair<std::string, CoefficientFunction>> functions{
      {"t", CoefficientFunction::identity()},
      {"t^2", CoefficientFunction::rational(RationalFunction(Polynomial::monomial(GaussRational(1), 2)))},
      {"chi(q,1]", level_indicator(q, 0)},
      {"1/(1+t^2)", CoefficientFunction::rational(parse_expression("1/(1+t^2)"))},
  };
  CommandResult r;
  json windows = json::array();
  const std::vector<TruncationWindow> ws = sweep(c);
  for (const auto& w : ws) {
    const TruncatedQNormal t = build(mu, x, w);
    const std::string tag = "[" + std::to_string(w.n_min) + "," + std::to_string(w.n_max) + "]";
    json entry{{"window", window_json(w)}, {"dimension", t.dimension()}, {"kernel_dim", t.kernel_dim()}};
    if (wants(c, "relation")) {
      RelationDefect d = verify_relation(t);
      json rel{{"interior", d.interior}, {"boundary", d.boundary}};
      record(r, d.interior <= c.tolerance, "relation" + tag);
      if (c.exact_mode && t.has_exact()) {
        Rational e = verify_relation_exact(t);
        rel["interior_exact"] = to_string(e);
        record(r, sgn(e) == 0, "relation_exact" + tag);
      }
      entry["relation"] = rel;
    }
    if (wants(c, "covariance")) {
      json cov = json::object();
      for (const auto& [name, f] : functions) {
        json item{{"interior", verify_covariance(t, f)}};
        record(r, item["interior"].get<double>() <= c.tolerance, "covariance " + name + tag);
        if (c.exact_mode) {
          Rational e = verify_covariance_exact(t, f);
          item["interior_exact"] = to_string(e);
          record(r, sgn(e) == 0, "covariance_exact " + name + tag);
        }
        cov[name] = item;
      }
      entry["covariance"] = cov;
    }
    if (wants(c, "polar")) {
      PolarReport p = polar_check(t);
      entry["polar"] = {{"polar_defect", p.polar_defect}, {"kernel_leak", p.kernel_leak}};
      record(r, p.polar_defect <= c.tolerance && p.kernel_leak <= c.tolerance, "polar" + tag);
    }
    windows.push_back(entry);
    if (c.spectrum_csv && &w == &ws.back()) {
      auto out = open_output(*c.spectrum_csv);
      write_spectrum_csv(out, t);
    }
  }
  r.report = {{"command", "simulate"},
              {"q", to_string(q.value())},
              {"windows", windows},
              {"tolerance", c.tolerance},
              {"provenance", provenance("zeta zeta* = q^2 zeta* zeta; u f(|zeta|) u* = f(q|zeta|); zeta = u|zeta|",
                                        c.exact_mode, c.window, 1)}};
  finish(r);
  return r;
}

CommandResult cmd_norm(const RunConfig& c) {
  const DeformationParameter q = deformed_q(c);
  const QInvariantMeasure mu = config_measure(q, c);
  const SpectralSet x = mu.support();
  const std::vector<TruncationWindow> windows = sweep(c);
  CommandResult r;
  json reports = json::array();
  const std::vector<AlgebraElement> elements = config_elements(q, c);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const AlgebraElement& a = elements[i];
    NormReport n = norm_estimate(a, mu, x, windows);
    json ws = json::array();
    for (const auto& w : n.windows) ws.push_back(window_json(w));
    bool monotone = true;
    for (std::size_t k = 1; k < n.estimates.size(); ++k) monotone = monotone && n.estimates[k] >= n.estimates[k - 1] - 1e-12;
    record(r, monotone, "norm monotonicity element " + std::to_string(i));
    reports.push_back({{"element", serialize_element(a)},
                       {"windows", ws},
                       {"window_sizes", n.window_sizes},
                       {"estimates", n.estimates},
                       {"converged", n.converged},
                       {"final", n.final_estimate}});
    if (c.matrix_csv && i == 0) {
      auto out = open_output(*c.matrix_csv);
      write_matrix_csv(out, represent(a, build(mu, x, windows.back())));
    }
  }
  r.report = {{"command", "norm"},
              {"q", to_string(q.value())},
              {"norms", reports},
              {"assumption", kNormAssumption},
              {"provenance", provenance("norm estimate over nested windows", false, windows.back(), 0)}};
  finish(r);
  return r;
}

CommandResult cmd_bott(const RunConfig& c) {
  const DeformationParameter q = deformed_q(c);
  const QInvariantMeasure mu = config_measure(q, c);
  const SpectralSet x = mu.support();
  CommandResult r;
  json reports = json::array();
  long widest = 0;
  for (long n : c.bott_orders) {
    if (n < 1) throw ConfigurationError("bott orders must be positive");
    widest = std::max(widest, n);
    for (BottSign sign : {BottSign::Plus, BottSign::Minus}) {
      ProjectionCandidate p = bott_projection(n, sign, q);
      if (c.perturb) p = scaled(p, GaussRational(2));
      const std::string tag = " n=" + std::to_string(n) + " sign=" + (sign == BottSign::Plus ? "+" : "-");
      const TruncatedQNormal t = build(mu, x, c.window);
      json item{{"n", n}, {"sign", sign == BottSign::Plus ? "+" : "-"}, {"q", to_string(q.value())}};
      if (c.exact_mode) {
        ExactProjectionReport e = verify_projection_exact(p, sample_points(x, c.window));
        item["mode"] = "exact";
        item["max_residue"] = to_string(e.max_residue);
        item["idempotent_residue"] = to_string(e.idempotent_residue);
        item["selfadjoint_residue"] = to_string(e.selfadjoint_residue);
        item["points_checked"] = e.points_checked;
        record(r, sgn(e.max_residue) == 0, "bott_exact" + tag);
      } else {
        NumericProjectionReport d = verify_projection_numeric(p, t);
        item["mode"] = "numeric";
        item["max_residue"] = std::max(d.idempotent_defect, d.selfadjoint_defect);
        item["idempotent_residue"] = d.idempotent_defect;
        item["selfadjoint_residue"] = d.selfadjoint_defect;
        item["points_checked"] = t.interior_indices(d.interior_margin).size();
        record(r, item["max_residue"].get<double>() <= c.tolerance, "bott_numeric" + tag);
      }
      item["structure_ok"] = entry_structure_ok(p);
      item["winding_diagnostic"] = {{"value", winding_diagnostic(p, t)}, {"unverified", true}};
      reports.push_back(item);
    }
  }
  r.report = {{"command", "bott"},
              {"perturbed", c.perturb},
              {"projections", reports},
              {"provenance", provenance("P = P* = P^2", c.exact_mode, c.window, 2 * widest)}};
  finish(r);
  return r;
}

AlgebraElement random_element(const DeformationParameter& q, std::mt19937_64& rng, int max_modes, bool vanishing) {
  std::uniform_int_distribution<int> mode_count(1, std::max(1, max_modes));
  std::uniform_int_distribution<long> mode(-3, 3);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<long> damp(1, 3);
  AlgebraElement a(q);
  const int count = mode_count(rng);
  for (int i = 0; i < count; ++i) {
    const long k = mode(rng);
    Polynomial num(GaussRational(vanishing && k != 0 ? 0 : coeff(rng)));
    num = num + Polynomial::monomial(GaussRational(coeff(rng)), 1) + Polynomial::monomial(GaussRational(coeff(rng)), 2);
    Polynomial den = Polynomial(GaussRational(1)) + Polynomial::monomial(GaussRational(damp(rng)), 2);
    a.set(k, a.coefficient(k) + CoefficientFunction::rational(RationalFunction(num, den)));
  }
  return a;
}

CommandResult cmd_limit(const RunConfig& c) {
  DeformationParameter q(parse_rational(c.q));
  if (!q.classical()) throw ConfigurationError("the limit command requires q = 1");
  std::mt19937_64 rng(c.seed);
  std::vector<AlgebraElement> elements = config_elements(q, c);
  std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
  for (std::size_t i = 0; i + 1 < elements.size(); i += 2) pairs.emplace_back(elements[i], elements[i + 1]);
  for (int i = 0; i < c.random_pairs; ++i) {
    AlgebraElement a = random_element(q, rng, 5, false);
    AlgebraElement b = random_element(q, rng, 5, false);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::vector<Rational> samples{Rational(0)};
  for (int i = 1; i <= 20; ++i) samples.emplace_back(i, 10);

  CommandResult r;
  Rational commutator(0);
  double multiplicative = 0.0;
  for (const auto& [a, b] : pairs) {
    Rational m = max_exact_residue(subtract(multiply(a, b), multiply(b, a)), samples);
    if (m > commutator) commutator = m;
    const AlgebraElement ab = multiply(a, b);
    for (int i = 0; i < 10; ++i) {
      const double rad = 0.2 * i;
      for (int j = 0; j < 10; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / 10.0;
        Complex lhs = classical_eval(ab, rad, theta);
        Complex rhs = classical_eval(a, rad, theta) * classical_eval(b, rad, theta);
        multiplicative = std::max(multiplicative, std::abs(lhs - rhs));
      }
    }
  }
  // Elements without nonzero modes at the origin are theta-independent at r = 0.
  bool origin_ok = true;
  for (const auto& [a, b] : pairs) {
    for (const AlgebraElement* e : {&a, &b}) {
      AlgebraElement f0 = AlgebraElement::monomial(q, 0, e->coefficient(0));
      const Complex ref = classical_eval(f0, 0.0, 0.0);
      for (int j = 1; j < 10; ++j) origin_ok = origin_ok && classical_eval(f0, 0.0, 2.0 * std::numbers::pi * j / 10.0) == ref;
    }
  }
  record(r, sgn(commutator) == 0, "commutator_exact");
  record(r, multiplicative <= c.tolerance, "classical_multiplicativity");
  record(r, origin_ok, "origin_theta_independence");
  r.report = {{"command", "limit"},
              {"pairs", pairs.size()},
              {"commutator_max_residue", to_string(commutator)},
              {"multiplicativity_residue", multiplicative},
              {"origin_theta_independent", origin_ok},
              {"provenance", provenance("C0*(Z, Z*) = C0(C) at q = 1", true, c.window, 0)}};
  finish(r);
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator-algebra checks for the quantum complex plane"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<std::string> q_override;
  std::optional<std::string> window_override;
  std::optional<double> tol_override;
  bool exact = false;
  bool perturb = false;
  std::string out_path;
  std::optional<std::string> spectrum_csv;
  std::optional<std::string> matrix_csv;
  for (const char* name : {"simulate", "norm", "bott", "limit"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--q", q_override, "deformation parameter p/r");
    sub->add_option("--window", window_override, "truncation window n_min,n_max");
    sub->add_option("--tol", tol_override, "numeric tolerance");
    sub->add_flag("--exact", exact, "exact rational verification");
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    sub->add_option("--spectrum-csv", spectrum_csv, "write the grid spectrum (simulate)");
    sub->add_option("--matrix-csv", matrix_csv, "write the first represented element (norm)");
    sub->add_flag("--perturb", perturb, "negative control: verify 2P instead of P (bott)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigurationError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  CommandResult result;
  try {
    RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (q_override) c.q = *q_override;
    if (window_override) {
      long lo = 0;
      long hi = 0;
      char comma = 0;
      std::istringstream in(*window_override);
      if (!(in >> lo >> comma >> hi) || comma != ',' || !in.eof() || hi < lo) {
        throw ConfigurationError("--window expects n_min,n_max");
      }
      c.window = {lo, hi};
      c.windows_sweep.clear();
    }
    if (tol_override) c.tolerance = *tol_override;
    if (exact) c.exact_mode = true;
    if (perturb) c.perturb = true;
    c.spectrum_csv = spectrum_csv;
    c.matrix_csv = matrix_csv;
    (void)parse_rational(c.q);
    if (command == "simulate") result = cmd_simulate(c);
    if (command == "norm") result = cmd_norm(c);
    if (command == "bott") result = cmd_bott(c);
    if (command == "limit") result = cmd_limit(c);
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigurationError;
  } catch (const std::domain_error& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigurationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const std::string text = result.report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "configuration error: cannot open '" << out_path << "'\n";
      return kConfigurationError;
    }
    file << text;
  }
  for (const auto& f : result.failed_checks) err << "verification failed: " << f << '\n';
  return result.exit_code;
}

}  // namespace qcplane::cli
