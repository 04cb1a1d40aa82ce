#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "equiform/analysis.hpp"
#include "equiform/crosscheck.hpp"
#include "equiform/errors.hpp"
#include "equiform/fd_oracle.hpp"
#include "equiform/geometry.hpp"
#include "equiform/sampling.hpp"
#include "params_io.hpp"

namespace equiform::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct RunConfig {
  std::string input;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  double tolerance = 1e-9;
  ScalarMode mode = ScalarMode::automatic;
  Format format = Format::text;
  std::string output;

  std::string theorem;
  std::string family = "General34";
  double theta = 0.7;
  double phi = 0.3;
  double h = 1e-4;
  std::size_t points = 20;
  std::string k_value;
  bool compare = false;

  Tolerance tol() const { return Tolerance{tolerance}; }
};

template <class S>
std::string show(const S& x) {
  if constexpr (is_exact_v<S>)
    return x.get_str() + " (" + format_double(x.get_d()) + ")";
  else
    return format_double(x);
}

template <class S>
json scalar_json(const S& x) {
  if constexpr (is_exact_v<S>)
    return x.get_str();
  else
    return x;
}

// Output sink: the --output file when given, otherwise the command stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputError("cannot write " + path);
      out_ = file_.get();
    }
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

AnyParams load(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InputError("a parameter file is required");
  return load_params(cfg.input, cfg.mode);
}

// ---------------------------------------------------------------- check

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  return std::visit(
      [&](const auto& p) {
        const auto r = sphere_condition_residuals(p);
        const bool sphere = satisfies_sphere_conditions(p, cfg.tol());
        const bool assumption = check_assumption(p, cfg.tol());
        if (cfg.format == Format::json) {
          json j;
          j["residuals"] = json::array();
          for (const auto& x : r) j["residuals"].push_back(scalar_json(x));
          j["sphere_conditions"] = sphere;
          j["assumption"] = assumption;
          j["inert_entries"] = p.has_inert_entries();
          out << j.dump(2) << "\n";
        } else {
          out << "sphere-condition residuals:\n";
          for (std::size_t k = 0; k < r.size(); ++k) out << "  r" << k + 1 << " = " << show(r[k]) << "\n";
          out << "sphere conditions: " << (sphere ? "hold" : "violated") << "\n";
          out << "assumption b'1 = b'2 = b'3 = 0: " << (assumption ? "holds" : "violated") << "\n";
          if (p.has_inert_entries()) out << "note: w16..w21 are nonzero but never reach the metric\n";
        }
        return sphere && assumption ? kPass : kFail;
      },
      load(cfg));
}

// ----------------------------------------------------------- quantities

int cmd_quantities(const RunConfig& cfg, std::ostream& out) {
  return std::visit(
      [&](const auto& p) {
        const auto q = derived_quantities(p);
        if (cfg.format == Format::json) {
          json j;
          for (int k = 1; k <= 8; ++k) j["alpha" + std::to_string(k)] = scalar_json(q.a(k));
          j["beta"] = scalar_json(q.beta);
          j["gamma"] = scalar_json(q.gamma);
          j["delta"] = scalar_json(q.delta);
          out << j.dump(2) << "\n";
        } else {
          for (int k = 1; k <= 8; ++k) out << "alpha" << k << " = " << show(q.a(k)) << "\n";
          out << "beta   = " << show(q.beta) << "\n";
          out << "gamma  = " << show(q.gamma) << "\n";
          out << "delta  = " << show(q.delta) << "\n";
        }
        return kPass;
      },
      load(cfg));
}

// --------------------------------------------------------------- metric

int cmd_metric(const RunConfig& cfg, std::ostream& out) {
  static constexpr const char* kNames[6] = {"g11", "g12", "g13", "g22", "g23", "g33"};
  return std::visit(
      [&](const auto& p) {
        const auto g = metric(p);
        for (int k = 0; k < 6; ++k) out << kNames[k] << ":\n" << format_trig(g.entries()[k]);
        if (!cfg.compare) return kPass;
        const auto c = metric_closed_form(p, cfg.tol());
        bool same = true;
        for (int k = 0; k < 6; ++k) {
          const auto diff = g.entries()[k] - c.entries()[k];
          const double scale = std::max({1.0, g.entries()[k].max_abs_coefficient(),
                                         c.entries()[k].max_abs_coefficient()});
          if (!is_zero(diff, scale, cfg.tol())) {
            same = false;
            out << kNames[k] << " differs from the closed form by\n" << format_trig(diff);
          }
        }
        out << "closed form: " << (same ? "agrees" : "disagrees") << "\n";
        return same ? kPass : kFail;
      },
      load(cfg));
}

// ------------------------------------------------------------ curvature

template <class S>
void print_verdict(const ConstancyVerdict<S>& v, std::ostream& out) {
  if (v.constant) {
    out << "constant K = " << (is_exact_v<S> ? to_string(v.K) : format_double(v.k_value()));
    if constexpr (is_exact_v<S>) out << " (" << format_double(v.k_value()) << ")";
    out << "\n";
    return;
  }
  out << "non-constant; largest residual harmonics of P - K Q at K = " << format_double(v.k_value())
      << ":\n";
  for (std::size_t k = 0; k < std::min<std::size_t>(v.residual_spectrum.size(), 5); ++k) {
    const auto& h = v.residual_spectrum[k];
    out << "  (" << h.key.i << ", " << h.key.j << ")  cos " << format_double(h.cos_mag) << "  sin "
        << format_double(h.sin_mag) << "\n";
  }
}

int cmd_curvature(const RunConfig& cfg, std::ostream& out) {
  return std::visit(
      [&](const auto& p) {
        const auto cq = scalar_curvature(p);
        const auto v = constancy(cq, ProbePoint{cfg.theta, cfg.phi}, cfg.tol());
        if (cfg.format == Format::json) {
          json j;
          j["P_terms"] = cq.P.size();
          j["Q_terms"] = cq.Q.size();
          j["P_spectrum"] = {cq.P.max_i(), cq.P.max_abs_j()};
          j["Q_spectrum"] = {cq.Q.max_i(), cq.Q.max_abs_j()};
          j["constant"] = v.constant;
          j["K"] = scalar_json(v.K);
          j["K_decimal"] = v.k_value();
          out << j.dump(2) << "\n";
        } else {
          out << "P: " << cq.P.size() << " harmonics, max i " << cq.P.max_i() << ", max |j| "
              << cq.P.max_abs_j() << "\n";
          out << "Q: " << cq.Q.size() << " harmonics, max i " << cq.Q.max_i() << ", max |j| "
              << cq.Q.max_abs_j() << "\n";
          print_verdict(v, out);
        }
        return kPass;
      },
      load(cfg));
}

// --------------------------------------------------------------- verify

template <class S>
json report_json(const TheoremReport<S>& r) {
  json j;
  j["family"] = std::string(family_name(r.family));
  j["instance"] = to_json(r.instance);
  j["constraints_hold"] = r.constraints_hold;
  j["residuals"] = json::object();
  for (std::size_t k = 0; k < r.constraints.values.size(); ++k)
    j["residuals"][r.constraints.labels[k]] = scalar_json(r.constraints.values[k]);
  if (r.verdict) {
    j["constant"] = r.verdict->constant;
    j["K"] = scalar_json(r.verdict->K);
  }
  if (r.predicted) j["predicted_K"] = scalar_json(*r.predicted);
  j["pass"] = r.pass;
  j["diagnostics"] = r.diagnostics;
  return j;
}

template <class S>
void print_report(const TheoremReport<S>& r, std::ostream& out) {
  out << family_name(r.family) << ": " << (r.pass ? "PASS" : "FAIL") << "  [" << describe(r.instance)
      << "]\n";
  if (r.verdict) {
    out << "  pipeline: ";
    print_verdict(*r.verdict, out);
  }
  if (r.predicted) out << "  predicted K = " << show(*r.predicted) << "\n";
  for (const auto& d : r.diagnostics) out << "  " << d << "\n";
}

template <class S>
int verify_sampled(FamilyKind f, const RunConfig& cfg, std::ostream& out) {
  const int count = static_cast<int>(cfg.count ? cfg.count : 25);
  const auto outcome = sample_family<S>(f, cfg.seed, count);
  if (outcome.exhausted) {
    out << family_name(f) << ": " << outcome.note << "\n";
    return kPass;
  }
  std::vector<TheoremReport<S>> reports(outcome.instances.size());
  parallel_for(reports.size(),
               [&](std::size_t k) { reports[k] = verify_theorem(outcome.instances[k], f, cfg.tol()); });
  std::size_t passed = 0;
  json all = json::array();
  for (const auto& r : reports) {
    passed += r.pass ? 1 : 0;
    if (cfg.format == Format::json)
      all.push_back(report_json(r));
    else if (!r.pass)
      print_report(r, out);
  }
  if (cfg.format == Format::json)
    out << all.dump(2) << "\n";
  else
    out << family_name(f) << ": " << passed << "/" << reports.size() << " sampled instances pass ("
        << ScalarTraits<S>::name << " mode, seed " << cfg.seed << ")\n";
  return passed == reports.size() ? kPass : kFail;
}

void print_histogram(const ScanStats& s, std::ostream& out) {
  if (s.bin_counts.empty()) return;
  out << "histogram:\n";
  for (std::size_t b = 0; b < s.bin_counts.size(); ++b) {
    const std::string lo = b == 0 ? "-inf" : format_double(s.bin_edges[b - 1]);
    const std::string hi = b == s.bin_edges.size() ? "inf" : format_double(s.bin_edges[b]);
    out << "  [" << lo << ", " << hi << "): " << s.bin_counts[b] << "\n";
  }
}

int verify_scan(const std::string& which, const RunConfig& cfg, std::ostream& out) {
  if (which == "necessity") {
    const std::size_t n = cfg.count ? cfg.count : 100;
    const auto s = necessity_probe(cfg.seed, n);
    const bool ok = s.detected * 100 >= 95 * s.trials && s.base_failures == 0;
    out << "necessity probe: " << s.detected << "/" << s.trials
        << " perturbed instances detected (w1 <- 1); base failures " << s.base_failures << "\n";
    for (const auto& u : s.undetected) out << "  undetected: " << u << "\n";
    return ok ? kPass : kFail;
  }
  const bool k6 = which == "cor-k6";
  const std::size_t n = cfg.count ? cfg.count : (k6 ? 1000 : 10000);
  const ScanStats s = k6 ? verify_k6_infeasibility(cfg.seed, n) : bound_scan(cfg.seed, n);
  if (cfg.format == Format::json) {
    json j;
    j["requested"] = s.requested;
    j["count"] = s.count;
    j["rejected"] = s.rejected;
    j["failures"] = s.failures;
    j["min_K"] = s.min_k;
    j["max_K"] = s.max_k;
    j["argmin"] = s.argmin;
    j["argmax"] = s.argmax;
    j["bin_edges"] = s.bin_edges;
    j["bin_counts"] = s.bin_counts;
    j["notes"] = s.notes;
    j["boundary"] = json::array();
    for (const auto& [label, k] : s.boundary) j["boundary"].push_back({{"case", label}, {"K", k}});
    j["pass"] = s.pass();
    out << j.dump(2) << "\n";
    return s.pass() ? kPass : kFail;
  }
  out << (k6 ? "K = -6 scan" : "|K| < 2 scan") << ": " << s.count << " instances, " << s.rejected
      << " rejected, " << s.failures << " failures\n";
  out << "min K = " << format_double(s.min_k) << " (draw " << s.argmin << ")\n";
  out << "max K = " << format_double(s.max_k) << " (draw " << s.argmax << ")\n";
  if (!s.argmin_params.empty()) out << "  argmin: " << s.argmin_params << "\n";
  if (!s.argmax_params.empty()) out << "  argmax: " << s.argmax_params << "\n";
  if (k6) out << "positivity identity checked exactly on " << s.identity_checks << " draws\n";
  print_histogram(s, out);
  for (const auto& [label, k] : s.boundary)
    out << "boundary (informational): " << label << "\n";
  for (const auto& note : s.notes) out << "note: " << note << "\n";
  out << (s.pass() ? "PASS" : "FAIL") << "\n";
  return s.pass() ? kPass : kFail;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::string& t = cfg.theorem;
  if (t == "cor-k6" || t == "cor-bound" || t == "necessity") return verify_scan(t, cfg, out);
  const auto family = parse_family(t);
  if (!family || *family == FamilyKind::Unconstrained)
    throw InputError("unknown theorem \"" + t + "\"");
  if (cfg.input.empty()) {
    if (cfg.mode == ScalarMode::floating) return verify_sampled<double>(*family, cfg, out);
    return verify_sampled<Rational>(*family, cfg, out);
  }
  return std::visit(
      [&](const auto& p) {
        const auto r = verify_theorem(p, *family, cfg.tol());
        if (cfg.format == Format::json)
          out << report_json(r).dump(2) << "\n";
        else
          print_report(r, out);
        return r.pass ? kPass : kFail;
      },
      load(cfg));
}

// --------------------------------------------------------------- sample

template <class S>
int sample_as(FamilyKind f, const RunConfig& cfg, std::ostream& out) {
  const auto outcome = sample_family<S>(f, cfg.seed, static_cast<int>(cfg.count ? cfg.count : 1));
  json j;
  j["family"] = std::string(family_name(f));
  j["mode"] = ScalarTraits<S>::name;
  j["seed"] = cfg.seed;
  j["exhausted"] = outcome.exhausted;
  if (!outcome.note.empty()) j["note"] = outcome.note;
  j["instances"] = json::array();
  for (const auto& p : outcome.instances) j["instances"].push_back(to_json(p));
  Sink sink(cfg.output, out);
  *sink << j.dump(2) << "\n";
  return kPass;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const auto family = parse_family(cfg.family);
  if (!family) throw InputError("unknown family \"" + cfg.family + "\"");
  if (cfg.mode == ScalarMode::floating) return sample_as<double>(*family, cfg, out);
  return sample_as<Rational>(*family, cfg, out);
}

// ----------------------------------------------------------------- scan

constexpr int kCsvOmegas[] = {3, 9, 15, 1, 2, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14};

template <class S>
int scan_as(FamilyKind f, const RunConfig& cfg, std::ostream& out) {
  const std::size_t n = cfg.count ? cfg.count : 100;
  struct Row {
    std::string line;
    bool ok = true;
  };
  std::vector<Row> rows(n);
  parallel_for(n, [&](std::size_t k) {
    const auto p = sample_instance<S>(f, cfg.seed, k);
    const auto q = derived_quantities(p);
    std::string line = std::to_string(k) + "," + format_double(to_double(p.s_prime));
    for (int i : kCsvOmegas) line += "," + format_double(to_double(p.w(i)));
    for (int i = 4; i <= 7; ++i) line += "," + format_double(to_double(p.b(i)));
    line += "," + format_double(to_double(q.beta)) + "," + format_double(to_double(q.delta));
    try {
      const auto v = constancy(scalar_curvature(p), ProbePoint{}, cfg.tol());
      line += "," + format_double(v.k_value()) + "," + (v.constant ? "1" : "0");
    } catch (const std::exception&) {
      line += ",nan,0";
      rows[k].ok = false;
    }
    rows[k].line = std::move(line);
  });
  Sink sink(cfg.output, out);
  *sink << "seed_index,s_prime";
  for (int i : kCsvOmegas) *sink << ",omega_" << i;
  *sink << ",d_prime_4,d_prime_5,d_prime_6,d_prime_7,beta,delta,K,constant\n";
  bool ok = true;
  for (const auto& r : rows) {
    *sink << r.line << "\n";
    ok = ok && r.ok;
  }
  return ok ? kPass : kFail;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const auto family = parse_family(cfg.family);
  if (!family || *family == FamilyKind::KNeg32A)
    throw InputError("scan needs a family with a closed-form sampler");
  if (cfg.mode == ScalarMode::floating) return scan_as<double>(*family, cfg, out);
  return scan_as<Rational>(*family, cfg, out);
}

// ------------------------------------------------------------- fd-check

int cmd_fd_check(const RunConfig& cfg, std::ostream& out) {
  return std::visit(
      [&](const auto& p) {
        using S = std::decay_t<decltype(p)>;
        MotionParams<double> pf;
        if constexpr (std::is_same_v<S, MotionParams<Rational>>)
          pf = to_float(p);
        else
          pf = p;
        const auto cq = scalar_curvature(p);
        SampleRng rng(cfg.seed, 0);
        std::uniform_real_distribution<double> th(-std::numbers::pi, std::numbers::pi);
        std::uniform_real_distribution<double> ph(-1.4, 1.4);
        const std::size_t n = cfg.points ? cfg.points : 20;
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double theta = th(rng.engine());
          const double phi = ph(rng.engine());
          const double sym = curvature_at(cq, theta, phi, cfg.tol());
          const double fd = fd_curvature(pf, theta, phi, cfg.h);
          const double rel = std::abs(fd - sym) / std::max(1.0, std::abs(sym));
          worst = std::max(worst, rel);
          out << "theta " << std::setw(10) << format_double(theta) << "  phi " << std::setw(10)
              << format_double(phi) << "  symbolic " << format_double(sym) << "  fd "
              << format_double(fd) << "  rel " << format_double(rel) << "\n";
        }
        const bool ok = worst <= 1e-6;
        out << "max relative deviation " << format_double(worst) << " (" << (ok ? "PASS" : "FAIL")
            << ", bound 1e-6)\n";
        return ok ? kPass : kFail;
      },
      load(cfg));
}

// ----------------------------------------------------------- crosscheck

void print_crosscheck(const CrosscheckReport& r, std::ostream& out) {
  out << "mode " << (r.mode == CrosscheckMode::K0 ? "K0 (P)" : "general (P - K Q), K = " + r.K.get_str())
      << "\n";
  for (const auto& c : r.rows) {
    out << "  " << std::left << std::setw(7) << c.name << std::right;
    if (!c.applicable) {
      out << " not applicable (needs " << c.hypothesis << ")\n";
      continue;
    }
    out << " extracted " << c.extracted.get_str() << ", closed form x " << c.normalization.get_str()
        << " = " << Rational(c.normalization * c.reference).get_str() << "  "
        << (c.value_match ? "match" : (c.classification_match ? "same vanishing, values differ" : "MISMATCH"))
        << "\n";
  }
  out << "typo adjudications:\n";
  for (const auto& a : r.adjudications)
    out << "  " << a.coefficient << ": printed " << a.printed << "; adopted " << a.adopted << "; "
        << a.evidence << "\n";
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  Rational k(0);
  CrosscheckMode mode = CrosscheckMode::K0;
  if (!cfg.k_value.empty()) {
    const auto parsed = parse_rational(cfg.k_value);
    if (!parsed) throw InputError("--K expects a rational p/q");
    k = *parsed;
    mode = CrosscheckMode::general;
  }
  std::vector<MotionParams<Rational>> instances;
  if (!cfg.input.empty()) {
    const auto any = load(cfg);
    if (!std::holds_alternative<MotionParams<Rational>>(any))
      throw InputError("the coefficient crosscheck runs in exact mode only");
    instances.push_back(std::get<MotionParams<Rational>>(any));
  } else {
    const std::size_t n = cfg.count ? cfg.count : 50;
    for (std::size_t i = 0; i < n; ++i) instances.push_back(crosscheck_instance(cfg.seed, i));
  }
  std::vector<CrosscheckReport> reports(instances.size());
  parallel_for(instances.size(),
               [&](std::size_t i) { reports[i] = coefficient_crosscheck(instances[i], mode, k); });
  std::size_t ok = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const bool good = reports[i].classification_ok() && reports[i].values_ok();
    ok += good ? 1 : 0;
    if (reports.size() == 1 || !good) {
      out << "instance " << i << ": " << describe(instances[i]) << "\n";
      print_crosscheck(reports[i], out);
    }
  }
  if (reports.size() > 1) {
    out << ok << "/" << reports.size() << " instances agree with the closed forms\n";
    out << "typo adjudications (first discriminating instance):\n";
    for (const auto& r : reports) {
      if (r.adjudications.empty() || r.adjudications[0].evidence.rfind("not", 0) == 0) continue;
      for (const auto& a : r.adjudications)
        out << "  " << a.coefficient << ": printed " << a.printed << "; adopted " << a.adopted << "; "
            << a.evidence << "\n";
      break;
    }
  }
  return ok == reports.size() ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scalar curvature of kinematic 3-surfaces swept by an equiform motion of a sphere in E^7"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string mode = "auto";
  std::string format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "Scalar mode")
        ->check(CLI::IsMember({"exact", "float", "auto"}))
        ->capture_default_str();
    sub->add_option("--tolerance", cfg.tolerance, "Float-mode zero tolerance")->capture_default_str();
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };
  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("input", cfg.input, "Parameter JSON file")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--count", cfg.count, "Number of instances");
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "Sphere-condition residuals and the assumption");
  add_input(check, true);
  add_common(check);

  auto* quantities = app.add_subcommand("quantities", "alpha_1..alpha_8, beta, gamma, delta");
  add_input(quantities, true);
  add_common(quantities);

  auto* metric_cmd = app.add_subcommand("metric", "Fourier listing of g_ij");
  add_input(metric_cmd, true);
  add_common(metric_cmd);
  metric_cmd->add_flag("--compare", cfg.compare, "Compare against the closed-form metric");

  auto* curvature = app.add_subcommand("curvature", "P, Q summary and constancy verdict");
  add_input(curvature, true);
  add_common(curvature);
  curvature->add_option("--theta", cfg.theta, "Probe theta")->capture_default_str();
  curvature->add_option("--phi", cfg.phi, "Probe phi")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Verify a classification result or corollary");
  verify->add_option("--theorem", cfg.theorem, "Result to verify")
      ->required()
      ->check(CLI::IsMember({"3.1", "3.3a", "3.3b", "3.4", "cor-k6", "cor-bound", "necessity"}));
  add_input(verify, false);
  add_common(verify);
  add_sampling(verify);

  auto* sample = app.add_subcommand("sample", "Emit sampled instances of a family as JSON");
  sample->add_option("--family", cfg.family, "ZeroK, KNeg32A, KNeg32B, General34, Unconstrained")
      ->capture_default_str();
  add_common(sample);
  add_sampling(sample);
  sample->add_option("--output", cfg.output, "Output file");

  auto* scan = app.add_subcommand("scan", "Curvature of sampled instances as CSV");
  scan->add_option("--family", cfg.family, "Family to sample")->capture_default_str();
  add_common(scan);
  add_sampling(scan);
  scan->add_option("--output", cfg.output, "CSV output file");

  auto* fd = app.add_subcommand("fd-check", "Compare with the finite-difference oracle");
  add_input(fd, true);
  add_common(fd);
  fd->add_option("--points", cfg.points, "Random regular points")->capture_default_str();
  fd->add_option("--step", cfg.h, "Difference step h")->capture_default_str();
  fd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

  auto* cross = app.add_subcommand("crosscheck", "Compare extracted coefficients with closed forms");
  add_input(cross, false);
  add_common(cross);
  add_sampling(cross);
  cross->add_option("--K", cfg.k_value, "Extract from P - K Q (rational) instead of P");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  cfg.mode = mode == "exact" ? ScalarMode::exact
                             : (mode == "float" ? ScalarMode::floating : ScalarMode::automatic);
  cfg.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);

  try {
    if (*check) return cmd_check(cfg, out);
    if (*quantities) return cmd_quantities(cfg, out);
    if (*metric_cmd) return cmd_metric(cfg, out);
    if (*curvature) return cmd_curvature(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*sample) return cmd_sample(cfg, out);
    if (*scan) return cmd_scan(cfg, out);
    if (*fd) return cmd_fd_check(cfg, out);
    if (*cross) return cmd_crosscheck(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DegenerateMetricError& e) {
    err << "degenerate metric: " << e.what() << "\n";
    return kInputError;
  } catch (const PoleOfChartError& e) {
    err << "pole of chart: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace equiform::cli
