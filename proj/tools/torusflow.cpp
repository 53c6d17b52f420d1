// torusflow: every library operation as a subcommand with reproducible,
// file-based inputs and outputs. Exit codes: 0 success, 2 verdict was
// no_verdict, 1 error (machine-readable JSON on stderr).

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "torus/builders.hpp"
#include "torus/exponents.hpp"
#include "torus/field_io.hpp"
#include "torus/gagliardo.hpp"
#include "torus/mollify.hpp"
#include "torus/operators.hpp"
#include "torus/sim.hpp"

using nlohmann::json;
using namespace torus;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Command {
  std::string name;
  json parameters;               // rationals kept as "num/den" strings
  json seed;                     // null unless the op consumes a seed
  std::vector<std::string> artifacts;
  json output;                   // machine-readable result
  std::string human;             // table for the default output mode
  int exit_code = 0;
};

json manifest_of(const Command& c) {
  return json{{"tool_version", kVersion},
              {"subcommand", c.name},
              {"parameters", c.parameters},
              {"seed", c.seed},
              {"artifacts", c.artifacts}};
}

json verdict_json(const Verdict& v) {
  return json{{"outcome", outcome_name(v.outcome)},
              {"theorem", v.theorem},
              {"reason", v.reason}};
}

std::string verdict_human(const Verdict& v) {
  std::ostringstream os;
  os << "outcome: " << outcome_name(v.outcome) << "\n"
     << "theorem: " << v.theorem << "\n"
     << "reason:  " << v.reason << "\n";
  return os.str();
}

int verdict_exit(const Verdict& v) {
  return v.outcome == Outcome::no_verdict ? 2 : 0;
}

const char* rule_name(ProductRule r) {
  switch (r) {
    case ProductRule::nonneg: return "nonneg";
    case ProductRule::neg_main: return "neg_main";
    case ProductRule::neg_alt: return "neg_alt";
    default: return "none";
  }
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  if (out.empty()) throw parse_error("empty rational list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

SpectralField load_field_spectral(const std::string& path) {
  if (pfld_domain_flag(path) == 0) return load_spectral(path);
  return transform(load_real(path));
}

RealField load_field_real(const std::string& path) {
  if (pfld_domain_flag(path) == 1) return load_real(path);
  return inverse_transform(load_spectral(path));
}

json report_json(const RateReport& r) {
  return json{{"eps_grid", r.eps_grid},
              {"norms", r.norms},
              {"fitted_slope", r.fitted_slope},
              {"r_squared", r.r_squared},
              {"expected_slope", r.expected_slope}};
}

// Flat key=value simulate config; '#' starts a comment.
std::map<std::string, std::string> parse_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw io_error("cannot open config: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (!key.empty()) kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

void save_with_meta(const SpectralField& F, const std::string& path,
                    const json& meta, Command& cmd) {
  save_spectral(F, path);
  write_meta(path, meta.dump(2));
  cmd.artifacts.push_back(path);
  cmd.output = json{{"path", path},
                    {"n", F.grid().n},
                    {"ncomp", F.ncomp()},
                    {"l2_norm", l2_norm(F)},
                    {"divergence_residual", divergence_residual(F)}};
  std::ostringstream os;
  os << "wrote " << path << " (spectral, n=" << F.grid().n
     << ", ncomp=" << F.ncomp() << ")\n"
     << "l2_norm: " << l2_norm(F) << "\n"
     << "divergence_residual: " << divergence_residual(F) << "\n";
  cmd.human = os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-conservation exponent calculus and torus spectral "
               "verification toolkit"};
  app.set_version_flag("--version", std::string("torusflow ") + kVersion);
  app.require_subcommand(1);

  bool json_out = false;
  std::string manifest_path;
  app.add_flag("--json", json_out, "machine-readable stdout");
  app.add_option("--manifest", manifest_path,
                 "also write the run manifest to this path");

  Command cmd;
  std::function<void()> action;

  // criterion
  {
    auto* sub = app.add_subcommand(
        "criterion", "energy-conservation criterion for u in L^q H^s");
    auto q = std::make_shared<std::string>();
    auto s = std::make_shared<std::string>();
    auto attained = std::make_shared<bool>(false);
    sub->add_option("--q", *q, "time exponent, rational or inf")->required();
    sub->add_option("--s", *s, "Sobolev index, exact rational")->required();
    sub->add_flag("--attained", *attained, "H^s membership attained at s");
    sub->callback([&, q, s, attained] {
      action = [&, q, s, attained] {
        cmd.name = "criterion";
        cmd.parameters = {{"q", *q}, {"s", *s}, {"attained", *attained}};
        const Verdict v = check_energy_criterion(
            {parse_ext_rat(*q), {parse_rat(*s), *attained}});
        cmd.output = verdict_json(v);
        cmd.human = verdict_human(v);
        cmd.exit_code = verdict_exit(v);
      };
    });
  }

  // product
  {
    auto* sub = app.add_subcommand(
        "product", "is H^{s1} x H^{s2} -> H^s multiplication continuous");
    auto s1 = std::make_shared<std::string>();
    auto s2 = std::make_shared<std::string>();
    auto s = std::make_shared<std::string>();
    sub->add_option("--s1", *s1)->required();
    sub->add_option("--s2", *s2)->required();
    sub->add_option("--s", *s)->required();
    sub->callback([&, s1, s2, s] {
      action = [&, s1, s2, s] {
        cmd.name = "product";
        cmd.parameters = {{"s1", *s1}, {"s2", *s2}, {"s", *s}};
        const ProductResult r = product_admissible(
            {parse_rat(*s1), parse_rat(*s2), parse_rat(*s)});
        cmd.output = json{{"admissible", r.admissible},
                          {"rule", rule_name(r.rule)},
                          {"violated_conditions", r.violated_conditions}};
        std::ostringstream os;
        os << "admissible: " << (r.admissible ? "yes" : "no") << "\n"
           << "rule: " << rule_name(r.rule) << "\n";
        if (!r.violated_conditions.empty()) {
          os << "violated:";
          for (const auto& c : r.violated_conditions) os << " " << c;
          os << "\n";
        }
        cmd.human = os.str();
      };
    });
  }

  // embed
  {
    auto* sub = app.add_subcommand(
        "embed", "exact embedding/interpolation exponents at H^s");
    auto s = std::make_shared<std::string>();
    sub->add_option("--s", *s)->required();
    sub->callback([&, s] {
      action = [&, s] {
        cmd.name = "embed";
        cmd.parameters = {{"s", *s}};
        const EmbeddingExponents e = embedding_exponents(parse_rat(*s));
        json out;
        std::ostringstream os;
        auto put = [&](const char* key, const std::optional<Rat>& v) {
          out[key] = v ? json(to_string(*v)) : json(nullptr);
          if (v) os << key << ": " << to_string(*v) << "\n";
        };
        put("p_commutator", e.p_commutator);
        put("theta", e.theta);
        put("alpha", e.alpha);
        put("p", e.p);
        put("p_dual", e.p_dual);
        put("p_star", e.p_star);
        cmd.output = out;
        cmd.human = os.str();
      };
    });
  }

  // bootstrap
  {
    auto* sub = app.add_subcommand(
        "bootstrap", "regularity bootstrap trace for a Beltrami factor");
    auto tau = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    sub->add_option("--tau", *tau)->required();
    sub->add_option("--beta", *beta)->required();
    sub->callback([&, tau, beta] {
      action = [&, tau, beta] {
        cmd.name = "bootstrap";
        cmd.parameters = {{"tau", *tau}, {"beta", *beta}};
        const BootstrapTrace tr =
            bootstrap_trace(parse_rat(*tau), parse_rat(*beta));
        json steps = json::array();
        std::ostringstream os;
        os << "n    beta_n        sigma_n\n";
        for (const auto& st : tr.steps) {
          steps.push_back(json{{"n", st.n},
                               {"beta", to_string(st.beta_n)},
                               {"sigma", to_string(st.sigma_n.value)}});
          os << st.n << "    " << to_string(st.beta_n) << "    "
             << to_string(st.sigma_n.value) << " (open)\n";
        }
        os << "n0: " << (tr.n0 ? std::to_string(*tr.n0) : "none") << "\n"
           << verdict_human(tr.verdict);
        cmd.output = json{{"tau", *tau},
                          {"beta", *beta},
                          {"steps", steps},
                          {"n0", tr.n0 ? json(*tr.n0) : json(nullptr)},
                          {"verdict", verdict_json(tr.verdict)}};
        cmd.human = os.str();
        cmd.exit_code = verdict_exit(tr.verdict);
      };
    });
  }

  // beltrami-verdict
  {
    auto* sub = app.add_subcommand(
        "beltrami-verdict", "closed-form verdict for L^beta H^tau Beltrami");
    auto tau = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    sub->add_option("--tau", *tau)->required();
    sub->add_option("--beta", *beta)->required();
    sub->callback([&, tau, beta] {
      action = [&, tau, beta] {
        cmd.name = "beltrami-verdict";
        cmd.parameters = {{"tau", *tau}, {"beta", *beta}};
        const Verdict v = beltrami_verdict(parse_rat(*tau), parse_rat(*beta));
        cmd.output = verdict_json(v);
        cmd.human = verdict_human(v);
        cmd.exit_code = verdict_exit(v);
      };
    });
  }

  // lambda-const
  {
    auto* sub = app.add_subcommand(
        "lambda-const", "verdict for a time-only Beltrami factor in L^p");
    auto p = std::make_shared<std::string>();
    auto space_dep = std::make_shared<bool>(false);
    sub->add_option("--p", *p, "rational or inf")->required();
    sub->add_flag("--space-dependent", *space_dep,
                  "lambda depends on x as well");
    sub->callback([&, p, space_dep] {
      action = [&, p, space_dep] {
        cmd.name = "lambda-const";
        cmd.parameters = {{"p", *p}, {"space_dependent", *space_dep}};
        const Verdict v = constant_lambda_verdict(parse_ext_rat(*p), *space_dep);
        cmd.output = verdict_json(v);
        cmd.human = verdict_human(v);
        cmd.exit_code = verdict_exit(v);
      };
    });
  }

  // norms
  {
    auto* sub = app.add_subcommand("norms", "L2 and H^s norms of a field");
    auto path = std::make_shared<std::string>();
    auto slist = std::make_shared<std::string>();
    sub->add_option("--field", *path, "PFLD1 file")->required();
    sub->add_option("--s-list", *slist, "comma-separated exact rationals")
        ->required();
    sub->callback([&, path, slist] {
      action = [&, path, slist] {
        cmd.name = "norms";
        cmd.parameters = {{"field", *path}, {"s_list", *slist}};
        const SpectralField F = load_field_spectral(*path);
        json rows = json::array();
        std::ostringstream os;
        os << "l2_norm: " << l2_norm(F) << "\n"
           << "s        hs_norm        hs_seminorm\n";
        for (const Rat& s : parse_rat_list(*slist)) {
          const double sd = s.convert_to<double>();
          rows.push_back(json{{"s", to_string(s)},
                              {"hs_norm", hs_norm(F, sd)},
                              {"hs_seminorm", hs_seminorm(F, sd)}});
          os << to_string(s) << "    " << hs_norm(F, sd) << "    "
             << hs_seminorm(F, sd) << "\n";
        }
        cmd.output = json{{"l2_norm", l2_norm(F)}, {"norms", rows}};
        cmd.human = os.str();
      };
    });
  }

  // gagliardo
  {
    auto* sub = app.add_subcommand(
        "gagliardo", "double-integral W^{alpha,p} seminorm (small grids)");
    auto path = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::string>();
    auto p = std::make_shared<double>(2.0);
    auto max_n = std::make_shared<int>(16);
    sub->add_option("--field", *path)->required();
    sub->add_option("--alpha", *alpha, "exact rational in (0,1)")->required();
    sub->add_option("--p", *p);
    sub->add_option("--max-n", *max_n, "refuse larger grids (O(n^6) cost)");
    sub->callback([&, path, alpha, p, max_n] {
      action = [&, path, alpha, p, max_n] {
        cmd.name = "gagliardo";
        cmd.parameters = {
            {"field", *path}, {"alpha", *alpha}, {"p", *p}, {"max_n", *max_n}};
        const RealField f = load_field_real(*path);
        const double a = parse_rat(*alpha).convert_to<double>();
        const double v = gagliardo_seminorm(f, a, *p, *max_n);
        cmd.output = json{{"alpha", *alpha}, {"p", *p}, {"seminorm", v}};
        std::ostringstream os;
        os << "seminorm: " << v << "\n";
        cmd.human = os.str();
      };
    });
  }

  // mollify-rates
  {
    auto* sub = app.add_subcommand(
        "mollify-rates",
        "mollifier rate verification on a synthetic field of regularity "
        "alpha");
    auto alpha = std::make_shared<std::string>();
    auto n = std::make_shared<int>(64);
    auto eps0 = std::make_shared<double>(0.7);
    auto steps = std::make_shared<int>(8);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto guard = std::make_shared<double>(1.0);
    auto csv = std::make_shared<std::string>();
    sub->add_option("--alpha", *alpha, "exact rational in (0,1)")->required();
    sub->add_option("--n", *n);
    sub->add_option("--eps0", *eps0, "largest scale of the geometric grid");
    sub->add_option("--steps", *steps);
    sub->add_option("--seed", *seed);
    sub->add_option("--guard", *guard, "resolution guard in grid spacings");
    sub->add_option("--csv", *csv, "also write (eps, value) pairs here");
    sub->callback([&, alpha, n, eps0, steps, seed, guard, csv] {
      action = [&, alpha, n, eps0, steps, seed, guard, csv] {
        cmd.name = "mollify-rates";
        cmd.parameters = {{"alpha", *alpha}, {"n", *n},
                          {"eps0", *eps0},   {"steps", *steps},
                          {"guard", *guard}, {"csv", *csv}};
        cmd.seed = *seed;
        const double a = parse_rat(*alpha).convert_to<double>();
        const Grid g(*n);
        const SpectralField F = synth_regularity(g, a, *seed);
        const auto grid =
            default_eps_grid(*eps0, *steps, *guard * g.spacing());
        const LemmaRates lr = verify_lemma_rates(F, a, grid, *guard);
        cmd.output = json{{"grad_report", report_json(lr.grad_report)},
                          {"comm_report", report_json(lr.comm_report)},
                          {"vanishing_values", lr.vanishing_values},
                          {"vanishing_monotone", lr.vanishing_monotone}};
        std::ostringstream os;
        os << "eps         grad_norm      comm_norm      scaled_grad\n";
        for (std::size_t j = 0; j < grid.size(); ++j)
          os << grid[j] << "    " << lr.grad_report.norms[j] << "    "
             << lr.comm_report.norms[j] << "    " << lr.vanishing_values[j]
             << "\n";
        os << "grad slope: " << lr.grad_report.fitted_slope
           << " (expected >= " << lr.grad_report.expected_slope << ")\n"
           << "comm slope: " << lr.comm_report.fitted_slope
           << " (expected " << lr.comm_report.expected_slope << ")\n"
           << "scaled-gradient decrease monotone: "
           << (lr.vanishing_monotone ? "yes" : "no") << "\n";
        cmd.human = os.str();
        if (!csv->empty()) {
          std::ofstream out(*csv);
          if (!out) throw io_error("cannot open for writing: " + *csv);
          out << "eps,grad_norm,comm_norm,scaled_grad\n";
          for (std::size_t j = 0; j < grid.size(); ++j)
            out << grid[j] << "," << lr.grad_report.norms[j] << ","
                << lr.comm_report.norms[j] << "," << lr.vanishing_values[j]
                << "\n";
          cmd.artifacts.push_back(*csv);
        }
      };
    });
  }

  // make-field
  {
    auto* sub = app.add_subcommand("make-field", "field constructors");
    sub->require_subcommand(1);

    auto n = std::make_shared<int>(32);
    auto out_path = std::make_shared<std::string>();

    auto* abc = sub->add_subcommand("abc", "ABC curl eigenfield");
    auto A = std::make_shared<double>(1.0);
    auto B = std::make_shared<double>(1.0);
    auto C = std::make_shared<double>(1.0);
    abc->add_option("--n", *n);
    abc->add_option("--A", *A);
    abc->add_option("--B", *B);
    abc->add_option("--C", *C);
    abc->add_option("--out", *out_path)->required();
    abc->callback([&, n, A, B, C, out_path] {
      action = [&, n, A, B, C, out_path] {
        cmd.name = "make-field abc";
        cmd.parameters = {{"n", *n}, {"A", *A}, {"B", *B}, {"C", *C},
                          {"out", *out_path}};
        const SpectralField F = make_abc(Grid(*n), *A, *B, *C);
        save_with_meta(F, *out_path,
                       json{{"kind", "abc"}, {"n", *n}, {"A", *A},
                            {"B", *B}, {"C", *C}},
                       cmd);
      };
    });

    auto* hel = sub->add_subcommand("helical", "random Beltrami shell field");
    auto shell = std::make_shared<int>(1);
    auto sign = std::make_shared<int>(1);
    auto hseed = std::make_shared<std::uint64_t>(1);
    hel->add_option("--n", *n);
    hel->add_option("--shell", *shell, "|k|^2 of the shell")->required();
    hel->add_option("--sign", *sign, "+1 or -1");
    hel->add_option("--seed", *hseed);
    hel->add_option("--out", *out_path)->required();
    hel->callback([&, n, shell, sign, hseed, out_path] {
      action = [&, n, shell, sign, hseed, out_path] {
        cmd.name = "make-field helical";
        cmd.parameters = {{"n", *n}, {"shell", *shell}, {"sign", *sign},
                          {"out", *out_path}};
        cmd.seed = *hseed;
        const SpectralField F =
            make_helical_beltrami(Grid(*n), *shell, *sign, *hseed);
        save_with_meta(F, *out_path,
                       json{{"kind", "helical"}, {"n", *n}, {"shell", *shell},
                            {"sign", *sign}, {"seed", *hseed}},
                       cmd);
      };
    });

    auto* synth = sub->add_subcommand(
        "synth", "random solenoidal field of prescribed regularity");
    auto s_target = std::make_shared<double>(0.5);
    auto sseed = std::make_shared<std::uint64_t>(1);
    auto scalar = std::make_shared<bool>(false);
    synth->add_option("--n", *n);
    synth->add_option("--s-target", *s_target)->required();
    synth->add_option("--seed", *sseed);
    synth->add_flag("--scalar", *scalar, "scalar variant");
    synth->add_option("--out", *out_path)->required();
    synth->callback([&, n, s_target, sseed, scalar, out_path] {
      action = [&, n, s_target, sseed, scalar, out_path] {
        cmd.name = "make-field synth";
        cmd.parameters = {{"n", *n}, {"s_target", *s_target},
                          {"scalar", *scalar}, {"out", *out_path}};
        cmd.seed = *sseed;
        const Grid g(*n);
        const SpectralField F = *scalar
                                    ? synth_scalar(g, *s_target, *sseed)
                                    : synth_regularity(g, *s_target, *sseed);
        save_with_meta(F, *out_path,
                       json{{"kind", *scalar ? "synth_scalar" : "synth"},
                            {"n", *n}, {"s_target", *s_target},
                            {"seed", *sseed}},
                       cmd);
      };
    });
  }

  // simulate
  {
    auto* sub = app.add_subcommand(
        "simulate", "dealiased pseudo-spectral Euler/NSE run (key=value "
        "config: n, dt, t_end, nu, dealias, s_list, eps_list, output_every, "
        "flux_guard, field, csv, final)");
    auto cfg_path = std::make_shared<std::string>();
    sub->add_option("--config", *cfg_path)->required();
    sub->callback([&, cfg_path] {
      action = [&, cfg_path] {
        cmd.name = "simulate";
        const auto kv = parse_config(*cfg_path);
        auto get = [&](const char* key, const std::string& dflt) {
          auto it = kv.find(key);
          return it == kv.end() ? dflt : it->second;
        };
        SimConfig cfg;
        cfg.n = std::stoi(get("n", "32"));
        cfg.dt = std::stod(get("dt", "1e-3"));
        cfg.t_end = std::stod(get("t_end", "1"));
        cfg.nu = std::stod(get("nu", "0"));
        const std::string da = get("dealias", "1");
        cfg.dealias = !(da == "0" || da == "false" || da == "no");
        if (!get("s_list", "").empty())
          cfg.s_list = parse_double_list(get("s_list", ""));
        if (!get("eps_list", "").empty())
          cfg.eps_list = parse_double_list(get("eps_list", ""));
        cfg.output_every = std::stoi(get("output_every", "10"));
        cfg.flux_guard_spacings = std::stod(get("flux_guard", "4"));
        const std::string field = get("field", "");
        if (field.empty()) throw sim_error("config: field= is required");
        const std::string csv_path = get("csv", *cfg_path + ".csv");
        const std::string final_path = get("final", "");

        cmd.parameters = {{"config", *cfg_path}};
        for (const auto& [k, v] : kv) cmd.parameters[k] = v;

        const SpectralField u0 = load_field_spectral(field);
        std::ofstream csv(csv_path);
        if (!csv) throw io_error("cannot open for writing: " + csv_path);
        SimState fin;
        const auto rows = run(cfg, u0, &csv, &fin);
        cmd.artifacts.push_back(csv_path);
        if (!final_path.empty()) {
          save_spectral(fin.u, final_path);
          write_meta(final_path,
                     json{{"kind", "simulate final state"},
                          {"config", *cfg_path}, {"t", fin.t}}.dump(2));
          cmd.artifacts.push_back(final_path);
        }
        const double E0 = rows.front().energy, E1 = rows.back().energy;
        cmd.output = json{{"rows", rows.size()},
                          {"t_final", rows.back().t},
                          {"energy_initial", E0},
                          {"energy_final", E1},
                          {"energy_drift", std::abs(E1 - E0) / E0},
                          {"csv", csv_path}};
        std::ostringstream os;
        os << "rows: " << rows.size() << "\n"
           << "t_final: " << rows.back().t << "\n"
           << "energy: " << E0 << " -> " << E1
           << " (relative drift " << std::abs(E1 - E0) / E0 << ")\n"
           << "csv: " << csv_path << "\n";
        cmd.human = os.str();
      };
    });
  }

  // Let trailing global flags (--json, --manifest) reach the parent parser.
  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    s->fallthrough();
    for (CLI::App* t : s->get_subcommands([](const CLI::App*) { return true; }))
      t->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump()
              << "\n";
    return 1;
  }

  try {
    action();
  } catch (const std::exception& e) {
    const char* kind = "error";
    if (dynamic_cast<const parse_error*>(&e)) kind = "parse_error";
    else if (dynamic_cast<const out_of_range_error*>(&e)) kind = "out_of_range";
    else if (dynamic_cast<const no_admissible_target*>(&e))
      kind = "no_admissible_target";
    else if (dynamic_cast<const unsupported_error*>(&e)) kind = "unsupported";
    else if (dynamic_cast<const field_error*>(&e)) kind = "field_error";
    else if (dynamic_cast<const sim_error*>(&e)) kind = "sim_error";
    else if (dynamic_cast<const io_error*>(&e)) kind = "io_error";
    std::cerr << json{{"error", kind}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  const json manifest = manifest_of(cmd);
  if (!cmd.artifacts.empty()) {
    std::ofstream mf(cmd.artifacts.front() + ".manifest.json");
    mf << manifest.dump(2) << "\n";
  }
  if (!manifest_path.empty()) {
    std::ofstream mf(manifest_path);
    mf << manifest.dump(2) << "\n";
  }
  if (json_out) {
    json out = cmd.output;
    out["manifest"] = manifest;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << cmd.human;
  }
  return cmd.exit_code;
}
