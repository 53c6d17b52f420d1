#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "torus/builders.hpp"
#include "torus/operators.hpp"

using nlohmann::json;

namespace {

std::string g_bin;
std::string g_dir;

struct Res {
  int code;
  std::string out, err;
};

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Res run_cli(const std::string& args) {
  const std::string ob = g_dir + "/stdout.txt", eb = g_dir + "/stderr.txt";
  const std::string cmd =
      "'" + g_bin + "' " + args + " >" + ob + " 2>" + eb;
  const int rc = std::system(cmd.c_str());
  return Res{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, slurp(ob), slurp(eb)};
}

}  // namespace

TEST_CASE("criterion: verdict JSON, theorem tag and exit codes") {
  Res r = run_cli("criterion --q 3 --s 5/6 --attained --json");
  REQUIRE(r.code == 0);
  json out = json::parse(r.out);
  CHECK(out["outcome"] == "conserves");
  CHECK(out["theorem"] == "Thm 1.1");
  CHECK(out["manifest"]["subcommand"] == "criterion");
  CHECK(out["manifest"]["parameters"]["s"] == "5/6");

  r = run_cli("criterion --q 1 --s 1/2");
  CHECK(r.code == 2);
  CHECK(r.out.find("no_verdict") != std::string::npos);

  // Exact rational boundary: q = 2999/1000 just misses 5/(2*(5/6)) = 3.
  CHECK(run_cli("criterion --q 2999/1000 --s 5/6 --attained").code == 2);
  CHECK(run_cli("criterion --q 3 --s 5/6 --attained").code == 0);
}

TEST_CASE("usage and domain errors emit machine-readable stderr JSON") {
  Res r = run_cli("criterion --s 5/6");
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"] == "usage");

  r = run_cli("criterion --q 0.8333 --s 5/6");
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"] == "parse_error");

  r = run_cli("make-field helical --n 16 --shell 7 --out " + g_dir + "/x.pfld");
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"] == "field_error");
}

TEST_CASE("bootstrap trace and beltrami-verdict partition by exit code") {
  Res r = run_cli("bootstrap --tau 3/4 --beta 25 --json");
  REQUIRE(r.code == 0);
  json out = json::parse(r.out);
  CHECK(out["n0"] == 3);
  CHECK(out["verdict"]["outcome"] == "conserves");
  CHECK(out["steps"].size() == 4);
  CHECK(out["steps"][1]["beta"] == "25/2");

  CHECK(run_cli("beltrami-verdict --tau 3/2 --beta 5/2").code == 2);
  CHECK(run_cli("beltrami-verdict --tau 3/2 --beta 2501/1000").code == 0);
  CHECK(run_cli("lambda-const --p 3").code == 0);
  CHECK(run_cli("lambda-const --p 2999/1000").code == 2);
}

TEST_CASE("embed prints exact rationals with range-dependent fields") {
  Res r = run_cli("embed --s 5/6 --json");
  REQUIRE(r.code == 0);
  json out = json::parse(r.out);
  CHECK(out["p_commutator"] == "2");
  CHECK(out["theta"] == "1");
  CHECK(out["alpha"] == "1/12");
  CHECK(out["p"].is_null());  // defined only on 1 <= s < 3/2
  r = run_cli("embed --s 9/10 --json");
  CHECK(json::parse(r.out)["alpha"] == "9/160");
}

TEST_CASE("product subcommand reports rule and violations") {
  json out = json::parse(run_cli("product --s1 5/4 --s2 5/4 --s 1 --json").out);
  CHECK(out["admissible"] == true);
  CHECK(out["rule"] == "nonneg");
  out = json::parse(run_cli("product --s1 1 --s2 1 --s 1 --json").out);
  CHECK(out["admissible"] == false);
  CHECK(out["violated_conditions"].size() > 0);
}

TEST_CASE("make-field writes PFLD1, meta sidecar and manifest") {
  const std::string path = g_dir + "/abc.pfld";
  Res r = run_cli("make-field abc --n 16 --A 1 --B 0.9 --C 1.1 --out " + path +
                  " --json");
  REQUIRE(r.code == 0);
  const json out = json::parse(r.out);

  const json meta = json::parse(slurp(path + ".meta.json"));
  CHECK(meta["kind"] == "abc");
  CHECK(meta["B"] == 0.9);
  const json man = json::parse(slurp(path + ".manifest.json"));
  CHECK(man["subcommand"] == "make-field abc");
  CHECK(man["artifacts"][0] == path);

  // Value cross-check against the library.
  using namespace torus;
  const double want = l2_norm(make_abc(Grid(16), 1.0, 0.9, 1.1));
  CHECK(out["l2_norm"].get<double>() == doctest::Approx(want).epsilon(1e-12));

  json norms = json::parse(
      run_cli("norms --field " + path + " --s-list 0,1 --json").out);
  CHECK(norms["l2_norm"].get<double>() ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("synth generation is bit-identical under a fixed seed") {
  const std::string a = g_dir + "/s1.pfld", b = g_dir + "/s2.pfld";
  REQUIRE(run_cli("make-field synth --n 16 --s-target 0.9 --seed 11 --out " +
                  a).code == 0);
  REQUIRE(run_cli("make-field synth --n 16 --s-target 0.9 --seed 11 --out " +
                  b).code == 0);
  CHECK(slurp(a) == slurp(b));
  REQUIRE(run_cli("make-field synth --n 16 --s-target 0.9 --seed 12 --out " +
                  b).code == 0);
  CHECK(slurp(a) != slurp(b));
}

TEST_CASE("simulate: flat config, CSV diagnostics, final state dump") {
  const std::string field = g_dir + "/u0.pfld";
  REQUIRE(run_cli("make-field abc --n 16 --out " + field).code == 0);
  const std::string cfg_path = g_dir + "/run.cfg";
  {
    std::ofstream cfg(cfg_path);
    cfg << "n = 16\ndt = 2e-3\nt_end = 0.05\nnu = 0\n"
        << "s_list = 0.5,1\noutput_every = 5\n"
        << "field = " << field << "\n"
        << "csv = " << g_dir << "/run.csv\n"
        << "final = " << g_dir << "/fin.pfld\n";
  }
  Res r = run_cli("simulate --config " + cfg_path + " --json");
  REQUIRE(r.code == 0);
  const json out = json::parse(r.out);
  CHECK(out["rows"] == 6);
  CHECK(out["energy_drift"].get<double>() < 1e-8);

  const std::string csv = slurp(g_dir + "/run.csv");
  CHECK(csv.substr(0, csv.find('\n')) ==
        "t,E,H0.5,H1,beltrami_res,lamb_res,div_res");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(json::parse(slurp(g_dir + "/run.csv.manifest.json"))["subcommand"] ==
        "simulate");

  // Final state loads back and matches the reported energy.
  json norms = json::parse(
      run_cli("norms --field " + g_dir + "/fin.pfld --s-list 0 --json").out);
  const double l2 = norms["l2_norm"].get<double>();
  CHECK(0.5 * l2 * l2 ==
        doctest::Approx(out["energy_final"].get<double>()).epsilon(1e-10));
}

TEST_CASE("gagliardo subcommand enforces the grid cap") {
  const std::string big = g_dir + "/big.pfld";
  REQUIRE(run_cli("make-field abc --n 32 --out " + big).code == 0);
  Res r = run_cli("gagliardo --field " + big + " --alpha 1/2 --max-n 16");
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"] == "field_error");

  const std::string small = g_dir + "/small.pfld";
  REQUIRE(run_cli("make-field abc --n 8 --out " + small).code == 0);
  r = run_cli("gagliardo --field " + small + " --alpha 1/2 --json");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["seminorm"].get<double>() > 0.0);
}

TEST_CASE("mollify-rates emits reports, CSV and a persisted manifest") {
  const std::string csv = g_dir + "/rates.csv";
  const std::string man = g_dir + "/rates.manifest.json";
  Res r = run_cli("mollify-rates --alpha 1/2 --n 32 --eps0 0.8 --steps 5 "
                  "--guard 0.5 --seed 2 --csv " + csv + " --manifest " + man +
                  " --json");
  REQUIRE(r.code == 0);
  const json out = json::parse(r.out);
  CHECK(out["comm_report"]["eps_grid"].size() == 5);
  CHECK(out["comm_report"]["expected_slope"] == 1.0);
  CHECK(out["grad_report"]["fitted_slope"].get<double>() < 0.0);

  const std::string text = slurp(csv);
  CHECK(text.substr(0, text.find('\n')) ==
        "eps,grad_norm,comm_norm,scaled_grad");
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(json::parse(slurp(man))["seed"] == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-torusflow> [doctest args]\n");
    return 1;
  }
  g_bin = argv[1];
  char tmpl[] = "/tmp/torusflow_cli_XXXXXX";
  g_dir = mkdtemp(tmpl);

  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  const int rc = ctx.run();
  if (std::system(("rm -rf '" + g_dir + "'").c_str()) != 0)
    std::fprintf(stderr, "warning: could not remove %s\n", g_dir.c_str());
  return rc;
}
