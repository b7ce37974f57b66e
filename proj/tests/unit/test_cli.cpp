// End-to-end tests for the leibniz-lab command line tool.  Each case spawns
// the real binary, captures stdout/stderr, and checks the exit code together
// with the machine-readable JSON output.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "leibniz/minimal_rep.hpp"

namespace {

using Json = nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string scratch_dir() {
  static std::string dir = [] {
    std::string d = "cli_scratch";
    const int rc = std::system(("rm -rf " + d + " && mkdir -p " + d).c_str());
    REQUIRE(rc == 0);
    return d;
  }();
  return dir;
}

std::string scratch_path(const std::string& name) {
  return scratch_dir() + "/" + name;
}

std::string data_path(const std::string& name) {
  return std::string(LEIBNIZ_TEST_DATA_DIR) + "/" + name;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path =
      scratch_path("stdout." + std::to_string(counter));
  const std::string err_path =
      scratch_path("stderr." + std::to_string(counter));
  ++counter;
  const std::string cmd = std::string(LEIBNIZ_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  CliResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -2;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

Json parse_out(const CliResult& r) {
  REQUIRE(!r.out.empty());
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);          // missing --in
  CHECK(run_cli("fock --deg 4").exit_code == 2);    // missing --n
  CHECK(run_cli("gen-fock --deg 4").exit_code == 2);
  CHECK(run_cli("min-rep").exit_code == 2);
  CHECK(run_cli("psi").exit_code == 2);
  CHECK(run_cli("verify --in no_such_file.json").exit_code == 2);
}

TEST_CASE("cli: verify accepts a full table and reports a pass") {
  const CliResult r = run_cli("verify --in " + data_path("h3.json"));
  CHECK(r.exit_code == 0);
  const Json j = parse_out(r);
  CHECK(j.at("pass") == true);
  CHECK(j.at("checked") == 27);
  CHECK(j.at("window_degree").is_null());
  CHECK(j.at("failures").empty());
}

TEST_CASE("cli: verify reports violations with exit code 1") {
  const CliResult r = run_cli("verify --in " + data_path("h3_perturbed.json"));
  CHECK(r.exit_code == 1);
  const Json j = parse_out(r);
  CHECK(j.at("pass") == false);
  CHECK(j.at("checked") == 27);
  REQUIRE(!j.at("failures").empty());
  const Json f0 = j.at("failures").at(0);
  CHECK(f0.at("triple") == Json::array({"x1", "x1", "x1"}));
  CHECK(f0.at("residual") == Json::array({Json::array({"c", "-1"})}));
}

TEST_CASE("cli: fock output is deterministic and verifies") {
  const std::string f1 = scratch_path("hfl3_deg4_a.json");
  const std::string f2 = scratch_path("hfl3_deg4_b.json");
  CHECK(run_cli("fock --n 3 --deg 4 --out " + f1).exit_code == 0);
  CHECK(run_cli("fock --n 3 --deg 4 --out " + f2).exit_code == 0);
  const std::string bytes1 = slurp(f1);
  CHECK(!bytes1.empty());
  CHECK(bytes1 == slurp(f2));

  // stdout emission carries the same document.
  const CliResult direct = run_cli("fock --n 3 --deg 4");
  CHECK(direct.exit_code == 0);
  CHECK(Json::parse(direct.out) == Json::parse(bytes1));

  // A windowed document is accepted without --window ...
  const CliResult plain = run_cli("verify --in " + f1);
  CHECK(plain.exit_code == 0);
  const Json j = parse_out(plain);
  CHECK(j.at("pass") == true);
  CHECK(j.at("checked") == 489);
  CHECK(j.at("skipped") == 23);
  CHECK(j.at("window_degree") == 4);

  // ... and with the matching --window; a mismatch is a usage error.
  CHECK(run_cli("verify --in " + f1 + " --window 4").exit_code == 0);
  CHECK(run_cli("verify --in " + f1 + " --window 5").exit_code == 2);
  CHECK(run_cli("verify --in " + data_path("h3.json") + " --window 4")
            .exit_code == 2);
}

TEST_CASE("cli: gen-fock materializes a verifiable direct sum") {
  const std::string g = scratch_path("gen_1_2_deg4.json");
  CHECK(run_cli("gen-fock --ks 1,2 --deg 4 --out " + g).exit_code == 0);
  CHECK(run_cli("verify --in " + g).exit_code == 0);
  CHECK(run_cli("gen-fock --ks 1,0 --deg 4").exit_code == 2);
  CHECK(run_cli("gen-fock --ks nope --deg 4").exit_code == 2);
}

TEST_CASE("cli: classify --params reports the normal form") {
  const CliResult r0 = run_cli("classify --params 0,5,0,7,0,0,0,3,0");
  CHECK(r0.exit_code == 0);
  const Json j0 = parse_out(r0);
  CHECK(j0.at("entry_index") == 0);
  CHECK(j0.at("lambda") == "0");
  CHECK(j0.at("exact_hit") == true);
  CHECK(j0.at("theta_square_class").is_null());
  CHECK(j0.at("residual_e3x") == "0");

  const CliResult rz = run_cli("classify --params 0,0,0,0,0,0,0,0,0");
  CHECK(rz.exit_code == 0);
  CHECK(parse_out(rz).at("entry_index") == 13);

  const CliResult r14 = run_cli("classify --params 1,2,3,4,5,6,7,8,9");
  CHECK(r14.exit_code == 0);
  const Json j14 = parse_out(r14);
  CHECK(j14.at("entry_index") == 14);
  CHECK(j14.at("lambda") == "1/3");
  CHECK(j14.at("exact_hit") == false);
  CHECK(j14.at("residual_e3x") == "24");
  CHECK(j14.at("theta_square_class").is_null());
  CHECK(j14.at("nullity_pattern") ==
        "case 2: beta1!=0, eta1-delta2!=0, theta1-beta2!=0");
  REQUIRE(j14.at("witness").is_array());
  REQUIRE(j14.at("witness").size() == 6);
  CHECK(j14.at("witness").at(0).size() == 6);
  CHECK(j14.at("name") == leibniz::classify_list()[14].name());
}

TEST_CASE("cli: classify --list prints all entries") {
  const CliResult r = run_cli("classify --list");
  CHECK(r.exit_code == 0);
  const Json j = parse_out(r);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 21);
  CHECK(j.at(0).at("index") == 0);
  CHECK(j.at(13).at("name") == leibniz::classify_list()[13].name());
  int lambdas = 0;
  for (const auto& e : j)
    if (e.at("has_lambda") == true) ++lambdas;
  CHECK(lambdas == 3);
  CHECK(j.at(0).at("has_lambda") == true);
  CHECK(j.at(3).at("has_lambda") == true);
  CHECK(j.at(14).at("has_lambda") == true);
}

TEST_CASE("cli: classify argument validation") {
  CHECK(run_cli("classify").exit_code == 2);
  CHECK(run_cli("classify --params 1,2,3 --list").exit_code == 2);
  CHECK(run_cli("classify --params 1,2,3").exit_code == 2);
  CHECK(run_cli("classify --params a,b,c,d,e,f,g,h,i").exit_code == 2);
}

TEST_CASE("cli: min-rep emits matrices and the combined algebra") {
  const CliResult rm = run_cli("min-rep --m 1 --emit matrices");
  CHECK(rm.exit_code == 0);
  const Json jm = parse_out(rm);
  CHECK(jm.at("m") == 1);
  const Json x1 = jm.at("matrices").at("x1");
  REQUIRE(x1.size() == 3);
  REQUIRE(x1.at(0).size() == 3);
  CHECK(x1.at(0).at(1) == "1");

  const CliResult rm2 = run_cli("min-rep --m 2 --emit matrices");
  CHECK(rm2.exit_code == 0);
  CHECK(parse_out(rm2).at("matrices").at("z").at(0).at(3) == "1");

  const std::string a = scratch_path("minrep1_algebra.json");
  CHECK(run_cli("min-rep --m 1 --out " + a).exit_code == 0);
  CHECK(run_cli("verify --in " + a).exit_code == 0);

  CHECK(run_cli("min-rep --m 1 --emit bogus").exit_code == 2);
  CHECK(run_cli("min-rep --m 0").exit_code == 2);
}

TEST_CASE("cli: psi module-axiom reports") {
  // psi1 admits the identity Omega; the default --deg is 6.
  const CliResult r1 = run_cli("psi --which 1");
  CHECK(r1.exit_code == 0);
  const Json j1 = parse_out(r1);
  CHECK(j1.at("pass") == true);
  CHECK(j1.at("checked") == 63);

  // The identity Omega fails the psi2 axiom immediately.
  const CliResult r2 = run_cli("psi --which 2");
  CHECK(r2.exit_code == 1);
  const Json j2 = parse_out(r2);
  CHECK(j2.at("pass") == false);
  CHECK(j2.at("witness").at("exponent") == 0);

  const CliResult ok2 = run_cli("psi --which 2 --deg 12 --in " +
                                data_path("omega_psi2.json"));
  CHECK(ok2.exit_code == 0);
  CHECK(parse_out(ok2).at("checked") == 117);

  const CliResult ok3 = run_cli("psi --which 3 --deg 8 --in " +
                                data_path("omega_psi3.json"));
  CHECK(ok3.exit_code == 0);

  CHECK(run_cli("psi --which 9").exit_code == 2);
  CHECK(run_cli("psi --which 2 --emit bogus").exit_code == 2);
}

TEST_CASE("cli: psi --emit algebra produces a verifiable window") {
  const std::string p2 = scratch_path("psi2_window4.json");
  CHECK(run_cli("psi --which 2 --emit algebra --window 4 --in " +
                data_path("omega_psi2.json") + " --out " + p2)
            .exit_code == 0);
  CHECK(run_cli("verify --in " + p2 + " --window 4").exit_code == 0);

  const std::string p3 = scratch_path("psi3_window4.json");
  CHECK(run_cli("psi --which 3 --emit algebra --window 4 --in " +
                data_path("omega_psi3.json") + " --out " + p3)
            .exit_code == 0);
  CHECK(run_cli("verify --in " + p3).exit_code == 0);

  // --emit algebra needs an explicit Omega of the matching variant.
  CHECK(run_cli("psi --which 2 --emit algebra --window 4").exit_code == 2);
  CHECK(run_cli("psi --which 3 --emit algebra --window 4 --in " +
                data_path("omega_psi2.json"))
            .exit_code == 2);
  CHECK(run_cli("psi --which 1 --emit algebra --window 4").exit_code == 2);
}

TEST_CASE("cli: detect recognizes Heisenberg tables and rejects others") {
  const CliResult ok = run_cli("detect --in " + data_path("h3.json"));
  CHECK(ok.exit_code == 0);
  const Json j = parse_out(ok);
  CHECK(j.at("recognized") == true);
  CHECK(j.at("k") == 1);
  CHECK(j.at("dimension") == 3);
  CHECK(j.at("reason").is_null());
  REQUIRE(j.at("to_canonical").is_array());
  CHECK(j.at("to_canonical").size() == 3);

  const std::string ab = scratch_path("abelian3.json");
  {
    std::ofstream f(ab);
    f << R"({"name":"ab3","basis":["a","b","c"],"products":[]})";
  }
  const CliResult rej = run_cli("detect --in " + ab);
  CHECK(rej.exit_code == 1);
  const Json jr = parse_out(rej);
  CHECK(jr.at("recognized") == false);
  CHECK(jr.at("reason") == "CenterDim");
  CHECK(jr.at("k").is_null());

  const CliResult notlie =
      run_cli("detect --in " + data_path("h3_perturbed.json"));
  CHECK(notlie.exit_code == 1);
  CHECK(parse_out(notlie).at("reason") == "NotLie");
}

TEST_CASE("cli: invariants fingerprint a full table only") {
  const CliResult r = run_cli("invariants --in " + data_path("h3.json"));
  CHECK(r.exit_code == 0);
  const Json j = parse_out(r);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("lower_central") == Json::array({3, 1, 0}));

  const std::string w = scratch_path("windowed_for_invariants.json");
  CHECK(run_cli("fock --n 3 --deg 3 --out " + w).exit_code == 0);
  CHECK(run_cli("invariants --in " + w).exit_code == 2);
}

TEST_CASE("cli: solve handles built-in templates") {
  const CliResult hfl = run_cli("solve --builtin hfl --n 3 --deg 4");
  CHECK(hfl.exit_code == 0);
  const Json jh = parse_out(hfl);
  CHECK(jh.at("rank") == 30);
  CHECK(jh.at("free_params").empty());

  const CliResult fam = run_cli("solve --builtin minrep-m1");
  CHECK(fam.exit_code == 0);
  const Json jf = parse_out(fam);
  CHECK(jf.at("rank") == 15);
  CHECK(jf.at("free_params").size() == 9);

  const CliResult agr = run_cli("solve --builtin minrep-m1 --emit agreement");
  CHECK(agr.exit_code == 0);
  const Json ja = parse_out(agr);
  CHECK(ja.at("all_agree") == true);
  // One entry per family slot: 15 determined plus 9 free.
  CHECK(ja.at("coefficients").size() == 24);

  CHECK(run_cli("solve --builtin hfl --n 4 --deg 4").exit_code == 2);
  CHECK(run_cli("solve --builtin bogus").exit_code == 2);
  CHECK(run_cli("solve --builtin hfl --n 3 --deg 4 --emit agreement")
            .exit_code == 2);
  CHECK(run_cli("solve --builtin minrep-general --m 1").exit_code == 2);
  CHECK(run_cli("solve --in x.json --builtin hfl").exit_code == 2);
}

TEST_CASE("cli: global --verbose prints a human summary on stderr") {
  const CliResult r = run_cli("--verbose verify --in " + data_path("h3.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("pass") != std::string::npos);

  const CliResult c = run_cli("-v classify --params 1,2,3,4,5,6,7,8,9");
  CHECK(c.exit_code == 0);
  CHECK(c.err.find("entry 14") != std::string::npos);

  // Non-verbose runs keep stderr silent on success.
  const CliResult q = run_cli("verify --in " + data_path("h3.json"));
  CHECK(q.err.empty());
}
