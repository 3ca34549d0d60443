// Command-line tests: exercise the installed binary end to end over the
// sample data files, pin the documented invocations, the exit-code mapping,
// payload determinism, and the generated-instance file round-trip. The
// binary path and data directory arrive as compile definitions set by the
// build.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "abduce/cli.hpp"

using Json = nlohmann::json;

namespace {

std::string cli_path() { return ABDUCE_CLI_PATH; }
std::string data_dir() { return ABDUCE_DATA_DIR; }

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the real binary so argument handling, printing, and the process exit
// code are covered; quoting is safe because all test arguments are simple.
RunResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

Json payload_of(const RunResult& res) { return Json::parse(res.out); }

std::string data_file(const std::string& name) {
  return (std::filesystem::path(data_dir()) / name).string();
}

}  // namespace

TEST_CASE("verifying the worked medical example succeeds") {
  RunResult res = run_cli("verify --kb " + data_file("diabetes.kb") +
                          " --obs \"DiabeticComa(patient)\" --semantics ar --hyp " +
                          data_file("keto.abox"));
  CHECK(res.exit_code == 0);
  Json doc = payload_of(res);
  CHECK(doc["status"] == "ok");
  CHECK(doc["valid"] == true);
  CHECK(doc["experimental"] == false);
  CHECK(doc["fresh_conflicts"].is_array());
}

TEST_CASE("an alternative candidate fails under cautious semantics") {
  RunResult res = run_cli("verify --kb " + data_file("diabetes.kb") +
                          " --obs \"DiabeticComa(patient)\" --semantics ar --hyp " +
                          data_file("overdose.abox"));
  CHECK(res.exit_code == 0);
  Json doc = payload_of(res);
  CHECK(doc["valid"] == false);
  CHECK(doc["counterexample_kind"] == "non-entailing-repair");
}

TEST_CASE("an observation that already follows is a promise violation") {
  RunResult res = run_cli("exist --kb " + data_file("diabetes.kb") +
                          " --obs \"GlycemicCrisis(patient)\" --semantics ar");
  CHECK(res.exit_code == 3);
  Json doc = payload_of(res);
  CHECK(doc["status"] == "promise-violation");
  CHECK(doc["kind"] == "obs-already-entailed");
}

TEST_CASE("consistency, repairs, conflicts, and entailment answer over files") {
  CHECK(payload_of(run_cli("check --kb " + data_file("diabetes.kb")))["consistent"] == false);
  Json repairs = payload_of(run_cli("repairs --kb " + data_file("nonconvex.kb")));
  CHECK(repairs["count"] == 2);
  Json conflicts = payload_of(run_cli("conflicts --kb " + data_file("diabetes.kb")));
  CHECK(conflicts["count"] == 1);
  CHECK(conflicts["conflicts"][0] == Json::array({"High(l)", "Low(l)"}));
  CHECK(payload_of(run_cli("entail --kb " + data_file("diabetes.kb") +
                           " --obs \"High(l)\" --semantics brave"))["entailed"] == true);
  CHECK(payload_of(run_cli("entail --kb " + data_file("diabetes.kb") +
                           " --obs \"High(l)\" --semantics ar"))["entailed"] == false);
}

TEST_CASE("verification distinguishes confinement and reports the fresh clash") {
  RunResult direct = run_cli("verify --kb " + data_file("confinement.kb") +
                             " --obs \"A(a)\" --semantics brave --conflict-confining --hyp " +
                             data_file("direct.abox"));
  Json bad = payload_of(direct);
  CHECK(bad["valid"] == false);
  CHECK(bad["counterexample_kind"] == "fresh-conflict");
  CHECK(bad["fresh_conflicts"] == Json::array({Json::array({"A(a)", "B(a)"})}));

  Json good = payload_of(run_cli("verify --kb " + data_file("confinement.kb") +
                                 " --obs \"A(a)\" --semantics brave --conflict-confining --hyp " +
                                 data_file("indirect.abox")));
  CHECK(good["valid"] == true);
}

TEST_CASE("enumeration lists hypotheses in canonical order") {
  Json doc = payload_of(run_cli("enumerate --kb " + data_file("confinement.kb") +
                                " --obs \"A(a)\" --semantics brave --conflict-confining" +
                                " --limit 5"));
  CHECK(doc["count"] == 1);
  CHECK(doc["hypotheses"] == Json::array({Json::array({"D(a)"})}));
}

TEST_CASE("signature and non-trivial flags reach the engine") {
  RunResult res = run_cli("verify --kb " + data_file("chained.kb") +
                          " --obs \"C(m)\" --semantics classical --signature " +
                          data_file("chained.sig") + " --nontrivial --hyp " +
                          data_file("chained.abox"));
  CHECK(res.exit_code == 0);
  Json doc = payload_of(res);
  CHECK(doc["constraints"]["signature_restricted"] == true);
  CHECK(doc["constraints"]["non_trivial"] == true);
  CHECK(doc["valid"] == true);
}

TEST_CASE("generation writes a replayable instance directory") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "abduce-cli-gen-test";
  std::filesystem::remove_all(dir);
  RunResult res = run_cli("gen --mode unsat-ar-verify --cnf " +
                          data_file("trivially-unsat.cnf") + " --out " + dir.string());
  REQUIRE(res.exit_code == 0);
  Json doc = payload_of(res);
  CHECK(doc["expected"] == true);
  CHECK(doc["files"] == Json::array({"instance.kb", "hypothesis.abox", "meta.json"}));
  for (const char* name : {"instance.kb", "hypothesis.abox", "meta.json"})
    CHECK(std::filesystem::exists(dir / name));

  RunResult replay = run_cli("verify --kb " + (dir / "instance.kb").string() +
                             " --obs \"A(a)\" --semantics ar --hyp " +
                             (dir / "hypothesis.abox").string());
  CHECK(payload_of(replay)["valid"] == true);

  std::ifstream meta_in(dir / "meta.json");
  Json meta = Json::parse(meta_in);
  CHECK(meta["expected"] == true);
  CHECK(meta["mode"] == "unsat-ar-verify");
  std::filesystem::remove_all(dir);
}

TEST_CASE("generation from quantified and graph sources works end to end") {
  Json qbf = payload_of(run_cli("gen --mode pi2-subsetmin-ar-elbot --qbf " +
                                data_file("sample.qdimacs")));
  CHECK(qbf["expected"] == true);  // for all x exists y: x iff y
  CHECK(qbf["source_kind"] == "qbf");

  Json graph = payload_of(run_cli("gen --mode reach-brave-verify --graph " +
                                  data_file("sample.graph")));
  CHECK(graph["expected"] == true);  // v0 reaches v3 along the chain
  CHECK(graph["source_kind"] == "digraph");

  Json far = payload_of(run_cli("gen --mode unreach-cc --graph " + data_file("sample.graph")));
  CHECK(far["expected"] == false);
}

TEST_CASE("the clause-subset flag selects which selectors are hypothesized") {
  Json whole = payload_of(run_cli("gen --mode mus-subset-min --cnf " +
                                  data_file("trivially-unsat.cnf")));
  CHECK(whole["expected"] == true);
  Json partial = payload_of(run_cli("gen --mode mus-subset-min --subset 1 --cnf " +
                                    data_file("trivially-unsat.cnf")));
  CHECK(partial["expected"] == false);
  CHECK(partial["candidate"] == Json::array({"U(a, c1)"}));
}

TEST_CASE("built-in fixtures print with their frozen answers") {
  Json doc = payload_of(run_cli("example ar-non-convex"));
  CHECK(doc["expected"] == true);
  CHECK(doc["extra_checks"].size() == 2);
  CHECK(doc["extra_checks"][0]["expected"] == false);
  CHECK(doc["extra_checks"][1]["expected"] == true);
  RunResult missing = run_cli("example no-such-fixture");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("the self-check subcommand passes and reports its tallies") {
  RunResult res = run_cli("selftest --seed 11 --rounds 2");
  CHECK(res.exit_code == 0);
  Json doc = payload_of(res);
  CHECK(doc["failures"] == 0);
  CHECK(doc["checks"].get<long>() >= 2 * 14);
}

TEST_CASE("exit codes map onto the failure classes") {
  CHECK(run_cli("verify --kb " + data_file("diabetes.kb") + " --obs \"DiabeticComa(patient)\"" +
                " --semantics ar --hyp " + data_file("keto.abox") + " --no-such-flag")
            .exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("check --kb no/such/file.kb").exit_code == 2);
  CHECK(run_cli("entail --kb " + data_file("diabetes.kb") + " --obs \"High(l)\"" +
                " --semantics sideways")
            .exit_code == 2);
  CHECK(run_cli("gen --mode unsat-ar-verify --cnf " + data_file("sample.graph")).exit_code == 2);
  CHECK(run_cli("gen --mode no-such-mode --cnf " + data_file("trivially-unsat.cnf")).exit_code ==
        2);
  CHECK(run_cli("exist --kb " + data_file("diabetes.kb") +
                " --obs \"GlycemicCrisis(patient)\" --semantics ar")
            .exit_code == 3);
}

TEST_CASE("identical invocations print byte-identical payloads") {
  const std::string args = "verify --kb " + data_file("diabetes.kb") +
                           " --obs \"DiabeticComa(patient)\" --semantics ar --hyp " +
                           data_file("keto.abox");
  CHECK(run_cli(args).out == run_cli(args).out);
  const std::string en = "enumerate --kb " + data_file("nonconvex.kb") +
                         " --obs \"A(a)\" --semantics ar --limit 8";
  CHECK(run_cli(en).out == run_cli(en).out);
}

TEST_CASE("the in-process entry point matches the spawned binary") {
  abduce::CommandResult direct = abduce::run_command(
      {"verify", "--kb", data_file("diabetes.kb"), "--obs", "DiabeticComa(patient)",
       "--semantics", "ar", "--hyp", data_file("keto.abox")});
  RunResult spawned = run_cli("verify --kb " + data_file("diabetes.kb") +
                              " --obs \"DiabeticComa(patient)\" --semantics ar --hyp " +
                              data_file("keto.abox"));
  CHECK(direct.exit_code == spawned.exit_code);
  CHECK(direct.payload == spawned.out);
}
