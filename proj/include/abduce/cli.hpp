// Command-line frontend: maps subcommands onto the engine, the instance
// generators, the built-in fixtures, and the randomized self-check. Every
// command produces a JSON document on stdout whose "status" field maps 1:1
// onto the process exit code (ok=0, invalid-input=2, promise-violation=3,
// budget-exceeded=4; usage problems and self-check disagreements exit 1).
// Identical invocations on identical files print byte-identical payloads.
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abduce/abduction.hpp"
#include "abduce/existence.hpp"
#include "abduce/generators.hpp"
#include "abduce/parser.hpp"
#include "abduce/repair.hpp"
#include "abduce/selftest.hpp"

namespace abduce {

struct CommandResult {
  int exit_code = 0;
  std::string payload;  // printed to stdout as-is
};

namespace cli_detail {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file: " + path.string());
  out << text;
}

inline Semantics parse_semantics(const std::string& s) {
  if (s == "classical") return Semantics::Classical;
  if (s == "brave") return Semantics::Brave;
  if (s == "ar") return Semantics::Ar;
  throw InvalidInput("unknown semantics: " + s + " (expected classical|brave|ar)");
}

inline Minimality parse_minimality(const std::string& s) {
  if (s == "none") return Minimality::None;
  if (s == "subset") return Minimality::Subset;
  if (s == "card") return Minimality::Card;
  if (s == "subset-c") return Minimality::SubsetC;
  if (s == "card-c") return Minimality::CardC;
  throw InvalidInput("unknown minimality notion: " + s +
                     " (expected none|subset|card|subset-c|card-c)");
}

inline std::vector<std::size_t> parse_subset(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(piece, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad clause index: '" + piece + "'");
    }
    if (pos != piece.size() || value < 1)
      throw InvalidInput("clause indices are 1-based positive integers, got '" + piece + "'");
    out.push_back(static_cast<std::size_t>(value - 1));
  }
  if (out.empty() && !text.empty())
    throw InvalidInput("bad clause subset: '" + text + "'");
  return out;
}

inline Json abox_json(const ABox& a) {
  Json arr = Json::array();
  for (const Assertion& x : a) arr.push_back(to_string(x));
  return arr;
}

inline Json abox_json(const std::optional<ABox>& a) {
  return a ? abox_json(*a) : Json(nullptr);
}

inline Json aboxes_json(const std::vector<ABox>& list) {
  Json arr = Json::array();
  for (const ABox& a : list) arr.push_back(abox_json(a));
  return arr;
}

inline Json constraints_json(const Constraints& c) {
  return Json{{"signature_restricted", c.signature_restricted},
              {"non_trivial", c.non_trivial},
              {"conflict_confining", c.conflict_confining}};
}

inline std::string finish(Json doc) { return doc.dump(2) + "\n"; }

// Everything the engine-facing subcommands share.
struct CommonArgs {
  std::string kb_path;
  std::string obs_text;
  std::string semantics = "brave";
  std::string signature_path;
  std::string hyp_path;
  std::string minimality = "none";
  bool nontrivial = false;
  bool conflict_confining = false;

  KB kb() const { return parse_kb(read_file(kb_path)); }
  Assertion obs() const { return parse_assertion(obs_text); }
  Constraints constraints() const {
    Constraints c;
    c.signature_restricted = !signature_path.empty();
    c.non_trivial = nontrivial;
    c.conflict_confining = conflict_confining;
    return c;
  }
  std::optional<Signature> signature() const {
    if (signature_path.empty()) return std::nullopt;
    return parse_signature(read_file(signature_path));
  }
  AbductionProblem problem() const {
    return make_problem(kb(), obs(), parse_semantics(semantics), signature());
  }
};

inline void add_kb_option(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--kb", a.kb_path, "knowledge base file")->required();
}

inline void add_problem_options(CLI::App* cmd, CommonArgs& a) {
  add_kb_option(cmd, a);
  cmd->add_option("--obs", a.obs_text, "observation, e.g. \"A(a)\"")->required();
  cmd->add_option("--semantics", a.semantics, "classical|brave|ar (default brave)");
  cmd->add_option("--signature", a.signature_path, "signature file restricting hypotheses");
  cmd->add_flag("--nontrivial", a.nontrivial, "forbid the observation inside the hypothesis");
  cmd->add_flag("--conflict-confining", a.conflict_confining,
                "forbid hypotheses that create fresh conflicts");
}

inline Json gen_payload(const ReductionInstance& inst) {
  Json doc;
  doc["status"] = "ok";
  doc["op"] = "gen";
  doc["mode"] = inst.mode;
  doc["source_kind"] = inst.source_kind;
  doc["obs"] = to_string(inst.obs);
  doc["semantics"] = to_string(inst.semantics);
  doc["constraints"] = constraints_json(inst.constraints);
  doc["minimality"] = to_string(inst.minimality);
  doc["expected"] = inst.oracle_answer;
  doc["meaning"] = inst.expected_meaning;
  doc["kb"] = serialize_kb(inst.kb);
  doc["candidate"] = abox_json(inst.candidate_hyp);
  doc["signature"] = inst.sig ? Json(serialize_signature(*inst.sig)) : Json(nullptr);
  return doc;
}

}  // namespace cli_detail

// Parses and executes one invocation. `args` excludes the program name.
inline CommandResult run_command(const std::vector<std::string>& args) {
  using cli_detail::Json;
  namespace cd = cli_detail;

  CLI::App app{"repair-based abduction over lightweight ontologies"};
  app.require_subcommand(1);

  cd::CommonArgs common;
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker cap for engine internals")
      ->check(CLI::PositiveNumber);

  CLI::App* c_check = app.add_subcommand("check", "report knowledge-base consistency");
  cd::add_kb_option(c_check, common);

  CLI::App* c_repairs = app.add_subcommand("repairs", "list all repairs");
  cd::add_kb_option(c_repairs, common);

  CLI::App* c_conflicts = app.add_subcommand("conflicts", "list all minimal conflicts");
  cd::add_kb_option(c_conflicts, common);

  CLI::App* c_entail = app.add_subcommand("entail", "decide entailment of an observation");
  cd::add_kb_option(c_entail, common);
  c_entail->add_option("--obs", common.obs_text, "observation, e.g. \"A(a)\"")->required();
  c_entail->add_option("--semantics", common.semantics, "classical|brave|ar (default brave)");

  CLI::App* c_exist = app.add_subcommand("exist", "decide whether any hypothesis exists");
  cd::add_problem_options(c_exist, common);

  CLI::App* c_verify = app.add_subcommand("verify", "check one candidate hypothesis");
  cd::add_problem_options(c_verify, common);
  c_verify->add_option("--hyp", common.hyp_path, "candidate hypothesis file")->required();
  c_verify->add_option("--minimality", common.minimality,
                       "none|subset|card|subset-c|card-c (default none)");

  std::size_t limit = 16;
  CLI::App* c_enum = app.add_subcommand("enumerate", "list hypotheses in canonical order");
  cd::add_problem_options(c_enum, common);
  c_enum->add_option("--limit", limit, "maximum number of hypotheses (default 16)");
  c_enum->add_option("--minimality", common.minimality,
                     "none|subset|card|subset-c|card-c (default none)");

  std::string gen_mode, cnf_path, qbf_path, graph_path, out_dir, subset_text;
  CLI::App* c_gen = app.add_subcommand("gen", "build an abduction instance from a source file");
  c_gen->add_option("--mode", gen_mode, "generation mode")->required();
  c_gen->add_option("--cnf", cnf_path, "DIMACS clause-set source");
  c_gen->add_option("--qbf", qbf_path, "QDIMACS source");
  c_gen->add_option("--graph", graph_path, "edge-list digraph source");
  c_gen->add_option("--out", out_dir, "directory for the emitted instance files");
  c_gen->add_option("--subset", subset_text, "1-based clause indices, e.g. 1,3,4");

  std::string example_name;
  CLI::App* c_example = app.add_subcommand("example", "print a built-in worked fixture");
  c_example->add_option("name", example_name, "fixture name")->required();

  std::uint64_t seed = 1;
  int rounds = 25;
  CLI::App* c_selftest =
      app.add_subcommand("selftest", "replay fixtures and fuzz the engine against oracles");
  c_selftest->add_option("--seed", seed, "random seed (default 1)");
  c_selftest->add_option("--rounds", rounds, "fuzz rounds (default 25)");

  for (CLI::App* cmd : {c_check, c_repairs, c_conflicts, c_entail, c_exist, c_verify, c_enum,
                        c_gen, c_example, c_selftest})
    cmd->fallthrough();  // lets --jobs appear after the subcommand too

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    Json doc{{"status", "usage-error"}, {"error", e.what()}};
    return {1, cd::finish(doc)};
  }

  try {
    if (c_check->parsed()) {
      Reasoner r(common.kb());
      Json doc{{"status", "ok"}, {"op", "check"}, {"consistent", r.kb_consistent()}};
      return {0, cd::finish(doc)};
    }
    if (c_repairs->parsed()) {
      std::vector<ABox> list = repairs(common.kb());
      Json doc{{"status", "ok"},
               {"op", "repairs"},
               {"count", list.size()},
               {"repairs", cd::aboxes_json(list)}};
      return {0, cd::finish(doc)};
    }
    if (c_conflicts->parsed()) {
      KB kb = common.kb();
      Reasoner r(kb);
      std::vector<ABox> list = r.min_conflicts(kb.abox);
      Json doc{{"status", "ok"},
               {"op", "conflicts"},
               {"count", list.size()},
               {"conflicts", cd::aboxes_json(list)}};
      return {0, cd::finish(doc)};
    }
    if (c_entail->parsed()) {
      KB kb = common.kb();
      Assertion obs = common.obs();
      Semantics sem = cd::parse_semantics(common.semantics);
      Json doc{{"status", "ok"}, {"op", "entail"}, {"semantics", to_string(sem)}};
      switch (sem) {
        case Semantics::Classical: {
          Reasoner r(kb);
          EntailResult res = r.entails(kb.abox, obs);
          doc["entailed"] = res.entailed;
          doc["vacuous"] = res.vacuous;
          break;
        }
        case Semantics::Brave: {
          BraveResult res = entails_brave(kb, obs);
          doc["entailed"] = res.entailed;
          doc["witness"] = cd::abox_json(res.witness);
          break;
        }
        case Semantics::Ar: {
          ArResult res = entails_ar(kb, obs);
          doc["entailed"] = res.entailed;
          doc["counterexample"] = cd::abox_json(res.counterexample);
          break;
        }
      }
      return {0, cd::finish(doc)};
    }
    if (c_exist->parsed()) {
      AbductionProblem p = common.problem();
      ExistenceResult res = exists_hypothesis(p, common.constraints());
      Json doc{{"status", "ok"},
               {"op", "exist"},
               {"semantics", to_string(p.semantics)},
               {"constraints", cd::constraints_json(common.constraints())},
               {"exists", res.exists},
               {"witness", cd::abox_json(res.witness)}};
      return {0, cd::finish(doc)};
    }
    if (c_verify->parsed()) {
      AbductionProblem p = common.problem();
      ABox hyp = parse_abox(cd::read_file(common.hyp_path));
      Minimality m = cd::parse_minimality(common.minimality);
      HypothesisVerdict v = verify_hypothesis(p, hyp, common.constraints(), m);
      Json doc{{"status", "ok"},
               {"op", "verify"},
               {"semantics", to_string(p.semantics)},
               {"constraints", cd::constraints_json(common.constraints())},
               {"minimality", to_string(m)},
               {"valid", v.valid},
               {"reasons", v.reasons},
               {"witness", cd::abox_json(v.witness_repair)},
               {"counterexample", cd::abox_json(v.counterexample)},
               {"counterexample_kind",
                v.counterexample_kind.empty() ? Json(nullptr) : Json(v.counterexample_kind)},
               {"fresh_conflicts", v.counterexample_kind == "fresh-conflict"
                                       ? cd::aboxes_json({*v.counterexample})
                                       : Json::array()},
               {"experimental", v.experimental}};
      return {0, cd::finish(doc)};
    }
    if (c_enum->parsed()) {
      AbductionProblem p = common.problem();
      Minimality m = cd::parse_minimality(common.minimality);
      std::vector<ABox> list = enumerate_hypotheses(p, common.constraints(), m, limit);
      Json doc{{"status", "ok"},
               {"op", "enumerate"},
               {"semantics", to_string(p.semantics)},
               {"constraints", cd::constraints_json(common.constraints())},
               {"minimality", to_string(m)},
               {"limit", limit},
               {"count", list.size()},
               {"hypotheses", cd::aboxes_json(list)}};
      return {0, cd::finish(doc)};
    }
    if (c_gen->parsed()) {
      const int sources =
          (!cnf_path.empty() ? 1 : 0) + (!qbf_path.empty() ? 1 : 0) + (!graph_path.empty() ? 1 : 0);
      if (sources != 1)
        throw InvalidInput("gen needs exactly one of --cnf, --qbf, --graph");
      if (!subset_text.empty() && cnf_path.empty())
        throw InvalidInput("--subset requires a --cnf source");
      ReductionInstance inst;
      if (!cnf_path.empty()) {
        std::optional<std::vector<std::size_t>> subset;
        if (!subset_text.empty()) subset = cd::parse_subset(subset_text);
        inst = gen_cnf_instance(parse_dimacs(cd::read_file(cnf_path)), gen_mode, subset);
      } else if (!qbf_path.empty()) {
        inst = gen_qbf_instance(parse_qdimacs(cd::read_file(qbf_path)), gen_mode);
      } else {
        Digraph g = parse_digraph(cd::read_file(graph_path));
        inst = gen_digraph_instance(g, g.source, g.target, gen_mode);
      }
      Json doc = cd::gen_payload(inst);
      doc["out"] = out_dir.empty() ? Json(nullptr) : Json(out_dir);
      Json files = Json::array();
      if (!out_dir.empty()) {
        std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        cd::write_file(dir / "instance.kb", serialize_kb(inst.kb));
        files.push_back("instance.kb");
        if (inst.candidate_hyp) {
          cd::write_file(dir / "hypothesis.abox", serialize_abox(*inst.candidate_hyp));
          files.push_back("hypothesis.abox");
        }
        if (inst.sig) {
          cd::write_file(dir / "signature.sig", serialize_signature(*inst.sig));
          files.push_back("signature.sig");
        }
        Json meta{{"mode", inst.mode},
                  {"source_kind", inst.source_kind},
                  {"source", inst.source_text},
                  {"obs", to_string(inst.obs)},
                  {"semantics", to_string(inst.semantics)},
                  {"constraints", cd::constraints_json(inst.constraints)},
                  {"minimality", to_string(inst.minimality)},
                  {"expected", inst.oracle_answer},
                  {"meaning", inst.expected_meaning}};
        cd::write_file(dir / "meta.json", meta.dump(2) + "\n");
        files.push_back("meta.json");
      }
      doc["files"] = files;
      return {0, cd::finish(doc)};
    }
    if (c_example->parsed()) {
      ReductionInstance inst = builtin_example(example_name);
      Json doc = cd::gen_payload(inst);
      doc["op"] = "example";
      doc["name"] = example_name;
      Json extras = Json::array();
      for (const HypothesisCheck& check : inst.extra_checks)
        extras.push_back(
            Json{{"hypothesis", cd::abox_json(check.hypothesis)}, {"expected", check.expected}});
      doc["extra_checks"] = extras;
      return {0, cd::finish(doc)};
    }
    if (c_selftest->parsed()) {
      SelftestReport report = run_selftest(seed, rounds);
      Json doc{{"status", "ok"},
               {"op", "selftest"},
               {"seed", seed},
               {"rounds", rounds},
               {"checks", report.checks},
               {"failures", report.failures},
               {"notes", report.notes}};
      return {report.ok() ? 0 : 1, cd::finish(doc)};
    }
    throw InvalidInput("no subcommand executed");
  } catch (const PromiseViolation& e) {
    Json doc{{"status", "promise-violation"}, {"kind", to_string(e.kind)}, {"error", e.what()}};
    return {3, cd::finish(doc)};
  } catch (const BudgetExceeded& e) {
    Json doc{{"status", "budget-exceeded"}, {"error", e.what()}};
    return {4, cd::finish(doc)};
  } catch (const Error& e) {
    Json doc{{"status", "invalid-input"}, {"error", e.what()}};
    return {2, cd::finish(doc)};
  } catch (const std::exception& e) {
    Json doc{{"status", "invalid-input"}, {"error", e.what()}};
    return {2, cd::finish(doc)};
  }
}

}  // namespace abduce
