// Randomized self-check: builds reduction instances from seeded random
// digraphs, clause sets, and quantified formulas, runs the reasoning engine
// on each, and compares the verdict with the combinatorial answer computed
// by the generators. Also replays the built-in worked fixtures. Any
// disagreement is reported with the offending source object so the case can
// be replayed by hand.
#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "abduce/abduction.hpp"
#include "abduce/existence.hpp"
#include "abduce/generators.hpp"
#include "abduce/repair.hpp"

namespace abduce {

// Runs the engine operation an instance describes and reduces the outcome to
// one bit, the shape the generators' expected answers take. A promise
// violation counts as "no": the instance's contract only promises a valid
// abduction problem on the positive side of the encoded question.
inline bool engine_verdict(const ReductionInstance& inst) {
  if (inst.mode == "unreach-cc")
    return is_conflict_confining(inst.kb, *inst.candidate_hyp).confining;
  try {
    AbductionProblem p = make_problem(inst.kb, inst.obs, inst.semantics, inst.sig);
    if (inst.candidate_hyp)
      return verify_hypothesis(p, *inst.candidate_hyp, inst.constraints, inst.minimality).valid;
    return exists_hypothesis(p, inst.constraints).exists;
  } catch (const PromiseViolation&) {
    return false;
  }
}

inline bool engine_verdict(const ReductionInstance& inst, const ABox& candidate) {
  ReductionInstance swapped = inst;
  swapped.candidate_hyp = candidate;
  return engine_verdict(swapped);
}

struct SelftestReport {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;
  bool ok() const { return failures == 0; }
};

namespace detail {

inline int roll(std::mt19937& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

inline bool coin(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Clauses draw 1-3 distinct variables with random polarity.
inline Cnf random_clause_set(std::mt19937& rng, int max_vars, int min_clauses, int max_clauses,
                             bool dnf) {
  Cnf f;
  f.variables = 1 + roll(rng, max_vars);
  f.dnf = dnf;
  const int count = min_clauses + roll(rng, max_clauses - min_clauses + 1);
  for (int j = 0; j < count; ++j) {
    std::vector<int> vars(static_cast<std::size_t>(f.variables));
    std::iota(vars.begin(), vars.end(), 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    const int width = 1 + roll(rng, std::min(3, f.variables));
    Clause clause;
    for (int i = 0; i < width; ++i) clause.push_back(coin(rng, 0.5) ? vars[static_cast<std::size_t>(i)] : -vars[static_cast<std::size_t>(i)]);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

inline Qbf random_two_block(std::mt19937& rng, bool outer_exists, bool dnf_matrix, int max_outer,
                            int max_inner, int max_clauses) {
  const int n_outer = 1 + roll(rng, max_outer);
  const int n_inner = 1 + roll(rng, max_inner);
  Qbf q;
  q.matrix = random_clause_set(rng, n_outer + n_inner, 0, max_clauses, dnf_matrix);
  q.matrix.variables = n_outer + n_inner;
  std::vector<int> vars(static_cast<std::size_t>(n_outer + n_inner));
  std::iota(vars.begin(), vars.end(), 1);
  std::shuffle(vars.begin(), vars.end(), rng);
  q.prefix.push_back({outer_exists, {vars.begin(), vars.begin() + n_outer}});
  q.prefix.push_back({!outer_exists, {vars.begin() + n_outer, vars.end()}});
  return q;
}

inline Digraph random_digraph(std::mt19937& rng, int max_nodes) {
  const int n = 1 + roll(rng, max_nodes);
  Digraph g;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng, 0.22)) g.edges.emplace_back(names[static_cast<std::size_t>(i)],
                                                names[static_cast<std::size_t>(j)]);
  g.source = names[static_cast<std::size_t>(roll(rng, n))];
  g.target = names[static_cast<std::size_t>(roll(rng, n))];
  return g;
}

}  // namespace detail

namespace selftest_detail {

inline void record(SelftestReport& report, const ReductionInstance& inst, bool got) {
  ++report.checks;
  if (got == inst.oracle_answer) return;
  ++report.failures;
  report.notes.push_back("mode " + inst.mode + ": engine said " + (got ? "yes" : "no") +
                         ", expected " + (inst.oracle_answer ? "yes" : "no") + " for source\n" +
                         inst.source_text);
}

template <typename Make>
inline void run_case(SelftestReport& report, const std::string& label, Make&& make) {
  try {
    ReductionInstance inst = make();
    record(report, inst, engine_verdict(inst));
  } catch (const std::exception& e) {
    ++report.checks;
    ++report.failures;
    report.notes.push_back(label + ": unexpected error: " + e.what());
  }
}

}  // namespace selftest_detail

// One round exercises every generation mode once on fresh random sources;
// the built-in fixtures run once per call. All randomness derives from the
// seed, so a report is reproducible from (seed, rounds) alone.
inline SelftestReport run_selftest(std::uint64_t seed, int rounds) {
  if (rounds < 0) throw InvalidInput("rounds must be nonnegative");
  SelftestReport report;
  using selftest_detail::record;
  using selftest_detail::run_case;

  for (const char* name : {"diabetes", "ar-non-convex", "brave-cc", "non-triv", "nt-sig"}) {
    try {
      ReductionInstance inst = builtin_example(name);
      record(report, inst, engine_verdict(inst));
      for (const HypothesisCheck& check : inst.extra_checks) {
        ++report.checks;
        const bool got = engine_verdict(inst, check.hypothesis);
        if (got != check.expected) {
          ++report.failures;
          report.notes.push_back("example " + std::string(name) +
                                 ": alternative candidate answered " + (got ? "yes" : "no") +
                                 ", expected " + (check.expected ? "yes" : "no"));
        }
      }
    } catch (const std::exception& e) {
      ++report.checks;
      ++report.failures;
      report.notes.push_back("example " + std::string(name) + ": unexpected error: " + e.what());
    }
  }

  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (int round = 0; round < rounds; ++round) {
    run_case(report, "reach-brave-verify", [&] {
      Digraph g = detail::random_digraph(rng, 6);
      return gen_digraph_instance(g, g.source, g.target, "reach-brave-verify");
    });
    run_case(report, "unreach-cc", [&] {
      Digraph g = detail::random_digraph(rng, 6);
      if (g.source == g.target) g.target = g.source == "v0" ? "v1" : "v0";
      std::erase(g.edges, std::pair<std::string, std::string>{g.target, g.target});
      return gen_digraph_instance(g, g.source, g.target, "unreach-cc");
    });
    run_case(report, "unsat-ar-verify", [&] {
      return gen_cnf_instance(detail::random_clause_set(rng, 4, 0, 6, false), "unsat-ar-verify");
    });
    run_case(report, "unsat-ar-card-min", [&] {
      return gen_cnf_instance(detail::random_clause_set(rng, 3, 0, 5, false),
                              "unsat-ar-card-min");
    });
    run_case(report, "mus-subset-min", [&] {
      Cnf f = detail::random_clause_set(rng, 4, 1, 5, false);
      std::vector<std::size_t> subset;
      for (std::size_t j = 0; j < f.clauses.size(); ++j)
        if (detail::coin(rng, 0.7)) subset.push_back(j);
      return gen_cnf_instance(f, "mus-subset-min",
                              detail::coin(rng, 0.3)
                                  ? std::nullopt
                                  : std::optional<std::vector<std::size_t>>(subset));
    });
    run_case(report, "sat-sig-elbot-classical", [&] {
      return gen_cnf_instance(detail::random_clause_set(rng, 4, 1, 5, false),
                              "sat-sig-elbot-classical");
    });
    run_case(report, "sat-sig-elbot-brave", [&] {
      return gen_cnf_instance(detail::random_clause_set(rng, 4, 1, 5, false),
                              "sat-sig-elbot-brave");
    });
    run_case(report, "sat-nontrivial-elbot-classical", [&] {
      return gen_cnf_instance(detail::random_clause_set(rng, 3, 1, 4, false),
                              "sat-nontrivial-elbot-classical");
    });
    run_case(report, "forall-dnf-nontrivial-ar-dllite", [&] {
      return gen_cnf_instance(detail::random_clause_set(rng, 3, 0, 3, true),
                              "forall-dnf-nontrivial-ar-dllite");
    });
    run_case(report, "ea-sig-ar-elbot", [&] {
      return gen_qbf_instance(detail::random_two_block(rng, true, true, 2, 2, 3),
                              "ea-sig-ar-elbot");
    });
    run_case(report, "ea-nontrivial-ar-elbot", [&] {
      return gen_qbf_instance(detail::random_two_block(rng, true, true, 2, 2, 3),
                              "ea-nontrivial-ar-elbot");
    });
    run_case(report, "ae-cc-brave-elbot", [&] {
      return gen_qbf_instance(detail::random_two_block(rng, false, false, 2, 2, 3),
                              "ae-cc-brave-elbot");
    });
    run_case(report, "pi2-subsetmin-ar-elbot", [&] {
      return gen_qbf_instance(detail::random_two_block(rng, false, false, 2, 2, 3),
                              "pi2-subsetmin-ar-elbot");
    });
    run_case(report, "ae-subsetc-brave-elbot", [&] {
      return gen_qbf_instance(detail::random_two_block(rng, false, false, 2, 2, 2),
                              "ae-subsetc-brave-elbot");
    });
  }
  return report;
}

}  // namespace abduce
