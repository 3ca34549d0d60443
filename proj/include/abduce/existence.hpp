// Hypothesis existence and enumeration.
//
// Existence is decided by the cheapest complete route available for the
// semantics/dialect/constraint combination. Unconstrained and purely
// conflict-confining cases reduce to a test on the observation itself;
// signature-restricted and non-trivial cases in pair-clash dialects reduce to
// singleton scans (optimistic semantics) or per-repair support covering
// (cautious semantics); the remaining combinations run a budgeted exhaustive
// search over the candidate space, trying small hypotheses first.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "abduce/abduction.hpp"

namespace abduce {

struct ExistenceResult {
  bool exists = false;
  std::optional<ABox> witness;
};

namespace detail {

// The trivial-hypothesis test for cautious semantics: some hypothesis exists
// iff the observation alone is one, which holds exactly when no clash of the
// extended ABox involves the observation. (Confinement alone is too weak when
// the observation is already an ABox fact inside a pre-existing clash.)
inline bool observation_unclashed(const AbductionProblem& p) {
  for (const ABox& clash : p.reasoner->min_conflicts(p.kb.abox | ABox({p.obs})))
    if (clash.contains(p.obs)) return false;
  return true;
}

// Hypotheses never need facts the ABox already has: dropping them leaves the
// union, the constraints, and the entailment unchanged.
inline constexpr std::size_t kFullLatticeLimit = 64;
inline constexpr std::size_t kDeepeningMaxSize = 6;

inline std::optional<ABox> lattice_search(const AbductionProblem& p, const Constraints& c) {
  ABox trivial({p.obs});
  if (is_hypothesis(p, trivial, c)) return trivial;
  std::vector<Assertion> pool = minimality_pool(p, c);
  Budget budget{kSubsetExplorationBudget, "hypothesis existence search"};
  bool complete = pool.size() <= kFullLatticeLimit;
  std::size_t max_size = complete ? pool.size() : kDeepeningMaxSize;
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::optional<ABox> found;
    for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
      budget.charge();
      ABox cand = pick_items(pool, idx);
      if (!is_hypothesis(p, cand, c)) return false;
      found = std::move(cand);
      return true;
    });
    if (found) return found;
  }
  if (!complete)
    throw BudgetExceeded("existence search exhausted hypotheses of size " +
                         std::to_string(kDeepeningMaxSize) + " over " +
                         std::to_string(pool.size()) + " candidates");
  return std::nullopt;
}

}  // namespace detail

// Is there an AR-hypothesis drawn from `candidates`? Decided by the support
// covering of repairs; the witness collects one tolerated supporting fact per
// repair. Pair-clash dialects only.
inline ExistenceResult ar_exists_within(const AbductionProblem& p, const ABox& candidates) {
  if (p.semantics != Semantics::Ar)
    throw InvalidInput("support covering decides cautious hypotheses only");
  ArWithinResult r = ar_hypothesis_within(*p.reasoner, p.kb.abox, candidates, p.obs);
  return {r.exists, std::move(r.witness)};
}

// Does any hypothesis satisfying the constraints exist? Returns a witness
// when one does, preferring the observation itself over larger candidates.
inline ExistenceResult exists_hypothesis(const AbductionProblem& p, const Constraints& c = {}) {
  if (c.signature_restricted && !p.sig)
    throw InvalidInput("signature-restricted search needs a problem signature");
  const bool flagged = c.signature_restricted || c.non_trivial;

  switch (p.semantics) {
    case Semantics::Classical:
      break;  // no shortcut known; fall through to the search

    case Semantics::Brave:
      if (!flagged && !c.conflict_confining) {
        // A satisfiable observation extends to a repair containing it.
        if (p.reasoner->concept_satisfiable(p.obs.pred)) return {true, ABox({p.obs})};
        return {};
      }
      if (is_dllite(p.kb.dialect)) {
        if (!flagged) {
          // Conflict-confining only: the observation is decisive, since any
          // confined hypothesis shelters a clash-free singleton whose fresh
          // clashes would also be fresh clashes of the observation.
          if (detail::observation_unclashed(p)) return {true, ABox({p.obs})};
          return {};
        }
        // Any constrained hypothesis shelters a one-assertion one, and every
        // constraint here is inherited by subsets; scanning singletons of the
        // candidate space is therefore conclusive.
        ABox trivial({p.obs});
        if (is_hypothesis(p, trivial, c)) return {true, std::move(trivial)};
        for (const Assertion& beta : detail::minimality_pool(p, c)) {
          ABox single({beta});
          if (is_hypothesis(p, single, c)) return {true, std::move(single)};
        }
        return {};
      }
      break;  // conjunctions can explain what no single assertion does

    case Semantics::Ar:
      if (!flagged) {
        // With or without the confinement flag: an AR-hypothesis exists iff
        // the observation is unclashed, and then the observation itself is a
        // confined witness.
        if (detail::observation_unclashed(p)) return {true, ABox({p.obs})};
        return {};
      }
      if (is_dllite(p.kb.dialect) && !c.conflict_confining) {
        ABox candidates =
            candidate_universe(p.kb, p.obs, c.signature_restricted ? p.sig : std::nullopt);
        if (c.non_trivial) candidates.erase(p.obs);
        return ar_exists_within(p, candidates);
      }
      break;  // confinement interacts with the other flags; search honestly
  }

  std::optional<ABox> found = detail::lattice_search(p, c);
  if (found) return {true, std::move(*found)};
  return {};
}

// The first `limit` hypotheses in canonical order (smaller first, then
// lexicographic), each verified against the constraints and minimality
// notion. Deterministic; candidates never include facts of the ABox.
inline std::vector<ABox> enumerate_hypotheses(const AbductionProblem& p, const Constraints& c = {},
                                              Minimality m = Minimality::None,
                                              std::size_t limit = 16) {
  std::vector<ABox> out;
  if (limit == 0) return out;
  std::vector<Assertion> pool = detail::minimality_pool(p, c);
  Budget budget{kSubsetExplorationBudget, "hypothesis enumeration"};
  bool complete = pool.size() <= detail::kFullLatticeLimit;
  std::size_t max_size = complete ? pool.size() : detail::kDeepeningMaxSize;
  for (std::size_t k = 1; k <= max_size && out.size() < limit; ++k) {
    detail::for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
      budget.charge();
      ABox cand = detail::pick_items(pool, idx);
      if (verify_hypothesis(p, cand, c, m).valid) out.push_back(std::move(cand));
      return out.size() >= limit;
    });
  }
  if (out.size() < limit && !complete)
    throw BudgetExceeded("enumeration exhausted hypotheses of size " +
                         std::to_string(detail::kDeepeningMaxSize) + " over " +
                         std::to_string(pool.size()) + " candidates");
  return out;
}

}  // namespace abduce
