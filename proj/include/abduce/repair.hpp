// Repair-level reasoning: repair enumeration as complements of minimal
// hitting sets of the conflict family, brave/AR entailment with witness
// repairs, conflict confinement, and conflict deltas. A Ground context pins
// one assertion universe and memoizes mask-level queries; conflicts of any
// sub-universe are the contained conflicts of the full universe.
#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "abduce/bitset.hpp"
#include "abduce/core.hpp"
#include "abduce/minimal.hpp"
#include "abduce/reasoner.hpp"

namespace abduce {

inline constexpr std::size_t kRepairCap = 100'000;

// Assertion universe with mask-level memoized queries against one Reasoner.
class Ground {
 public:
  Ground(const Reasoner& reasoner, const ABox& universe)
      : reasoner_(&reasoner), items_(universe.items()) {
    full_ = detail::require_mask_capacity(items_.size(), "ground context");
  }

  const Reasoner& reasoner() const { return *reasoner_; }
  const std::vector<Assertion>& items() const { return items_; }
  Mask full() const { return full_; }

  ABox abox_of(Mask m) const { return ABox(detail::mask_to_items(m, items_)); }

  Mask mask_of(const ABox& subset) const {
    Mask m;
    for (const Assertion& x : subset) {
      auto it = std::lower_bound(items_.begin(), items_.end(), x);
      if (it == items_.end() || !(*it == x))
        throw InvalidInput("assertion outside the ground universe: " + to_string(x));
      m.set(static_cast<int>(it - items_.begin()));
    }
    return m;
  }

  bool consistent(Mask m) const {
    auto it = consistent_memo_.find(m);
    if (it != consistent_memo_.end()) return it->second;
    bool ok = reasoner_->consistent(abox_of(m));
    consistent_memo_.emplace(m, ok);
    return ok;
  }

  bool entails(Mask m, const Assertion& obs) const {
    return reasoner_->entails(abox_of(m), obs).entailed;
  }

  // Minimal conflicts of the full universe (masks in ascending order).
  const std::vector<Mask>& conflicts() const {
    if (!conflicts_) {
      std::vector<Mask> masks;
      for (const ABox& c : reasoner_->min_conflicts(abox_of(full_))) masks.push_back(mask_of(c));
      std::sort(masks.begin(), masks.end());
      conflicts_ = std::move(masks);
    }
    return *conflicts_;
  }

  // Minimal conflicts of the sub-universe y: exactly the contained ones.
  std::vector<Mask> conflicts_within(Mask y) const {
    std::vector<Mask> out;
    for (const Mask& c : conflicts())
      if (c.subset_of(y)) out.push_back(c);
    return out;
  }

  // Maximal consistent subsets of y: complements in y of the minimal hitting
  // sets of y's conflicts.
  std::vector<Mask> repairs_within(Mask y, std::size_t cap = kRepairCap) const {
    std::vector<Mask> confl = conflicts_within(y);
    if (confl.empty()) return {y};
    std::vector<Mask> hits =
        min_hitting_sets(confl, {kSubsetExplorationBudget, "repair enumeration"}, cap);
    std::vector<Mask> out;
    out.reserve(hits.size());
    for (const Mask& h : hits) out.push_back(y - h);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Greedy maximal consistent extension of a consistent seed, taking
  // assertions in canonical order; always lands on a repair containing seed.
  Mask extend_to_repair(Mask seed) const {
    Mask out = seed;
    full_.for_each([&](int i) {
      if (out.test(i)) return;
      Mask trial = out;
      trial.set(i);
      if (consistent(trial)) out = trial;
    });
    return out;
  }

 private:
  const Reasoner* reasoner_;
  std::vector<Assertion> items_;
  Mask full_;
  mutable std::optional<std::vector<Mask>> conflicts_;
  mutable std::unordered_map<Mask, bool, MaskHash> consistent_memo_;
};

namespace detail {

inline std::vector<ABox> sorted_aboxes(const Ground& g, const std::vector<Mask>& masks) {
  std::vector<ABox> out;
  out.reserve(masks.size());
  for (const Mask& m : masks) out.push_back(g.abox_of(m));
  std::sort(out.begin(), out.end(),
            [](const ABox& x, const ABox& y) { return x.items() < y.items(); });
  return out;
}

}  // namespace detail

// All repairs (maximal consistent subsets) of `abox`, canonically ordered.
inline std::vector<ABox> repairs(const Reasoner& reasoner, const ABox& abox,
                                 std::size_t cap = kRepairCap) {
  Ground g(reasoner, abox);
  return detail::sorted_aboxes(g, g.repairs_within(g.full(), cap));
}

inline std::vector<ABox> repairs(const KB& kb, std::size_t cap = kRepairCap) {
  Reasoner reasoner(kb);
  return repairs(reasoner, kb.abox, cap);
}

// Entailment in some repair; carries a witnessing repair when true.
struct BraveResult {
  bool entailed = false;
  std::optional<ABox> witness;
};

// Entailment in every repair; carries a non-entailing repair when false.
struct ArResult {
  bool entailed = false;
  std::optional<ABox> counterexample;
};

// Brave entailment by scanning enumerated repairs (any dialect).
inline BraveResult entails_brave_via_repairs(const Reasoner& reasoner, const ABox& abox,
                                             const Assertion& obs,
                                             std::size_t cap = kRepairCap) {
  for (const ABox& r : repairs(reasoner, abox, cap))
    if (reasoner.entails(r, obs).entailed) return {true, r};
  return {false, std::nullopt};
}

// Brave entailment for the pair-clash dialects without enumerating repairs:
// some single consistent fact of the ABox must already entail the
// observation; its greedy maximal extension witnesses the claim.
inline BraveResult entails_brave_direct(const Reasoner& reasoner, const ABox& abox,
                                        const Assertion& obs) {
  const DlliteEngine* engine = reasoner.dllite();
  if (!engine)
    throw InvalidInput("direct brave entailment requires a pair-clash dialect");
  Ground g(reasoner, abox);
  const std::vector<Assertion>& items = g.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!engine->graph().self_consistent(items[i])) continue;
    if (!engine->singleton_entails(items[i], obs)) continue;
    return {true, g.abox_of(g.extend_to_repair(Mask::single(static_cast<int>(i))))};
  }
  return {false, std::nullopt};
}

inline BraveResult entails_brave(const Reasoner& reasoner, const ABox& abox, const Assertion& obs,
                                 std::size_t cap = kRepairCap) {
  if (reasoner.dllite()) return entails_brave_direct(reasoner, abox, obs);
  return entails_brave_via_repairs(reasoner, abox, obs, cap);
}

inline BraveResult entails_brave(const KB& kb, const Assertion& obs) {
  Reasoner reasoner(kb);
  return entails_brave(reasoner, kb.abox, obs);
}

// AR entailment by full classical entailment per enumerated repair.
inline ArResult entails_ar_via_repairs(const Reasoner& reasoner, const ABox& abox,
                                       const Assertion& obs, std::size_t cap = kRepairCap) {
  for (const ABox& r : repairs(reasoner, abox, cap))
    if (!reasoner.entails(r, obs).entailed) return {false, r};
  return {true, std::nullopt};
}

// AR entailment for the pair-clash dialects: precompute the single-fact
// supporters of the observation once, then each repair needs only an
// intersection test.
inline ArResult entails_ar_support_scan(const Reasoner& reasoner, const ABox& abox,
                                        const Assertion& obs, std::size_t cap = kRepairCap) {
  const DlliteEngine* engine = reasoner.dllite();
  if (!engine)
    throw InvalidInput("support-scan AR entailment requires a pair-clash dialect");
  Ground g(reasoner, abox);
  const std::vector<Assertion>& items = g.items();
  Mask supporters;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (engine->singleton_entails(items[i], obs)) supporters.set(static_cast<int>(i));
  for (const ABox& r : detail::sorted_aboxes(g, g.repairs_within(g.full(), cap)))
    if (!g.mask_of(r).intersects(supporters)) return {false, r};
  return {true, std::nullopt};
}

inline ArResult entails_ar(const Reasoner& reasoner, const ABox& abox, const Assertion& obs,
                           std::size_t cap = kRepairCap) {
  if (reasoner.dllite()) return entails_ar_support_scan(reasoner, abox, obs, cap);
  return entails_ar_via_repairs(reasoner, abox, obs, cap);
}

inline ArResult entails_ar(const KB& kb, const Assertion& obs) {
  Reasoner reasoner(kb);
  return entails_ar(reasoner, kb.abox, obs);
}

// Conflicts before and after adding a hypothesis, and the fresh ones.
struct ConflictDelta {
  std::vector<ABox> base;
  std::vector<ABox> extended;
  std::vector<ABox> fresh;
};

inline ConflictDelta new_conflicts(const Reasoner& reasoner, const ABox& abox, const ABox& hyp) {
  Ground g(reasoner, abox | hyp);
  Mask base_mask = g.mask_of(abox);
  std::vector<Mask> base, fresh;
  for (const Mask& c : g.conflicts()) (c.subset_of(base_mask) ? base : fresh).push_back(c);
  ConflictDelta delta;
  delta.base = detail::sorted_aboxes(g, base);
  delta.extended = detail::sorted_aboxes(g, g.conflicts());
  delta.fresh = detail::sorted_aboxes(g, fresh);
  return delta;
}

inline ConflictDelta new_conflicts(const KB& kb, const ABox& hyp) {
  Reasoner reasoner(kb);
  return new_conflicts(reasoner, kb.abox, hyp);
}

// Conflict-confinement verdict; carries one fresh conflict when violated.
struct ConfinementResult {
  bool confining = false;
  std::optional<ABox> fresh_conflict;
};

// Authoritative route: the conflict family must be unchanged by the addition.
inline ConfinementResult conflict_confining_by_delta(const Reasoner& reasoner, const ABox& abox,
                                                     const ABox& hyp) {
  ConflictDelta delta = new_conflicts(reasoner, abox, hyp);
  if (delta.fresh.empty()) return {true, std::nullopt};
  return {false, delta.fresh.front()};
}

// Pair-clash fast path: only singletons of the new facts and pairs touching
// a new fact can be fresh conflicts.
inline ConfinementResult conflict_confining_pair_scan(const Reasoner& reasoner, const ABox& abox,
                                                      const ABox& hyp) {
  const DlliteEngine* engine = reasoner.dllite();
  if (!engine)
    throw InvalidInput("pair-scan conflict confinement requires a pair-clash dialect");
  const ClosureGraph& cg = engine->graph();
  ABox fresh_facts;
  for (const Assertion& h : hyp)
    if (!abox.contains(h)) fresh_facts.insert(h);
  std::vector<ABox> found;
  for (const Assertion& h : fresh_facts) {
    if (!cg.self_consistent(h)) found.push_back(ABox({h}));
  }
  ABox everything = abox | hyp;
  for (const Assertion& h : fresh_facts) {
    if (!cg.self_consistent(h)) continue;
    for (const Assertion& x : everything) {
      if (x == h || !cg.self_consistent(x)) continue;
      if (!cg.pair_consistent(h, x)) found.push_back(ABox({h, x}));
    }
  }
  if (found.empty()) return {true, std::nullopt};
  std::sort(found.begin(), found.end(),
            [](const ABox& x, const ABox& y) { return x.items() < y.items(); });
  return {false, found.front()};
}

// Repair-quantified route: the new facts must sit consistently on top of
// every repair. (New facts only — re-asserting existing facts changes no
// conflicts.) On failure the fresh conflict is shrunk out of the first
// failing repair union; it necessarily contains a new fact.
inline ConfinementResult conflict_confining_by_repairs(const Reasoner& reasoner, const ABox& abox,
                                                       const ABox& hyp,
                                                       std::size_t cap = kRepairCap) {
  ABox fresh_facts;
  for (const Assertion& h : hyp)
    if (!abox.contains(h)) fresh_facts.insert(h);
  for (const ABox& r : repairs(reasoner, abox, cap)) {
    ABox joined = r | fresh_facts;
    if (reasoner.consistent(joined)) continue;
    Ground g(reasoner, joined);
    Budget budget{kSubsetExplorationBudget, "fresh conflict extraction"};
    auto inconsistent = [&](Mask m) { return !g.consistent(m); };
    Mask conflict = detail::shrink_minimal(g.full(), inconsistent, budget);
    return {false, g.abox_of(conflict)};
  }
  return {true, std::nullopt};
}

inline ConfinementResult is_conflict_confining(const Reasoner& reasoner, const ABox& abox,
                                               const ABox& hyp, std::size_t cap = kRepairCap) {
  if (reasoner.dllite()) return conflict_confining_pair_scan(reasoner, abox, hyp);
  return conflict_confining_by_repairs(reasoner, abox, hyp, cap);
}

inline ConfinementResult is_conflict_confining(const KB& kb, const ABox& hyp) {
  Reasoner reasoner(kb);
  return is_conflict_confining(reasoner, kb.abox, hyp);
}

}  // namespace abduce
