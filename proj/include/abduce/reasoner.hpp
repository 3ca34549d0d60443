// Dialect-dispatching reasoning façade: consistency, classical entailment,
// concept satisfiability, minimal conflicts, and minimal supports.
#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "abduce/bitset.hpp"
#include "abduce/core.hpp"
#include "abduce/dllite.hpp"
#include "abduce/elbot.hpp"
#include "abduce/minimal.hpp"

namespace abduce {

inline constexpr long kSubsetExplorationBudget = 1'000'000;

// Classical entailment result; `vacuous` marks entailment from an
// inconsistent ABox.
struct EntailResult {
  bool entailed = false;
  bool vacuous = false;
};

namespace detail {

inline std::vector<Assertion> mask_to_items(const Mask& m, const std::vector<Assertion>& items) {
  std::vector<Assertion> out;
  m.for_each([&](int i) { out.push_back(items[i]); });
  return out;
}

inline Mask require_mask_capacity(std::size_t n, const char* what) {
  if (n > static_cast<std::size_t>(Mask::capacity))
    throw BudgetExceeded(std::string(what) + ": ground set exceeds " +
                         std::to_string(Mask::capacity) + " assertions");
  return Mask::first_n(static_cast<int>(n));
}

}  // namespace detail

class Reasoner {
 public:
  explicit Reasoner(KB kb) : kb_(std::move(kb)) {
    validate_dialect(kb_);
    if (is_dllite(kb_.dialect))
      dl_.emplace(kb_.tbox);
    else
      el_.emplace(kb_.tbox);
  }

  const KB& kb() const { return kb_; }
  Dialect dialect() const { return kb_.dialect; }

  bool consistent(const ABox& a) const { return dl_ ? dl_->consistent(a) : el_->consistent(a); }
  bool kb_consistent() const { return consistent(kb_.abox); }
  bool tbox_consistent() const { return consistent(ABox{}); }

  EntailResult entails(const ABox& a, const Assertion& obs) const {
    if (!consistent(a)) return {true, true};
    return {dl_ ? dl_->entails(a, obs) : el_->entails(a, obs), false};
  }

  bool concept_satisfiable(Symbol name) const {
    return dl_ ? dl_->concept_satisfiable(name) : el_->concept_satisfiable(name);
  }

  // Exactly the subset-minimal inconsistent subsets of `a`.
  std::vector<ABox> min_conflicts(const ABox& a, long budget = kSubsetExplorationBudget) const {
    if (dl_) return dl_->min_conflicts(a);
    if (!tbox_consistent())
      throw InvalidInput(
          "the axioms are inconsistent on their own; conflicts are undefined (the empty "
          "assertion set already has no model)");
    const std::vector<Assertion>& items = a.items();
    Mask ground = detail::require_mask_capacity(items.size(), "conflict enumeration");
    std::unordered_map<Mask, bool, MaskHash> memo;
    auto inconsistent = [&](const Mask& m) {
      auto it = memo.find(m);
      if (it != memo.end()) return it->second;
      bool bad = !el_->consistent(ABox(detail::mask_to_items(m, items)));
      memo.emplace(m, bad);
      return bad;
    };
    std::vector<Mask> sets = minimal_sets(ground, inconsistent, {budget, "conflict enumeration"});
    return to_aboxes(sets, items);
  }

  // Subset-minimal consistent S ⊆ universe entailing obs.
  std::vector<ABox> min_supports(const ABox& universe, const Assertion& obs,
                                 long budget = kSubsetExplorationBudget) const {
    if (dl_) return dl_->min_supports(universe, obs);
    const std::vector<Assertion>& items = universe.items();
    Mask ground = detail::require_mask_capacity(items.size(), "support enumeration");
    // Minimal sets of the monotone predicate (inconsistent ∨ entails); the
    // consistent ones are exactly the minimal supports.
    std::unordered_map<Mask, bool, MaskHash> memo;
    auto covers = [&](const Mask& m) {
      auto it = memo.find(m);
      if (it != memo.end()) return it->second;
      bool hit = el_->entails(ABox(detail::mask_to_items(m, items)), obs);
      memo.emplace(m, hit);
      return hit;
    };
    std::vector<Mask> sets = minimal_sets(ground, covers, {budget, "support enumeration"});
    std::vector<Mask> kept;
    for (const Mask& m : sets)
      if (el_->consistent(ABox(detail::mask_to_items(m, items)))) kept.push_back(m);
    return to_aboxes(kept, items);
  }

  const DlliteEngine* dllite() const { return dl_ ? &*dl_ : nullptr; }
  const ElbotEngine* elbot() const { return el_ ? &*el_ : nullptr; }

 private:
  static std::vector<ABox> to_aboxes(const std::vector<Mask>& sets,
                                     const std::vector<Assertion>& items) {
    std::vector<ABox> out;
    out.reserve(sets.size());
    for (const Mask& m : sets) out.push_back(ABox(detail::mask_to_items(m, items)));
    std::sort(out.begin(), out.end(),
              [](const ABox& x, const ABox& y) { return x.items() < y.items(); });
    return out;
  }

  KB kb_;
  std::optional<DlliteEngine> dl_;
  std::optional<ElbotEngine> el_;
};

// --- free-function conveniences (one-shot queries) --------------------------

inline bool is_consistent(const KB& kb) { return Reasoner(kb).kb_consistent(); }

inline EntailResult entails_classical(const KB& kb, const ABox& abox, const Assertion& obs) {
  return Reasoner(kb).entails(abox, obs);
}

inline EntailResult entails_classical(const KB& kb, const Assertion& obs) {
  return entails_classical(kb, kb.abox, obs);
}

inline bool concept_satisfiable(const KB& kb, Symbol name) {
  return Reasoner(kb).concept_satisfiable(name);
}

inline std::vector<ABox> min_conflicts(const KB& kb, long budget = kSubsetExplorationBudget) {
  return Reasoner(kb).min_conflicts(kb.abox, budget);
}

inline std::vector<ABox> min_supports(const KB& kb, const ABox& universe, const Assertion& obs,
                                      long budget = kSubsetExplorationBudget) {
  return Reasoner(kb).min_supports(universe, obs, budget);
}

}  // namespace abduce
