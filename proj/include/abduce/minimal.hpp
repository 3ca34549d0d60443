// Subset-minimal set enumeration for monotone predicates via shrink-based
// extraction with hitting-set-guided exploration, plus minimal-hitting-set
// enumeration. All families are bitmasks over a ground element list.
#pragma once

#include <functional>
#include <set>
#include <vector>

#include "abduce/bitset.hpp"
#include "abduce/core.hpp"

namespace abduce {

struct Budget {
  long remaining;
  std::string label;

  void charge() {
    if (--remaining < 0) throw BudgetExceeded(label + ": exploration budget exhausted");
  }
};

namespace detail {

// Shrinks `s` to a subset-minimal set still satisfying `pred` (monotone).
template <typename Pred>
Mask shrink_minimal(Mask s, Pred& pred, Budget& budget) {
  Mask elems = s;
  elems.for_each([&](int i) {
    Mask cand = s;
    cand.reset(i);
    if (cand == s) return;  // already removed
    budget.charge();
    if (pred(cand)) s = cand;
  });
  return s;
}

}  // namespace detail

// All subset-minimal S ⊆ ground with pred(S), for upward-monotone pred.
// Each round searches the hitting-set lattice of the sets found so far for a
// complement on which pred still holds, then shrinks it to a new minimal set;
// when no hitting set works, the family is complete.
template <typename Pred>
std::vector<Mask> minimal_sets(Mask ground, Pred pred, Budget budget) {
  budget.charge();
  if (!pred(ground)) return {};

  std::vector<Mask> found;
  std::function<bool(Mask)> extend = [&](Mask hit) -> bool {
    budget.charge();
    const Mask* unhit = nullptr;
    for (const Mask& f : found)
      if (!f.intersects(hit)) {
        unhit = &f;
        break;
      }
    if (!unhit) {
      Mask rest = ground - hit;
      budget.charge();
      if (!pred(rest)) return false;
      found.push_back(detail::shrink_minimal(rest, pred, budget));
      return true;
    }
    bool done = false;
    unhit->for_each([&](int e) {
      if (done) return;
      Mask next = hit;
      next.set(e);
      if (extend(next)) done = true;
    });
    return done;
  };

  while (extend(Mask{})) {
  }
  std::sort(found.begin(), found.end());
  return found;
}

// All minimal hitting sets of `sets` (each must be non-empty), as an
// antichain. `cap` bounds the result size.
inline std::vector<Mask> min_hitting_sets(const std::vector<Mask>& sets, Budget budget,
                                          std::size_t cap) {
  for (const Mask& s : sets)
    if (s.empty()) throw InvalidInput("hitting sets of a family containing the empty set");

  std::set<Mask> out;
  std::function<void(Mask)> extend = [&](Mask hit) {
    budget.charge();
    const Mask* unhit = nullptr;
    for (const Mask& f : sets)
      if (!f.intersects(hit)) {
        unhit = &f;
        break;
      }
    if (!unhit) {
      out.insert(hit);
      if (out.size() > cap) throw BudgetExceeded(budget.label + ": too many hitting sets");
      return;
    }
    unhit->for_each([&](int e) {
      Mask next = hit;
      next.set(e);
      extend(next);
    });
  };
  extend(Mask{});

  // The search yields irredundant hitting sets; filter to the minimal ones.
  std::vector<Mask> result;
  for (const Mask& h : out) {
    bool minimal = true;
    for (const Mask& other : out)
      if (!(other == h) && other.subset_of(h)) {
        minimal = false;
        break;
      }
    if (minimal) result.push_back(h);
  }
  return result;
}

}  // namespace abduce
