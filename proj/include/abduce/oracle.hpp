// Brute-force reference implementations used to validate the engine:
// a finite-model enumeration oracle (ground DPLL over named individuals plus
// canonical witness nodes) and subset-enumeration oracles for conflicts,
// supports, and repairs. Deliberately independent of the closure-graph and
// saturation reasoners.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "abduce/core.hpp"

namespace abduce {

// ---------------------------------------------------------------------------
// A tiny DPLL SAT solver over CNF with int literals (±(var+1)).

class MiniSolver {
 public:
  int new_var() { return nvars_++; }
  void add_clause(std::vector<int> lits) { clauses_.push_back(std::move(lits)); }
  void add_unit(int lit) { clauses_.push_back({lit}); }

  bool solve() const {
    std::vector<int> assign(nvars_, 0);  // 0 unknown, 1 true, -1 false
    return search(assign);
  }

 private:
  bool propagate(std::vector<int>& assign) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& cl : clauses_) {
        int unassigned = 0, last = 0;
        bool satisfied = false;
        for (int lit : cl) {
          int v = assign[std::abs(lit) - 1];
          if (v == 0) {
            ++unassigned;
            last = lit;
          } else if ((v > 0) == (lit > 0)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;  // conflict
        if (unassigned == 1) {
          assign[std::abs(last) - 1] = last > 0 ? 1 : -1;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(std::vector<int> assign) const {
    if (!propagate(assign)) return false;
    for (int v = 0; v < nvars_; ++v) {
      if (assign[v] != 0) continue;
      for (int phase : {1, -1}) {
        std::vector<int> next = assign;
        next[v] = phase;
        if (search(std::move(next))) return true;
      }
      return false;
    }
    return true;  // all assigned, no conflict
  }

  int nvars_ = 0;
  std::vector<std::vector<int>> clauses_;
};

// ---------------------------------------------------------------------------
// Finite-model enumeration oracle. The domain is the set of named individuals
// plus one witness node per existential subconcept of the TBox (the canonical-
// model bound for the dialects at hand), plus one probe node so the domain is
// never empty. Consistency is satisfiability of the ground encoding.

class ModelOracle {
 public:
  explicit ModelOracle(const KB& kb) : kb_(kb) {}

  bool consistent(const ABox& abox) const { return run(abox, nullptr); }

  // Classical entailment: vacuously true on inconsistent ABoxes.
  bool entails(const ABox& abox, const Assertion& obs) const {
    if (!consistent(abox)) return true;
    return !run(abox, &obs);
  }

  bool concept_sat(Symbol name) const {
    ABox one(std::vector<Assertion>{
        Assertion::concept_assertion(name, Symbol::individual("oracle_probe"))});
    return consistent(one);
  }

 private:
  struct Env {
    MiniSolver sat;
    int ndom = 0;
    std::map<std::pair<Symbol, int>, int> concept_var;           // (name, node)
    std::map<std::tuple<Symbol, int, int>, int> role_var;        // (name, from, to)
    int true_var = -1, false_var = -1;
  };

  static int concept_atom(Env& env, Symbol name, int d) {
    auto key = std::make_pair(name, d);
    auto it = env.concept_var.find(key);
    if (it != env.concept_var.end()) return it->second;
    int v = env.sat.new_var();
    env.concept_var.emplace(key, v);
    return v;
  }

  static int role_atom(Env& env, Symbol name, int from, int to) {
    auto key = std::make_tuple(name, from, to);
    auto it = env.role_var.find(key);
    if (it != env.role_var.end()) return it->second;
    int v = env.sat.new_var();
    env.role_var.emplace(key, v);
    return v;
  }

  static int edge_atom(Env& env, const Role& q, int from, int to) {
    return q.inverted ? role_atom(env, q.name, to, from) : role_atom(env, q.name, from, to);
  }

  // Returns a literal variable equivalent to "d satisfies c" (Tseitin).
  static int encode(Env& env, const ConceptRef& c, int d) {
    switch (c->kind) {
      case ConceptKind::Top: {
        if (env.true_var < 0) {
          env.true_var = env.sat.new_var();
          env.sat.add_unit(env.true_var + 1);
        }
        return env.true_var;
      }
      case ConceptKind::Bot: {
        if (env.false_var < 0) {
          env.false_var = env.sat.new_var();
          env.sat.add_unit(-(env.false_var + 1));
        }
        return env.false_var;
      }
      case ConceptKind::Atomic: return concept_atom(env, c->name, d);
      case ConceptKind::Not: {
        int inner = encode(env, c->left, d);
        int v = env.sat.new_var();
        env.sat.add_clause({-(v + 1), -(inner + 1)});
        env.sat.add_clause({v + 1, inner + 1});
        return v;
      }
      case ConceptKind::And: {
        int l = encode(env, c->left, d), r = encode(env, c->right, d);
        int v = env.sat.new_var();
        env.sat.add_clause({-(v + 1), l + 1});
        env.sat.add_clause({-(v + 1), r + 1});
        env.sat.add_clause({v + 1, -(l + 1), -(r + 1)});
        return v;
      }
      case ConceptKind::Exists: {
        int v = env.sat.new_var();
        std::vector<int> any{-(v + 1)};
        for (int e = 0; e < env.ndom; ++e) {
          int edge = edge_atom(env, c->role, d, e);
          env.sat.add_clause({v + 1, -(edge + 1)});
          any.push_back(edge + 1);
        }
        env.sat.add_clause(std::move(any));
        return v;
      }
      case ConceptKind::Some: {
        int v = env.sat.new_var();
        std::vector<int> any{-(v + 1)};
        for (int e = 0; e < env.ndom; ++e) {
          int edge = edge_atom(env, c->role, d, e);
          int filler = encode(env, c->left, e);
          int pair = env.sat.new_var();
          env.sat.add_clause({-(pair + 1), edge + 1});
          env.sat.add_clause({-(pair + 1), filler + 1});
          env.sat.add_clause({pair + 1, -(edge + 1), -(filler + 1)});
          env.sat.add_clause({v + 1, -(pair + 1)});
          any.push_back(pair + 1);
        }
        env.sat.add_clause(std::move(any));
        return v;
      }
    }
    return -1;
  }

  static void collect_existentials(const ConceptRef& c, std::vector<ConceptRef>& out) {
    if (!c) return;
    if (c->kind == ConceptKind::Some || c->kind == ConceptKind::Exists) out.push_back(c);
    collect_existentials(c->left, out);
    collect_existentials(c->right, out);
  }

  // SAT iff ⟨T, abox⟩ has a bounded model; with negated != nullptr, SAT iff a
  // bounded model violates the assertion (i.e. the entailment fails).
  bool run(const ABox& abox, const Assertion* negated) const {
    Env env;

    std::map<Symbol, int> node_of;
    auto node = [&](Symbol ind) {
      auto it = node_of.find(ind);
      if (it != node_of.end()) return it->second;
      int id = static_cast<int>(node_of.size());
      node_of.emplace(ind, id);
      return id;
    };
    for (const Assertion& x : abox) {
      node(x.a);
      if (x.is_role) node(x.b);
    }
    if (negated) {
      node(negated->a);
      if (negated->is_role) node(negated->b);
    }
    int named = static_cast<int>(node_of.size());

    std::vector<ConceptRef> existentials;
    for (const Axiom& ax : kb_.tbox) {
      if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
        collect_existentials(ci->lhs, existentials);
        collect_existentials(ci->rhs, existentials);
      }
    }
    env.ndom = named + static_cast<int>(existentials.size()) + 1;  // +1 probe

    for (const Axiom& ax : kb_.tbox) {
      if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
        for (int d = 0; d < env.ndom; ++d) {
          int l = encode(env, ci->lhs, d), r = encode(env, ci->rhs, d);
          env.sat.add_clause({-(l + 1), r + 1});
        }
      } else {
        const auto& ri = std::get<RoleInclusion>(ax);
        for (int d = 0; d < env.ndom; ++d)
          for (int e = 0; e < env.ndom; ++e) {
            int l = edge_atom(env, ri.lhs, d, e);
            int r = edge_atom(env, ri.rhs, d, e);
            env.sat.add_clause({-(l + 1), ri.rhsNegated ? -(r + 1) : r + 1});
          }
      }
    }

    for (const Assertion& x : abox) {
      if (x.is_role)
        env.sat.add_unit(role_atom(env, x.pred, node(x.a), node(x.b)) + 1);
      else
        env.sat.add_unit(concept_atom(env, x.pred, node(x.a)) + 1);
    }
    if (negated) {
      if (negated->is_role)
        env.sat.add_unit(-(role_atom(env, negated->pred, node(negated->a), node(negated->b)) + 1));
      else
        env.sat.add_unit(-(concept_atom(env, negated->pred, node(negated->a)) + 1));
    }
    return env.sat.solve();
  }

  KB kb_;
};

// ---------------------------------------------------------------------------
// Subset-enumeration oracles, parameterized by the primitive they exercise so
// they can run over either the engine or the model oracle.

using ConsistencyFn = std::function<bool(const ABox&)>;
using EntailmentFn = std::function<bool(const ABox&)>;  // fixed observation

namespace oracle_detail {

inline ABox subset_of(const std::vector<Assertion>& items, unsigned mask) {
  std::vector<Assertion> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (mask >> i & 1u) out.push_back(items[i]);
  return ABox(std::move(out));
}

inline std::vector<unsigned> masks_by_size(std::size_t n) {
  std::vector<unsigned> masks(1u << n);
  for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

}  // namespace oracle_detail

// All subset-minimal inconsistent subsets, smallest first. |abox| ≤ 20.
inline std::vector<ABox> min_conflicts_brute(const ConsistencyFn& consistent, const ABox& abox) {
  const auto& items = abox.items();
  std::vector<unsigned> kept;
  std::vector<ABox> out;
  for (unsigned m : oracle_detail::masks_by_size(items.size())) {
    bool dominated = false;
    for (unsigned k : kept)
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    ABox s = oracle_detail::subset_of(items, m);
    if (!consistent(s)) {
      kept.push_back(m);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// All subset-minimal consistent entailing subsets of `universe`, smallest first.
inline std::vector<ABox> min_supports_brute(const ConsistencyFn& consistent,
                                            const EntailmentFn& entails, const ABox& universe) {
  const auto& items = universe.items();
  std::vector<unsigned> kept;
  std::vector<ABox> out;
  for (unsigned m : oracle_detail::masks_by_size(items.size())) {
    bool dominated = false;
    for (unsigned k : kept)
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    ABox s = oracle_detail::subset_of(items, m);
    if (!consistent(s)) {
      kept.push_back(m);  // prune upward: supersets are inconsistent too
      continue;
    }
    if (entails(s)) {
      kept.push_back(m);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// All subset-maximal consistent subsets (repairs) by downward subset scan.
inline std::vector<ABox> repairs_brute(const ConsistencyFn& consistent, const ABox& abox) {
  const auto& items = abox.items();
  std::size_t n = items.size();
  std::vector<unsigned> maximal;
  auto masks = oracle_detail::masks_by_size(n);
  for (auto it = masks.rbegin(); it != masks.rend(); ++it) {
    unsigned m = *it;
    bool dominated = false;
    for (unsigned k : maximal)
      if ((k & m) == m) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (consistent(oracle_detail::subset_of(items, m))) maximal.push_back(m);
  }
  std::vector<ABox> out;
  for (unsigned m : maximal) out.push_back(oracle_detail::subset_of(items, m));
  std::sort(out.begin(), out.end(), [](const ABox& a, const ABox& b) { return a.items() < b.items(); });
  return out;
}

}  // namespace abduce
