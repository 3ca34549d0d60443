// Random knowledge-base generation for property tests, plus a finite-model
// safety filter so that model-enumeration over a bounded domain is a valid
// ground truth on the generated instances.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "abduce/core.hpp"

namespace fuzz {

using namespace abduce;

inline int pick(std::mt19937& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline Symbol cname(int i) {
  static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
  return Symbol::concept_name(names[i % 8]);
}

inline Symbol rname(int i) {
  static const char* names[] = {"r", "s", "t", "u"};
  return Symbol::role_name(names[i % 4]);
}

inline Symbol iname(int i) {
  static const char* names[] = {"a", "b", "c", "d", "e"};
  return Symbol::individual(names[i % 5]);
}

struct Options {
  Dialect dialect = Dialect::DlliteCore;
  int concepts = 4;
  int roles = 2;
  int individuals = 3;
  int axioms = 5;
  int assertions = 4;
  // Restrict DL-Lite TBoxes to ones whose witness requirements cannot chain
  // forever, so a fixed finite domain suffices for model search.
  bool finite_model_safe = false;
};

inline Role random_role(std::mt19937& rng, const Options& opt) {
  return Role{rname(pick(rng, opt.roles)), chance(rng, 0.5)};
}

inline ConceptRef random_basic(std::mt19937& rng, const Options& opt) {
  if (opt.roles > 0 && chance(rng, 0.35)) return Concept::exists(random_role(rng, opt));
  return Concept::atomic(cname(pick(rng, opt.concepts)));
}

inline Axiom random_dllite_axiom(std::mt19937& rng, const Options& opt) {
  if (opt.dialect == Dialect::DlliteR && opt.roles > 0 && chance(rng, 0.2))
    return RoleInclusion{random_role(rng, opt), random_role(rng, opt), chance(rng, 0.4)};
  ConceptRef lhs = random_basic(rng, opt);
  ConceptRef rhs = random_basic(rng, opt);
  if (chance(rng, 0.45)) rhs = Concept::negation(rhs);
  return ConceptInclusion{lhs, rhs};
}

inline ConceptRef random_el_concept(std::mt19937& rng, const Options& opt, int depth,
                                    bool rhs_side) {
  double roll = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (depth > 0 && roll < 0.22)
    return Concept::conj(random_el_concept(rng, opt, depth - 1, rhs_side),
                         random_el_concept(rng, opt, depth - 1, rhs_side));
  if (depth > 0 && roll < 0.42 && opt.roles > 0)
    return Concept::some(Role{rname(pick(rng, opt.roles)), false},
                         random_el_concept(rng, opt, depth - 1, rhs_side));
  if (roll > 0.95) return Concept::top();
  if (rhs_side && roll > 0.90) return Concept::bot();
  return Concept::atomic(cname(pick(rng, opt.concepts)));
}

inline Axiom random_elbot_axiom(std::mt19937& rng, const Options& opt) {
  return ConceptInclusion{random_el_concept(rng, opt, 2, false),
                          random_el_concept(rng, opt, 2, true)};
}

inline Assertion random_assertion(std::mt19937& rng, const Options& opt) {
  if (opt.roles > 0 && chance(rng, 0.3))
    return Assertion::role_assertion(rname(pick(rng, opt.roles)),
                                     iname(pick(rng, opt.individuals)),
                                     iname(pick(rng, opt.individuals)));
  return Assertion::concept_assertion(cname(pick(rng, opt.concepts)),
                                      iname(pick(rng, opt.individuals)));
}

inline Assertion random_concept_obs(std::mt19937& rng, const Options& opt) {
  return Assertion::concept_assertion(cname(pick(rng, opt.concepts)),
                                      iname(pick(rng, opt.individuals)));
}

// True when no chain of forced role successors can loop: every positive
// inclusion with an existential right-hand side is checked against the
// implied memberships of the witnesses it creates.
inline bool witness_acyclic(const KB& kb) {
  if (kb.dialect == Dialect::Elbot) return true;
  // Index basic concepts: atomics and role orientations seen in the TBox.
  std::vector<ConceptRef> basics;
  auto idx = [&](const ConceptRef& c) {
    for (std::size_t i = 0; i < basics.size(); ++i)
      if (equal(basics[i], c)) return static_cast<int>(i);
    basics.push_back(c);
    return static_cast<int>(basics.size()) - 1;
  };
  std::vector<Role> orientations;
  auto role_seen = [&](const Role& q) {
    for (const Role& o : orientations)
      if (o == q) return;
    orientations.push_back(q);
    orientations.push_back(q.inverse());
    idx(Concept::exists(q));
    idx(Concept::exists(q.inverse()));
  };
  for (const Axiom& ax : kb.tbox) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
      for (const ConceptRef& side : {ci->lhs, ci->rhs}) {
        const ConceptRef& b = side->kind == ConceptKind::Not ? side->left : side;
        if (b->kind == ConceptKind::Exists) role_seen(b->role);
        idx(b);
      }
    } else {
      const auto& ri = std::get<RoleInclusion>(ax);
      role_seen(ri.lhs);
      role_seen(ri.rhs);
    }
  }
  int n = static_cast<int>(basics.size());
  std::vector<std::vector<bool>> pos(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) pos[i][i] = true;
  for (const Axiom& ax : kb.tbox) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
      if (ci->rhs->kind != ConceptKind::Not) pos[idx(ci->lhs)][idx(ci->rhs)] = true;
    } else {
      const auto& ri = std::get<RoleInclusion>(ax);
      if (ri.rhsNegated) continue;
      pos[idx(Concept::exists(ri.lhs))][idx(Concept::exists(ri.rhs))] = true;
      pos[idx(Concept::exists(ri.lhs.inverse()))][idx(Concept::exists(ri.rhs.inverse()))] = true;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (pos[i][k])
        for (int j = 0; j < n; ++j)
          if (pos[k][j]) pos[i][j] = true;

  // dep[q][p]: satisfying an existential for q creates a witness that in turn
  // needs an existential for p.
  int m = static_cast<int>(orientations.size());
  std::vector<std::vector<bool>> dep(m, std::vector<bool>(m, false));
  auto orient_index = [&](const Role& q) {
    for (int i = 0; i < m; ++i)
      if (orientations[i] == q) return i;
    return -1;
  };
  for (const Axiom& ax : kb.tbox) {
    const auto* ci = std::get_if<ConceptInclusion>(&ax);
    if (!ci || ci->rhs->kind != ConceptKind::Exists) continue;
    int p = orient_index(ci->rhs->role);
    int lhs = idx(ci->lhs);
    for (int qi = 0; qi < m; ++qi) {
      int witness_type = idx(Concept::exists(orientations[qi].inverse()));
      if (pos[witness_type][lhs]) dep[qi][p] = true;
    }
  }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (dep[i][k])
        for (int j = 0; j < m; ++j)
          if (dep[k][j]) dep[i][j] = true;
  for (int i = 0; i < m; ++i)
    if (dep[i][i]) return false;
  return true;
}

inline KB random_kb(std::mt19937& rng, const Options& opt) {
  for (int attempt = 0; attempt < 60; ++attempt) {
    KB kb;
    kb.dialect = opt.dialect;
    for (int i = 0; i < opt.axioms; ++i)
      kb.tbox.push_back(opt.dialect == Dialect::Elbot ? random_elbot_axiom(rng, opt)
                                                      : random_dllite_axiom(rng, opt));
    std::vector<Assertion> facts;
    for (int i = 0; i < opt.assertions; ++i) facts.push_back(random_assertion(rng, opt));
    kb.abox = ABox(std::move(facts));
    if (!opt.finite_model_safe || witness_acyclic(kb)) return kb;
  }
  // Fallback: strip the axioms that can force witness chains.
  KB kb;
  kb.dialect = opt.dialect;
  for (int i = 0; i < opt.axioms; ++i) {
    Axiom ax = random_dllite_axiom(rng, opt);
    const auto* ci = std::get_if<ConceptInclusion>(&ax);
    if (ci && ci->rhs->kind == ConceptKind::Exists) continue;
    kb.tbox.push_back(ax);
  }
  std::vector<Assertion> facts;
  for (int i = 0; i < opt.assertions; ++i) facts.push_back(random_assertion(rng, opt));
  kb.abox = ABox(std::move(facts));
  return kb;
}

}  // namespace fuzz
