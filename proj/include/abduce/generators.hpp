// Instance generators: turn digraphs, clause sets, and quantified Boolean
// formulas into abduction problems whose expected answers are fixed by the
// independent combinatorial oracles (reachability, satisfiability, QBF
// truth, minimal-unsatisfiability), plus built-in worked fixtures. The
// expected answer of every generated instance is computed here from the
// source object alone — never by the reasoning engine that is later checked
// against it.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abduce/abduction.hpp"
#include "abduce/core.hpp"
#include "abduce/parser.hpp"
#include "abduce/propositional.hpp"

namespace abduce {

// An additional candidate/answer pair carried by the built-in fixtures.
struct HypothesisCheck {
  ABox hypothesis;
  bool expected = false;
};

// A ready-to-run abduction instance bundled with its source object and the
// independently computed answer. `candidate_hyp` present means the contract
// is verification-shaped (the candidate is valid iff `oracle_answer`);
// absent means existence-shaped (a hypothesis under `constraints` exists iff
// `oracle_answer`). The `unreach-cc` mode is the one exception: its contract
// is plain conflict-confinement of the candidate, with no entailment part.
struct ReductionInstance {
  std::string source_kind;  // "digraph" | "cnf" | "qbf" | "builtin"
  std::string mode;
  std::string source_text;
  KB kb;
  Assertion obs;
  Semantics semantics = Semantics::Brave;
  std::optional<Signature> sig;
  Constraints constraints;
  Minimality minimality = Minimality::None;
  std::optional<ABox> candidate_hyp;
  bool oracle_answer = false;
  std::string expected_meaning;
  std::vector<HypothesisCheck> extra_checks;
};

namespace detail {

inline ConceptRef atom(const std::string& name) {
  return Concept::atomic(Symbol::concept_name(name));
}

inline Axiom incl(ConceptRef lhs, ConceptRef rhs) {
  return ConceptInclusion{std::move(lhs), std::move(rhs)};
}

// (lhs and rhs) <= bot — the conjunction-free dialects express the same
// disjointness as lhs <= not(rhs) instead.
inline Axiom disjoint_el(ConceptRef lhs, ConceptRef rhs) {
  return incl(Concept::conj(std::move(lhs), std::move(rhs)), Concept::bot());
}

inline ConceptRef conj_all(std::vector<ConceptRef> parts) {
  if (parts.empty()) return Concept::top();
  ConceptRef out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Concept::conj(out, parts[i]);
  return out;
}

inline Assertion ca(const std::string& concept_name, const std::string& individual) {
  return Assertion::concept_assertion(Symbol::concept_name(concept_name),
                                      Symbol::individual(individual));
}

inline Assertion ra(const std::string& role_name, const std::string& from,
                    const std::string& to) {
  return Assertion::role_assertion(Symbol::role_name(role_name), Symbol::individual(from),
                                   Symbol::individual(to));
}

// Concept names for propositional literals: Tx_<v> asserts variable v true,
// Fx_<v> asserts it false. `lit_name(+v)` is the concept made true by the
// literal, `lit_name(-v)` likewise; the optional prefix pair swaps in other
// stems (e.g. Ty_/Fy_) where a construction separates variable groups.
inline std::string lit_name(int lit, const char* pos = "Tx_", const char* neg = "Fx_") {
  return (lit > 0 ? std::string(pos) : std::string(neg)) + std::to_string(std::abs(lit));
}

inline ConceptRef lit_concept(int lit) { return atom(lit_name(lit)); }

// The concept falsified by the literal (opposite polarity, same variable).
inline ConceptRef anti_lit_concept(int lit, const char* pos = "Tx_", const char* neg = "Fx_") {
  return atom(lit_name(-lit, pos, neg));
}

inline std::string clause_name(std::size_t j) { return "Cc_" + std::to_string(j + 1); }

inline std::string node_concept(const std::string& node) { return "Av_" + node; }

inline void require_cnf_form(const Cnf& f, const std::string& mode) {
  if (f.dnf) throw InvalidSource(mode + " expects a conjunctive (CNF) source");
}

inline void require_dnf_form(const Cnf& f, const std::string& mode) {
  if (!f.dnf) throw InvalidSource(mode + " expects a disjunctive (DNF) source");
}

inline void require_clauses(const Cnf& f, const std::string& mode) {
  if (f.clauses.empty()) throw InvalidSource(mode + " needs at least one clause");
}

// Two-block prefix check; returns (outer variables, inner variables).
inline std::pair<std::vector<int>, std::vector<int>> require_prefix(const Qbf& q,
                                                                    bool outer_exists,
                                                                    const std::string& mode) {
  if (q.prefix.size() != 2 || q.prefix[0].exists != outer_exists ||
      q.prefix[1].exists == outer_exists)
    throw InvalidSource(mode + " expects a two-block " +
                        (outer_exists ? std::string("exists-forall") : "forall-exists") +
                        " prefix");
  return {q.prefix[0].variables, q.prefix[1].variables};
}

inline std::set<std::pair<std::string, std::string>> edge_set(const Digraph& g) {
  return {g.edges.begin(), g.edges.end()};
}

// --- digraph constructions -------------------------------------------------------

// One inclusion per edge, a disjoint dummy pair to break consistency, and the
// source concept as candidate explanation of the target concept.
inline ReductionInstance gen_reach_brave_verify(const Digraph& g, const std::string& s,
                                                const std::string& t) {
  ReductionInstance inst;
  inst.kb.dialect = Dialect::DlliteCore;
  for (const auto& [u, v] : edge_set(g))
    inst.kb.tbox.push_back(incl(atom(node_concept(u)), atom(node_concept(v))));
  inst.kb.tbox.push_back(incl(atom("B1"), Concept::negation(atom("B2"))));
  inst.kb.abox = ABox({ca("B1", "b"), ca("B2", "b")});
  inst.obs = ca(node_concept(t), "a");
  inst.semantics = Semantics::Brave;
  inst.candidate_hyp = ABox({ca(node_concept(s), "a")});
  inst.oracle_answer = reachable(g, s, t);
  inst.expected_meaning =
      "the candidate hypothesis verifies under brave semantics iff a path runs from " + s +
      " to " + t;
  return inst;
}

// Inclusions avoid the target concept except for a back-edge to the source
// and one negative axiom per in-edge of the target; asserting the target
// concept then self-clashes exactly when the target is reachable.
inline ReductionInstance gen_unreach_cc(const Digraph& g, const std::string& s,
                                        const std::string& t) {
  if (s == t) throw InvalidSource("unreach-cc requires distinct source and target");
  ReductionInstance inst;
  inst.kb.dialect = Dialect::DlliteCore;
  for (const auto& [u, v] : edge_set(g)) {
    if (u == t && v == t)
      throw InvalidSource("unreach-cc cannot encode a self-edge at the target");
    if (u != t && v != t)
      inst.kb.tbox.push_back(incl(atom(node_concept(u)), atom(node_concept(v))));
  }
  inst.kb.tbox.push_back(incl(atom(node_concept(t)), atom(node_concept(s))));
  for (const auto& [u, v] : edge_set(g))
    if (v == t && u != t)
      inst.kb.tbox.push_back(
          incl(atom(node_concept(u)), Concept::negation(atom(node_concept(t)))));
  inst.obs = ca(node_concept(t), "a");
  inst.semantics = Semantics::Brave;  // unused: the contract is confinement only
  inst.candidate_hyp = ABox({ca(node_concept(t), "a")});
  inst.oracle_answer = !reachable(g, s, t);
  inst.expected_meaning = "the candidate is conflict-confining for the knowledge base iff no "
                          "path runs from " + s + " to " + t;
  return inst;
}

// --- clause-selection construction (shared by the unsat/mus modes) ----------------

// Role P/N edges record each clause's positive/negative literals; role U
// links the anchor to every clause. The four axioms make U-edges clash with
// any literal edge of the same clause and opposite literal edges of the same
// variable clash with each other, so repairs choose per clause between
// "selected" (U kept) and "satisfied by an assignment piece".
inline KB clause_selection_kb(const Cnf& f) {
  KB kb;
  kb.dialect = Dialect::DlliteCore;
  Role u{Symbol::role_name("U"), false};
  Role p{Symbol::role_name("P"), false};
  Role n{Symbol::role_name("N"), false};
  kb.tbox.push_back(incl(Concept::exists(u), atom("A")));
  kb.tbox.push_back(
      incl(Concept::exists(p.inverse()), Concept::negation(Concept::exists(n.inverse()))));
  kb.tbox.push_back(incl(Concept::exists(p), Concept::negation(Concept::exists(u.inverse()))));
  kb.tbox.push_back(incl(Concept::exists(n), Concept::negation(Concept::exists(u.inverse()))));
  std::vector<Assertion> abox;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const std::string clause_ind = "c" + std::to_string(j + 1);
    for (int lit : f.clauses[j])
      abox.push_back(
          ra(lit > 0 ? "P" : "N", clause_ind, "x" + std::to_string(std::abs(lit))));
  }
  kb.abox = ABox(std::move(abox));
  return kb;
}

inline ABox clause_links(std::size_t count) {
  std::vector<Assertion> links;
  for (std::size_t j = 0; j < count; ++j) links.push_back(ra("U", "a", "c" + std::to_string(j + 1)));
  return ABox(std::move(links));
}

inline ReductionInstance gen_unsat_ar_verify(const Cnf& f) {
  require_cnf_form(f, "unsat-ar-verify");
  ReductionInstance inst;
  inst.kb = clause_selection_kb(f);
  inst.obs = ca("A", "a");
  inst.semantics = Semantics::Ar;
  inst.candidate_hyp = clause_links(f.clauses.size());
  inst.oracle_answer = !sat_brute(f);
  inst.expected_meaning =
      "the candidate verifies under cautious (AR) semantics iff the clause set is "
      "unsatisfiable";
  return inst;
}

// Padding clauses pin two fresh variables so that one distinguished clause
// link alone decides the answer, turning the verdict into a
// cardinality-minimality question about a singleton.
inline ReductionInstance gen_unsat_ar_card_min(const Cnf& f) {
  require_cnf_form(f, "unsat-ar-card-min");
  Cnf padded = f;
  padded.variables = f.variables + 2;
  for (Clause& clause : padded.clauses) clause.push_back(f.variables + 1);
  padded.clauses.push_back({-(f.variables + 1), f.variables + 2});
  padded.clauses.push_back({-(f.variables + 2)});
  ReductionInstance inst;
  inst.kb = clause_selection_kb(padded);
  ABox links = clause_links(padded.clauses.size());
  Assertion last = ra("U", "a", "c" + std::to_string(padded.clauses.size()));
  links.erase(last);
  inst.kb.abox = inst.kb.abox | links;
  inst.obs = ca("A", "a");
  inst.semantics = Semantics::Ar;
  inst.candidate_hyp = ABox({last});
  inst.minimality = Minimality::Card;
  inst.oracle_answer = !sat_brute(f);
  inst.expected_meaning =
      "the singleton candidate verifies as a cardinality-minimal cautious hypothesis iff "
      "the clause set is unsatisfiable";
  return inst;
}

inline ReductionInstance gen_mus_subset_min(const Cnf& f,
                                            const std::optional<std::vector<std::size_t>>& subset) {
  require_cnf_form(f, "mus-subset-min");
  std::vector<std::size_t> which;
  if (subset) {
    which = *subset;
    std::set<std::size_t> seen;
    for (std::size_t i : which) {
      if (i >= f.clauses.size())
        throw InvalidSource("clause index " + std::to_string(i + 1) + " out of range");
      if (!seen.insert(i).second)
        throw InvalidSource("duplicate clause index " + std::to_string(i + 1));
    }
  } else {
    for (std::size_t i = 0; i < f.clauses.size(); ++i) which.push_back(i);
  }
  ReductionInstance inst;
  inst.kb = clause_selection_kb(f);
  inst.obs = ca("A", "a");
  inst.semantics = Semantics::Ar;
  std::vector<Assertion> links;
  for (std::size_t i : which) links.push_back(ra("U", "a", "c" + std::to_string(i + 1)));
  inst.candidate_hyp = ABox(std::move(links));
  inst.minimality = Minimality::Subset;
  inst.oracle_answer = is_mus_brute(f, which);
  inst.expected_meaning =
      "the candidate verifies as a subset-minimal cautious hypothesis iff the selected "
      "clauses form a minimal unsatisfiable subset";
  return inst;
}

// --- satisfiability constructions over the conjunctive dialect --------------------

// Literal concepts feed clause concepts, whose conjunction yields the goal;
// per-variable disjointness makes consistent hypotheses exactly assignments.
inline void add_assignment_axioms(KB& kb, const Cnf& f) {
  for (int v = 1; v <= f.variables; ++v)
    kb.tbox.push_back(disjoint_el(lit_concept(v), lit_concept(-v)));
}

inline ReductionInstance gen_sat_sig_elbot(const Cnf& f, bool brave) {
  const std::string mode = brave ? "sat-sig-elbot-brave" : "sat-sig-elbot-classical";
  require_cnf_form(f, mode);
  require_clauses(f, mode);
  ReductionInstance inst;
  inst.kb.dialect = Dialect::Elbot;
  add_assignment_axioms(inst.kb, f);
  std::vector<ConceptRef> clause_atoms;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    for (int lit : f.clauses[j])
      inst.kb.tbox.push_back(incl(lit_concept(lit), atom(clause_name(j))));
    clause_atoms.push_back(atom(clause_name(j)));
  }
  inst.kb.tbox.push_back(incl(conj_all(std::move(clause_atoms)), atom("Phi")));
  inst.obs = ca("Phi", "m");
  Signature sig;
  for (int v = 1; v <= f.variables; ++v) {
    sig.concepts.insert(Symbol::concept_name(lit_name(v)));
    sig.concepts.insert(Symbol::concept_name(lit_name(-v)));
  }
  sig.individuals.insert(Symbol::individual("m"));
  inst.sig = std::move(sig);
  inst.constraints.signature_restricted = true;
  if (brave) {
    inst.kb.tbox.push_back(disjoint_el(atom("Bd1"), atom("Bd2")));
    inst.kb.abox = ABox({ca("Bd1", "b"), ca("Bd2", "b")});
    inst.semantics = Semantics::Brave;
  } else {
    inst.semantics = Semantics::Classical;
  }
  inst.oracle_answer = sat_brute(f);
  inst.expected_meaning = "a signature-restricted hypothesis exists iff the clause set is "
                          "satisfiable";
  return inst;
}

// Clause witnesses live behind per-clause roles; the goal concept is
// disjoint from the witness concept, which blocks explaining the goal by
// looping role edges onto the only individual.
inline ReductionInstance gen_sat_nontrivial_elbot(const Cnf& f) {
  require_cnf_form(f, "sat-nontrivial-elbot-classical");
  require_clauses(f, "sat-nontrivial-elbot-classical");
  ReductionInstance inst;
  inst.kb.dialect = Dialect::Elbot;
  add_assignment_axioms(inst.kb, f);
  std::vector<ConceptRef> clause_witnesses;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    Role rc{Symbol::role_name("Rc_" + std::to_string(j + 1)), false};
    for (int lit : f.clauses[j])
      inst.kb.tbox.push_back(incl(lit_concept(lit), Concept::some(rc, atom("B"))));
    clause_witnesses.push_back(Concept::some(rc, atom("B")));
  }
  inst.kb.tbox.push_back(incl(conj_all(std::move(clause_witnesses)), atom("Phi")));
  inst.kb.tbox.push_back(disjoint_el(atom("Phi"), atom("B")));
  inst.obs = ca("Phi", "m");
  inst.semantics = Semantics::Classical;
  inst.constraints.non_trivial = true;
  inst.oracle_answer = sat_brute(f);
  inst.expected_meaning = "a non-trivial hypothesis exists iff the clause set is satisfiable";
  return inst;
}

// --- universally quantified DNF over the pair-clash dialect -----------------------

// The ABox asserts every literal of every variable; repairs are then exactly
// assignments, and a term concept survives alongside precisely the
// assignments satisfying the term.
inline ReductionInstance gen_forall_dnf_nontrivial_ar_dllite(const Cnf& f) {
  require_dnf_form(f, "forall-dnf-nontrivial-ar-dllite");
  ReductionInstance inst;
  inst.kb.dialect = Dialect::DlliteCore;
  for (int v = 1; v <= f.variables; ++v)
    inst.kb.tbox.push_back(incl(lit_concept(v), Concept::negation(lit_concept(-v))));
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    inst.kb.tbox.push_back(incl(atom(clause_name(j)), atom("A")));
    for (int lit : f.clauses[j])
      inst.kb.tbox.push_back(
          incl(anti_lit_concept(lit), Concept::negation(atom(clause_name(j)))));
  }
  std::vector<Assertion> abox;
  for (int v = 1; v <= f.variables; ++v) {
    abox.push_back(ca(lit_name(v), "a"));
    abox.push_back(ca(lit_name(-v), "a"));
  }
  inst.kb.abox = ABox(std::move(abox));
  inst.obs = ca("A", "a");
  inst.semantics = Semantics::Ar;
  inst.constraints.non_trivial = true;
  inst.oracle_answer = !sat_brute(negate(f));  // no assignment falsifies every term
  inst.expected_meaning =
      "a non-trivial cautious hypothesis exists iff the disjunction holds under every "
      "assignment";
  return inst;
}

// --- two-block quantified constructions --------------------------------------------

// Outer-existential instance: the signature admits only outer-variable
// literal concepts, the ABox carries both literals of every inner variable,
// and the goal fires where the negated matrix stays underivable.
inline ReductionInstance gen_ea_sig_ar_elbot(const Qbf& q) {
  auto [outer, inner] = require_prefix(q, /*outer_exists=*/true, "ea-sig-ar-elbot");
  require_dnf_form(q.matrix, "ea-sig-ar-elbot");
  Cnf phi = negate(q.matrix);
  ReductionInstance inst;
  inst.kb.dialect = Dialect::Elbot;
  add_assignment_axioms(inst.kb, phi);
  std::vector<ConceptRef> clause_atoms;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    for (int lit : phi.clauses[j])
      inst.kb.tbox.push_back(incl(lit_concept(lit), atom(clause_name(j))));
    clause_atoms.push_back(atom(clause_name(j)));
  }
  inst.kb.tbox.push_back(incl(conj_all(std::move(clause_atoms)), atom("Phi")));
  inst.kb.tbox.push_back(disjoint_el(atom("Phi"), atom("NPhi")));
  std::vector<ConceptRef> goal_parts;
  for (int y : outer) {
    const std::string vote = "Vy_" + std::to_string(y);
    inst.kb.tbox.push_back(incl(lit_concept(y), atom(vote)));
    inst.kb.tbox.push_back(incl(lit_concept(-y), atom(vote)));
    goal_parts.push_back(atom(vote));
  }
  goal_parts.push_back(atom("NPhi"));
  inst.kb.tbox.push_back(incl(conj_all(std::move(goal_parts)), atom("C")));
  std::vector<Assertion> abox;
  for (int z : inner) {
    abox.push_back(ca(lit_name(z), "m"));
    abox.push_back(ca(lit_name(-z), "m"));
  }
  abox.push_back(ca("NPhi", "m"));
  inst.kb.abox = ABox(std::move(abox));
  inst.obs = ca("C", "m");
  inst.semantics = Semantics::Ar;
  Signature sig;
  for (int y : outer) {
    sig.concepts.insert(Symbol::concept_name(lit_name(y)));
    sig.concepts.insert(Symbol::concept_name(lit_name(-y)));
  }
  sig.individuals.insert(Symbol::individual("m"));
  inst.sig = std::move(sig);
  inst.constraints.signature_restricted = true;
  inst.oracle_answer = qbf_brute(q);
  inst.expected_meaning =
      "a signature-restricted cautious hypothesis exists iff the quantified formula is true";
  return inst;
}

// Outer-existential instance without a signature: the gate concept must be
// hypothesized together with outer literals, and each term fires the goal.
inline ReductionInstance gen_ea_nontrivial_ar_elbot(const Qbf& q) {
  auto [outer, inner] = require_prefix(q, /*outer_exists=*/true, "ea-nontrivial-ar-elbot");
  require_dnf_form(q.matrix, "ea-nontrivial-ar-elbot");
  (void)outer;
  ReductionInstance inst;
  inst.kb.dialect = Dialect::Elbot;
  add_assignment_axioms(inst.kb, q.matrix);
  for (const Clause& term : q.matrix.clauses) {
    std::vector<ConceptRef> parts{atom("C")};
    for (int lit : term) parts.push_back(lit_concept(lit));
    inst.kb.tbox.push_back(incl(conj_all(std::move(parts)), atom("Psi")));
  }
  std::vector<Assertion> abox;
  for (int z : inner) {
    abox.push_back(ca(lit_name(z), "m"));
    abox.push_back(ca(lit_name(-z), "m"));
  }
  inst.kb.abox = ABox(std::move(abox));
  inst.obs = ca("Psi", "m");
  inst.semantics = Semantics::Ar;
  inst.constraints.non_trivial = true;
  inst.oracle_answer = qbf_brute(q);
  inst.expected_meaning =
      "a non-trivial cautious hypothesis exists iff the quantified formula is true";
  return inst;
}

// Core of the outer-universal constructions: a gate concept Cd activates the
// clause machinery, a guard concept Bd clashes with everything the gate can
// derive, and the goal fires from a full outer assignment plus the negated
// matrix marker.
inline ReductionInstance ae_core_brave_elbot(const Qbf& q, const std::string& mode) {
  auto [outer, inner] = require_prefix(q, /*outer_exists=*/false, mode);
  require_cnf_form(q.matrix, mode);
  ReductionInstance inst;
  inst.kb.dialect = Dialect::Elbot;
  std::vector<ConceptRef> votes;
  for (int y : outer) {
    const std::string vote = "Vy_" + std::to_string(y);
    inst.kb.tbox.push_back(incl(Concept::conj(atom("Cd"), lit_concept(y)), atom(vote)));
    inst.kb.tbox.push_back(incl(Concept::conj(atom("Cd"), lit_concept(-y)), atom(vote)));
    votes.push_back(atom(vote));
  }
  std::vector<ConceptRef> goal_parts{atom("Cd")};
  goal_parts.insert(goal_parts.end(), votes.begin(), votes.end());
  goal_parts.push_back(atom("NPhi"));
  inst.kb.tbox.push_back(incl(conj_all(std::move(goal_parts)), atom("C")));
  add_assignment_axioms(inst.kb, q.matrix);
  std::vector<ConceptRef> phi_parts{atom("Cd")};
  phi_parts.insert(phi_parts.end(), votes.begin(), votes.end());
  for (std::size_t j = 0; j < q.matrix.clauses.size(); ++j) {
    for (int lit : q.matrix.clauses[j])
      inst.kb.tbox.push_back(
          incl(Concept::conj(atom("Cd"), lit_concept(lit)), atom(clause_name(j))));
    phi_parts.push_back(atom(clause_name(j)));
  }
  inst.kb.tbox.push_back(incl(conj_all(std::move(phi_parts)), atom("Phi")));
  inst.kb.tbox.push_back(disjoint_el(atom("Phi"), atom("NPhi")));
  inst.kb.tbox.push_back(disjoint_el(atom("Phi"), atom("Bd")));
  inst.kb.tbox.push_back(disjoint_el(atom("Cd"), atom("Bd")));
  inst.kb.tbox.push_back(disjoint_el(atom("C"), atom("Bd")));
  for (std::size_t j = 0; j < q.matrix.clauses.size(); ++j)
    inst.kb.tbox.push_back(disjoint_el(atom(clause_name(j)), atom("Bd")));
  for (const ConceptRef& vote : votes) inst.kb.tbox.push_back(disjoint_el(vote, atom("Bd")));
  std::vector<Assertion> abox;
  for (int z : inner) {
    abox.push_back(ca(lit_name(z), "m"));
    abox.push_back(ca(lit_name(-z), "m"));
  }
  abox.push_back(ca("NPhi", "m"));
  abox.push_back(ca("Bd", "m"));
  abox.push_back(ca("Cd", "m"));
  inst.kb.abox = ABox(std::move(abox));
  inst.obs = ca("C", "m");
  inst.semantics = Semantics::Brave;
  return inst;
}

inline ReductionInstance gen_ae_cc_brave_elbot(const Qbf& q) {
  ReductionInstance inst = ae_core_brave_elbot(q, "ae-cc-brave-elbot");
  inst.constraints.conflict_confining = true;
  inst.oracle_answer = !qbf_brute(q);
  inst.expected_meaning =
      "a conflict-confining hypothesis exists iff the quantified formula is false";
  return inst;
}

// Extension with a clash switch: the candidate {X(m)} always explains the
// goal at the cost of exactly one fresh conflict, so it is conflict-minimal
// precisely when no conflict-free explanation exists.
inline ReductionInstance gen_ae_subsetc_brave_elbot(const Qbf& q) {
  ReductionInstance inst = ae_core_brave_elbot(q, "ae-subsetc-brave-elbot");
  inst.kb.tbox.push_back(incl(Concept::conj(atom("Cd"), atom("X")), atom("C")));
  inst.kb.tbox.push_back(disjoint_el(atom("X"), atom("Y")));
  inst.kb.abox = inst.kb.abox | ABox({ca("Y", "m")});
  inst.candidate_hyp = ABox({ca("X", "m")});
  inst.minimality = Minimality::SubsetC;
  inst.oracle_answer = qbf_brute(q);
  inst.expected_meaning =
      "the candidate verifies as a conflict-subset-minimal hypothesis iff the quantified "
      "formula is true";
  return inst;
}

// Split-repair construction: repairs keeping B1 demand that the negated
// matrix stays blocked for every outer assignment, repairs keeping B2 demand
// a full outer assignment inside the hypothesis; the fixed both-literals
// candidate is then subset-minimal exactly when the formula is true.
inline ReductionInstance gen_pi2_subsetmin_ar_elbot(const Qbf& q) {
  auto [outer, inner] = require_prefix(q, /*outer_exists=*/false, "pi2-subsetmin-ar-elbot");
  require_cnf_form(q.matrix, "pi2-subsetmin-ar-elbot");
  Cnf neg = negate(q.matrix);  // DNF terms, one per original clause
  std::set<int> outer_set(outer.begin(), outer.end());
  auto term_lit_name = [&](int lit) {
    return outer_set.count(std::abs(lit)) ? lit_name(lit) : lit_name(lit, "Ty_", "Fy_");
  };
  ReductionInstance inst;
  inst.kb.dialect = Dialect::Elbot;
  inst.kb.tbox.push_back(disjoint_el(atom("B1"), atom("B2")));
  inst.kb.tbox.push_back(disjoint_el(atom("B1p"), atom("B2")));
  std::vector<ConceptRef> all_pairs{atom("B1")};
  for (int x : outer)
    all_pairs.push_back(Concept::conj(lit_concept(x), lit_concept(-x)));
  inst.kb.tbox.push_back(incl(conj_all(std::move(all_pairs)), atom("A")));
  for (std::size_t j = 0; j < neg.clauses.size(); ++j)
    inst.kb.tbox.push_back(incl(Concept::conj(atom("B1"), atom(clause_name(j))), atom("A")));
  for (int y : inner)
    inst.kb.tbox.push_back(incl(
        conj_all({atom("B1p"), atom(lit_name(y, "Ty_", "Fy_")), atom(lit_name(-y, "Ty_", "Fy_"))}),
        Concept::bot()));
  for (std::size_t j = 0; j < neg.clauses.size(); ++j)
    for (int lit : neg.clauses[j])
      inst.kb.tbox.push_back(
          incl(conj_all({atom("B1p"), atom(term_lit_name(-lit)), atom(clause_name(j))}),
               Concept::bot()));
  std::vector<ConceptRef> have_all{atom("B2")};
  for (int x : outer) {
    const std::string have = "Hv_" + std::to_string(x);
    inst.kb.tbox.push_back(incl(lit_concept(x), atom(have)));
    inst.kb.tbox.push_back(incl(lit_concept(-x), atom(have)));
    have_all.push_back(atom(have));
  }
  inst.kb.tbox.push_back(incl(conj_all(std::move(have_all)), atom("A")));
  std::vector<Assertion> abox{ca("B1", "a"), ca("B1p", "a"), ca("B2", "a")};
  for (int y : inner) {
    abox.push_back(ca(lit_name(y, "Ty_", "Fy_"), "a"));
    abox.push_back(ca(lit_name(-y, "Ty_", "Fy_"), "a"));
  }
  for (std::size_t j = 0; j < neg.clauses.size(); ++j) abox.push_back(ca(clause_name(j), "a"));
  inst.kb.abox = ABox(std::move(abox));
  inst.obs = ca("A", "a");
  inst.semantics = Semantics::Ar;
  std::vector<Assertion> hyp;
  for (int x : outer) {
    hyp.push_back(ca(lit_name(x), "a"));
    hyp.push_back(ca(lit_name(-x), "a"));
  }
  inst.candidate_hyp = ABox(std::move(hyp));
  inst.minimality = Minimality::Subset;
  inst.oracle_answer = qbf_brute(q);
  inst.expected_meaning =
      "the both-literals candidate verifies as a subset-minimal cautious hypothesis iff "
      "the quantified formula is true";
  return inst;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public generator entry points.

inline ReductionInstance gen_digraph_instance(const Digraph& g, const std::string& s,
                                              const std::string& t, const std::string& mode) {
  validate(g);
  if (!detail::graph_name_ok(s) || !detail::graph_name_ok(t))
    throw InvalidSource("endpoint names must be nonempty [A-Za-z0-9_]+");
  ReductionInstance inst;
  if (mode == "reach-brave-verify")
    inst = detail::gen_reach_brave_verify(g, s, t);
  else if (mode == "unreach-cc")
    inst = detail::gen_unreach_cc(g, s, t);
  else
    throw InvalidInput("unknown digraph mode: " + mode);
  inst.source_kind = "digraph";
  inst.mode = mode;
  Digraph headered = g;
  headered.source = s;
  headered.target = t;
  inst.source_text = serialize_digraph(headered);
  validate_dialect(inst.kb);
  return inst;
}

inline ReductionInstance gen_cnf_instance(
    const Cnf& f, const std::string& mode,
    const std::optional<std::vector<std::size_t>>& subset = std::nullopt) {
  validate(f);
  if (subset && mode != "mus-subset-min")
    throw InvalidInput("a clause subset only applies to mus-subset-min");
  ReductionInstance inst;
  if (mode == "unsat-ar-verify")
    inst = detail::gen_unsat_ar_verify(f);
  else if (mode == "unsat-ar-card-min")
    inst = detail::gen_unsat_ar_card_min(f);
  else if (mode == "mus-subset-min")
    inst = detail::gen_mus_subset_min(f, subset);
  else if (mode == "sat-sig-elbot-classical")
    inst = detail::gen_sat_sig_elbot(f, /*brave=*/false);
  else if (mode == "sat-sig-elbot-brave")
    inst = detail::gen_sat_sig_elbot(f, /*brave=*/true);
  else if (mode == "sat-nontrivial-elbot-classical")
    inst = detail::gen_sat_nontrivial_elbot(f);
  else if (mode == "forall-dnf-nontrivial-ar-dllite")
    inst = detail::gen_forall_dnf_nontrivial_ar_dllite(f);
  else
    throw InvalidInput("unknown clause-set mode: " + mode);
  inst.source_kind = "cnf";
  inst.mode = mode;
  inst.source_text = serialize_dimacs(f);
  validate_dialect(inst.kb);
  return inst;
}

inline ReductionInstance gen_qbf_instance(const Qbf& q, const std::string& mode) {
  validate(q);
  ReductionInstance inst;
  if (mode == "ea-sig-ar-elbot")
    inst = detail::gen_ea_sig_ar_elbot(q);
  else if (mode == "ea-nontrivial-ar-elbot")
    inst = detail::gen_ea_nontrivial_ar_elbot(q);
  else if (mode == "ae-cc-brave-elbot")
    inst = detail::gen_ae_cc_brave_elbot(q);
  else if (mode == "pi2-subsetmin-ar-elbot")
    inst = detail::gen_pi2_subsetmin_ar_elbot(q);
  else if (mode == "ae-subsetc-brave-elbot")
    inst = detail::gen_ae_subsetc_brave_elbot(q);
  else
    throw InvalidInput("unknown quantified mode: " + mode);
  inst.source_kind = "qbf";
  inst.mode = mode;
  inst.source_text = serialize_qdimacs(q);
  validate_dialect(inst.kb);
  return inst;
}

// ---------------------------------------------------------------------------
// Built-in worked fixtures with frozen expected answers.

namespace detail {

inline const char* builtin_doc(const std::string& name) {
  if (name == "diabetes")
    return "DIALECT elbot\n"
           "TBOX\n"
           "(High and Low) <= bot\n"
           "(some glucoseLevel High) <= GlycemicCrisis\n"
           "(some glucoseLevel Low) <= GlycemicCrisis\n"
           "((some glucoseLevel High) and OverdosedInsulin) <= DiabeticComa\n"
           "(GlycemicCrisis and Ketoacidosis) <= DiabeticComa\n"
           "ABOX\n"
           "glucoseLevel(patient, l)\n"
           "High(l)\n"
           "Low(l)\n";
  if (name == "ar-non-convex")
    return "DIALECT dllite-core\n"
           "TBOX\n"
           "B1 <= not(B2)\n"
           "C1 <= not(C2)\n"
           "B1 <= A\n"
           "B3 <= A\n"
           "ABOX\n"
           "C1(a)\n"
           "C2(a)\n";
  if (name == "brave-cc")
    return "DIALECT elbot\n"
           "TBOX\n"
           "(A and B) <= bot\n"
           "(B and C) <= bot\n"
           "(C and D) <= A\n"
           "ABOX\n"
           "B(a)\n"
           "C(a)\n";
  if (name == "non-triv")
    return "DIALECT dllite-core\n"
           "TBOX\n"
           "B <= (some r)\n"
           "(some r) <= A\n"
           "A <= not((some inv(r)))\n"
           "C <= not(C)\n"
           "ABOX\n"
           "C(a)\n";
  if (name == "nt-sig")
    return "DIALECT elbot\n"
           "TBOX\n"
           "(A and B) <= C\n"
           "(D and (some r C)) <= A\n"
           "ABOX\n"
           "B(m)\n"
           "r(m, n)\n";
  throw UnknownName("unknown example: " + name);
}

}  // namespace detail

inline ReductionInstance builtin_example(const std::string& name) {
  ReductionInstance inst;
  inst.source_kind = "builtin";
  inst.mode = name;
  inst.source_text = name;
  inst.kb = parse_kb(detail::builtin_doc(name));
  if (name == "diabetes") {
    inst.obs = detail::ca("DiabeticComa", "patient");
    inst.semantics = Semantics::Ar;
    inst.candidate_hyp = ABox({detail::ca("Ketoacidosis", "patient")});
    inst.oracle_answer = true;
    inst.extra_checks.push_back({ABox({detail::ca("OverdosedInsulin", "patient")}), false});
    inst.expected_meaning =
        "ketoacidosis explains the coma under cautious semantics; an insulin overdose "
        "alone does not";
  } else if (name == "ar-non-convex") {
    inst.obs = detail::ca("A", "a");
    inst.semantics = Semantics::Ar;
    inst.candidate_hyp = ABox({detail::ca("B1", "a")});
    inst.oracle_answer = true;
    inst.extra_checks.push_back({ABox({detail::ca("B1", "a"), detail::ca("B2", "a")}), false});
    inst.extra_checks.push_back(
        {ABox({detail::ca("B1", "a"), detail::ca("B2", "a"), detail::ca("B3", "a")}), true});
    inst.expected_meaning =
        "cautious explanations are not convex: the chain of candidates answers "
        "valid/invalid/valid";
  } else if (name == "brave-cc") {
    inst.obs = detail::ca("A", "a");
    inst.semantics = Semantics::Brave;
    inst.constraints.conflict_confining = true;
    inst.candidate_hyp = ABox({detail::ca("D", "a")});
    inst.oracle_answer = true;
    inst.extra_checks.push_back({ABox({detail::ca("A", "a")}), false});
    inst.expected_meaning =
        "asserting the observation directly opens a fresh clash, while the indirect "
        "explanation confines the conflicts";
  } else if (name == "non-triv") {
    inst.obs = detail::ca("A", "a");
    inst.semantics = Semantics::Brave;
    inst.constraints.non_trivial = true;
    inst.candidate_hyp = ABox({detail::ca("B", "a")});
    inst.oracle_answer = true;
    inst.extra_checks.push_back({ABox({detail::ra("r", "a", "a")}), false});
    inst.expected_meaning =
        "a subsumee two steps below the observation works where the direct role loop "
        "clashes";
  } else if (name == "nt-sig") {
    inst.obs = detail::ca("C", "m");
    inst.semantics = Semantics::Classical;
    Signature sig;
    sig.concepts = {Symbol::concept_name("C"), Symbol::concept_name("D")};
    sig.individuals = {Symbol::individual("m"), Symbol::individual("n")};
    inst.sig = std::move(sig);
    inst.constraints.signature_restricted = true;
    inst.constraints.non_trivial = true;
    inst.candidate_hyp = ABox({detail::ca("C", "n"), detail::ca("D", "m")});
    inst.oracle_answer = true;
    inst.expected_meaning =
        "the observation's own concept may recur in a valid hypothesis at a different "
        "individual";
  } else {
    detail::builtin_doc(name);  // throws UnknownName
  }
  return inst;
}

}  // namespace abduce
