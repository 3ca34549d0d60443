// Hypothesis-verification tests: promise validation, property/constraint
// verdicts with evidence, and minimality checks across semantics, dialects,
// and constraint combinations. Worked examples are pinned exactly; fuzz
// sections cross-check shortcut routes against exhaustive scans.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "abduce/abduction.hpp"
#include "abduce/parser.hpp"
#include "support/fuzz.hpp"

using namespace abduce;

namespace {

const char* kDiabetesDoc = R"(DIALECT elbot
TBOX
(High and Low) <= bot
(some glucoseLevel High) <= GlycemicCrisis
(some glucoseLevel Low) <= GlycemicCrisis
((some glucoseLevel High) and OverdosedInsulin) <= DiabeticComa
(GlycemicCrisis and Ketoacidosis) <= DiabeticComa
ABOX
glucoseLevel(patient, l)
High(l)
Low(l)
)";

const char* kClubsDoc =
    "DIALECT dllite-core\nTBOX\nB1 <= not(B2)\nC1 <= not(C2)\nB1 <= A\nB3 <= A\n"
    "ABOX\nC1(a)\nC2(a)\n";

Assertion ca(const char* c, const char* i) {
  return Assertion::concept_assertion(Symbol::concept_name(c), Symbol::individual(i));
}

Assertion ra(const char* r, const char* x, const char* y) {
  return Assertion::role_assertion(Symbol::role_name(r), Symbol::individual(x),
                                   Symbol::individual(y));
}

bool has_reason(const HypothesisVerdict& v, const char* tag) {
  for (const std::string& reason : v.reasons)
    if (reason.rfind(tag, 0) == 0) return true;
  return false;
}

// Reference scan: does any proper subset of hyp explain the observation?
bool proper_subset_hypothesis_exists(const AbductionProblem& p, const ABox& hyp,
                                     const Constraints& c = {}) {
  const std::vector<Assertion>& items = hyp.items();
  std::size_t n = items.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
    std::vector<Assertion> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) sub.push_back(items[i]);
    if (is_hypothesis(p, ABox(std::move(sub)), c)) return true;
  }
  return false;
}

// Reference scan over the whole candidate space for a hypothesis introducing
// strictly fewer / strictly less-included fresh conflicts.
bool better_conflict_hypothesis_exists(const AbductionProblem& p, const ABox& hyp,
                                       Minimality m) {
  std::vector<ABox> fresh_h = new_conflicts(*p.reasoner, p.kb.abox, hyp).fresh;
  if (fresh_h.empty()) return false;
  std::vector<Assertion> pool;
  for (const Assertion& x : candidate_universe(p.kb, p.obs))
    if (!p.kb.abox.contains(x)) pool.push_back(x);
  std::size_t n = pool.size();
  REQUIRE(n <= 16);
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Assertion> cand;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) cand.push_back(pool[i]);
    ABox h2(std::move(cand));
    if (!is_hypothesis(p, h2)) continue;
    std::vector<ABox> fresh_2 = new_conflicts(*p.reasoner, p.kb.abox, h2).fresh;
    if (m == Minimality::CardC) {
      if (fresh_2.size() < fresh_h.size()) return true;
    } else {
      if (fresh_2.size() < fresh_h.size() &&
          std::includes(fresh_h.begin(), fresh_h.end(), fresh_2.begin(), fresh_2.end(),
                        [](const ABox& x, const ABox& y) { return x.items() < y.items(); }))
        return true;
    }
  }
  return false;
}

ABox random_pool_hyp(std::mt19937& rng, const KB& kb, const Assertion& obs, int max_size) {
  ABox uni = candidate_universe(kb, obs);
  std::vector<Assertion> pool(uni.items());
  std::vector<Assertion> picked;
  int want = 1 + fuzz::pick(rng, max_size);
  for (int i = 0; i < want && !pool.empty(); ++i) {
    std::size_t at = static_cast<std::size_t>(fuzz::pick(rng, static_cast<int>(pool.size())));
    picked.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return ABox(std::move(picked));
}

}  // namespace

// --- problem construction -----------------------------------------------------

TEST_CASE("the promise admits exactly the unexplained observations") {
  KB kb = parse_kb(kDiabetesDoc);
  CHECK_NOTHROW(make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Brave));
  CHECK_NOTHROW(make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Ar));

  try {
    make_problem(kb, ca("GlycemicCrisis", "patient"), Semantics::Ar);
    FAIL("expected a promise violation");
  } catch (const PromiseViolation& e) {
    CHECK(e.kind == PromiseViolationKind::ObsAlreadyEntailed);
  }

  KB consistent = kb;
  consistent.abox.erase(ca("Low", "l"));
  try {
    make_problem(consistent, ca("DiabeticComa", "patient"), Semantics::Brave);
    FAIL("expected a promise violation");
  } catch (const PromiseViolation& e) {
    CHECK(e.kind == PromiseViolationKind::KbConsistent);
  }
  CHECK_NOTHROW(make_problem(consistent, ca("DiabeticComa", "patient"), Semantics::Classical));
  try {
    make_problem(consistent, ca("GlycemicCrisis", "patient"), Semantics::Classical);
    FAIL("expected a promise violation");
  } catch (const PromiseViolation& e) {
    CHECK(e.kind == PromiseViolationKind::ObsAlreadyEntailed);
  }
  try {
    make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Classical);
    FAIL("expected a promise violation");
  } catch (const PromiseViolation& e) {
    CHECK(e.kind == PromiseViolationKind::KbInconsistent);
  }
  CHECK_THROWS_AS(make_problem(kb, ra("glucoseLevel", "patient", "l"), Semantics::Brave),
                  InvalidInput);
}

TEST_CASE("self-defeating axioms cannot anchor repair-based problems") {
  KB kb = parse_kb("DIALECT elbot\nTBOX\ntop <= bot\nABOX\nA(a)\n");
  try {
    make_problem(kb, ca("B", "a"), Semantics::Ar);
    FAIL("expected a promise violation");
  } catch (const PromiseViolation& e) {
    CHECK(e.kind == PromiseViolationKind::ObsAlreadyEntailed);
  }
  CHECK_THROWS_AS(make_problem(kb, ca("B", "a"), Semantics::Brave), InvalidInput);
}

// --- verification: properties and evidence ------------------------------------

TEST_CASE("ketoacidosis explains the coma in every repair, insulin only in one") {
  KB kb = parse_kb(kDiabetesDoc);
  AbductionProblem ar = make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Ar);

  HypothesisVerdict keto = verify_hypothesis(ar, ABox({ca("Ketoacidosis", "patient")}));
  CHECK(keto.valid);
  CHECK(keto.reasons.empty());
  CHECK_FALSE(keto.counterexample.has_value());

  HypothesisVerdict insulin = verify_hypothesis(ar, ABox({ca("OverdosedInsulin", "patient")}));
  CHECK_FALSE(insulin.valid);
  CHECK(has_reason(insulin, tags::kNotEntailed));
  REQUIRE(insulin.counterexample.has_value());
  CHECK(insulin.counterexample_kind == "non-entailing-repair");
  CHECK(*insulin.counterexample == ABox({ca("Low", "l"), ca("OverdosedInsulin", "patient"),
                                         ra("glucoseLevel", "patient", "l")}));

  AbductionProblem brave = make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Brave);
  HypothesisVerdict bv = verify_hypothesis(brave, ABox({ca("OverdosedInsulin", "patient")}));
  CHECK(bv.valid);
  REQUIRE(bv.witness_repair.has_value());
  CHECK(brave.reasoner->entails(*bv.witness_repair, brave.obs).entailed);
}

TEST_CASE("the two-club chain accepts its first and third hypothesis but not the second") {
  KB kb = parse_kb(kClubsDoc);
  AbductionProblem p = make_problem(kb, ca("A", "a"), Semantics::Ar);
  ABox b1({ca("B1", "a")});
  ABox b2({ca("B1", "a"), ca("B2", "a")});
  ABox b3({ca("B1", "a"), ca("B2", "a"), ca("B3", "a")});
  CHECK(verify_hypothesis(p, b1).valid);
  CHECK_FALSE(verify_hypothesis(p, b2).valid);
  CHECK(verify_hypothesis(p, b3).valid);

  CHECK(verify_hypothesis(p, b1, {}, Minimality::Subset).valid);
  HypothesisVerdict v = verify_hypothesis(p, b3, {}, Minimality::Subset);
  CHECK_FALSE(v.valid);
  CHECK(has_reason(v, tags::kNotMinimal));
  REQUIRE(v.counterexample.has_value());
  CHECK(v.counterexample_kind == "smaller-hypothesis");
  CHECK(*v.counterexample == b1);
}

TEST_CASE("each failed condition is reported with its evidence") {
  KB kb = parse_kb(kDiabetesDoc);
  AbductionProblem p = make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Brave);

  HypothesisVerdict foreign = verify_hypothesis(p, ABox({ca("Ketoacidosis", "stranger")}));
  CHECK_FALSE(foreign.valid);
  CHECK(has_reason(foreign, tags::kForeignIndividuals));

  Constraints want_nontrivial;
  want_nontrivial.non_trivial = true;
  HypothesisVerdict trivial =
      verify_hypothesis(p, ABox({ca("DiabeticComa", "patient")}), want_nontrivial);
  CHECK_FALSE(trivial.valid);
  CHECK(has_reason(trivial, tags::kTrivial));

  Signature sig;
  sig.concepts = {Symbol::concept_name("Ketoacidosis")};
  sig.individuals = {Symbol::individual("patient")};
  AbductionProblem sp = make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Brave, sig);
  Constraints want_sig;
  want_sig.signature_restricted = true;
  CHECK(verify_hypothesis(sp, ABox({ca("Ketoacidosis", "patient")}), want_sig).valid);
  HypothesisVerdict off =
      verify_hypothesis(sp, ABox({ca("OverdosedInsulin", "patient")}), want_sig);
  CHECK_FALSE(off.valid);
  CHECK(has_reason(off, tags::kSignatureViolation));

  CHECK_THROWS_AS(verify_hypothesis(p, ABox({ca("Ketoacidosis", "patient")}), want_sig),
                  InvalidInput);
}

TEST_CASE("a hypothesis that opens a fresh clash fails confinement with the clash as evidence") {
  KB kb = parse_kb("DIALECT elbot\nTBOX\n(A and B) <= bot\n(B and C) <= bot\n(C and D) <= A\n"
                   "ABOX\nB(a)\nC(a)\n");
  AbductionProblem p = make_problem(kb, ca("A", "a"), Semantics::Brave);
  Constraints confined;
  confined.conflict_confining = true;
  HypothesisVerdict bad = verify_hypothesis(p, ABox({ca("A", "a")}), confined);
  CHECK_FALSE(bad.valid);
  CHECK(has_reason(bad, tags::kNotConflictConfining));
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample_kind == "fresh-conflict");
  CHECK(*bad.counterexample == ABox({ca("A", "a"), ca("B", "a")}));
  CHECK(verify_hypothesis(p, ABox({ca("D", "a")}), confined).valid);
}

TEST_CASE("classical hypotheses must keep the knowledge base consistent") {
  KB kb = parse_kb(kDiabetesDoc);
  kb.abox.erase(ca("Low", "l"));
  AbductionProblem p = make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Classical);
  CHECK(verify_hypothesis(p, ABox({ca("OverdosedInsulin", "patient")})).valid);
  CHECK(verify_hypothesis(p, ABox({ca("Ketoacidosis", "patient")})).valid);
  HypothesisVerdict broken = verify_hypothesis(p, ABox({ca("Low", "l")}));
  CHECK_FALSE(broken.valid);
  CHECK(has_reason(broken, tags::kInconsistentUnion));
}

// --- minimality ----------------------------------------------------------------

TEST_CASE("a one-assertion explanation always beats a larger one by size") {
  KB kb = parse_kb(kClubsDoc);
  AbductionProblem p = make_problem(kb, ca("A", "a"), Semantics::Ar);
  ABox b3({ca("B1", "a"), ca("B2", "a"), ca("B3", "a")});
  MinimalityResult res = check_minimality(p, b3, {}, Minimality::Card);
  CHECK_FALSE(res.minimal);
  REQUIRE(res.smaller.has_value());
  CHECK(*res.smaller == ABox({ca("A", "a")}));
  CHECK(check_minimality(p, ABox({ca("B1", "a")}), {}, Minimality::Card).minimal);
}

TEST_CASE("a conjunction may need two assertions once the trivial explanation is barred") {
  KB kb = parse_kb("DIALECT elbot\nTBOX\n(B and C) <= A\nABOX\nD(a)\n");
  AbductionProblem p = make_problem(kb, ca("A", "a"), Semantics::Classical);
  ABox pair({ca("B", "a"), ca("C", "a")});
  CHECK(verify_hypothesis(p, pair).valid);

  // unconstrained, the observation itself is smaller
  MinimalityResult plain = check_minimality(p, pair, {}, Minimality::Card);
  CHECK_FALSE(plain.minimal);
  CHECK(*plain.smaller == ABox({ca("A", "a")}));

  // barring it, nothing smaller remains and the exhaustive sweep says so
  Constraints nontrivial;
  nontrivial.non_trivial = true;
  MinimalityResult guarded = check_minimality(p, pair, nontrivial, Minimality::Card);
  CHECK(guarded.minimal);
  CHECK(guarded.experimental);
  CHECK(check_minimality(p, pair, nontrivial, Minimality::Subset).minimal);
}

TEST_CASE("conflict-minimality for cautious explanations reduces to confinement") {
  KB kb = parse_kb(kClubsDoc);
  AbductionProblem p = make_problem(kb, ca("A", "a"), Semantics::Ar);
  // no fresh clash: minimal under both conflict orders
  CHECK(check_minimality(p, ABox({ca("B1", "a")}), {}, Minimality::SubsetC).minimal);
  CHECK(check_minimality(p, ABox({ca("B1", "a")}), {}, Minimality::CardC).minimal);
  // B2 rides along and clashes with B1: the observation alone does better
  ABox b3({ca("B1", "a"), ca("B2", "a"), ca("B3", "a")});
  MinimalityResult res = check_minimality(p, b3, {}, Minimality::SubsetC);
  CHECK_FALSE(res.minimal);
  CHECK(*res.smaller == ABox({ca("A", "a")}));
  CHECK_FALSE(check_minimality(p, b3, {}, Minimality::CardC).minimal);
}

TEST_CASE("an explanation may be conflict-minimal even though it clashes") {
  // Everything deriving the observation clashes with the F fact, so one fresh
  // clash is the floor and the member-wise test accepts.
  KB kb = parse_kb(
      "DIALECT dllite-core\nTBOX\nB1 <= not(B2)\nC1 <= not(C2)\nB1 <= A\nA <= not(F)\n"
      "ABOX\nC1(a)\nC2(a)\nF(a)\n");
  AbductionProblem p = make_problem(kb, ca("A", "a"), Semantics::Brave);
  ABox hyp({ca("B1", "a")});
  CHECK(verify_hypothesis(p, hyp).valid);
  CHECK_FALSE(new_conflicts(*p.reasoner, kb.abox, hyp).fresh.empty());
  CHECK(check_minimality(p, hyp, {}, Minimality::SubsetC).minimal);
  CHECK(check_minimality(p, hyp, {}, Minimality::CardC).minimal);
  CHECK_FALSE(better_conflict_hypothesis_exists(p, hyp, Minimality::SubsetC));
  CHECK_FALSE(better_conflict_hypothesis_exists(p, hyp, Minimality::CardC));
}

TEST_CASE("the open combination is served by an exhaustive sweep and flagged") {
  KB kb = parse_kb(
      "DIALECT elbot\nTBOX\n(X and Y) <= bot\n(B and X) <= bot\nB <= A\nABOX\nX(m)\nY(m)\n");
  AbductionProblem p = make_problem(kb, ca("A", "m"), Semantics::Brave);
  ABox hyp({ca("B", "m")});
  CHECK(verify_hypothesis(p, hyp).valid);
  HypothesisVerdict v = verify_hypothesis(p, hyp, {}, Minimality::CardC);
  CHECK_FALSE(v.valid);
  CHECK(v.experimental);
  REQUIRE(v.counterexample.has_value());
  CHECK(*v.counterexample == ABox({ca("A", "m")}));
}

TEST_CASE("conflict-based minimality is rejected under classical semantics") {
  KB kb = parse_kb(kDiabetesDoc);
  kb.abox.erase(ca("Low", "l"));
  AbductionProblem p = make_problem(kb, ca("DiabeticComa", "patient"), Semantics::Classical);
  ABox hyp({ca("Ketoacidosis", "patient")});
  CHECK_THROWS_AS(verify_hypothesis(p, hyp, {}, Minimality::SubsetC), UnsupportedCombination);
  CHECK_THROWS_AS(check_minimality(p, hyp, {}, Minimality::CardC), UnsupportedCombination);
}

// --- randomized invariants ------------------------------------------------------

namespace {

struct FuzzProblem {
  bool ok = false;
  AbductionProblem problem;
};

FuzzProblem random_problem(std::mt19937& rng, const fuzz::Options& opt, Semantics s) {
  for (int attempt = 0; attempt < 12; ++attempt) {
    KB kb = fuzz::random_kb(rng, opt);
    Assertion obs = fuzz::random_concept_obs(rng, opt);
    try {
      return {true, make_problem(kb, obs, s)};
    } catch (const PromiseViolation&) {
    } catch (const InvalidInput&) {
    }
  }
  return {};
}

}  // namespace

TEST_CASE("size-minimality collapses to being a one-assertion hypothesis") {
  std::mt19937 rng(92);
  for (Dialect d : {Dialect::DlliteCore, Dialect::DlliteR, Dialect::Elbot}) {
    fuzz::Options opt;
    opt.dialect = d;
    opt.axioms = 5;
    opt.assertions = 5;
    for (Semantics s : {Semantics::Brave, Semantics::Ar}) {
      for (int iter = 0; iter < 20; ++iter) {
        FuzzProblem fp = random_problem(rng, opt, s);
        if (!fp.ok) continue;
        ABox hyp = random_pool_hyp(rng, fp.problem.kb, fp.problem.obs, 3);
        CAPTURE(serialize_kb(fp.problem.kb), to_string(fp.problem.obs), serialize_abox(hyp));
        HypothesisVerdict general = verify_hypothesis(fp.problem, hyp);
        HypothesisVerdict by_size = verify_hypothesis(fp.problem, hyp, {}, Minimality::Card);
        CHECK(by_size.valid == (general.valid && hyp.size() == 1));
      }
    }
  }
}

TEST_CASE("inclusion-minimality agrees with the exhaustive proper-subset scan") {
  std::mt19937 rng(4817);
  for (Dialect d : {Dialect::DlliteCore, Dialect::DlliteR, Dialect::Elbot}) {
    fuzz::Options opt;
    opt.dialect = d;
    opt.axioms = 5;
    opt.assertions = 4;
    for (Semantics s : {Semantics::Brave, Semantics::Ar, Semantics::Classical}) {
      for (int iter = 0; iter < 20; ++iter) {
        FuzzProblem fp = random_problem(rng, opt, s);
        if (!fp.ok) continue;
        ABox hyp = random_pool_hyp(rng, fp.problem.kb, fp.problem.obs, 3);
        if (!verify_hypothesis(fp.problem, hyp).valid) continue;
        CAPTURE(serialize_kb(fp.problem.kb), to_string(fp.problem.obs), serialize_abox(hyp));
        bool minimal = check_minimality(fp.problem, hyp, {}, Minimality::Subset).minimal;
        CHECK(minimal == !proper_subset_hypothesis_exists(fp.problem, hyp));
      }
    }
  }
}

TEST_CASE("conflict-minimality of cautious hypotheses matches confinement") {
  std::mt19937 rng(553);
  for (Dialect d : {Dialect::DlliteCore, Dialect::Elbot}) {
    fuzz::Options opt;
    opt.dialect = d;
    opt.axioms = 5;
    opt.assertions = 4;
    for (int iter = 0; iter < 25; ++iter) {
      FuzzProblem fp = random_problem(rng, opt, Semantics::Ar);
      if (!fp.ok) continue;
      ABox hyp = random_pool_hyp(rng, fp.problem.kb, fp.problem.obs, 2);
      if (!verify_hypothesis(fp.problem, hyp).valid) continue;
      CAPTURE(serialize_kb(fp.problem.kb), to_string(fp.problem.obs), serialize_abox(hyp));
      bool confining =
          is_conflict_confining(*fp.problem.reasoner, fp.problem.kb.abox, hyp).confining;
      CHECK(check_minimality(fp.problem, hyp, {}, Minimality::SubsetC).minimal == confining);
      CHECK(check_minimality(fp.problem, hyp, {}, Minimality::CardC).minimal == confining);
    }
  }
}

TEST_CASE("member-wise conflict-minimality matches the exhaustive sweep") {
  std::mt19937 rng(7370);
  fuzz::Options opt;
  opt.dialect = Dialect::DlliteCore;
  opt.concepts = 4;
  opt.roles = 1;
  opt.individuals = 2;
  opt.axioms = 5;
  opt.assertions = 4;
  int checked = 0;
  for (int iter = 0; iter < 120 && checked < 25; ++iter) {
    FuzzProblem fp = random_problem(rng, opt, Semantics::Brave);
    if (!fp.ok) continue;
    if (candidate_universe(fp.problem.kb, fp.problem.obs).size() > 12) continue;
    ABox hyp = random_pool_hyp(rng, fp.problem.kb, fp.problem.obs, 2);
    if (!verify_hypothesis(fp.problem, hyp).valid) continue;
    ++checked;
    CAPTURE(serialize_kb(fp.problem.kb), to_string(fp.problem.obs), serialize_abox(hyp));
    for (Minimality m : {Minimality::SubsetC, Minimality::CardC}) {
      bool minimal = check_minimality(fp.problem, hyp, {}, m).minimal;
      CHECK(minimal == !better_conflict_hypothesis_exists(fp.problem, hyp, m));
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("every valid hypothesis shelters a one-assertion one in pair-clash dialects") {
  std::mt19937 rng(2025);
  for (Dialect d : {Dialect::DlliteCore, Dialect::DlliteR}) {
    fuzz::Options opt;
    opt.dialect = d;
    opt.axioms = 6;
    opt.assertions = 5;
    for (int iter = 0; iter < 25; ++iter) {
      FuzzProblem fp = random_problem(rng, opt, Semantics::Brave);
      if (!fp.ok) continue;
      ABox hyp = random_pool_hyp(rng, fp.problem.kb, fp.problem.obs, 3);
      if (!verify_hypothesis(fp.problem, hyp).valid) continue;
      CAPTURE(serialize_kb(fp.problem.kb), to_string(fp.problem.obs), serialize_abox(hyp));
      bool found = false;
      for (const Assertion& beta : hyp)
        found = found || verify_hypothesis(fp.problem, ABox({beta})).valid;
      CHECK(found);
    }
  }
}

TEST_CASE("confined cautious hypotheses explain the observation from the axioms alone") {
  std::mt19937 rng(31007);
  for (Dialect d : {Dialect::DlliteCore, Dialect::DlliteR}) {
    fuzz::Options opt;
    opt.dialect = d;
    opt.axioms = 6;
    opt.assertions = 5;
    for (int iter = 0; iter < 25; ++iter) {
      FuzzProblem fp = random_problem(rng, opt, Semantics::Ar);
      if (!fp.ok) continue;
      ABox hyp = random_pool_hyp(rng, fp.problem.kb, fp.problem.obs, 2);
      Constraints confined;
      confined.conflict_confining = true;
      if (!verify_hypothesis(fp.problem, hyp, confined).valid) continue;
      CAPTURE(serialize_kb(fp.problem.kb), to_string(fp.problem.obs), serialize_abox(hyp));
      CHECK(fp.problem.reasoner->entails(hyp, fp.problem.obs).entailed);
    }
  }
}

TEST_CASE("the observation alone is valid whenever it can hold, or confine, respectively") {
  std::mt19937 rng(660);
  for (Dialect d : {Dialect::DlliteCore, Dialect::DlliteR, Dialect::Elbot}) {
    fuzz::Options opt;
    opt.dialect = d;
    opt.axioms = 5;
    opt.assertions = 5;
    for (int iter = 0; iter < 20; ++iter) {
      FuzzProblem brave = random_problem(rng, opt, Semantics::Brave);
      if (brave.ok) {
        const AbductionProblem& p = brave.problem;
        if (p.reasoner->concept_satisfiable(p.obs.pred)) {
          CAPTURE(serialize_kb(p.kb), to_string(p.obs));
          CHECK(verify_hypothesis(p, ABox({p.obs})).valid);
        }
      }
      FuzzProblem ar = random_problem(rng, opt, Semantics::Ar);
      if (ar.ok) {
        const AbductionProblem& p = ar.problem;
        // Confinement alone is too weak when the observation is an ABox fact
        // sitting inside a pre-existing clash; the real premise is that no
        // clash of the extended ABox involves the observation.
        bool untouched = true;
        for (const ABox& clash : p.reasoner->min_conflicts(p.kb.abox | ABox({p.obs})))
          untouched = untouched && !clash.contains(p.obs);
        if (untouched) {
          CAPTURE(serialize_kb(p.kb), to_string(p.obs));
          CHECK(verify_hypothesis(p, ABox({p.obs})).valid);
        }
      }
    }
  }
}
