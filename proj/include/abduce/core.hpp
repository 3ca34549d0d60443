// Knowledge-base model: symbols, concepts, axioms, assertions, ABoxes, KBs,
// signatures; dialect validation, canonical serialization, candidate universes.
#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace abduce {

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  int line, column;
  SyntaxError(int line, int column, const std::string& msg)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

struct DialectViolation : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

// Rejected source object for a reduction (e.g. digraph with s = t).
struct InvalidSource : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};

struct UnsupportedCombination : Error {
  using Error::Error;
};

enum class PromiseViolationKind { KbConsistent, KbInconsistent, ObsAlreadyEntailed };

struct PromiseViolation : Error {
  PromiseViolationKind kind;
  PromiseViolation(PromiseViolationKind k, const std::string& msg) : Error(msg), kind(k) {}
};

inline const char* to_string(PromiseViolationKind k) {
  switch (k) {
    case PromiseViolationKind::KbConsistent: return "kb-consistent";
    case PromiseViolationKind::KbInconsistent: return "kb-inconsistent";
    case PromiseViolationKind::ObsAlreadyEntailed: return "obs-already-entailed";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Symbols: interned (kind, text) pairs; equality is identity.

enum class SymbolKind { ConceptName, RoleName, Individual };

inline bool is_identifier(std::string_view t) {
  if (t.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(t[0]))) return false;
  for (char c : t)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

class Symbol {
 public:
  Symbol() = default;

  static Symbol concept_name(std::string_view t) { return intern(SymbolKind::ConceptName, t); }
  static Symbol role_name(std::string_view t) { return intern(SymbolKind::RoleName, t); }
  static Symbol individual(std::string_view t) { return intern(SymbolKind::Individual, t); }

  bool null() const { return p_ == nullptr; }
  const std::string& text() const {
    static const std::string empty;
    return p_ ? p_->second : empty;
  }
  SymbolKind kind() const { return p_ ? p_->first : SymbolKind::ConceptName; }

  bool operator==(const Symbol&) const = default;
  // Canonical order: by text, then kind; the null symbol sorts first.
  bool operator<(const Symbol& o) const {
    if (p_ == o.p_) return false;
    if (!p_ || !o.p_) return !p_;
    if (p_->second != o.p_->second) return p_->second < o.p_->second;
    return p_->first < o.p_->first;
  }

 private:
  using Entry = std::pair<SymbolKind, std::string>;

  explicit Symbol(const Entry* p) : p_(p) {}

  static Symbol intern(SymbolKind k, std::string_view t) {
    if (!is_identifier(t)) throw InvalidInput("invalid identifier: '" + std::string(t) + "'");
    static std::mutex mu;
    static std::set<Entry> pool;  // node addresses are stable
    std::lock_guard<std::mutex> lock(mu);
    auto it = pool.emplace(k, std::string(t)).first;
    return Symbol(&*it);
  }

  const Entry* p_ = nullptr;
};

// ---------------------------------------------------------------------------
// Roles and concepts

struct Role {
  Symbol name;
  bool inverted = false;

  Role inverse() const { return {name, !inverted}; }
  bool operator==(const Role&) const = default;
  bool operator<(const Role& o) const {
    if (name != o.name) return name < o.name;
    return inverted < o.inverted;
  }
};

inline std::string to_string(const Role& r) {
  return r.inverted ? "inv(" + r.name.text() + ")" : r.name.text();
}

enum class ConceptKind { Top, Bot, Atomic, And, Some, Exists, Not };

struct Concept;
using ConceptRef = std::shared_ptr<const Concept>;

struct Concept {
  ConceptKind kind;
  Symbol name;       // Atomic
  Role role;         // Some / Exists
  ConceptRef left;   // And lhs / Some filler / Not inner
  ConceptRef right;  // And rhs

  static ConceptRef top() {
    static const ConceptRef c = std::make_shared<Concept>(Concept{ConceptKind::Top, {}, {}, {}, {}});
    return c;
  }
  static ConceptRef bot() {
    static const ConceptRef c = std::make_shared<Concept>(Concept{ConceptKind::Bot, {}, {}, {}, {}});
    return c;
  }
  static ConceptRef atomic(Symbol name) {
    return std::make_shared<Concept>(Concept{ConceptKind::Atomic, name, {}, {}, {}});
  }
  static ConceptRef conj(ConceptRef l, ConceptRef r) {
    return std::make_shared<Concept>(Concept{ConceptKind::And, {}, {}, std::move(l), std::move(r)});
  }
  static ConceptRef some(Role role, ConceptRef filler) {
    return std::make_shared<Concept>(Concept{ConceptKind::Some, {}, role, std::move(filler), {}});
  }
  static ConceptRef exists(Role role) {
    return std::make_shared<Concept>(Concept{ConceptKind::Exists, {}, role, {}, {}});
  }
  static ConceptRef negation(ConceptRef inner) {
    if (!inner || (inner->kind != ConceptKind::Atomic && inner->kind != ConceptKind::Exists))
      throw InvalidInput("negation applies only to atomic or existential basic concepts");
    return std::make_shared<Concept>(Concept{ConceptKind::Not, {}, {}, std::move(inner), {}});
  }
};

inline bool equal(const ConceptRef& a, const ConceptRef& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case ConceptKind::Top:
    case ConceptKind::Bot: return true;
    case ConceptKind::Atomic: return a->name == b->name;
    case ConceptKind::And: return equal(a->left, b->left) && equal(a->right, b->right);
    case ConceptKind::Some: return a->role == b->role && equal(a->left, b->left);
    case ConceptKind::Exists: return a->role == b->role;
    case ConceptKind::Not: return equal(a->left, b->left);
  }
  return false;
}

inline std::string to_string(const Concept& c) {
  switch (c.kind) {
    case ConceptKind::Top: return "top";
    case ConceptKind::Bot: return "bot";
    case ConceptKind::Atomic: return c.name.text();
    case ConceptKind::And: return "(" + to_string(*c.left) + " and " + to_string(*c.right) + ")";
    case ConceptKind::Some: return "(some " + to_string(c.role) + " " + to_string(*c.left) + ")";
    case ConceptKind::Exists: return "(some " + to_string(c.role) + ")";
    case ConceptKind::Not: return "not(" + to_string(*c.left) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Axioms and TBoxes

struct ConceptInclusion {
  ConceptRef lhs, rhs;
  bool operator==(const ConceptInclusion& o) const { return equal(lhs, o.lhs) && equal(rhs, o.rhs); }
};

struct RoleInclusion {
  Role lhs, rhs;
  bool rhsNegated = false;
  bool operator==(const RoleInclusion&) const = default;
};

using Axiom = std::variant<ConceptInclusion, RoleInclusion>;
using TBox = std::vector<Axiom>;

inline std::string to_string(const Axiom& ax) {
  if (const auto* ci = std::get_if<ConceptInclusion>(&ax))
    return to_string(*ci->lhs) + " <= " + to_string(*ci->rhs);
  const auto& ri = std::get<RoleInclusion>(ax);
  std::string rhs = to_string(ri.rhs);
  if (ri.rhsNegated) rhs = "not(" + rhs + ")";
  return "role " + to_string(ri.lhs) + " <= " + rhs;
}

// ---------------------------------------------------------------------------
// Assertions and ABoxes

struct Assertion {
  bool is_role = false;
  Symbol pred;  // concept name or role name
  Symbol a, b;  // individuals; b is null for concept assertions

  static Assertion concept_assertion(Symbol c, Symbol ind) { return {false, c, ind, {}}; }
  static Assertion role_assertion(Symbol r, Symbol x, Symbol y) { return {true, r, x, y}; }

  bool operator==(const Assertion&) const = default;
  // Canonical order: concept assertions first, then lexicographic.
  bool operator<(const Assertion& o) const {
    if (is_role != o.is_role) return !is_role;
    if (pred != o.pred) return pred < o.pred;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

inline std::string to_string(const Assertion& x) {
  return x.is_role ? x.pred.text() + "(" + x.a.text() + ", " + x.b.text() + ")"
                   : x.pred.text() + "(" + x.a.text() + ")";
}

// Duplicate-free, canonically ordered assertion collection.
class ABox {
 public:
  ABox() = default;
  explicit ABox(std::vector<Assertion> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  const std::vector<Assertion>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(const Assertion& x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
  }
  void insert(const Assertion& x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || !(*it == x)) items_.insert(it, x);
  }
  void erase(const Assertion& x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it != items_.end() && *it == x) items_.erase(it);
  }

  friend ABox operator|(const ABox& l, const ABox& r) {
    std::vector<Assertion> merged;
    merged.reserve(l.size() + r.size());
    std::set_union(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(merged));
    return ABox(std::move(merged));
  }

  bool operator==(const ABox&) const = default;

 private:
  std::vector<Assertion> items_;  // sorted, unique
};

// ---------------------------------------------------------------------------
// KBs and signatures

enum class Dialect { DlliteCore, DlliteR, Elbot };

inline bool is_dllite(Dialect d) { return d != Dialect::Elbot; }

inline const char* to_string(Dialect d) {
  switch (d) {
    case Dialect::DlliteCore: return "dllite-core";
    case Dialect::DlliteR: return "dllite-r";
    case Dialect::Elbot: return "elbot";
  }
  return "?";
}

inline std::optional<Dialect> dialect_from_string(std::string_view s) {
  if (s == "dllite-core") return Dialect::DlliteCore;
  if (s == "dllite-r") return Dialect::DlliteR;
  if (s == "elbot") return Dialect::Elbot;
  return std::nullopt;
}

struct KB {
  Dialect dialect = Dialect::Elbot;
  TBox tbox;
  ABox abox;

  bool operator==(const KB&) const = default;
};

struct Signature {
  std::set<Symbol> concepts;
  std::set<Symbol> roles;
  std::set<Symbol> individuals;
};

inline void collect_symbols(const ConceptRef& c, Signature& sig) {
  if (!c) return;
  switch (c->kind) {
    case ConceptKind::Atomic: sig.concepts.insert(c->name); break;
    case ConceptKind::And:
      collect_symbols(c->left, sig);
      collect_symbols(c->right, sig);
      break;
    case ConceptKind::Some:
      sig.roles.insert(c->role.name);
      collect_symbols(c->left, sig);
      break;
    case ConceptKind::Exists: sig.roles.insert(c->role.name); break;
    case ConceptKind::Not: collect_symbols(c->left, sig); break;
    default: break;
  }
}

inline void collect_symbols(const Assertion& x, Signature& sig) {
  if (x.is_role) {
    sig.roles.insert(x.pred);
    sig.individuals.insert(x.a);
    sig.individuals.insert(x.b);
  } else {
    sig.concepts.insert(x.pred);
    sig.individuals.insert(x.a);
  }
}

inline Signature symbols_of(const KB& kb) {
  Signature sig;
  for (const Axiom& ax : kb.tbox) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
      collect_symbols(ci->lhs, sig);
      collect_symbols(ci->rhs, sig);
    } else {
      const auto& ri = std::get<RoleInclusion>(ax);
      sig.roles.insert(ri.lhs.name);
      sig.roles.insert(ri.rhs.name);
    }
  }
  for (const Assertion& x : kb.abox) collect_symbols(x, sig);
  return sig;
}

// ---------------------------------------------------------------------------
// Dialect validation

namespace detail {

inline bool elbot_concept(const ConceptRef& c) {
  if (!c) return false;
  switch (c->kind) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
    case ConceptKind::Atomic: return true;
    case ConceptKind::And: return elbot_concept(c->left) && elbot_concept(c->right);
    case ConceptKind::Some: return !c->role.inverted && elbot_concept(c->left);
    default: return false;
  }
}

inline bool dllite_basic(const ConceptRef& c) {
  return c && (c->kind == ConceptKind::Atomic || c->kind == ConceptKind::Exists);
}

inline bool dllite_rhs(const ConceptRef& c) {
  if (dllite_basic(c)) return true;
  return c && c->kind == ConceptKind::Not && dllite_basic(c->left);
}

}  // namespace detail

// Succeeds iff every axiom conforms to kb.dialect; throws on the first offender.
inline void validate_dialect(const KB& kb) {
  auto fail = [&](const Axiom& ax) {
    throw DialectViolation("axiom '" + to_string(ax) + "' is not valid in dialect " +
                           to_string(kb.dialect));
  };
  for (const Axiom& ax : kb.tbox) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
      if (kb.dialect == Dialect::Elbot) {
        if (!detail::elbot_concept(ci->lhs) || !detail::elbot_concept(ci->rhs)) fail(ax);
      } else {
        if (!detail::dllite_basic(ci->lhs) || !detail::dllite_rhs(ci->rhs)) fail(ax);
      }
    } else {
      if (kb.dialect != Dialect::DlliteR) fail(ax);
    }
  }
}

// ---------------------------------------------------------------------------
// Candidate universe

// All assertions buildable from the given (or occurring) concept/role names and
// the individuals of kb and obs. Signature individuals outside kb∪obs are
// dropped; a note per dropped individual is appended to `warnings` if provided.
inline ABox candidate_universe(const KB& kb, const Assertion& obs,
                               const std::optional<Signature>& sig = std::nullopt,
                               std::vector<std::string>* warnings = nullptr) {
  Signature occ = symbols_of(kb);
  collect_symbols(obs, occ);

  std::set<Symbol> concepts = sig ? sig->concepts : occ.concepts;
  std::set<Symbol> roles = sig ? sig->roles : occ.roles;
  std::set<Symbol> individuals = occ.individuals;
  if (sig) {
    std::set<Symbol> kept;
    for (const Symbol& ind : sig->individuals) {
      if (individuals.count(ind)) {
        kept.insert(ind);
      } else if (warnings) {
        warnings->push_back("signature individual '" + ind.text() +
                            "' does not occur in the KB or observation; dropped");
      }
    }
    individuals = std::move(kept);
  }

  std::vector<Assertion> out;
  for (const Symbol& c : concepts)
    for (const Symbol& i : individuals) out.push_back(Assertion::concept_assertion(c, i));
  for (const Symbol& r : roles)
    for (const Symbol& i : individuals)
      for (const Symbol& j : individuals) out.push_back(Assertion::role_assertion(r, i, j));
  return ABox(std::move(out));
}

// ---------------------------------------------------------------------------
// Serialization (canonical; parse_kb of the output reproduces the KB)

inline std::string serialize_kb(const KB& kb) {
  std::string out = "DIALECT " + std::string(to_string(kb.dialect)) + "\nTBOX\n";
  for (const Axiom& ax : kb.tbox) out += to_string(ax) + "\n";
  out += "ABOX\n";
  for (const Assertion& x : kb.abox) out += to_string(x) + "\n";
  return out;
}

inline std::string serialize_abox(const ABox& abox) {
  std::string out;
  for (const Assertion& x : abox) out += to_string(x) + "\n";
  return out;
}

inline std::string serialize_signature(const Signature& sig) {
  std::string out;
  for (const Symbol& s : sig.concepts) out += "concept " + s.text() + "\n";
  for (const Symbol& s : sig.roles) out += "role " + s.text() + "\n";
  for (const Symbol& s : sig.individuals) out += "individual " + s.text() + "\n";
  return out;
}

}  // namespace abduce
