// Combinatorial source objects consumed by the instance generators: CNF/DNF
// clause sets, prenex quantified Boolean formulas, and directed graphs, each
// with a plain-text format (DIMACS, QDIMACS, edge list) and small exhaustive
// oracles (satisfiability, QBF truth, reachability, minimal-unsatisfiability).
// Everything here is pure and engine-independent.
#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "abduce/core.hpp"

namespace abduce {

// Exhaustive-scan ceilings; larger inputs raise BudgetExceeded.
inline constexpr int kSatBruteMaxVariables = 24;
inline constexpr int kQbfBruteMaxVariables = 16;

// ---------------------------------------------------------------------------
// Clause sets. Literals are DIMACS-style signed 1-based variable indices.
// `dnf == false`: a conjunction of disjunctive clauses (CNF).
// `dnf == true`:  a disjunction of conjunctive terms, stored in the same
// container (the text format marks it with a `c form=dnf` comment).

using Clause = std::vector<int>;

struct Cnf {
  int variables = 0;
  std::vector<Clause> clauses;
  bool dnf = false;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

inline void validate(const Cnf& f) {
  if (f.variables < 0) throw InvalidSource("negative variable count");
  for (const Clause& clause : f.clauses) {
    if (clause.empty()) throw InvalidSource("empty clause");
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.variables)
        throw InvalidSource("literal " + std::to_string(lit) + " outside 1.." +
                            std::to_string(f.variables));
    }
  }
}

// Truth under a total assignment (bit v-1 of `assignment` is variable v).
// An empty CNF is true; an empty DNF is false.
inline bool literal_true(int lit, std::uint32_t assignment) {
  bool value = (assignment >> (std::abs(lit) - 1)) & 1u;
  return lit > 0 ? value : !value;
}

inline bool eval_clauses(const Cnf& f, std::uint32_t assignment) {
  if (f.dnf) {
    for (const Clause& term : f.clauses) {
      bool all = true;
      for (int lit : term) all = all && literal_true(lit, assignment);
      if (all) return true;
    }
    return false;
  }
  for (const Clause& clause : f.clauses) {
    bool any = false;
    for (int lit : clause) any = any || literal_true(lit, assignment);
    if (!any) return false;
  }
  return true;
}

// Satisfiability by assignment scan.
inline bool sat_brute(const Cnf& f) {
  validate(f);
  if (f.variables > kSatBruteMaxVariables)
    throw BudgetExceeded("satisfiability scan over " + std::to_string(f.variables) +
                         " variables exceeds the 2^" + std::to_string(kSatBruteMaxVariables) +
                         " cap");
  const std::uint32_t limit = std::uint32_t{1} << f.variables;
  for (std::uint32_t m = 0; m < limit; ++m)
    if (eval_clauses(f, m)) return true;
  return false;
}

// De Morgan negation: flips the form tag and every literal, so a CNF becomes
// the DNF of its clause-wise negations and vice versa.
inline Cnf negate(Cnf f) {
  f.dnf = !f.dnf;
  for (Clause& clause : f.clauses)
    for (int& lit : clause) lit = -lit;
  return f;
}

// The clause set {f.clauses[i] | i in `which`} over the same variables.
inline Cnf select_clauses(const Cnf& f, const std::vector<std::size_t>& which) {
  Cnf out;
  out.variables = f.variables;
  out.dnf = f.dnf;
  for (std::size_t i : which) {
    if (i >= f.clauses.size()) throw InvalidSource("clause index out of range");
    out.clauses.push_back(f.clauses[i]);
  }
  return out;
}

// Whether the sub-clause-set of `f` named by `which` is minimally
// unsatisfiable: unsatisfiable, and satisfiable after dropping any one
// clause. Removing one clause at a time is enough, because satisfiability
// only grows as clauses are removed.
inline bool is_mus_brute(const Cnf& f, const std::vector<std::size_t>& which) {
  Cnf sub = select_clauses(f, which);
  if (sub.dnf) throw InvalidSource("minimal-unsatisfiability check expects CNF");
  if (sat_brute(sub)) return false;
  for (std::size_t drop = 0; drop < sub.clauses.size(); ++drop) {
    Cnf smaller = sub;
    smaller.clauses.erase(smaller.clauses.begin() + static_cast<std::ptrdiff_t>(drop));
    if (!sat_brute(smaller)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// DIMACS text form. Comments (`c ...`) are skipped, except that a comment
// containing the token `form=dnf` marks the clause container as a DNF.

inline Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  Cnf f;
  bool saw_header = false;
  long declared_clauses = 0;
  std::string line;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "c") {
      std::string word;
      while (ls >> word)
        if (word == "form=dnf") f.dnf = true;
      continue;
    }
    if (first == "p") {
      std::string kind;
      if (saw_header || !(ls >> kind >> f.variables >> declared_clauses) || kind != "cnf")
        throw InvalidSource("malformed DIMACS header");
      saw_header = true;
      continue;
    }
    if (!saw_header) throw InvalidSource("DIMACS clauses before header");
    std::istringstream rest(line);
    int lit = 0;
    while (rest >> lit) {
      if (lit == 0) {
        if (pending.empty()) throw InvalidSource("empty clause");
        f.clauses.push_back(std::move(pending));
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (!rest.eof()) throw InvalidSource("non-integer token in DIMACS clause");
  }
  if (!saw_header) throw InvalidSource("missing DIMACS header");
  if (!pending.empty()) f.clauses.push_back(std::move(pending));
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    throw InvalidSource("DIMACS header declares " + std::to_string(declared_clauses) +
                        " clauses but " + std::to_string(f.clauses.size()) + " were given");
  validate(f);
  return f;
}

inline std::string serialize_dimacs(const Cnf& f) {
  std::ostringstream out;
  if (f.dnf) out << "c form=dnf\n";
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const Clause& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Prenex quantified Boolean formulas. The formula must be closed: every
// matrix variable appears in exactly one prefix block.

struct QuantifierBlock {
  bool exists = false;
  std::vector<int> variables;

  friend bool operator==(const QuantifierBlock&, const QuantifierBlock&) = default;
};

struct Qbf {
  std::vector<QuantifierBlock> prefix;
  Cnf matrix;

  friend bool operator==(const Qbf&, const Qbf&) = default;
};

inline void validate(const Qbf& q) {
  validate(q.matrix);
  std::vector<int> seen(static_cast<std::size_t>(q.matrix.variables), 0);
  for (const QuantifierBlock& block : q.prefix) {
    if (block.variables.empty()) throw InvalidSource("empty quantifier block");
    for (int v : block.variables) {
      if (v <= 0 || v > q.matrix.variables)
        throw InvalidSource("quantified variable " + std::to_string(v) + " outside 1.." +
                            std::to_string(q.matrix.variables));
      ++seen[static_cast<std::size_t>(v - 1)];
    }
  }
  for (int v = 1; v <= q.matrix.variables; ++v)
    if (seen[static_cast<std::size_t>(v - 1)] != 1)
      throw InvalidSource("variable " + std::to_string(v) + " must be quantified exactly once");
}

// De Morgan dual: flips every quantifier and negates the matrix.
inline Qbf negate(Qbf q) {
  for (QuantifierBlock& block : q.prefix) block.exists = !block.exists;
  q.matrix = negate(std::move(q.matrix));
  return q;
}

namespace detail {
inline bool qbf_rec(const std::vector<std::pair<bool, int>>& order, std::size_t i,
                    const Cnf& matrix, std::uint32_t assignment) {
  if (i == order.size()) return eval_clauses(matrix, assignment);
  const auto [exists, var] = order[i];
  bool with = qbf_rec(order, i + 1, matrix,
                      assignment | (std::uint32_t{1} << (var - 1)));
  if (exists && with) return true;
  if (!exists && !with) return false;
  return qbf_rec(order, i + 1, matrix, assignment);
}
}  // namespace detail

// Truth by recursive expansion of the prefix.
inline bool qbf_brute(const Qbf& q) {
  validate(q);
  if (q.matrix.variables > kQbfBruteMaxVariables)
    throw BudgetExceeded("quantifier expansion over " + std::to_string(q.matrix.variables) +
                         " variables exceeds the 2^" +
                         std::to_string(kQbfBruteMaxVariables) + " cap");
  std::vector<std::pair<bool, int>> order;
  for (const QuantifierBlock& block : q.prefix)
    for (int v : block.variables) order.emplace_back(block.exists, v);
  return detail::qbf_rec(order, 0, q.matrix, 0);
}

// ---------------------------------------------------------------------------
// QDIMACS text form: a DIMACS body preceded by quantifier lines
// (`a 1 2 0` / `e 3 0`) between the header and the clauses.

inline Qbf parse_qdimacs(const std::string& text) {
  std::istringstream in(text);
  Qbf q;
  bool saw_header = false;
  bool in_clauses = false;
  long declared_clauses = 0;
  std::string line;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      std::string word;
      while (ls >> word)
        if (word == "form=dnf") q.matrix.dnf = true;
      continue;
    }
    if (first == "p") {
      std::string kind;
      if (saw_header || !(ls >> kind >> q.matrix.variables >> declared_clauses) ||
          kind != "cnf")
        throw InvalidSource("malformed QDIMACS header");
      saw_header = true;
      continue;
    }
    if (!saw_header) throw InvalidSource("QDIMACS content before header");
    if (first == "a" || first == "e") {
      if (in_clauses) throw InvalidSource("quantifier line after clauses");
      QuantifierBlock block;
      block.exists = first == "e";
      int v = 0;
      bool closed = false;
      while (ls >> v) {
        if (v == 0) {
          closed = true;
          break;
        }
        block.variables.push_back(v);
      }
      if (!closed || block.variables.empty())
        throw InvalidSource("malformed quantifier line");
      q.prefix.push_back(std::move(block));
      continue;
    }
    in_clauses = true;
    std::istringstream rest(line);
    int lit = 0;
    while (rest >> lit) {
      if (lit == 0) {
        if (pending.empty()) throw InvalidSource("empty clause");
        q.matrix.clauses.push_back(std::move(pending));
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (!rest.eof()) throw InvalidSource("non-integer token in QDIMACS clause");
  }
  if (!saw_header) throw InvalidSource("missing QDIMACS header");
  if (!pending.empty()) q.matrix.clauses.push_back(std::move(pending));
  if (static_cast<long>(q.matrix.clauses.size()) != declared_clauses)
    throw InvalidSource("QDIMACS header declares " + std::to_string(declared_clauses) +
                        " clauses but " + std::to_string(q.matrix.clauses.size()) +
                        " were given");
  validate(q);
  return q;
}

inline std::string serialize_qdimacs(const Qbf& q) {
  std::ostringstream out;
  if (q.matrix.dnf) out << "c form=dnf\n";
  out << "p cnf " << q.matrix.variables << ' ' << q.matrix.clauses.size() << '\n';
  for (const QuantifierBlock& block : q.prefix) {
    out << (block.exists ? 'e' : 'a');
    for (int v : block.variables) out << ' ' << v;
    out << " 0\n";
  }
  for (const Clause& clause : q.matrix.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Directed graphs with named nodes and distinguished source/target. The text
// form is a header `s=<node> t=<node>` followed by one `<u> <v>` edge per
// line; the node set is the header pair plus every edge endpoint.

struct Digraph {
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, std::string>> edges;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

namespace detail {
inline bool graph_name_ok(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}
}  // namespace detail

inline void validate(const Digraph& g) {
  if (!detail::graph_name_ok(g.source) || !detail::graph_name_ok(g.target))
    throw InvalidSource("source/target names must be nonempty [A-Za-z0-9_]+");
  for (const auto& [u, v] : g.edges)
    if (!detail::graph_name_ok(u) || !detail::graph_name_ok(v))
      throw InvalidSource("edge endpoint names must be nonempty [A-Za-z0-9_]+");
}

// All node names, sorted and de-duplicated.
inline std::vector<std::string> graph_nodes(const Digraph& g) {
  std::set<std::string> names{g.source, g.target};
  for (const auto& [u, v] : g.edges) {
    names.insert(u);
    names.insert(v);
  }
  return {names.begin(), names.end()};
}

// Breadth-first reachability from `from` to `to` (true when equal).
inline bool reachable(const Digraph& g, const std::string& from, const std::string& to) {
  if (from == to) return true;
  std::map<std::string, std::vector<std::string>> adjacent;
  for (const auto& [u, v] : g.edges) adjacent[u].push_back(v);
  std::set<std::string> seen{from};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    std::string node = std::move(queue.front());
    queue.pop_front();
    for (const std::string& next : adjacent[node]) {
      if (next == to) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

inline Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  Digraph g;
  bool saw_header = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first.front() == '#') continue;
    if (!saw_header) {
      std::string second;
      if (!(ls >> second) || first.rfind("s=", 0) != 0 || second.rfind("t=", 0) != 0)
        throw InvalidSource("digraph must start with header `s=<node> t=<node>`");
      g.source = first.substr(2);
      g.target = second.substr(2);
      saw_header = true;
      continue;
    }
    std::string v;
    std::string extra;
    if (!(ls >> v) || (ls >> extra))
      throw InvalidSource("edge lines must be exactly `<u> <v>`");
    g.edges.emplace_back(first, v);
  }
  if (!saw_header) throw InvalidSource("missing digraph header");
  validate(g);
  return g;
}

inline std::string serialize_digraph(const Digraph& g) {
  std::ostringstream out;
  out << "s=" << g.source << " t=" << g.target << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace abduce
