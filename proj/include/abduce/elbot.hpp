// EL-with-bottom reasoning: TBox normalization to flat rule forms over an
// integer id space, then completion-rule saturation of a node graph (named
// individuals, a generic probe element, and lazily created witness nodes).
// Consistency = bottom derived at a node; entailment = label membership.
#pragma once

#include <array>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "abduce/core.hpp"

namespace abduce {

// Read-only view of a saturated ABox: derived atomic memberships per named
// individual, plus the clash flag.
struct Saturation {
  bool clash = false;
  std::map<Symbol, std::set<Symbol>> memberships;
};

class ElbotEngine {
 public:
  explicit ElbotEngine(const TBox& tbox) {
    id_name_.assign(2, Symbol{});  // 0 = top, 1 = bottom
    for (const Axiom& ax : tbox) {
      const auto* ci = std::get_if<ConceptInclusion>(&ax);
      if (!ci) throw InvalidInput("role axioms are not part of this dialect");
      int l = flatten_lhs(ci->lhs);
      int r = flatten_rhs(ci->rhs);
      subs_.push_back({l, r});
    }
    int n = width();
    subs_by_lhs_.assign(n, {});
    for (auto [a, b] : subs_) subs_by_lhs_[a].push_back(b);
    conj_by_atom_.assign(n, {});
    for (std::size_t i = 0; i < conjs_.size(); ++i) {
      conj_by_atom_[conjs_[i][0]].push_back(static_cast<int>(i));
      if (conjs_[i][1] != conjs_[i][0])
        conj_by_atom_[conjs_[i][1]].push_back(static_cast<int>(i));
    }
    somes_right_by_lhs_.assign(n, {});
    for (auto [a, r, b] : somes_right_) somes_right_by_lhs_[a].push_back({r, b});
    somes_left_by_role_.assign(role_names_.size(), {});
    for (auto [r, a, b] : somes_left_) somes_left_by_role_[r].push_back({a, b});
  }

  bool consistent(const ABox& a) const {
    Run g = make_run(a);
    saturate(g, /*stop_on_clash=*/true);
    return !g.clash;
  }

  // Classical entailment, vacuously true on inconsistent input.
  bool entails(const ABox& a, const Assertion& obs) const {
    if (obs.is_role) return a.contains(obs) || !consistent(a);
    Run g = make_run(a);
    saturate(g, /*stop_on_clash=*/true);
    if (g.clash) return true;
    int id = g.id_of(obs.pred, *this);
    if (id < 0) return false;
    auto it = g.node_of.find(obs.a);
    int node = it == g.node_of.end() ? 0 : it->second;  // 0 = generic probe
    return g.label[node][id];
  }

  bool concept_satisfiable(Symbol name) const {
    ABox probe(std::vector<Assertion>{
        Assertion::concept_assertion(name, Symbol::individual("sat_probe"))});
    return consistent(probe);
  }

  // Full closure of an ABox for inspection.
  Saturation saturate_abox(const ABox& a) const {
    Run g = make_run(a);
    saturate(g, /*stop_on_clash=*/false);
    Saturation out;
    out.clash = g.clash;
    for (const auto& [ind, node] : g.node_of) {
      std::set<Symbol>& names = out.memberships[ind];
      for (int id = 0; id < g.width; ++id)
        if (g.label[node][id]) {
          Symbol s = g.name_of(id, *this);
          if (!s.null()) names.insert(s);
        }
    }
    return out;
  }

  // Derived subsumptions between the atomic concept names of the axioms
  // (reflexive pairs included; unsatisfiable names subsume everything).
  std::vector<std::pair<Symbol, Symbol>> derived_subsumptions() const {
    Run g;
    g.width = width();
    g.new_node(*this);  // probe
    std::vector<std::pair<Symbol, int>> seeds;
    for (int id = 2; id < width(); ++id) {
      if (id_name_[id].null()) continue;
      int v = g.new_node(*this);
      g.label[v][id] = true;
      seeds.push_back({id_name_[id], v});
    }
    saturate(g, /*stop_on_clash=*/false);
    std::vector<std::pair<Symbol, Symbol>> out;
    for (const auto& [name, v] : seeds) {
      if (g.label[v][1]) {  // unsatisfiable name
        for (const auto& [other, w] : seeds) out.push_back({name, other});
        continue;
      }
      for (int id = 2; id < width(); ++id)
        if (g.label[v][id] && !id_name_[id].null()) out.push_back({name, id_name_[id]});
    }
    return out;
  }

 private:
  // --- normalized rule forms over ids (0 = top, 1 = bottom) ---------------

  int width() const { return static_cast<int>(id_name_.size()); }

  int ensure_atom(Symbol s) {
    auto it = atom_id_.find(s);
    if (it != atom_id_.end()) return it->second;
    int id = width();
    id_name_.push_back(s);
    atom_id_.emplace(s, id);
    return id;
  }

  int fresh() {
    int id = width();
    id_name_.push_back({});
    return id;
  }

  int ensure_role(Symbol s) {
    auto it = role_id_.find(s);
    if (it != role_id_.end()) return it->second;
    int id = static_cast<int>(role_names_.size());
    role_names_.push_back(s);
    role_id_.emplace(s, id);
    return id;
  }

  // Returns n such that every element satisfying c also satisfies n.
  int flatten_lhs(const ConceptRef& c) {
    switch (c->kind) {
      case ConceptKind::Top: return 0;
      case ConceptKind::Bot: return 1;
      case ConceptKind::Atomic: return ensure_atom(c->name);
      case ConceptKind::And: {
        int l = flatten_lhs(c->left), r = flatten_lhs(c->right);
        int n = fresh();
        conjs_.push_back({l, r, n});
        return n;
      }
      case ConceptKind::Some: {
        int f = flatten_lhs(c->left);
        int n = fresh();
        somes_left_.push_back({ensure_role(c->role.name), f, n});
        return n;
      }
      default: throw InvalidInput("concept not valid on an axiom side: " + to_string(*c));
    }
  }

  // Returns n such that every element satisfying n also satisfies c.
  int flatten_rhs(const ConceptRef& c) {
    switch (c->kind) {
      case ConceptKind::Top: return 0;
      case ConceptKind::Bot: return 1;
      case ConceptKind::Atomic: return ensure_atom(c->name);
      case ConceptKind::And: {
        int l = flatten_rhs(c->left), r = flatten_rhs(c->right);
        int n = fresh();
        subs_.push_back({n, l});
        subs_.push_back({n, r});
        return n;
      }
      case ConceptKind::Some: {
        int f = flatten_rhs(c->left);
        int n = fresh();
        somes_right_.push_back({n, ensure_role(c->role.name), f});
        return n;
      }
      default: throw InvalidInput("concept not valid on an axiom side: " + to_string(*c));
    }
  }

  // --- saturation ----------------------------------------------------------

  struct Run {
    int width = 0;
    std::vector<std::vector<bool>> label;                 // node -> ids
    std::vector<std::vector<std::pair<int, int>>> edges;  // role -> (from, to)
    std::set<std::tuple<int, int, int>> edge_set;         // (role, from, to)
    std::map<int, int> witness_of;                        // filler id -> node
    std::map<Symbol, int> node_of;                        // named individual -> node
    std::map<Symbol, int> extra_id;                       // names outside the axioms
    bool clash = false;

    int new_node(const ElbotEngine& eng) {
      label.push_back(std::vector<bool>(width, false));
      label.back()[0] = true;  // top holds everywhere
      if (edges.empty()) edges.assign(eng.role_names_.size(), {});
      return static_cast<int>(label.size()) - 1;
    }

    bool add(int node, int id) {
      if (label[node][id]) return false;
      label[node][id] = true;
      if (id == 1) clash = true;
      return true;
    }

    int id_of(Symbol name, const ElbotEngine& eng) const {
      auto it = eng.atom_id_.find(name);
      if (it != eng.atom_id_.end()) return it->second;
      auto ex = extra_id.find(name);
      return ex == extra_id.end() ? -1 : ex->second;
    }

    Symbol name_of(int id, const ElbotEngine& eng) const {
      if (id < static_cast<int>(eng.id_name_.size())) return eng.id_name_[id];
      for (const auto& [sym, ex] : extra_id)
        if (ex == id) return sym;
      return {};
    }
  };

  Run make_run(const ABox& a) const {
    Run g;
    g.width = width();
    for (const Assertion& x : a)
      if (!x.is_role && !atom_id_.count(x.pred) && !g.extra_id.count(x.pred))
        g.extra_id.emplace(x.pred, g.width++);
    g.new_node(*this);  // node 0: generic probe element
    auto node = [&](Symbol ind) {
      auto it = g.node_of.find(ind);
      if (it != g.node_of.end()) return it->second;
      int v = g.new_node(*this);
      g.node_of.emplace(ind, v);
      return v;
    };
    for (const Assertion& x : a) {
      if (x.is_role) {
        int from = node(x.a), to = node(x.b);
        auto it = role_id_.find(x.pred);
        if (it != role_id_.end()) {  // roles outside the axioms carry no rules
          g.edges[it->second].push_back({from, to});
          g.edge_set.insert({it->second, from, to});
        }
      } else {
        g.add(node(x.a), g.id_of(x.pred, *this));
      }
    }
    return g;
  }

  bool ensure_witness_edge(Run& g, int from, int role, int filler) const {
    auto it = g.witness_of.find(filler);
    int hub;
    if (it != g.witness_of.end()) {
      hub = it->second;
    } else {
      hub = g.new_node(*this);
      g.witness_of.emplace(filler, hub);
      g.add(hub, filler);
    }
    if (!g.edge_set.insert({role, from, hub}).second) return false;
    g.edges[role].push_back({from, hub});
    return true;
  }

  void saturate(Run& g, bool stop_on_clash) const {
    bool changed = true;
    while (changed && !(stop_on_clash && g.clash)) {
      changed = false;
      for (std::size_t v = 0; v < g.label.size(); ++v) {
        for (int a = 0; a < width(); ++a) {
          if (!g.label[v][a]) continue;
          for (int b : subs_by_lhs_[a]) changed |= g.add(static_cast<int>(v), b);
          for (int ci : conj_by_atom_[a]) {
            const auto& c = conjs_[ci];
            if (g.label[v][c[0]] && g.label[v][c[1]])
              changed |= g.add(static_cast<int>(v), c[2]);
          }
          for (auto [r, b] : somes_right_by_lhs_[a])
            changed |= ensure_witness_edge(g, static_cast<int>(v), r, b);
        }
      }
      for (std::size_t r = 0; r < g.edges.size(); ++r) {
        for (auto [from, to] : g.edges[r]) {
          for (auto [a, b] : somes_left_by_role_[r])
            if (g.label[to][a]) changed |= g.add(from, b);
          // an element whose required witness is impossible is itself impossible
          if (g.label[to][1]) changed |= g.add(from, 1);
        }
      }
    }
  }

  std::vector<Symbol> id_name_;  // null for top, bottom, and introduced names
  std::map<Symbol, int> atom_id_;
  std::vector<Symbol> role_names_;
  std::map<Symbol, int> role_id_;
  std::vector<std::array<int, 2>> subs_;         // a ⇒ b
  std::vector<std::array<int, 3>> conjs_;        // a0 ∧ a1 ⇒ b
  std::vector<std::array<int, 3>> somes_right_;  // a ⇒ witness via role with filler b
  std::vector<std::array<int, 3>> somes_left_;   // role-successor in a ⇒ b
  std::vector<std::vector<int>> subs_by_lhs_;
  std::vector<std::vector<int>> conj_by_atom_;
  std::vector<std::vector<std::pair<int, int>>> somes_right_by_lhs_;
  std::vector<std::vector<std::pair<int, int>>> somes_left_by_role_;
};

}  // namespace abduce
