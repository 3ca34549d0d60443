// DL-Lite reasoning: a closure graph over basic concepts and role orientations
// with positive-subsumption and disjointness matrices. Consistency reduces to
// singleton/pair clash scans; entailment to positive reachability from a
// single assertion.
#pragma once

#include <array>
#include <map>
#include <unordered_map>
#include <vector>

#include "abduce/core.hpp"

namespace abduce {

struct BasicConcept {
  bool is_exists = false;
  Symbol name;  // atomic concept name, when !is_exists
  Role role;    // when is_exists

  static BasicConcept atomic(Symbol n) { return {false, n, {}}; }
  static BasicConcept exists(Role q) { return {true, {}, q}; }

  bool operator==(const BasicConcept&) const = default;
  bool operator<(const BasicConcept& o) const {
    if (is_exists != o.is_exists) return !is_exists;
    if (name != o.name) return name < o.name;
    return role < o.role;
  }
};

class ClosureGraph {
 public:
  explicit ClosureGraph(const TBox& tbox) {
    // Register roles (both orientations) and basic concepts occurring in T.
    for (const Axiom& ax : tbox) {
      if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
        register_basic(ci->lhs);
        register_basic(ci->rhs->kind == ConceptKind::Not ? ci->rhs->left : ci->rhs);
      } else {
        const auto& ri = std::get<RoleInclusion>(ax);
        register_role(ri.lhs);
        register_role(ri.rhs);
      }
    }
    for (const auto& [role, id] : rid_) concept_slot(BasicConcept::exists(role));

    int nr = static_cast<int>(rid_.size());
    rpos_.assign(nr, std::vector<bool>(nr, false));
    for (int i = 0; i < nr; ++i) rpos_[i][i] = true;
    std::vector<std::pair<int, int>> rneg_base;
    for (const Axiom& ax : tbox) {
      const auto* ri = std::get_if<RoleInclusion>(&ax);
      if (!ri) continue;
      int l = rid_.at(ri->lhs), r = rid_.at(ri->rhs);
      int li = rid_.at(ri->lhs.inverse()), rv = rid_.at(ri->rhs.inverse());
      if (ri->rhsNegated) {
        rneg_base.push_back({l, r});
        rneg_base.push_back({li, rv});
      } else {
        rpos_[l][r] = true;
        rpos_[li][rv] = true;
      }
    }
    transitive_close(rpos_);
    rneg_ = compose_disjointness(rpos_, rneg_base);

    // Concept-level positive edges: declared inclusions with a positive rhs,
    // plus existential edges induced by role subsumption.
    int nc = static_cast<int>(cid_.size());
    cpos_.assign(nc, std::vector<bool>(nc, false));
    for (int i = 0; i < nc; ++i) cpos_[i][i] = true;
    std::vector<std::pair<int, int>> cneg_base;
    for (const Axiom& ax : tbox) {
      const auto* ci = std::get_if<ConceptInclusion>(&ax);
      if (!ci) continue;
      int l = concept_id(basic_of(ci->lhs));
      if (ci->rhs->kind == ConceptKind::Not) {
        cneg_base.push_back({l, concept_id(basic_of(ci->rhs->left))});
      } else {
        cpos_[l][concept_id(basic_of(ci->rhs))] = true;
      }
    }
    for (const auto& [role, id] : rid_)
      for (const auto& [other, oid] : rid_)
        if (rpos_[id][oid])
          cpos_[concept_id(BasicConcept::exists(role))][concept_id(BasicConcept::exists(other))] =
              true;
    transitive_close(cpos_);
    cneg_ = compose_disjointness(cpos_, cneg_base);

    // Unsatisfiable-role propagation to fixpoint: a role whose domain concept
    // is unsatisfiable (or that is disjoint with itself) has no edges at all,
    // so its range concept is unsatisfiable too, and vice versa.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [role, id] : rid_) {
        int fwd = concept_id(BasicConcept::exists(role));
        int bwd = concept_id(BasicConcept::exists(role.inverse()));
        bool empty_role = rneg_[id][id] || cneg_[fwd][fwd] || cneg_[bwd][bwd];
        if (!empty_role) continue;
        for (int node : {fwd, bwd}) {
          if (!cneg_[node][node]) {
            cneg_base.push_back({node, node});
            changed = true;
          }
        }
      }
      if (changed) cneg_ = compose_disjointness(cpos_, cneg_base);
    }

    // Identity-keyed tables (symbols are interned, so the text address is a
    // unique key) let assertion scans resolve ids without string compares.
    for (const auto& [b, id] : cid_)
      if (!b.is_exists) atomic_ids_.emplace(&b.name.text(), id);
    for (const auto& [role, id] : rid_)
      if (!role.inverted)
        role_ids_.emplace(&role.name.text(),
                          std::array<int, 4>{id, rid_.at(role.inverse()),
                                             concept_id(BasicConcept::exists(role)),
                                             concept_id(BasicConcept::exists(role.inverse()))});
  }

  // Closure ids forced by one assertion, resolved once per scan. Ids are -1
  // for symbols the axioms never mention (those never clash or subsume).
  struct ResolvedIds {
    int type_a = -1;    // type forced at the first individual
    int type_b = -1;    // type forced at the second individual (roles only)
    int role = -1;      // role orientation id (roles only)
    int role_inv = -1;  // the opposite orientation
  };

  ResolvedIds resolve(const Assertion& x) const {
    ResolvedIds r;
    if (x.is_role) {
      auto it = role_ids_.find(&x.pred.text());
      if (it != role_ids_.end()) {
        r.role = it->second[0];
        r.role_inv = it->second[1];
        r.type_a = it->second[2];
        r.type_b = it->second[3];
      }
    } else {
      auto it = atomic_ids_.find(&x.pred.text());
      if (it != atomic_ids_.end()) r.type_a = it->second;
    }
    return r;
  }

  // Equivalent to !pair_consistent(x, x).
  bool resolved_self_clash(const Assertion& x, const ResolvedIds& rx) const {
    if (ids_disjoint(rx.type_a, rx.type_a)) return true;
    if (!x.is_role) return false;
    if (ids_disjoint(rx.type_b, rx.type_b)) return true;
    if (rx.role >= 0 && rneg_[rx.role][rx.role]) return true;
    if (x.a == x.b && (ids_disjoint(rx.type_a, rx.type_b) ||
                       (rx.role >= 0 && rneg_[rx.role][rx.role_inv])))
      return true;
    return false;
  }

  // Clash between two individually consistent assertions; equivalent to
  // !pair_consistent(x, y) once both pass the self check.
  bool resolved_cross_clash(const Assertion& x, const ResolvedIds& rx, const Assertion& y,
                            const ResolvedIds& ry) const {
    if (x.a == y.a && ids_disjoint(rx.type_a, ry.type_a)) return true;
    if (y.is_role && x.a == y.b && ids_disjoint(rx.type_a, ry.type_b)) return true;
    if (x.is_role) {
      if (x.b == y.a && ids_disjoint(rx.type_b, ry.type_a)) return true;
      if (y.is_role) {
        if (x.b == y.b && ids_disjoint(rx.type_b, ry.type_b)) return true;
        if (rx.role >= 0 && ry.role >= 0) {
          if (x.a == y.a && x.b == y.b && rneg_[rx.role][ry.role]) return true;
          if (x.a == y.b && x.b == y.a && rneg_[rx.role][ry.role_inv]) return true;
        }
      }
    }
    return false;
  }

  // Does x force, at `ind`, a type below the atomic concept `target_pred`?
  bool resolved_entails_atomic(const Assertion& x, const ResolvedIds& rx, const Symbol& ind,
                               const Symbol& target_pred, int target_id) const {
    if (!x.is_role) {
      if (!(x.a == ind)) return false;
      if (x.pred == target_pred) return true;
      return target_id >= 0 && rx.type_a >= 0 && cpos_[rx.type_a][target_id];
    }
    if (target_id < 0) return false;
    if (x.a == ind && rx.type_a >= 0 && cpos_[rx.type_a][target_id]) return true;
    if (x.b == ind && rx.type_b >= 0 && cpos_[rx.type_b][target_id]) return true;
    return false;
  }

  int atomic_id(Symbol name) const { return concept_id_or(BasicConcept::atomic(name)); }

  // x ⊑* y (reflexive-transitive positive closure).
  bool subsumed(const BasicConcept& x, const BasicConcept& y) const {
    if (x == y) return true;
    int i = concept_id_or(x), j = concept_id_or(y);
    return i >= 0 && j >= 0 && cpos_[i][j];
  }

  // x ⊓ y is unsatisfiable w.r.t. T.
  bool disjoint(const BasicConcept& x, const BasicConcept& y) const {
    int i = concept_id_or(x), j = concept_id_or(y);
    return i >= 0 && j >= 0 && cneg_[i][j];
  }

  bool role_subsumed(const Role& q, const Role& p) const {
    if (q == p) return true;
    auto i = rid_.find(q), j = rid_.find(p);
    return i != rid_.end() && j != rid_.end() && rpos_[i->second][j->second];
  }

  bool role_disjoint(const Role& q, const Role& p) const {
    auto i = rid_.find(q), j = rid_.find(p);
    return i != rid_.end() && j != rid_.end() && rneg_[i->second][j->second];
  }

  // Basic types the assertion forces on the given individual.
  static std::vector<BasicConcept> types_at(const Assertion& x, const Symbol& ind) {
    std::vector<BasicConcept> out;
    if (x.is_role) {
      Role r{x.pred, false};
      if (x.a == ind) out.push_back(BasicConcept::exists(r));
      if (x.b == ind) out.push_back(BasicConcept::exists(r.inverse()));
    } else if (x.a == ind) {
      out.push_back(BasicConcept::atomic(x.pred));
    }
    return out;
  }

  bool pair_consistent(const Assertion& x, const Assertion& y) const {
    std::vector<Symbol> inds{x.a};
    auto add = [&](Symbol s) {
      if (!s.null() && std::find(inds.begin(), inds.end(), s) == inds.end()) inds.push_back(s);
    };
    add(x.b);
    add(y.a);
    add(y.b);
    for (const Symbol& ind : inds) {
      std::vector<BasicConcept> types = types_at(x, ind);
      for (BasicConcept t : types_at(y, ind))
        if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
      for (std::size_t i = 0; i < types.size(); ++i)
        for (std::size_t j = i; j < types.size(); ++j)
          if (disjoint(types[i], types[j])) return false;
    }
    if (x.is_role && y.is_role) {
      Role r{x.pred, false}, s{y.pred, false};
      if (x.a == y.a && x.b == y.b && role_disjoint(r, s)) return false;
      if (x.a == y.b && x.b == y.a && role_disjoint(r, s.inverse())) return false;
    }
    return true;
  }

  bool self_consistent(const Assertion& x) const { return pair_consistent(x, x); }

 private:
  static BasicConcept basic_of(const ConceptRef& c) {
    if (c->kind == ConceptKind::Atomic) return BasicConcept::atomic(c->name);
    if (c->kind == ConceptKind::Exists) return BasicConcept::exists(c->role);
    throw InvalidInput("not a basic DL-Lite concept: " + to_string(*c));
  }

  void register_role(const Role& q) {
    Role fwd{q.name, false};
    rid_.emplace(fwd, static_cast<int>(rid_.size()));
    rid_.emplace(fwd.inverse(), static_cast<int>(rid_.size()));
  }

  void register_basic(const ConceptRef& c) {
    BasicConcept b = basic_of(c);
    if (b.is_exists) register_role(b.role);
    concept_slot(b);
  }

  int concept_slot(const BasicConcept& b) {
    auto it = cid_.find(b);
    if (it != cid_.end()) return it->second;
    int id = static_cast<int>(cid_.size());
    cid_.emplace(b, id);
    return id;
  }
  int concept_id(const BasicConcept& b) const { return cid_.at(b); }
  int concept_id_or(const BasicConcept& b) const {
    auto it = cid_.find(b);
    return it == cid_.end() ? -1 : it->second;
  }
  bool ids_disjoint(int i, int j) const { return i >= 0 && j >= 0 && cneg_[i][j]; }

  static void transitive_close(std::vector<std::vector<bool>>& m) {
    int n = static_cast<int>(m.size());
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (m[i][k])
          for (int j = 0; j < n; ++j)
            if (m[k][j]) m[i][j] = true;
  }

  // disjoint[x][y] iff x ⊑* p and y ⊑* p′ for some declared disjoint (p, p′).
  static std::vector<std::vector<bool>> compose_disjointness(
      const std::vector<std::vector<bool>>& pos, const std::vector<std::pair<int, int>>& base) {
    int n = static_cast<int>(pos.size());
    std::vector<std::vector<bool>> neg(n, std::vector<bool>(n, false));
    for (auto [p, q] : base)
      for (int x = 0; x < n; ++x)
        if (pos[x][p])
          for (int y = 0; y < n; ++y)
            if (pos[y][q]) neg[x][y] = neg[y][x] = true;
    return neg;
  }

  std::map<BasicConcept, int> cid_;
  std::map<Role, int> rid_;
  std::unordered_map<const std::string*, int> atomic_ids_;
  std::unordered_map<const std::string*, std::array<int, 4>> role_ids_;
  std::vector<std::vector<bool>> cpos_, cneg_;  // over basic concepts
  std::vector<std::vector<bool>> rpos_, rneg_;  // over role orientations
};

// Query layer over the closure graph.
class DlliteEngine {
 public:
  explicit DlliteEngine(const TBox& tbox) : cg_(tbox) {}

  const ClosureGraph& graph() const { return cg_; }

  bool consistent(const ABox& a) const {
    const auto& items = a.items();
    std::vector<ClosureGraph::ResolvedIds> ids;
    ids.reserve(items.size());
    for (const Assertion& x : items) ids.push_back(cg_.resolve(x));
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (cg_.resolved_self_clash(items[i], ids[i])) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (cg_.resolved_cross_clash(items[i], ids[i], items[j], ids[j])) return false;
    }
    return true;
  }

  // Does the single assertion beta classically entail obs?
  bool singleton_entails(const Assertion& beta, const Assertion& obs) const {
    if (!obs.is_role) {
      for (const BasicConcept& t : ClosureGraph::types_at(beta, obs.a))
        if (cg_.subsumed(t, BasicConcept::atomic(obs.pred))) return true;
      return false;
    }
    if (!beta.is_role) return false;
    Role s{beta.pred, false}, r{obs.pred, false};
    if (beta.a == obs.a && beta.b == obs.b && cg_.role_subsumed(s, r)) return true;
    if (beta.a == obs.b && beta.b == obs.a && cg_.role_subsumed(s.inverse(), r)) return true;
    return false;
  }

  // Classical entailment for a consistent ABox (supports have size 1).
  bool entails(const ABox& a, const Assertion& obs) const {
    if (obs.is_role) {
      for (const Assertion& beta : a)
        if (singleton_entails(beta, obs)) return true;
      return false;
    }
    int target = cg_.atomic_id(obs.pred);
    for (const Assertion& beta : a)
      if (cg_.resolved_entails_atomic(beta, cg_.resolve(beta), obs.a, obs.pred, target))
        return true;
    return false;
  }

  bool concept_satisfiable(Symbol name) const {
    BasicConcept b = BasicConcept::atomic(name);
    return !cg_.disjoint(b, b);
  }

  // Exactly the subset-minimal inconsistent subsets: bad singletons and
  // clashing pairs of individually fine assertions.
  std::vector<ABox> min_conflicts(const ABox& a) const {
    std::vector<ABox> out;
    const auto& items = a.items();
    std::vector<ClosureGraph::ResolvedIds> ids;
    ids.reserve(items.size());
    for (const Assertion& x : items) ids.push_back(cg_.resolve(x));
    std::vector<bool> bad(items.size(), false);
    for (std::size_t i = 0; i < items.size(); ++i) {
      bad[i] = cg_.resolved_self_clash(items[i], ids[i]);
      if (bad[i]) out.push_back(ABox(std::vector<Assertion>{items[i]}));
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (bad[i]) continue;
      for (std::size_t j = i + 1; j < items.size(); ++j) {
        if (bad[j]) continue;
        if (cg_.resolved_cross_clash(items[i], ids[i], items[j], ids[j]))
          out.push_back(ABox(std::vector<Assertion>{items[i], items[j]}));
      }
    }
    std::sort(out.begin(), out.end(),
              [](const ABox& x, const ABox& y) { return x.items() < y.items(); });
    return out;
  }

  // Minimal supports of obs inside `universe`: the consistent entailing
  // singletons.
  std::vector<ABox> min_supports(const ABox& universe, const Assertion& obs) const {
    std::vector<ABox> out;
    for (const Assertion& beta : universe)
      if (cg_.self_consistent(beta) && singleton_entails(beta, obs))
        out.push_back(ABox(std::vector<Assertion>{beta}));
    return out;
  }

 private:
  ClosureGraph cg_;
};

}  // namespace abduce
