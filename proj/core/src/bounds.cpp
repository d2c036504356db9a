#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rdlab/bounds.hpp"
#include "rdlab/checks.hpp"

namespace rdlab::bounds {

namespace {

uint32_t char_of_field(uint32_t q) {
  for (uint32_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return f;
  return q;
}

bool divides(int p, uint64_t n) { return p > 0 && n % uint64_t(p) == 0; }

TracePtr make_node(std::string rule, std::string detail, std::string group,
                   int p, uint32_t bound, std::vector<TracePtr> premises = {}) {
  auto node = std::make_shared<TraceNode>();
  node->rule = std::move(rule);
  node->detail = std::move(detail);
  node->group = std::move(group);
  node->characteristic = p;
  node->bound = bound;
  node->premises = std::move(premises);
  return node;
}

std::string rd_str(const std::string& group, int p) {
  return "rd_" + std::to_string(p) + "(" + group + ")";
}

const std::vector<std::string>& prop31_certs(GKind kind) {
  static const std::vector<std::string> sp_certs{
      "prop3.1a.sympl-invariance", "prop3.1a.smoothness"};
  static const std::vector<std::string> u_certs{"prop3.1b.unit-invariance",
                                                "prop3.1b.smoothness"};
  return kind == GKind::sp ? sp_certs : u_certs;
}

void require_registered(const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    bool found = false;
    for (const auto& entry : checks::registry())
      if (entry.id == id) {
        found = true;
        break;
      }
    if (!found)
      throw std::logic_error("built-in rule cites unregistered check: " + id);
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

uint32_t Engine::floor_of(const std::string& group) const {
  return groups_.at(group).trivial ? 0u : 1u;
}

bool Engine::adopt(const std::string& group, int p, uint32_t bound,
                   TracePtr trace) {
  auto key = std::make_pair(group, p);
  auto it = facts_.find(key);
  if (it != facts_.end() && it->second.bound <= bound) return false;
  facts_[key] = BoundFact{group, p, bound, std::move(trace)};
  return true;
}

void Engine::derive() {
  if (derived_) return;
  require_registered(prop31_certs(GKind::sp));
  require_registered(prop31_certs(GKind::u));

  // seed: explicit bounds, wildcard axioms fanned out over all five chars
  for (const auto& ax : bound_axioms_) {
    std::vector<int> chars = ax.characteristic == -1
                                 ? characteristics()
                                 : std::vector<int>{ax.characteristic};
    for (int p : chars)
      adopt(ax.group, p, ax.bound,
            make_node("axiom", ax.cite, ax.group, p, ax.bound));
  }

  // subgroup edges: stated axioms plus the A <= G edge implicit in every
  // sequence 1 -> A -> G -> B -> 1
  struct Edge {
    std::string sub, super, why;
  };
  std::vector<Edge> edges;
  for (const auto& ax : subgroup_axioms_)
    edges.push_back({ax.sub, ax.super, ax.cite});
  for (const auto& ax : sequence_axioms_)
    edges.push_back({ax.a, ax.g, "kernel of " + ax.g + " -> " + ax.b +
                                     " (" + ax.cite + ")"});

  bool changed = true;
  while (changed) {
    changed = false;

    // e.thm1.3: rd_p(G) <= rd_0(G) for every prime p
    for (const auto& [name, gid] : groups_) {
      auto it = facts_.find({name, 0});
      if (it == facts_.end()) continue;
      for (int p : characteristics()) {
        if (p == 0) continue;
        changed |= adopt(
            name, p, it->second.bound,
            make_node("e.thm1.3", "descent from characteristic 0", name, p,
                      it->second.bound, {it->second.trace}));
      }
    }

    // lem2.1c: abelian groups have rd_p <= 1, trivial groups rd_p = 0
    for (const auto& [name, gid] : groups_) {
      if (!gid.abelian) continue;
      uint32_t b = gid.trivial ? 0 : 1;
      for (int p : characteristics())
        changed |= adopt(name, p, b,
                         make_node("lem2.1c",
                                   gid.trivial ? "trivial group"
                                               : "abelian group",
                                   name, p, b));
    }

    // lem2.1b: rd_p(H) <= rd_p(G) for H <= G
    for (const auto& e : edges) {
      for (int p : characteristics()) {
        auto it = facts_.find({e.super, p});
        if (it == facts_.end()) continue;
        uint32_t b = std::max(it->second.bound, floor_of(e.sub));
        changed |= adopt(e.sub, p, b,
                         make_node("lem2.1b",
                                   e.sub + " <= " + e.super + ": " + e.why,
                                   e.sub, p, b, {it->second.trace}));
      }
    }

    // isomorphisms transfer bounds both ways (lem2.1b applied twice)
    for (const auto& ax : iso_axioms_) {
      for (int p : characteristics()) {
        for (const auto& [from, to] :
             {std::make_pair(ax.g1, ax.g2), std::make_pair(ax.g2, ax.g1)}) {
          auto it = facts_.find({from, p});
          if (it == facts_.end()) continue;
          uint32_t b = std::max(it->second.bound, floor_of(to));
          changed |= adopt(to, p, b,
                           make_node("lem2.1b",
                                     to + " ~= " + from + ": " + ax.cite, to,
                                     p, b, {it->second.trace}));
        }
      }
    }

    // lem2.1d: rd_p(G) <= max(rd_p(A), rd_p(B)) for 1 -> A -> G -> B -> 1
    for (const auto& ax : sequence_axioms_) {
      for (int p : characteristics()) {
        auto ia = facts_.find({ax.a, p});
        auto ib = facts_.find({ax.b, p});
        if (ia == facts_.end() || ib == facts_.end()) continue;
        uint32_t b = std::max({ia->second.bound, ib->second.bound,
                               floor_of(ax.g)});
        changed |= adopt(
            ax.g, p, b,
            make_node("lem2.1d",
                      "1 -> " + ax.a + " -> " + ax.g + " -> " + ax.b +
                          " -> 1 (" + ax.cite + ")",
                      ax.g, p, b, {ia->second.trace, ib->second.trace}));
      }
    }

    // lem2.1d equality case: A central, p does not divide |A|, B nontrivial
    // gives rd_p(G) = rd_p(B); adopt whichever side improves
    for (const auto& ax : sequence_axioms_) {
      if (!ax.central) continue;
      const GroupId& a = groups_.at(ax.a);
      if (a.trivial || a.order == 0) continue;
      if (groups_.at(ax.b).trivial) continue;
      for (int p : characteristics()) {
        if (divides(p, a.order)) continue;
        std::string cond = "central kernel " + ax.a + ", p = " +
                           std::to_string(p) + " does not divide |" + ax.a +
                           "| = " + std::to_string(a.order) + " (" + ax.cite +
                           ")";
        for (const auto& [from, to] :
             {std::make_pair(ax.g, ax.b), std::make_pair(ax.b, ax.g)}) {
          auto it = facts_.find({from, p});
          if (it == facts_.end()) continue;
          uint32_t b = std::max(it->second.bound, floor_of(to));
          changed |= adopt(to, p, b,
                           make_node("lem2.1d-eq", cond, to, p, b,
                                     {it->second.trace}));
        }
      }
    }

    // cor2.2: rd_p(S_n) = rd_p(A_n) for n >= 3
    for (const auto& [name, gid] : groups_) {
      if (gid.kind != GKind::alternating || gid.n < 3) continue;
      std::string sym = "S" + std::to_string(gid.n);
      if (!groups_.count(sym)) continue;
      for (int p : characteristics()) {
        for (const auto& [from, to] :
             {std::make_pair(name, sym), std::make_pair(sym, name)}) {
          auto it = facts_.find({from, p});
          if (it == facts_.end()) continue;
          uint32_t b = std::max(it->second.bound, floor_of(to));
          changed |= adopt(
              to, p, b,
              make_node("cor2.2",
                        rd_str(sym, p) + " = " + rd_str(name, p), to, p, b,
                        {it->second.trace}));
        }
      }
    }

    // prop3.1: for Sp_n(F_q) and U_n(F_q) at p = char(F_q),
    // rd_p <= max(n - 2, rd_p(S_{q+1}))
    for (const auto& [name, gid] : groups_) {
      if (gid.kind != GKind::sp && gid.kind != GKind::u) continue;
      int p = int(char_of_field(gid.q));
      std::string sym = "S" + std::to_string(gid.q + 1);
      auto it = facts_.find({sym, p});
      if (it == facts_.end()) continue;
      uint32_t raw = std::max(gid.n >= 2 ? gid.n - 2 : 0, it->second.bound);
      uint32_t b = std::max(raw, floor_of(name));
      changed |= adopt(
          name, p, b,
          make_node("prop3.1",
                    rd_str(name, p) + " <= max(" + std::to_string(gid.n) +
                        " - 2, " + rd_str(sym, p) +
                        "); certs: " + join(prop31_certs(gid.kind)),
                    name, p, b, {it->second.trace}));
    }

    // cited rule instances
    for (const auto& ri : instances_) {
      std::vector<int> chars = ri.characteristic == -1
                                   ? characteristics()
                                   : std::vector<int>{ri.characteristic};
      if (ri.rule == "lem2.5") {
        std::string sym = "S" + std::to_string(ri.a);
        for (int p : chars) {
          auto it = facts_.find({sym, p});
          if (it == facts_.end()) continue;
          uint32_t b = std::max(std::max(ri.b, it->second.bound),
                                floor_of(ri.group));
          changed |= adopt(
              ri.group, p, b,
              make_node("lem2.5",
                        rd_str(ri.group, p) + " <= max(" +
                            std::to_string(ri.b) + ", " + rd_str(sym, p) +
                            "); certs: " + join(ri.certs),
                        ri.group, p, b, {it->second.trace}));
        }
      } else if (ri.rule == "prop6.1c") {
        std::string sn = "S" + std::to_string(ri.n);
        for (int p : chars) {
          auto it = facts_.find({"S6", p});
          if (it == facts_.end()) continue;
          uint32_t raw =
              std::max(ri.n >= 5 ? ri.n - 5 : 0, it->second.bound);
          uint32_t b = std::max(raw, floor_of(sn));
          changed |= adopt(
              sn, p, b,
              make_node("prop6.1c",
                        rd_str(sn, p) + " <= max(" + std::to_string(ri.n) +
                            " - 5, " + rd_str("S6", p) +
                            "); certs: " + join(ri.certs),
                        sn, p, b, {it->second.trace}));
        }
      }
    }
  }
  derived_ = true;
}

std::optional<BoundFact> Engine::best(const std::string& group, int p) const {
  auto it = facts_.find({group, p});
  if (it == facts_.end()) return std::nullopt;
  return it->second;
}

std::vector<TableCell> Engine::table(const std::vector<std::string>& groups,
                                     const std::vector<int>& chars) const {
  std::vector<TableCell> cells;
  for (const auto& g : groups)
    for (int p : chars) {
      TableCell cell;
      cell.group = g;
      cell.characteristic = p;
      auto it = facts_.find({g, p});
      if (it != facts_.end()) {
        cell.bound = it->second.bound;
        cell.trace = it->second.trace;
      }
      cells.push_back(std::move(cell));
    }
  return cells;
}

std::vector<TableCell> Engine::paper_table() const {
  return table({"S6", "S7", "S8", "W(E6)"}, characteristics());
}

std::string Engine::render_table(const std::vector<TableCell>& cells) const {
  std::vector<std::string> groups;
  std::vector<int> chars;
  for (const auto& c : cells) {
    if (std::find(groups.begin(), groups.end(), c.group) == groups.end())
      groups.push_back(c.group);
    if (std::find(chars.begin(), chars.end(), c.characteristic) == chars.end())
      chars.push_back(c.characteristic);
  }
  size_t gw = 5;
  for (const auto& g : groups) gw = std::max(gw, g.size());
  std::ostringstream out;
  out << std::string(gw, ' ');
  for (int p : chars) {
    std::string h = "p=" + std::to_string(p);
    out << "  " << std::string(h.size() < 4 ? 4 - h.size() : 0, ' ') << h;
  }
  out << "\n";
  for (const auto& g : groups) {
    out << g << std::string(gw - g.size(), ' ');
    for (int p : chars) {
      std::string v = "-";
      for (const auto& c : cells)
        if (c.group == g && c.characteristic == p && c.bound)
          v = std::to_string(*c.bound);
      out << "  " << std::string(v.size() < 4 ? 4 - v.size() : 0, ' ') << v;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

void render_node(std::ostringstream& out, const TracePtr& node, int depth) {
  out << std::string(size_t(depth) * 2, ' ') << rd_str(node->group,
                                                       node->characteristic)
      << " <= " << node->bound << "  [" << node->rule << "] " << node->detail
      << "\n";
  for (const auto& pre : node->premises) render_node(out, pre, depth + 1);
}

}  // namespace

std::string Engine::explain(const std::string& group, int p) const {
  auto it = facts_.find({group, p});
  if (it == facts_.end())
    throw std::invalid_argument("no derived bound for " + rd_str(group, p));
  std::ostringstream out;
  render_node(out, it->second.trace, 0);
  return out.str();
}

bool Engine::replay(const TracePtr& node) const {
  if (!node) return false;
  for (const auto& pre : node->premises)
    if (!replay(pre)) return false;
  auto gid_it = groups_.find(node->group);
  if (gid_it == groups_.end()) return false;
  const GroupId& gid = gid_it->second;
  uint32_t floor = gid.trivial ? 0 : 1;
  auto premise_ok = [&](size_t i, int p) {
    return node->premises.size() > i && node->premises[i]->characteristic == p;
  };

  if (node->rule == "axiom") {
    for (const auto& ax : bound_axioms_)
      if (ax.group == node->group && ax.bound == node->bound &&
          ax.cite == node->detail &&
          (ax.characteristic == -1 ||
           ax.characteristic == node->characteristic))
        return node->premises.empty();
    return false;
  }
  if (node->rule == "e.thm1.3") {
    return node->characteristic != 0 && premise_ok(0, 0) &&
           node->premises[0]->group == node->group &&
           node->bound == std::max(node->premises[0]->bound, floor);
  }
  if (node->rule == "lem2.1c") {
    return gid.abelian && node->premises.empty() &&
           node->bound == (gid.trivial ? 0u : 1u);
  }
  if (node->rule == "lem2.1b") {
    if (!premise_ok(0, node->characteristic)) return false;
    const std::string& sup = node->premises[0]->group;
    bool edge = false;
    for (const auto& ax : subgroup_axioms_)
      edge |= ax.sub == node->group && ax.super == sup;
    for (const auto& ax : sequence_axioms_)
      edge |= ax.a == node->group && ax.g == sup;
    for (const auto& ax : iso_axioms_)
      edge |= (ax.g1 == node->group && ax.g2 == sup) ||
              (ax.g2 == node->group && ax.g1 == sup);
    return edge && node->bound == std::max(node->premises[0]->bound, floor);
  }
  if (node->rule == "lem2.1d") {
    if (!premise_ok(0, node->characteristic) ||
        !premise_ok(1, node->characteristic))
      return false;
    for (const auto& ax : sequence_axioms_)
      if (ax.g == node->group && ax.a == node->premises[0]->group &&
          ax.b == node->premises[1]->group)
        return node->bound == std::max({node->premises[0]->bound,
                                        node->premises[1]->bound, floor});
    return false;
  }
  if (node->rule == "lem2.1d-eq") {
    if (!premise_ok(0, node->characteristic)) return false;
    const std::string& from = node->premises[0]->group;
    for (const auto& ax : sequence_axioms_) {
      if (!ax.central) continue;
      bool match = (ax.g == from && ax.b == node->group) ||
                   (ax.b == from && ax.g == node->group);
      if (!match) continue;
      const GroupId& a = groups_.at(ax.a);
      if (a.trivial || a.order == 0 || groups_.at(ax.b).trivial) continue;
      if (divides(node->characteristic, a.order)) continue;
      return node->bound == std::max(node->premises[0]->bound, floor);
    }
    return false;
  }
  if (node->rule == "cor2.2") {
    if (!premise_ok(0, node->characteristic)) return false;
    GroupId other = GroupId::parse(node->premises[0]->group);
    bool paired = (gid.kind == GKind::symmetric &&
                   other.kind == GKind::alternating) ||
                  (gid.kind == GKind::alternating &&
                   other.kind == GKind::symmetric);
    return paired && gid.n == other.n && gid.n >= 3 &&
           node->bound == std::max(node->premises[0]->bound, floor);
  }
  if (node->rule == "prop3.1") {
    if (gid.kind != GKind::sp && gid.kind != GKind::u) return false;
    if (node->characteristic != int(char_of_field(gid.q))) return false;
    if (!premise_ok(0, node->characteristic)) return false;
    if (node->premises[0]->group != "S" + std::to_string(gid.q + 1))
      return false;
    uint32_t raw =
        std::max(gid.n >= 2 ? gid.n - 2 : 0, node->premises[0]->bound);
    return node->bound == std::max(raw, floor);
  }
  if (node->rule == "lem2.5") {
    if (!premise_ok(0, node->characteristic)) return false;
    for (const auto& ri : instances_) {
      if (ri.rule != "lem2.5" || ri.group != node->group) continue;
      if (ri.characteristic != -1 &&
          ri.characteristic != node->characteristic)
        continue;
      if (node->premises[0]->group != "S" + std::to_string(ri.a)) continue;
      uint32_t raw = std::max(ri.b, node->premises[0]->bound);
      if (node->bound == std::max(raw, floor)) return true;
    }
    return false;
  }
  if (node->rule == "prop6.1c") {
    if (!premise_ok(0, node->characteristic)) return false;
    if (node->premises[0]->group != "S6") return false;
    for (const auto& ri : instances_) {
      if (ri.rule != "prop6.1c") continue;
      if (ri.characteristic != -1 &&
          ri.characteristic != node->characteristic)
        continue;
      if (node->group != "S" + std::to_string(ri.n)) continue;
      uint32_t raw =
          std::max(ri.n >= 5 ? ri.n - 5 : 0, node->premises[0]->bound);
      if (node->bound == std::max(raw, floor)) return true;
    }
    return false;
  }
  return false;
}

bool Engine::replay_all() const {
  for (const auto& [key, fact] : facts_)
    if (!replay(fact.trace)) return false;
  return true;
}

// rd_p(a) <= rd_p(b) edges that hold irrespective of any derived numbers
std::vector<std::pair<std::string, std::string>> Engine::reduction_edges(
    int p) const {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& ax : subgroup_axioms_) edges.emplace_back(ax.sub, ax.super);
  for (const auto& ax : sequence_axioms_) {
    edges.emplace_back(ax.a, ax.g);
    // max rule collapses when rd_p(B) <= 1 <= rd_p(A) is forced
    const GroupId& a = groups_.at(ax.a);
    const GroupId& b = groups_.at(ax.b);
    if (b.abelian && !a.trivial) edges.emplace_back(ax.g, ax.a);
    if (ax.central && !a.trivial && a.order != 0 && !b.trivial &&
        !divides(p, a.order)) {
      edges.emplace_back(ax.g, ax.b);
      edges.emplace_back(ax.b, ax.g);
    }
  }
  for (const auto& ax : iso_axioms_) {
    edges.emplace_back(ax.g1, ax.g2);
    edges.emplace_back(ax.g2, ax.g1);
  }
  for (const auto& [name, gid] : groups_) {
    if (gid.kind == GKind::alternating && gid.n >= 3) {
      std::string sym = "S" + std::to_string(gid.n);
      if (groups_.count(sym)) {
        edges.emplace_back(name, sym);
        edges.emplace_back(sym, name);
      }
    }
    if ((gid.kind == GKind::sp || gid.kind == GKind::u) && gid.n <= 3 &&
        gid.q >= 1 && p == int(char_of_field(gid.q))) {
      std::string sym = "S" + std::to_string(gid.q + 1);
      if (groups_.count(sym) && !groups_.at(sym).trivial)
        edges.emplace_back(name, sym);
    }
  }
  for (const auto& ri : instances_) {
    if (ri.rule != "lem2.5" || ri.b > 1) continue;
    if (ri.characteristic != -1 && ri.characteristic != p) continue;
    std::string sym = "S" + std::to_string(ri.a);
    if (groups_.count(sym) && !groups_.at(sym).trivial)
      edges.emplace_back(ri.group, sym);
  }
  return edges;
}

bool Engine::reduces(const std::string& a, const std::string& b, int p) const {
  if (!groups_.count(a) || !groups_.count(b)) return false;
  if (a == b) return true;
  auto edges = reduction_edges(p);
  std::set<std::string> seen{a};
  std::queue<std::string> frontier;
  frontier.push(a);
  while (!frontier.empty()) {
    std::string cur = frontier.front();
    frontier.pop();
    for (const auto& [from, to] : edges) {
      if (from != cur || seen.count(to)) continue;
      if (to == b) return true;
      seen.insert(to);
      frontier.push(to);
    }
  }
  return false;
}

bool Engine::provably_equal(const std::string& a, const std::string& b,
                            int p) const {
  return reduces(a, b, p) && reduces(b, a, p);
}

}  // namespace rdlab::bounds
