#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rdlab::bounds {

// Canonical group names: "S7", "A6", "Z/4", "Sp4(3)", "SU4(2)", "U4(3)",
// "PSp4(3)", "PSL2(9)", "W(E6)", and central-extension labels "2.A7",
// "3.A7", "2.SU4(2)". Structure is parsed from the name where it is
// meaningful (symmetric/alternating/cyclic/classical); extension labels
// are opaque nodes whose structure enters only through sequence axioms.
enum class GKind {
  symmetric,
  alternating,
  cyclic,
  sp,
  su,
  u,
  psp,
  psl2,
  weyl_e6,
  extension
};

struct GroupId {
  std::string name;
  GKind kind = GKind::extension;
  uint32_t n = 0;      // S_n/A_n index, matrix dimension, Z/n order
  uint32_t q = 0;      // field size for classical kinds
  bool trivial = false;
  bool abelian = false;
  uint64_t order = 0;  // only where a rule needs it (cyclic)

  static GroupId parse(const std::string& name);  // throws on unknown shape
};

// The five characteristics of the summary table; wildcard axioms expand
// to exactly these.
const std::vector<int>& characteristics();

struct TraceNode;
using TracePtr = std::shared_ptr<const TraceNode>;

struct TraceNode {
  std::string rule;  // "axiom", "e.thm1.3", "lem2.1b", "lem2.1c",
                     // "lem2.1d", "lem2.1d-eq", "cor2.2", "prop3.1",
                     // "lem2.5", "prop6.1c"
  std::string detail;  // citation text or side-condition summary
  std::string group;
  int characteristic = 0;
  uint32_t bound = 0;
  std::vector<TracePtr> premises;
};

struct BoundFact {
  std::string group;
  int characteristic = 0;
  uint32_t bound = 0;
  TracePtr trace;
};

struct BoundAxiom {
  std::string group;
  int characteristic = -1;  // -1 = every characteristic
  uint32_t bound = 0;
  std::string cite;
};
struct SubgroupAxiom {
  std::string sub, super;
  std::string cite;
};
struct IsoAxiom {
  std::string g1, g2;
  std::string cite;
};
struct SequenceAxiom {  // 1 -> A -> G -> B -> 1
  std::string a, g, b;
  bool central = false;
  std::string cite;
};
struct RuleInstance {  // lem2.5 (group, a, b) or prop6.1c (n)
  std::string rule;
  std::string group;
  int characteristic = 0;
  uint32_t a = 0, b = 0, n = 0;
  std::vector<std::string> certs;  // validated against the check registry
};

struct TableCell {
  std::string group;
  int characteristic = 0;
  std::optional<uint32_t> bound;  // empty = underivable
  TracePtr trace;
};

class Engine {
 public:
  // Parses the line-oriented fact format:
  //   axiom bound <group> <char|*> <value> cite "<text>"
  //   axiom subgroup <H> <G> cite "<text>"
  //   axiom iso <G1> <G2> cite "<text>"
  //   axiom sequence <A> <G> <B> <central|normal> cite "<text>"
  //   rule-instance lem2.5 group=<G> p=<char> a=<a> b=<b> certs=<ids>
  //   rule-instance prop6.1c n=<n> p=<char> certs=<ids>
  // Uncited axioms and rule instances with unknown cert ids are rejected.
  static Engine from_string(const std::string& text);
  static Engine with_default_facts();
  static const std::string& default_fact_text();

  void derive();  // forward chaining to fixpoint; idempotent

  std::optional<BoundFact> best(const std::string& group, int p) const;
  std::vector<TableCell> table(const std::vector<std::string>& groups,
                               const std::vector<int>& chars) const;
  // paper summary table: S6 S7 S8 W(E6) x {0,2,3,5,7}
  std::vector<TableCell> paper_table() const;
  std::string render_table(const std::vector<TableCell>& cells) const;

  std::string explain(const std::string& group, int p) const;  // throws

  // soundness: re-verify every node of the trace against the axioms and
  // rule side conditions, recomputing each conclusion from its premises
  bool replay(const TracePtr& trace) const;
  bool replay_all() const;

  // pointwise-reduction reachability: rd_p(a) <= rd_p(b) by a chain of
  // bound-independent reduction edges; equal = both directions
  bool reduces(const std::string& a, const std::string& b, int p) const;
  bool provably_equal(const std::string& a, const std::string& b,
                      int p) const;

  const std::map<std::string, GroupId>& universe() const { return groups_; }
  size_t axiom_count() const {
    return bound_axioms_.size() + subgroup_axioms_.size() +
           iso_axioms_.size() + sequence_axioms_.size();
  }
  const std::vector<RuleInstance>& rule_instances() const {
    return instances_;
  }
  const std::map<std::pair<std::string, int>, BoundFact>& facts() const {
    return facts_;
  }

 private:
  void touch_group(const std::string& name);
  bool adopt(const std::string& group, int p, uint32_t bound, TracePtr trace);
  uint32_t floor_of(const std::string& group) const;
  std::vector<std::pair<std::string, std::string>> reduction_edges(
      int p) const;

  std::vector<BoundAxiom> bound_axioms_;
  std::vector<SubgroupAxiom> subgroup_axioms_;
  std::vector<IsoAxiom> iso_axioms_;
  std::vector<SequenceAxiom> sequence_axioms_;
  std::vector<RuleInstance> instances_;
  std::map<std::string, GroupId> groups_;
  std::map<std::pair<std::string, int>, BoundFact> facts_;
  bool derived_ = false;
};

}  // namespace rdlab::bounds
