#include "doctest.h"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rdlab/bounds.hpp"

using namespace rdlab::bounds;

TEST_CASE("group name parsing") {
  GroupId s7 = GroupId::parse("S7");
  CHECK(s7.kind == GKind::symmetric);
  CHECK(s7.n == 7);
  CHECK_FALSE(s7.trivial);
  CHECK(GroupId::parse("S1").trivial);
  CHECK(GroupId::parse("S2").abelian);

  GroupId a6 = GroupId::parse("A6");
  CHECK(a6.kind == GKind::alternating);
  CHECK(a6.n == 6);
  CHECK(GroupId::parse("A2").trivial);  // A1, A2 are trivial
  CHECK(GroupId::parse("A3").abelian);

  GroupId z4 = GroupId::parse("Z/4");
  CHECK(z4.kind == GKind::cyclic);
  CHECK(z4.abelian);
  CHECK(z4.order == 4);
  CHECK(GroupId::parse("Z/1").trivial);

  GroupId sp = GroupId::parse("Sp4(3)");
  CHECK(sp.kind == GKind::sp);
  CHECK(sp.n == 4);
  CHECK(sp.q == 3);

  GroupId su = GroupId::parse("SU3(5)");
  CHECK(su.kind == GKind::su);
  CHECK(su.n == 3);
  CHECK(su.q == 5);

  CHECK(GroupId::parse("U4(3)").kind == GKind::u);
  CHECK(GroupId::parse("PSp4(3)").kind == GKind::psp);
  GroupId psl = GroupId::parse("PSL2(9)");
  CHECK(psl.kind == GKind::psl2);
  CHECK(psl.q == 9);
  CHECK(GroupId::parse("W(E6)").kind == GKind::weyl_e6);

  GroupId ext = GroupId::parse("2.A7");
  CHECK(ext.kind == GKind::extension);
  CHECK_FALSE(ext.trivial);

  CHECK_THROWS(GroupId::parse(""));
  CHECK_THROWS(GroupId::parse("Q8"));
  CHECK_THROWS(GroupId::parse("Sp4("));
  CHECK_THROWS(GroupId::parse("PSL3(4)"));  // only PSL2 is modeled
}

TEST_CASE("characteristics of the summary table") {
  CHECK(characteristics() == std::vector<int>({0, 2, 3, 5, 7}));
}

TEST_CASE("default fact base loads and is cited") {
  Engine e = Engine::with_default_facts();
  CHECK(e.axiom_count() >= 12);
  CHECK(e.rule_instances().size() == 3);
  // Core cast of the derivation all present in the universe.
  for (const char* name :
       {"S6", "S7", "S8", "W(E6)", "A6", "A7", "2.A7", "3.A7", "SU3(5)",
        "U3(5)", "U4(3)", "SU4(2)", "U4(2)", "PSp4(3)", "PSL2(9)", "Sp4(3)",
        "SU4(5)", "U4(5)", "2.SU4(2)"})
    CHECK(e.universe().count(name) == 1);
}

TEST_CASE("parser rejects malformed fact text") {
  CHECK_THROWS(Engine::from_string("axiom bound S7 0 3"));  // no citation
  CHECK_THROWS(Engine::from_string("axiom bound S7 9 3 cite \"x\""));  // bad char
  CHECK_THROWS(Engine::from_string("axiom nonsense S7 cite \"x\""));
  CHECK_THROWS(Engine::from_string(
      "rule-instance lem2.5 group=PSL2(9) p=3 a=1 b=1 certs=nosuch.cert"));
  CHECK_THROWS(Engine::from_string(
      "rule-instance lem2.5 group=PSL2(9) p=3 a=1 b=1 certs="));
  // Comments and blank lines are fine.
  Engine ok = Engine::from_string(
      "# comment\n\naxiom bound S4 * 1 cite \"test source\"\n");
  CHECK(ok.axiom_count() == 1);
}

TEST_CASE("the 20 summary table cells are reproduced exactly") {
  Engine e = Engine::with_default_facts();
  e.derive();
  std::map<std::pair<std::string, int>, uint32_t> want = {
      {{"S6", 0}, 2},     {{"S6", 2}, 2},     {{"S6", 3}, 1},
      {{"S6", 5}, 2},     {{"S6", 7}, 2},     {{"S7", 0}, 3},
      {{"S7", 2}, 3},     {{"S7", 3}, 2},     {{"S7", 5}, 2},
      {{"S7", 7}, 2},     {{"S8", 0}, 4},     {{"S8", 2}, 3},
      {{"S8", 3}, 4},     {{"S8", 5}, 4},     {{"S8", 7}, 4},
      {{"W(E6)", 0}, 3},  {{"W(E6)", 2}, 2},  {{"W(E6)", 3}, 2},
      {{"W(E6)", 5}, 2},  {{"W(E6)", 7}, 3},
  };
  auto cells = e.paper_table();
  CHECK(cells.size() == 20);
  for (const auto& c : cells) {
    REQUIRE_MESSAGE(c.bound.has_value(), c.group, " p=", c.characteristic);
    auto it = want.find({c.group, c.characteristic});
    REQUIRE(it != want.end());
    CHECK_MESSAGE(*c.bound == it->second, c.group, " p=", c.characteristic,
                  " got ", *c.bound, " want ", it->second);
    CHECK(c.trace != nullptr);
  }
}

TEST_CASE("every trace replays soundly") {
  Engine e = Engine::with_default_facts();
  e.derive();
  CHECK(e.replay_all());
  for (const auto& c : e.paper_table()) CHECK(e.replay(c.trace));
}

TEST_CASE("key derivation routes") {
  Engine e = Engine::with_default_facts();
  e.derive();
  // S8 at p=2 improves through the n=8 rule instance.
  auto s8 = e.best("S8", 2);
  REQUIRE(s8.has_value());
  CHECK(s8->bound == 3);
  CHECK(s8->trace->rule == "prop6.1c");
  // S7 at p=7 as well (n=7).
  auto s77 = e.best("S7", 7);
  REQUIRE(s77.has_value());
  CHECK(s77->bound == 2);
  CHECK(s77->trace->rule == "prop6.1c");
  // S7 at p=3 comes back from A7 via the Schur cover inside U4(3).
  auto s73 = e.best("S7", 3);
  REQUIRE(s73.has_value());
  CHECK(s73->bound == 2);
  CHECK(s73->trace->rule == "cor2.2");
  // A7 at p=2 cannot ride the 2.A7 route (p divides the kernel order).
  auto a72 = e.best("A7", 2);
  REQUIRE(a72.has_value());
  CHECK(a72->bound == 3);
  // Characteristic-zero bounds descend to every p.
  auto s70 = e.best("S7", 0);
  REQUIRE(s70.has_value());
  CHECK(s70->bound == 3);
  // Abelian groups sit at the floor.
  auto z = e.best("Z/4", 3);
  REQUIRE(z.has_value());
  CHECK(z->bound == 1);
  CHECK(z->trace->rule == "lem2.1c");
  // Unknown group: no fact at all.
  CHECK_FALSE(e.best("S99", 3).has_value());
}

TEST_CASE("explanations carry the cited route") {
  Engine e = Engine::with_default_facts();
  e.derive();
  std::string s73 = e.explain("S7", 3);
  CHECK(s73.find("prop3.1") != std::string::npos);
  CHECK(s73.find("U4(3)") != std::string::npos);
  CHECK(s73.find("Bray-Holt-Roney-Dougal Table 8.11") != std::string::npos);
  std::string s82 = e.explain("S8", 2);
  CHECK(s82.find("prop6.1c") != std::string::npos);
  CHECK_THROWS(e.explain("S99", 3));
}

TEST_CASE("rendered table lines up") {
  Engine e = Engine::with_default_facts();
  e.derive();
  std::string t = e.render_table(e.paper_table());
  CHECK(t.find("S6") != std::string::npos);
  CHECK(t.find("S8") != std::string::npos);
  CHECK(t.find("W(E6)") != std::string::npos);
  CHECK(t.find("p=0") != std::string::npos);
  CHECK(t.find("p=7") != std::string::npos);
}

TEST_CASE("monotonicity: extra axioms never raise a derived bound") {
  Engine base = Engine::with_default_facts();
  base.derive();
  Engine extra = Engine::from_string(
      Engine::default_fact_text() +
      "\naxiom bound S7 0 2 cite \"hypothetical sharpening\"\n");
  extra.derive();
  for (const auto& [key, fact] : base.facts()) {
    auto improved = extra.best(key.first, key.second);
    REQUIRE(improved.has_value());
    CHECK(improved->bound <= fact.bound);
  }
  // And the sharpened hypothesis propagates: rd_0 descent gives S7 <= 2
  // everywhere, which drags S6 down too (subgroup), but never below 1.
  CHECK(extra.best("S7", 2)->bound == 2);
  CHECK(extra.best("S6", 0)->bound == 2);
}

TEST_CASE("reduction reachability and provable equality") {
  Engine e = Engine::with_default_facts();
  e.derive();
  // W(E6) and SU4(2) sandwich each other at every characteristic.
  for (int p : characteristics()) {
    CHECK(e.provably_equal("W(E6)", "SU4(2)", p));
    CHECK(e.best("W(E6)", p)->bound == e.best("SU4(2)", p)->bound);
  }
  // S7 ~ S6 at p=5 through the SU3(5) loop; not provable at p=3.
  CHECK(e.reduces("S7", "S6", 5));
  CHECK(e.reduces("S6", "S7", 5));
  CHECK(e.provably_equal("S7", "S6", 5));
  CHECK_FALSE(e.provably_equal("S7", "S6", 3));
  CHECK(e.reduces("S6", "S7", 3));  // subgroup direction always works
  // Reflexivity.
  CHECK(e.provably_equal("S7", "S7", 2));
}

TEST_CASE("floor clamp keeps nontrivial groups at >= 1") {
  // A hypothetical zero bound on a nontrivial group is clamped to 1 when
  // it propagates.
  Engine e = Engine::from_string(
      "axiom bound S3 * 1 cite \"test\"\n"
      "axiom subgroup Z/3 S3 cite \"test\"\n");
  e.derive();
  auto z3 = e.best("Z/3", 2);
  REQUIRE(z3.has_value());
  CHECK(z3->bound == 1);  // abelian rule, floored at 1, not 0
  // The trivial group does reach 0.
  Engine t = Engine::from_string("axiom bound S1 * 0 cite \"test\"\n");
  t.derive();
  auto s1 = t.best("S1", 2);
  REQUIRE(s1.has_value());
  CHECK(s1->bound == 0);
}

TEST_CASE("axiom traces replay in a reduced engine") {
  Engine e = Engine::from_string(
      "axiom bound S5 0 1 cite \"classical\"\n"
      "axiom subgroup S4 S5 cite \"standard embedding\"\n");
  e.derive();
  auto s4 = e.best("S4", 3);
  REQUIRE(s4.has_value());
  CHECK(s4->bound == 1);
  CHECK(e.replay_all());
}
