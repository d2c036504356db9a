#include <cstdlib>

#include "rdlab/checks.hpp"
#include "rdlab/grouplab.hpp"

namespace rdlab::checks {

namespace {

struct Tally {
  ordered_json rows = ordered_json::array();
  bool ok = true;

  void expect(const std::string& what, uint64_t got, uint64_t want) {
    rows.push_back({{"what", what}, {"got", got}, {"expected", want}});
    ok &= got == want;
  }
  void expect_true(const std::string& what, bool got) {
    rows.push_back({{"what", what}, {"got", got}, {"expected", true}});
    ok &= got;
  }
};

}  // namespace

CheckReport check_psl2_9_facts() {
  CheckReport rep;
  rep.id = "cor2.2.psl2-9-facts";
  rep.paper_anchor =
      "Sec. 2: A_6 ~= PSL_2(9) = Sp_2(F_9)/{+-1}, simple and 2-transitive "
      "on P^1(F_9)";
  rep.params = ordered_json::object();

  Tally t;
  GroupHandle sl29 = symplectic_group(1, 9);
  t.expect("|SL_2(9)|", sl29.order(), 720);
  ProjectiveImage im = projective_image(sl29);
  t.expect("projective points", im.points.size(), 10);
  t.expect("scalars in SL_2(9)", im.scalar_count, 2);
  t.expect("|PSL_2(9)|", im.group.order(), 360);
  t.expect_true("PSL_2(9) simple", im.group.is_simple());
  t.expect_true("PSL_2(9) 2-transitive", im.group.is_2transitive());
  t.expect("|A6| for comparison", alternating_group(6).order(), 360);

  rep.stats = {{"assertions", t.rows}};
  rep.status = t.ok ? CheckStatus::pass : CheckStatus::fail;
  if (!t.ok) rep.witness = {{"failed", "see stats.assertions"}};
  return rep;
}

CheckReport check_weyl_e6_facts() {
  CheckReport rep;
  rep.id = "thm1.3.weyl-e6-facts";
  rep.paper_anchor = "Thm. 1.3 proof: 1 -> SU_4(2) -> W(E6) -> Z/2 -> 0";
  rep.params = ordered_json::object();

  Tally t;
  auto roots = e6_roots();
  t.expect("root count", roots.size(), 72);
  PermGroup w = weyl_e6();
  t.expect("|W(E6)|", w.order(), 51840);
  t.expect("factored form 2^7 3^4 5", 51840, (1u << 7) * 81 * 5);
  PermGroup d = w.derived_subgroup();
  t.expect("|W(E6)'|", d.order(), 25920);
  t.expect("index of the derived subgroup", w.order() / d.order(), 2);
  t.expect_true("W(E6)' simple", d.is_simple());
  t.expect_true("W(E6) transitive on roots", w.is_transitive());

  rep.stats = {{"assertions", t.rows}};
  rep.status = t.ok ? CheckStatus::pass : CheckStatus::fail;
  if (!t.ok) rep.witness = {{"failed", "see stats.assertions"}};
  return rep;
}

CheckReport check_classical_orders() {
  CheckReport rep;
  rep.id = "thm1.3.symplectic-su-orders";
  rep.paper_anchor =
      "Thm. 1.3 proof: |SU_4(2)| = |PSp_4(3)| = 25920 behind the exceptional "
      "isomorphism SU_4(2) ~= PSp_4(3)";
  rep.params = ordered_json::object();

  Tally t;

  // symplectic orders, certified against the stabilizer chain
  t.expect("|Sp_2(2)|", symplectic_group(1, 2).order(), 6);
  t.expect("|Sp_2(3)|", symplectic_group(1, 3).order(), 24);
  t.expect("|Sp_4(2)|", symplectic_group(2, 2).order(), 720);
  t.expect("|Sp_2(9)|", symplectic_group(1, 9).order(), 720);
  GroupHandle sp43 = symplectic_group(2, 3);
  t.expect("|Sp_4(3)|", sp43.order(), 51840);
  t.expect("sp formula (2,3)", sp_order_formula(2, 3), 51840);

  // unitary orders; SU_3(2) needs the two frozen augmentation generators
  GroupHandle su32 = special_unitary_group(3, 2);
  t.expect("|SU_3(2)|", su32.order(), 216);
  t.expect("SU_3(2) generator count", su32.matrix_generators().size(), 11);
  const std::vector<uint32_t> aug1{1, 1, 1, 1, 2, 3, 1, 3, 2};
  const std::vector<uint32_t> aug2{1, 1, 2, 1, 2, 1, 3, 2, 2};
  t.expect_true("SU_3(2) first augmentation generator",
                su32.matrix_generators().size() == 11 &&
                    su32.matrix_generators()[9].data() == aug1);
  t.expect_true("SU_3(2) second augmentation generator",
                su32.matrix_generators().size() == 11 &&
                    su32.matrix_generators()[10].data() == aug2);

  t.expect("|SU_3(3)|", special_unitary_group(3, 3).order(), 6048);
  GroupHandle su42 = special_unitary_group(4, 2);
  t.expect("|SU_4(2)|", su42.order(), 25920);
  t.expect("|U_3(2)|", unitary_group(3, 2).order(), 648);
  t.expect("|U_3(3)|", unitary_group(3, 3).order(), 24192);
  t.expect("|U_4(2)|", unitary_group(4, 2).order(), 77760);

  // the central quotients coincide
  ProjectiveImage psp = projective_image(sp43);
  t.expect("scalars in Sp_4(3)", psp.scalar_count, 2);
  t.expect("|PSp_4(3)|", psp.group.order(), 25920);
  ProjectiveImage psu = projective_image(su42);
  t.expect("scalars in SU_4(2)", psu.scalar_count, 1);
  t.expect("SU_4(2) projective points", psu.points.size(), 85);
  t.expect("|PSU_4(2)|", psu.group.order(), 25920);
  t.expect_true("PSU_4(2) simple", psu.group.is_simple());
  t.expect("|W(E6)| / 2", 51840 / 2, 25920);

  // too large to certify by chain: formula plus validated generators only
  GroupHandle su43 = special_unitary_group(4, 3);
  t.expect("su formula (4,3)", su_order_formula(4, 3), 13063680);
  t.expect("SU_4(3) declared order", su43.expected_order(), 13063680);
  t.expect("SU_4(3) transvection generators",
           su43.matrix_generators().size(), 280);
  GroupHandle u43 = unitary_group(4, 3);
  t.expect("U_4(3) declared order", u43.expected_order(),
           uint64_t(4) * 13063680);

  rep.stats = {{"assertions", t.rows},
               {"uncertified",
                ordered_json::array({"SU4(3)", "U4(3)"})}};
  rep.status = t.ok ? CheckStatus::pass : CheckStatus::fail;
  if (!t.ok) rep.witness = {{"failed", "see stats.assertions"}};
  return rep;
}

CheckReport check_central_products() {
  CheckReport rep;
  rep.id = "sect4.central-product";
  rep.paper_anchor =
      "Sec. 4: central products (A x B)/{(z, phi(z)^{-1})} with identified "
      "central subgroups";
  rep.params = {{"specs", 3}};

  Tally t;
  ordered_json rows = ordered_json::array();
  auto run_spec = [&](const CentralProductSpec& spec, uint64_t expected) {
    CentralProductInfo info = central_product(spec);
    rows.push_back({{"name", info.name},
                    {"order", info.order},
                    {"expected", expected},
                    {"g_order", info.g_order},
                    {"h_order", info.h_order},
                    {"z_size", info.z_size},
                    {"order_law", info.order_law},
                    {"g_injective", info.g_injective},
                    {"h_injective", info.h_injective}});
    t.ok &= info.order == expected && info.order_law && info.g_injective &&
            info.h_injective;
  };

  GroupHandle c4a = cyclic_group(4);
  GroupHandle c4b = cyclic_group(4);
  GroupHandle c3 = cyclic_group(3);
  const PermGroup& G4a = c4a.action();
  const PermGroup& G4b = c4b.action();
  const PermGroup& G3 = c3.action();
  Perm c = G4a.generators()[0];
  Perm c2 = c * c;

  // (Z/4 o Z/4) over the shared Z/2: order 8
  run_spec({"Z/4 o Z/4", &G4a, &G4b,
            {Perm::identity(4), c2},
            {Perm::identity(4), c2}},
           8);

  // trivial identification degenerates to the direct product
  run_spec({"Z/4 x Z/3", &G4a, &G3,
            {Perm::identity(4)},
            {Perm::identity(3)}},
           12);

  // SL_2(9) o Z/4 over {1, -1} = {1, c^2}: order 720 * 4 / 2 = 1440
  GroupHandle sl29 = symplectic_group(1, 9);
  const PermGroup& G = sl29.action();
  FieldPtr f9 = Field::make(3, 2);
  Mat minus(f9, 2, 2);
  minus.at(0, 0) = f9->neg(1);
  minus.at(1, 1) = f9->neg(1);
  run_spec({"SL2(9) o Z/4", &G, &G4a,
            {Perm::identity(G.degree()), matrix_vector_perm(minus)},
            {Perm::identity(4), c2}},
           1440);

  rep.stats = {{"products", rows}};
  rep.status = t.ok ? CheckStatus::pass : CheckStatus::fail;
  if (!t.ok) rep.witness = {{"failed", "see stats.products"}};
  return rep;
}

}  // namespace rdlab::checks
