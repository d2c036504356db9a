#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rdlab/checks.hpp"
#include "rdlab/report.hpp"

using namespace rdlab;
using namespace rdlab::checks;

namespace {

const RegistryEntry& entry_of(const std::string& id, size_t skip = 0) {
  for (const auto& e : registry()) {
    if (e.id != id) continue;
    if (skip == 0) return e;
    --skip;
  }
  throw std::runtime_error("no such registry entry: " + id);
}

}  // namespace

TEST_CASE("lucas binomials") {
  CHECK(lucas_binomial(7, 3, 7) == 0);
  CHECK(lucas_binomial(8, 2, 2) == 0);
  CHECK(lucas_binomial(6, 3, 5) == 0);   // 20 mod 5
  CHECK(lucas_binomial(6, 1, 5) == 1);   // 6 mod 5
  CHECK(lucas_binomial(10, 2, 3) == 0);  // 45 mod 3
  CHECK(lucas_binomial(5, 2, 7) == 3);   // 10 mod 7
  CHECK(lucas_binomial(64, 3, 2) == 0);
}

TEST_CASE("cone condition") {
  CHECK(cone_condition(7, 7));
  CHECK(cone_condition(8, 2));
  CHECK(cone_condition(49, 7));
  CHECK(cone_condition(4, 2));
  CHECK_FALSE(cone_condition(6, 5));
  CHECK_FALSE(cone_condition(6, 2));
  CHECK_FALSE(cone_condition(7, 2));
}

TEST_CASE("registry shape") {
  const auto& reg = registry();
  size_t negatives = 0;
  for (const auto& e : reg) {
    CHECK_FALSE(e.id.empty());
    CHECK_FALSE(e.paper_anchor.empty());
    CHECK(bool(e.run));
    if (e.negative_control) ++negatives;
  }
  CHECK(reg.size() == 33);
  CHECK(negatives == 4);
  CHECK(reg.size() - negatives == 29);

  std::set<std::string> neg_ids;
  for (const auto& e : reg)
    if (e.negative_control) neg_ids.insert(e.id);
  CHECK(neg_ids == std::set<std::string>({"neg.sympl-invariance",
                                          "neg.unit-invariance",
                                          "neg.smoothness",
                                          "neg.cone-closure"}));
}

TEST_CASE("derived seeds decouple checks") {
  CHECK(derive_seed("a", 42) == derive_seed("a", 42));
  CHECK(derive_seed("a", 42) != derive_seed("b", 42));
  // xor structure: the base seed shifts the stream reversibly
  CHECK((derive_seed("xyz", 0) ^ derive_seed("xyz", 977)) == 977);
}

TEST_CASE("invariance checks") {
  CheckReport r = check_symplectic_invariance(1, 2, 10, 7);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.id == "prop3.1a.sympl-invariance");

  CheckReport u = check_unitary_invariance(3, 2, 10, 7);
  CHECK(u.status == CheckStatus::pass);

  CheckReport rn = check_symplectic_invariance_negative();
  CHECK(rn.status == CheckStatus::fail);
  CHECK(rn.witness.contains("delta"));
  CHECK(rn.witness["delta_terms"].get<uint64_t>() > 0);

  CheckReport un = check_unitary_invariance_negative();
  CHECK(un.status == CheckStatus::fail);
  CHECK(un.witness.contains("delta"));
}

TEST_CASE("minimal vanishing degree, frozen kernel ranks") {
  CheckReport r = check_min_vanishing_degree(2, 2);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.stats["min_degree"] == 5);
  CHECK(r.stats["points"] == 5);  // P^1(F_4)
  for (const auto& row : r.stats["ranks"]) {
    uint32_t d = row["d"].get<uint32_t>();
    if (d <= 4) {
      CHECK(row["kernel_dim"] == 0);
      CHECK(row["rank"] == row["monomials"]);
    }
    if (d == 4) CHECK(row["rank"] == 5);
    if (d == 5) {
      CHECK(row["monomials"] == 6);
      CHECK(row["rank"] == 5);
      CHECK(row["kernel_dim"] == 1);
    }
  }
  CHECK(r.witness["vanishes_everywhere"] == true);
  CHECK(r.stats["classical_witness_degree"] == 5);
  CHECK(r.stats["classical_witness_vanishes"] == true);

  CheckReport r3 = check_min_vanishing_degree(3, 2);
  CHECK(r3.status == CheckStatus::pass);
  CHECK(r3.stats["min_degree"] == 5);
  CHECK(r3.stats["points"] == 21);  // P^2(F_4)
  for (const auto& row : r3.stats["ranks"]) {
    uint32_t d = row["d"].get<uint32_t>();
    if (d <= 4) CHECK(row["kernel_dim"] == 0);
    if (d == 5) {
      CHECK(row["monomials"] == 21);
      CHECK(row["rank"] == 18);
      CHECK(row["kernel_dim"] == 3);
    }
  }
}

TEST_CASE("smoothness checks") {
  CheckReport s = check_smoothness_symplectic(1, 2, 1);
  CHECK(s.status == CheckStatus::pass);
  CheckReport h = check_smoothness_hermitian(3, 2, 1);
  CHECK(h.status == CheckStatus::pass);
  CheckReport n = check_smoothness_negative(3);
  CHECK(n.status == CheckStatus::fail);
  CHECK(n.witness.contains("example"));
}

TEST_CASE("shift identities and the condition table") {
  CheckReport t = check_cone_condition_table();
  CHECK(t.status == CheckStatus::pass);
  CHECK(t.stats["mismatches"] == 0);

  CheckReport s = check_shift_identities(8);
  CHECK(s.status == CheckStatus::pass);
  CHECK(s.stats["identities_checked"].get<uint64_t>() > 0);
  CHECK(s.stats["z_exact_prime"] == 1009);
}

TEST_CASE("cone closure, exhaustive and negative") {
  CheckReport c = check_cone_closure(7, 7);
  CHECK(c.status == CheckStatus::pass);
  CHECK(c.stats["affine_cone_points"] == 5047);
  CHECK(c.stats["shift_pairs"] == 49);

  CheckReport c2 = check_cone_closure(8, 2);
  CHECK(c2.status == CheckStatus::pass);
  CHECK(c2.stats["affine_cone_points"] == 72);

  // Precondition violations surface as configuration errors, not failures.
  CheckReport bad = check_cone_closure(6, 5);
  CHECK(bad.status == CheckStatus::error);

  CheckReport neg = check_cone_closure_negative();
  CHECK(neg.status == CheckStatus::fail);
  REQUIRE(neg.witness.contains("point"));
  // Deterministic first counterexample of the scan order: the origin
  // shifted by beta = 1 lands off the cone because s_1 = 6 != 0 mod 5.
  std::vector<uint32_t> origin(6, 0);
  CHECK(neg.witness["point"].get<std::vector<uint32_t>>() == origin);
  CHECK(neg.witness["alpha"] == 0);
  CHECK(neg.witness["beta"] == 1);
}

TEST_CASE("y123 generic freeness over F7 escalates to F49") {
  CheckReport r = y123_generic_freeness(7, 7, {49}, 42, 200000000);
  CHECK(r.status == CheckStatus::evidence);
  CHECK(r.stats["candidates"] == 137257);
  CHECK(r.stats["y_points"] == 841);
  CHECK(r.stats["vertex_on_variety"] == true);
  CHECK(r.stats["vertex_stabilizer"] == 5040);
  CHECK(r.stats["base_trivial_stabilizer_points"] == 0);
  CHECK(r.stats["repeated_coord_inconsistencies"] == 0);
  // The witness lives in the quadratic extension and was re-verified.
  CHECK(r.witness["field"] == 49);
  CHECK(r.witness["stabilizer_order"] == 1);
  CHECK(r.witness["distinct_coordinates"] == true);
}

TEST_CASE("z123 quotient construction over F7") {
  CheckReport r = z123_construct_and_verify(7, 7, {49, 343}, 42, 200000000);
  CHECK(r.status == CheckStatus::evidence);
  CHECK(r.stats["y_points"] == 841);
  CHECK(r.stats["z_points"] == 120);
  CHECK(r.stats["cone_law_holds"] == true);
  CHECK(r.stats["fibers_all_size_q"] == true);
  CHECK(r.stats["well_defined"] == true);
  CHECK(r.stats["equivariant"] == true);
  // Every z over F_49 carries an affine reflection, so that level of the
  // ladder must be recorded as exhausted before the cubic level succeeds.
  REQUIRE(r.stats["escalations"].size() == 2);
  CHECK(r.stats["escalations"][0]["field"] == 49);
  CHECK(r.stats["escalations"][0]["witness_found"] == false);
  CHECK(r.stats["escalations"][1]["field"] == 343);
  CHECK(r.stats["escalations"][1]["witness_found"] == true);
  CHECK(r.witness["field"] == 343);
  CHECK(r.witness["stabilizer_order"] == 1);
}

TEST_CASE("y123 dimension profile at reduced depth") {
  CheckReport r = y123_degree_and_dimension(7, 7, 1, 10, 42, 200000000);
  CHECK(r.status == CheckStatus::evidence);
  CHECK(r.stats["y_dim_estimate"].get<double>() ==
        doctest::Approx(std::log(841.0) / std::log(7.0)));
  CHECK(r.stats["y_dim_target"] == 3);
  CHECK(r.stats["z_dim_estimate"].get<double>() ==
        doctest::Approx(std::log(120.0) / std::log(7.0)));
  CHECK(r.stats["z_dim_target"] == 2);
  CHECK(r.stats["slices_ok"] == true);
  for (const auto& level : r.stats["slice_levels"])
    CHECK(level["improper"] == 0);
  CHECK(r.stats["hyperplane_slice_min"] == 1);
  CHECK(r.stats["hyperplane_slice_max"] == 1);
  CHECK(r.stats["bezout_ceiling"] == 6);
}

TEST_CASE("group fact checks") {
  CHECK(check_psl2_9_facts().status == CheckStatus::pass);
  CHECK(check_weyl_e6_facts().status == CheckStatus::pass);
  CheckReport c = check_central_products();
  CHECK(c.status == CheckStatus::pass);
}

TEST_CASE("run_entry stamps seed and maps exceptions") {
  Context ctx;  // defaults: seed 42, no timings
  const auto& e = entry_of("prop3.1a.sympl-invariance");
  CheckReport r = run_entry(e, ctx);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.seed == derive_seed("prop3.1a.sympl-invariance", 42));
  CHECK(r.elapsed_ms == 0);
  CHECK(r.params["m"] == 1);
  CHECK(r.params["q"] == 2);

  // Parameter overrides flow into the report.
  ordered_json ov = {{"words", 5}};
  CheckReport r2 = run_entry(e, ctx, ov);
  CHECK(r2.status == CheckStatus::pass);
  CHECK(r2.params["words"] == 5);

  // A throwing check is reported as an error, not a crash.
  RegistryEntry boom;
  boom.id = "test.boom";
  boom.paper_anchor = "none";
  boom.run = [](const Context&, const ordered_json&) -> CheckReport {
    throw std::runtime_error("synthetic failure");
  };
  CheckReport rb = run_entry(boom, ctx);
  CHECK(rb.status == CheckStatus::error);
  CHECK(rb.witness["error"] == "synthetic failure");
}

TEST_CASE("negative control entries report fail") {
  Context ctx;
  for (const auto& e : registry()) {
    if (!e.negative_control) continue;
    CheckReport r = run_entry(e, ctx);
    CHECK(r.status == CheckStatus::fail);
    CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("report serialization order is pinned") {
  CheckReport r;
  r.id = "x";
  r.paper_anchor = "y";
  r.status = CheckStatus::evidence;
  ordered_json j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>({"id", "params", "status", "witness",
                                          "stats", "seed", "elapsed",
                                          "paper_anchor"}));
  CHECK(j["status"] == "evidence");
  CHECK(std::string(to_string(CheckStatus::pass)) == "pass");
  CHECK(std::string(to_string(CheckStatus::fail)) == "fail");
  CHECK(std::string(to_string(CheckStatus::error)) == "error");
}

TEST_CASE("classical orders check carries the uncertified list") {
  CheckReport r = check_classical_orders();
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.stats["uncertified"] ==
        ordered_json::array({"SU4(3)", "U4(3)"}));
}
