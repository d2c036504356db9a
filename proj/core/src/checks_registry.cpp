#include <atomic>
#include <chrono>
#include <thread>
#include <utility>

#include "rdlab/checks.hpp"

namespace rdlab::checks {

uint64_t derive_seed(const std::string& id, uint64_t base_seed) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ^ base_seed;
}

namespace {

uint32_t u32(const ordered_json& p, const char* key, uint32_t fallback) {
  return p.contains(key) ? p.at(key).get<uint32_t>() : fallback;
}

std::vector<uint32_t> u32list(const ordered_json& p, const char* key,
                              std::vector<uint32_t> fallback) {
  return p.contains(key) ? p.at(key).get<std::vector<uint32_t>>()
                         : std::move(fallback);
}

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> reg;
  auto add = [&](std::string id, std::string anchor, ordered_json params,
                 bool negative,
                 std::function<CheckReport(const Context&,
                                           const ordered_json&)> run) {
    reg.push_back({std::move(id), std::move(anchor), std::move(params),
                   negative, std::move(run)});
  };

  using Case = std::pair<uint32_t, uint32_t>;
  const Case small_cases[] = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
  const Case unit_cases[] = {{3, 2}, {3, 3}, {4, 2}, {4, 3}};

  const char* sympl_anchor =
      "Prop. 3.1(a) proof: f(x) = omega(x, x^q) is Sp_2m(F_q)-invariant";
  for (auto [m, q] : small_cases)
    add("prop3.1a.sympl-invariance", sympl_anchor,
        {{"m", m}, {"q", q}, {"words", 100}}, false,
        [](const Context& ctx, const ordered_json& p) {
          return check_symplectic_invariance(u32(p, "m", 1), u32(p, "q", 2),
                                             u32(p, "words", 100),
                                             ctx.base_seed);
        });

  const char* unit_anchor =
      "Prop. 3.1(b) proof: Delta(x) := f(g x) - f(x) is the zero polynomial";
  for (auto [n, q] : unit_cases)
    add("prop3.1b.unit-invariance", unit_anchor,
        {{"n", n}, {"q", q}, {"words", 100}}, false,
        [](const Context& ctx, const ordered_json& p) {
          return check_unitary_invariance(u32(p, "n", 3), u32(p, "q", 2),
                                          u32(p, "words", 100),
                                          ctx.base_seed);
        });

  const char* mv_anchor =
      "Prop. 3.1(b) proof: the minimal degree of a nonzero form vanishing "
      "at every rational point is q^2 + 1";
  const Case mv_cases[] = {{2, 2}, {3, 2}};
  for (auto [n, q] : mv_cases)
    add("prop3.1b.min-vanish", mv_anchor, {{"n", n}, {"q", q}}, false,
        [](const Context&, const ordered_json& p) {
          return check_min_vanishing_degree(u32(p, "n", 2), u32(p, "q", 2));
        });

  const char* smooth_sp_anchor =
      "Prop. 3.1(a) proof: Jacobian criterion, f(x) = omega(x, x^q) cuts "
      "out a smooth hypersurface";
  for (auto [m, q] : small_cases)
    add("prop3.1a.smoothness", smooth_sp_anchor,
        {{"kind", "symplectic"}, {"m", m}, {"q", q}, {"tower_depth", 2}},
        false, [](const Context& ctx, const ordered_json& p) {
          uint32_t depth =
              ctx.tower_depth ? ctx.tower_depth : u32(p, "tower_depth", 2);
          return check_smoothness_symplectic(u32(p, "m", 1), u32(p, "q", 2),
                                             depth);
        });

  const char* smooth_u_anchor =
      "Prop. 3.1(b) proof: Jacobian criterion for the hermitian "
      "hypersurface, d/dx_i = (q+1) x_i^q with q+1 = 1 mod p";
  for (auto [n, q] : unit_cases)
    add("prop3.1b.smoothness", smooth_u_anchor,
        {{"kind", "hermitian"}, {"n", n}, {"q", q}, {"tower_depth", 2}},
        false, [](const Context& ctx, const ordered_json& p) {
          uint32_t depth =
              ctx.tower_depth ? ctx.tower_depth : u32(p, "tower_depth", 2);
          return check_smoothness_hermitian(u32(p, "n", 3), u32(p, "q", 2),
                                            depth);
        });

  add("rem5.2.cone-condition",
      "Remark 5.2: the proof goes through whenever (n choose 1) = "
      "(n choose 2) = (n choose 3) = 0 mod p",
      {{"max_n", 64}, {"primes", {2, 3, 5, 7}}}, false,
      [](const Context&, const ordered_json&) {
        return check_cone_condition_table();
      });

  add("lem5.1d.shift-identities",
      "Lemma 5.1(d) proof: s_1(y_ab) = a s_1(y) + n b, with the matching "
      "s_2 and s_3 expansions (including the C(n,3) b^3 term)",
      {{"max_n", 16}, {"primes", {2, 3, 5, 7, 1009}}}, false,
      [](const Context&, const ordered_json& p) {
        return check_shift_identities(u32(p, "max_n", 16));
      });

  const char* closure_anchor =
      "Lemma 5.1(d): Y_123 is a cone over the S_n-fixed point (1:1:...:1)";
  const Case closure_cases[] = {{7, 7}, {8, 2}};
  for (auto [n, q] : closure_cases)
    add("lem5.1d.cone-closure", closure_anchor, {{"n", n}, {"q", q}}, false,
        [](const Context&, const ordered_json& p) {
          return check_cone_closure(u32(p, "n", 7), u32(p, "q", 7));
        });

  add("lem5.1c.generic-freeness",
      "Lemma 5.1(c): the S_n-action on Y_123 is generically free",
      {{"n", 7}, {"q", 7}, {"escalation", {49}}}, false,
      [](const Context& ctx, const ordered_json& p) {
        return y123_generic_freeness(u32(p, "n", 7), u32(p, "q", 7),
                                     u32list(p, "escalation", {49}),
                                     ctx.base_seed, ctx.budget_points);
      });

  // Over F_49 every rational z picks up an affine reflection (the non-free
  // locus is a curve, and at q^2 its rational points swamp the quotient
  // surface), so the ladder needs the cubic extension as well.
  add("prop6.1b.z123-freeness",
      "Prop. 6.1(b) proof: the S_n-action on Z_123 = Y_123 / G_m is "
      "generically free",
      {{"n", 7}, {"q", 7}, {"escalation", {49, 343}}}, false,
      [](const Context& ctx, const ordered_json& p) {
        return z123_construct_and_verify(u32(p, "n", 7), u32(p, "q", 7),
                                         u32list(p, "escalation", {49, 343}),
                                         ctx.base_seed, ctx.budget_points);
      });

  add("lem5.1b.degree-dimension",
      "Lemma 5.1(b): Y_123 is a complete intersection of dimension n - 4 "
      "and degree 6 in P^{n-1}",
      {{"n", 7}, {"q", 7}, {"tower_depth", 3}, {"trials", 50}}, false,
      [](const Context& ctx, const ordered_json& p) {
        uint32_t depth =
            ctx.tower_depth ? ctx.tower_depth : u32(p, "tower_depth", 3);
        uint32_t trials = ctx.trials ? ctx.trials : u32(p, "trials", 50);
        return y123_degree_and_dimension(u32(p, "n", 7), u32(p, "q", 7),
                                         depth, trials, ctx.base_seed,
                                         ctx.budget_points);
      });

  add("cor2.2.psl2-9-facts",
      "Sec. 2: A_6 ~= PSL_2(9) = Sp_2(F_9)/{+-1}, simple and 2-transitive "
      "on P^1(F_9)",
      ordered_json::object(), false,
      [](const Context&, const ordered_json&) { return check_psl2_9_facts(); });

  add("thm1.3.weyl-e6-facts",
      "Thm. 1.3 proof: 1 -> SU_4(2) -> W(E6) -> Z/2 -> 0",
      ordered_json::object(), false,
      [](const Context&, const ordered_json&) { return check_weyl_e6_facts(); });

  add("thm1.3.symplectic-su-orders",
      "Thm. 1.3 proof: |SU_4(2)| = |PSp_4(3)| = 25920 behind the exceptional "
      "isomorphism SU_4(2) ~= PSp_4(3)",
      ordered_json::object(), false, [](const Context&, const ordered_json&) {
        return check_classical_orders();
      });

  add("sect4.central-product",
      "Sec. 4: central products (A x B)/{(z, phi(z)^{-1})} with identified "
      "central subgroups",
      {{"specs", 3}}, false, [](const Context&, const ordered_json&) {
        return check_central_products();
      });

  add("neg.sympl-invariance",
      "Prop. 3.1(a) negative control: diag(2,1,1,1) is not symplectic",
      {{"m", 2}, {"q", 3}, {"generator", "diag(2,1,1,1)"}}, true,
      [](const Context&, const ordered_json&) {
        return check_symplectic_invariance_negative();
      });

  add("neg.unit-invariance",
      "Prop. 3.1(b) negative control: a non-unitary diagonal matrix",
      {{"n", 3}, {"q", 3}}, true, [](const Context&, const ordered_json&) {
        return check_unitary_invariance_negative();
      });

  add("neg.smoothness",
      "Prop. 3.1 negative control: f = x_1^p has an identically vanishing "
      "gradient in characteristic p",
      {{"p", 3}}, true, [](const Context&, const ordered_json& p) {
        return check_smoothness_negative(u32(p, "p", 3));
      });

  add("neg.cone-closure",
      "Remark 5.2 negative control: n = 6, p = 5 violates the binomial "
      "condition and the cone closure genuinely fails",
      {{"n", 6}, {"q", 5}}, true, [](const Context&, const ordered_json&) {
        return check_cone_closure_negative();
      });

  return reg;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> reg = build_registry();
  return reg;
}

CheckReport run_entry(const RegistryEntry& entry, const Context& ctx) {
  return run_entry(entry, ctx, entry.params);
}

CheckReport run_entry(const RegistryEntry& entry, const Context& ctx,
                      const ordered_json& params) {
  ordered_json merged = entry.params;
  for (auto it = params.begin(); it != params.end(); ++it)
    merged[it.key()] = it.value();
  Context local = ctx;
  local.base_seed = derive_seed(entry.id, ctx.base_seed);

  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  try {
    rep = entry.run(local, merged);
  } catch (const std::exception& e) {
    rep.id = entry.id;
    rep.paper_anchor = entry.paper_anchor;
    rep.params = merged;
    rep.status = CheckStatus::error;
    rep.witness = {{"error", e.what()}};
  }
  rep.seed = local.base_seed;
  if (ctx.timings) {
    auto dt = std::chrono::steady_clock::now() - t0;
    rep.elapsed_ms = uint64_t(
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
  } else {
    rep.elapsed_ms = 0;
  }
  return rep;
}

std::vector<CheckReport> run_all(const Context& ctx,
                                 bool include_negative_controls,
                                 uint32_t jobs) {
  const auto& reg = registry();
  std::vector<const RegistryEntry*> selected;
  for (const auto& e : reg)
    if (!e.negative_control || include_negative_controls)
      selected.push_back(&e);

  std::vector<CheckReport> out(selected.size());
  std::atomic<size_t> next{0};
  auto deadline_start = std::chrono::steady_clock::now();
  auto over_budget = [&] {
    if (ctx.budget_secs <= 0.0) return false;
    std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - deadline_start;
    return dt.count() > ctx.budget_secs;
  };

  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < selected.size();
         i = next.fetch_add(1)) {
      if (over_budget()) {
        CheckReport rep;
        rep.id = selected[i]->id;
        rep.paper_anchor = selected[i]->paper_anchor;
        rep.params = selected[i]->params;
        rep.status = CheckStatus::error;
        rep.witness = {{"error", "skipped: time budget exhausted"}};
        rep.seed = derive_seed(rep.id, ctx.base_seed);
        out[i] = std::move(rep);
        continue;
      }
      out[i] = run_entry(*selected[i], ctx);
    }
  };

  uint32_t nw = jobs ? jobs : std::thread::hardware_concurrency();
  if (!nw) nw = 1;
  nw = uint32_t(std::min<size_t>(nw, selected.size()));
  std::vector<std::thread> pool;
  for (uint32_t i = 1; i < nw; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace rdlab::checks
