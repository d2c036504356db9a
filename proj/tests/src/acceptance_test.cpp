// Acceptance gate: one line per criterion, wall-clock limits pinned in
// code. Criteria 1-7 run in process against the core library; criterion 8
// drives the real command line binary twice and byte-compares the output.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rdlab/bounds.hpp"
#include "rdlab/checks.hpp"
#include "rdlab/report.hpp"

using namespace rdlab;
using namespace rdlab::checks;

namespace {

int g_failures = 0;

void expect(std::string& note, bool cond, const std::string& what) {
  if (!cond && note.empty()) note = what;
}

std::vector<const RegistryEntry*> entries_of(const std::string& id) {
  std::vector<const RegistryEntry*> out;
  for (const auto& e : registry())
    if (e.id == id) out.push_back(&e);
  return out;
}

void criterion(int num, const std::string& name, double limit_secs,
               const std::function<void(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string note;
  try {
    body(note);
  } catch (const std::exception& e) {
    if (note.empty()) note = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (note.empty() && limit_secs > 0 && secs > limit_secs) {
    std::ostringstream os;
    os << "exceeded the " << limit_secs << "s limit";
    note = os.str();
  }
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n",
              note.empty() ? "PASS" : "FAIL", num, name.c_str(), secs,
              note.empty() ? "" : " - ", note.c_str());
  std::fflush(stdout);
  if (!note.empty()) ++g_failures;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  Context ctx;  // seed 42, default budgets, no timings

  criterion(1, "form invariance with seeded word sampling", 30.0,
            [&](std::string& note) {
    for (const char* id :
         {"prop3.1a.sympl-invariance", "prop3.1b.unit-invariance"}) {
      auto es = entries_of(id);
      expect(note, es.size() == 4, std::string(id) + ": expected 4 parameter sets");
      for (const auto* e : es) {
        CheckReport r = run_entry(*e, ctx);
        expect(note, r.status == CheckStatus::pass,
               std::string(id) + " did not pass");
        expect(note, r.params["words"] == 100,
               std::string(id) + ": expected 100 random words");
      }
    }
    for (const char* id : {"neg.sympl-invariance", "neg.unit-invariance"}) {
      auto es = entries_of(id);
      expect(note, es.size() == 1, std::string(id) + ": expected one entry");
      CheckReport r = run_entry(*es[0], ctx);
      expect(note, r.status == CheckStatus::fail,
             std::string(id) + " was expected to fail");
      expect(note, r.witness.contains("delta") &&
                       r.witness["delta"].get<std::string>() != "0",
             std::string(id) + ": missing nonzero delta witness");
    }
  });

  criterion(2, "smooth hypersurfaces over the base field and its towers",
            60.0, [&](std::string& note) {
    for (const char* id :
         {"prop3.1a.smoothness", "prop3.1b.smoothness"}) {
      auto es = entries_of(id);
      expect(note, es.size() == 4, std::string(id) + ": expected 4 parameter sets");
      for (const auto* e : es) {
        CheckReport r = run_entry(*e, ctx);
        expect(note, r.status == CheckStatus::pass,
               std::string(id) + " did not pass for params " +
                   e->params.dump());
      }
    }
  });

  criterion(3, "minimal vanishing degree is q^2 + 1", 60.0,
            [&](std::string& note) {
    auto es = entries_of("prop3.1b.min-vanish");
    expect(note, es.size() == 2, "expected the n=2 and n=3 instances");
    for (const auto* e : es) {
      CheckReport r = run_entry(*e, ctx);
      expect(note, r.status == CheckStatus::pass, "min-vanish did not pass");
      expect(note, r.stats["min_degree"] == 5, "minimal degree is not 5");
      for (const auto& row : r.stats["ranks"]) {
        if (row["d"].get<uint32_t>() <= 4)
          expect(note, row["kernel_dim"] == 0,
                 "kernel below degree 5 is not trivial");
        expect(note, row["monomials"].get<uint64_t>() <= 21,
               "evaluation matrix wider than 21 columns");
      }
      expect(note, r.stats["points"].get<uint64_t>() <= 21,
             "evaluation matrix taller than 21 rows");
    }
  });

  criterion(4, "shift identities, binomial table and cone closure", 120.0,
            [&](std::string& note) {
    auto table = entries_of("rem5.2.cone-condition");
    expect(note, table.size() == 1, "missing cone condition table");
    CheckReport t = run_entry(*table[0], ctx);
    expect(note, t.status == CheckStatus::pass, "condition table failed");
    expect(note, t.params["max_n"] == 64, "table should reach n = 64");

    auto shifts = entries_of("lem5.1d.shift-identities");
    expect(note, shifts.size() == 1, "missing shift identities");
    CheckReport s = run_entry(*shifts[0], ctx);
    expect(note, s.status == CheckStatus::pass, "shift identities failed");
    expect(note, s.params["max_n"] == 16, "identities should reach n = 16");

    auto closures = entries_of("lem5.1d.cone-closure");
    expect(note, closures.size() == 2, "expected (7,7) and (8,2) closures");
    for (const auto* e : closures) {
      CheckReport r = run_entry(*e, ctx);
      expect(note, r.status == CheckStatus::pass, "cone closure failed");
    }

    auto neg = entries_of("neg.cone-closure");
    expect(note, neg.size() == 1, "missing negative closure control");
    CheckReport n = run_entry(*neg[0], ctx);
    expect(note, n.status == CheckStatus::fail,
           "negative closure control did not fail");
    expect(note, n.witness.contains("point") && n.witness.contains("alpha") &&
                     n.witness.contains("beta"),
           "negative closure control lacks a counterexample witness");
  });

  criterion(5, "Y123/Z123 census, dimensions, slices and free points", 480.0,
            [&](std::string& note) {
    auto frees = entries_of("lem5.1c.generic-freeness");
    expect(note, frees.size() == 1, "missing generic freeness entry");
    CheckReport y = run_entry(*frees[0], ctx);
    expect(note, y.status == CheckStatus::evidence,
           "freeness on Y did not reach evidence status");
    expect(note, y.stats["candidates"] == 137257,
           "expected 137257 projective candidates");
    expect(note, y.stats["vertex_on_variety"] == true,
           "vertex is not on the variety");
    expect(note, y.witness["stabilizer_order"] == 1,
           "no trivial-stabilizer point certified on Y");

    auto zs = entries_of("prop6.1b.z123-freeness");
    expect(note, zs.size() == 1, "missing z123 entry");
    CheckReport z = run_entry(*zs[0], ctx);
    expect(note, z.status == CheckStatus::evidence,
           "freeness on Z did not reach evidence status");
    expect(note, z.stats["cone_law_holds"] == true, "cone law violated");
    expect(note, z.witness["stabilizer_order"] == 1,
           "no trivial-stabilizer point certified on Z");

    auto dims = entries_of("lem5.1b.degree-dimension");
    expect(note, dims.size() == 1, "missing degree-dimension entry");
    CheckReport d = run_entry(*dims[0], ctx);
    expect(note, d.status == CheckStatus::evidence,
           "dimension profile did not reach evidence status");
    double ydim = d.stats["y_dim_estimate"].get<double>();
    double zdim = d.stats["z_dim_estimate"].get<double>();
    expect(note, std::fabs(ydim - 3.0) <= 0.5, "Y dimension outside 3 +- 0.5");
    expect(note, std::fabs(zdim - 2.0) <= 0.5, "Z dimension outside 2 +- 0.5");
    uint64_t total_trials = 0;
    for (const auto& level : d.stats["slice_levels"]) {
      total_trials += level["trials"].get<uint64_t>();
      expect(note, level["improper"] == 0, "improper slice trial recorded");
      expect(note, level["max_count"].get<uint64_t>() <= 6,
             "a proper slice exceeded the Bezout ceiling 6");
    }
    expect(note, total_trials >= 50, "fewer than 50 slice trials");
    expect(note, d.stats["slices_ok"] == true, "slice summary not ok");
  });

  criterion(6, "group-theoretic facts and central products", 180.0,
            [&](std::string& note) {
    for (const char* id :
         {"cor2.2.psl2-9-facts", "thm1.3.weyl-e6-facts",
          "thm1.3.symplectic-su-orders"}) {
      auto es = entries_of(id);
      expect(note, es.size() == 1, std::string("missing ") + id);
      CheckReport r = run_entry(*es[0], ctx);
      expect(note, r.status == CheckStatus::pass,
             std::string(id) + " did not pass");
    }
    auto cps = entries_of("sect4.central-product");
    expect(note, cps.size() == 1, "missing central product entry");
    CheckReport c = run_entry(*cps[0], ctx);
    expect(note, c.status == CheckStatus::pass, "central products failed");
    expect(note, c.stats["products"].size() >= 3,
           "fewer than 3 central product specs");
    for (const auto& row : c.stats["products"])
      expect(note, row["order_law"] == true,
             "central product order law violated");
  });

  criterion(7, "summary table reproduction with sound replays", 1.0,
            [&](std::string& note) {
    using rdlab::bounds::Engine;
    Engine e = Engine::with_default_facts();
    e.derive();
    const std::map<std::pair<std::string, int>, uint32_t> want = {
        {{"S6", 0}, 2},    {{"S6", 2}, 2},    {{"S6", 3}, 1},
        {{"S6", 5}, 2},    {{"S6", 7}, 2},    {{"S7", 0}, 3},
        {{"S7", 2}, 3},    {{"S7", 3}, 2},    {{"S7", 5}, 2},
        {{"S7", 7}, 2},    {{"S8", 0}, 4},    {{"S8", 2}, 3},
        {{"S8", 3}, 4},    {{"S8", 5}, 4},    {{"S8", 7}, 4},
        {{"W(E6)", 0}, 3}, {{"W(E6)", 2}, 2}, {{"W(E6)", 3}, 2},
        {{"W(E6)", 5}, 2}, {{"W(E6)", 7}, 3},
    };
    auto cells = e.paper_table();
    expect(note, cells.size() == 20, "expected 20 table cells");
    for (const auto& c : cells) {
      auto it = want.find({c.group, c.characteristic});
      if (it == want.end() || !c.bound.has_value() ||
          *c.bound != it->second) {
        std::ostringstream os;
        os << "cell " << c.group << " p=" << c.characteristic << " is "
           << (c.bound ? std::to_string(*c.bound) : std::string("empty"));
        expect(note, false, os.str());
        continue;
      }
      expect(note, e.replay(c.trace),
             "trace replay failed for " + c.group);
    }
    expect(note, e.replay_all(), "full fact base replay failed");
  });

  criterion(8, "byte-identical seeded reruns of the full suite", 0.0,
            [&](std::string& note) {
    expect(note, !cli.empty(), "cli path was not passed as argv[1]");
    if (!note.empty()) return;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    fs::path o1 = dir / "rdlab_accept_run1.jsonl";
    fs::path o2 = dir / "rdlab_accept_run2.jsonl";
    auto run = [&](const fs::path& out) {
      std::string cmd = "\"" + cli + "\" verify-all --seed 42 --out \"" +
                        out.string() + "\" > /dev/null 2>&1";
      return std::system(cmd.c_str());
    };
    expect(note, run(o1) == 0, "first suite run exited nonzero");
    expect(note, run(o2) == 0, "second suite run exited nonzero");
    if (!note.empty()) return;
    std::string a = slurp(o1), b = slurp(o2);
    expect(note, !a.empty(), "first run produced no output");
    expect(note, a == b, "the two runs differ");
    std::error_code ec;
    fs::remove(o1, ec);
    fs::remove(o2, ec);
  });

  return g_failures;
}
