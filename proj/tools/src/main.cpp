#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdlab/bounds.hpp"
#include "rdlab/checks.hpp"

namespace {

using rdlab::CheckReport;
using rdlab::CheckStatus;
using rdlab::ordered_json;

struct Options {
  uint64_t seed = 42;
  uint64_t budget_points = 200000000;
  double budget_secs = 0.0;
  uint32_t trials = 0;
  uint32_t tower_depth = 0;
  uint32_t jobs = 0;
  std::string format = "structured";
  std::string out;
  bool timings = false;
  bool include_negative = false;
  // per-check parameter overrides; -1 = not given
  int64_t n = -1, q = -1, p = -1, m = -1;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--seed", opt.seed, "Base seed for all random draws");
  cmd->add_option("--budget-points", opt.budget_points,
                  "Cap on enumerated points per check");
  cmd->add_option("--budget-secs", opt.budget_secs,
                  "Wall-clock budget for the whole run (0 = unlimited)");
  cmd->add_option("--trials", opt.trials,
                  "Override the sampled trial count (0 = per-check default)");
  cmd->add_option("--tower-depth", opt.tower_depth,
                  "Override the field-tower depth (0 = per-check default)");
  cmd->add_option("--jobs", opt.jobs,
                  "Worker threads (0 = available parallelism)");
  cmd->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"structured", "plain"}));
  cmd->add_option("--out", opt.out, "Also write the output to this file");
  cmd->add_flag("--timings", opt.timings,
                "Record wall-clock elapsed times in reports");
  cmd->add_flag("--include-negative-controls", opt.include_negative,
                "Run the negative controls too (they report fail)");
}

rdlab::checks::Context context_of(const Options& opt) {
  rdlab::checks::Context ctx;
  ctx.base_seed = opt.seed;
  ctx.budget_points = opt.budget_points;
  ctx.budget_secs = opt.budget_secs;
  ctx.trials = opt.trials;
  ctx.tower_depth = opt.tower_depth;
  ctx.timings = opt.timings;
  return ctx;
}

int write_output(const std::string& text, const Options& opt) {
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << opt.out << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

int emit_reports(const std::vector<CheckReport>& reports,
                 const Options& opt) {
  std::ostringstream buf;
  for (const auto& r : reports) {
    if (opt.format == "plain")
      buf << r.to_plain();
    else
      buf << r.to_json().dump() << "\n";
  }
  if (int rc = write_output(buf.str(), opt)) return rc;
  bool any_fail = false, any_error = false;
  for (const auto& r : reports) {
    any_fail |= r.status == CheckStatus::fail;
    any_error |= r.status == CheckStatus::error;
  }
  return any_fail ? 1 : any_error ? 2 : 0;
}

int cmd_verify_all(const Options& opt) {
  auto reports =
      rdlab::checks::run_all(context_of(opt), opt.include_negative, opt.jobs);
  return emit_reports(reports, opt);
}

int cmd_check(const std::string& id, const Options& opt) {
  const auto& reg = rdlab::checks::registry();
  std::vector<const rdlab::checks::RegistryEntry*> matches;
  for (const auto& e : reg)
    if (e.id == id) matches.push_back(&e);
  if (matches.empty()) {
    std::cerr << "unknown check id: " << id << "\n";
    return 2;
  }

  ordered_json overrides = ordered_json::object();
  if (opt.n >= 0) overrides["n"] = opt.n;
  if (opt.q >= 0) overrides["q"] = opt.q;
  if (opt.p >= 0) overrides["p"] = opt.p;
  if (opt.m >= 0) overrides["m"] = opt.m;

  auto ctx = context_of(opt);
  std::vector<CheckReport> reports;
  if (!overrides.empty())
    reports.push_back(rdlab::checks::run_entry(*matches[0], ctx, overrides));
  else
    for (const auto* e : matches)
      reports.push_back(rdlab::checks::run_entry(*e, ctx));
  return emit_reports(reports, opt);
}

ordered_json trace_json(const rdlab::bounds::TracePtr& t) {
  ordered_json j{{"rule", t->rule},
                 {"group", t->group},
                 {"characteristic", t->characteristic},
                 {"bound", t->bound},
                 {"detail", t->detail}};
  auto arr = ordered_json::array();
  for (const auto& pre : t->premises) arr.push_back(trace_json(pre));
  j["premises"] = arr;
  return j;
}

int cmd_table(const Options& opt) {
  auto engine = rdlab::bounds::Engine::with_default_facts();
  engine.derive();
  auto cells = engine.paper_table();

  bool underivable = false;
  std::ostringstream buf;
  if (opt.format == "plain") {
    buf << engine.render_table(cells);
  } else {
    for (const auto& c : cells) {
      ordered_json j{{"group", c.group}, {"characteristic", c.characteristic}};
      if (c.bound) {
        j["bound"] = *c.bound;
        j["rule"] = c.trace->rule;
      } else {
        j["bound"] = nullptr;
      }
      buf << j.dump() << "\n";
    }
  }
  for (const auto& c : cells) underivable |= !c.bound;
  if (int rc = write_output(buf.str(), opt)) return rc;
  if (underivable) {
    std::cerr << "table has underivable cells\n";
    return 2;
  }
  return 0;
}

int cmd_explain(const std::string& group, int p, const Options& opt) {
  auto engine = rdlab::bounds::Engine::with_default_facts();
  engine.derive();
  auto fact = engine.best(group, p);
  if (!fact) {
    std::cerr << "no derived bound for rd_" << p << "(" << group << ")\n";
    return 2;
  }
  std::ostringstream buf;
  if (opt.format == "plain")
    buf << engine.explain(group, p);
  else
    buf << trace_json(fact->trace).dump(2) << "\n";
  return write_output(buf.str(), opt);
}

int cmd_list(const Options& opt) {
  std::ostringstream buf;
  for (const auto& e : rdlab::checks::registry()) {
    if (opt.format == "plain") {
      buf << e.id << (e.negative_control ? "  [negative-control]" : "")
          << "\n  params: " << e.params.dump()
          << "\n  anchor: " << e.paper_anchor << "\n";
    } else {
      ordered_json j{{"id", e.id},
                     {"params", e.params},
                     {"negative_control", e.negative_control},
                     {"paper_anchor", e.paper_anchor}};
      buf << j.dump() << "\n";
    }
  }
  return write_output(buf.str(), opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rdlab: exact-arithmetic checks and bound derivations"};
  app.require_subcommand(1);
  Options opt;

  auto* verify = app.add_subcommand(
      "verify-all", "Run every registered check and emit reports");
  add_common_flags(verify, opt);

  auto* check =
      app.add_subcommand("check", "Run the checks registered under one id");
  std::string check_id;
  check->add_option("id", check_id, "Check id, e.g. lem5.1d.cone-closure")
      ->required();
  add_common_flags(check, opt);
  check->add_option("--n", opt.n, "Override parameter n");
  check->add_option("--q", opt.q, "Override parameter q");
  check->add_option("--p", opt.p, "Override parameter p");
  check->add_option("--m", opt.m, "Override parameter m");

  auto* table =
      app.add_subcommand("table", "Print the derived upper-bound table");
  add_common_flags(table, opt);

  auto* explain =
      app.add_subcommand("explain", "Print the derivation trace of one cell");
  std::string group;
  int characteristic = 0;
  explain->add_option("group", group, "Group name, e.g. S7")->required();
  explain->add_option("p", characteristic, "Characteristic (0, 2, 3, 5, 7)")
      ->required();
  add_common_flags(explain, opt);

  auto* list = app.add_subcommand("list", "List the registered checks");
  add_common_flags(list, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify_all(opt);
    if (check->parsed()) return cmd_check(check_id, opt);
    if (table->parsed()) return cmd_table(opt);
    if (explain->parsed()) return cmd_explain(group, characteristic, opt);
    if (list->parsed()) return cmd_list(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
