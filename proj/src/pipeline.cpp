#include "qramsey/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>

#include "qramsey/embed.hpp"
#include "qramsey/prune.hpp"
#include "qramsey/tiling.hpp"

namespace qramsey {

namespace {

bool log_enabled() {
  const char* lvl = std::getenv("QRAMSEY_LOG");
  return lvl && std::string(lvl) != "quiet" && std::string(lvl) != "";
}

struct StageClock {
  std::string stage;
  std::chrono::steady_clock::time_point start;
  explicit StageClock(std::string s)
      : stage(std::move(s)), start(std::chrono::steady_clock::now()) {}
  ~StageClock() {
    if (!log_enabled()) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "[timing] " << stage << " " << ms << " ms\n";
  }
};

std::vector<std::uint64_t> split_u64s(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    out.push_back(std::stoull(text.substr(i, j - i)));
    i = j + 1;
  }
  return out;
}

}  // namespace

PipelineConfig config_from_kv(const KvDoc& doc) {
  PipelineConfig cfg;
  std::string mode = doc.find("mode") ? doc.get("mode") : "paper-exact";
  if (mode == "paper-exact")
    cfg.paper_exact = true;
  else if (mode == "engineering")
    cfg.paper_exact = false;
  else
    throw std::invalid_argument("mode must be paper-exact or engineering");
  cfg.s = static_cast<int>(doc.get_u64("s"));
  cfg.n = static_cast<int>(doc.get_u64("n"));
  if (doc.find("N")) cfg.N = doc.get_u64("N");
  cfg.oracle.add("kind", doc.get("kind"));
  for (const char* key : {"p", "parts", "seed", "m", "file"})
    if (doc.find(key)) cfg.oracle.add(key, doc.get(key));
  if (doc.find("degree-checks"))
    cfg.degree_checks = doc.get_u64("degree-checks") != 0;
  if (doc.find("clique-cap")) cfg.finder.clique_cap = doc.get_u64("clique-cap");
  if (doc.find("pivot-fail-cap"))
    cfg.finder.pivot_fail_cap = static_cast<int>(doc.get_u64("pivot-fail-cap"));
  if (doc.find("exact-pool-cap"))
    cfg.finder.exact_pool_cap = doc.get_u64("exact-pool-cap");
  if (doc.find("multipliers"))
    cfg.multipliers = split_u64s(doc.get("multipliers"));
  if (doc.find("codim-maxes"))
    for (std::uint64_t v : split_u64s(doc.get("codim-maxes")))
      cfg.codim_maxes.push_back(static_cast<int>(v));
  return cfg;
}

KvDoc config_to_kv(const PipelineConfig& cfg) {
  KvDoc doc;
  doc.add("mode", cfg.paper_exact ? "paper-exact" : "engineering");
  doc.add_u64("s", static_cast<std::uint64_t>(cfg.s));
  doc.add_u64("n", static_cast<std::uint64_t>(cfg.n));
  doc.add_u64("N", cfg.N);
  for (const auto& [k, v] : cfg.oracle.entries)
    if (k != "N") doc.add("oracle." + k, v);
  doc.add_u64("degree-checks", cfg.degree_checks ? 1 : 0);
  doc.add_u64("clique-cap", cfg.finder.clique_cap);
  doc.add_u64("pivot-fail-cap",
              static_cast<std::uint64_t>(cfg.finder.pivot_fail_cap));
  doc.add_u64("exact-pool-cap", cfg.finder.exact_pool_cap);
  if (!cfg.multipliers.empty()) {
    std::string t;
    for (std::size_t i = 0; i < cfg.multipliers.size(); ++i)
      t += (i ? "," : "") + std::to_string(cfg.multipliers[i]);
    doc.add("multipliers", t);
  }
  if (!cfg.codim_maxes.empty()) {
    std::string t;
    for (std::size_t i = 0; i < cfg.codim_maxes.size(); ++i)
      t += (i ? "," : "") + std::to_string(cfg.codim_maxes[i]);
    doc.add("codim-maxes", t);
  }
  return doc;
}

RunReport run_pipeline(const PipelineConfig& cfg_in) {
  PipelineConfig cfg = cfg_in;
  RunReport out;
  KvDoc r;
  r.add("report-version", "1");

  auto finish = [&](int code, const std::string& verdict) {
    r.add("verdict", verdict);
    r.add_u64("exit", static_cast<std::uint64_t>(code));
    out.exit_code = code;
    out.verdict = verdict;
    out.verified = code == exit_verified;
    out.text = write_kv(r);
    return out;
  };
  auto config_error = [&](const std::string& why) {
    r.add("error", why);
    return finish(exit_config, "config-error");
  };

  // Regime resolution first: a paper-exact run without an explicit N takes
  // the population bound itself.
  RegimeParams params;
  try {
    if (cfg.N == 0) {
      if (!cfg.paper_exact)
        return config_error("engineering mode requires an explicit N");
      RegimeParams probe = RegimeParams::paper(cfg.s, cfg.n, 0);
      std::uint64_t lo = 1, hi = ~std::uint64_t{0};
      // population bound is monotone in N; binary-search the least N
      while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        probe.N = mid;
        if (probe.meets_population_bound())
          hi = mid;
        else
          lo = mid + 1;
      }
      probe.N = lo;
      if (!probe.meets_population_bound())
        return config_error("population bound exceeds representable N");
      cfg.N = lo;
    }
    params = cfg.paper_exact
                 ? RegimeParams::paper(cfg.s, cfg.n, cfg.N)
                 : RegimeParams::engineering(cfg.s, cfg.n, cfg.N,
                                             cfg.multipliers, cfg.codim_maxes);
  } catch (const std::exception& e) {
    return config_error(e.what());
  }
  if (cfg.paper_exact && !params.meets_population_bound()) {
    r.add("refused", "paper-exact mode requires N >= " +
                         params.population_bound_text() + "; got N = " +
                         std::to_string(cfg.N));
    return finish(exit_config, "config-error");
  }

  KvDoc oracle_doc = cfg.oracle;
  oracle_doc.add_u64("N", cfg.N);
  Coloring oracle;
  try {
    oracle = oracle_from_kv(oracle_doc, cfg.base_dir);
    if (oracle.N != cfg.N)
      return config_error("oracle has N = " + std::to_string(oracle.N) +
                          " but the run needs N = " + std::to_string(cfg.N));
  } catch (const std::exception& e) {
    return config_error(e.what());
  }

  for (const auto& [k, v] : config_to_kv(cfg).entries) r.add("config." + k, v);
  r.add("guarantees-void",
        params.paper_exact ? "none" : "engineering constants");
  r.add("population-bound", params.meets_population_bound()
                                ? "ok (" + params.population_bound_text() + ")"
                                : "below " + params.population_bound_text());

  try {
    // The regime assumes the host has no blue K_s; spot-check a prefix
    // sample (informational: a hit just means later stages will fail
    // honestly).
    {
      StageClock clock("blue-clique-spot-check");
      std::vector<Vertex> sample;
      std::uint64_t cap = std::min<std::uint64_t>(
          oracle.N, static_cast<std::uint64_t>(cfg.finder.clique_cap));
      sample.reserve(cap);
      for (std::uint64_t v = 0; v < cap; ++v)
        sample.push_back(static_cast<Vertex>(v));
      CliqueSearch scan =
          find_blue_clique(oracle, sample, cfg.s, cfg.finder.clique_cap);
      r.add("oracle.blue-clique-spot-check", scan.clique ? "found" : "none");
    }

    // --- preprocess ---------------------------------------------------
    FamilyForest forest;
    BuildStats stats;
    {
      StageClock clock("preprocess");
      forest = build_forest(oracle, params, cfg.finder,
                            LeveledSet::Freeness::assumed, &stats);
    }
    std::string err = forest.validate();
    if (!err.empty()) {
      r.add("families.invalid", err);
      return finish(exit_breach, "invariant-breach");
    }
    for (int level = 0; level < static_cast<int>(forest.level_ids.size());
         ++level) {
      const auto& ids = forest.level_ids[level];
      r.add_u64("families.count.level" + std::to_string(level), ids.size());
      if (level == 0) continue;
      std::uint64_t mass = 0, smallest = ~std::uint64_t{0}, largest = 0;
      std::map<int, std::uint64_t> codim_hist;
      std::uint64_t exceptional = 0;
      std::map<std::string, std::uint64_t> freeness;
      for (int id : ids) {
        const LeveledSet& st = forest.set(id);
        mass += st.size();
        smallest = std::min(smallest, st.size());
        largest = std::max(largest, st.size());
        ++codim_hist[st.level_codim(level)];
        if (st.exceptional) ++exceptional;
        ++freeness[to_string(st.freeness)];
      }
      std::string prefix = "families.level" + std::to_string(level);
      r.add_u64(prefix + ".mass", mass);
      r.add_u64(prefix + ".size-min", ids.empty() ? 0 : smallest);
      r.add_u64(prefix + ".size-max", largest);
      std::string hist;
      for (const auto& [d, count] : codim_hist)
        hist += (hist.empty() ? "" : ",") + std::to_string(d) + ":" +
                std::to_string(count);
      r.add(prefix + ".codim-histogram", hist);
      r.add_u64(prefix + ".exceptional", exceptional);
      for (const auto& [kind, count] : freeness)
        r.add_u64(prefix + ".freeness." + kind, count);
    }

    if (cfg.degree_checks) {
      StageClock clock("degree-checks");
      DegreeReport deg =
          check_degree_bounds(oracle, forest, params, cfg.threads);
      r.add_u64("degree.union-checks", deg.union_checks.size());
      r.add_u64("degree.internal-checks", deg.internal_checks.size());
      std::uint64_t union_fail = 0, internal_fail = 0;
      for (const auto& e : deg.union_checks)
        if (!e.pass) ++union_fail;
      for (const auto& e : deg.internal_checks)
        if (!e.pass) ++internal_fail;
      r.add_u64("degree.union-failures", union_fail);
      r.add_u64("degree.internal-failures", internal_fail);
      r.add("degree.all-pass", deg.all_pass ? "1" : "0");
    }

    // --- tile ----------------------------------------------------------
    TilingRun run(oracle, forest, params, cfg.threads);
    StepOutcome last;
    {
      StageClock clock("tile");
      last = run.run_to_completion();
    }
    r.add_u64("tiling.steps", run.trace().size());
    for (int level = 0; level < static_cast<int>(run.tiling().levels.size());
         ++level)
      r.add_u64("tiling.cubes.level" + std::to_string(level),
                run.tiling().levels[level].size());
    std::uint64_t discarded_sets = 0, over_budget = 0;
    for (const auto& trace : run.trace())
      for (const auto& bad : trace.bad_sets) {
        ++discarded_sets;
        if (!bad.within_budget) ++over_budget;
      }
    r.add_u64("tiling.bad-set-records", discarded_sets);
    r.add_u64("tiling.bad-set-over-budget", over_budget);
    if (last.kind == StepOutcome::Kind::failed) {
      r.add("tiling.failed", last.note);
      r.add_u64("tiling.failed.pivot", last.pivot);
      r.add_u64("tiling.failed.level", static_cast<std::uint64_t>(last.level));
      return finish(exit_honest_failure, "honest-failure");
    }
    r.add("tiling.complete", "1");

    // --- audit ----------------------------------------------------------
    AuditResult audit;
    {
      StageClock clock("audit");
      audit = run.audit();
    }
    r.add("audit.pass", audit.pass ? "1" : "0");
    if (!audit.pass) {
      for (const auto& f : audit.failures) r.add("audit.failure", f);
      return finish(exit_breach, "invariant-breach");
    }

    // --- prune ----------------------------------------------------------
    PruneResult pruned;
    {
      StageClock clock("prune");
      pruned = prune(run);
    }
    r.add_u64("prune.removed", pruned.removed_total);
    r.add_u64("prune.removal-records", pruned.removals.size());
    r.add("prune.half-kept", pruned.ok ? "1" : "0");
    if (!pruned.ok) {
      r.add("prune.aborted", pruned.note);
      // paper constants prove |T_C| >= |S_C|/2 outright, so falling under
      // half there is an invariant breach, not bad luck
      return finish(params.paper_exact ? exit_breach : exit_honest_failure,
                    params.paper_exact ? "invariant-breach" : "honest-failure");
    }
    r.add_u64("prune.certification-pairs", pruned.certification.size());
    r.add("prune.certified", pruned.certified ? "1" : "0");
    if (!pruned.certified && params.paper_exact) {
      r.add("prune.note", "max-degree certificate failed under paper constants");
      return finish(exit_breach, "invariant-breach");
    }

    // --- embed ----------------------------------------------------------
    EmbedResult emb;
    {
      StageClock clock("embed");
      emb = greedy_embed(run, pruned, params.paper_exact);
    }
    int top = params.s - 2;
    for (std::size_t i = 0; i < run.tiling().levels[top].size(); ++i) {
      const LeveledCube& c = run.tiling().levels[top][i];
      int set_id = run.assignment().set_id(CubeId{top, static_cast<int>(i)});
      r.add("embed.cube." + std::to_string(i),
            "cube=" + format_cube(c.cube) +
                " codim=" + std::to_string(c.cube.codim) +
                " set-size=" + std::to_string(forest.set(set_id).size()) +
                " pruned-size=" + std::to_string(pruned.pruned[i].size()));
    }
    r.add_u64("embed.audited-steps", emb.audited_steps);
    r.add_u64("embed.forbidden-violations", emb.violations.size());
    if (params.paper_exact && !emb.violations.empty()) {
      const auto& v = emb.violations.front();
      r.add("embed.violation",
            "cube-vertex=" + std::to_string(v.cube_vertex) +
                " external=" + std::to_string(v.external) +
                " internal=" + std::to_string(v.internal) +
                " occupied=" + std::to_string(v.occupied) +
                " t-size=" + std::to_string(v.t_size));
      return finish(exit_breach, "invariant-breach");
    }
    r.add("embed.success", emb.success ? "1" : "0");
    if (!emb.success) {
      r.add("embed.note", emb.note);
      return finish(exit_honest_failure, "honest-failure");
    }

    // --- verify ----------------------------------------------------------
    CubeCheck check;
    {
      StageClock clock("verify");
      check = verify_red_cube(oracle, emb.embedding);
    }
    r.add("verify.red-cube", check.valid ? "valid" : "invalid");
    if (!check.valid) {
      r.add("verify.reason", check.reason);
      // an embedding we produced but cannot verify is a broken invariant
      return finish(exit_breach, "invariant-breach");
    }
    out.embedding = emb.embedding;
    return finish(exit_verified, "verified-success");
  } catch (const std::logic_error& e) {
    r.add("breach", e.what());
    return finish(exit_breach, "invariant-breach");
  } catch (const std::exception& e) {
    r.add("breach", std::string("unexpected error: ") + e.what());
    return finish(exit_breach, "invariant-breach");
  }
}

}  // namespace qramsey
