// Command-line driver: generation, stage-by-stage runs, the full pipeline,
// and the desk-scale tools (brute-force Ramsey, series bounds, separators).

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qramsey/embed.hpp"
#include "qramsey/io.hpp"
#include "qramsey/pipeline.hpp"
#include "qramsey/prune.hpp"
#include "qramsey/ramsey.hpp"
#include "qramsey/separator.hpp"
#include "qramsey/tiling.hpp"

using namespace qramsey;

namespace {

struct OracleFlags {
  std::string kind = "all-red";
  std::uint64_t n_vertices = 0;
  double p = 0.0;
  int parts = 2;
  std::uint64_t seed = 0;
  std::uint64_t m = 0;
  std::string file;

  void attach(CLI::App* cmd, bool with_n = true) {
    cmd->add_option("--kind", kind,
                    "oracle kind: all-red, blue-random, blue-multipartite, "
                    "blue-matching, lower-bound, file-backed");
    if (with_n) cmd->add_option("--N", n_vertices, "vertex count");
    cmd->add_option("--p", p, "blue probability");
    cmd->add_option("--parts", parts, "multipartite part count");
    cmd->add_option("--seed", seed, "oracle seed");
    cmd->add_option("--m", m, "lower-bound block size");
    cmd->add_option("--file", file, "RQCB matrix path (file-backed)");
  }

  KvDoc descriptor(bool with_n = true) const {
    KvDoc doc;
    doc.add("kind", kind);
    if (with_n) doc.add_u64("N", n_vertices);
    if (kind == "blue-random" || kind == "blue-multipartite") {
      doc.add("p", format_double(p));
      doc.add_u64("seed", seed);
    }
    if (kind == "blue-multipartite")
      doc.add_u64("parts", static_cast<std::uint64_t>(parts));
    if (kind == "lower-bound") {
      doc.add_u64("m", m);
      doc.add_u64("s", m == 0 ? 0 : n_vertices / m + 1);
    }
    if (kind == "file-backed" || kind == "file") doc.add("file", file);
    return doc;
  }
};

int env_threads() {
  const char* t = std::getenv("QRAMSEY_THREADS");
  if (!t) return 1;
  int v = std::atoi(t);
  return v >= 1 ? v : 1;
}

struct StageFlags {
  int s = 3;
  int n = 6;
  std::uint64_t N = 0;
  std::string mode = "paper-exact";
  int threads = env_threads();
  OracleFlags oracle;

  void attach(CLI::App* cmd) {
    cmd->add_option("--s", s, "clique order s");
    cmd->add_option("--n", n, "cube dimension n");
    cmd->add_option("--N", N, "host vertex count (0: population bound)");
    cmd->add_option("--mode", mode, "paper-exact or engineering");
    cmd->add_option("--threads", threads, "worker thread count");
    oracle.attach(cmd, false);
  }

  PipelineConfig config() const {
    KvDoc doc;
    doc.add("mode", mode);
    doc.add_u64("s", static_cast<std::uint64_t>(s));
    doc.add_u64("n", static_cast<std::uint64_t>(n));
    doc.add_u64("N", N);
    for (const auto& [k, v] : oracle.descriptor(false).entries)
      doc.add(k, v);
    PipelineConfig cfg = config_from_kv(doc);
    cfg.threads = threads;
    return cfg;
  }
};

// Shared prefix for the stage subcommands; throws on refusals.
struct StageContext {
  PipelineConfig cfg;
  RegimeParams params;
  Coloring oracle;
  FamilyForest forest;

  explicit StageContext(const StageFlags& flags, bool need_forest) {
    cfg = flags.config();
    if (cfg.N == 0) throw std::invalid_argument("--N is required here");
    params = cfg.paper_exact
                 ? RegimeParams::paper(cfg.s, cfg.n, cfg.N)
                 : RegimeParams::engineering(cfg.s, cfg.n, cfg.N,
                                             cfg.multipliers, cfg.codim_maxes);
    if (cfg.paper_exact && !params.meets_population_bound())
      throw std::invalid_argument("paper-exact mode requires N >= " +
                                  params.population_bound_text());
    KvDoc doc = cfg.oracle;
    doc.add_u64("N", cfg.N);
    oracle = oracle_from_kv(doc);
    if (need_forest)
      forest = build_forest(oracle, params, cfg.finder,
                            LeveledSet::Freeness::assumed, nullptr);
  }
};

int cmd_gen(const OracleFlags& oracle, const std::string& out_matrix,
            const std::string& out_descriptor) {
  Coloring c = oracle_from_kv(oracle.descriptor());
  if (!out_descriptor.empty())
    write_file(out_descriptor, write_kv(describe_oracle(c)));
  if (!out_matrix.empty()) write_matrix(out_matrix, c);
  if (out_descriptor.empty() && out_matrix.empty())
    std::cout << write_kv(describe_oracle(c));
  return 0;
}

int cmd_preprocess(const StageFlags& flags, const std::string& out) {
  StageContext ctx(flags, true);
  std::string text = write_forest(ctx.forest);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  std::cerr << "sets: " << ctx.forest.sets.size() << "\n";
  return 0;
}

int cmd_tile(const StageFlags& flags, const std::string& out) {
  StageContext ctx(flags, true);
  TilingRun run(ctx.oracle, ctx.forest, ctx.params, ctx.cfg.threads);
  while (true) {
    StepOutcome o = run.step();
    if (o.kind == StepOutcome::Kind::complete) break;
    if (o.kind == StepOutcome::Kind::failed) {
      std::cout << "failed step=" << o.step_index << " pivot=" << o.pivot
                << " level=" << o.level << " note=" << o.note << "\n";
      return exit_honest_failure;
    }
    const LeveledCube& c = run.tiling().at(o.inserted);
    std::cout << "inserted step=" << o.step_index << " pivot=" << o.pivot
              << " cube=" << format_cube(c.cube) << " level=" << o.level
              << " set=" << o.set_id << "\n";
  }
  if (!out.empty()) write_file(out, write_snapshot(snapshot_of(run)));
  AuditResult audit = run.audit();
  std::cout << "audit " << (audit.pass ? "pass" : "fail") << "\n";
  return audit.pass ? 0 : exit_breach;
}

int cmd_prune(const StageFlags& flags) {
  StageContext ctx(flags, true);
  TilingRun run(ctx.oracle, ctx.forest, ctx.params, ctx.cfg.threads);
  StepOutcome last = run.run_to_completion();
  if (last.kind == StepOutcome::Kind::failed) {
    std::cout << "tiling failed: " << last.note << "\n";
    return exit_honest_failure;
  }
  PruneResult res = prune(run);
  std::cout << "removed " << res.removed_total << "\n";
  std::cout << "half-kept " << (res.ok ? "1" : "0") << "\n";
  std::cout << "certified " << (res.certified ? "1" : "0") << "\n";
  if (!res.ok) {
    std::cout << "aborted " << res.note << "\n";
    return ctx.params.paper_exact ? exit_breach : exit_honest_failure;
  }
  return 0;
}

int cmd_embed(const StageFlags& flags, bool baseline, const std::string& out) {
  if (baseline) {
    StageFlags f = flags;
    if (f.N == 0) throw std::invalid_argument("--N is required here");
    KvDoc doc = f.oracle.descriptor(false);
    doc.add_u64("N", f.N);
    Coloring c = oracle_from_kv(doc);
    BaselineResult res = baseline_embed(c, f.n);
    if (res.refused) {
      std::cout << "refused " << res.refusal << "\n";
      return exit_config;
    }
    std::cout << "d-max " << res.d_max << "\n";
    if (!res.success) {
      std::cout << "failed " << res.note << "\n";
      return exit_honest_failure;
    }
    CubeCheck check = verify_red_cube(c, res.embedding);
    if (!check.valid) {
      std::cout << "verify invalid: " << check.reason << "\n";
      return exit_breach;
    }
    if (!out.empty()) write_file(out, write_embedding(res.embedding));
    std::cout << "verified-success\n";
    return 0;
  }
  StageContext ctx(flags, true);
  TilingRun run(ctx.oracle, ctx.forest, ctx.params, ctx.cfg.threads);
  StepOutcome last = run.run_to_completion();
  if (last.kind == StepOutcome::Kind::failed) {
    std::cout << "tiling failed: " << last.note << "\n";
    return exit_honest_failure;
  }
  PruneResult pruned = prune(run);
  if (!pruned.ok) {
    std::cout << "prune aborted: " << pruned.note << "\n";
    return ctx.params.paper_exact ? exit_breach : exit_honest_failure;
  }
  EmbedResult emb = greedy_embed(run, pruned, ctx.params.paper_exact);
  if (!emb.success) {
    std::cout << "failed " << emb.note << "\n";
    return exit_honest_failure;
  }
  CubeCheck check = verify_red_cube(ctx.oracle, emb.embedding);
  if (!check.valid) {
    std::cout << "verify invalid: " << check.reason << "\n";
    return exit_breach;
  }
  if (!out.empty()) write_file(out, write_embedding(emb.embedding));
  std::cout << "verified-success\n";
  return 0;
}

int cmd_verify(const OracleFlags& oracle, const std::string& embedding_path) {
  Coloring c = oracle_from_kv(oracle.descriptor());
  Embedding e = parse_embedding(read_file(embedding_path));
  CubeCheck check = verify_red_cube(c, e);
  std::cout << "red-cube " << (check.valid ? "valid" : "invalid") << "\n";
  if (!check.valid) {
    std::cout << "reason " << check.reason << "\n";
    return exit_honest_failure;
  }
  return 0;
}

int cmd_pipeline(const std::string& config_path, StageFlags& flags,
                 const std::string& out, const std::string& out_embedding) {
  PipelineConfig cfg;
  if (!config_path.empty()) {
    cfg = config_from_kv(parse_kv(read_file(config_path)));
    auto slash = config_path.rfind('/');
    if (slash != std::string::npos) cfg.base_dir = config_path.substr(0, slash);
    cfg.threads = flags.threads;
  } else {
    cfg = flags.config();
  }
  RunReport report = run_pipeline(cfg);
  if (out.empty())
    std::cout << report.text;
  else
    write_file(out, report.text);
  if (!out_embedding.empty() && report.embedding)
    write_file(out_embedding, write_embedding(*report.embedding));
  return report.exit_code;
}

SmallGraph pattern_from(const std::string& name) {
  if (name == "q1") return SmallGraph::cube(1);
  if (name == "q2") return SmallGraph::cube(2);
  if (name == "q3") return SmallGraph::cube(3);
  if (name.size() == 2 && name[0] == 'k' && name[1] >= '2' && name[1] <= '8')
    return SmallGraph::clique(name[1] - '0');
  throw std::invalid_argument("pattern must be q1, q2, q3 or k2..k8");
}

int cmd_ramsey(const std::string& pattern_name, int s, int n_vertices,
               int max_n) {
  SmallGraph pattern = pattern_from(pattern_name);
  if (n_vertices > 0) {
    ArrowResult res = brute_force_arrow(pattern, s, n_vertices);
    std::cout << "pattern " << pattern_name << "\n";
    std::cout << "s " << s << "\n";
    std::cout << "N " << n_vertices << "\n";
    std::cout << "colorings-checked " << res.colorings_checked << "\n";
    std::cout << "arrows " << (res.arrows ? "1" : "0") << "\n";
    if (!res.arrows) {
      std::string blue;
      for (auto [u, v] : *res.witness_blue)
        blue += (blue.empty() ? "" : ",") + std::to_string(u) + "-" +
                std::to_string(v);
      std::cout << "witness-blue " << blue << "\n";
    }
    return 0;
  }
  std::optional<int> r = brute_force_ramsey(pattern, s, max_n);
  std::cout << "pattern " << pattern_name << "\n";
  std::cout << "s " << s << "\n";
  if (r)
    std::cout << "ramsey-number " << *r << "\n";
  else
    std::cout << "ramsey-number >" << max_n << "\n";
  return 0;
}

int cmd_bounds(int s, int truncation) {
  SeriesBounds b = series_bounds(s, truncation);
  std::cout << "s " << b.s << "\n";
  std::cout << "truncation " << b.truncation << "\n";
  std::cout << "stirling-route " << b.stirling_route.get_str() << "\n";
  std::cout << "double-sum-route " << b.double_sum_route.get_str() << "\n";
  std::cout << "partial-sum-route " << b.partial_sum_route.get_str() << "\n";
  std::cout << "tail-certified " << (b.tail_certified ? "1" : "0") << "\n";
  std::cout << "routes-agree " << (b.routes_agree ? "1" : "0") << "\n";
  std::cout << "power-bound " << b.power_bound.get_str() << "\n";
  std::cout << "within-power-bound " << (b.within_power_bound ? "1" : "0")
            << "\n";
  return b.routes_agree && b.tail_certified && b.within_power_bound
             ? 0
             : exit_breach;
}

int cmd_separator(const std::string& graph_path, int grid_k, int rows,
                  int cols, int path_n, const std::string& oracle_name,
                  int depth, const std::string& cut_text, std::uint64_t t,
                  const std::string& eta_text) {
  SimpleGraph g;
  int grid_rows = 0, grid_cols = 0;
  if (!graph_path.empty()) {
    g = parse_graph(read_file(graph_path));
  } else if (grid_k > 0) {
    g = SimpleGraph::grid(grid_k, grid_k);
    grid_rows = grid_cols = grid_k;
  } else if (rows > 0 && cols > 0) {
    g = SimpleGraph::grid(rows, cols);
    grid_rows = rows;
    grid_cols = cols;
  } else if (path_n > 0) {
    g = SimpleGraph::path(path_n);
  } else {
    throw std::invalid_argument("need --graph, --grid, --rows/--cols or --path");
  }

  DegeneracyResult deg = degeneracy(g);
  std::cout << "vertices " << g.n << "\n";
  std::cout << "edges " << g.edge_count() << "\n";
  std::cout << "degeneracy " << deg.degeneracy << "\n";

  if (!cut_text.empty()) {
    std::vector<int> cut;
    for (Vertex v : parse_vertices(cut_text)) cut.push_back(static_cast<int>(v));
    SeparatorCheck chk = validate_separator(g, cut, t, parse_fraction(eta_text));
    std::cout << "separator-valid " << (chk.ok ? "1" : "0") << "\n";
    std::cout << "cut-size " << chk.cut_size << "\n";
    std::cout << "largest-component " << chk.largest_component << "\n";
    if (!chk.ok) std::cout << "reason " << chk.note << "\n";
    return chk.ok ? 0 : exit_honest_failure;
  }
  if (depth <= 0) return 0;

  SeparatorOracle oracle;
  if (oracle_name == "centroid") {
    oracle = tree_centroid_oracle();
  } else if (oracle_name == "grid") {
    if (grid_rows == 0)
      throw std::invalid_argument("grid oracle needs --grid or --rows/--cols");
    oracle = grid_cut_oracle(grid_rows, grid_cols);
  } else if (oracle_name == "bfs") {
    oracle = bfs_layer_oracle();
  } else {
    throw std::invalid_argument("oracle must be centroid, grid or bfs");
  }
  Decomposition d = recursive_decompose(g, oracle, depth);
  if (!d.ok) {
    std::cout << "decompose-failed " << d.note << "\n";
    return exit_honest_failure;
  }
  std::cout << "depth " << d.depth << "\n";
  std::cout << "separator-size " << d.separator.size() << "\n";
  std::cout << "t0 " << d.t0 << "\n";
  for (std::size_t j = 0; j < d.parts.size(); ++j)
    std::cout << "part " << j << " size " << d.parts[j].size() << "\n";
  DecompositionCheck chk = certify_decomposition(g, d);
  std::cout << "certified " << (chk.ok ? "1" : "0") << "\n";
  if (!chk.ok) std::cout << "reason " << chk.note << "\n";
  return chk.ok ? 0 : exit_breach;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercube vs clique Ramsey pipeline"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit an oracle descriptor or matrix");
  OracleFlags gen_oracle;
  gen_oracle.attach(gen);
  std::string gen_out, gen_descriptor;
  gen->add_option("--out", gen_out, "RQCB matrix output path");
  gen->add_option("--out-descriptor", gen_descriptor, "descriptor output path");

  // stage commands
  StageFlags pre_flags, tile_flags, prune_flags, embed_flags, pipe_flags;
  auto* pre = app.add_subcommand("preprocess", "build the leveled families");
  pre_flags.attach(pre);
  std::string pre_out;
  pre->add_option("--out", pre_out, "forest output path");

  auto* tile = app.add_subcommand("tile", "tile the cube, streaming steps");
  tile_flags.attach(tile);
  std::string tile_out;
  tile->add_option("--out", tile_out, "tiling checkpoint output path");

  auto* prune_cmd = app.add_subcommand("prune", "prune by blue degree");
  prune_flags.attach(prune_cmd);

  auto* embed = app.add_subcommand("embed", "embed a red cube");
  embed_flags.attach(embed);
  bool baseline = false;
  std::string embed_out;
  embed->add_flag("--baseline", baseline,
                  "dense-host greedy baseline (needs N >= d_max*n + 2^n)");
  embed->add_option("--out", embed_out, "embedding output path");

  auto* verify = app.add_subcommand("verify", "check an embedding file");
  OracleFlags verify_oracle;
  verify_oracle.attach(verify);
  std::string verify_embedding;
  verify->add_option("--embedding", verify_embedding, "embedding path")
      ->required();

  auto* pipe = app.add_subcommand("pipeline", "run all stages");
  pipe_flags.attach(pipe);
  std::string pipe_config, pipe_out, pipe_embedding;
  pipe->add_option("--config", pipe_config, "config document path");
  pipe->add_option("--out", pipe_out, "report output path");
  pipe->add_option("--out-embedding", pipe_embedding, "embedding output path");

  // desk-scale tools
  auto* ramsey = app.add_subcommand("ramsey-brute", "exhaustive small hosts");
  std::string ramsey_pattern = "q1";
  int ramsey_s = 3, ramsey_n = 0, ramsey_max = 8;
  ramsey->add_option("--pattern", ramsey_pattern, "q1, q2, q3 or k2..k8");
  ramsey->add_option("--s", ramsey_s, "blue clique order");
  ramsey->add_option("--N", ramsey_n, "single host size (0: scan)");
  ramsey->add_option("--max", ramsey_max, "scan limit");

  auto* bounds = app.add_subcommand("bounds", "weight-sum series bounds");
  int bounds_s = 3, bounds_trunc = 512;
  bounds->add_option("--s", bounds_s, "exponent s");
  bounds->add_option("--truncation", bounds_trunc, "partial-sum cutoff");

  auto* sep = app.add_subcommand("separator", "degeneracy and decomposition");
  std::string sep_graph, sep_oracle = "bfs", sep_cut, sep_eta = "2/3";
  int sep_grid = 0, sep_rows = 0, sep_cols = 0, sep_path = 0, sep_depth = 0;
  std::uint64_t sep_t = 0;
  sep->add_option("--graph", sep_graph, "adjacency-list file");
  sep->add_option("--grid", sep_grid, "k for a k x k grid");
  sep->add_option("--rows", sep_rows, "grid rows");
  sep->add_option("--cols", sep_cols, "grid cols");
  sep->add_option("--path", sep_path, "path length");
  sep->add_option("--oracle", sep_oracle, "centroid, grid or bfs");
  sep->add_option("--depth", sep_depth, "decomposition rounds");
  sep->add_option("--validate-cut", sep_cut, "cut to validate, e.g. 1,4-6");
  sep->add_option("--t", sep_t, "cut size bound for validation");
  sep->add_option("--eta", sep_eta, "component fraction, e.g. 1/2 or 0.4");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(gen_oracle, gen_out, gen_descriptor);
    if (*pre) return cmd_preprocess(pre_flags, pre_out);
    if (*tile) return cmd_tile(tile_flags, tile_out);
    if (*prune_cmd) return cmd_prune(prune_flags);
    if (*embed) return cmd_embed(embed_flags, baseline, embed_out);
    if (*verify) return cmd_verify(verify_oracle, verify_embedding);
    if (*pipe) return cmd_pipeline(pipe_config, pipe_flags, pipe_out,
                                   pipe_embedding);
    if (*ramsey) return cmd_ramsey(ramsey_pattern, ramsey_s, ramsey_n,
                                   ramsey_max);
    if (*bounds) return cmd_bounds(bounds_s, bounds_trunc);
    if (*sep)
      return cmd_separator(sep_graph, sep_grid, sep_rows, sep_cols, sep_path,
                           sep_oracle, sep_depth, sep_cut, sep_t, sep_eta);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return exit_breach;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config;
  }
  return exit_config;
}
