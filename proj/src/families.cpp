#include "qramsey/families.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace qramsey {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

int ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return std::bit_width(x - 1);
}

using u128 = unsigned __int128;
constexpr u128 U128_MAX = ~u128{0};

// a * b, saturating at U128_MAX.
u128 mul_sat(u128 a, u128 b) {
  if (a != 0 && b > U128_MAX / a) return U128_MAX;
  return a * b;
}

mpz_class population_bound(int s, int n) {
  mpz_class two_n = mpz_class{1} << n;
  if (s == 3) return 7000 * two_n;
  if (s == 4) return (mpz_class{1} << 46) * two_n;
  mpz_class c;
  mpz_ui_pow_ui(c.get_mpz_t(), s, 15u * s);  // c = s^(15 s)
  mpz_class cs;
  mpz_pow_ui(cs.get_mpz_t(), c.get_mpz_t(), s);
  return cs * two_n;
}

}  // namespace

RegimeParams RegimeParams::paper(int s, int n, std::uint64_t N) {
  require(s >= 3, "regime: s < 3");
  require(n >= 1 && n <= 26, "regime: n out of supported range");
  RegimeParams r;
  r.s = s;
  r.n = n;
  r.N = N;
  r.paper_exact = true;
  int lg = ceil_log2(std::uint64_t(n));
  if (s == 3) {
    r.multipliers = {4};
    r.codim_maxes = {lg + 3};
  } else if (s == 4) {
    r.multipliers = {std::uint64_t{1} << 18, 8};
    r.codim_maxes = {lg + 18, lg + 3};
  } else {
    if (!r.meets_population_bound())
      throw std::domain_error(
          "general-regime paper constants exceed any representable N; "
          "use engineering mode");
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), s, 15u * s);
    int logc = static_cast<int>(mpz_sizeinbase(c.get_mpz_t(), 2));
    for (int l = 1; l <= s - 2; ++l) {
      mpz_class ml;
      mpz_pow_ui(ml.get_mpz_t(), c.get_mpz_t(), s - l);
      require(ml.fits_ulong_p(), "regime: multiplier exceeds machine range");
      r.multipliers.push_back(ml.get_ui());
      r.codim_maxes.push_back(lg + s * logc);
    }
  }
  return r;
}

RegimeParams RegimeParams::engineering(int s, int n, std::uint64_t N,
                                       std::vector<std::uint64_t> multipliers,
                                       std::vector<int> codim_maxes) {
  require(s >= 3, "regime: s < 3");
  require(n >= 1 && n <= 26, "regime: n out of supported range");
  RegimeParams r;
  r.s = s;
  r.n = n;
  r.N = N;
  r.paper_exact = false;
  if (multipliers.empty()) {
    if (s == 3) {
      multipliers = {4};
    } else if (s == 4) {
      multipliers = {64, 8};
    } else {
      // Scaled-down c = 4 keeps the c^(s-l) shape of the general regime.
      for (int l = 1; l <= s - 2; ++l)
        multipliers.push_back(std::uint64_t{1} << (2 * (s - l)));
    }
  }
  require(static_cast<int>(multipliers.size()) == s - 2,
          "regime: need one multiplier per level 1..s-2");
  for (std::uint64_t m : multipliers) require(m >= 1, "regime: multiplier < 1");
  if (codim_maxes.empty()) {
    for (int l = 1; l <= s - 2; ++l)
      codim_maxes.push_back(ceil_log2(std::uint64_t(n)) +
                            ceil_log2(2 * multipliers[l - 1]));
  }
  require(static_cast<int>(codim_maxes.size()) == s - 2,
          "regime: need one codim_max per level 1..s-2");
  r.multipliers = std::move(multipliers);
  r.codim_maxes = std::move(codim_maxes);
  return r;
}

std::uint64_t RegimeParams::multiplier(int level) const {
  require(level >= 1 && level <= s - 2, "regime: level out of range");
  return multipliers[level - 1];
}

int RegimeParams::codim_max(int level) const {
  require(level >= 1 && level <= s - 2, "regime: level out of range");
  return codim_maxes[level - 1];
}

bool RegimeParams::meets_population_bound() const {
  mpz_class bound = population_bound(s, n);
  mpz_class pop = static_cast<unsigned long>(N);
  return pop >= bound;
}

std::string RegimeParams::population_bound_text() const {
  if (s == 3) return "7000*2^n";
  if (s == 4) return "2^46*2^n";
  return "s^(15*s^2)*2^n";
}

std::optional<std::uint64_t> RegimeParams::target_size(int level,
                                                       int parent_codim,
                                                       int stage) const {
  std::uint64_t m = multiplier(level);
  int e = n - parent_codim - stage;
  if (e >= 0) {
    if (e >= 64 || m > (~std::uint64_t{0} >> e)) return std::nullopt;
    return m << e;
  }
  int k = -e;
  if (k >= 64 || (m & ((std::uint64_t{1} << k) - 1)) != 0) return std::nullopt;
  std::uint64_t v = m >> k;
  if (v == 0) return std::nullopt;
  return v;
}

bool RegimeParams::edges_bad(std::uint64_t blue, std::uint64_t size_a,
                             std::uint64_t size_b, int la, int lb,
                             int delta) const {
  require(delta >= 1, "edges_bad: delta < 1");
  u128 rhs = u128{size_a} * size_b;
  u128 lhs;
  if (s == 3) {
    lhs = mul_sat(u128{blue}, u128{16} * delta * delta);
  } else {
    std::uint64_t base = s == 4 ? 8ull * delta : 4ull * s * s * delta;
    int e = s == 4 ? 6 - la - lb : 2 * s - la - lb;
    require(e >= 1, "edges_bad: threshold exponent not positive");
    u128 pow = 1;
    for (int i = 0; i < e; ++i) pow = mul_sat(pow, base);
    lhs = mul_sat(u128{blue}, pow);
  }
  return lhs >= rhs;
}

std::pair<std::uint64_t, std::uint64_t> RegimeParams::bad_mass_budget(
    std::uint64_t parent_size, int delta) const {
  std::uint64_t den = s <= 4 ? 8ull * delta : 4ull * s * s * delta;
  return {parent_size, den};
}

bool RegimeParams::prune_cut_hit(std::uint64_t deg, std::uint64_t size_a,
                                 int delta) const {
  require(delta >= 1, "prune_cut_hit: delta < 1");
  std::uint64_t den = s <= 4 ? 8ull * delta : 4ull * s * s * delta;
  return u128{deg} * den >= u128{size_a};
}

bool RegimeParams::maxdeg_ok(std::uint64_t deg, std::uint64_t size_t_,
                             int delta) const {
  require(delta >= 1, "maxdeg_ok: delta < 1");
  std::uint64_t den = s <= 4 ? 4ull * delta : 2ull * s * s * delta;
  return u128{deg} * den < u128{size_t_};
}

std::pair<std::uint64_t, std::uint64_t> RegimeParams::union_degree_bound(
    int level, int parent_codim, int i) const {
  std::uint64_t num = 2 * multiplier(level);
  std::uint64_t den = 1;
  int e = n - parent_codim - i;
  if (e >= 0)
    num <<= e;
  else
    den <<= -e;
  return {num, den};
}

std::pair<std::uint64_t, std::uint64_t> RegimeParams::internal_degree_bound(
    int codim) const {
  require(codim >= 0 && codim <= n, "internal_degree_bound: bad codim");
  std::uint64_t num = std::uint64_t{1} << (n - codim);
  std::uint64_t den = s == 3 ? 2ull * n : std::uint64_t(n);
  return {num, den};
}

int LeveledSet::codim() const {
  return std::accumulate(level_codims.begin(), level_codims.end(), 0);
}

int LeveledSet::level_codim(int r) const {
  if (r < 1 || r > level) throw std::out_of_range("level_codim: bad level");
  return level_codims[r - 1];
}

const char* to_string(LeveledSet::Freeness f) {
  switch (f) {
    case LeveledSet::Freeness::exact_verified: return "exact-verified";
    case LeveledSet::Freeness::by_construction: return "by-construction";
    case LeveledSet::Freeness::assumed: return "assumed";
  }
  return "?";
}

const char* to_string(FinderStrategy s) {
  switch (s) {
    case FinderStrategy::auto_chain: return "auto";
    case FinderStrategy::neighborhood: return "neighborhood";
    case FinderStrategy::greedy_red: return "greedy-red";
    case FinderStrategy::walk: return "walk";
    case FinderStrategy::exact: return "exact";
  }
  return "?";
}

int FamilyForest::add_set(LeveledSet s_) {
  s_.id = static_cast<int>(sets.size());
  if (static_cast<int>(level_ids.size()) <= s_.level)
    level_ids.resize(s_.level + 1);
  level_ids[s_.level].push_back(s_.id);
  if (s_.parent >= 0) kids.at(s_.parent).push_back(s_.id);
  kids.emplace_back();
  sets.push_back(std::move(s_));
  return sets.back().id;
}

std::string FamilyForest::validate() const {
  if (level_ids.empty() || level_ids[0].size() != 1)
    return "forest must have exactly one root";
  if (sets[level_ids[0][0]].parent != -1) return "root has a parent";
  for (const LeveledSet& st : sets) {
    if (static_cast<int>(st.level_codims.size()) != st.level)
      return "level_codims length differs from level";
    for (int d : st.level_codims)
      if (d < 0) return "negative relative codimension";
    if (!std::is_sorted(st.vertices.begin(), st.vertices.end()))
      return "unsorted vertex list";
    if (st.parent >= 0) {
      const LeveledSet& p = sets.at(st.parent);
      if (p.level + 1 != st.level) return "parent at wrong level";
      if (!std::equal(st.level_codims.begin(), st.level_codims.end() - 1,
                      p.level_codims.begin(), p.level_codims.end()))
        return "child does not extend parent codimensions";
      if (!std::includes(p.vertices.begin(), p.vertices.end(),
                         st.vertices.begin(), st.vertices.end()))
        return "child vertices outside parent";
      if (st.exceptional) {
        if (st.level_codims.back() != 0)
          return "exceptional set with nonzero relative codimension";
        if (2 * st.size() < p.size())
          return "exceptional set smaller than half its parent";
      }
      if (p.exceptional && !(st.exceptional && st.vertices == p.vertices))
        return "exceptional parent must pass through unchanged";
    }
  }
  for (int id = 0; id < static_cast<int>(sets.size()); ++id) {
    std::vector<Vertex> all;
    for (int k : kids[id]) {
      const auto& v = sets[k].vertices;
      all.insert(all.end(), v.begin(), v.end());
    }
    if (sets[id].exceptional) continue;  // single pass-through child
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      return "sibling sets overlap";
  }
  return "";
}

namespace {

// (a) Harvest the first m blue neighbors of the first sufficiently rich
// pivot.  In a blue-K_{t+1}-free pool any blue neighborhood is
// blue-K_t-free, which is the construction certificate.
std::optional<FoundSet> strat_neighborhood(const Coloring& c,
                                           const std::vector<Vertex>& pool,
                                           int t, std::uint64_t m,
                                           const FinderOptions& opt,
                                           LeveledSet::Freeness pool_freeness,
                                           FinderState* state) {
  if (state && state->neighborhood_disabled) return std::nullopt;
  int local_fails = 0;
  auto fails = [&]() -> int& {
    return state ? state->failed_pivots : local_fails;
  };
  for (Vertex pivot : pool) {
    if (fails() >= opt.pivot_fail_cap) {
      if (state) state->neighborhood_disabled = true;
      return std::nullopt;
    }
    std::vector<Vertex> got;
    for (Vertex w : pool) {
      if (w == pivot) continue;
      if (c.blue(pivot, w)) {
        got.push_back(w);
        if (got.size() == m) break;
      }
    }
    if (got.size() < m) {
      ++fails();
      continue;
    }
    FoundSet out;
    out.strategy = FinderStrategy::neighborhood;
    if (t == 2 || got.size() <= opt.clique_cap) {
      if (!verify_blue_clique_free(c, got, t, opt.clique_cap))
        return std::nullopt;  // pool lacks the premise; let later strategies run
      out.freeness = LeveledSet::Freeness::exact_verified;
    } else {
      // Sampled refutation check, then the construction certificate.
      if (find_blue_clique(c, got, t, opt.clique_cap).clique.has_value())
        return std::nullopt;
      out.freeness = pool_freeness == LeveledSet::Freeness::assumed
                         ? LeveledSet::Freeness::assumed
                         : LeveledSet::Freeness::by_construction;
    }
    out.vertices = std::move(got);
    return out;
  }
  return std::nullopt;
}

// (b) Ascending-scan red clique growth, t = 2 only.
std::optional<FoundSet> strat_greedy_red(const Coloring& c,
                                         const std::vector<Vertex>& pool,
                                         std::uint64_t m) {
  std::vector<Vertex> members;
  for (Vertex w : pool) {
    bool ok = true;
    for (Vertex u : members)
      if (c.blue(u, w)) {
        ok = false;
        break;
      }
    if (ok) {
      members.push_back(w);
      if (members.size() == m) break;
    }
  }
  if (members.size() < m) return std::nullopt;
  return FoundSet{std::move(members), FinderStrategy::greedy_red,
                  LeveledSet::Freeness::exact_verified};
}

// Binomial sufficiency bound C(a+b-2, a-1) for a red K_a or blue K_b,
// saturating well below overflow.
std::uint64_t ramsey_need(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t top = a + b - 2, k = std::min(a - 1, b - 1);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > (std::uint64_t{1} << 62) / (top - k + i)) return std::uint64_t{1} << 62;
    r = r * (top - k + i) / i;
  }
  return r;
}

// (c) Pivot-descent walk: guaranteed to reach a red K_m or a blue K_t when
// the pool exceeds the binomial bound, useful heuristically below it.
std::optional<FoundSet> strat_walk(const Coloring& c,
                                   const std::vector<Vertex>& pool, int t,
                                   std::uint64_t m) {
  std::vector<Vertex> cand = pool;
  std::vector<Vertex> red;
  std::uint64_t need_red = m, need_blue = t;
  while (!cand.empty() && need_red > 0 && need_blue > 0) {
    Vertex pivot = cand.front();
    std::vector<Vertex> red_n, blue_n;
    for (std::size_t i = 1; i < cand.size(); ++i)
      (c.blue(pivot, cand[i]) ? blue_n : red_n).push_back(cand[i]);
    bool go_red;
    if (red_n.size() >= ramsey_need(need_red - 1, need_blue))
      go_red = true;
    else if (blue_n.size() >= ramsey_need(need_red, need_blue - 1))
      go_red = false;
    else
      go_red = red_n.size() >= blue_n.size();  // heuristic continuation
    if (go_red) {
      red.push_back(pivot);
      if (--need_red == 0) break;
      cand = std::move(red_n);
    } else {
      if (--need_blue == 0) return std::nullopt;  // pool holds a blue K_t
      cand = std::move(blue_n);
    }
  }
  if (red.size() < m) return std::nullopt;
  return FoundSet{std::move(red), FinderStrategy::walk,
                  LeveledSet::Freeness::exact_verified};
}

// (d) Exact include/exclude search for small pools; finds the
// lexicographically smallest blue-K_t-free m-subset if one exists.
struct ExactCtx {
  const Coloring* c;
  const std::vector<Vertex>* pool;
  int t;
  std::uint64_t m;
  std::vector<Vertex> members;

  bool creates_clique(Vertex w) const {
    // Adding w closes a blue K_t iff a blue K_{t-1} sits inside
    // members ∩ blueN(w).
    std::vector<Vertex> inter;
    for (Vertex u : members)
      if (c->blue(u, w)) inter.push_back(u);
    if (inter.size() + 1 < std::uint64_t(t)) return false;
    if (t == 2) return true;  // any blue neighbor closes a blue K_2
    return find_blue_clique(*c, inter, t - 1, inter.size()).clique.has_value();
  }

  bool search(std::size_t idx) {
    if (members.size() == m) return true;
    if (pool->size() - idx < m - members.size()) return false;
    Vertex w = (*pool)[idx];
    if (!creates_clique(w)) {
      members.push_back(w);
      if (search(idx + 1)) return true;
      members.pop_back();
    }
    return search(idx + 1);
  }
};

std::optional<FoundSet> strat_exact(const Coloring& c,
                                    const std::vector<Vertex>& pool, int t,
                                    std::uint64_t m, const FinderOptions& opt) {
  if (pool.size() > opt.exact_pool_cap) return std::nullopt;
  ExactCtx ctx{&c, &pool, t, m, {}};
  if (!ctx.search(0)) return std::nullopt;
  return FoundSet{std::move(ctx.members), FinderStrategy::exact,
                  LeveledSet::Freeness::exact_verified};
}

}  // namespace

std::optional<FoundSet> find_free_subset(const Coloring& c,
                                         const std::vector<Vertex>& pool, int t,
                                         std::uint64_t m,
                                         const FinderOptions& opt,
                                         FinderStrategy strategy,
                                         LeveledSet::Freeness pool_freeness,
                                         FinderState* state) {
  require(t >= 2, "find_free_subset: t < 2");
  require(m >= 1, "find_free_subset: m < 1");
  if (pool.size() < m) return std::nullopt;
  switch (strategy) {
    case FinderStrategy::neighborhood:
      return strat_neighborhood(c, pool, t, m, opt, pool_freeness, state);
    case FinderStrategy::greedy_red:
      require(t == 2, "greedy_red applies to t == 2 only");
      return strat_greedy_red(c, pool, m);
    case FinderStrategy::walk:
      return strat_walk(c, pool, t, m);
    case FinderStrategy::exact:
      return strat_exact(c, pool, t, m, opt);
    case FinderStrategy::auto_chain: {
      if (auto r = strat_neighborhood(c, pool, t, m, opt, pool_freeness, state))
        return r;
      if (t == 2) {
        if (auto r = strat_greedy_red(c, pool, m)) return r;
      } else {
        if (auto r = strat_walk(c, pool, t, m)) return r;
      }
      if (auto r = strat_exact(c, pool, t, m, opt)) return r;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<int> build_family(const Coloring& c, FamilyForest& forest,
                              int parent_id, int level,
                              const RegimeParams& params,
                              const FinderOptions& opt, BuildStats* stats) {
  const LeveledSet parent = forest.set(parent_id);  // copy: forest grows below
  require(level == parent.level + 1, "build_family: level must follow parent");
  require(level >= 1 && level <= params.s - 2, "build_family: level out of range");
  std::vector<int> out;
  auto log_event = [&](const LeveledSet& child, FinderStrategy strat) {
    if (stats)
      stats->events.push_back({level, parent_id,
                               child.level_codims.back(), child.id,
                               child.size(), strat, child.exceptional});
  };
  if (parent.exceptional) {
    LeveledSet child = parent;
    child.id = -1;
    child.parent = parent_id;
    child.level = level;
    child.level_codims.push_back(0);
    int id = forest.add_set(std::move(child));
    log_event(forest.set(id), FinderStrategy::auto_chain);
    return {id};
  }
  int t = params.s - level;
  std::vector<Vertex> pool = parent.vertices;
  for (int stage = 0; stage <= params.codim_max(level); ++stage) {
    auto target = params.target_size(level, parent.codim(), stage);
    if (!target) continue;
    FinderState fstate;
    while (pool.size() >= *target) {
      std::optional<FoundSet> found;
      try {
        found = find_free_subset(c, pool, t, *target, opt,
                                 FinderStrategy::auto_chain, parent.freeness,
                                 &fstate);
      } catch (const std::exception& e) {
        throw std::runtime_error("finder failure at parent " +
                                 std::to_string(parent_id) + " stage " +
                                 std::to_string(stage) + ": " + e.what());
      }
      if (!found) break;
      FinderStrategy strat = found->strategy;
      LeveledSet child;
      child.level = level;
      child.parent = parent_id;
      child.level_codims = parent.level_codims;
      child.level_codims.push_back(stage);
      child.exceptional = false;
      child.freeness = found->freeness;
      child.vertices = std::move(found->vertices);
      std::vector<Vertex> rest;
      rest.reserve(pool.size() - child.vertices.size());
      std::set_difference(pool.begin(), pool.end(), child.vertices.begin(),
                          child.vertices.end(), std::back_inserter(rest));
      pool = std::move(rest);
      int id = forest.add_set(std::move(child));
      out.push_back(id);
      log_event(forest.set(id), strat);
    }
  }
  std::uint64_t extracted = parent.size() - pool.size();
  if (2 * extracted < parent.size()) {
    LeveledSet child;
    child.level = level;
    child.parent = parent_id;
    child.level_codims = parent.level_codims;
    child.level_codims.push_back(0);
    child.exceptional = true;
    // For an exceptional set the certificate refers to the parent's clique
    // order s-level+1, not s-level.
    child.freeness = parent.freeness;
    child.vertices = std::move(pool);
    int id = forest.add_set(std::move(child));
    out.push_back(id);
    log_event(forest.set(id), FinderStrategy::auto_chain);
  }
  return out;
}

FamilyForest build_forest(const Coloring& c, const RegimeParams& params,
                          const FinderOptions& opt,
                          LeveledSet::Freeness root_freeness,
                          BuildStats* stats) {
  FamilyForest forest;
  forest.s = params.s;
  forest.n = params.n;
  forest.level_ids.resize(params.s - 1);
  LeveledSet root;
  root.level = 0;
  root.parent = -1;
  root.exceptional = false;
  root.freeness = root_freeness;
  root.vertices.resize(params.N);
  std::iota(root.vertices.begin(), root.vertices.end(), Vertex{0});
  forest.add_set(std::move(root));
  for (int level = 1; level <= params.s - 2; ++level) {
    // level_ids[level-1] grows during iteration only for deeper levels.
    std::vector<int> parents = forest.level_ids[level - 1];
    for (int pid : parents)
      build_family(c, forest, pid, level, params, opt, stats);
  }
  return forest;
}

DegreeReport check_degree_bounds(const Coloring& c, const FamilyForest& forest,
                                 const RegimeParams& params, int thread_count) {
  DegreeReport report;
  auto max_degree_into = [&](const std::vector<Vertex>& from,
                             const std::vector<Vertex>& X) -> std::uint64_t {
    if (X.empty() || from.empty()) return 0;
    auto scan = [&](std::size_t lo, std::size_t hi) {
      std::uint64_t best = 0;
      for (std::size_t i = lo; i < hi; ++i)
        best = std::max(best, blue_degree(c, from[i], X));
      return best;
    };
    if (thread_count <= 1 || from.size() * X.size() < 1u << 20)
      return scan(0, from.size());
    std::size_t chunks = std::min<std::size_t>(thread_count, from.size());
    std::vector<std::uint64_t> partial(chunks, 0);
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < chunks; ++k) {
      std::size_t lo = from.size() * k / chunks;
      std::size_t hi = from.size() * (k + 1) / chunks;
      pool.emplace_back([&, k, lo, hi] { partial[k] = scan(lo, hi); });
    }
    for (auto& t : pool) t.join();
    return *std::max_element(partial.begin(), partial.end());
  };

  for (int level = 1; level <= params.s - 2; ++level) {
    for (int pid : forest.level_ids[level - 1]) {
      const LeveledSet& parent = forest.set(pid);
      if (parent.exceptional) continue;
      for (int i = 1; i <= params.codim_max(level); ++i) {
        std::vector<Vertex> X;
        for (int kid : forest.children(pid)) {
          const LeveledSet& child = forest.set(kid);
          if (!child.exceptional && child.level_codim(level) >= i)
            X.insert(X.end(), child.vertices.begin(), child.vertices.end());
        }
        std::sort(X.begin(), X.end());
        UnionDegreeEntry e;
        e.level = level;
        e.parent = pid;
        e.i = i;
        e.union_size = X.size();
        auto [num, den] = params.union_degree_bound(level, parent.codim(), i);
        e.bound_num = num;
        e.bound_den = den;
        e.measured = max_degree_into(parent.vertices, X);
        e.pass = u128{e.measured} * den <= u128{num};
        report.all_pass = report.all_pass && e.pass;
        report.union_checks.push_back(e);
      }
    }
  }
  for (int id : forest.level_ids[params.s - 2]) {
    const LeveledSet& st = forest.set(id);
    InternalDegreeEntry e;
    e.set_id = id;
    auto [num, den] = params.internal_degree_bound(st.codim());
    e.bound_num = num;
    e.bound_den = den;
    e.measured = max_degree_into(st.vertices, st.vertices);
    e.pass = u128{e.measured} * den <= u128{num};
    report.all_pass = report.all_pass && e.pass;
    report.internal_checks.push_back(e);
  }
  return report;
}

}  // namespace qramsey
