#include "qramsey/tiling.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qramsey {

TilingRun::TilingRun(const Coloring& oracle, const FamilyForest& forest,
                     const RegimeParams& params, int thread_count)
    : oracle_(&oracle),
      forest_(&forest),
      params_(params),
      thread_count_(thread_count),
      tiling_(params.s, params.n) {
  if (forest.s != params.s || forest.n != params.n)
    throw std::invalid_argument("tiling: forest does not match regime");
  if (oracle.N != params.N)
    throw std::invalid_argument("tiling: oracle does not match regime");
  assign_.set_of.resize(params.s - 1);
  cover_.assign(std::uint64_t{1} << params.n, 0);
  set_assigned_.assign(forest.sets.size(), 0);
}

std::uint64_t TilingRun::count_blue(int set_a, int set_b) {
  auto key = std::minmax(set_a, set_b);
  auto it = edge_cache_.find(key);
  if (it != edge_cache_.end()) return it->second;
  std::uint64_t n = count_blue_edges(*oracle_, forest_->set(key.first).vertices,
                                     forest_->set(key.second).vertices,
                                     thread_count_);
  edge_cache_.emplace(key, n);
  return n;
}

int TilingRun::last_codim() const {
  return tiling_.insertion_log.empty() ? 0
                                       : tiling_.insertion_log.back().codim;
}

CubeId TilingRun::insert_assigned(const LeveledCube& c, int set_id) {
  CubeId id = tiling_.insert(c);
  assign_.set_of[c.level].push_back(set_id);
  set_assigned_.at(set_id) = 1;
  for (std::uint64_t v = c.cube.lo(); v < c.cube.hi(); ++v) ++cover_[v];
  return id;
}

bool TilingRun::complete() const {
  for (std::uint64_t v = scan_from_; v < cover_.size(); ++v)
    if (cover_[v] != params_.s - 1) return false;
  return true;
}

ProperCheck TilingRun::is_proper(const LeveledCube& c, int set_id) {
  const LeveledSet& st = forest_->set(set_id);
  // (1) matching level and own-level relative codimension.
  if (st.level != c.level)
    return {false, "set level differs from cube level"};
  if (c.level >= 1 && st.level_codim(c.level) != c.level_codim(c.level))
    return {false, "set relative codimension differs from cube"};
  for (int l = 0; l < static_cast<int>(tiling_.levels.size()); ++l) {
    for (int idx = 0; idx < static_cast<int>(tiling_.levels[l].size()); ++idx) {
      const LeveledCube& other = tiling_.levels[l][idx];
      const LeveledSet& other_set = forest_->set(assign_.set_of[l][idx]);
      if (other.cube == c.cube && other.level == c.level)
        continue;  // the cube itself during audit-style recheck
      bool nests = other.cube == c.cube || contains(other.cube, c.cube) ||
                   contains(c.cube, other.cube);
      if (nests) {
        // (2) set nesting along cube nesting; cubes with the same footprint
        // at different levels nest with the deeper level inside.
        const LeveledSet* in_p;
        const LeveledSet* out_p;
        if (other.cube == c.cube) {
          in_p = other.level > c.level ? &other_set : &st;
          out_p = other.level > c.level ? &st : &other_set;
        } else if (contains(other.cube, c.cube)) {
          in_p = &st;
          out_p = &other_set;
        } else {
          in_p = &other_set;
          out_p = &st;
        }
        if (!std::includes(out_p->vertices.begin(), out_p->vertices.end(),
                           in_p->vertices.begin(), in_p->vertices.end()))
          return {false, "nested cubes with non-nested sets"};
        continue;
      }
      if (relation(c.cube, other.cube) != CubeRelation::adjacent) continue;
      // (3) blue edge budget for the adjacent pair.
      int rho = level_of_adjacency(c, other);
      int delta = dominating_parameter(c, other, rho);
      std::uint64_t blue = count_blue(set_id, other_set.id);
      if (params_.edges_bad(blue, st.size(), other_set.size(), st.level,
                            other_set.level, delta))
        return {false, "blue edge budget exceeded against cube " +
                           format_cube(other.cube) + " (level " +
                           std::to_string(other.level) + ")"};
    }
  }
  return {true, ""};
}

StepOutcome TilingRun::step() {
  StepOutcome out;
  out.step_index = tiling_.insertion_log.size();
  // Lexicographically smallest vertex still uncovered at some level; the
  // pivot only moves forward because each insertion covers it once more.
  while (scan_from_ < cover_.size() && cover_[scan_from_] == params_.s - 1)
    ++scan_from_;
  if (scan_from_ >= cover_.size()) {
    out.kind = StepOutcome::Kind::complete;
    return out;
  }
  Vertex pivot = static_cast<Vertex>(scan_from_);
  int level = cover_[pivot];
  out.kind = StepOutcome::Kind::inserted;
  out.pivot = pivot;
  out.level = level;

  if (level == 0) {
    LeveledCube whole{SpecialCube::whole(params_.n), 0, {}};
    ProperCheck pc = is_proper(whole, forest_->root_id());
    if (!pc.ok) throw std::logic_error("root insertion improper: " + pc.reason);
    out.inserted = insert_assigned(whole, forest_->root_id());
    out.set_id = forest_->root_id();
    trace_.push_back(out);
    return out;
  }

  CubeId prev_id = tiling_.covering_cube(level - 1, pivot);
  if (prev_id.index < 0)
    throw std::logic_error("pivot covered but no covering cube found");
  const LeveledCube prev = tiling_.at(prev_id);
  int prev_set = assign_.set_id(prev_id);
  const LeveledSet& prev_set_ref = forest_->set(prev_set);
  int d_last = last_codim();

  // Phase 1: filter the unassigned children of the parent's set against
  // cubes of adjacency level rho <= level-1, measured from the candidate at
  // the last inserted codimension.
  LeveledCube cand;
  cand.cube = SpecialCube::around(params_.n, d_last, pivot);
  cand.level = level;
  cand.level_codims = prev.level_codims;
  cand.level_codims.push_back(d_last - prev.cube.codim);

  std::vector<int> family;
  for (int kid : forest_->children(prev_set))
    if (!set_assigned_.at(kid)) family.push_back(kid);

  std::vector<char> rejected(family.size(), 0);
  struct AdjInfo {
    CubeId id;
    int rho;
    int delta;
  };
  std::vector<AdjInfo> low_adjacent;  // rho <= level-1
  for (CubeId aid : tiling_.adjacent_cubes(cand, d_last)) {
    int rho = level_of_adjacency(cand, tiling_.at(aid));
    if (rho <= level - 1) {
      int delta = dominating_parameter(cand, tiling_.at(aid), rho);
      low_adjacent.push_back({aid, rho, delta});
    }
  }
  for (const AdjInfo& a : low_adjacent) {
    const LeveledSet& sa = forest_->set(assign_.set_id(a.id));
    std::uint64_t mass = 0;
    for (std::size_t k = 0; k < family.size(); ++k) {
      if (rejected[k]) continue;
      const LeveledSet& s = forest_->set(family[k]);
      std::uint64_t blue = count_blue(s.id, sa.id);
      if (params_.edges_bad(blue, s.size(), sa.size(), s.level, sa.level,
                            a.delta)) {
        rejected[k] = 1;
        mass += s.size();
      }
    }
    BadSetRecord rec;
    rec.against = a.id;
    rec.rho = a.rho;
    rec.delta = a.delta;
    rec.discarded_mass = mass;
    auto [num, den] = params_.bad_mass_budget(prev_set_ref.size(), a.delta);
    rec.budget_num = num;
    rec.budget_den = den;
    rec.within_budget =
        static_cast<unsigned __int128>(mass) * den <=
        static_cast<unsigned __int128>(num);
    out.bad_sets.push_back(rec);
  }

  // Phase 2: grow the candidate codimension from the insertion floor until a
  // surviving set of matching relative codimension is good against the
  // level-l adjacent cubes.
  int i_lo = std::max(0, d_last - prev.cube.codim);
  int i_hi = std::min(params_.codim_max(level), params_.n - prev.cube.codim);
  for (int i = i_lo; i <= i_hi; ++i) {
    LeveledCube c;
    c.cube = SpecialCube::around(params_.n, prev.cube.codim + i, pivot);
    c.level = level;
    c.level_codims = prev.level_codims;
    c.level_codims.push_back(i);

    for (int idx = 0; idx < static_cast<int>(tiling_.levels[level].size()); ++idx) {
      const SpecialCube& other = tiling_.levels[level][idx].cube;
      if (other == c.cube || contains(other, c.cube) || contains(c.cube, other))
        throw std::logic_error("candidate cube overlaps its own level");
    }

    StepOutcome::CandidateDiag diag;
    diag.i = i;
    diag.cube_codim = c.cube.codim;

    std::vector<AdjInfo> level_adjacent;
    for (CubeId aid : tiling_.adjacent_cubes(c, c.cube.codim)) {
      int rho = level_of_adjacency(c, tiling_.at(aid));
      if (rho == level) {
        int delta = dominating_parameter(c, tiling_.at(aid), rho);
        if (delta != i)
          throw std::logic_error(
              "level-l adjacent cube with dominating parameter != i");
        level_adjacent.push_back({aid, rho, delta});
      }
    }
    diag.adjacent_count = level_adjacent.size();

    for (std::size_t k = 0; k < family.size(); ++k) {
      if (rejected[k]) continue;
      const LeveledSet& s = forest_->set(family[k]);
      if (s.level_codim(level) != i) continue;
      ++diag.candidate_sets;
      bool good = true;
      for (const AdjInfo& a : level_adjacent) {
        const LeveledSet& sa = forest_->set(assign_.set_id(a.id));
        std::uint64_t blue = count_blue(s.id, sa.id);
        if (params_.edges_bad(blue, s.size(), sa.size(), s.level, sa.level,
                              a.delta)) {
          good = false;
          break;
        }
      }
      if (!good) {
        ++diag.rejected;
        continue;
      }
      // Claimed coincidence: the rho-adjacency families (rho < level) of the
      // chosen cube must match those of the phase-1 candidate, with equal
      // dominating parameters.
      std::vector<AdjInfo> check;
      for (CubeId aid : tiling_.adjacent_cubes(c, c.cube.codim)) {
        int rho = level_of_adjacency(c, tiling_.at(aid));
        if (rho <= level - 1)
          check.push_back(
              {aid, rho, dominating_parameter(c, tiling_.at(aid), rho)});
      }
      auto key = [](const AdjInfo& x) {
        return std::tuple(x.id.level, x.id.index, x.rho, x.delta);
      };
      auto cmp = [&](const AdjInfo& x, const AdjInfo& y) {
        return key(x) < key(y);
      };
      std::vector<AdjInfo> lhs = low_adjacent, rhs = check;
      std::sort(lhs.begin(), lhs.end(), cmp);
      std::sort(rhs.begin(), rhs.end(), cmp);
      bool same = lhs.size() == rhs.size();
      for (std::size_t q = 0; same && q < lhs.size(); ++q)
        same = key(lhs[q]) == key(rhs[q]);
      if (!same)
        throw std::logic_error(
            "rho-adjacency families of chosen cube differ from phase-1 "
            "candidate");

      ProperCheck pc = is_proper(c, s.id);
      if (!pc.ok)
        throw std::logic_error("chosen cube fails full properness: " +
                               pc.reason);
      out.diagnostics.push_back(diag);
      out.inserted = insert_assigned(c, s.id);
      out.set_id = s.id;
      trace_.push_back(out);
      return out;
    }
    out.diagnostics.push_back(diag);
  }

  out.kind = StepOutcome::Kind::failed;
  out.note = "no proper set at any codimension in [" + std::to_string(i_lo) +
             ", " + std::to_string(i_hi) + "]";
  trace_.push_back(out);
  return out;
}

StepOutcome TilingRun::run_to_completion() {
  std::uint64_t cap =
      (std::uint64_t{params_.s} - 1) * (std::uint64_t{1} << params_.n) + 1;
  for (std::uint64_t k = 0; k <= cap; ++k) {
    StepOutcome o = step();
    if (o.kind != StepOutcome::Kind::inserted) return o;
  }
  throw std::logic_error("tiling exceeded its insertion budget");
}

AuditResult TilingRun::audit() const {
  AuditResult res;
  std::ostringstream text;
  auto fail = [&](const std::string& msg) {
    res.pass = false;
    res.failures.push_back(msg);
  };

  std::string structural = tiling_.validate();
  if (!structural.empty()) fail("structure: " + structural);
  for (int l = 0; l < params_.s - 1; ++l)
    if (!tiling_.level_complete(l))
      fail("level " + std::to_string(l) + " does not partition the cube");
  for (std::uint64_t v = 0; v < cover_.size(); ++v)
    if (cover_[v] != params_.s - 1) {
      fail("vertex " + std::to_string(v) + " covered " +
           std::to_string(int(cover_[v])) + " times");
      break;
    }

  // Assignment bookkeeping.
  std::vector<char> used(forest_->sets.size(), 0);
  for (int l = 0; l < params_.s - 1; ++l) {
    if (assign_.set_of[l].size() != tiling_.levels[l].size()) {
      fail("assignment out of sync at level " + std::to_string(l));
      continue;
    }
    for (std::size_t idx = 0; idx < tiling_.levels[l].size(); ++idx) {
      int sid = assign_.set_of[l][idx];
      const LeveledCube& c = tiling_.levels[l][idx];
      const LeveledSet& st = forest_->set(sid);
      if (used[sid]) fail("set " + std::to_string(sid) + " assigned twice");
      used[sid] = 1;
      if (st.level != c.level)
        fail("condition 1: level mismatch at set " + std::to_string(sid));
      if (c.level >= 1 && st.level_codim(c.level) != c.level_codim(c.level))
        fail("condition 1: relative codim mismatch at set " +
             std::to_string(sid));
    }
  }

  // Conditions 2 and 3 over all pairs, fresh counts.
  std::uint64_t pairs_checked = 0, max_ratio_num = 0;
  for (int la = 0; la < params_.s - 1; ++la)
    for (std::size_t ia = 0; ia < tiling_.levels[la].size(); ++ia)
      for (int lb = la; lb < params_.s - 1; ++lb)
        for (std::size_t ib = lb == la ? ia + 1 : 0;
             ib < tiling_.levels[lb].size(); ++ib) {
          const LeveledCube& a = tiling_.levels[la][ia];
          const LeveledCube& b = tiling_.levels[lb][ib];
          const LeveledSet& sa = forest_->set(assign_.set_of[la][ia]);
          const LeveledSet& sb = forest_->set(assign_.set_of[lb][ib]);
          bool nested = a.cube == b.cube || contains(a.cube, b.cube) ||
                        contains(b.cube, a.cube);
          if (nested) {
            const LeveledSet* inner = &sb;
            const LeveledSet* outer = &sa;
            bool b_inside = a.cube == b.cube ? b.level > a.level
                                             : contains(a.cube, b.cube);
            if (!b_inside) std::swap(inner, outer);
            if (!std::includes(outer->vertices.begin(), outer->vertices.end(),
                               inner->vertices.begin(), inner->vertices.end()))
              fail("condition 2: sets not nested for cubes " +
                   format_cube(a.cube) + " / " + format_cube(b.cube));
            continue;
          }
          if (relation(a.cube, b.cube) != CubeRelation::adjacent) continue;
          int rho = level_of_adjacency(a, b);
          int delta = dominating_parameter(a, b, rho);
          std::uint64_t blue = count_blue_edges(*oracle_, sa.vertices,
                                                sb.vertices, thread_count_);
          ++pairs_checked;
          if (params_.edges_bad(blue, sa.size(), sb.size(), sa.level, sb.level,
                                delta))
            fail("condition 3: blue budget exceeded for cubes " +
                 format_cube(a.cube) + " / " + format_cube(b.cube));
          max_ratio_num = std::max(max_ratio_num, blue);
        }

  text << "tiling audit\n";
  text << "cubes " << tiling_.cube_count() << "\n";
  for (int l = 0; l < params_.s - 1; ++l)
    text << "level " << l << " cubes " << tiling_.levels[l].size() << "\n";
  text << "adjacent pairs checked " << pairs_checked << "\n";
  text << "max blue count over pairs " << max_ratio_num << "\n";
  if (res.pass) {
    text << "audit pass\n";
  } else {
    for (const std::string& f : res.failures) text << "audit fail: " << f << "\n";
  }
  res.text = text.str();
  return res;
}

}  // namespace qramsey
