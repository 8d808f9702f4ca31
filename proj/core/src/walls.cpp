#include "parmod/walls.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <string>

#include "gw_enum.hpp"

namespace parmod {

namespace {

Int rat_floor(const Rat& q) {
  Int n = num(q), d = den(q);
  Int quot = n / d;
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

std::string wall_name(const Wall& W) {
  std::string out = "(" + std::to_string(W.s) + "," + std::to_string(W.d) +
                    ",[";
  for (size_t i = 0; i < W.J.size(); ++i) {
    if (i) out += " ";
    out += "{";
    for (size_t k = 0; k < W.J[i].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(W.J[i][k]);
    }
    out += "}";
  }
  return out + "])";
}

int worker_count() {
  const char* env = std::getenv("PARMOD_WORKERS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v > 1 ? v : 1;
}

// Per-point subset sums for a fixed s, with suffix extrema for pruning.
struct StratumData {
  std::vector<detail::SubsetChoice> choices;
  std::vector<std::vector<Rat>> sums;       // [point][choice]
  std::vector<Rat> suffix_max, suffix_min;  // over points i..n-1
};

StratumData stratum_data(const ParabolicWeight& w, int s) {
  StratumData data;
  data.choices = detail::subset_choices(w.rank(), s);
  const int n = w.points();
  data.sums.resize(n);
  for (int i = 0; i < n; ++i) {
    data.sums[i].reserve(data.choices.size());
    for (const auto& ch : data.choices)
      data.sums[i].push_back(w.subset_sum(i, ch.J));
  }
  data.suffix_max.assign(n + 1, Rat(0));
  data.suffix_min.assign(n + 1, Rat(0));
  for (int i = n - 1; i >= 0; --i) {
    data.suffix_max[i] =
        data.suffix_max[i + 1] + *std::max_element(data.sums[i].begin(),
                                                   data.sums[i].end());
    data.suffix_min[i] =
        data.suffix_min[i + 1] + *std::min_element(data.sums[i].begin(),
                                                   data.sums[i].end());
  }
  return data;
}

// Visits every tuple whose total sum lies in [lo, hi], passing the chosen
// indices and the exact total.
template <typename Visit>
void tuples_in_window(const StratumData& data, int n, const Rat& lo,
                      const Rat& hi, const Visit& visit) {
  std::vector<int> pick(n);
  auto rec = [&](auto&& self, int i, const Rat& acc) -> void {
    if (i == n) {
      visit(pick, acc);
      return;
    }
    for (size_t c = 0; c < data.sums[i].size(); ++c) {
      Rat next = acc + data.sums[i][c];
      if (next + data.suffix_max[i + 1] < lo) continue;
      if (next + data.suffix_min[i + 1] > hi) continue;
      pick[i] = static_cast<int>(c);
      self(self, i + 1, next);
    }
  };
  rec(rec, 0, Rat(0));
}

Wall wall_from_picks(const ParabolicWeight& w, int s, int d,
                     const StratumData& data, const std::vector<int>& pick) {
  std::vector<std::vector<int>> J;
  J.reserve(pick.size());
  for (int c : pick) J.push_back(data.choices[c].J);
  return Wall::make(w.rank(), w.points(), s, d, std::move(J));
}

// Convex combination (1 - t) w0 + t w1 for t in (0, 1); rows stay strictly
// decreasing and positive, so the result is a valid weight.
ParabolicWeight lerp(const ParabolicWeight& w0, const ParabolicWeight& w1,
                     const Rat& t) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(w0.points());
  for (int i = 0; i < w0.points(); ++i) {
    std::vector<Rat> row;
    row.reserve(w0.rank() - 1);
    for (int j = 1; j <= w0.rank() - 1; ++j)
      row.push_back(w0.at(i, j) + t * (w1.at(i, j) - w0.at(i, j)));
    rows.push_back(std::move(row));
  }
  return ParabolicWeight::ray(w0.rank(), w0.points(), std::move(rows));
}

std::vector<WallGroup> group_sorted(std::map<Rat, std::vector<Wall>> found) {
  std::vector<WallGroup> out;
  out.reserve(found.size());
  for (auto& [pos, walls] : found) {
    std::sort(walls.begin(), walls.end(), wall_less);
    out.push_back({pos, std::move(walls)});
  }
  return out;
}

}  // namespace

Wall Wall::make(int r, int n, int s, int d, std::vector<std::vector<int>> J) {
  if (J.size() != static_cast<size_t>(n))
    fail(errc::precondition, "wall needs one subset per marked point");
  for (auto& sub : J)
    SchubertIndex::make(r, s, sub);  // validates range and monotonicity
  return Wall{r, n, s, d, std::move(J)};
}

Wall Wall::complement() const {
  std::vector<std::vector<int>> Jc;
  Jc.reserve(J.size());
  for (const auto& sub : J) {
    std::vector<int> comp;
    comp.reserve(r - s);
    for (int v = 1; v <= r; ++v)
      if (std::find(sub.begin(), sub.end(), v) == sub.end())
        comp.push_back(v);
    Jc.push_back(std::move(comp));
  }
  return Wall{r, n, r - s, -d, std::move(Jc)};
}

Wall Wall::canonical() const {
  if (d < 0) return *this;
  if (d > 0) return complement();
  Wall other = complement();
  if (s != other.s) return s < other.s ? *this : other;
  return J <= other.J ? *this : other;
}

bool wall_less(const Wall& a, const Wall& b) {
  if (a.s != b.s) return a.s < b.s;
  if (a.d != b.d) return a.d > b.d;  // -d ascending
  return a.J < b.J;
}

Rat wall_residual(const Wall& W, const ParabolicWeight& w) {
  if (W.r != w.rank() || W.n != w.points())
    fail(errc::precondition, "wall and weight have different (r, n)");
  Rat t(W.d);
  for (int i = 0; i < W.n; ++i) t += w.subset_sum(i, W.J[i]);
  return Rat(W.r) * t - Rat(W.s) * w.total();
}

bool provides_crossing(const Wall& W, const ParabolicWeight& at) {
  if (W.r != at.rank() || W.n != at.points())
    fail(errc::precondition, "wall and weight have different (r, n)");
  if (W.d == 0) return true;
  const Wall V = W.d < 0 ? W : W.complement();
  const int r = V.r;
  const int s = V.s;
  const int dd = -V.d;
  const Rat total = at.total();

  // Constant span: rank s + |d|, flag steps J^i plus generic extra ones.
  if (s + dd <= r - 1) {
    Rat sum(0);
    for (int i = 0; i < V.n; ++i) sum += at.subset_sum(i, V.J[i]);
    if (Rat(r) * sum >= Rat(s + dd) * total) return false;
  }

  // Degree-0 summand: rank s - |d|, the deepest s - |d| steps of each J^i.
  if (dd < s) {
    Rat sum(0);
    for (int i = 0; i < V.n; ++i)
      for (int k = dd; k < s; ++k) sum += at.at(i, V.J[i][k]);
    if (Rat(r) * sum >= Rat(s - dd) * total) return false;
  }
  return true;
}

ScalingPath ScalingPath::make(ParabolicWeight base, Rat c_max) {
  if (!(c_max > 0)) fail(errc::precondition, "c_max must be positive");
  if (!base.scaled(c_max).is_interior())
    fail(errc::invalid_weight,
         "scaling path leaves the interior before c_max");
  return ScalingPath{std::move(base), std::move(c_max)};
}

std::vector<WallGroup> scaling_walls(const ScalingPath& path,
                                     std::optional<int> dmax, bool* bounded) {
  const ParabolicWeight& w = path.base;
  const int r = w.rank();
  const int n = w.points();
  const Rat total = w.total();
  if (bounded) *bounded = false;

  struct StratumResult {
    std::map<Rat, std::vector<Wall>> found;
    bool bounded = false;
  };

  auto run_stratum = [&](int s) {
    StratumResult result;
    StratumData data = stratum_data(w, s);
    const Rat ray_level = Rat(s) * total / r;  // T with r T = s |a|

    // A tuple with T exactly s|a|/r keeps the whole ray on a GIT wall.
    tuples_in_window(data, n, ray_level, ray_level,
                     [&](const std::vector<int>& pick, const Rat&) {
                       Wall W = wall_from_picks(w, s, 0, data, pick);
                       fail(errc::degenerate_base,
                            "scaling ray lies inside the GIT wall " +
                                wall_name(W));
                     });

    // Crossing parameter of (s, -dd, J): c = r*dd / (r T - s|a|), valid when
    // positive and at most c_max, i.e. T >= s|a|/r + dd/c_max.
    Rat gap = Rat(r) * data.suffix_max[0] - Rat(s) * total;
    if (gap <= 0) return result;  // no tuple can cross for any d < 0
    int derived_cap = static_cast<int>(rat_floor(path.c_max * gap / r));
    int cap = derived_cap;
    if (dmax && *dmax < derived_cap) {
      cap = std::max(*dmax, 0);
      result.bounded = true;
    }
    if (cap < 1) return result;

    const Rat lo = ray_level + Rat(1) / path.c_max;
    tuples_in_window(
        data, n, lo, data.suffix_max[0],
        [&](const std::vector<int>& pick, const Rat& T) {
          Rat denom = Rat(r) * T - Rat(s) * total;  // > 0 in this window
          int dd_hi = static_cast<int>(rat_floor(path.c_max * denom / r));
          for (int dd = 1; dd <= std::min(dd_hi, cap); ++dd) {
            Wall W = wall_from_picks(w, s, -dd, data, pick);
            // Scale-invariant, so the base weight stands in for the
            // crossing weight c * base.
            if (!provides_crossing(W, w)) continue;
            Rat c = Rat(r) * dd / denom;
            result.found[c].push_back(std::move(W));
          }
        });
    return result;
  };

  std::map<Rat, std::vector<Wall>> merged;
  std::vector<StratumResult> results;
  const int workers = worker_count();
  if (workers > 1 && r > 2) {
    std::vector<std::future<StratumResult>> jobs;
    for (int s = 1; s <= r - 1; ++s)
      jobs.push_back(std::async(std::launch::async, run_stratum, s));
    for (auto& job : jobs) results.push_back(job.get());
  } else {
    for (int s = 1; s <= r - 1; ++s) results.push_back(run_stratum(s));
  }
  for (auto& result : results) {
    if (result.bounded && bounded) *bounded = true;
    for (auto& [pos, walls] : result.found) {
      auto& slot = merged[pos];
      slot.insert(slot.end(), walls.begin(), walls.end());
    }
  }
  return group_sorted(std::move(merged));
}

std::optional<FirstWall> first_wall(const ScalingPath& path,
                                    std::optional<int> dmax) {
  auto groups = scaling_walls(path, dmax);
  if (groups.empty()) return std::nullopt;
  const WallGroup& g = groups.front();

  const int r = path.base.rank();
  const int n = path.base.points();
  std::vector<int> low(1, 1), high;
  for (int j = 1; j <= r - 1; ++j) high.push_back(j);
  Wall extreme_low = Wall::make(r, n, 1, -1,
                                std::vector<std::vector<int>>(n, low));
  Wall extreme_high = Wall::make(r, n, r - 1, -1,
                                 std::vector<std::vector<int>>(n, high));

  FirstWall fw;
  fw.c = g.position;
  fw.walls = g.walls;
  fw.extremal = g.walls.size() == 1 &&
                (g.walls.front() == extreme_low || g.walls.front() == extreme_high);
  return fw;
}

std::vector<WallGroup> segment_walls(const ParabolicWeight& w0,
                                     const ParabolicWeight& w1,
                                     std::optional<int> dmax, bool* bounded) {
  if (w0.rank() != w1.rank() || w0.points() != w1.points())
    fail(errc::precondition, "segment endpoints have different (r, n)");
  if (!w0.is_interior() || !w1.is_interior())
    fail(errc::invalid_weight, "segment endpoints must be interior weights");
  for (const ParabolicWeight* w : {&w0, &w1}) {
    if (auto W = on_wall(*w, dmax))
      fail(errc::degenerate_endpoint,
           "segment endpoint lies on wall " + wall_name(*W));
  }
  const int r = w0.rank();
  const int n = w0.points();
  const Rat total0 = w0.total();
  const Rat total1 = w1.total();
  if (bounded) *bounded = false;

  std::map<Rat, std::vector<Wall>> merged;
  for (int s = 1; s <= r - 1; ++s) {
    StratumData d0 = stratum_data(w0, s);
    StratumData d1 = stratum_data(w1, s);

    // Residuals R_e = r d + r T_e - s |a_e| at the two endpoints; a wall is
    // crossed when they have strictly opposite signs. Derived |d| range from
    // the extreme subset sums.
    Rat u0_hi = Rat(r) * d0.suffix_max[0] - Rat(s) * total0;
    Rat u1_hi = Rat(r) * d1.suffix_max[0] - Rat(s) * total1;
    int derived = static_cast<int>(rat_floor(std::max(u0_hi, u1_hi) / r));
    int cap_dd = std::max(derived, 0);
    if (dmax) {
      if (*dmax < cap_dd) {
        cap_dd = std::max(*dmax, 0);
        if (bounded) *bounded = true;
      }
    }

    for (int dd = 0; dd <= cap_dd; ++dd) {
      const int d = -dd;
      // Prune on both residual intervals: a subtree is dead when every
      // completion leaves both endpoints on the same strict side.
      std::vector<int> pick(n);
      auto rec = [&](auto&& self, int i, const Rat& acc0,
                     const Rat& acc1) -> void {
        Rat r0_lo = Rat(r) * (d + acc0 + d0.suffix_min[i]) - Rat(s) * total0;
        Rat r0_hi = Rat(r) * (d + acc0 + d0.suffix_max[i]) - Rat(s) * total0;
        Rat r1_lo = Rat(r) * (d + acc1 + d1.suffix_min[i]) - Rat(s) * total1;
        Rat r1_hi = Rat(r) * (d + acc1 + d1.suffix_max[i]) - Rat(s) * total1;
        if (r0_lo > 0 && r1_lo > 0) return;
        if (r0_hi < 0 && r1_hi < 0) return;
        if (i == n) {
          // acc* are complete; r0_lo == r0_hi etc.
          if (r0_lo == 0 || r1_lo == 0) return;  // endpoints pre-checked
          if ((r0_lo > 0) == (r1_lo > 0)) return;
          Wall W = wall_from_picks(w0, s, d, d0, pick);
          if (d == 0) {
            Wall canon = W.canonical();
            if (!(canon == W)) return;  // complement will be enumerated too
          }
          Rat t = r0_lo / (r0_lo - r1_lo);
          if (!provides_crossing(W, lerp(w0, w1, t))) return;
          merged[t].push_back(std::move(W));
          return;
        }
        for (size_t c = 0; c < d0.sums[i].size(); ++c) {
          pick[i] = static_cast<int>(c);
          self(self, i + 1, acc0 + d0.sums[i][c], acc1 + d1.sums[i][c]);
        }
      };
      rec(rec, 0, Rat(0), Rat(0));
    }
  }
  return group_sorted(std::move(merged));
}

std::optional<Wall> on_wall(const ParabolicWeight& w,
                            std::optional<int> dmax) {
  const int r = w.rank();
  const int n = w.points();
  const Rat total = w.total();
  std::optional<Wall> best;

  for (int s = 1; s <= r - 1; ++s) {
    StratumData data = stratum_data(w, s);
    // r(d + T) = s|a| with T in [suffix_min, suffix_max] bounds d exactly:
    // d ranges over [(s|a| - r T_max)/r, (s|a| - r T_min)/r], capped at 0.
    Rat lo_exact = (Rat(s) * total - Rat(r) * data.suffix_max[0]) / r;
    Rat hi_exact = (Rat(s) * total - Rat(r) * data.suffix_min[0]) / r;
    long long d_from = static_cast<long long>(rat_floor(lo_exact));
    if (Rat(d_from) < lo_exact) ++d_from;  // ceil
    long long d_to = static_cast<long long>(rat_floor(hi_exact));
    d_to = std::min(d_to, 0LL);
    if (dmax) d_from = std::max(d_from, -static_cast<long long>(*dmax));

    for (long long d = d_from; d <= d_to && !best; ++d) {
      Rat target = (Rat(s) * total - Rat(r) * Rat(static_cast<int>(d))) / r;
      tuples_in_window(data, n, target, target,
                       [&](const std::vector<int>& pick, const Rat&) {
                         if (best) return;
                         Wall W = wall_from_picks(w, s, static_cast<int>(d),
                                                  data, pick);
                         if (provides_crossing(W, w)) best = std::move(W);
                       });
      if (best) return best;
    }
  }
  return best;
}

std::vector<Wall> walls_through(const ParabolicWeight& w,
                                std::optional<int> dmax) {
  const int r = w.rank();
  const int n = w.points();
  const Rat total = w.total();
  std::vector<Wall> out;

  for (int s = 1; s <= r - 1; ++s) {
    StratumData data = stratum_data(w, s);
    Rat lo_exact = (Rat(s) * total - Rat(r) * data.suffix_max[0]) / r;
    Rat hi_exact = (Rat(s) * total - Rat(r) * data.suffix_min[0]) / r;
    long long d_from = static_cast<long long>(rat_floor(lo_exact));
    if (Rat(d_from) < lo_exact) ++d_from;  // ceil
    long long d_to = static_cast<long long>(rat_floor(hi_exact));
    d_to = std::min(d_to, 0LL);
    if (dmax) d_from = std::max(d_from, -static_cast<long long>(*dmax));

    for (long long d = d_from; d <= d_to; ++d) {
      Rat target = (Rat(s) * total - Rat(r) * Rat(static_cast<int>(d))) / r;
      tuples_in_window(data, n, target, target,
                       [&](const std::vector<int>& pick, const Rat&) {
                         Wall W = wall_from_picks(w, s, static_cast<int>(d),
                                                  data, pick);
                         if (W.d == 0 && !(W.canonical() == W))
                           return;  // complement visited in its own stratum
                         if (!provides_crossing(W, w)) return;
                         out.push_back(std::move(W));
                       });
    }
  }
  std::sort(out.begin(), out.end(), wall_less);
  return out;
}

}  // namespace parmod
