#include "parmod/weights.hpp"

#include <algorithm>
#include <set>

namespace parmod {

namespace {

void check_shape(int r, int n, const std::vector<std::vector<Rat>>& rows,
                 size_t row_len) {
  if (r < 1) fail(errc::precondition, "rank must be at least 1");
  if (n < 1) fail(errc::precondition, "need at least one marked point");
  if (rows.size() != static_cast<size_t>(n))
    fail(errc::invalid_weight, "weight must have one row per marked point");
  for (const auto& row : rows)
    if (row.size() != row_len)
      fail(errc::invalid_weight,
           "weight rows must have " + std::to_string(row_len) + " entries");
}

void check_decreasing_positive(const std::vector<std::vector<Rat>>& rows) {
  for (const auto& row : rows) {
    for (size_t j = 0; j + 1 < row.size(); ++j)
      if (!(row[j] > row[j + 1]))
        fail(errc::invalid_weight, "weight rows must be strictly decreasing");
    if (!row.empty() && !(row.back() > 0))
      fail(errc::invalid_weight, "weight entries must be positive");
  }
}

}  // namespace

ParabolicWeight ParabolicWeight::interior(int r, int n,
                                          std::vector<std::vector<Rat>> rows) {
  check_shape(r, n, rows, static_cast<size_t>(r - 1));
  check_decreasing_positive(rows);
  for (const auto& row : rows)
    if (!row.empty() && !(row.front() < 1))
      fail(errc::invalid_weight, "interior weight needs a^i_1 < 1");
  return ParabolicWeight(r, n, std::move(rows));
}

ParabolicWeight ParabolicWeight::ray(int r, int n,
                                     std::vector<std::vector<Rat>> rows) {
  check_shape(r, n, rows, static_cast<size_t>(r - 1));
  check_decreasing_positive(rows);
  return ParabolicWeight(r, n, std::move(rows));
}

const Rat& ParabolicWeight::at(int i, int j) const {
  static const Rat zero(0);
  if (j == r_) return zero;
  return rows_[i][j - 1];
}

bool ParabolicWeight::is_interior() const {
  for (const auto& row : rows_)
    if (!row.empty() && !(row.front() < 1)) return false;
  return true;
}

Rat ParabolicWeight::total() const {
  Rat t(0);
  for (const auto& row : rows_)
    for (const auto& a : row) t += a;
  return t;
}

Rat ParabolicWeight::row_prefix(int i, int j) const {
  Rat t(0);
  for (int k = 1; k <= j && k <= r_ - 1; ++k) t += rows_[i][k - 1];
  return t;
}

Rat ParabolicWeight::subset_sum(int i, const std::vector<int>& J) const {
  Rat t(0);
  for (int j : J)
    if (j <= r_ - 1) t += rows_[i][j - 1];
  return t;
}

ParabolicWeight ParabolicWeight::scaled(const Rat& c) const {
  if (!(c > 0)) fail(errc::precondition, "scale factor must be positive");
  auto rows = rows_;
  for (auto& row : rows)
    for (auto& a : row) a *= c;
  return ParabolicWeight(r_, n_, std::move(rows));
}

ParabolicWeight normalize_weight(int r, int n,
                                 const std::vector<std::vector<Rat>>& raw) {
  if (raw.size() != static_cast<size_t>(n))
    fail(errc::invalid_weight, "weight must have one row per marked point");
  std::vector<std::vector<Rat>> rows(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = raw[i];
    if (row.size() != static_cast<size_t>(r) &&
        row.size() != static_cast<size_t>(r - 1))
      fail(errc::invalid_weight,
           "raw weight rows must have r or r-1 entries");
    for (size_t j = 0; j + 1 < row.size(); ++j)
      if (!(row[j] > row[j + 1]))
        fail(errc::invalid_weight, "weight rows must be strictly decreasing");
    Rat last = row.size() == static_cast<size_t>(r) ? row.back() : Rat(0);
    rows[i].reserve(r - 1);
    for (int j = 0; j < r - 1; ++j) rows[i].push_back(row[j] - last);
  }
  return ParabolicWeight::interior(r, n, std::move(rows));
}

Rat slope_total(const ParabolicWeight& w, const Int& deg) {
  return (Rat(deg) + w.total()) / w.rank();
}

Rat slope_sub(const ParabolicWeight& w, int s, const Int& d,
              const std::vector<std::vector<int>>& J) {
  if (s < 1 || s > w.rank() - 1)
    fail(errc::precondition, "subbundle rank must lie in 1..r-1");
  if (J.size() != static_cast<size_t>(w.points()))
    fail(errc::precondition, "need one flag subset per marked point");
  Rat t(d);
  for (int i = 0; i < w.points(); ++i) t += w.subset_sum(i, J[i]);
  return t / s;
}

Rat DifferenceData::column_sum(int j) const {
  Rat t(0);
  for (const auto& row : d) t += row[j - 1];
  return t;
}

DifferenceData difference_data(const ParabolicWeight& w) {
  DifferenceData dd{w.rank(), w.points(), {}};
  dd.d.resize(w.points());
  for (int i = 0; i < w.points(); ++i) {
    dd.d[i].reserve(w.rank() - 1);
    for (int j = 1; j <= w.rank() - 1; ++j)
      dd.d[i].push_back(w.at(i, j) - w.at(i, j + 1));
  }
  return dd;
}

ParabolicWeight weight_from_difference(const DifferenceData& dd) {
  std::vector<std::vector<Rat>> rows(dd.n);
  for (int i = 0; i < dd.n; ++i) {
    rows[i].assign(dd.r - 1, Rat(0));
    Rat acc(0);
    for (int j = dd.r - 1; j >= 1; --j) {
      acc += dd.d[i][j - 1];
      rows[i][j - 1] = acc;
    }
  }
  return ParabolicWeight::interior(dd.r, dd.n, std::move(rows));
}

bool is_small(const ParabolicWeight& w) {
  const int r = w.rank();
  DifferenceData dd = difference_data(w);
  for (int s = 1; s <= r - 1; ++s) {
    Rat lhs(0);
    for (int j = 1; j <= s; ++j)
      lhs += Rat(j) * (r - s) * dd.column_sum(j);
    for (int j = s + 1; j <= r - 1; ++j)
      lhs += Rat(s) * (r - j) * dd.column_sum(j);
    if (lhs > r) return false;
  }
  return true;
}

bool is_small_equivalent(const ParabolicWeight& w) {
  const int r = w.rank();
  std::vector<Rat> col(r, Rat(0));  // |a|_j, 1-based
  for (int i = 0; i < w.points(); ++i)
    for (int j = 1; j <= r - 1; ++j) col[j] += w.at(i, j);
  Rat total(0);
  for (int j = 1; j <= r - 1; ++j) total += col[j];
  Rat prefix(0);
  for (int s = 1; s <= r - 1; ++s) {
    prefix += col[s];
    if (Rat(r) * prefix - Rat(s) * total > r) return false;
  }
  return true;
}

bool git_semistable_torus_fixed(const ParabolicWeight& w,
                                const std::vector<std::vector<int>>& perms) {
  const int r = w.rank();
  const int n = w.points();
  if (perms.size() != static_cast<size_t>(n))
    fail(errc::precondition, "need one permutation flag per marked point");
  for (const auto& p : perms) {
    if (p.size() != static_cast<size_t>(r))
      fail(errc::precondition, "permutation flags must list all r indices");
    std::set<int> seen(p.begin(), p.end());
    if (seen.size() != static_cast<size_t>(r) || *seen.begin() < 1 ||
        *seen.rbegin() > r)
      fail(errc::precondition, "flags must be permutations of 1..r");
  }

  DifferenceData dd = difference_data(w);
  Rat rhs(0);  // (1/r) sum_i sum_j j d^i_j
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= r - 1; ++j) rhs += Rat(j) * dd.d[i][j - 1];
  rhs /= r;

  // V' ranges over coordinate subspaces: subsets S of {1..r}.
  std::vector<int> subset;
  auto rec = [&](auto&& self, int next, int s) -> bool {
    if (static_cast<int>(subset.size()) == s) {
      Rat lhs(0);
      for (int i = 0; i < n; ++i) {
        // dim(W^i_j cap V') = |perms[i][0..j-1] cap S|
        int hit = 0;
        for (int j = 1; j <= r - 1; ++j) {
          if (std::find(subset.begin(), subset.end(), perms[i][j - 1]) !=
              subset.end())
            ++hit;
          lhs += dd.d[i][j - 1] * hit;
        }
      }
      return lhs / s <= rhs;
    }
    for (int v = next; v <= r; ++v) {
      subset.push_back(v);
      bool ok = self(self, v + 1, s);
      subset.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (int s = 1; s <= r - 1; ++s) {
    subset.clear();
    if (!rec(rec, 1, s)) return false;
  }
  return true;
}

DivisorClass DivisorClass::make(int r, int n, Int level,
                                std::vector<Partition> lambdas) {
  if (r < 2) fail(errc::precondition, "divisor classes need rank >= 2");
  if (lambdas.size() != static_cast<size_t>(n))
    fail(errc::precondition, "need one partition per marked point");
  for (const auto& l : lambdas)
    if (l.length() > r - 1)
      fail(errc::precondition, "partitions must have at most r-1 parts");
  return DivisorClass{r, n, std::move(level), std::move(lambdas)};
}

DivisorClass pauly_divisor(const ParabolicWeight& w) {
  Int ell(1);
  for (const auto& row : w.rows())
    for (const auto& a : row) ell = boost::multiprecision::lcm(ell, den(a));
  std::vector<Partition> lambdas;
  lambdas.reserve(w.points());
  for (const auto& row : w.rows()) {
    std::vector<int> parts;
    parts.reserve(row.size());
    for (const auto& a : row) {
      Rat scaled = a * ell;
      parts.push_back(static_cast<int>(num(scaled)));
    }
    lambdas.emplace_back(std::move(parts));
  }
  return DivisorClass::make(w.rank(), w.points(), std::move(ell),
                            std::move(lambdas));
}

ParabolicWeight pauly_weight(const DivisorClass& D) {
  if (!(D.level > 0))
    fail(errc::boundary_divisor, "level must be positive");
  std::vector<std::vector<Rat>> rows(D.n);
  for (int i = 0; i < D.n; ++i) {
    const Partition& l = D.lambdas[i];
    if (Int(l.part(0)) >= D.level)
      fail(errc::boundary_divisor,
           "level facet: lambda^" + std::to_string(i + 1) +
               "_1 >= level, weight degenerates");
    // Equal adjacent parts (including lambda_{r-1} = lambda_r = 0) put the
    // class on a flag-degeneration facet; the weight map is undefined there.
    for (int j = 0; j + 1 < D.r; ++j)
      if (l.part(j) == l.part(j + 1))
        fail(errc::boundary_divisor,
             "flag facet: equal adjacent parts at point " +
                 std::to_string(i + 1) + ", weight degenerates");
    rows[i].reserve(D.r - 1);
    for (int j = 0; j < D.r - 1; ++j)
      rows[i].emplace_back(Rat(Int(l.part(j)), D.level));
  }
  return ParabolicWeight::interior(D.r, D.n, std::move(rows));
}

long long moduli_dimension(int r, int n) {
  return static_cast<long long>(n) * r * (r - 1) / 2 -
         static_cast<long long>(r) * r + 1;
}

}  // namespace parmod
