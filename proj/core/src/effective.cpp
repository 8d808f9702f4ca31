#include <algorithm>

#include "gw_enum.hpp"
#include "parmod/error.hpp"

namespace parmod {

namespace detail {

std::vector<SubsetChoice> subset_choices(int r, int s) {
  std::vector<SubsetChoice> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == s) {
      SchubertIndex idx = SchubertIndex::make(r, s, cur);
      Partition lambda = subset_to_partition(idx);
      out.push_back({cur, lambda, lambda.weight()});
      return;
    }
    for (int v = next; v <= r - (s - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

int derived_degree_bound(int r, int n, int s) {
  return static_cast<int>(
      (static_cast<long long>(n - 1) * s * (r - s)) / r);
}

void enumerate_gw_certificates(
    int r, int n, std::optional<int> dmax, bool* bounded,
    const std::function<bool(const GwCertificate&)>& visit) {
  if (n < 3)
    fail(errc::precondition,
         "single-map certificates need at least 3 marked points");
  if (bounded) *bounded = false;

  for (int s = 1; s <= r - 1; ++s) {
    const auto choices = subset_choices(r, s);
    const int cell = s * (r - s);
    const Partition top = Partition::box(s, r - s);
    const int derived = derived_degree_bound(r, n, s);
    int cap = derived;
    if (dmax && *dmax < derived) {
      cap = std::max(*dmax, 0);
      if (bounded) *bounded = true;
    }

    for (int dd = 0; dd <= cap; ++dd) {
      const int target = cell + dd * r;  // required total codimension
      if (target > n * cell) break;

      // Depth-first over per-point subsets, carrying the partial quantum
      // product; the invariant is its coefficient on (top, q^dd).
      std::vector<int> pick(n, -1);
      std::vector<QuantumClass> prod(n + 1);
      prod[0] = quantum_unit(r, s);
      bool keep_going = true;

      auto rec = [&](auto&& self, int i, int codim) -> void {
        if (!keep_going) return;
        if (i == n) {
          if (codim != target) return;
          if (prod[n].coefficient(top, dd) != 1) return;
          GwCertificate cert;
          cert.s = s;
          cert.d = -dd;
          cert.J.reserve(n);
          for (int k = 0; k < n; ++k) cert.J.push_back(choices[pick[k]].J);
          if (!visit(cert)) keep_going = false;
          return;
        }
        const int remaining = n - i - 1;
        for (size_t c = 0; c < choices.size() && keep_going; ++c) {
          int next_codim = codim + choices[c].codim;
          if (next_codim > target) continue;
          if (next_codim + remaining * cell < target) continue;
          prod[i + 1] = quantum_multiply_basis(prod[i], choices[c].lambda);
          if (prod[i + 1].is_zero()) continue;
          pick[i] = static_cast<int>(c);
          self(self, i + 1, next_codim);
          pick[i] = -1;
        }
      };
      rec(rec, 0, 0);
      if (!keep_going) return;
    }
  }
}

}  // namespace detail

EffectivenessResult is_effective(const ParabolicWeight& w,
                                 std::optional<int> dmax) {
  if (!w.is_interior())
    fail(errc::invalid_weight, "effectiveness test needs an interior weight");
  const int r = w.rank();
  const Rat total = w.total();

  EffectivenessResult result;
  result.effective = true;
  detail::enumerate_gw_certificates(
      r, w.points(), dmax, &result.bounded_search,
      [&](const GwCertificate& cert) {
        // slope_sub <= slope_total(0), cleared of denominators:
        // r (d + sum_J a) <= s |a|.
        Rat lhs(cert.d);
        for (int i = 0; i < w.points(); ++i)
          lhs += w.subset_sum(i, cert.J[i]);
        if (Rat(r) * lhs > Rat(cert.s) * total) {
          result.effective = false;
          result.violation = cert;
          return false;  // first violation in canonical order
        }
        return true;
      });
  return result;
}

}  // namespace parmod
