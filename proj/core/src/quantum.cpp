#include "parmod/quantum.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace parmod {

namespace {

// Beta numbers (first-column hook lengths) of rho padded to s rows:
// beta_k = rho_k + (s - 1 - k), strictly decreasing and nonnegative.
std::vector<long long> beta_numbers(const Partition& rho, int s) {
  std::vector<long long> beta(s);
  for (int k = 0; k < s; ++k) beta[k] = rho.part(k) + (s - 1 - k);
  return beta;
}

Partition partition_from_beta(std::vector<long long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int s = static_cast<int>(beta.size());
  std::vector<int> parts(s);
  for (int k = 0; k < s; ++k)
    parts[k] = static_cast<int>(beta[k] - (s - 1 - k));
  return Partition(std::move(parts));
}

}  // namespace

std::optional<RimHookReduction> rim_hook_reduce(const Partition& rho, int s,
                                                int r) {
  if (rho.length() > s) return std::nullopt;

  using Key = std::tuple<std::vector<int>, int, int>;
  static std::map<Key, std::optional<RimHookReduction>> cache;
  static std::mutex cache_mutex;
  Key key{rho.parts(), s, r};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  // Removing an r-rim-hook is subtracting r from one beta number while
  // keeping all beta numbers distinct. The hook's height is 1 plus the
  // number of beta numbers passed over, and each removal contributes a
  // factor (-1)^(s - height).
  std::vector<long long> beta = beta_numbers(rho, s);
  int sign = 1;
  int hooks = 0;
  bool removed = true;
  while (removed) {
    removed = false;
    for (size_t i = 0; i < beta.size(); ++i) {
      long long target = beta[i] - r;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int passed = 0;
      for (long long b : beta)
        if (b > target && b < beta[i]) ++passed;
      int height = passed + 1;
      if ((s - height) % 2 != 0) sign = -sign;
      beta[i] = target;
      ++hooks;
      removed = true;
      break;
    }
  }

  Partition core = partition_from_beta(std::move(beta));
  std::optional<RimHookReduction> result;
  if (core.fits_in_box(s, r - s))
    result = RimHookReduction{sign, hooks, std::move(core)};

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::move(key), result);
  return result;
}

Int QuantumClass::coefficient(const Partition& lambda, int qdeg) const {
  auto it = terms.find({lambda, qdeg});
  return it == terms.end() ? Int(0) : it->second;
}

QuantumClass quantum_unit(int r, int s) {
  QuantumClass c{r, s, {}};
  c.terms.emplace(std::make_pair(Partition{}, 0), Int(1));
  return c;
}

QuantumClass quantum_class(int r, int s, const Partition& lambda, int qdeg) {
  if (!lambda.fits_in_box(s, r - s))
    fail(errc::box_mismatch, "class " + lambda.to_string() +
                                 " does not fit in Gr(" + std::to_string(s) +
                                 "," + std::to_string(r) + ")");
  QuantumClass c{r, s, {}};
  c.terms.emplace(std::make_pair(lambda, qdeg), Int(1));
  return c;
}

namespace {

void accumulate(QuantumClass& acc, const Partition& nu, int qdeg,
                const Int& coeff) {
  auto key = std::make_pair(nu, qdeg);
  auto it = acc.terms.find(key);
  if (it == acc.terms.end()) {
    if (coeff != 0) acc.terms.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) acc.terms.erase(it);
  }
}

// sigma_lambda * sigma_mu for box partitions, through the rim-hook rule:
// expand classically with at most s rows, then reduce each term modulo
// r-rim-hooks, picking up q-degrees and signs.
const QuantumClass& basis_pair_product(int r, int s, const Partition& lambda,
                                       const Partition& mu) {
  using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;
  static std::map<Key, QuantumClass> cache;
  static std::mutex cache_mutex;
  Key key{r, s, lambda.parts(), mu.parts()};
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  QuantumClass out{r, s, {}};
  for (const auto& [rho, c] : schur_product(lambda, mu, s)) {
    auto red = rim_hook_reduce(rho, s, r);
    if (!red) continue;
    accumulate(out, red->core, red->hooks, c * red->sign);
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

QuantumClass quantum_multiply_basis(const QuantumClass& a,
                                    const Partition& lambda) {
  QuantumClass out{a.r, a.s, {}};
  for (const auto& [key, coeff] : a.terms) {
    const auto& [nu, qdeg] = key;
    const QuantumClass& pair = basis_pair_product(a.r, a.s, nu, lambda);
    for (const auto& [pkey, pc] : pair.terms)
      accumulate(out, pkey.first, pkey.second + qdeg, pc * coeff);
  }
  return out;
}

QuantumClass quantum_product(const QuantumClass& a, const QuantumClass& b) {
  if (a.r != b.r || a.s != b.s)
    fail(errc::box_mismatch,
         "quantum product of classes from different Grassmannians");
  QuantumClass out{a.r, a.s, {}};
  for (const auto& [bkey, bc] : b.terms) {
    QuantumClass partial = quantum_multiply_basis(a, bkey.first);
    for (const auto& [pkey, pc] : partial.terms)
      accumulate(out, pkey.first, pkey.second + bkey.second, pc * bc);
  }
  return out;
}

Int gw_invariant(int r, int s, const std::vector<Partition>& classes, int d) {
  if (classes.size() < 3)
    fail(errc::bad_arity, "Gromov-Witten invariants need at least 3 classes");
  if (d < 0) fail(errc::precondition, "Gromov-Witten degree must be >= 0");
  long long codim = 0;
  for (const auto& lambda : classes) {
    if (!lambda.fits_in_box(s, r - s))
      fail(errc::box_mismatch, "class " + lambda.to_string() +
                                   " does not fit in Gr(" + std::to_string(s) +
                                   "," + std::to_string(r) + ")");
    codim += lambda.weight();
  }
  if (codim != static_cast<long long>(s) * (r - s) +
                   static_cast<long long>(d) * r)
    return 0;
  QuantumClass acc = quantum_unit(r, s);
  for (size_t i = 0; i + 1 < classes.size(); ++i)
    acc = quantum_multiply_basis(acc, classes[i]);
  return acc.coefficient(poincare_dual(r, s, classes.back()), d);
}

bool gw_is_one(int r, int s, const std::vector<Partition>& classes, int d) {
  return gw_invariant(r, s, classes, d) == 1;
}

}  // namespace parmod
