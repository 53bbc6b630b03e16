#include "entropic/linear.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "entropic/errors.hpp"

namespace entropic {

namespace {

// Pool sizes and source dimensions stay small in practice; this guards
// accidental huge allocations from hostile documents.
constexpr long long kMaxPoolCells = 10'000'000;

void check_capacity(std::size_t rows, long long k) {
  if (k < 0 || static_cast<long long>(rows) * std::max<long long>(k, 1) > kMaxPoolCells) {
    throw capacity_error("linear system too large: " + std::to_string(rows) + " rows x " +
                         std::to_string(k) + " columns");
  }
}

}  // namespace

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

long long smallest_prime_at_least(long long x) {
  long long q = std::max<long long>(x, 2);
  while (!is_prime(q)) ++q;
  return q;
}

long long mod_inverse(long long a, long long q) {
  // Extended Euclid; q prime and a not divisible by q.
  long long t = 0, new_t = 1;
  long long r = q, new_r = ((a % q) + q) % q;
  while (new_r != 0) {
    long long quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw usage_error("element has no inverse mod " + std::to_string(q));
  return ((t % q) + q) % q;
}

int gf_rank(std::vector<std::vector<long long>> rows, long long q) {
  if (!is_prime(q)) {
    throw usage_error("field size must be prime, got " + std::to_string(q));
  }
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (auto& row : rows) {
    if (row.size() != cols) throw usage_error("rank input rows have inconsistent lengths");
    for (long long& x : row) x = ((x % q) + q) % q;
  }

  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t pivot = pivot_row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot_row], rows[pivot]);

    const long long inv = mod_inverse(rows[pivot_row][col], q);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const long long factor = rows[r][col] * inv % q;
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] = ((rows[r][c] - factor * rows[pivot_row][c]) % q + q) % q;
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::vector<long long> vandermonde_row(long long alpha, int k, long long q) {
  std::vector<long long> row(static_cast<std::size_t>(std::max(k, 0)));
  long long power = 1 % q;
  for (int j = 0; j < k; ++j) {
    row[j] = power;
    power = power * (alpha % q) % q;
  }
  return row;
}

RankEntropy linear_entropy(const LinearSystem& sys, SubsetMask subset) {
  if (subset > make_ground_set(sys.n).full_mask()) {
    throw usage_error("subset bitmask out of range for linear system");
  }
  std::vector<char> selected(sys.rows.size(), 0);
  for (int i = 0; i < sys.n; ++i) {
    if (!(subset & (1u << i))) continue;
    for (int r : sys.vars[i]) selected[r] = 1;
  }
  std::vector<std::vector<long long>> rows;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    if (selected[r]) rows.push_back(vandermonde_row(sys.rows[r].alpha, sys.k, sys.q));
  }
  return RankEntropy{gf_rank(std::move(rows), sys.q), sys.q};
}

SetFunctionTable tabulate(const LinearSystem& sys) {
  GroundSet ground = make_ground_set(sys.n);
  std::vector<Rat> values(ground.subset_count());
  for (SubsetMask a = 0; a < ground.subset_count(); ++a) {
    values[a] = linear_entropy(sys, a).rank;
  }
  return SetFunctionTable{ground, std::move(values)};
}

LinearSystem build_card_truncation(int n, int k) {
  if (n < 1 || n > kMaxGroundSize) {
    throw usage_error("cardinality truncation needs 1 <= n <= " + std::to_string(kMaxGroundSize));
  }
  if (k < 1 || k > n) {
    throw usage_error("cardinality truncation needs 1 <= k <= n, got k = " + std::to_string(k));
  }
  LinearSystem sys;
  sys.n = n;
  sys.k = k;
  sys.q = smallest_prime_at_least(n);
  sys.vars.resize(n);
  for (int i = 0; i < n; ++i) {
    sys.rows.push_back(PoolRow{i, "item(" + std::to_string(i) + ")"});
    sys.vars[i].push_back(i);
  }
  return sys;
}

LinearSystem build_weighted_truncation(const std::vector<long long>& weights, long long k) {
  TruncationSpec spec{static_cast<int>(weights.size()), k, weights};
  validate(spec);

  long long clone_count = 0;
  for (long long w : weights) clone_count += w;
  check_capacity(static_cast<std::size_t>(clone_count), k);

  LinearSystem sys;
  sys.n = static_cast<int>(weights.size());
  sys.k = static_cast<int>(k);
  sys.q = smallest_prime_at_least(clone_count);
  sys.vars.resize(sys.n);
  long long alpha = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (long long c = 0; c < weights[i]; ++c) {
      sys.vars[i].push_back(static_cast<int>(sys.rows.size()));
      sys.rows.push_back(
          PoolRow{alpha++, "clone(" + std::to_string(i) + "," + std::to_string(c) + ")"});
    }
  }
  return sys;
}

LinearSystem build_saturated_coverage(const SaturatedCoverageSpec& spec) {
  validate(spec);

  long long clone_count = 0;
  for (long long w : spec.universe_weights) clone_count += w;
  check_capacity(static_cast<std::size_t>(clone_count), spec.cap);

  LinearSystem sys;
  sys.n = static_cast<int>(spec.covers.size());
  sys.k = static_cast<int>(spec.cap);
  sys.q = smallest_prime_at_least(clone_count);
  sys.vars.resize(sys.n);

  // Clones belong to universe elements, so items covering the same element
  // share that element's rows.
  std::vector<std::vector<int>> rows_of_element(spec.universe_weights.size());
  long long alpha = 0;
  for (std::size_t u = 0; u < spec.universe_weights.size(); ++u) {
    for (long long c = 0; c < spec.universe_weights[u]; ++c) {
      rows_of_element[u].push_back(static_cast<int>(sys.rows.size()));
      sys.rows.push_back(
          PoolRow{alpha++, "uclone(" + std::to_string(u) + "," + std::to_string(c) + ")"});
    }
  }
  for (int i = 0; i < sys.n; ++i) {
    for (int u : spec.covers[i]) {
      sys.vars[i].insert(sys.vars[i].end(), rows_of_element[u].begin(), rows_of_element[u].end());
    }
    std::sort(sys.vars[i].begin(), sys.vars[i].end());
  }
  return sys;
}

}  // namespace entropic
