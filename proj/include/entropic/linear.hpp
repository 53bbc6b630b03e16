#pragma once

#include <string>
#include <vector>

#include "entropic/setfn.hpp"
#include "entropic/zoo.hpp"

namespace entropic {

// Realizations as linear measurements of a uniform source vector over a prime
// field GF(q). Each pool row is the Vandermonde row (1, a, a^2, ..., a^{k-1})
// of its evaluation point; the entropy of a subset is the rank of its rows,
// in units of log q.

bool is_prime(long long q);
long long smallest_prime_at_least(long long x);  // never below 2

long long mod_inverse(long long a, long long q);

// Row rank over GF(q) by Gaussian elimination. Entries are reduced mod q.
int gf_rank(std::vector<std::vector<long long>> rows, long long q);

std::vector<long long> vandermonde_row(long long alpha, int k, long long q);

struct PoolRow {
  long long alpha = 0;
  std::string provenance;  // e.g. "item(2)", "clone(1,0)", "uclone(0,1)"
};

struct LinearSystem {
  int n = 0;
  long long q = 2;  // prime, >= pool size
  int k = 0;        // source dimension = truncation level
  std::vector<PoolRow> rows;
  std::vector<std::vector<int>> vars;  // per ground element, sorted row indices
};

struct RankEntropy {
  int rank = 0;
  long long q = 2;  // the entropy is rank * log q
};

// Rank of the union of the row sets of the selected elements (shared rows
// deduplicated).
RankEntropy linear_entropy(const LinearSystem& sys, SubsetMask subset);

// Table of ranks (integer values, unit log q).
SetFunctionTable tabulate(const LinearSystem& sys);

// min(|A|, k) via one Vandermonde row per element; q = smallest prime >= n.
LinearSystem build_card_truncation(int n, int k);

// min(w(A), k) via w_i clone rows per element; q = smallest prime >= total
// clone count (and >= 2).
LinearSystem build_weighted_truncation(const std::vector<long long>& weights, long long k);

// min(covered weight, cap) via w_u clone rows per universe element, shared
// between all items covering it; source dimension k = cap.
LinearSystem build_saturated_coverage(const SaturatedCoverageSpec& spec);

}  // namespace entropic
