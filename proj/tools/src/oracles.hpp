#pragma once

#include <optional>
#include <vector>

#include "clutterlab/clutter.hpp"
#include "clutterlab/covering.hpp"
#include "clutterlab/lattice.hpp"

namespace clutterlab::oracle {

// Brute-force reference implementations, independent of the library's
// algorithmic paths. Desk scale only.

/// Blocker by scanning all 2^n vertex subsets (n <= 14).
Clutter brute_blocker(const Clutter& c);

/// Minimum transversal weight over all 2^n subsets.
long long brute_tau_w(const Clutter& c, const WeightVector& w);
long long brute_tau(const Clutter& c);

/// Maximum matching by scanning all edge subsets (q <= 20).
long long brute_nu(const Clutter& c);

/// gcd of all k x k minors, straight from the definition.
Int minor_gcd_delta(const IntegerMatrix& m, int k);

/// All pairings of the vertex set into 2-blocks with |S ∩ X| = 1 everywhere.
std::vector<std::vector<std::pair<int, int>>> exhaustive_2partitions(const Clutter& c);

/// Lexicographically smallest 0/1 matrix over simultaneous row and column
/// permutations (columns brute-forced, rows sorted; fine up to ~9 columns).
std::vector<std::vector<int>> canonical_01_matrix(const std::vector<std::vector<int>>& m);

/// Largest one-per-pair pick from the exceeder sets, by brute force over all
/// per-pair choices.
int brute_max_selector_size(int pairs, const std::vector<int>& unstarred_exceeder,
                            const std::vector<int>& starred_exceeder);

}  // namespace clutterlab::oracle
