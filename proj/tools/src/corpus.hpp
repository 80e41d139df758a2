#pragma once

#include <cstdint>

#include "clutterlab/clutter.hpp"
#include "clutterlab/covering.hpp"

namespace clutterlab::corpus {

/// splitmix64: tiny, fully pinned generator so corpora are identical across
/// platforms and standard libraries.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, m); bias is irrelevant for test corpora.
    std::uint64_t bounded(std::uint64_t m) { return next() % m; }
};

/// Random clutter on exactly n vertices: up to max_edges random nonempty
/// subsets, minimalized. Never contains the empty edge; never edgeless.
Clutter random_clutter(Rng& rng, int n, int max_edges);

/// Random clutter with n drawn from [n_min, n_max].
Clutter random_clutter_sized(Rng& rng, int n_min, int n_max, int max_edges);

/// Random 2-partitionable clutter on d blocks {2i, 2i+1}: one-per-pair edges.
Clutter random_two_partitionable(Rng& rng, int d, int max_edges);

WeightVector random_weight(Rng& rng, int n, long long w_max);

}  // namespace clutterlab::corpus
