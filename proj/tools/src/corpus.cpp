#include "corpus.hpp"

namespace clutterlab::corpus {

Clutter random_clutter(Rng& rng, int n, int max_edges) {
    int k = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_edges)));
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<VSet> edges;
    for (int i = 0; i < k; ++i) {
        std::uint64_t mask = 0;
        while (mask == 0) mask = rng.next() & full;
        edges.emplace_back(mask);
    }
    return Clutter::minimal_of(VertexUniverse::numbered(n), edges);
}

Clutter random_clutter_sized(Rng& rng, int n_min, int n_max, int max_edges) {
    int n = n_min + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n_max - n_min + 1)));
    return random_clutter(rng, n, max_edges);
}

Clutter random_two_partitionable(Rng& rng, int d, int max_edges) {
    int k = 2 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_edges - 1)));
    std::vector<VSet> edges;
    for (int e = 0; e < k; ++e) {
        VSet s;
        for (int i = 0; i < d; ++i) s.add(2 * i + static_cast<int>(rng.bounded(2)));
        edges.push_back(s);
    }
    return Clutter::minimal_of(VertexUniverse::numbered(2 * d), edges);
}

WeightVector random_weight(Rng& rng, int n, long long w_max) {
    std::vector<long long> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(w_max + 1)));
    return WeightVector(std::move(w));
}

}  // namespace clutterlab::corpus
