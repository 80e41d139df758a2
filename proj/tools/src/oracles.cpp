#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "clutterlab/combinatorics.hpp"

namespace clutterlab::oracle {

Clutter brute_blocker(const Clutter& c) {
    if (c.n() > 14) throw UniverseTooLargeError("brute-force blocker limited to 14 vertices");
    if (c.edgeless() || c.has_empty_edge()) return Clutter::minimal_of(c.universe(), {});
    std::vector<VSet> transversals;
    std::uint64_t full = (std::uint64_t{1} << c.n()) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        VSet t(mask);
        bool hits_all = true;
        for (const VSet& e : c.edges())
            if (!e.intersects(t)) {
                hits_all = false;
                break;
            }
        if (hits_all) transversals.push_back(t);
    }
    return Clutter::minimal_of(c.universe(), transversals);
}

long long brute_tau_w(const Clutter& c, const WeightVector& w) {
    if (c.has_empty_edge()) throw EmptyEdgeError();
    if (c.edgeless()) return 0;
    if (c.n() > 14) throw UniverseTooLargeError("brute-force tau limited to 14 vertices");
    std::uint64_t full = (std::uint64_t{1} << c.n()) - 1;
    std::optional<long long> best;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        VSet t(mask);
        bool hits_all = true;
        for (const VSet& e : c.edges())
            if (!e.intersects(t)) {
                hits_all = false;
                break;
            }
        if (!hits_all) continue;
        long long v = w.weight_of(t);
        if (!best || v < *best) best = v;
    }
    return *best;
}

long long brute_tau(const Clutter& c) {
    return brute_tau_w(c, WeightVector::uniform(c.n(), 1));
}

long long brute_nu(const Clutter& c) {
    if (c.edge_count() > 20) throw UniverseTooLargeError("brute-force nu limited to 20 edges");
    long long best = 0;
    std::uint64_t total = std::uint64_t{1} << c.edge_count();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        VSet used;
        bool disjoint = true;
        long long size = 0;
        for (int k = 0; k < c.edge_count() && disjoint; ++k) {
            if (!((mask >> k) & 1)) continue;
            const VSet& e = c.edges()[static_cast<std::size_t>(k)];
            if (e.intersects(used)) disjoint = false;
            used |= e;
            ++size;
        }
        if (disjoint) best = std::max(best, size);
    }
    return best;
}

Int minor_gcd_delta(const IntegerMatrix& m, int k) {
    Int g = 0;
    for_each_combination(m.rows(), k, [&](const std::vector<int>& rows) {
        return for_each_combination(m.cols(), k, [&](const std::vector<int>& cols) {
            Int d = determinant(m.submatrix(rows, cols));
            if (d != 0) g = gcd(g, abs(d));
            return true;
        });
    });
    return g;
}

namespace {

void pairings(int n, VSet used, std::vector<std::pair<int, int>>& cur, const Clutter& c,
              std::vector<std::vector<std::pair<int, int>>>& out) {
    if (static_cast<int>(cur.size()) * 2 == n) {
        out.push_back(cur);
        return;
    }
    int a = 0;
    while (used.contains(a)) ++a;
    for (int b = a + 1; b < n; ++b) {
        if (used.contains(b)) continue;
        bool ok = true;
        for (const VSet& e : c.edges())
            if (static_cast<int>(e.contains(a)) + static_cast<int>(e.contains(b)) != 1) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.emplace_back(a, b);
        pairings(n, used.with(a).with(b), cur, c, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> exhaustive_2partitions(const Clutter& c) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (c.n() % 2 != 0 || c.n() > 10) return out;
    std::vector<std::pair<int, int>> cur;
    pairings(c.n(), VSet{}, cur, c, out);
    return out;
}

std::vector<std::vector<int>> canonical_01_matrix(const std::vector<std::vector<int>>& m) {
    if (m.empty()) return m;
    int cols = static_cast<int>(m[0].size());
    std::vector<int> perm(static_cast<std::size_t>(cols));
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<std::vector<int>>> best;
    do {
        std::vector<std::vector<int>> cand;
        cand.reserve(m.size());
        for (const auto& row : m) {
            std::vector<int> r(static_cast<std::size_t>(cols));
            for (int j = 0; j < cols; ++j) r[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            cand.push_back(std::move(r));
        }
        std::sort(cand.begin(), cand.end());
        if (!best || cand < *best) best = std::move(cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

int brute_max_selector_size(int pairs, const std::vector<int>& unstarred_exceeder,
                            const std::vector<int>& starred_exceeder) {
    long long total = 1;
    for (int i = 0; i < pairs; ++i) total *= 3;
    int best = 0;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        int size = 0;
        bool valid = true;
        for (int i = 0; i < pairs && valid; ++i) {
            int choice = static_cast<int>(rest % 3);  // 0 skip, 1 unstarred, 2 starred
            rest /= 3;
            if (choice == 1) {
                if (unstarred_exceeder[static_cast<std::size_t>(i)]) ++size;
                else valid = false;
            } else if (choice == 2) {
                if (starred_exceeder[static_cast<std::size_t>(i)]) ++size;
                else valid = false;
            }
        }
        if (valid) best = std::max(best, size);
    }
    return best;
}

}  // namespace clutterlab::oracle
