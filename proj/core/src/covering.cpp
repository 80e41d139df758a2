#include "clutterlab/covering.hpp"

#include <algorithm>
#include <numeric>

#include "clutterlab/parallel.hpp"

namespace clutterlab {

WeightVector::WeightVector(std::vector<long long> values) : w(std::move(values)) {
    for (long long x : w)
        if (x < 0) throw Error("weights must be nonnegative");
}

WeightVector WeightVector::uniform(int n, long long value) {
    return WeightVector(std::vector<long long>(static_cast<std::size_t>(n), value));
}

long long WeightVector::weight_of(VSet s) const {
    long long sum = 0;
    for (int i : s.indices()) sum += w[static_cast<std::size_t>(i)];
    return sum;
}

WeightVector WeightVector::minus_edge_clamped(VSet e) const {
    WeightVector out = *this;
    for (int i : e.indices()) {
        auto& x = out.w[static_cast<std::size_t>(i)];
        if (x > 0) --x;
    }
    return out;
}

std::uint64_t weight_box_size(int n, long long w_max) {
    constexpr std::uint64_t kBudget = 64ull * 1000 * 1000;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(w_max + 1);
        if (total > kBudget)
            throw BoundTooLargeError("weight box (w_max+1)^n exceeds the enumeration budget");
    }
    return total;
}

WeightVector weight_from_code(std::uint64_t code, int n, long long w_max) {
    std::vector<long long> w(static_cast<std::size_t>(n));
    std::uint64_t base = static_cast<std::uint64_t>(w_max + 1);
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = static_cast<long long>(code % base);
        code /= base;
    }
    return WeightVector(std::move(w));
}

long long tau_w_value(const Clutter& blocker_of_c, const WeightVector& w) {
    bool first = true;
    long long best = 0;
    for (const VSet& t : blocker_of_c.edges()) {
        long long v = w.weight_of(t);
        if (first || v < best) best = v;
        first = false;
    }
    return first ? 0 : best;  // edgeless blocker: nothing to cover
}

OptReport tau_w(const Clutter& c, const WeightVector& w) {
    if (c.has_empty_edge()) throw EmptyEdgeError();
    OptReport r;
    r.problem = "tau_w";
    r.method = "blocker-min";
    if (c.edgeless()) {
        r.cover = VSet{};
        return r;
    }
    Clutter b = blocker(c);
    bool first = true;
    for (const VSet& t : b.edges()) {
        long long v = w.weight_of(t);
        if (first || v < r.value) {
            r.value = v;
            r.cover = t;
        }
        first = false;
    }
    return r;
}

OptReport tau(const Clutter& c) {
    OptReport r = tau_w(c, WeightVector::uniform(c.n(), 1));
    r.problem = "tau";
    return r;
}

namespace {

struct PackingSearch {
    const std::vector<VSet>& edges;
    std::vector<long long> residual;
    std::vector<long long> best_y;
    std::vector<long long> cur_y;
    long long best = -1;
    long long min_edge_size;

    long long cap(const VSet& e) const {
        long long m = -1;
        for (int v : e.indices()) {
            long long r = residual[static_cast<std::size_t>(v)];
            if (m < 0 || r < m) m = r;
        }
        return m < 0 ? 0 : m;  // guarded: empty edges are rejected upstream
    }

    long long upper_bound(std::size_t k) const {
        long long cap_sum = 0;
        for (std::size_t j = k; j < edges.size(); ++j) cap_sum += cap(edges[j]);
        long long weight_sum = std::accumulate(residual.begin(), residual.end(), 0ll);
        long long by_weight = min_edge_size > 0 ? weight_sum / min_edge_size : 0;
        return std::min(cap_sum, by_weight);
    }

    void dfs(std::size_t k, long long total) {
        if (total > best) {
            best = total;
            best_y = cur_y;
        }
        if (k == edges.size()) return;
        if (total + upper_bound(k) <= best) return;
        long long c = cap(edges[k]);
        for (long long m = c; m >= 0; --m) {
            cur_y[k] = m;
            for (int v : edges[k].indices()) residual[static_cast<std::size_t>(v)] -= m;
            dfs(k + 1, total + m);
            for (int v : edges[k].indices()) residual[static_cast<std::size_t>(v)] += m;
            cur_y[k] = 0;
        }
    }
};

}  // namespace

OptReport nu_w(const Clutter& c, const WeightVector& w) {
    if (c.has_empty_edge())
        throw EmptyEdgeError("weighted packing is unbounded on the empty edge");
    OptReport r;
    r.problem = "nu_w";
    r.method = "branch-and-bound";
    if (c.edgeless()) {
        r.packing = std::vector<long long>{};
        return r;
    }
    long long min_size = c.edges().front().count();
    for (const VSet& e : c.edges()) min_size = std::min<long long>(min_size, e.count());
    PackingSearch s{c.edges(), w.w, {}, std::vector<long long>(c.edges().size(), 0), -1, min_size};
    s.dfs(0, 0);
    r.value = s.best;
    r.packing = s.best_y;
    return r;
}

OptReport nu(const Clutter& c) {
    OptReport r;
    if (c.has_empty_edge()) {
        // {∅} is a clutter on its own; the single empty edge is a matching.
        r.problem = "nu";
        r.method = "branch-and-bound";
        r.value = 1;
        r.packing = std::vector<long long>(c.edges().size(), 0);
        (*r.packing)[0] = 1;
        return r;
    }
    r = nu_w(c, WeightVector::uniform(c.n(), 1));
    r.problem = "nu";
    return r;
}

bool recheck(const Clutter& c, const WeightVector& w, const OptReport& r) {
    if (r.cover) {
        for (const VSet& e : c.edges())
            if (!e.intersects(*r.cover)) return false;
        return w.weight_of(*r.cover) == r.value;
    }
    if (r.packing) {
        const auto& y = *r.packing;
        if (y.size() != c.edges().size()) return false;
        long long total = 0;
        std::vector<long long> load(static_cast<std::size_t>(c.n()), 0);
        for (std::size_t k = 0; k < y.size(); ++k) {
            if (y[k] < 0) return false;
            total += y[k];
            for (int v : c.edges()[k].indices()) load[static_cast<std::size_t>(v)] += y[k];
        }
        for (int i = 0; i < c.n(); ++i)
            if (load[static_cast<std::size_t>(i)] > w.at(i)) return false;
        return total == r.value;
    }
    return false;
}

namespace {

// Solves the n x n rational system; nullopt when singular.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
    std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

std::vector<std::vector<int>> combinations(int total, int choose) {
    std::vector<std::vector<int>> out;
    if (choose < 0 || choose > total) return out;
    std::vector<int> idx(static_cast<std::size_t>(choose));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = choose - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - choose + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < choose; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void dedup_points(std::vector<RationalPoint>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<RationalPoint> polyhedron_vertices(const Clutter& c, int universe_limit) {
    if (c.n() > universe_limit)
        throw UniverseTooLargeError("polyhedron vertex enumeration limited to " +
                                    std::to_string(universe_limit) + " vertices");
    int n = c.n();
    int q = c.edge_count();
    if (n == 0) return {};
    if (c.has_empty_edge()) return {};  // 0 >= 1 is infeasible

    // Constraint rows 0..n-1: x_i = 0; rows n..n+q-1: <v_k, x> = 1.
    auto combos = combinations(n + q, n);
    std::vector<std::vector<RationalPoint>> found(combos.size());
    parallel_for(combos.size(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t ci = begin; ci < end; ++ci) {
            const auto& combo = combos[ci];
            std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n),
                                            std::vector<Rat>(static_cast<std::size_t>(n)));
            std::vector<Rat> rhs(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                int which = combo[static_cast<std::size_t>(r)];
                if (which < n) {
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(which)] = 1;
                    rhs[static_cast<std::size_t>(r)] = 0;
                } else {
                    const VSet& e = c.edges()[static_cast<std::size_t>(which - n)];
                    for (int i : e.indices())
                        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = 1;
                    rhs[static_cast<std::size_t>(r)] = 1;
                }
            }
            auto x = solve_exact(std::move(m), std::move(rhs));
            if (!x) continue;
            bool feasible = true;
            for (const Rat& v : *x)
                if (v < 0) {
                    feasible = false;
                    break;
                }
            if (feasible)
                for (const VSet& e : c.edges()) {
                    Rat sum = 0;
                    for (int i : e.indices()) sum += (*x)[static_cast<std::size_t>(i)];
                    if (sum < 1) {
                        feasible = false;
                        break;
                    }
                }
            if (feasible) found[ci].push_back(std::move(*x));
        }
    });
    std::vector<RationalPoint> vertices;
    for (auto& chunk : found)
        for (auto& p : chunk) vertices.push_back(std::move(p));
    dedup_points(vertices);
    return vertices;
}

IdealReport is_ideal(const Clutter& c, int universe_limit) {
    IdealReport rep;
    rep.ideal = true;
    for (const RationalPoint& p : polyhedron_vertices(c, universe_limit)) {
        for (const Rat& x : p)
            if (denominator(x) != 1) {
                rep.ideal = false;
                rep.fractional_vertex = p;
                return rep;
            }
    }
    return rep;
}

LpValues lp_values(const Clutter& c, const WeightVector& w, int universe_limit) {
    if (c.has_empty_edge()) throw EmptyEdgeError();
    LpValues out;

    // Primal: w >= 0, so the minimum over Q(A) is attained at a vertex.
    bool first = true;
    for (const RationalPoint& p : polyhedron_vertices(c, universe_limit)) {
        Rat v = 0;
        for (int i = 0; i < c.n(); ++i) v += Rat(w.at(i)) * p[static_cast<std::size_t>(i)];
        if (first || v < out.primal_min) out.primal_min = v;
        first = false;
    }
    if (first) out.primal_min = 0;  // edgeless: the origin

    // Dual polytope {y >= 0, Ay <= w}: q variables, tight sets of q constraints.
    int n = c.n();
    int q = c.edge_count();
    out.dual_max = 0;
    if (q > 0) {
        auto combos = combinations(n + q, q);
        std::vector<Rat> best_per_chunk;
        for (const auto& combo : combos) {
            std::vector<std::vector<Rat>> m(static_cast<std::size_t>(q),
                                            std::vector<Rat>(static_cast<std::size_t>(q)));
            std::vector<Rat> rhs(static_cast<std::size_t>(q));
            for (int r = 0; r < q; ++r) {
                int which = combo[static_cast<std::size_t>(r)];
                if (which < q) {
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(which)] = 1;
                    rhs[static_cast<std::size_t>(r)] = 0;
                } else {
                    int vertex = which - q;
                    for (int k = 0; k < q; ++k)
                        if (c.edges()[static_cast<std::size_t>(k)].contains(vertex))
                            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = 1;
                    rhs[static_cast<std::size_t>(r)] = w.at(vertex);
                }
            }
            auto y = solve_exact(std::move(m), std::move(rhs));
            if (!y) continue;
            bool feasible = true;
            for (const Rat& v : *y)
                if (v < 0) {
                    feasible = false;
                    break;
                }
            if (feasible)
                for (int i = 0; i < n && feasible; ++i) {
                    Rat load = 0;
                    for (int k = 0; k < q; ++k)
                        if (c.edges()[static_cast<std::size_t>(k)].contains(i))
                            load += (*y)[static_cast<std::size_t>(k)];
                    if (load > w.at(i)) feasible = false;
                }
            if (!feasible) continue;
            Rat total = 0;
            for (const Rat& v : *y) total += v;
            if (total > out.dual_max) out.dual_max = total;
        }
    }
    return out;
}

}  // namespace clutterlab
