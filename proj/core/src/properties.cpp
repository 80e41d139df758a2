#include "clutterlab/properties.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "clutterlab/combinatorics.hpp"
#include "clutterlab/parallel.hpp"

namespace clutterlab {

bool has_konig(const Clutter& c) {
    if (c.edgeless() || c.has_empty_edge()) return true;  // packs by convention
    return tau(c).value == nu(c).value;
}

PackingReport has_packing_property(const Clutter& c, bool collect_ledger, int universe_limit) {
    PackingReport rep;
    rep.packs = true;
    if (collect_ledger) rep.ledger.emplace();
    for_each_minor(
        c,
        [&](const MinorSpec& spec, const Clutter& m) {
            bool ok = has_konig(m);
            if (collect_ledger) {
                long long t = -1, v = -1;
                if (!m.edgeless() && !m.has_empty_edge()) {
                    t = tau(m).value;
                    v = nu(m).value;
                }
                rep.ledger->emplace_back(spec, t, v);
            }
            if (!ok && rep.packs) {
                rep.packs = false;
                rep.failing = spec;
                if (!collect_ledger) return false;
            }
            return true;
        },
        universe_limit);
    return rep;
}

std::optional<int> mengerian_witness_edge_against(const Clutter& blocker_of_c,
                                                  const std::vector<VSet>& edges,
                                                  const WeightVector& w) {
    long long t = tau_w_value(blocker_of_c, w);
    if (t <= 0) throw PreconditionError("witness edge needs tau^w > 0");
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (tau_w_value(blocker_of_c, w.minus_edge_clamped(edges[k])) == t - 1)
            return static_cast<int>(k);
    return std::nullopt;
}

std::optional<int> mengerian_witness_edge(const Clutter& c, const WeightVector& w) {
    return mengerian_witness_edge_against(blocker(c), c.edges(), w);
}

MengerianReport is_mengerian_bounded(const Clutter& c, long long w_max, bool collect_witnesses,
                                     int polyhedron_limit) {
    MengerianReport rep;
    rep.w_max = w_max;
    rep.ideal = is_ideal(c, polyhedron_limit).ideal;
    if (!rep.ideal) {
        rep.verdict = MengerianVerdict::NotIdeal;
        return rep;
    }
    std::uint64_t total = weight_box_size(c.n(), w_max);
    Clutter b = blocker(c);

    std::vector<std::uint8_t> failed(total, 0);
    std::vector<std::optional<int>> witnesses;
    if (collect_witnesses) witnesses.resize(total);
    std::atomic<std::uint64_t> checked_total{0};

    parallel_for(total, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t checked = 0;
        for (std::uint64_t code = begin; code < end; ++code) {
            WeightVector w = weight_from_code(code, c.n(), w_max);
            long long t = tau_w_value(b, w);
            if (t <= 0) continue;
            ++checked;
            std::optional<int> e = mengerian_witness_edge_against(b, c.edges(), w);
            if (collect_witnesses) witnesses[code] = e;
            if (!e) failed[code] = 1;
        }
        checked_total.fetch_add(checked, std::memory_order_relaxed);
    });

    for (std::uint64_t code = 0; code < total; ++code)
        if (failed[code]) {
            rep.verdict = MengerianVerdict::Fail;
            rep.reason = MengerianFailReason::NoWitnessEdge;
            rep.failing_w = weight_from_code(code, c.n(), w_max);
            break;
        }
    if (!rep.failing_w) rep.verdict = MengerianVerdict::PassBounded;
    rep.checked = checked_total.load();
    if (collect_witnesses) rep.witnesses = std::move(witnesses);
    return rep;
}

namespace {

// Row signature of vertex v: the set of edges containing it.
std::vector<std::uint64_t> row_signatures(const Clutter& c) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(c.n()), 0);
    for (int k = 0; k < c.edge_count(); ++k)
        for (int v : c.edges()[static_cast<std::size_t>(k)].indices())
            rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << k;
    return rows;
}

}  // namespace

bool is_valid_2partition(const Clutter& c, const TwoPartition& part) {
    VSet seen;
    if (static_cast<int>(part.blocks.size()) * 2 != c.n()) return false;
    for (auto [a, b] : part.blocks) {
        if (a == b || a < 0 || b < 0 || a >= c.n() || b >= c.n()) return false;
        if (seen.contains(a) || seen.contains(b)) return false;
        seen.add(a);
        seen.add(b);
        for (const VSet& e : c.edges())
            if (static_cast<int>(e.contains(a)) + static_cast<int>(e.contains(b)) != 1) return false;
    }
    return true;
}

std::optional<TwoPartition> find_2partition(const Clutter& c) {
    if (c.n() % 2 != 0) return std::nullopt;
    auto rows = row_signatures(c);
    std::uint64_t all_edges = c.edge_count() >= 64 ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << c.edge_count()) - 1;
    TwoPartition part;
    VSet used;
    for (int a = 0; a < c.n(); ++a) {
        if (used.contains(a)) continue;
        int partner = -1;
        for (int b = a + 1; b < c.n(); ++b) {
            if (used.contains(b)) continue;
            if ((rows[static_cast<std::size_t>(a)] ^ rows[static_cast<std::size_t>(b)]) == all_edges) {
                partner = b;
                break;
            }
        }
        if (partner < 0) return std::nullopt;
        part.blocks.emplace_back(a, partner);
        used.add(a);
        used.add(partner);
    }
    // Complement-row pairing is forced, so the greedy first match is the
    // lexicographically smallest block list.
    return part;
}

IntegerMatrix b_matrix(const Clutter& c) {
    IntegerMatrix a = incidence(c).matrix;
    IntegerMatrix b(a.rows() + 1, a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) b.at(i, j) = a.at(i, j);
    for (int j = 0; j < a.cols(); ++j) b.at(a.rows(), j) = 1;
    return b;
}

RankPropReport check_rank_prop(const Clutter& c, const TwoPartition& part) {
    if (!is_valid_2partition(c, part)) throw NotTwoPartitionableError();
    RankPropReport rep;
    rep.d = part.d();
    IntegerMatrix a = incidence(c).matrix;
    rep.rank_a = rank_rational(a);
    rep.rank_b = rank_rational(b_matrix(c));
    rep.rank_bound_holds = rep.rank_a <= rep.d + 1;
    rep.rank_a_equals_rank_b = rep.rank_a == rep.rank_b;

    bool cover_of_size_d = false;
    if (!c.edgeless() && !c.has_empty_edge()) {
        Clutter b = blocker(c);
        for (const VSet& t : b.edges())
            if (t.count() == rep.d) {
                cover_of_size_d = true;
                break;
            }
    }
    rep.konig_case_applies = cover_of_size_d && rep.d >= 3 && has_konig(c);
    if (rep.konig_case_applies) rep.konig_case_rank_ok = rep.rank_a == rep.d + 1;
    return rep;
}

DichotomyReport check_minor_dichotomy(const Clutter& c, const TwoPartition& part,
                                      const MinorSpec& spec) {
    if (!is_valid_2partition(c, part)) throw NotTwoPartitionableError();
    if (!spec.proper()) throw PreconditionError("the minor must be proper");
    if (spec.deletions.intersects(spec.contractions))
        throw PreconditionError("deletion and contraction sets overlap");
    DichotomyReport rep;
    for (int i = 0; i < part.d(); ++i) {
        auto [a, b] = part.blocks[static_cast<std::size_t>(i)];
        if (!spec.contractions.contains(a) && !spec.contractions.contains(b))
            rep.qualifying_blocks.push_back(i);
    }
    if (rep.qualifying_blocks.empty())
        throw PreconditionError("the contraction set meets every block");
    rep.minor_konig = has_konig(minor(c, spec));
    rep.holds = rep.minor_konig;
    if (!rep.holds) {
        bool all_missed = true;
        for (int i : rep.qualifying_blocks) {
            auto [a, b] = part.blocks[static_cast<std::size_t>(i)];
            if (spec.deletions.contains(a) || spec.deletions.contains(b)) all_missed = false;
        }
        rep.holds = all_missed;
    }
    return rep;
}

ClassifyReport classify(const Clutter& c, int balanced_limit) {
    ClassifyReport rep;
    rep.balanced_limit = balanced_limit;

    // Binary: the symmetric difference of any three edges contains an edge.
    rep.binary = true;
    const auto& edges = c.edges();
    for (std::size_t i = 0; i < edges.size() && rep.binary; ++i)
        for (std::size_t j = 0; j < edges.size() && rep.binary; ++j)
            for (std::size_t k = 0; k < edges.size() && rep.binary; ++k) {
                VSet sym((edges[i].bits() ^ edges[j].bits()) ^ edges[k].bits());
                bool contains_edge = false;
                for (const VSet& e : edges)
                    if (e.subset_of(sym)) {
                        contains_edge = true;
                        break;
                    }
                if (!contains_edge) rep.binary = false;
            }

    // Dyadic: every (edge, blocker member) pair meets in at most 2 vertices.
    rep.dyadic = true;
    if (!c.edgeless() && !c.has_empty_edge()) {
        Clutter b = blocker(c);
        for (const VSet& e : edges)
            for (const VSet& t : b.edges())
                if ((e & t).count() > 2) {
                    rep.dyadic = false;
                    break;
                }
    }

    // Balanced: no odd-order square submatrix with exactly two 1s per row and
    // per column, orders 3..balanced_limit.
    rep.balanced = true;
    auto rows = row_signatures(c);
    int n = c.n(), q = c.edge_count();
    for (int order = 3; order <= balanced_limit && rep.balanced; order += 2) {
        if (order > n || order > q) break;
        for_each_combination(n, order, [&](const std::vector<int>& row_idx) {
            return for_each_combination(q, order, [&](const std::vector<int>& col_idx) {
                std::uint64_t col_mask = 0;
                for (int cix : col_idx) col_mask |= std::uint64_t{1} << cix;
                for (int r : row_idx)
                    if (std::popcount(rows[static_cast<std::size_t>(r)] & col_mask) != 2) return true;
                VSet row_mask;
                for (int r : row_idx) row_mask.add(r);
                for (int cix : col_idx)
                    if ((edges[static_cast<std::size_t>(cix)] & row_mask).count() != 2) return true;
                rep.balanced = false;
                return false;
            });
        });
    }
    return rep;
}

}  // namespace clutterlab
