#include "verify_suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "clutterlab/decompose.hpp"
#include "clutterlab/io.hpp"
#include "clutterlab/properties.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

namespace clutterlab::verify {

namespace {

using corpus::Rng;

struct Ctx {
    Scale scale;
    std::uint64_t seed;
    bool ok = true;
    std::vector<std::string> notes;

    bool full() const { return scale == Scale::Full; }

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
    void budget(long long elapsed_ms, long long budget_ms) {
        if (full()) check(elapsed_ms < budget_ms,
                          "runtime " + std::to_string(elapsed_ms) + " ms over the " +
                              std::to_string(budget_ms) + " ms budget");
    }
};

std::string fspec_name(const FSpec& f) { return f.to_string(); }

std::vector<std::pair<int, int>> grid(const Ctx& ctx) {
    if (ctx.full()) return {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    return {{1, 1}, {2, 1}, {1, 2}};
}

bool is_degenerate_case_ii(int p, int q, const FSpec& f) {
    return p == 1 && q == 1 && f.kind == FKind::CaseII && f.mask == 0xFu;
}

// ---------------------------------------------------------------- criterion 1

const std::vector<std::vector<int>>& displayed_q21_transpose() {
    static const std::vector<std::vector<int>> m = {
        {1, 1, 0, 0, 1, 0, 1, 0}, {1, 0, 0, 1, 1, 0, 1, 0}, {0, 1, 1, 0, 1, 0, 1, 0},
        {0, 0, 1, 1, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 1, 1, 0}, {1, 0, 0, 1, 0, 1, 1, 0},
        {1, 1, 0, 0, 0, 1, 0, 1}, {0, 0, 1, 1, 1, 0, 0, 1}};
    return m;
}

std::vector<std::vector<int>> transpose_rows(const QpqDescriptor& d) {
    std::vector<std::vector<int>> rows;
    for (const VSet& e : d.construction_edges()) {
        std::vector<int> row(static_cast<std::size_t>(d.n()), 0);
        for (int v : e.indices()) row[static_cast<std::size_t>(v)] = 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

void criterion_q21_matrix(Ctx& ctx) {
    QpqDescriptor d = generate_qpq(2, 1);
    auto rows = transpose_rows(d);
    const auto& shown = displayed_q21_transpose();
    ctx.check(rows.size() == 8 && shown.size() == 8, "both matrices are 8x8");

    // Pinned ordering: construction row i is shown row map[i] (binary-counting
    // subsets inside each block versus the published row order).
    const int map[8] = {1, 2, 0, 4, 5, 3, 6, 7};
    bool exact = true;
    for (int i = 0; i < 8; ++i)
        if (rows[static_cast<std::size_t>(i)] != shown[static_cast<std::size_t>(map[i])]) exact = false;
    ctx.check(exact, "exact match under the pinned row mapping (2,3,1,5,6,4,7,8)");

    ctx.check(oracle::canonical_01_matrix(rows) == oracle::canonical_01_matrix(shown),
              "canonical forms agree under simultaneous row/column permutation");
    ctx.note("pinned row mapping to the published matrix: (2,3,1,5,6,4,7,8)");
}

// ---------------------------------------------------------------- criterion 2

void criterion_blocker_formula(Ctx& ctx) {
    for (auto [p, q] : grid(ctx)) {
        QpqDescriptor base = generate_qpq(p, q);
        ctx.check(blocker_formula_qpq(p, q) == oracle::brute_blocker(base.clutter()),
                  "plain blocker formula at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        for (unsigned mask = 1; mask <= 0xFu; ++mask) {
            for (FSpec f : {FSpec::case_i(mask), FSpec::case_ii(mask)}) {
                QpqDescriptor d = generate_qpq_f(p, q, f);
                if (!(blocker_formula_qpq_f(d) == oracle::brute_blocker(d.clutter()))) {
                    ctx.check(false, "blocker formula vs brute force at (" + std::to_string(p) + "," +
                                         std::to_string(q) + ") " + fspec_name(f));
                }
            }
        }
    }
    ctx.note("all Case I and Case II subsets on every grid point agree with brute force");
}

// ---------------------------------------------------------------- criterion 3

void criterion_mnp_q11(Ctx& ctx) {
    Clutter q11 = generate_qpq(1, 1).clutter();
    ctx.check(oracle::brute_tau(q11) == 2, "tau(Q_11) = 2 by brute force");
    ctx.check(oracle::brute_nu(q11) == 1, "nu(Q_11) = 1 by brute force");
    ctx.check(!has_konig(q11), "Q_11 fails the König property");
    long long proper_checked = 0;
    bool all_proper_pack = true;
    for_each_minor(q11, [&](const MinorSpec& spec, const Clutter& m) {
        if (spec.proper()) {
            ++proper_checked;
            if (!has_konig(m)) all_proper_pack = false;
        }
        return true;
    });
    ctx.check(proper_checked == 728, "728 proper minors enumerated");
    ctx.check(all_proper_pack, "every proper minor has the König property");
    PackingReport rep = has_packing_property(q11);
    ctx.check(!rep.packs && rep.failing && rep.failing->empty(),
              "packing report pins the failure on the clutter itself");
}

// ---------------------------------------------------------------- criterion 4

void criterion_packing_family(Ctx& ctx) {
    for (auto [p, q] : grid(ctx)) {
        for (FSpec f : {FSpec::case_i_all(), FSpec::case_ii(0xFu)}) {
            QpqDescriptor d = generate_qpq_f(p, q, f);
            std::string point =
                "(" + std::to_string(p) + "," + std::to_string(q) + ") " + fspec_name(f);
            PackingReport rep = has_packing_property(d.clutter());
            if (is_degenerate_case_ii(p, q, f)) {
                // At p=q=1 the special quad is the whole edge set, so Case II
                // resolves to an empty augmentation and the clutter collapses
                // to Q_11 itself, which is minimally non-packing. Reported
                // informationally; the packing theorem's hypothesis excludes it.
                ctx.check(d.f_edges.empty() && d.clutter() == generate_qpq(1, 1).clutter(),
                          "degenerate point resolves to plain Q_11");
                ctx.check(!rep.packs && rep.failing && rep.failing->empty(),
                          "degenerate point fails packing exactly like Q_11");
                ctx.note("info: " + point + " degenerates to Q_11 (empty F) and does not pack");
            } else {
                ctx.check(rep.packs, "packing property at " + point);
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion_mengerian_bounded(Ctx& ctx) {
    struct Point {
        int p, q;
        long long w_max;
    };
    std::vector<Point> points = ctx.full() ? std::vector<Point>{{1, 1, 3}, {2, 1, 2}}
                                           : std::vector<Point>{{1, 1, 2}};
    for (auto [p, q, w_max] : points) {
        QpqDescriptor d = generate_qpq_f(p, q, FSpec::case_i_all());
        Clutter c = d.clutter();
        MengerianReport rep = is_mengerian_bounded(c, w_max, /*collect_witnesses=*/true);
        std::string point = "(" + std::to_string(p) + "," + std::to_string(q) + ") w_max=" +
                            std::to_string(w_max);
        ctx.check(rep.ideal, "ideal gate at " + point);
        ctx.check(rep.verdict == MengerianVerdict::PassBounded, "pass-bounded at " + point);
        // every weight vector with tau > 0 carries a witness edge
        Clutter b = blocker(c);
        std::uint64_t total = weight_box_size(c.n(), w_max);
        bool all_witnessed = true;
        for (std::uint64_t code = 0; code < total; ++code) {
            WeightVector w = weight_from_code(code, c.n(), w_max);
            bool positive = tau_w_value(b, w) > 0;
            bool witnessed = rep.witnesses && (*rep.witnesses)[code].has_value();
            if (positive != witnessed) all_witnessed = false;
        }
        ctx.check(all_witnessed, "witness edge recorded for every positive tau at " + point);
        ctx.note(point + ": " + std::to_string(rep.checked) + " weight vectors verified");
    }
}

// ---------------------------------------------------------------- criterion 6

void criterion_mengerian_equivalence(Ctx& ctx) {
    Rng rng(ctx.seed);
    int instances = ctx.full() ? 200 : 60;
    int ideal_count = 0;
    for (int i = 0; i < instances; ++i) {
        Clutter c = corpus::random_clutter(rng, 5, 8);
        if (!is_ideal(c).ideal) continue;
        ++ideal_count;
        MengerianReport rep = is_mengerian_bounded(c, 3);
        bool direct = true;
        std::uint64_t total = weight_box_size(5, 3);
        for (std::uint64_t code = 0; code < total && direct; ++code) {
            WeightVector w = weight_from_code(code, 5, 3);
            if (oracle::brute_tau_w(c, w) != nu_w(c, w).value) direct = false;
        }
        if ((rep.verdict == MengerianVerdict::PassBounded) != direct)
            ctx.check(false, "bounded witness check disagrees with direct tau=nu at instance " +
                                 std::to_string(i));
    }
    ctx.note(std::to_string(ideal_count) + " of " + std::to_string(instances) +
             " random 5-vertex clutters were ideal; bounded check matched direct verification on all");
}

// ---------------------------------------------------------------- criterion 7

IntegerMatrix l_submatrix(const QpqDescriptor& d) {
    std::vector<VSet> row_edges;
    for (int j = 0; j < d.q; ++j) {  // P (Q \ q_j) q_j* r*
        VSet e = d.p_block() | VSet::single(d.q_star_vertex(j)) | VSet::single(d.r_star_vertex());
        for (int l = 0; l < d.q; ++l)
            if (l != j) e.add(d.q_vertex(l));
        row_edges.push_back(e);
    }
    row_edges.push_back(d.p_block() | d.q_block() | VSet::single(d.r_vertex()));  // PQr
    for (int i = 0; i < d.p; ++i) {  // (P \ p_i) p_i* Q r
        VSet e = VSet::single(d.p_star_vertex(i)) | d.q_block() | VSet::single(d.r_vertex());
        for (int l = 0; l < d.p; ++l)
            if (l != i) e.add(d.p_vertex(l));
        row_edges.push_back(e);
    }
    row_edges.push_back(d.p_star_block() | d.q_block() | VSet::single(d.r_star_vertex()));  // P*Qr*

    std::vector<int> cols;
    for (int i = 0; i < d.p; ++i) cols.push_back(d.p_star_vertex(i));
    for (int j = 0; j < d.q; ++j) cols.push_back(d.q_star_vertex(j));
    cols.push_back(d.r_star_vertex());
    cols.push_back(d.r_vertex());

    IntegerMatrix l(static_cast<int>(row_edges.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < row_edges.size(); ++r) {
        bool is_edge = std::find(d.base_edges.begin(), d.base_edges.end(), row_edges[r]) !=
                       d.base_edges.end();
        if (!is_edge) throw Error("selected L row is not a base edge");
        for (std::size_t c = 0; c < cols.size(); ++c)
            l.at(static_cast<int>(r), static_cast<int>(c)) =
                row_edges[r].contains(cols[c]) ? 1 : 0;
    }
    return l;
}

void criterion_delta_r(Ctx& ctx) {
    for (auto [p, q] : grid(ctx)) {
        for (FSpec f : {FSpec::case_i_all(), FSpec::case_ii(0xFu)}) {
            QpqDescriptor d = generate_qpq_f(p, q, f);
            IntegerMatrix b = b_matrix(d.clutter());
            std::string point =
                "(" + std::to_string(p) + "," + std::to_string(q) + ") " + fspec_name(f);
            if (is_degenerate_case_ii(p, q, f)) {
                // Plain Q_11: columns sum to 0 mod 2, so every top minor is
                // even; the lattice is not free. The computed truth is pinned
                // here instead of the theorem-grid assertion.
                ctx.check(delta_r(b) == 2 && !group_is_free(b) && rank_rational(b) == 4,
                          "degenerate point has delta_r = 2 on rank 4 and a non-free quotient");
                ctx.note("info: " + point + " degenerates to Q_11 with delta_r = 2 (not free)");
            } else {
                ctx.check(delta_r(b) == 1, "delta_r(B) = 1 at " + point);
                ctx.check(group_is_free(b), "free quotient at " + point);
            }
        }
    }
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}}) {
        if (!ctx.full() && p + q >= 4) continue;
        QpqDescriptor d = generate_qpq_f(p, q, FSpec::case_i_all());
        Int det = determinant(l_submatrix(d));
        ctx.check(abs(det) == 1, "distinguished (p+q+2)-square edge submatrix has unit determinant");
    }

    Rng rng(ctx.seed + 7);
    int matrices = ctx.full() ? 100 : 40;
    for (int t = 0; t < matrices; ++t) {
        int rows = 2 + static_cast<int>(rng.bounded(4));
        int cols = 2 + static_cast<int>(rng.bounded(4));
        IntegerMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = static_cast<long long>(rng.bounded(7)) - 3;
        SmithForm s = smith_normal_form(m);
        ctx.check(s.rank() == rank_rational(m), "SNF rank matches rational rank");
        for (int k = 1; k <= s.rank(); ++k)
            if (s.delta(k) != oracle::minor_gcd_delta(m, k))
                ctx.check(false, "Delta_" + std::to_string(k) + " disagrees with the minor gcd at matrix " +
                                     std::to_string(t));
        if (s.rank() < std::min(rows, cols))
            ctx.check(oracle::minor_gcd_delta(m, s.rank() + 1) == 0,
                      "all (rank+1)-minors vanish at matrix " + std::to_string(t));
    }
    ctx.note(std::to_string(matrices) + " random matrices cross-checked against the minor-gcd oracle");
}

// ---------------------------------------------------------------- criterion 8

void criterion_decomposition(Ctx& ctx) {
    auto run_point = [&](const QpqDescriptor& d, const WeightVector& w, const Clutter& c,
                         const Clutter& b, bool call_official_verifier) {
        DecompositionTrace trace = decompose(d, w);
        long long t = tau_w_value(b, w);
        if (static_cast<long long>(trace.edges.size()) != t) return false;
        // per-step tau decrease of one
        for (std::size_t s = 0; s < trace.steps.size(); ++s)
            if (trace.steps[s].tau_before != t - static_cast<long long>(s)) return false;
        std::vector<long long> load(static_cast<std::size_t>(d.n()), 0);
        for (const VSet& e : trace.edges) {
            if (std::find(c.edges().begin(), c.edges().end(), e) == c.edges().end()) return false;
            for (int v : e.indices()) ++load[static_cast<std::size_t>(v)];
        }
        for (int v = 0; v < d.n(); ++v)
            if (load[static_cast<std::size_t>(v)] > w.at(v)) return false;
        if (call_official_verifier && !verify_decomposition(d, w, trace.edges)) return false;
        return true;
    };

    {
        QpqDescriptor d = generate_qpq_f(1, 1, FSpec::case_i_all());
        Clutter c = d.clutter();
        Clutter b = blocker(c);
        std::uint64_t total = weight_box_size(6, 3);
        bool all_ok = true;
        for (std::uint64_t code = 0; code < total; ++code) {
            WeightVector w = weight_from_code(code, 6, 3);
            if (!run_point(d, w, c, b, code % 64 == 0)) {
                all_ok = false;
                break;
            }
        }
        ctx.check(all_ok, "all 4096 weight vectors decompose and verify on (1,1)");
    }
    int samples = ctx.full() ? 500 : 100;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}}) {
        QpqDescriptor d = generate_qpq_f(p, q, FSpec::case_i_all());
        Clutter c = d.clutter();
        Clutter b = blocker(c);
        Rng rng(ctx.seed + 100 * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(q));
        bool all_ok = true;
        for (int i = 0; i < samples && all_ok; ++i) {
            WeightVector w = corpus::random_weight(rng, d.n(), 3);
            if (!run_point(d, w, c, b, i % 16 == 0)) all_ok = false;
        }
        ctx.check(all_ok, std::to_string(samples) + " sampled weight vectors decompose on (" +
                              std::to_string(p) + "," + std::to_string(q) + ")");
    }
}

// ---------------------------------------------------------------- criterion 9

void criterion_blocker_duality(Ctx& ctx) {
    Rng rng(ctx.seed + 9);
    int instances = ctx.full() ? 500 : 150;
    int pole_cases = 0;
    for (int i = 0; i < instances; ++i) {
        Clutter c = corpus::random_clutter_sized(rng, 2, 8, 10);
        Clutter b = blocker(c);
        if (!(blocker(b) == c)) {
            ctx.check(false, "blocker involution fails at instance " + std::to_string(i));
            break;
        }
        // dichotomy: each f either contains an edge, or its complement
        // contains a blocker member, never both
        std::uint64_t full = (std::uint64_t{1} << c.n()) - 1;
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
            VSet f(mask);
            VSet fc = f.complement(c.n());
            bool f_has_edge = false, fc_has_cover = false;
            for (const VSet& e : c.edges())
                if (e.subset_of(f)) f_has_edge = true;
            for (const VSet& t : b.edges())
                if (t.subset_of(fc)) fc_has_cover = true;
            if (f_has_edge == fc_has_cover) {
                ctx.check(false, "dichotomy fails at instance " + std::to_string(i));
                break;
            }
        }
        // minor/blocker commutation, vertex by vertex
        for (int v = 0; v < c.n() && ctx.ok; ++v) {
            VSet s = VSet::single(v);
            Clutter deleted = delete_vertices(c, s);
            Clutter rhs_del = minimalize(contract_vertices(b.as_hypergraph(), s));
            if (deleted.edgeless()) {
                // blocker(edgeless) is pinned to the edgeless clutter, while
                // the contraction side yields the single empty edge
                ++pole_cases;
                ctx.check(rhs_del.has_empty_edge() && blocker(deleted).edgeless(),
                          "edgeless pole shape at instance " + std::to_string(i));
            } else {
                ctx.check(blocker(deleted) == rhs_del,
                          "b(c\\v) = (b(c)/v)^min at instance " + std::to_string(i));
            }
            Clutter contracted = contract_vertices(c, s);
            ctx.check(blocker(contracted) == delete_vertices(b, s),
                      "b(c/v) = b(c)\\v at instance " + std::to_string(i));
        }
        if (!ctx.ok) break;
    }
    ctx.note(std::to_string(instances) + " random clutters checked; " + std::to_string(pole_cases) +
             " edgeless-deletion poles handled by convention");
}

// --------------------------------------------------------------- criterion 10

Clutter star_closure_variant(int p, int q) {
    QpqDescriptor base = generate_qpq(p, q);
    std::vector<VSet> stars;
    for (const VSet& e : base.base_edges) stars.push_back(base.star(e));
    return generate_qpq_f(p, q, FSpec::custom_edges(stars)).clutter();
}

void criterion_classification(Ctx& ctx) {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}, {2, 2}}) {
        if (!ctx.full() && p + q >= 4) continue;
        ClassifyReport rep = classify(generate_qpq_f(p, q, FSpec::case_i_all()).clutter());
        std::string point = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        ctx.check(!rep.binary && !rep.dyadic && !rep.balanced,
                  "starred-quad family is neither binary nor dyadic nor balanced at " + point);
        ctx.check(rep.balanced_bounded, "balanced verdict is marked bounded at " + point);
    }
    {
        // At (1,1) the starred-quad augmentation is the complete one-per-pair
        // family: binary and dyadic genuinely hold there, balanced still fails.
        ClassifyReport rep = classify(generate_qpq_f(1, 1, FSpec::case_i_all()).clutter());
        ctx.check(rep.binary && rep.dyadic && !rep.balanced,
                  "(1,1) starred-quad family is binary and dyadic but unbalanced");
        ctx.note("info: (1,1) starred-quad family is the complete one-per-pair clutter (binary, dyadic)");
    }
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
        ClassifyReport rep = classify(star_closure_variant(p, q));
        ctx.check(rep.binary, "star-closure variant is binary at (" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
    }
    if (ctx.full()) {
        // The star-closure reading stops being binary at (2,2): the symmetric
        // difference can mix both sides of P and of Q, and no edge fits inside.
        ClassifyReport rep = classify(star_closure_variant(2, 2));
        ctx.check(!rep.binary, "(2,2) star-closure variant is not binary");
        ctx.note("info: the star-closure variant is binary exactly while E u E* is the full "
                 "one-per-pair family ((1,1),(2,1),(1,2)); at (2,2) it is not");
    }
}

// --------------------------------------------------------------- criterion 11

Clutter rank_witness_family(int d) {
    std::vector<VSet> edges;
    for (int i = 0; i < d; ++i) {
        VSet s = VSet::single(2 * i);  // first of pair i
        for (int j = 0; j < d; ++j)
            if (j != i) s.add(2 * j + 1);  // second of every other pair
        edges.push_back(s);
    }
    VSet t = VSet::single(1);  // complement of edge 0
    for (int j = 1; j < d; ++j) t.add(2 * j);
    edges.push_back(t);
    return Clutter::from_edges(VertexUniverse::numbered(2 * d, "x"), edges);
}

void criterion_two_partition_rank(Ctx& ctx) {
    for (auto [p, q] : grid(ctx)) {
        for (FSpec f : {FSpec::case_i_all(), FSpec::case_ii(0xFu)}) {
            QpqDescriptor d = generate_qpq_f(p, q, f);
            Clutter c = d.clutter();
            auto part = find_2partition(c);
            std::string point =
                "(" + std::to_string(p) + "," + std::to_string(q) + ") " + fspec_name(f);
            ctx.check(part.has_value(), "2-partition found at " + point);
            if (!part) continue;
            bool star_blocks = true;
            for (auto [a, b] : part->blocks)
                if (d.star(a) != b) star_blocks = false;
            ctx.check(star_blocks, "blocks are the star pairs at " + point);
            RankPropReport rep = check_rank_prop(c, *part);
            ctx.check(rep.rank_a == p + q + 2 && rep.rank_b == p + q + 2,
                      "rank(A) = rank(B) = p+q+2 at " + point);
        }
    }

    Rng rng(ctx.seed + 11);
    int instances = ctx.full() ? 200 : 50;
    for (int i = 0; i < instances; ++i) {
        int d = 2 + static_cast<int>(rng.bounded(4));
        Clutter c = corpus::random_two_partitionable(rng, d, 10);
        auto part = find_2partition(c);
        if (!part) {
            ctx.check(false, "random one-per-pair clutter lost its 2-partition at " + std::to_string(i));
            break;
        }
        RankPropReport rep = check_rank_prop(c, *part);
        ctx.check(rep.rank_bound_holds && rep.rank_a_equals_rank_b,
                  "rank bound and rank(A)=rank(B) at instance " + std::to_string(i));
    }

    for (int d = 3; d <= 5; ++d) {
        Clutter c = rank_witness_family(d);
        auto part = find_2partition(c);
        ctx.check(part.has_value(), "witness family d=" + std::to_string(d) + " is 2-partitionable");
        if (!part) continue;
        RankPropReport rep = check_rank_prop(c, *part);
        ctx.check(rep.konig_case_applies && rep.konig_case_rank_ok.value_or(false),
                  "maximal-cover König case gives rank d+1 at d=" + std::to_string(d));
        // the d generator edges together with the all-ones row span rank d+1
        IntegerMatrix a_t = incidence(c).matrix.transpose();
        IntegerMatrix proof_rows(d + 1, 2 * d);
        std::vector<VSet> gens;
        for (int i = 0; i < d; ++i) {
            VSet s = VSet::single(2 * i);
            for (int j = 0; j < d; ++j)
                if (j != i) s.add(2 * j + 1);
            gens.push_back(s);
        }
        for (int i = 0; i < d; ++i)
            for (int v : gens[static_cast<std::size_t>(i)].indices()) proof_rows.at(i, v) = 1;
        for (int v = 0; v < 2 * d; ++v) proof_rows.at(d, v) = 1;
        ctx.check(rank_rational(proof_rows) == d + 1,
                  "generator rows plus the ones row have rank d+1 at d=" + std::to_string(d));
    }
    ctx.note(std::to_string(instances) + " random 2-partitionable clutters within the rank bound");
}

struct Criterion {
    int number;
    std::string key;
    long long budget_ms;
    std::function<void(Ctx&)> fn;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> cs = {
        {1, "q21-matrix", 1000, criterion_q21_matrix},
        {2, "blocker-formula", 30000, criterion_blocker_formula},
        {3, "mnp-q11", 10000, criterion_mnp_q11},
        {4, "packing-family", 600000, criterion_packing_family},
        {5, "mengerian-bounded", 300000, criterion_mengerian_bounded},
        {6, "mengerian-equivalence", 600000, criterion_mengerian_equivalence},
        {7, "delta-r", 30000, criterion_delta_r},
        {8, "decomposition", 300000, criterion_decomposition},
        {9, "blocker-duality", 120000, criterion_blocker_duality},
        {10, "classification", 60000, criterion_classification},
        {11, "two-partition-rank", 60000, criterion_two_partition_rank},
    };
    return cs;
}

bool matches(const std::string& key, const std::string& filter) {
    if (filter.empty()) return true;
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
        return s;
    };
    return lower(key).find(lower(filter)) != std::string::npos;
}

}  // namespace

std::vector<std::string> criterion_keys() {
    std::vector<std::string> keys;
    for (const auto& c : criteria()) keys.push_back(c.key);
    return keys;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
    std::vector<CriterionResult> results;
    for (const auto& criterion : criteria()) {
        if (!matches(criterion.key, opts.only)) continue;
        Ctx ctx{.scale = opts.scale, .seed = opts.seed, .ok = true, .notes = {}};
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.fn(ctx);
        } catch (const std::exception& e) {
            ctx.check(false, std::string("exception: ") + e.what());
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        ctx.budget(elapsed, criterion.budget_ms);
        results.push_back({criterion.number, criterion.key, ctx.ok, ctx.notes, elapsed});
    }
    return results;
}

int print_results(const std::vector<CriterionResult>& results, std::ostream& os,
                  bool verbose_notes) {
    if (results.empty()) {
        os << "no criterion matches the filter\n";
        return 3;
    }
    bool all_pass = true;
    for (const auto& r : results) {
        std::ostringstream line;
        line << (r.pass ? "[PASS] " : "[FAIL] ") << r.number << " " << r.key;
        os << line.str();
        for (std::size_t pad = line.str().size(); pad < 28; ++pad) os << ' ';
        os << " (" << r.millis / 1000.0 << " s)\n";
        if (verbose_notes)
            for (const auto& n : r.notes) os << "       - " << n << "\n";
        all_pass = all_pass && r.pass;
    }
    os << (all_pass ? "all criteria passed\n" : "some criteria FAILED\n");
    return all_pass ? 0 : 1;
}

}  // namespace clutterlab::verify
