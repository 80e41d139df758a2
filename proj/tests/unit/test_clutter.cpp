#include "doctest.h"

#include <algorithm>
#include <set>

#include "clutterlab/clutter.hpp"
#include "clutterlab/qpq.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace clutterlab;

namespace {

Clutter make(std::initializer_list<std::initializer_list<int>> edges, int n) {
    std::vector<VSet> es;
    for (auto e : edges) {
        VSet s;
        for (int v : e) s.add(v);
        es.push_back(s);
    }
    return Clutter::from_edges(VertexUniverse::numbered(n), es);
}

Hypergraph make_h(std::initializer_list<std::initializer_list<int>> edges, int n) {
    Hypergraph h;
    h.universe = VertexUniverse::numbered(n);
    for (auto e : edges) {
        VSet s;
        for (int v : e) s.add(v);
        h.edges.push_back(s);
    }
    return h;
}

}  // namespace

TEST_CASE("minimalize drops dominated and duplicate edges") {
    Clutter c = minimalize(make_h({{0}, {0, 1}}, 2));
    CHECK(c.edges() == std::vector<VSet>{VSet::of({0})});

    Clutter fixed = make({{0, 1}, {1, 2}}, 3);
    CHECK(minimalize(fixed.as_hypergraph()) == fixed);

    Hypergraph dup = make_h({{0, 1}, {0, 1}, {2}}, 3);
    CHECK(minimalize(dup).edge_count() == 2);
}

TEST_CASE("minimalize collapses to the single empty edge") {
    Clutter c = minimalize(make_h({{}, {0}, {1, 2}}, 3));
    CHECK(c.edge_count() == 1);
    CHECK(c.has_empty_edge());
}

TEST_CASE("minimalize of the full-edge augmented family returns the family") {
    QpqDescriptor d = generate_qpq(1, 1);
    Hypergraph h = d.clutter().as_hypergraph();
    h.edges.push_back(VSet::full(d.n()));
    CHECK(minimalize(h) == d.clutter());
}

TEST_CASE("clutter invariants are enforced") {
    CHECK_THROWS_AS(make({{0}, {0, 1}}, 2), InclusionConflictError);
    CHECK_THROWS_AS(make({{0, 1}, {0, 1}}, 2), InclusionConflictError);
}

TEST_CASE("blocker of a single edge is its vertices") {
    Clutter c = make({{0, 1}}, 2);
    Clutter b = blocker(c);
    CHECK(b.edges() == std::vector<VSet>{VSet::of({0}), VSet::of({1})});
}

TEST_CASE("blocker involution on the base family and random clutters") {
    Clutter q11 = generate_qpq(1, 1).clutter();
    CHECK(blocker(blocker(q11)) == q11);

    corpus::Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        Clutter c = corpus::random_clutter_sized(rng, 2, 10, 12);
        CHECK(blocker(blocker(c)) == c);
    }
}

TEST_CASE("blocker agrees with the subset-scan oracle") {
    corpus::Rng rng(29);
    for (int i = 0; i < 40; ++i) {
        Clutter c = corpus::random_clutter_sized(rng, 2, 12, 14);
        CHECK(blocker(c) == oracle::brute_blocker(c));
    }
}

TEST_CASE("blocker poles follow the documented convention") {
    Clutter edgeless = Clutter::minimal_of(VertexUniverse::numbered(3), {});
    CHECK(is_blocker_pole(edgeless));
    CHECK(blocker(edgeless).edgeless());

    Clutter empty_edge = Clutter::minimal_of(VertexUniverse::numbered(3), {VSet{}});
    CHECK(is_blocker_pole(empty_edge));
    CHECK(blocker(empty_edge).edgeless());
}

TEST_CASE("blocker of the base (2,1) family holds the star pairs") {
    QpqDescriptor d = generate_qpq(2, 1);
    Clutter b = blocker(d.clutter());
    auto has = [&](VSet s) {
        return std::find(b.edges().begin(), b.edges().end(), s) != b.edges().end();
    };
    CHECK(has(VSet::of({d.r_vertex(), d.r_star_vertex()})));
    for (int i = 0; i < 2; ++i) CHECK(has(VSet::of({d.p_vertex(i), d.p_star_vertex(i)})));
    CHECK(has(VSet::of({d.q_vertex(0), d.q_star_vertex(0)})));
}

TEST_CASE("deletion and contraction on hypergraphs") {
    Hypergraph h = make_h({{0, 1}, {1, 2}}, 3);

    Hypergraph contracted = contract_vertices(h, VSet::of({1}));
    CHECK(contracted.universe.size() == 2);
    Clutter cmin = minimalize(contracted);
    CHECK(cmin.edges() == std::vector<VSet>{VSet::of({0}), VSet::of({1})});

    Hypergraph deleted = delete_vertices(h, VSet::of({1}));
    CHECK(deleted.edges.empty());
}

TEST_CASE("minor labels survive for the remaining vertices") {
    Clutter c = make({{0, 1}, {1, 2}}, 3);
    Clutter m = minor(c, MinorSpec(VSet{}, VSet::of({1})));
    CHECK(m.universe().names() == std::vector<std::string>{"v0", "v2"});
}

TEST_CASE("blocker commutes with deletion and contraction on the base family") {
    Clutter c = generate_qpq(1, 1).clutter();
    Clutter b = blocker(c);
    for (int v = 0; v < c.n(); ++v) {
        VSet s = VSet::single(v);
        Clutter lhs = blocker(delete_vertices(c, s));
        Clutter rhs = minimalize(contract_vertices(b.as_hypergraph(), s));
        CHECK(lhs == rhs);
        CHECK(blocker(contract_vertices(c, s)) == delete_vertices(b, s));
    }
}

TEST_CASE("minor with the empty spec is the identity") {
    Clutter c = generate_qpq(1, 1).clutter();
    CHECK(minor(c, MinorSpec{}) == c);
    CHECK_FALSE(MinorSpec{}.proper());
}

TEST_CASE("minor covering all vertices empties the universe") {
    Clutter c = make({{0, 1}, {1, 2}}, 3);
    Clutter all_contracted = minor(c, MinorSpec(VSet{}, VSet::full(3)));
    CHECK(all_contracted.n() == 0);
    CHECK(all_contracted.has_empty_edge());
    Clutter all_deleted = minor(c, MinorSpec(VSet::full(3), VSet{}));
    CHECK(all_deleted.n() == 0);
    CHECK(all_deleted.edgeless());
}

TEST_CASE("overlapping minor specs are rejected") {
    CHECK_THROWS_AS(MinorSpec(VSet::of({0}), VSet::of({0, 1})), OverlappingSpecError);
}

TEST_CASE("minor enumeration counts 3^n distinct specs") {
    CHECK(enumerate_minors(make({{0}}, 1)).size() == 3);
    CHECK(enumerate_minors(make({{0, 1}}, 2)).size() == 9);

    Clutter q11 = generate_qpq(1, 1).clutter();
    std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
    long long count = 0;
    for_each_minor(q11, [&](const MinorSpec& spec, const Clutter&) {
        keys.insert({spec.deletions.bits(), spec.contractions.bits()});
        ++count;
        return true;
    });
    CHECK(count == 729);
    CHECK(keys.size() == 729);
}

TEST_CASE("minor enumeration respects the universe limit") {
    Clutter big = Clutter::minimal_of(VertexUniverse::numbered(17), {VSet::of({0})});
    CHECK_THROWS_AS(for_each_minor(big, [](const MinorSpec&, const Clutter&) { return true; }),
                    UniverseTooLargeError);
}

TEST_CASE("minor is invariant under interleaving single-vertex steps") {
    corpus::Rng rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        Clutter c = corpus::random_clutter_sized(rng, 3, 7, 8);
        std::uint64_t code = rng.next() % 100000;
        MinorSpec spec = minor_spec_from_code(code % [&] {
            std::uint64_t t = 1;
            for (int i = 0; i < c.n(); ++i) t *= 3;
            return t;
        }(), c.n());
        Clutter direct = minor(c, spec);

        // apply the same spec one vertex at a time, highest index first, with
        // deletions and contractions interleaved by parity
        Clutter step = c;
        for (int v = c.n() - 1; v >= 0; --v) {
            // recompute the vertex position in the shrinking universe by label
            auto idx = step.universe().index_of(c.universe().name(v));
            if (!idx) continue;
            if (spec.deletions.contains(v))
                step = delete_vertices(step, VSet::single(*idx));
            else if (spec.contractions.contains(v))
                step = contract_vertices(step, VSet::single(*idx));
        }
        CHECK(step == direct);
    }
}

TEST_CASE("incidence matrices line up with edges") {
    Clutter single = make({{0}}, 1);
    IncidenceView iv = incidence(single);
    CHECK(iv.matrix.rows() == 1);
    CHECK(iv.matrix.cols() == 1);
    CHECK(iv.matrix.at(0, 0) == 1);

    Clutter c = generate_qpq(2, 1).clutter();
    IntegerMatrix a = incidence(c).matrix;
    for (int k = 0; k < c.edge_count(); ++k) {
        Int col_sum = 0;
        for (int i = 0; i < c.n(); ++i) col_sum += a.at(i, k);
        CHECK(col_sum == c.edges()[static_cast<std::size_t>(k)].count());
    }
}

TEST_CASE("cover dichotomy: a set contains an edge or its complement a cover") {
    corpus::Rng rng(99);
    for (int i = 0; i < 20; ++i) {
        Clutter c = corpus::random_clutter_sized(rng, 2, 6, 8);
        Clutter b = blocker(c);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.n()); ++mask) {
            VSet f(mask);
            VSet fc = f.complement(c.n());
            bool f_edge = std::any_of(c.edges().begin(), c.edges().end(),
                                      [&](VSet e) { return e.subset_of(f); });
            bool fc_cover = std::any_of(b.edges().begin(), b.edges().end(),
                                        [&](VSet t) { return t.subset_of(fc); });
            CHECK(f_edge != fc_cover);
        }
    }
}

TEST_CASE("universe label lookups and restriction") {
    VertexUniverse u({"a", "b", "c"});
    CHECK(u.index_of("b") == 1);
    CHECK_FALSE(u.index_of("z").has_value());
    CHECK(u.restricted(VSet::of({0, 2})).names() == std::vector<std::string>{"a", "c"});
    CHECK_THROWS_AS(VertexUniverse({"a", "a"}), ParseError);
}
