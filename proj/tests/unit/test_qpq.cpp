#include "doctest.h"

#include <algorithm>

#include "clutterlab/properties.hpp"
#include "clutterlab/qpq.hpp"
#include "oracles.hpp"

using namespace clutterlab;

TEST_CASE("family sizes follow the block construction") {
    QpqDescriptor d11 = generate_qpq(1, 1);
    CHECK(d11.n() == 6);
    CHECK(d11.clutter().edge_count() == 4);

    QpqDescriptor d21 = generate_qpq(2, 1);
    CHECK(d21.n() == 8);
    CHECK(d21.clutter().edge_count() == 8);

    QpqDescriptor d22 = generate_qpq(2, 2);
    CHECK(d22.n() == 10);
    CHECK(d22.clutter().edge_count() == 12);
}

TEST_CASE("special edge quad at (1,1)") {
    QpqDescriptor d = generate_qpq(1, 1);
    auto quad = f_pq(d);
    CHECK(quad[0] == VSet::of({d.p_vertex(0), d.q_vertex(0), d.r_vertex()}));
    // each quad member is an edge of the base family
    for (const VSet& f : quad)
        CHECK(std::find(d.base_edges.begin(), d.base_edges.end(), f) != d.base_edges.end());
}

TEST_CASE("star map is a fixed-point-free involution respecting blocks") {
    QpqDescriptor d = generate_qpq(2, 2);
    for (int v = 0; v < d.n(); ++v) {
        CHECK(d.star(v) != v);
        CHECK(d.star(d.star(v)) == v);
    }
    auto quad = f_pq(d);
    for (const VSet& f : quad) CHECK(d.star(d.star(f)) == f);
    // stars of the quad are one-per-pair complements
    for (const VSet& f : quad) CHECK(d.star(f) == f.complement(d.n()));
}

TEST_CASE("augmentation sizes") {
    QpqDescriptor full = generate_qpq_f(2, 1, FSpec::case_i_all());
    CHECK(full.clutter().edge_count() == 8 + 4);
    QpqDescriptor none = generate_qpq_f(2, 1, FSpec::none());
    CHECK(none.clutter() == generate_qpq(2, 1).clutter());
}

TEST_CASE("augmented families are 2-partitionable by star pairs") {
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        QpqDescriptor d = generate_qpq_f(p, q, FSpec::case_i_all());
        auto part = find_2partition(d.clutter());
        REQUIRE(part.has_value());
        for (auto [a, b] : part->blocks) CHECK(d.star(a) == b);
    }
}

TEST_CASE("closed-form blocker matches brute force on the plain family") {
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        QpqDescriptor d = generate_qpq(p, q);
        CHECK(blocker_formula_qpq(p, q) == oracle::brute_blocker(d.clutter()));
    }
}

TEST_CASE("case I full star set leaves only the pair families at (1,1)") {
    QpqDescriptor d = generate_qpq_f(1, 1, FSpec::case_i_all());
    Clutter b = blocker_formula_qpq_f(d);
    CHECK(b.edge_count() == 3);
    for (const VSet& t : b.edges()) CHECK(t.count() == 2);
    CHECK(b == oracle::brute_blocker(d.clutter()));
}

TEST_CASE("degenerate (1,1) case II with the full quad resolves to the base family") {
    QpqDescriptor d = generate_qpq_f(1, 1, FSpec::case_ii(0xFu));
    CHECK(d.f_edges.empty());
    CHECK(d.clutter() == generate_qpq(1, 1).clutter());
    // the closed form keeps the retained quad members; brute force agrees
    Clutter b = blocker_formula_qpq_f(d);
    CHECK(b == oracle::brute_blocker(d.clutter()));
    CHECK(b.edge_count() == 7);
}

TEST_CASE("case II with a single retained special edge at (2,1)") {
    QpqDescriptor d = generate_qpq_f(2, 1, FSpec::case_ii(0x1u));  // F' = {PQr}
    Clutter b = blocker_formula_qpq_f(d);
    CHECK(b == oracle::brute_blocker(d.clutter()));
    VSet pqr = d.p_block() | d.q_block() | VSet::single(d.r_vertex());
    CHECK(std::find(b.edges().begin(), b.edges().end(), pqr) != b.edges().end());
}

TEST_CASE("typed blocker members carry consistent type tags") {
    QpqDescriptor d = generate_qpq_f(2, 2, FSpec::case_i_all());
    for (const auto& m : blocker_formula_qpq_f_typed(d)) {
        switch (m.type) {
            case BlockerType::PairA: CHECK(m.set.count() == 2); break;
            case BlockerType::QuadB: CHECK(m.set.count() == 4); break;
            case BlockerType::TripleC:
                CHECK(m.set.count() == 3);
                CHECK(m.set.contains(d.r_vertex()));
                break;
            case BlockerType::TripleD:
                CHECK(m.set.count() == 3);
                CHECK(m.set.contains(d.r_star_vertex()));
                break;
            default: CHECK(false); break;
        }
    }
}

TEST_CASE("fspec strings parse and print") {
    CHECK(FSpec::parse("none") == FSpec::none());
    CHECK(FSpec::parse("caseI:all") == FSpec::case_i_all());
    CHECK(FSpec::parse("caseI:1,3") == FSpec::case_i(0b101));
    CHECK(FSpec::parse("caseII:2") == FSpec::case_ii(0b10));
    CHECK(FSpec::parse(FSpec::case_i(0b101).to_string()) == FSpec::case_i(0b101));
    CHECK(FSpec::case_i_all().to_string() == "caseI:all");
    CHECK_THROWS_AS(FSpec::parse("caseI:"), ParseError);
    CHECK_THROWS_AS(FSpec::parse("caseI:5"), ParseError);
    CHECK_THROWS_AS(FSpec::parse("bogus"), ParseError);
}

TEST_CASE("custom augmentations respect inclusion") {
    QpqDescriptor base = generate_qpq(1, 1);
    // a subset of an existing edge conflicts
    VSet inside = VSet::of({base.p_vertex(0), base.q_vertex(0)});
    CHECK_THROWS_AS(generate_qpq_f(1, 1, FSpec::custom_edges({inside})), InclusionConflictError);
    // the star of an edge is fine and no closed-form blocker is claimed
    VSet star_edge = base.star(base.base_edges[0]);
    QpqDescriptor d = generate_qpq_f(1, 1, FSpec::custom_edges({star_edge}));
    CHECK(d.clutter().edge_count() == 5);
    CHECK_THROWS_AS(blocker_formula_qpq_f(d), UnsupportedFSpecError);
}

TEST_CASE("the open blocker families nest inside the special quad") {
    QpqDescriptor d = generate_qpq(2, 2);
    auto quad = f_pq(d);
    for (const auto& m : blocker_formula_qpq_typed(d)) {
        switch (m.type) {
            case BlockerType::FamilyE: CHECK(m.set.subset_of(quad[2])); break;  // PQ*r*
            case BlockerType::FamilyF: CHECK(m.set.subset_of(quad[3])); break;  // P*Qr*
            case BlockerType::FamilyG: CHECK(m.set.subset_of(quad[0])); break;  // PQr
            case BlockerType::FamilyH: CHECK(m.set.subset_of(quad[1])); break;  // P*Q*r
            default: break;
        }
    }
}

TEST_CASE("base edges are one-per-pair sets") {
    QpqDescriptor d = generate_qpq(2, 2);
    for (const VSet& e : d.base_edges) {
        CHECK(e.count() == d.p + d.q + 1);
        for (int v : e.indices()) CHECK_FALSE(e.contains(d.star(v)));
    }
}
