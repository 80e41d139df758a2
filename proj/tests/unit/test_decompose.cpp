#include "doctest.h"

#include <algorithm>

#include "clutterlab/decompose.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace clutterlab;

namespace {

const QpqDescriptor& star11() {
    static const QpqDescriptor d = generate_qpq_f(1, 1, FSpec::case_i_all());
    return d;
}

}  // namespace

TEST_CASE("block minima and exceeder sets") {
    const QpqDescriptor& d = star11();
    MinStats uniform = min_stats(d, WeightVector::uniform(6, 1));
    CHECK(uniform.p_min == 1);
    CHECK(uniform.p_star_min == 1);
    CHECK(uniform.q_min == 1);
    CHECK(uniform.q_star_min == 1);
    CHECK(uniform.p_exceeders.empty());
    CHECK(uniform.q_star_exceeders.empty());

    QpqDescriptor d21 = generate_qpq_f(2, 1, FSpec::case_i_all());
    // universe order: p1 p2 p1* p2* q1 q1* r r*
    MinStats s = min_stats(d21, WeightVector({0, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(s.p_min == 0);
    CHECK(s.p_exceeders == VSet::single(d21.p_vertex(1)));
    CHECK(s.p_star_exceeders.empty());
}

TEST_CASE("selector sets prefer unstarred vertices and fill every pair they can") {
    QpqDescriptor d21 = generate_qpq_f(2, 1, FSpec::case_i_all());
    // w(p1) and w(p1*) both exceed their block minima: the unstarred one wins
    MinStats tie = min_stats(d21, WeightVector({2, 0, 2, 0, 1, 1, 1, 1}));
    SelectorSets sel = build_selectors(d21, tie);
    CHECK(sel.pp == VSet::single(d21.p_vertex(0)));

    // exceeders on different pairs are both taken
    MinStats split = min_stats(d21, WeightVector({2, 0, 0, 2, 1, 1, 1, 1}));
    SelectorSets sel2 = build_selectors(d21, split);
    CHECK(sel2.pp == (VSet::single(d21.p_vertex(0)) | VSet::single(d21.p_star_vertex(1))));
    CHECK(sel2.pp.count() == 2);
}

TEST_CASE("selector cardinality matches brute force over a weight box") {
    const QpqDescriptor& d = star11();
    std::uint64_t total = weight_box_size(6, 2);
    for (std::uint64_t code = 0; code < total; ++code) {
        WeightVector w = weight_from_code(code, 6, 2);
        MinStats s = min_stats(d, w);
        SelectorSets sel = build_selectors(d, s);
        std::vector<int> un{s.p_exceeders.contains(d.p_vertex(0)) ? 1 : 0};
        std::vector<int> st{s.p_star_exceeders.contains(d.p_star_vertex(0)) ? 1 : 0};
        CHECK(sel.pp.count() == oracle::brute_max_selector_size(1, un, st));
        std::vector<int> qun{s.q_exceeders.contains(d.q_vertex(0)) ? 1 : 0};
        std::vector<int> qst{s.q_star_exceeders.contains(d.q_star_vertex(0)) ? 1 : 0};
        CHECK(sel.qq.count() == oracle::brute_max_selector_size(1, qun, qst));
    }
}

TEST_CASE("selected edges always drop tau by one on the (1,1) family") {
    const QpqDescriptor& d = star11();
    std::uint64_t total = weight_box_size(6, 2);
    for (std::uint64_t code = 0; code < total; ++code) {
        WeightVector w = weight_from_code(code, 6, 2);
        long long t = tau_w_formula(d, w);
        if (t == 0) continue;
        EdgeChoice choice = select_edge(d, w, min_stats(d, w), build_selectors(d, min_stats(d, w)));
        WeightVector next = w;
        for (int v : choice.edge.indices()) {
            REQUIRE(next.at(v) > 0);
            --next.w[static_cast<std::size_t>(v)];
        }
        CHECK(tau_w_formula(d, next) == t - 1);
    }
}

TEST_CASE("a pinned type-d minimum pins the selection row") {
    // (2,2) weights chosen so the unique minimum transversal is {q1, q2*, r*}
    // with p_min > 0, q_min = 0, q*_min > 0: the table gives the P Q* r edge.
    QpqDescriptor d = generate_qpq_f(2, 2, FSpec::case_i_all());
    // universe: p1 p2 p1* p2* q1 q2 q1* q2* r r*
    WeightVector w({2, 2, 2, 2, 0, 4, 4, 1, 3, 2});
    long long t = tau_w_formula(d, w);
    CHECK(t == 3);  // q1 + q2* + r*
    EdgeChoice choice = select_edge(d, w, min_stats(d, w), build_selectors(d, min_stats(d, w)));
    CHECK(choice.rule == RuleTag::Cor1Row2);
    CHECK(choice.edge == (d.p_block() | d.q_star_block() | VSet::single(d.r_vertex())));
}

TEST_CASE("zero minima on the P side route through the selector table") {
    QpqDescriptor d21 = generate_qpq_f(2, 1, FSpec::case_i_all());
    WeightVector w({0, 1, 1, 0, 2, 2, 3, 3});
    MinStats s = min_stats(d21, w);
    REQUIRE(s.p_min == 0);
    REQUIRE(s.p_star_min == 0);
    SelectorSets sel = build_selectors(d21, s);
    CHECK(sel.pp.count() == 2);  // forced full by the pair bound
    EdgeChoice choice = select_edge(d21, w, s, sel);
    CHECK(choice.rule == RuleTag::Cor2Row1);
    CHECK(choice.edge == (sel.pp | d21.q_block() | VSet::single(d21.r_vertex())));
}

TEST_CASE("decompose on trivial and uniform weights") {
    const QpqDescriptor& d = star11();
    CHECK(decompose(d, WeightVector::uniform(6, 0)).edges.empty());
    DecompositionTrace trace = decompose(d, WeightVector::uniform(6, 1));
    CHECK(trace.edges.size() == 2);
    CHECK(verify_decomposition(d, WeightVector::uniform(6, 1), trace.edges));
}

TEST_CASE("decompose certifies the whole small weight box") {
    const QpqDescriptor& d = star11();
    std::uint64_t total = weight_box_size(6, 2);
    for (std::uint64_t code = 0; code < total; ++code) {
        WeightVector w = weight_from_code(code, 6, 2);
        DecompositionTrace trace = decompose(d, w);
        CHECK(static_cast<long long>(trace.edges.size()) == oracle::brute_tau_w(d.clutter(), w));
        CHECK(verify_decomposition(d, w, trace.edges));
    }
}

TEST_CASE("decompose on sampled weights of the larger families") {
    corpus::Rng rng(67);
    for (auto [p, q] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
        QpqDescriptor d = generate_qpq_f(p, q, FSpec::case_i_all());
        for (int i = 0; i < 50; ++i) {
            WeightVector w = corpus::random_weight(rng, d.n(), 3);
            DecompositionTrace trace = decompose(d, w);
            CHECK(verify_decomposition(d, w, trace.edges));
            for (std::size_t s = 0; s + 1 < trace.steps.size(); ++s)
                CHECK(trace.steps[s].tau_before == trace.steps[s + 1].tau_before + 1);
        }
    }
}

TEST_CASE("verification rejects tampered certificates") {
    const QpqDescriptor& d = star11();
    WeightVector w = WeightVector::uniform(6, 1);
    DecompositionTrace trace = decompose(d, w);
    REQUIRE(verify_decomposition(d, w, trace.edges));

    std::vector<VSet> dropped(trace.edges.begin(), trace.edges.end() - 1);
    CHECK_FALSE(verify_decomposition(d, w, dropped));

    std::vector<VSet> doubled = trace.edges;
    doubled.back() = doubled.front();  // repeats an edge past its weight budget
    CHECK_FALSE(verify_decomposition(d, w, doubled));

    std::vector<VSet> foreign = trace.edges;
    foreign.back() = VSet::of({0, 1});  // not an edge of the family
    CHECK_FALSE(verify_decomposition(d, w, foreign));
}

TEST_CASE("decompose requires the full starred augmentation") {
    QpqDescriptor plain = generate_qpq(1, 1);
    CHECK_THROWS_AS(decompose(plain, WeightVector::uniform(6, 1)), UnsupportedFSpecError);
    QpqDescriptor partial = generate_qpq_f(1, 1, FSpec::case_i(0x3u));
    CHECK_THROWS_AS(decompose(partial, WeightVector::uniform(6, 1)), UnsupportedFSpecError);
}

TEST_CASE("select_edge needs positive tau") {
    const QpqDescriptor& d = star11();
    WeightVector w = WeightVector::uniform(6, 0);
    CHECK_THROWS_AS(select_edge(d, w, min_stats(d, w), build_selectors(d, min_stats(d, w))),
                    PreconditionError);
}

TEST_CASE("rule tags render") {
    CHECK(std::string(to_string(RuleTag::Cor2Row1)) == "Cor2-row1");
    CHECK(std::string(to_string(RuleTag::Cor1Row4)) == "Cor1-row4");
}
