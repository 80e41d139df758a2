#include "clutterlab/serialize.hpp"

#include <sstream>

namespace clutterlab {

namespace {

nlohmann::json labels_of(VSet s, const VertexUniverse& u) {
    auto out = nlohmann::json::array();
    for (int v : s.indices()) out.push_back(u.name(v));
    return out;
}

nlohmann::json spec_json(const MinorSpec& spec, const VertexUniverse& u) {
    return {{"delete", labels_of(spec.deletions, u)}, {"contract", labels_of(spec.contractions, u)}};
}

}  // namespace

std::string rat_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

nlohmann::json json_of(const Clutter& c) {
    nlohmann::json j;
    j["vertices"] = c.universe().names();
    auto edges = nlohmann::json::array();
    for (const VSet& e : c.edges()) edges.push_back(labels_of(e, c.universe()));
    j["edges"] = edges;
    return j;
}

nlohmann::json json_of(const Clutter& c, const OptReport& r) {
    nlohmann::json j;
    j["problem"] = r.problem;
    j["value"] = r.value;
    j["method"] = r.method;
    if (r.cover) j["cover"] = labels_of(*r.cover, c.universe());
    if (r.packing) j["packing"] = *r.packing;
    return j;
}

nlohmann::json json_of(const Clutter& c, const PackingReport& r) {
    nlohmann::json j;
    j["packs"] = r.packs;
    if (r.failing) j["failing_minor"] = spec_json(*r.failing, c.universe());
    if (r.ledger) {
        auto rows = nlohmann::json::array();
        for (const auto& [spec, t, v] : *r.ledger)
            rows.push_back({{"minor", spec_json(spec, c.universe())}, {"tau", t}, {"nu", v}});
        j["ledger"] = rows;
    }
    return j;
}

nlohmann::json json_of(const Clutter& c, const MengerianReport& r) {
    nlohmann::json j;
    j["ideal"] = r.ideal;
    j["w_max"] = r.w_max;
    j["checked"] = r.checked;
    switch (r.verdict) {
        case MengerianVerdict::PassBounded: j["verdict"] = "pass-bounded"; break;
        case MengerianVerdict::Fail: j["verdict"] = "fail"; break;
        case MengerianVerdict::NotIdeal: j["verdict"] = "not-ideal"; break;
    }
    if (r.failing_w) j["failing_w"] = r.failing_w->w;
    if (r.reason == MengerianFailReason::NoWitnessEdge) j["reason"] = "no-witness-edge";
    if (r.reason == MengerianFailReason::TauNuMismatch) j["reason"] = "tau-nu-mismatch";
    if (r.witnesses) {
        auto w = nlohmann::json::array();
        for (const auto& e : *r.witnesses)
            w.push_back(e ? nlohmann::json(*e) : nlohmann::json());
        j["witness_edges"] = w;
    }
    (void)c;
    return j;
}

nlohmann::json json_of(const Clutter& c, const TwoPartition& part) {
    auto blocks = nlohmann::json::array();
    for (auto [a, b] : part.blocks)
        blocks.push_back({c.universe().name(a), c.universe().name(b)});
    return {{"blocks", blocks}};
}

nlohmann::json json_of(const RankPropReport& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["rank_a"] = r.rank_a;
    j["rank_b"] = r.rank_b;
    j["rank_bound_holds"] = r.rank_bound_holds;
    j["rank_a_equals_rank_b"] = r.rank_a_equals_rank_b;
    j["konig_case_applies"] = r.konig_case_applies;
    if (r.konig_case_rank_ok) j["konig_case_rank_ok"] = *r.konig_case_rank_ok;
    return j;
}

nlohmann::json json_of(const ClassifyReport& r) {
    return {{"binary", r.binary},
            {"dyadic", r.dyadic},
            {"balanced", r.balanced},
            {"balanced_bounded", r.balanced_bounded},
            {"balanced_limit", r.balanced_limit}};
}

nlohmann::json json_of(const Clutter& c, const IdealReport& r) {
    nlohmann::json j;
    j["ideal"] = r.ideal;
    if (r.fractional_vertex) {
        auto v = nlohmann::json::array();
        for (const Rat& x : *r.fractional_vertex) v.push_back(rat_string(x));
        j["fractional_vertex"] = v;
    }
    (void)c;
    return j;
}

nlohmann::json json_of(const LpValues& v) {
    return {{"primal_min", rat_string(v.primal_min)}, {"dual_max", rat_string(v.dual_max)}};
}

nlohmann::json json_of(const QpqDescriptor& desc, const DecompositionTrace& t) {
    nlohmann::json j;
    auto steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"iteration", s.iteration},
                         {"rule", to_string(s.rule)},
                         {"edge", labels_of(s.edge, desc.universe)},
                         {"w", s.weight_before.w},
                         {"tau", s.tau_before}});
    }
    j["steps"] = steps;
    auto edges = nlohmann::json::array();
    for (const VSet& e : t.edges) edges.push_back(labels_of(e, desc.universe));
    j["edges"] = edges;
    return j;
}

}  // namespace clutterlab
