#include "clutterlab/decompose.hpp"

#include <algorithm>
#include <sstream>

namespace clutterlab {

namespace {

long long block_min(const WeightVector& w, VSet block) {
    long long m = -1;
    for (int v : block.indices()) {
        long long x = w.at(v);
        if (m < 0 || x < m) m = x;
    }
    return m < 0 ? 0 : m;
}

VSet exceeders(const WeightVector& w, VSet block, long long min_value) {
    VSet out;
    for (int v : block.indices())
        if (w.at(v) > min_value) out.add(v);
    return out;
}

void require_full_star_quad(const QpqDescriptor& desc) {
    if (!(desc.fspec.kind == FKind::CaseI && desc.fspec.mask == 0xFu))
        throw UnsupportedFSpecError(
            "decomposition requires the full starred special-edge augmentation (caseI:all)");
}

}  // namespace

MinStats min_stats(const QpqDescriptor& desc, const WeightVector& w) {
    MinStats s;
    s.p_min = block_min(w, desc.p_block());
    s.p_star_min = block_min(w, desc.p_star_block());
    s.q_min = block_min(w, desc.q_block());
    s.q_star_min = block_min(w, desc.q_star_block());
    s.p_exceeders = exceeders(w, desc.p_block(), s.p_min);
    s.p_star_exceeders = exceeders(w, desc.p_star_block(), s.p_star_min);
    s.q_exceeders = exceeders(w, desc.q_block(), s.q_min);
    s.q_star_exceeders = exceeders(w, desc.q_star_block(), s.q_star_min);
    return s;
}

SelectorSets build_selectors(const QpqDescriptor& desc, const MinStats& stats) {
    SelectorSets sel;
    for (int i = 0; i < desc.p; ++i) {
        if (stats.p_exceeders.contains(desc.p_vertex(i)))
            sel.pp.add(desc.p_vertex(i));
        else if (stats.p_star_exceeders.contains(desc.p_star_vertex(i)))
            sel.pp.add(desc.p_star_vertex(i));
    }
    for (int j = 0; j < desc.q; ++j) {
        if (stats.q_exceeders.contains(desc.q_vertex(j)))
            sel.qq.add(desc.q_vertex(j));
        else if (stats.q_star_exceeders.contains(desc.q_star_vertex(j)))
            sel.qq.add(desc.q_star_vertex(j));
    }
    return sel;
}

const char* to_string(RuleTag tag) {
    switch (tag) {
        case RuleTag::Cor2Row1: return "Cor2-row1";
        case RuleTag::Cor2Row2: return "Cor2-row2";
        case RuleTag::Cor2Row3: return "Cor2-row3";
        case RuleTag::Cor2Row4: return "Cor2-row4";
        case RuleTag::Cor1Row1: return "Cor1-row1";
        case RuleTag::Cor1Row2: return "Cor1-row2";
        case RuleTag::Cor1Row3: return "Cor1-row3";
        case RuleTag::Cor1Row4: return "Cor1-row4";
    }
    return "?";
}

long long tau_w_formula(const QpqDescriptor& desc, const WeightVector& w) {
    auto members = blocker_formula_qpq_f_typed(desc);
    long long best = -1;
    for (const auto& m : members) {
        long long v = w.weight_of(m.set);
        if (best < 0 || v < best) best = v;
    }
    return best < 0 ? 0 : best;
}

namespace {

struct Minima {
    bool has_b = false, has_c = false, has_d = false;
};

Minima classify_minima(const std::vector<TypedTransversal>& members, const WeightVector& w,
                       long long tau) {
    Minima m;
    for (const auto& t : members) {
        if (w.weight_of(t.set) != tau) continue;
        if (t.type == BlockerType::QuadB) m.has_b = true;
        if (t.type == BlockerType::TripleC) m.has_c = true;
        if (t.type == BlockerType::TripleD) m.has_d = true;
    }
    return m;
}

}  // namespace

EdgeChoice select_edge(const QpqDescriptor& desc, const WeightVector& w, const MinStats& stats,
                       const SelectorSets& sel) {
    require_full_star_quad(desc);
    auto members = blocker_formula_qpq_f_typed(desc);
    long long tau = 0;
    {
        bool first = true;
        for (const auto& m : members) {
            long long v = w.weight_of(m.set);
            if (first || v < tau) tau = v;
            first = false;
        }
    }
    if (tau <= 0) throw PreconditionError("select_edge needs tau^w > 0");

    VSet r = VSet::single(desc.r_vertex());
    VSet rs = VSet::single(desc.r_star_vertex());
    bool p_side_positive = std::max(stats.p_min, stats.p_star_min) > 0;
    bool q_side_positive = std::max(stats.q_min, stats.q_star_min) > 0;

    if (p_side_positive && q_side_positive) {
        Minima minima = classify_minima(members, w, tau);
        if (minima.has_b || (minima.has_c && minima.has_d)) {
            // Both r-weights are positive here, and every minimum-weight
            // transversal meets the chosen row's edge in a single vertex.
            if (sel.pp.count() == desc.p && stats.q_min > 0)
                return {sel.pp | desc.q_block() | r, RuleTag::Cor2Row1};
            if (sel.pp.count() == desc.p && stats.q_star_min > 0)
                return {sel.pp | desc.q_star_block() | r, RuleTag::Cor2Row2};
            if (sel.qq.count() == desc.q && stats.p_min > 0)
                return {desc.p_block() | sel.qq | rs, RuleTag::Cor2Row3};
            if (sel.qq.count() == desc.q && stats.p_star_min > 0)
                return {desc.p_star_block() | sel.qq | rs, RuleTag::Cor2Row4};
            throw NoRuleAppliesError("no selector row applies with a minimum of type b or c+d");
        }
        // c* is pinned by a type-c/d minimum; with pair-only minima either
        // r-ish vertex of positive weight works.
        VSet c_star;
        if (minima.has_c)
            c_star = rs;
        else if (minima.has_d)
            c_star = r;
        else
            c_star = w.at(desc.r_star_vertex()) > 0 ? rs : r;
        if (stats.p_min > 0 && stats.q_min > 0)
            return {desc.p_block() | desc.q_block() | c_star, RuleTag::Cor1Row1};
        if (stats.p_min > 0 && stats.q_star_min > 0)
            return {desc.p_block() | desc.q_star_block() | c_star, RuleTag::Cor1Row2};
        if (stats.p_star_min > 0 && stats.q_min > 0)
            return {desc.p_star_block() | desc.q_block() | c_star, RuleTag::Cor1Row3};
        if (stats.p_star_min > 0 && stats.q_star_min > 0)
            return {desc.p_star_block() | desc.q_star_block() | c_star, RuleTag::Cor1Row4};
        throw NoRuleAppliesError("no block-pair row applies despite positive side minima");
    }

    if (stats.p_min == 0 && stats.p_star_min == 0) {
        // Every star pair on the P side holds an exceeder, and the Q side
        // carries enough weight: q_min + q*_min and w(r) both bound tau.
        if (sel.pp.count() != desc.p)
            throw NoRuleAppliesError("selector PP not full with zero P-side minima");
        if (stats.q_min + stats.q_star_min < tau || w.at(desc.r_vertex()) < tau)
            throw NoRuleAppliesError("Q-side weight bound violated with zero P-side minima");
        if (stats.q_min > 0) return {sel.pp | desc.q_block() | r, RuleTag::Cor2Row1};
        if (stats.q_star_min > 0) return {sel.pp | desc.q_star_block() | r, RuleTag::Cor2Row2};
        throw NoRuleAppliesError("both Q-side minima zero alongside zero P-side minima");
    }
    if (stats.q_min == 0 && stats.q_star_min == 0) {
        if (sel.qq.count() != desc.q)
            throw NoRuleAppliesError("selector QQ not full with zero Q-side minima");
        if (stats.p_min + stats.p_star_min < tau || w.at(desc.r_star_vertex()) < tau)
            throw NoRuleAppliesError("P-side weight bound violated with zero Q-side minima");
        if (stats.p_min > 0) return {desc.p_block() | sel.qq | rs, RuleTag::Cor2Row3};
        if (stats.p_star_min > 0) return {desc.p_star_block() | sel.qq | rs, RuleTag::Cor2Row4};
        throw NoRuleAppliesError("both P-side minima zero alongside zero Q-side minima");
    }
    throw NoRuleAppliesError("unreachable branch in edge selection");
}

namespace {

std::string trace_json(const QpqDescriptor& desc, const DecompositionTrace& trace) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        if (i) os << ",";
        os << "{\"iteration\":" << s.iteration << ",\"rule\":\"" << to_string(s.rule)
           << "\",\"edge\":\"" << to_string(s.edge, desc.universe) << "\",\"tau\":" << s.tau_before
           << "}";
    }
    os << "]";
    return os.str();
}

}  // namespace

DecompositionTrace decompose(const QpqDescriptor& desc, const WeightVector& w) {
    require_full_star_quad(desc);
    if (w.size() != desc.n()) throw Error("weight vector length mismatch");

    DecompositionTrace trace;
    WeightVector cur = w;
    long long tau = tau_w_formula(desc, cur);
    int iteration = 0;
    while (tau != 0) {
        MinStats stats = min_stats(desc, cur);
        SelectorSets sel = build_selectors(desc, stats);
        EdgeChoice choice;
        try {
            choice = select_edge(desc, cur, stats, sel);
        } catch (const NoRuleAppliesError& e) {
            throw NoRuleAppliesError(e.what(), trace_json(desc, trace));
        }
        for (int v : choice.edge.indices())
            if (cur.at(v) <= 0)
                throw NoRuleAppliesError("selected edge leaves a negative weight",
                                         trace_json(desc, trace));
        WeightVector next = cur;
        for (int v : choice.edge.indices()) --next.w[static_cast<std::size_t>(v)];
        long long next_tau = tau_w_formula(desc, next);
        if (next_tau != tau - 1)
            throw NoRuleAppliesError("selected edge does not lower tau by one",
                                     trace_json(desc, trace));
        trace.steps.push_back({iteration, choice.edge, choice.rule, cur, tau});
        trace.edges.push_back(choice.edge);
        cur = std::move(next);
        tau = next_tau;
        ++iteration;
    }
    return trace;
}

bool verify_decomposition(const QpqDescriptor& desc, const WeightVector& w,
                          const std::vector<VSet>& m) {
    Clutter c = desc.clutter();
    Clutter b = blocker(c);
    long long tau = tau_w_value(b, w);
    if (static_cast<long long>(m.size()) != tau) return false;
    std::vector<long long> load(static_cast<std::size_t>(desc.n()), 0);
    for (const VSet& e : m) {
        if (std::find(c.edges().begin(), c.edges().end(), e) == c.edges().end()) return false;
        for (int v : e.indices()) ++load[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < desc.n(); ++v)
        if (load[static_cast<std::size_t>(v)] > w.at(v)) return false;
    return true;
}

}  // namespace clutterlab
