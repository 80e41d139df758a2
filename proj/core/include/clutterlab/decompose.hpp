#pragma once

#include <optional>
#include <vector>

#include "clutterlab/covering.hpp"
#include "clutterlab/qpq.hpp"

namespace clutterlab {

/// Block minima of a weight vector over the Q_pq universe, with the
/// strictly-exceeding vertex sets P_>, P_>*, Q_>, Q_>*.
struct MinStats {
    long long p_min = 0, p_star_min = 0, q_min = 0, q_star_min = 0;
    VSet p_exceeders, p_star_exceeders, q_exceeders, q_star_exceeders;
};

MinStats min_stats(const QpqDescriptor& desc, const WeightVector& w);

/// Maximal selections from the exceeder sets with at most one vertex per
/// star pair; ties broken toward the unstarred vertex.
struct SelectorSets {
    VSet pp, qq;
};

SelectorSets build_selectors(const QpqDescriptor& desc, const MinStats& stats);

enum class RuleTag {
    Cor2Row1,  // PP Q r
    Cor2Row2,  // PP Q* r
    Cor2Row3,  // P QQ r*
    Cor2Row4,  // P* QQ r*
    Cor1Row1,  // P Q c*
    Cor1Row2,  // P Q* c*
    Cor1Row3,  // P* Q c*
    Cor1Row4,  // P* Q* c*
};
const char* to_string(RuleTag tag);

struct EdgeChoice {
    VSet edge;
    RuleTag rule;
};

/// One step of the decomposition: picks an edge e with w - chi_e >= 0 and
/// tau^{w - chi_e} = tau^w - 1, per the two selection tables. Requires
/// tau^w > 0 and the full starred-quad augmentation on desc.
EdgeChoice select_edge(const QpqDescriptor& desc, const WeightVector& w, const MinStats& stats,
                       const SelectorSets& selectors);

struct TraceStep {
    int iteration = 0;
    VSet edge;
    RuleTag rule = RuleTag::Cor1Row1;
    WeightVector weight_before;
    long long tau_before = 0;
};

struct DecompositionTrace {
    std::vector<TraceStep> steps;
    std::vector<VSet> edges;  // the returned multiset m, |m| = tau^w
};

/// Runs the full loop: while tau^{w_i} != 0 pick an edge, subtract it, record
/// the step. Descriptor must carry F = the full starred special-edge quad.
DecompositionTrace decompose(const QpqDescriptor& desc, const WeightVector& w);

/// Independent certificate check: recomputes tau^w from the generic blocker,
/// then verifies |m| = tau^w, the componentwise sum bound, and membership of
/// every chosen edge.
bool verify_decomposition(const QpqDescriptor& desc, const WeightVector& w,
                          const std::vector<VSet>& m);

/// Minimum blocker weight of Q_pq^F straight from the closed-form blocker.
long long tau_w_formula(const QpqDescriptor& desc, const WeightVector& w);

}  // namespace clutterlab
