#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "clutterlab/covering.hpp"

namespace clutterlab {

/// tau = nu, with the convention that the edgeless clutter and clutters
/// containing the empty edge pack.
bool has_konig(const Clutter& c);

struct PackingReport {
    bool packs = false;
    std::optional<MinorSpec> failing;  // first failing minor in enumeration order
    std::optional<std::vector<std::tuple<MinorSpec, long long, long long>>> ledger;  // (spec, tau, nu)
};

/// Checks has_konig on every minor (all 3^n deletion/contraction assignments).
PackingReport has_packing_property(const Clutter& c, bool collect_ledger = false,
                                   int universe_limit = 16);

enum class MengerianVerdict { PassBounded, Fail, NotIdeal };
enum class MengerianFailReason { None, NoWitnessEdge, TauNuMismatch };

struct MengerianReport {
    bool ideal = false;
    long long w_max = 0;
    MengerianVerdict verdict = MengerianVerdict::NotIdeal;
    std::uint64_t checked = 0;  // weight vectors with tau^w > 0 that were verified
    std::optional<WeightVector> failing_w;
    MengerianFailReason reason = MengerianFailReason::None;
    /// Witness edge per weight code (nullopt where tau^w = 0); filled on request.
    std::optional<std::vector<std::optional<int>>> witnesses;
};

/// Bounded evidence for the mengerian property: for every w in {0..w_max}^n
/// with tau^w > 0 there must be an edge e with tau^w = tau^{w-e} + 1
/// (w - chi_e clamped at 0). Gated on idealness; a pass is evidence up to
/// the bound, not a proof.
MengerianReport is_mengerian_bounded(const Clutter& c, long long w_max,
                                     bool collect_witnesses = false, int polyhedron_limit = 12);

/// Smallest edge index e with tau^w = tau^{w-e} + 1, if any. Needs tau^w > 0.
std::optional<int> mengerian_witness_edge(const Clutter& c, const WeightVector& w);
std::optional<int> mengerian_witness_edge_against(const Clutter& blocker_of_c,
                                                  const std::vector<VSet>& edges,
                                                  const WeightVector& w);

/// Partition of the vertices into size-2 blocks, each met exactly once by
/// every edge.
struct TwoPartition {
    std::vector<std::pair<int, int>> blocks;

    int d() const { return static_cast<int>(blocks.size()); }
    bool operator==(const TwoPartition&) const = default;
};

/// Canonically first valid partition (greedy over smallest vertex indices),
/// or nullopt. Odd universes have none.
std::optional<TwoPartition> find_2partition(const Clutter& c);

bool is_valid_2partition(const Clutter& c, const TwoPartition& part);

struct RankPropReport {
    int d = 0;
    int rank_a = 0;
    int rank_b = 0;               // B appends the all-ones row to A
    bool rank_bound_holds = false;  // rank(A) <= d + 1
    bool rank_a_equals_rank_b = false;
    bool konig_case_applies = false;  // minimal cover of size d >= 3 and König
    std::optional<bool> konig_case_rank_ok;  // rank(A) == d + 1 when it applies
};

/// Rank facts for a 2-partitionable clutter. Throws NotTwoPartitionableError
/// when part is not valid for c.
RankPropReport check_rank_prop(const Clutter& c, const TwoPartition& part);

struct DichotomyReport {
    bool minor_konig = false;
    std::vector<int> qualifying_blocks;  // blocks disjoint from the contraction set
    bool holds = false;  // minor König, or W misses every qualifying block
};

/// The minor dichotomy: delete W = spec.deletions, contract Z = spec.contractions;
/// requires W disjoint from Z, Z disjoint from some block, and a proper spec.
DichotomyReport check_minor_dichotomy(const Clutter& c, const TwoPartition& part,
                                      const MinorSpec& spec);

struct ClassifyReport {
    bool binary = false;    // every 3-edge symmetric difference contains an edge
    bool dyadic = false;    // |t ∩ e| <= 2 for every edge e and blocker member t
    bool balanced = false;  // no odd-order submatrix with exactly two 1s per row/column
    bool balanced_bounded = true;  // balanced verdict only covers odd orders <= limit
    int balanced_limit = 7;
};

ClassifyReport classify(const Clutter& c, int balanced_limit = 7);

/// B = [A; 1-row] as an (n+1) x q matrix: columns are the edge characteristic
/// vectors with a trailing 1.
IntegerMatrix b_matrix(const Clutter& c);

}  // namespace clutterlab
