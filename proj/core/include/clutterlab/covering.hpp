#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

/// Nonnegative integer weight per vertex.
struct WeightVector {
    std::vector<long long> w;

    WeightVector() = default;
    explicit WeightVector(std::vector<long long> values);
    static WeightVector uniform(int n, long long value);

    int size() const { return static_cast<int>(w.size()); }
    long long at(int i) const { return w[static_cast<std::size_t>(i)]; }
    long long weight_of(VSet s) const;

    /// w - characteristic vector of e, clamped at 0 per coordinate.
    WeightVector minus_edge_clamped(VSet e) const;

    bool operator==(const WeightVector&) const = default;
};

/// Decodes weight vector number `code` in [0, (w_max+1)^n), vertex 0 least significant.
WeightVector weight_from_code(std::uint64_t code, int n, long long w_max);
std::uint64_t weight_box_size(int n, long long w_max);  // (w_max+1)^n, throws BoundTooLargeError past budget

using RationalPoint = std::vector<Rat>;

/// Value plus a re-checkable certificate.
struct OptReport {
    std::string problem;  // tau | nu | tau_w | nu_w
    long long value = 0;
    std::optional<VSet> cover;                        // transversal witness
    std::optional<std::vector<long long>> packing;    // edge multiplicities y
    std::string method;
};

/// Minimum transversal size; witness is a minimum member of the blocker.
OptReport tau(const Clutter& c);
/// Maximum number of pairwise-disjoint edges.
OptReport nu(const Clutter& c);
/// Integer-program minimum of sum w(v) over transversals (evaluated on the blocker).
OptReport tau_w(const Clutter& c, const WeightVector& w);
/// Maximum sum y over nonnegative integer y with Ay <= w (branch and bound).
OptReport nu_w(const Clutter& c, const WeightVector& w);

/// As above but against a precomputed blocker (avoids recomputation in weight scans).
long long tau_w_value(const Clutter& blocker_of_c, const WeightVector& w);

/// Re-verifies an OptReport witness against its instance.
bool recheck(const Clutter& c, const WeightVector& w, const OptReport& r);

/// All vertices of Q(A) = {x >= 0, xA >= 1}: every choice of n linearly
/// independent tight constraints, solved exactly, feasible, deduplicated.
std::vector<RationalPoint> polyhedron_vertices(const Clutter& c, int universe_limit = 12);

struct IdealReport {
    bool ideal = false;
    std::optional<RationalPoint> fractional_vertex;
};

/// Integral set covering polyhedron test.
IdealReport is_ideal(const Clutter& c, int universe_limit = 12);

struct LpValues {
    Rat primal_min;  // min <w,x> over Q(A)
    Rat dual_max;    // max <1,y> over {y >= 0, Ay <= w}, enumerated independently
};

LpValues lp_values(const Clutter& c, const WeightVector& w, int universe_limit = 12);

}  // namespace clutterlab
