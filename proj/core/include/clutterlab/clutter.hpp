#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clutterlab/errors.hpp"
#include "clutterlab/lattice.hpp"
#include "clutterlab/vset.hpp"

namespace clutterlab {

/// Ordered list of distinct vertex labels; indices 0..n-1 are stable.
class VertexUniverse {
public:
    VertexUniverse() = default;
    explicit VertexUniverse(std::vector<std::string> names);

    /// Universe "v0".."v{n-1}" (or with a custom prefix).
    static VertexUniverse numbered(int n, const std::string& prefix = "v");

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(std::string_view label) const;

    /// Universe restricted to the vertices in `keep`, original order and labels.
    VertexUniverse restricted(VSet keep) const;

    bool operator==(const VertexUniverse&) const = default;

private:
    std::vector<std::string> names_;
};

/// Arbitrary edge family over a universe; duplicates and inclusions allowed.
struct Hypergraph {
    VertexUniverse universe;
    std::vector<VSet> edges;

    int n() const { return universe.size(); }
};

struct MinorSpec {
    VSet deletions;     // I_d
    VSet contractions;  // I_c

    MinorSpec() = default;
    MinorSpec(VSet del, VSet con) : deletions(del), contractions(con) {
        if (deletions.intersects(contractions)) throw OverlappingSpecError();
    }

    bool empty() const { return deletions.empty() && contractions.empty(); }
    bool proper() const { return !empty(); }
    bool operator==(const MinorSpec&) const = default;
};

/// Edge family with no edge containing another and no duplicates.
/// Edges are kept in canonical order (lexicographic by sorted index list),
/// so equality of clutters is equality of members.
class Clutter {
public:
    Clutter() = default;

    /// Validates the clutter invariants; throws InclusionConflictError on violation.
    static Clutter from_edges(VertexUniverse u, std::vector<VSet> edges);

    /// Keeps the inclusionwise-minimal edges, deduplicated.
    static Clutter minimal_of(VertexUniverse u, const std::vector<VSet>& edges);

    const VertexUniverse& universe() const { return universe_; }
    const std::vector<VSet>& edges() const { return edges_; }
    int n() const { return universe_.size(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool edgeless() const { return edges_.empty(); }
    bool has_empty_edge() const { return !edges_.empty() && edges_.front().empty(); }

    Hypergraph as_hypergraph() const { return Hypergraph{universe_, edges_}; }

    bool operator==(const Clutter&) const = default;

private:
    VertexUniverse universe_;
    std::vector<VSet> edges_;
};

struct IncidenceView {
    IntegerMatrix matrix;  // n rows (vertices) x q columns (edges), 0/1
};

/// H^min: inclusionwise-minimal edges of h, deduplicated.
Clutter minimalize(const Hypergraph& h);

/// b(c): the clutter of minimal transversals, built incrementally edge by edge.
/// Poles: blocker of the edgeless clutter is pinned to the edgeless clutter
/// (not {∅}), and blocker({∅}) is the edgeless clutter (nothing meets the
/// empty edge). The blocker involution skips these two inputs; use
/// is_blocker_pole to detect them.
Clutter blocker(const Clutter& c);

/// True for the two poles (edgeless, single-empty-edge) where the blocker
/// convention above breaks the involution.
bool is_blocker_pole(const Clutter& c);

Hypergraph delete_vertices(const Hypergraph& h, VSet s);
Hypergraph contract_vertices(const Hypergraph& h, VSet s);
Clutter delete_vertices(const Clutter& c, VSet s);
Clutter contract_vertices(const Clutter& c, VSet s);  // minimalizes the result

/// c \ I_d / I_c: contractions applied first, then deletions.
Clutter minor(const Clutter& c, const MinorSpec& spec);

/// Calls fn for each of the 3^n (spec, minor) pairs in deterministic order
/// (vertex 0 is the least-significant base-3 digit: 0 keep, 1 delete,
/// 2 contract). fn returning false stops the enumeration early.
void for_each_minor(const Clutter& c,
                    const std::function<bool(const MinorSpec&, const Clutter&)>& fn,
                    int universe_limit = 16);

std::vector<std::pair<MinorSpec, Clutter>> enumerate_minors(const Clutter& c,
                                                            int universe_limit = 16);

/// Decodes minor number `code` in [0, 3^n) into the deterministic-order spec.
MinorSpec minor_spec_from_code(std::uint64_t code, int n);

IncidenceView incidence(const Clutter& c);

std::string to_string(VSet s, const VertexUniverse& u);

}  // namespace clutterlab
