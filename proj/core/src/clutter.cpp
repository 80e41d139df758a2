#include "clutterlab/clutter.hpp"

#include <algorithm>
#include <unordered_map>

namespace clutterlab {

namespace {

constexpr int kMaxUniverse = 64;

void sort_canonical(std::vector<VSet>& edges) {
    std::sort(edges.begin(), edges.end(), VSet::lex_less);
}

std::vector<VSet> minimal_edges(std::vector<VSet> edges) {
    sort_canonical(edges);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<VSet> out;
    for (const VSet& e : edges) {
        bool dominated = false;
        for (const VSet& f : edges) {
            if (f != e && f.subset_of(e)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(e);
    }
    return out;
}

}  // namespace

VertexUniverse::VertexUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    if (static_cast<int>(names_.size()) > kMaxUniverse)
        throw UniverseTooLargeError("universe exceeds 64 vertices");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw ParseError("duplicate vertex label: " + names_[i]);
}

VertexUniverse VertexUniverse::numbered(int n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return VertexUniverse(std::move(names));
}

std::optional<int> VertexUniverse::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

VertexUniverse VertexUniverse::restricted(VSet keep) const {
    std::vector<std::string> names;
    for (int i : keep.indices()) names.push_back(names_[static_cast<std::size_t>(i)]);
    return VertexUniverse(std::move(names));
}

Clutter Clutter::from_edges(VertexUniverse u, std::vector<VSet> edges) {
    VSet all = VSet::full(u.size());
    for (const VSet& e : edges)
        if (!e.subset_of(all)) throw ParseError("edge outside the universe");
    sort_canonical(edges);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i] == edges[i + 1]) throw InclusionConflictError("duplicate edge");
    for (const VSet& e : edges)
        for (const VSet& f : edges)
            if (e != f && e.subset_of(f))
                throw InclusionConflictError("edge contains another edge");
    Clutter c;
    c.universe_ = std::move(u);
    c.edges_ = std::move(edges);
    return c;
}

Clutter Clutter::minimal_of(VertexUniverse u, const std::vector<VSet>& edges) {
    Clutter c;
    c.universe_ = std::move(u);
    c.edges_ = minimal_edges(edges);
    return c;
}

Clutter minimalize(const Hypergraph& h) {
    return Clutter::minimal_of(h.universe, h.edges);
}

bool is_blocker_pole(const Clutter& c) {
    return c.edgeless() || c.has_empty_edge();
}

Clutter blocker(const Clutter& c) {
    if (is_blocker_pole(c)) return Clutter::minimal_of(c.universe(), {});

    // Incremental transversal construction: extend the minimal partial
    // transversals one edge at a time, minimalizing after each step.
    std::vector<VSet> partial = {VSet{}};
    for (const VSet& edge : c.edges()) {
        std::vector<VSet> next;
        std::vector<VSet> missing;
        for (const VSet& t : partial) {
            if (t.intersects(edge))
                next.push_back(t);
            else
                missing.push_back(t);
        }
        for (const VSet& t : missing)
            for (int v : edge.indices()) next.push_back(t.with(v));
        partial = minimal_edges(std::move(next));
    }
    return Clutter::minimal_of(c.universe(), partial);
}

namespace {

// Remaps edge masks onto the restricted universe (surviving vertices keep
// their original labels and relative order).
std::vector<VSet> remap(const std::vector<VSet>& edges, VSet keep) {
    std::vector<int> surviving = keep.indices();
    std::vector<VSet> out;
    out.reserve(edges.size());
    for (const VSet& e : edges) {
        VSet m;
        for (std::size_t k = 0; k < surviving.size(); ++k)
            if (e.contains(surviving[k])) m.add(static_cast<int>(k));
        out.push_back(m);
    }
    return out;
}

}  // namespace

Hypergraph delete_vertices(const Hypergraph& h, VSet s) {
    VSet keep = s.complement(h.n());
    std::vector<VSet> kept;
    for (const VSet& e : h.edges)
        if (!e.intersects(s)) kept.push_back(e);
    return Hypergraph{h.universe.restricted(keep), remap(kept, keep)};
}

Hypergraph contract_vertices(const Hypergraph& h, VSet s) {
    VSet keep = s.complement(h.n());
    std::vector<VSet> stripped;
    stripped.reserve(h.edges.size());
    for (const VSet& e : h.edges) stripped.push_back(e - s);
    return Hypergraph{h.universe.restricted(keep), remap(stripped, keep)};
}

Clutter delete_vertices(const Clutter& c, VSet s) {
    Hypergraph h = delete_vertices(c.as_hypergraph(), s);
    return Clutter::from_edges(h.universe, h.edges);  // deletion preserves incomparability
}

Clutter contract_vertices(const Clutter& c, VSet s) {
    return minimalize(contract_vertices(c.as_hypergraph(), s));
}

Clutter minor(const Clutter& c, const MinorSpec& spec) {
    if (spec.deletions.intersects(spec.contractions)) throw OverlappingSpecError();
    return delete_vertices(contract_vertices(c, spec.contractions),
                           // deletion indices shift after the contraction's universe restriction
                           [&] {
                               VSet keep = spec.contractions.complement(c.n());
                               std::vector<int> surviving = keep.indices();
                               VSet d;
                               for (std::size_t k = 0; k < surviving.size(); ++k)
                                   if (spec.deletions.contains(surviving[k])) d.add(static_cast<int>(k));
                               return d;
                           }());
}

MinorSpec minor_spec_from_code(std::uint64_t code, int n) {
    VSet del, con;
    for (int v = 0; v < n; ++v) {
        switch (code % 3) {
            case 1: del.add(v); break;
            case 2: con.add(v); break;
            default: break;
        }
        code /= 3;
    }
    return MinorSpec(del, con);
}

void for_each_minor(const Clutter& c,
                    const std::function<bool(const MinorSpec&, const Clutter&)>& fn,
                    int universe_limit) {
    if (c.n() > universe_limit)
        throw UniverseTooLargeError("minor enumeration limited to " + std::to_string(universe_limit) +
                                    " vertices, got " + std::to_string(c.n()));
    std::uint64_t total = 1;
    for (int i = 0; i < c.n(); ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        MinorSpec spec = minor_spec_from_code(code, c.n());
        if (!fn(spec, minor(c, spec))) return;
    }
}

std::vector<std::pair<MinorSpec, Clutter>> enumerate_minors(const Clutter& c, int universe_limit) {
    std::vector<std::pair<MinorSpec, Clutter>> out;
    for_each_minor(
        c,
        [&](const MinorSpec& spec, const Clutter& m) {
            out.emplace_back(spec, m);
            return true;
        },
        universe_limit);
    return out;
}

IncidenceView incidence(const Clutter& c) {
    IntegerMatrix a(c.n(), c.edge_count());
    for (int k = 0; k < c.edge_count(); ++k)
        for (int i : c.edges()[static_cast<std::size_t>(k)].indices()) a.at(i, k) = 1;
    return IncidenceView{std::move(a)};
}

std::string to_string(VSet s, const VertexUniverse& u) {
    std::string out = "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) out += ",";
        out += u.name(i);
        first = false;
    }
    return out + "}";
}

}  // namespace clutterlab
