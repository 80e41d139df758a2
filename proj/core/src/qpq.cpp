#include "clutterlab/qpq.hpp"

#include <algorithm>

namespace clutterlab {

namespace {

unsigned parse_mask(const std::string& body) {
    if (body == "all") return 0xFu;
    unsigned mask = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.size() != 1 || tok[0] < '1' || tok[0] > '4')
            throw ParseError("F spec index must be 1..4, got '" + tok + "'");
        mask |= 1u << (tok[0] - '1');
        pos = comma == std::string::npos ? body.size() : comma + 1;
    }
    if (mask == 0) throw ParseError("empty F spec index list");
    return mask;
}

}  // namespace

FSpec FSpec::parse(const std::string& s) {
    if (s == "none") return none();
    if (s.rfind("caseI:", 0) == 0) return case_i(parse_mask(s.substr(6)));
    if (s.rfind("caseII:", 0) == 0) return case_ii(parse_mask(s.substr(7)));
    throw ParseError("bad F spec '" + s + "' (expected none | caseI:... | caseII:... | custom:<file>)");
}

std::string FSpec::to_string() const {
    auto mask_str = [this] {
        if (mask == 0xFu) return std::string("all");
        std::string out;
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) {
                if (!out.empty()) out += ',';
                out += static_cast<char>('1' + i);
            }
        return out;
    };
    switch (kind) {
        case FKind::None: return "none";
        case FKind::CaseI: return "caseI:" + mask_str();
        case FKind::CaseII: return "caseII:" + mask_str();
        case FKind::Custom: return "custom";
    }
    return "none";
}

VSet QpqDescriptor::p_block() const {
    VSet s;
    for (int i = 0; i < p; ++i) s.add(p_vertex(i));
    return s;
}
VSet QpqDescriptor::p_star_block() const {
    VSet s;
    for (int i = 0; i < p; ++i) s.add(p_star_vertex(i));
    return s;
}
VSet QpqDescriptor::q_block() const {
    VSet s;
    for (int j = 0; j < q; ++j) s.add(q_vertex(j));
    return s;
}
VSet QpqDescriptor::q_star_block() const {
    VSet s;
    for (int j = 0; j < q; ++j) s.add(q_star_vertex(j));
    return s;
}

int QpqDescriptor::star(int v) const {
    if (v < p) return v + p;
    if (v < 2 * p) return v - p;
    if (v < 2 * p + q) return v + q;
    if (v < 2 * p + 2 * q) return v - q;
    return v == r_vertex() ? r_star_vertex() : r_vertex();
}

VSet QpqDescriptor::star(VSet s) const {
    VSet out;
    for (int v : s.indices()) out.add(star(v));
    return out;
}

std::vector<VSet> QpqDescriptor::construction_edges() const {
    std::vector<VSet> out = base_edges;
    out.insert(out.end(), f_edges.begin(), f_edges.end());
    return out;
}

Clutter QpqDescriptor::clutter() const {
    return Clutter::minimal_of(universe, construction_edges());
}

namespace {

VertexUniverse qpq_universe(int p, int q) {
    std::vector<std::string> names;
    for (int i = 1; i <= p; ++i) names.push_back("p" + std::to_string(i));
    for (int i = 1; i <= p; ++i) names.push_back("p" + std::to_string(i) + "*");
    for (int j = 1; j <= q; ++j) names.push_back("q" + std::to_string(j));
    for (int j = 1; j <= q; ++j) names.push_back("q" + std::to_string(j) + "*");
    names.push_back("r");
    names.push_back("r*");
    return VertexUniverse(std::move(names));
}

}  // namespace

QpqDescriptor generate_qpq(int p, int q) {
    if (p < 1 || q < 1) throw Error("Q_pq needs p >= 1 and q >= 1");
    QpqDescriptor d;
    d.p = p;
    d.q = q;
    d.universe = qpq_universe(p, q);

    auto p_selector = [&](unsigned k) {  // S_k unstarred, complement starred
        VSet s;
        for (int i = 0; i < p; ++i)
            s.add((k >> i) & 1u ? d.p_vertex(i) : d.p_star_vertex(i));
        return s;
    };
    auto p_selector_flipped = [&](unsigned k) {  // complement unstarred, S_k starred
        VSet s;
        for (int i = 0; i < p; ++i)
            s.add((k >> i) & 1u ? d.p_star_vertex(i) : d.p_vertex(i));
        return s;
    };
    auto q_selector = [&](unsigned t) {
        VSet s;
        for (int j = 0; j < q; ++j)
            s.add((t >> j) & 1u ? d.q_vertex(j) : d.q_star_vertex(j));
        return s;
    };
    auto q_selector_flipped = [&](unsigned t) {
        VSet s;
        for (int j = 0; j < q; ++j)
            s.add((t >> j) & 1u ? d.q_star_vertex(j) : d.q_vertex(j));
        return s;
    };

    // Row blocks of the incidence transpose: [H_p H_p* J 0 1 0], [H_p* H_p 0 J 1 0],
    // [J 0 H_q* H_q 0 1], [0 J H_q H_q* 0 1].
    for (unsigned k = 1; k < (1u << p); ++k)
        d.base_edges.push_back(p_selector(k) | d.q_block() | VSet::single(d.r_vertex()));
    for (unsigned k = 1; k < (1u << p); ++k)
        d.base_edges.push_back(p_selector_flipped(k) | d.q_star_block() | VSet::single(d.r_vertex()));
    for (unsigned t = 1; t < (1u << q); ++t)
        d.base_edges.push_back(d.p_block() | q_selector_flipped(t) | VSet::single(d.r_star_vertex()));
    for (unsigned t = 1; t < (1u << q); ++t)
        d.base_edges.push_back(d.p_star_block() | q_selector(t) | VSet::single(d.r_star_vertex()));
    return d;
}

std::array<VSet, 4> f_pq(const QpqDescriptor& d) {
    VSet r = VSet::single(d.r_vertex());
    VSet rs = VSet::single(d.r_star_vertex());
    return {
        d.p_block() | d.q_block() | r,            // PQr
        d.p_star_block() | d.q_star_block() | r,  // P*Q*r
        d.p_block() | d.q_star_block() | rs,      // PQ*r*
        d.p_star_block() | d.q_block() | rs,      // P*Qr*
    };
}

QpqDescriptor generate_qpq_f(int p, int q, const FSpec& f) {
    QpqDescriptor d = generate_qpq(p, q);
    d.fspec = f;
    auto quad = f_pq(d);
    switch (f.kind) {
        case FKind::None:
            break;
        case FKind::CaseI:
            for (int i = 0; i < 4; ++i)
                if (f.mask & (1u << i)) d.f_edges.push_back(d.star(quad[static_cast<std::size_t>(i)]));
            break;
        case FKind::CaseII: {
            // F = stars of every base edge outside F'.
            for (const VSet& e : d.base_edges) {
                bool in_f_prime = false;
                for (int i = 0; i < 4; ++i)
                    if ((f.mask & (1u << i)) && e == quad[static_cast<std::size_t>(i)]) in_f_prime = true;
                if (!in_f_prime) d.f_edges.push_back(d.star(e));
            }
            break;
        }
        case FKind::Custom: {
            VSet all = VSet::full(d.n());
            for (const VSet& e : f.custom) {
                if (!e.subset_of(all)) throw Error("custom F edge outside the universe");
                for (const VSet& b : d.base_edges)
                    if (e.subset_of(b) || b.subset_of(e))
                        throw InclusionConflictError("custom F edge comparable with a base edge");
                d.f_edges.push_back(e);
            }
            break;
        }
    }
    return d;
}

namespace {

void push_type_a(const QpqDescriptor& d, std::vector<TypedTransversal>& out) {
    for (int i = 0; i < d.p; ++i)
        out.push_back({VSet::of({d.p_vertex(i), d.p_star_vertex(i)}), BlockerType::PairA});
    for (int j = 0; j < d.q; ++j)
        out.push_back({VSet::of({d.q_vertex(j), d.q_star_vertex(j)}), BlockerType::PairA});
    out.push_back({VSet::of({d.r_vertex(), d.r_star_vertex()}), BlockerType::PairA});
}

void push_type_b(const QpqDescriptor& d, std::vector<TypedTransversal>& out) {
    for (int i = 0; i < d.p; ++i)
        for (int j = 0; j < d.p; ++j) {
            if (i == j) continue;
            for (int k = 0; k < d.q; ++k)
                for (int l = 0; l < d.q; ++l) {
                    if (k == l) continue;
                    out.push_back({VSet::of({d.p_vertex(i), d.p_star_vertex(j), d.q_vertex(k),
                                             d.q_star_vertex(l)}),
                                   BlockerType::QuadB});
                }
        }
}

void push_type_c(const QpqDescriptor& d, std::vector<TypedTransversal>& out) {
    for (int i = 0; i < d.p; ++i)
        for (int j = 0; j < d.p; ++j) {
            if (i == j) continue;
            out.push_back({VSet::of({d.p_vertex(i), d.p_star_vertex(j), d.r_vertex()}),
                           BlockerType::TripleC});
        }
}

void push_type_d(const QpqDescriptor& d, std::vector<TypedTransversal>& out) {
    for (int k = 0; k < d.q; ++k)
        for (int l = 0; l < d.q; ++l) {
            if (k == l) continue;
            out.push_back({VSet::of({d.q_vertex(k), d.q_star_vertex(l), d.r_star_vertex()}),
                           BlockerType::TripleD});
        }
}

void push_families_e_to_h(const QpqDescriptor& d, unsigned keep_mask,
                          std::vector<TypedTransversal>& out) {
    VSet r = VSet::single(d.r_vertex());
    VSet rs = VSet::single(d.r_star_vertex());
    if (keep_mask & 1u)  // (e) P q_k* r*
        for (int k = 0; k < d.q; ++k)
            out.push_back({d.p_block() | VSet::single(d.q_star_vertex(k)) | rs, BlockerType::FamilyE});
    if (keep_mask & 2u)  // (f) P* q_k r*
        for (int k = 0; k < d.q; ++k)
            out.push_back({d.p_star_block() | VSet::single(d.q_vertex(k)) | rs, BlockerType::FamilyF});
    if (keep_mask & 4u)  // (g) p_i Q r
        for (int i = 0; i < d.p; ++i)
            out.push_back({VSet::single(d.p_vertex(i)) | d.q_block() | r, BlockerType::FamilyG});
    if (keep_mask & 8u)  // (h) p_i* Q* r
        for (int i = 0; i < d.p; ++i)
            out.push_back({VSet::single(d.p_star_vertex(i)) | d.q_star_block() | r, BlockerType::FamilyH});
}

Clutter to_clutter(const QpqDescriptor& d, const std::vector<TypedTransversal>& members) {
    std::vector<VSet> edges;
    edges.reserve(members.size());
    for (const auto& m : members) edges.push_back(m.set);
    return Clutter::minimal_of(d.universe, edges);
}

}  // namespace

std::vector<TypedTransversal> blocker_formula_qpq_typed(const QpqDescriptor& d) {
    std::vector<TypedTransversal> out;
    push_type_a(d, out);
    push_type_b(d, out);
    push_type_c(d, out);
    push_type_d(d, out);
    push_families_e_to_h(d, 0xFu, out);
    return out;
}

Clutter blocker_formula_qpq(int p, int q) {
    QpqDescriptor d = generate_qpq(p, q);
    return to_clutter(d, blocker_formula_qpq_typed(d));
}

std::vector<TypedTransversal> blocker_formula_qpq_f_typed(const QpqDescriptor& d) {
    std::vector<TypedTransversal> out;
    auto quad = f_pq(d);
    switch (d.fspec.kind) {
        case FKind::None:
            return blocker_formula_qpq_typed(d);
        case FKind::CaseI: {
            push_type_a(d, out);
            push_type_b(d, out);
            push_type_c(d, out);
            push_type_d(d, out);
            // Family (e) is contained in PQ*r* and dies exactly when (PQ*r*)* = P*Qr
            // joined F; (f) in P*Qr* dies under PQ*r; (g) in PQr under P*Q*r*;
            // (h) in P*Q*r under PQr*. Starred-quad mask bits: 0 = (PQr)*, 1 = (P*Q*r)*,
            // 2 = (PQ*r*)*, 3 = (P*Qr*)*.
            unsigned keep = 0;
            if (!(d.fspec.mask & (1u << 2))) keep |= 1u;  // e survives without (PQ*r*)*
            if (!(d.fspec.mask & (1u << 3))) keep |= 2u;  // f survives without (P*Qr*)*
            if (!(d.fspec.mask & (1u << 0))) keep |= 4u;  // g survives without (PQr)*
            if (!(d.fspec.mask & (1u << 1))) keep |= 8u;  // h survives without (P*Q*r)*
            push_families_e_to_h(d, keep, out);
            return out;
        }
        case FKind::CaseII: {
            push_type_a(d, out);
            push_type_b(d, out);
            for (int i = 0; i < 4; ++i)
                if (d.fspec.mask & (1u << i))
                    out.push_back({quad[static_cast<std::size_t>(i)], BlockerType::SpecialF});
            return out;
        }
        case FKind::Custom:
            throw UnsupportedFSpecError("no closed-form blocker for custom F edges");
    }
    return out;
}

Clutter blocker_formula_qpq_f(const QpqDescriptor& d) {
    return to_clutter(d, blocker_formula_qpq_f_typed(d));
}

}  // namespace clutterlab
