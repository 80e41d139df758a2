#pragma once

#include <array>
#include <string>
#include <vector>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

enum class FKind { None, CaseI, CaseII, Custom };

/// Augmentation recipe for Q_pq. Case I adds a subset of the four starred
/// special edges; Case II adds the stars of every base edge outside F'
/// (F' a subset of the four special edges); Custom adds explicit edges.
struct FSpec {
    FKind kind = FKind::None;
    unsigned mask = 0;  // CaseI: subset of the starred quad; CaseII: F' subset of the quad
    std::vector<VSet> custom;

    static FSpec none() { return {}; }
    static FSpec case_i(unsigned mask) { return {FKind::CaseI, mask & 0xFu, {}}; }
    static FSpec case_i_all() { return case_i(0xFu); }
    static FSpec case_ii(unsigned mask) { return {FKind::CaseII, mask & 0xFu, {}}; }
    static FSpec custom_edges(std::vector<VSet> edges) { return {FKind::Custom, 0, std::move(edges)}; }

    /// Accepts none | caseI:all | caseI:<1-based indices> | caseII:all | caseII:<indices>.
    static FSpec parse(const std::string& s);
    std::string to_string() const;

    bool operator==(const FSpec&) const = default;
};

/// The Q_pq universe is ordered p_1..p_p, p_1*..p_p*, q_1..q_q, q_1*..q_q*, r, r*.
/// Base edges are built from the four row blocks of the incidence transpose,
/// rows inside a block ordered by binary counting of the subset characteristic
/// vector (bit i of k selects p_{i+1}, k = 1..2^p-1).
struct QpqDescriptor {
    int p = 0, q = 0;
    FSpec fspec;
    VertexUniverse universe;
    std::vector<VSet> base_edges;  // E_pq in construction order
    std::vector<VSet> f_edges;     // resolved augmentation edges

    int n() const { return 2 * (p + q + 1); }
    int p_vertex(int i) const { return i; }
    int p_star_vertex(int i) const { return p + i; }
    int q_vertex(int j) const { return 2 * p + j; }
    int q_star_vertex(int j) const { return 2 * p + q + j; }
    int r_vertex() const { return 2 * p + 2 * q; }
    int r_star_vertex() const { return 2 * p + 2 * q + 1; }

    VSet p_block() const;
    VSet p_star_block() const;
    VSet q_block() const;
    VSet q_star_block() const;

    /// The fixed-point-free involution v <-> v*.
    int star(int v) const;
    VSet star(VSet s) const;

    /// Edges of the incidence transpose in construction order (base then F).
    std::vector<VSet> construction_edges() const;

    /// The canonical clutter on E_pq together with the resolved F edges.
    Clutter clutter() const;
};

QpqDescriptor generate_qpq(int p, int q);
QpqDescriptor generate_qpq_f(int p, int q, const FSpec& f);

/// The four special edges {PQr, P*Q*r, PQ*r*, P*Qr*}, in that order.
std::array<VSet, 4> f_pq(const QpqDescriptor& desc);

enum class BlockerType : char {
    PairA = 'a',      // {v, v*}, v in P u Q u {r}
    QuadB = 'b',      // {p_i, p_j*, q_k, q_l*}, i != j, k != l
    TripleC = 'c',    // {p_i, p_j*, r}, i != j
    TripleD = 'd',    // {q_k, q_l*, r*}, k != l
    FamilyE = 'e',    // P q_k* r*
    FamilyF = 'f',    // P* q_k r*
    FamilyG = 'g',    // p_i Q r
    FamilyH = 'h',    // p_i* Q* r
    SpecialF = 's',   // a retained special edge (Case II)
};

struct TypedTransversal {
    VSet set;
    BlockerType type;
};

/// Closed-form blocker of Q_pq: the eight families enumerated explicitly.
std::vector<TypedTransversal> blocker_formula_qpq_typed(const QpqDescriptor& desc);
Clutter blocker_formula_qpq(int p, int q);

/// Closed-form blocker of Q_pq^F for Case I / Case II (and None) specs.
/// Case I keeps types a-d plus each of the e-h families whose covering
/// special edge's star is absent from F. Case II keeps types a, b plus
/// the members of F' themselves (the special edges whose stars were left
/// out of the augmentation; only those survive as transversals).
std::vector<TypedTransversal> blocker_formula_qpq_f_typed(const QpqDescriptor& desc);
Clutter blocker_formula_qpq_f(const QpqDescriptor& desc);

}  // namespace clutterlab
