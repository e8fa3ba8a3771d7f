#pragma once

#include <string>
#include <vector>

#include "otrid/linalg.hpp"
#include "otrid/omega_table.hpp"

namespace otrid {

// Weight-2 component of the free binary nonsymmetric operad on the 3|Omega|
// generators {prec_w, circ_w, succ_w}: basis {g o1 h} (g composed with h in
// the first slot) followed by {g o2 h}, pairs ordered lexicographically.
// Generator id = kind * |Omega| + index with kinds prec = 0, circ = 1,
// succ = 2, matching the coefficient-triple order (a, b, c).
struct Weight2Basis {
    int omega_size;

    explicit Weight2Basis(int n) : omega_size(n) {}
    int gens() const { return 3 * omega_size; }
    int dim() const { return 2 * gens() * gens(); }

    int gen(int kind, int w) const { return kind * omega_size + w; }
    int index(int slot /*1 or 2*/, int outer, int inner) const {
        return (slot - 1) * gens() * gens() + outer * gens() + inner;
    }
    std::string describe(int idx) const;  // e.g. "prec_0 o1 succ_1"
};

struct RelationSpace {
    Weight2Basis basis;
    std::vector<RatVec> vectors;  // as emitted, before reduction
    RowSpace span;                // reduced row space

    explicit RelationSpace(int omega_size) : basis(omega_size), span(basis.dim()) {}
    int rank() const { return span.rank(); }
    void push(RatVec v);
    std::string to_json(bool emit_vectors) const;
};

// The seven defining relation families (LHS - RHS, |Omega|^2 vectors each).
RelationSpace relation_space(const OmegaTable& t);

// Annihilator of relation_space under the quadratic pairing
// <g o1 h, g' o1 h'> = +delta, <g o2 h, g' o2 h'> = -delta, mixed zero, dual
// generators identified index-wise (prec* = dashv, circ* = perp, succ* = vdash).
RelationSpace koszul_dual(const OmegaTable& t);

// The eleven dual relation families over the dual generators. The vdash
// families carry the fiber conditions on (LHS outer, LHS inner) in that
// order; spans are verified against koszul_dual by the tests.
RelationSpace prop43_relations(const OmegaTable& t);

// <x, y> under the pairing above, both sides in Weight2Basis coordinates.
Rational quadratic_pairing(const Weight2Basis& basis, const RatVec& x, const RatVec& y);

// Human-readable dual presentation, one line per emitted relation.
std::vector<std::string> render_presentation(const RelationSpace& rs, bool dual_names);

struct AssocViolation {
    int family;  // 1..7
    int alpha, beta;
    std::string lhs, rhs;
};

struct AssocReport {
    bool passed = true;
    std::vector<AssocViolation> violations;
    std::string to_json() const;
};

// Scalar conditions for m = sum a_w prec_w + b_w circ_w + c_w succ_w to be
// associative, evaluated family by family over all (alpha, beta).
AssocReport assoc_conditions(const OmegaTable& t, const std::vector<Rational>& a,
                             const std::vector<Rational>& b, const std::vector<Rational>& c);

// The tensor reformulation: either b = 0 with the four phi conditions, or
// c = a with the three phi conditions on a alone.
bool assoc_by_remark(const OmegaTable& t, const std::vector<Rational>& a,
                     const std::vector<Rational>& b, const std::vector<Rational>& c);

// true iff both formulations return the same verdict.
bool assoc_remark_equivalence(const OmegaTable& t, const std::vector<Rational>& a,
                              const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace otrid
