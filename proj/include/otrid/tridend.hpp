#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "otrid/omega_table.hpp"

namespace otrid {

// The three indexed product families. The order mirrors the coefficient
// triple (a, b, c) used for one-product combinations.
enum class Prod : int { Prec = 0, Circ = 1, Succ = 2 };
inline const char* prod_name(Prod p) {
    switch (p) {
        case Prod::Prec: return "prec";
        case Prod::Circ: return "circ";
        default: return "succ";
    }
}

// Anything with three bilinear Omega-indexed products over an exactly
// comparable element type.
template <class A>
concept TridendImpl = requires(const A& alg, Prod p, int w, const typename A::Elem& x) {
    { alg.table() } -> std::convertible_to<const OmegaTable&>;
    { alg.product(p, w, x, x) } -> std::same_as<typename A::Elem>;
    { alg.add(x, x) } -> std::same_as<typename A::Elem>;
    { alg.equal(x, x) } -> std::same_as<bool>;
    { alg.show(x) } -> std::convertible_to<std::string>;
};

struct TridendViolation {
    std::string axiom;  // "tri1".."tri7" or "comm_prec" / "comm_circ"
    int alpha = 0, beta = 0;
    std::string a, b, c;  // witnesses (c empty for commutativity checks)
    std::string lhs, rhs;
};

struct TridendReport {
    bool passed = true;
    long long instances_checked = 0;
    std::vector<TridendViolation> violations;
    std::string to_json() const;
};

// Evaluates both sides of the seven axioms for every supplied triple and
// every (alpha, beta); stop_at_first short-circuits for samplers.
template <TridendImpl A>
TridendReport check_tridend_axioms(const A& alg, std::span<const std::array<typename A::Elem, 3>> triples,
                                   bool stop_at_first = false) {
    using E = typename A::Elem;
    const OmegaTable& t = alg.table();
    const int n = t.size();
    TridendReport rep;
    auto P = [&](Prod p, int w, const E& x, const E& y) { return alg.product(p, w, x, y); };

    for (const auto& tr : triples) {
        const E& a = tr[0];
        const E& b = tr[1];
        const E& c = tr[2];
        for (int al = 0; al < n; ++al) {
            for (int be = 0; be < n; ++be) {
                E lhs[7], rhs[7];
                lhs[0] = P(Prod::Prec, be, P(Prod::Prec, al, a, b), c);
                rhs[0] = alg.add(
                    alg.add(P(Prod::Prec, t.ra(al, be), a, P(Prod::Succ, t.rt(al, be), b, c)),
                            P(Prod::Prec, t.la(al, be), a, P(Prod::Prec, t.lt(al, be), b, c))),
                    P(Prod::Prec, t.dot(al, be), a, P(Prod::Circ, t.star(al, be), b, c)));
                lhs[1] = P(Prod::Prec, be, P(Prod::Succ, al, a, b), c);
                rhs[1] = P(Prod::Succ, al, a, P(Prod::Prec, be, b, c));
                lhs[2] = P(Prod::Succ, al, a, P(Prod::Succ, be, b, c));
                rhs[2] = alg.add(
                    alg.add(P(Prod::Succ, t.ra(al, be), P(Prod::Succ, t.rt(al, be), a, b), c),
                            P(Prod::Succ, t.la(al, be), P(Prod::Prec, t.lt(al, be), a, b), c)),
                    P(Prod::Succ, t.dot(al, be), P(Prod::Circ, t.star(al, be), a, b), c));
                lhs[3] = P(Prod::Circ, be, P(Prod::Succ, al, a, b), c);
                rhs[3] = P(Prod::Succ, al, a, P(Prod::Circ, be, b, c));
                lhs[4] = P(Prod::Circ, be, P(Prod::Prec, al, a, b), c);
                rhs[4] = P(Prod::Circ, be, a, P(Prod::Succ, al, b, c));
                lhs[5] = P(Prod::Prec, be, P(Prod::Circ, al, a, b), c);
                rhs[5] = P(Prod::Circ, al, a, P(Prod::Prec, be, b, c));
                lhs[6] = P(Prod::Circ, be, P(Prod::Circ, al, a, b), c);
                rhs[6] = P(Prod::Circ, al, a, P(Prod::Circ, be, b, c));
                for (int ax = 0; ax < 7; ++ax) {
                    ++rep.instances_checked;
                    if (!alg.equal(lhs[ax], rhs[ax])) {
                        rep.violations.push_back({"tri" + std::to_string(ax + 1), al, be, alg.show(a),
                                                  alg.show(b), alg.show(c), alg.show(lhs[ax]),
                                                  alg.show(rhs[ax])});
                        if (stop_at_first) {
                            rep.passed = false;
                            return rep;
                        }
                    }
                }
            }
        }
    }
    rep.passed = rep.violations.empty();
    return rep;
}

// a prec_w b == b succ_w a  and  a circ_w b == b circ_w a, over all pairs.
template <TridendImpl A>
TridendReport check_commutative(const A& alg, std::span<const std::array<typename A::Elem, 2>> pairs,
                                bool stop_at_first = false) {
    const OmegaTable& t = alg.table();
    const int n = t.size();
    TridendReport rep;
    for (const auto& pr : pairs) {
        const auto& a = pr[0];
        const auto& b = pr[1];
        for (int w = 0; w < n; ++w) {
            auto l1 = alg.product(Prod::Prec, w, a, b);
            auto r1 = alg.product(Prod::Succ, w, b, a);
            ++rep.instances_checked;
            if (!alg.equal(l1, r1)) {
                rep.violations.push_back(
                    {"comm_prec", w, 0, alg.show(a), alg.show(b), "", alg.show(l1), alg.show(r1)});
                if (stop_at_first) {
                    rep.passed = false;
                    return rep;
                }
            }
            auto l2 = alg.product(Prod::Circ, w, a, b);
            auto r2 = alg.product(Prod::Circ, w, b, a);
            ++rep.instances_checked;
            if (!alg.equal(l2, r2)) {
                rep.violations.push_back(
                    {"comm_circ", w, 0, alg.show(a), alg.show(b), "", alg.show(l2), alg.show(r2)});
                if (stop_at_first) {
                    rep.passed = false;
                    return rep;
                }
            }
        }
    }
    rep.passed = rep.violations.empty();
    return rep;
}

struct EquivalenceProbe {
    bool ets_ok = false;
    bool axioms_ok = false;
};

// Runs the ETS table check next to the exhaustive tree-axiom scan over one
// angle label. leaf_bound caps the leaf count of every product evaluated
// during the scan, so the scanned triples have at most leaf_bound + 1 leaves
// in total; the smallest bound that can separate tables is 6 (a corolla pair
// against the 3-leaf trees).
EquivalenceProbe ets_equivalence_probe(const OmegaTable& t, int leaf_bound);

}  // namespace otrid
