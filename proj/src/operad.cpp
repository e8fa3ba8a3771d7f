#include "otrid/operad.hpp"

#include <map>

#include "json.hpp"
#include "otrid/error.hpp"
#include "otrid/tensor_collapse.hpp"

namespace otrid {

using nlohmann::ordered_json;

namespace {

const char* kKindNames[3] = {"prec", "circ", "succ"};
const char* kDualNames[3] = {"dashv", "perp", "vdash"};

enum Kind { PREC = 0, CIRC = 1, SUCC = 2 };

}  // namespace

std::string Weight2Basis::describe(int idx) const {
    int slot = idx / (gens() * gens()) + 1;
    int rest = idx % (gens() * gens());
    int outer = rest / gens();
    int inner = rest % gens();
    auto name = [&](int g) {
        return std::string(kKindNames[g / omega_size]) + "_" + std::to_string(g % omega_size);
    };
    return name(outer) + " o" + std::to_string(slot) + " " + name(inner);
}

void RelationSpace::push(RatVec v) {
    span.insert(v);
    vectors.push_back(std::move(v));
}

std::string RelationSpace::to_json(bool emit_vectors) const {
    ordered_json j;
    j["omega_size"] = basis.omega_size;
    j["ambient_dim"] = basis.dim();
    j["relations_emitted"] = vectors.size();
    j["rank"] = rank();
    if (emit_vectors) {
        ordered_json vs = ordered_json::array();
        for (const auto& v : vectors) {
            ordered_json terms = ordered_json::array();
            for (int i = 0; i < basis.dim(); ++i)
                if (!v[i].is_zero()) terms.push_back(ordered_json::array({v[i].str(), basis.describe(i)}));
            vs.push_back(terms);
        }
        j["vectors"] = vs;
    }
    return j.dump(2);
}

RelationSpace relation_space(const OmegaTable& t) {
    const int n = t.size();
    RelationSpace rs(n);
    const Weight2Basis& B = rs.basis;
    auto vec = [&]() { return RatVec(B.dim(), Rational(0)); };
    auto g = [&](Kind k, int w) { return B.gen(k, w); };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // prec_b o (prec_a, I) = prec_{a->b} o (I, succ_{a|>b})
            //                      + prec_{a<-b} o (I, prec_{a<|b})
            //                      + prec_{a.b} o (I, circ_{a*b})
            RatVec r1 = vec();
            r1[B.index(1, g(PREC, b), g(PREC, a))] = Rational(1);
            r1[B.index(2, g(PREC, t.ra(a, b)), g(SUCC, t.rt(a, b)))] =
                r1[B.index(2, g(PREC, t.ra(a, b)), g(SUCC, t.rt(a, b)))] - Rational(1);
            r1[B.index(2, g(PREC, t.la(a, b)), g(PREC, t.lt(a, b)))] =
                r1[B.index(2, g(PREC, t.la(a, b)), g(PREC, t.lt(a, b)))] - Rational(1);
            r1[B.index(2, g(PREC, t.dot(a, b)), g(CIRC, t.star(a, b)))] =
                r1[B.index(2, g(PREC, t.dot(a, b)), g(CIRC, t.star(a, b)))] - Rational(1);
            rs.push(std::move(r1));

            // prec_b o (succ_a, I) = succ_a o (I, prec_b)
            RatVec r2 = vec();
            r2[B.index(1, g(PREC, b), g(SUCC, a))] = Rational(1);
            r2[B.index(2, g(SUCC, a), g(PREC, b))] = Rational(-1);
            rs.push(std::move(r2));

            // succ_a o (I, succ_b) = succ_{a->b} o (succ_{a|>b}, I)
            //                      + succ_{a<-b} o (prec_{a<|b}, I)
            //                      + succ_{a.b} o (circ_{a*b}, I)
            RatVec r3 = vec();
            r3[B.index(2, g(SUCC, a), g(SUCC, b))] = Rational(1);
            r3[B.index(1, g(SUCC, t.ra(a, b)), g(SUCC, t.rt(a, b)))] =
                r3[B.index(1, g(SUCC, t.ra(a, b)), g(SUCC, t.rt(a, b)))] - Rational(1);
            r3[B.index(1, g(SUCC, t.la(a, b)), g(PREC, t.lt(a, b)))] =
                r3[B.index(1, g(SUCC, t.la(a, b)), g(PREC, t.lt(a, b)))] - Rational(1);
            r3[B.index(1, g(SUCC, t.dot(a, b)), g(CIRC, t.star(a, b)))] =
                r3[B.index(1, g(SUCC, t.dot(a, b)), g(CIRC, t.star(a, b)))] - Rational(1);
            rs.push(std::move(r3));

            // circ_b o (succ_a, I) = succ_a o (I, circ_b)
            RatVec r4 = vec();
            r4[B.index(1, g(CIRC, b), g(SUCC, a))] = Rational(1);
            r4[B.index(2, g(SUCC, a), g(CIRC, b))] = Rational(-1);
            rs.push(std::move(r4));

            // circ_b o (prec_a, I) = circ_b o (I, succ_a)
            RatVec r5 = vec();
            r5[B.index(1, g(CIRC, b), g(PREC, a))] = Rational(1);
            r5[B.index(2, g(CIRC, b), g(SUCC, a))] = Rational(-1);
            rs.push(std::move(r5));

            // prec_b o (circ_a, I) = circ_a o (I, prec_b)
            RatVec r6 = vec();
            r6[B.index(1, g(PREC, b), g(CIRC, a))] = Rational(1);
            r6[B.index(2, g(CIRC, a), g(PREC, b))] = Rational(-1);
            rs.push(std::move(r6));

            // circ_b o (circ_a, I) = circ_a o (I, circ_b)
            RatVec r7 = vec();
            r7[B.index(1, g(CIRC, b), g(CIRC, a))] = Rational(1);
            r7[B.index(2, g(CIRC, a), g(CIRC, b))] = Rational(-1);
            rs.push(std::move(r7));
        }
    return rs;
}

Rational quadratic_pairing(const Weight2Basis& basis, const RatVec& x, const RatVec& y) {
    Rational acc(0);
    int half = basis.gens() * basis.gens();
    for (int i = 0; i < basis.dim(); ++i) {
        if (x[i].is_zero() || y[i].is_zero()) continue;
        Rational term = x[i] * y[i];
        acc = i < half ? acc + term : acc - term;
    }
    return acc;
}

RelationSpace koszul_dual(const OmegaTable& t) {
    RelationSpace R = relation_space(t);
    const Weight2Basis& B = R.basis;
    int half = B.gens() * B.gens();
    // v annihilates R under the signed pairing iff (R * D) v = 0
    std::vector<RatVec> scaled;
    scaled.reserve(R.vectors.size());
    for (const auto& r : R.vectors) {
        RatVec s = r;
        for (int i = half; i < B.dim(); ++i) s[i] = -s[i];
        scaled.push_back(std::move(s));
    }
    RelationSpace dual(t.size());
    for (auto& v : kernel_basis(scaled, B.dim())) dual.push(std::move(v));
    return dual;
}

RelationSpace prop43_relations(const OmegaTable& t) {
    const int n = t.size();
    RelationSpace rs(n);
    const Weight2Basis& B = rs.basis;
    auto vec = [&]() { return RatVec(B.dim(), Rational(0)); };
    auto g = [&](Kind k, int w) { return B.gen(k, w); };
    auto sub1 = [&](RatVec& v, int outer, int inner) {
        int i = B.index(1, outer, inner);
        v[i] = v[i] - Rational(1);
    };
    auto sub2 = [&](RatVec& v, int outer, int inner) {
        int i = B.index(2, outer, inner);
        v[i] = v[i] - Rational(1);
    };

    // dual generators share indices with the primal ones:
    // dashv = prec*, perp = circ*, vdash = succ*.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // dashv_a o (I, dashv_b) = sum_{phi_<-(g,d) = (a,b)} dashv_d o (dashv_g, I)
            RatVec k1 = vec();
            k1[B.index(2, g(PREC, a), g(PREC, b))] = Rational(1);
            for (int ga = 0; ga < n; ++ga)
                for (int de = 0; de < n; ++de)
                    if (t.la(ga, de) == a && t.lt(ga, de) == b) sub1(k1, g(PREC, de), g(PREC, ga));
            rs.push(std::move(k1));

            // dashv_a o (I, vdash_b) = sum_{phi_->(g,d) = (a,b)} dashv_d o (dashv_g, I)
            RatVec k2 = vec();
            k2[B.index(2, g(PREC, a), g(SUCC, b))] = Rational(1);
            for (int ga = 0; ga < n; ++ga)
                for (int de = 0; de < n; ++de)
                    if (t.ra(ga, de) == a && t.rt(ga, de) == b) sub1(k2, g(PREC, de), g(PREC, ga));
            rs.push(std::move(k2));

            // dashv_a o (I, perp_b) = sum_{phi_*(g,d) = (a,b)} dashv_d o (dashv_g, I)
            RatVec k3 = vec();
            k3[B.index(2, g(PREC, a), g(CIRC, b))] = Rational(1);
            for (int ga = 0; ga < n; ++ga)
                for (int de = 0; de < n; ++de)
                    if (t.dot(ga, de) == a && t.star(ga, de) == b) sub1(k3, g(PREC, de), g(PREC, ga));
            rs.push(std::move(k3));

            // vdash_a o (vdash_b, I) = sum_{phi_->(g,d) = (a,b)} vdash_g o (I, vdash_d)
            RatVec k4 = vec();
            k4[B.index(1, g(SUCC, a), g(SUCC, b))] = Rational(1);
            for (int ga = 0; ga < n; ++ga)
                for (int de = 0; de < n; ++de)
                    if (t.ra(ga, de) == a && t.rt(ga, de) == b) sub2(k4, g(SUCC, ga), g(SUCC, de));
            rs.push(std::move(k4));

            // vdash_a o (dashv_b, I) = sum_{phi_<-(g,d) = (a,b)} vdash_g o (I, vdash_d)
            RatVec k5 = vec();
            k5[B.index(1, g(SUCC, a), g(PREC, b))] = Rational(1);
            for (int ga = 0; ga < n; ++ga)
                for (int de = 0; de < n; ++de)
                    if (t.la(ga, de) == a && t.lt(ga, de) == b) sub2(k5, g(SUCC, ga), g(SUCC, de));
            rs.push(std::move(k5));

            // vdash_a o (perp_b, I) = sum_{phi_*(g,d) = (a,b)} vdash_g o (I, vdash_d)
            RatVec k6 = vec();
            k6[B.index(1, g(SUCC, a), g(CIRC, b))] = Rational(1);
            for (int ga = 0; ga < n; ++ga)
                for (int de = 0; de < n; ++de)
                    if (t.dot(ga, de) == a && t.star(ga, de) == b) sub2(k6, g(SUCC, ga), g(SUCC, de));
            rs.push(std::move(k6));

            // dashv_b o (vdash_a, I) = vdash_a o (I, dashv_b)
            RatVec k7 = vec();
            k7[B.index(1, g(PREC, b), g(SUCC, a))] = Rational(1);
            sub2(k7, g(SUCC, a), g(PREC, b));
            rs.push(std::move(k7));

            // perp_b o (vdash_a, I) = vdash_a o (I, perp_b)
            RatVec k8 = vec();
            k8[B.index(1, g(CIRC, b), g(SUCC, a))] = Rational(1);
            sub2(k8, g(SUCC, a), g(CIRC, b));
            rs.push(std::move(k8));

            // perp_b o (dashv_a, I) = perp_b o (I, vdash_a)
            RatVec k9 = vec();
            k9[B.index(1, g(CIRC, b), g(PREC, a))] = Rational(1);
            sub2(k9, g(CIRC, b), g(SUCC, a));
            rs.push(std::move(k9));

            // dashv_b o (perp_a, I) = perp_a o (I, dashv_b)
            RatVec k10 = vec();
            k10[B.index(1, g(PREC, b), g(CIRC, a))] = Rational(1);
            sub2(k10, g(CIRC, a), g(PREC, b));
            rs.push(std::move(k10));

            // perp_b o (perp_a, I) = perp_a o (I, perp_b)
            RatVec k11 = vec();
            k11[B.index(1, g(CIRC, b), g(CIRC, a))] = Rational(1);
            sub2(k11, g(CIRC, a), g(CIRC, b));
            rs.push(std::move(k11));
        }
    return rs;
}

std::vector<std::string> render_presentation(const RelationSpace& rs, bool dual_names) {
    const Weight2Basis& B = rs.basis;
    auto name = [&](int gid) {
        const char* const* names = dual_names ? kDualNames : kKindNames;
        return std::string(names[gid / B.omega_size]) + "_" + std::to_string(gid % B.omega_size);
    };
    std::vector<std::string> out;
    for (const auto& v : rs.vectors) {
        std::string lhs, rhs;
        for (int i = 0; i < B.dim(); ++i) {
            if (v[i].is_zero()) continue;
            int slot = i / (B.gens() * B.gens()) + 1;
            int rest = i % (B.gens() * B.gens());
            int outer = rest / B.gens();
            int inner = rest % B.gens();
            std::string term = name(outer) + (slot == 1 ? " o (" + name(inner) + ", I)"
                                                        : " o (I, " + name(inner) + ")");
            Rational c = v[i];
            if (Rational(0) < c) {
                if (!lhs.empty()) lhs += " + ";
                if (!c.is_one()) lhs += c.str() + "*";
                lhs += term;
            } else {
                if (!rhs.empty()) rhs += " + ";
                Rational mc = -c;
                if (!mc.is_one()) rhs += mc.str() + "*";
                rhs += term;
            }
        }
        if (rhs.empty()) rhs = "0";
        if (lhs.empty()) lhs = "0";
        out.push_back(lhs + " = " + rhs);
    }
    return out;
}

AssocReport assoc_conditions(const OmegaTable& t, const std::vector<Rational>& a,
                             const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const int n = t.size();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n ||
        static_cast<int>(c.size()) != n)
        throw Error(Errc::domain, "assoc: coefficient vectors must be indexed by Omega");
    AssocReport rep;
    auto fiber_sum = [&](PhiKind kind, const std::vector<Rational>& u, int al, int be) {
        Rational s(0);
        for (int ga = 0; ga < n; ++ga)
            for (int de = 0; de < n; ++de) {
                auto v = phi_map(kind, t, ga, de);
                if (v.first == al && v.second == be) s = s + u[ga] * u[de];
            }
        return s;
    };
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
            Rational lhs[7], rhs[7];
            lhs[0] = a[al] * a[be];
            rhs[0] = fiber_sum(PhiKind::Left, a, al, be);
            lhs[1] = a[al] * b[be];
            rhs[1] = fiber_sum(PhiKind::Star, a, al, be);
            lhs[2] = a[al] * c[be];
            rhs[2] = fiber_sum(PhiKind::Right, a, al, be);
            lhs[3] = b[al] * c[be];
            rhs[3] = b[al] * a[be];
            lhs[4] = c[al] * a[be];
            rhs[4] = fiber_sum(PhiKind::Left, c, al, be);
            lhs[5] = c[al] * b[be];
            rhs[5] = fiber_sum(PhiKind::Star, c, al, be);
            lhs[6] = c[al] * c[be];
            rhs[6] = fiber_sum(PhiKind::Right, c, al, be);
            for (int f = 0; f < 7; ++f)
                if (lhs[f] != rhs[f])
                    rep.violations.push_back({f + 1, al, be, lhs[f].str(), rhs[f].str()});
        }
    rep.passed = rep.violations.empty();
    return rep;
}

namespace {

using Tensor = std::map<std::pair<int, int>, Rational>;

Tensor tensor_of(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Tensor t;
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            Rational c = u[i] * v[j];
            if (!c.is_zero()) t[{static_cast<int>(i), static_cast<int>(j)}] = c;
        }
    return t;
}

Tensor apply_phi(PhiKind kind, const OmegaTable& t, const Tensor& x) {
    Tensor out;
    for (const auto& [k, c] : x) {
        auto v = phi_map(kind, t, k.first, k.second);
        auto it = out.find(v);
        if (it == out.end())
            out[v] = c;
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

bool assoc_by_remark(const OmegaTable& t, const std::vector<Rational>& a,
                     const std::vector<Rational>& b, const std::vector<Rational>& c) {
    Tensor aa = tensor_of(a, a);
    Tensor cc = tensor_of(c, c);
    // system 1: b = 0 and the four image conditions with phi_* killing both squares
    bool sys1 = all_zero(b) && apply_phi(PhiKind::Left, t, aa) == aa &&
                apply_phi(PhiKind::Right, t, aa) == tensor_of(a, c) &&
                apply_phi(PhiKind::Star, t, aa).empty() &&
                apply_phi(PhiKind::Left, t, cc) == tensor_of(c, a) &&
                apply_phi(PhiKind::Right, t, cc) == cc && apply_phi(PhiKind::Star, t, cc).empty();
    if (sys1) return true;
    // system 2: c = a and the three conditions on a alone
    bool ca = a == c;
    return ca && apply_phi(PhiKind::Left, t, aa) == aa && apply_phi(PhiKind::Right, t, aa) == aa &&
           apply_phi(PhiKind::Star, t, aa) == tensor_of(a, b);
}

bool assoc_remark_equivalence(const OmegaTable& t, const std::vector<Rational>& a,
                              const std::vector<Rational>& b, const std::vector<Rational>& c) {
    return assoc_conditions(t, a, b, c).passed == assoc_by_remark(t, a, b, c);
}

std::string AssocReport::to_json() const {
    ordered_json j;
    j["passed"] = passed;
    j["violations"] = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json jv;
        jv["family"] = v.family;
        jv["alpha"] = v.alpha;
        jv["beta"] = v.beta;
        jv["lhs"] = v.lhs;
        jv["rhs"] = v.rhs;
        j["violations"].push_back(jv);
    }
    return j.dump(2);
}

}  // namespace otrid
