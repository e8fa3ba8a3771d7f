#include "otrid/tensor_collapse.hpp"

#include <map>

#include "json.hpp"
#include "otrid/error.hpp"
#include "otrid/linalg.hpp"

namespace otrid {

using nlohmann::ordered_json;

std::pair<int, int> phi_map(PhiKind which, const OmegaTable& t, int a, int b) {
    switch (which) {
        case PhiKind::Left: return {t.la(a, b), t.lt(a, b)};
        case PhiKind::Right: return {t.ra(a, b), t.rt(a, b)};
        default: return {t.dot(a, b), t.star(a, b)};
    }
}

PhiProperties phi_properties(PhiKind which, const OmegaTable& t) {
    const int n = t.size();
    PhiProperties out;
    std::map<std::pair<int, int>, std::pair<int, int>> seen;  // image -> first preimage
    out.surjective = true;
    out.injective = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto v = phi_map(which, t, a, b);
            auto [it, fresh] = seen.emplace(v, std::make_pair(a, b));
            if (!fresh && out.injective) {
                out.injective = false;
                out.collision = std::array<std::pair<int, int>, 2>{it->second, std::make_pair(a, b)};
            }
        }
    for (int a = 0; a < n && out.surjective; ++a)
        for (int b = 0; b < n; ++b)
            if (!seen.count({a, b})) {
                out.surjective = false;
                out.missed_pair = {a, b};
                break;
            }
    return out;
}

std::string phi_properties_json(const OmegaTable& t) {
    ordered_json j;
    const char* names[3] = {"phi_left", "phi_right", "phi_star"};
    PhiKind kinds[3] = {PhiKind::Left, PhiKind::Right, PhiKind::Star};
    for (int i = 0; i < 3; ++i) {
        PhiProperties p = phi_properties(kinds[i], t);
        ordered_json pj;
        pj["surjective"] = p.surjective;
        pj["injective"] = p.injective;
        if (p.missed_pair) pj["missed_pair"] = {p.missed_pair->first, p.missed_pair->second};
        if (p.collision)
            pj["collision"] = {{(*p.collision)[0].first, (*p.collision)[0].second},
                               {(*p.collision)[1].first, (*p.collision)[1].second}};
        j[names[i]] = pj;
    }
    return j.dump(2);
}

std::string show_collapsed(const CollapsedComb& c) {
    return c.str([](const CollapsedKey& k) {
        return std::to_string(k.first) + " (x) " + k.second.canonical();
    });
}

CollapsedTreeAlgebra::CollapsedTreeAlgebra(const OmegaTable& t, bool require_ets)
    : trivial_(builtin_table("trivial", 1)), inner_table_(&t), trees_(t, require_ets) {}

CollapsedTreeAlgebra::Elem CollapsedTreeAlgebra::product(Prod op, int, const Elem& a, const Elem& b) const {
    const OmegaTable& t = *inner_table_;
    PhiKind kind = op == Prod::Prec ? PhiKind::Left : op == Prod::Succ ? PhiKind::Right : PhiKind::Star;
    return CollapsedComb::bilinear(
        [&](const CollapsedKey& x, const CollapsedKey& y) {
            auto [outer, inner] = phi_map(kind, t, x.first, y.first);
            TreeComb parts = trees_.basis_product(op, inner, x.second, y.second);
            CollapsedComb out;
            for (const auto& [tree, coeff] : parts.terms()) out.add_term({outer, tree}, coeff);
            return out;
        },
        a, b);
}

namespace {

struct DegreeData {
    std::vector<CollapsedComb> basis_elems;  // an independent generating subset of the span
    RowSpace space;                          // their coordinate span
    int full_dim = 0;

    explicit DegreeData(int cols) : space(cols) {}
};

RatVec coords(const CollapsedComb& c, const std::map<CollapsedKey, int>& index, int cols) {
    RatVec v(cols, Rational(0));
    for (const auto& [k, coeff] : c.terms()) {
        auto it = index.find(k);
        if (it == index.end()) throw Error(Errc::invalid, "collapsed element leaves the graded component");
        v[it->second] = coeff;
    }
    return v;
}

// shared machinery: spans of generator products, degree by degree
ProbeResult run_probe(const OmegaTable& t, const std::vector<std::string>& labels, int n_max,
                      bool freeness) {
    if (n_max < 2) throw Error(Errc::domain, "probe: n_max must be >= 2");
    if (n_max > 6) throw Error(Errc::limit, "probe: n_max capped at 6");
    const int omega = t.size();
    CollapsedTreeAlgebra alg(t, false);

    std::vector<DegreeData> degrees;  // index 0 = degree 1
    ProbeResult result;

    for (int n = 1; n <= n_max; ++n) {
        // coordinates of the degree-n component
        std::vector<Tree> trees = enumerate_trees(n, labels, omega, n_max);
        std::map<CollapsedKey, int> index;
        int cols = 0;
        for (int w = 0; w < omega; ++w)
            for (const auto& tr : trees) index.emplace(CollapsedKey{w, tr}, cols++);

        DegreeData data(cols);
        data.full_dim = cols;
        if (n == 1) {
            for (int w = 0; w < omega; ++w)
                for (const auto& lab : labels) {
                    CollapsedComb g = CollapsedComb::single({w, Tree::corolla(lab)});
                    if (data.space.insert(coords(g, index, cols))) data.basis_elems.push_back(g);
                }
        } else {
            for (int k = 1; k < n; ++k) {
                const DegreeData& L = degrees[k - 1];
                const DegreeData& R = degrees[n - k - 1];
                for (const auto& x : L.basis_elems)
                    for (const auto& y : R.basis_elems)
                        for (Prod op : {Prod::Prec, Prod::Circ, Prod::Succ}) {
                            CollapsedComb p = alg.product(op, 0, x, y);
                            if (data.space.insert(coords(p, index, cols))) data.basis_elems.push_back(p);
                        }
            }
        }

        BigInt target = freeness ? little_schroeder(n) * BigInt::pow(BigInt(omega * static_cast<int>(labels.size())),
                                                                     static_cast<unsigned>(n))
                                 : BigInt(data.full_dim);
        BigInt rank(data.space.rank());
        if (rank != target) {
            result.ok = false;
            result.failed_degree = n;
            result.detail = "degree " + std::to_string(n) + ": span rank " + rank.str() +
                            (freeness ? " != free dimension " : " != component dimension ") + target.str();
            return result;
        }
        degrees.push_back(std::move(data));
    }
    return result;
}

}  // namespace

ProbeResult generation_probe(const OmegaTable& t, const std::vector<std::string>& labels, int n_max) {
    return run_probe(t, labels, n_max, false);
}

ProbeResult freeness_probe(const OmegaTable& t, const std::vector<std::string>& labels, int n_max) {
    return run_probe(t, labels, n_max, true);
}

}  // namespace otrid
