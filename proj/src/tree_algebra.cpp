#include "otrid/tree_algebra.hpp"

#include <array>

#include "json.hpp"
#include "otrid/error.hpp"

namespace otrid {

std::string TridendReport::to_json() const {
    nlohmann::ordered_json j;
    j["passed"] = passed;
    j["instances_checked"] = instances_checked;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
        nlohmann::ordered_json jv;
        jv["axiom"] = v.axiom;
        jv["alpha"] = v.alpha;
        jv["beta"] = v.beta;
        jv["a"] = v.a;
        jv["b"] = v.b;
        if (!v.c.empty()) jv["c"] = v.c;
        jv["lhs"] = v.lhs;
        jv["rhs"] = v.rhs;
        j["violations"].push_back(jv);
    }
    return j.dump(2);
}

FreeTreeAlgebra::FreeTreeAlgebra(const OmegaTable& t, bool require_ets) : table_(&t) {
    if (require_ets && !table_passes(t, CheckLevel::Ets))
        throw Error(Errc::invalid, "tree products: the table is not an ETS (pass require_ets=false to experiment)");
}

namespace {

// replace one child of the root by each basis term of a combination, with a
// leaf retype applied first
TreeComb graft_terms(const NodePtr& root, size_t slot, const TreeComb& parts,
                     std::optional<int> retype_left, std::optional<int> retype_right) {
    TreeComb out;
    for (const auto& [tree, coeff] : parts.terms()) {
        TreeChild c = TreeChild::subtree(tree.root());
        if (retype_left) c = set_leftmost_type(c, retype_left);
        if (retype_right) c = set_rightmost_type(c, retype_right);
        std::vector<TreeChild> ch = root->children;
        ch[slot] = c;
        out.add_term(Tree(make_node(std::move(ch), root->angles)), coeff);
    }
    return out;
}

}  // namespace

TreeComb FreeTreeAlgebra::basis_product(Prod op, int omega, const Tree& left, const Tree& right) const {
    const OmegaTable& t = *table_;
    if (omega < 0 || omega >= t.size()) throw Error(Errc::domain, "tree product: omega index out of range");
    const NodePtr& L = left.root();
    const NodePtr& R = right.root();

    if (op == Prod::Prec) {
        const TreeChild& last = L->children.back();
        if (last.is_leaf()) {
            // Case 1: replace the rightmost leaf of L by right with its
            // leftmost leaf typed omega
            return graft_terms(L, L->children.size() - 1, TreeComb::single(right), omega, std::nullopt);
        }
        // Case 2: recurse through the rightmost subtree, retype after the fact
        int alpha = *leftmost_type(last);
        Tree inner(set_leftmost_type(last, std::nullopt).node);
        size_t slot = L->children.size() - 1;
        TreeComb out = graft_terms(L, slot, basis_product(Prod::Succ, t.rt(alpha, omega), inner, right),
                                   t.ra(alpha, omega), std::nullopt);
        out = out + graft_terms(L, slot, basis_product(Prod::Prec, t.lt(alpha, omega), inner, right),
                                t.la(alpha, omega), std::nullopt);
        out = out + graft_terms(L, slot, basis_product(Prod::Circ, t.star(alpha, omega), inner, right),
                                t.dot(alpha, omega), std::nullopt);
        return out;
    }

    if (op == Prod::Succ) {
        const TreeChild& first = R->children.front();
        if (first.is_leaf()) {
            // Case 3: replace the leftmost leaf of R by left with its
            // rightmost leaf typed omega
            return graft_terms(R, 0, TreeComb::single(left), std::nullopt, omega);
        }
        // Case 4
        int beta = *rightmost_type(first);
        Tree inner(set_rightmost_type(first, std::nullopt).node);
        TreeComb out = graft_terms(R, 0, basis_product(Prod::Succ, t.rt(omega, beta), left, inner),
                                   std::nullopt, t.ra(omega, beta));
        out = out + graft_terms(R, 0, basis_product(Prod::Prec, t.lt(omega, beta), left, inner),
                                std::nullopt, t.la(omega, beta));
        out = out + graft_terms(R, 0, basis_product(Prod::Circ, t.star(omega, beta), left, inner),
                                std::nullopt, t.dot(omega, beta));
        return out;
    }

    // circ
    if (left.leaves() == 2) {
        // Case 5: prepend a leaf child to right's root and type its first
        // child's leftmost leaf
        std::vector<TreeChild> ch;
        ch.reserve(R->children.size() + 1);
        ch.push_back(TreeChild::leaf());
        ch.push_back(set_leftmost_type(R->children[0], omega));
        ch.insert(ch.end(), R->children.begin() + 1, R->children.end());
        std::vector<std::string> an;
        an.reserve(R->angles.size() + 1);
        an.push_back(L->angles[0]);
        an.insert(an.end(), R->angles.begin(), R->angles.end());
        return TreeComb::single(Tree(make_node(std::move(ch), std::move(an))));
    }
    const TreeChild& first = L->children.front();
    if (first.is_leaf()) {
        int alpha = *leftmost_type(L->children[1]);
        if (L->children.size() == 2) {
            // Case 6: (| x ^a T2) circ_w U = x circ_w (T2 succ_a U)
            Tree t2(set_leftmost_type(L->children[1], std::nullopt).node);
            Tree x_cor = Tree::corolla(L->angles[0]);
            return product(Prod::Circ, omega, TreeComb::single(x_cor),
                           basis_product(Prod::Succ, alpha, t2, right));
        }
        // Case 7: (| x1 ^a T2 T3 ...) circ_w U = x1 circ_a ((T2 T3 ...) circ_w U)
        std::vector<TreeChild> rest(L->children.begin() + 1, L->children.end());
        rest[0] = set_leftmost_type(rest[0], std::nullopt);
        std::vector<std::string> angles(L->angles.begin() + 1, L->angles.end());
        Tree r(make_node(std::move(rest), std::move(angles)));
        Tree x_cor = Tree::corolla(L->angles[0]);
        return product(Prod::Circ, alpha, TreeComb::single(x_cor), basis_product(Prod::Circ, omega, r, right));
    }
    // Case 8: (T1^a T2 ...) circ_w U = T1 succ_a ((| T2 ...) circ_w U)
    int alpha = *rightmost_type(first);
    Tree t1(set_rightmost_type(first, std::nullopt).node);
    std::vector<TreeChild> rest = L->children;
    rest[0] = TreeChild::leaf();
    Tree r(make_node(std::move(rest), L->angles));
    return product(Prod::Succ, alpha, TreeComb::single(t1), basis_product(Prod::Circ, omega, r, right));
}

TreeComb FreeTreeAlgebra::product(Prod op, int omega, const TreeComb& a, const TreeComb& b) const {
    return TreeComb::bilinear(
        [&](const Tree& x, const Tree& y) { return basis_product(op, omega, x, y); }, a, b);
}

TreeComb FreeTreeAlgebra::product_with_unit(Prod op, int omega, const std::optional<TreeComb>& a,
                                            const std::optional<TreeComb>& b) const {
    if (!a && !b) throw Error(Errc::domain, "tree product: both operands are the boundary unit");
    if (!a) return op == Prod::Succ ? *b : TreeComb();  // | succ T = T, else 0
    if (!b) return op == Prod::Prec ? *a : TreeComb();  // T prec | = T, else 0
    return product(op, omega, *a, *b);
}

TreeComb FreeTreeAlgebra::combo_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                        const std::vector<Rational>& c, const TreeComb& x,
                                        const TreeComb& y) const {
    const int n = table_->size();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n ||
        static_cast<int>(c.size()) != n)
        throw Error(Errc::domain, "combo product: coefficient vectors must be indexed by Omega");
    TreeComb out;
    for (int w = 0; w < n; ++w) {
        if (!a[w].is_zero()) out = out + product(Prod::Prec, w, x, y).scaled(a[w]);
        if (!b[w].is_zero()) out = out + product(Prod::Circ, w, x, y).scaled(b[w]);
        if (!c[w].is_zero()) out = out + product(Prod::Succ, w, x, y).scaled(c[w]);
    }
    return out;
}

std::vector<std::array<TreeComb, 3>> tree_triples_by_total_leaves(int max_total_leaves,
                                                                  const OmegaTable& t) {
    std::vector<std::vector<Tree>> by_size;  // by_size[k] = trees with k+2 leaves
    const std::vector<std::string> labels = {"x"};
    for (int n = 1; n + 1 + 4 <= max_total_leaves; ++n)
        by_size.push_back(enumerate_trees(n, labels, t.size(), max_total_leaves));
    std::vector<std::array<TreeComb, 3>> triples;
    for (size_t i = 0; i < by_size.size(); ++i)
        for (size_t j = 0; j < by_size.size(); ++j)
            for (size_t k = 0; k < by_size.size(); ++k) {
                int total = static_cast<int>(i + j + k) + 6;
                if (total > max_total_leaves) continue;
                for (const auto& a : by_size[i])
                    for (const auto& b : by_size[j])
                        for (const auto& c : by_size[k])
                            triples.push_back({TreeComb::single(a), TreeComb::single(b),
                                               TreeComb::single(c)});
            }
    return triples;
}

EquivalenceProbe ets_equivalence_probe(const OmegaTable& t, int leaf_bound) {
    if (leaf_bound < 6) throw Error(Errc::domain, "equivalence probe: leaf bound must be >= 6");
    EquivalenceProbe out;
    out.ets_ok = table_passes(t, CheckLevel::Ets);
    FreeTreeAlgebra alg(t, false);
    auto triples = tree_triples_by_total_leaves(leaf_bound + 1, t);
    TridendReport rep = check_tridend_axioms(alg, std::span(triples), true);
    out.axioms_ok = rep.passed;
    return out;
}

}  // namespace otrid
