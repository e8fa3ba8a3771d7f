#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "otrid/lincomb.hpp"
#include "otrid/omega_table.hpp"
#include "otrid/schroeder_tree.hpp"
#include "otrid/tridend.hpp"

namespace otrid {

using TreeComb = LinComb<Tree>;

inline std::string show_tree_comb(const TreeComb& c) {
    return c.str([](const Tree& t) { return t.canonical(); });
}

// The free structure on leaf-typed angularly decorated trees: the three
// recursive products, their bilinear extensions, and the boundary conventions
// for the adjoined tree "|" (which never appears inside a combination).
class FreeTreeAlgebra {
public:
    using Elem = TreeComb;

    explicit FreeTreeAlgebra(const OmegaTable& t, bool require_ets = false);

    const OmegaTable& table() const { return *table_; }

    // Basis product; omega must index into the table.
    TreeComb basis_product(Prod op, int omega, const Tree& left, const Tree& right) const;

    TreeComb product(Prod op, int omega, const TreeComb& a, const TreeComb& b) const;

    // Boundary conventions: | succ T = T prec | = T, | prec T = T succ | = 0,
    // | circ T = T circ | = 0. nullopt stands for |; both sides | is an error.
    TreeComb product_with_unit(Prod op, int omega, const std::optional<TreeComb>& a,
                               const std::optional<TreeComb>& b) const;

    // sum over omega of a_w prec_w + b_w circ_w + c_w succ_w, bilinearly.
    TreeComb combo_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const std::vector<Rational>& c, const TreeComb& x, const TreeComb& y) const;

    TreeComb add(const TreeComb& a, const TreeComb& b) const { return a + b; }
    bool equal(const TreeComb& a, const TreeComb& b) const { return a == b; }
    std::string show(const TreeComb& c) const { return show_tree_comb(c); }

private:
    const OmegaTable* table_;
};

// The unique extension of f : X -> target to a morphism out of the tree
// algebra: corollas map through f, and the three root decompositions map
// through prec / circ / succ of the target.
template <TridendImpl Target>
typename Target::Elem evaluate_tree(const Tree& tree, const Target& target,
                                    const std::function<typename Target::Elem(const std::string&)>& f) {
    const NodePtr& root = tree.root();
    const auto& ch = root->children;
    if (tree.leaves() == 2 && ch[0].is_leaf() && ch[1].is_leaf())
        return f(root->angles[0]);

    if (ch[0].is_leaf()) {
        if (ch.size() == 2) {
            // (| x  ^a T2): f(x) prec_a eval(T2)
            int alpha = *leftmost_type(ch[1]);
            Tree t2(set_leftmost_type(ch[1], std::nullopt).node);
            return target.product(Prod::Prec, alpha, f(root->angles[0]),
                                  evaluate_tree(t2, target, f));
        }
        // (| x1 ^a T2 T3 ...): f(x1) circ_a eval(T2 T3 ... with x2..)
        int alpha = *leftmost_type(ch[1]);
        std::vector<TreeChild> rest(ch.begin() + 1, ch.end());
        rest[0] = set_leftmost_type(rest[0], std::nullopt);
        std::vector<std::string> angles(root->angles.begin() + 1, root->angles.end());
        Tree r(make_node(std::move(rest), std::move(angles)));
        return target.product(Prod::Circ, alpha, f(root->angles[0]), evaluate_tree(r, target, f));
    }

    // (T1^a T2 ...): eval(T1) succ_a eval(| T2 ...)
    int alpha = *rightmost_type(ch[0]);
    Tree t1(set_rightmost_type(ch[0], std::nullopt).node);
    std::vector<TreeChild> rest = ch;
    rest[0] = TreeChild::leaf();
    Tree r(make_node(std::move(rest), root->angles));
    return target.product(Prod::Succ, alpha, evaluate_tree(t1, target, f), evaluate_tree(r, target, f));
}

// Linear extension over a combination; requires the target's elements to be
// formal combinations themselves (every implementation here qualifies).
template <TridendImpl Target>
typename Target::Elem evaluate_tree_comb(const TreeComb& comb, const Target& target,
                                         const std::function<typename Target::Elem(const std::string&)>& f) {
    typename Target::Elem acc{};
    for (const auto& [tree, coeff] : comb.terms())
        acc = target.add(acc, evaluate_tree(tree, target, f).scaled(coeff));
    return acc;
}

// Every basis triple of T({x}, Omega)^3 with total leaf count at most
// max_total_leaves, smallest first.
std::vector<std::array<TreeComb, 3>> tree_triples_by_total_leaves(int max_total_leaves,
                                                                  const OmegaTable& t);

}  // namespace otrid
