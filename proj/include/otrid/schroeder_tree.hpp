#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "otrid/bigint.hpp"

namespace otrid {

struct TreeNode;
using NodePtr = std::shared_ptr<const TreeNode>;

// A child edge of a vertex: a leaf edge (optionally typed) or an edge to a subtree.
struct TreeChild {
    NodePtr node;                  // null => leaf edge
    std::optional<int> leaf_type;  // only meaningful for leaf edges

    bool is_leaf() const { return node == nullptr; }
    static TreeChild leaf(std::optional<int> type = std::nullopt) { return {nullptr, type}; }
    static TreeChild subtree(NodePtr n) { return {std::move(n), std::nullopt}; }
};

struct TreeNode {
    std::vector<TreeChild> children;  // size >= 2 in valid trees
    std::vector<std::string> angles;  // size == children.size() - 1
    int leaf_count = 0;               // cached

    TreeNode(std::vector<TreeChild> ch, std::vector<std::string> an);
};

NodePtr make_node(std::vector<TreeChild> children, std::vector<std::string> angles);

struct TreeStats {
    int leaves = 0;
    int internal_leaves = 0;  // leaves - 2
    int angles = 0;           // leaves - 1
};

// A leaf-typed angularly decorated Schroeder tree. Immutable; ordered and
// compared through its canonical rendering, so combinations serialize
// deterministically.
//
// Basis trees keep their extreme leaf edges untyped. Trees with a typed
// extreme edge arise transiently from the leaf-typing operators before
// grafting; allow_typed_extremes admits them while still enforcing the
// structural invariants.
class Tree {
public:
    explicit Tree(NodePtr root, bool allow_typed_extremes = false);

    const NodePtr& root() const { return root_; }
    const std::string& canonical() const { return canon_; }
    int leaves() const { return root_->leaf_count; }
    TreeStats stats() const { return {leaves(), leaves() - 2, leaves() - 1}; }

    friend bool operator==(const Tree& a, const Tree& b) { return a.canon_ == b.canon_; }
    friend bool operator<(const Tree& a, const Tree& b) { return a.canon_ < b.canon_; }

    // The 2-leaf corolla with a single angle label.
    static Tree corolla(const std::string& angle);

private:
    NodePtr root_;
    std::string canon_;
};

// Construction / validation errors, one message per violated invariant.
std::vector<std::string> validate_node(const NodePtr& root, bool allow_typed_extremes = false);

// Grammar (canonical form, single spaces):
//   node  := "(" item {" " item} ")"   items alternate child angle ... child
//   child := "|" | "|:" IDENT | node
//   IDENT := [A-Za-z0-9_]+
// Leaf types are rendered as decimal indices into the Omega set.
std::string render_node(const NodePtr& node);
inline std::string render_tree(const Tree& t) { return t.canonical(); }

// Parses the grammar above; omega_size bounds the type indices.
// Throws Error(parse) with a position, or Error(invalid) listing violations.
Tree parse_tree(const std::string& text, int omega_size);

// Leaf (re)typing operators. They act on the leaf edge itself, overwriting
// any previous type; with nullopt they erase it.
Tree set_leftmost_type(const Tree& t, std::optional<int> type);
Tree set_rightmost_type(const Tree& t, std::optional<int> type);
TreeChild set_leftmost_type(const TreeChild& c, std::optional<int> type);
TreeChild set_rightmost_type(const TreeChild& c, std::optional<int> type);

// Type on the leftmost / rightmost leaf edge below a child (nullopt if untyped).
std::optional<int> leftmost_type(const TreeChild& c);
std::optional<int> rightmost_type(const TreeChild& c);
inline std::optional<int> leftmost_type(const Tree& t) {
    return leftmost_type(TreeChild::subtree(t.root()));
}
inline std::optional<int> rightmost_type(const Tree& t) {
    return rightmost_type(TreeChild::subtree(t.root()));
}

// Every tree of T_n(X, Omega) (n+1 leaves) exactly once, sorted by canonical
// string. Throws Error(limit) when n exceeds max_n.
std::vector<Tree> enumerate_trees(int n, const std::vector<std::string>& labels, int omega_size,
                                  int max_n = 8);

// |T_n| = S_n * |X|^n * |Omega|^(n-1), with S_n the little Schroeder numbers
// computed by the root-arity convolution.
BigInt count_trees(int n, int x_size, int omega_size);
BigInt little_schroeder(int n);  // S_1 = 1, S_2 = 3, S_3 = 11, ...

}  // namespace otrid
