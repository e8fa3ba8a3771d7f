#include "otrid/schroeder_tree.hpp"

#include <algorithm>
#include <map>

#include "otrid/error.hpp"

namespace otrid {

TreeNode::TreeNode(std::vector<TreeChild> ch, std::vector<std::string> an)
    : children(std::move(ch)), angles(std::move(an)) {
    for (const auto& c : children) leaf_count += c.is_leaf() ? 1 : c.node->leaf_count;
}

NodePtr make_node(std::vector<TreeChild> children, std::vector<std::string> angles) {
    return std::make_shared<const TreeNode>(std::move(children), std::move(angles));
}

namespace {

// positional validation: first/last leaf of the whole tree untyped, all other
// leaf edges typed
void validate_rec(const NodePtr& node, bool leftmost, bool rightmost, bool allow_typed_extremes,
                  std::vector<std::string>& errs) {
    if (node->children.size() < 2)
        errs.push_back("vertex with " + std::to_string(node->children.size()) + " child(ren); need >= 2");
    if (node->angles.size() + 1 != node->children.size())
        errs.push_back("vertex with " + std::to_string(node->children.size()) + " children carries " +
                       std::to_string(node->angles.size()) + " angle label(s)");
    for (size_t i = 0; i < node->children.size(); ++i) {
        bool l = leftmost && i == 0;
        bool r = rightmost && i + 1 == node->children.size();
        const auto& c = node->children[i];
        if (c.is_leaf()) {
            bool extreme = l || r;
            if (extreme && !allow_typed_extremes && c.leaf_type.has_value())
                errs.push_back(std::string("the ") + (l ? "leftmost" : "rightmost") +
                               " leaf edge carries a type");
            if (!extreme && !c.leaf_type.has_value())
                errs.push_back("an internal leaf edge is missing its type");
        } else {
            validate_rec(c.node, l, r, allow_typed_extremes, errs);
        }
    }
}

}  // namespace

std::vector<std::string> validate_node(const NodePtr& root, bool allow_typed_extremes) {
    std::vector<std::string> errs;
    if (!root) {
        errs.push_back("empty tree");
        return errs;
    }
    validate_rec(root, true, true, allow_typed_extremes, errs);
    return errs;
}

Tree::Tree(NodePtr root, bool allow_typed_extremes) : root_(std::move(root)) {
    auto errs = validate_node(root_, allow_typed_extremes);
    if (!errs.empty()) {
        std::string msg = "invalid tree:";
        for (const auto& e : errs) msg += "\n  - " + e;
        throw Error(Errc::invalid, msg);
    }
    canon_ = render_node(root_);
}

Tree Tree::corolla(const std::string& angle) {
    return Tree(make_node({TreeChild::leaf(), TreeChild::leaf()}, {angle}));
}

std::string render_node(const NodePtr& node) {
    std::string s = "(";
    for (size_t i = 0; i < node->children.size(); ++i) {
        if (i) s += " " + node->angles[i - 1] + " ";
        const auto& c = node->children[i];
        if (c.is_leaf()) {
            s += "|";
            if (c.leaf_type) s += ":" + std::to_string(*c.leaf_type);
        } else {
            s += render_node(c.node);
        }
    }
    s += ")";
    return s;
}

namespace {

struct Parser {
    const std::string& text;
    int omega_size;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::parse, "parse error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }

    bool ident_char(char c) const {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    }

    std::string ident() {
        size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        if (pos == start) fail("expected an identifier");
        return text.substr(start, pos - start);
    }

    int type_index() {
        size_t start = pos;
        std::string id = ident();
        for (char c : id)
            if (c < '0' || c > '9') {
                pos = start;
                fail("leaf type '" + id + "' is not a decimal index");
            }
        if (id.size() > 9) {
            pos = start;
            fail("leaf type '" + id + "' out of range");
        }
        int v = std::stoi(id);
        if (v >= omega_size) {
            pos = start;
            fail("leaf type " + id + " out of range (|Omega| = " + std::to_string(omega_size) + ")");
        }
        return v;
    }

    TreeChild child() {
        if (pos >= text.size()) fail("expected a child");
        if (text[pos] == '(') return TreeChild::subtree(node());
        if (text[pos] == '|') {
            ++pos;
            if (pos < text.size() && text[pos] == ':') {
                ++pos;
                return TreeChild::leaf(type_index());
            }
            return TreeChild::leaf();
        }
        fail("expected '|', '|:<type>' or '('");
    }

    NodePtr node() {
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        skip_ws();
        std::vector<TreeChild> children;
        std::vector<std::string> angles;
        children.push_back(child());
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            angles.push_back(ident());
            skip_ws();
            children.push_back(child());
            skip_ws();
        }
        if (pos >= text.size()) fail("expected ')'");
        ++pos;
        return make_node(std::move(children), std::move(angles));
    }
};

}  // namespace

Tree parse_tree(const std::string& text, int omega_size) {
    Parser p{text, omega_size};
    p.skip_ws();
    NodePtr root = p.node();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return Tree(root);  // Tree ctor reports invariant violations
}

namespace {

NodePtr retype_edge(const NodePtr& node, bool left, std::optional<int> type) {
    std::vector<TreeChild> ch = node->children;
    size_t i = left ? 0 : ch.size() - 1;
    if (ch[i].is_leaf()) {
        ch[i].leaf_type = type;
    } else {
        ch[i].node = retype_edge(ch[i].node, left, type);
    }
    return make_node(std::move(ch), node->angles);
}

std::optional<int> edge_type(const TreeChild& c, bool left) {
    if (c.is_leaf()) return c.leaf_type;
    const TreeNode* n = c.node.get();
    for (;;) {
        const TreeChild& next = left ? n->children.front() : n->children.back();
        if (next.is_leaf()) return next.leaf_type;
        n = next.node.get();
    }
}

}  // namespace

TreeChild set_leftmost_type(const TreeChild& c, std::optional<int> type) {
    if (c.is_leaf()) return TreeChild::leaf(type);
    return TreeChild::subtree(retype_edge(c.node, true, type));
}

TreeChild set_rightmost_type(const TreeChild& c, std::optional<int> type) {
    if (c.is_leaf()) return TreeChild::leaf(type);
    return TreeChild::subtree(retype_edge(c.node, false, type));
}

Tree set_leftmost_type(const Tree& t, std::optional<int> type) {
    return Tree(retype_edge(t.root(), true, type), true);
}

Tree set_rightmost_type(const Tree& t, std::optional<int> type) {
    return Tree(retype_edge(t.root(), false, type), true);
}

std::optional<int> leftmost_type(const TreeChild& c) { return edge_type(c, true); }
std::optional<int> rightmost_type(const TreeChild& c) { return edge_type(c, false); }

namespace {

// all shapes with `leaves` leaf edges; a single leaf is the trivial shape
void shapes_with_leaves(int leaves, std::vector<NodePtr>& out);

void child_tuples(int remaining, int slots, std::vector<std::vector<NodePtr>>& out,
                  std::vector<NodePtr>& current) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    for (int take = 1; take + (slots - 1) <= remaining; ++take) {
        std::vector<NodePtr> sub;
        shapes_with_leaves(take, sub);
        for (auto& s : sub) {
            current.push_back(s);
            child_tuples(remaining - take, slots - 1, out, current);
            current.pop_back();
        }
    }
}

void shapes_with_leaves(int leaves, std::vector<NodePtr>& out) {
    if (leaves == 1) {
        out.push_back(nullptr);  // leaf marker
        return;
    }
    for (int arity = 2; arity <= leaves; ++arity) {
        std::vector<std::vector<NodePtr>> tuples;
        std::vector<NodePtr> cur;
        child_tuples(leaves, arity, tuples, cur);
        for (auto& tup : tuples) {
            std::vector<TreeChild> ch;
            ch.reserve(tup.size());
            for (auto& s : tup) ch.push_back(s ? TreeChild::subtree(s) : TreeChild::leaf());
            out.push_back(make_node(std::move(ch), std::vector<std::string>(arity - 1, "")));
        }
    }
}

// rebuild with angles/types drawn from the given sequences (consumed left to right)
NodePtr decorate(const NodePtr& node, const std::vector<std::string>& labels, size_t& angle_i,
                 const std::vector<int>& types, size_t& type_i, bool leftmost, bool rightmost) {
    std::vector<TreeChild> ch;
    ch.reserve(node->children.size());
    for (size_t i = 0; i < node->children.size(); ++i) {
        bool l = leftmost && i == 0;
        bool r = rightmost && i + 1 == node->children.size();
        const auto& c = node->children[i];
        if (c.is_leaf()) {
            ch.push_back(l || r ? TreeChild::leaf() : TreeChild::leaf(types[type_i++]));
        } else {
            ch.push_back(TreeChild::subtree(decorate(c.node, labels, angle_i, types, type_i, l, r)));
        }
    }
    std::vector<std::string> an;
    an.reserve(node->angles.size());
    for (size_t i = 0; i < node->angles.size(); ++i) an.push_back(labels[angle_i++]);
    return make_node(std::move(ch), std::move(an));
}

}  // namespace

std::vector<Tree> enumerate_trees(int n, const std::vector<std::string>& labels, int omega_size,
                                  int max_n) {
    if (n < 1) throw Error(Errc::domain, "enumerate: n must be >= 1");
    if (n > max_n)
        throw Error(Errc::limit, "enumerate: n = " + std::to_string(n) + " exceeds the guard (" +
                                     std::to_string(max_n) + "); raise the limit explicitly");
    if (labels.empty()) throw Error(Errc::domain, "enumerate: label set X must be nonempty");
    if (omega_size < 1) throw Error(Errc::domain, "enumerate: omega size must be >= 1");

    std::vector<NodePtr> shapes;
    shapes_with_leaves(n + 1, shapes);

    const int n_angles = n;
    const int n_types = n - 1;
    std::vector<Tree> out;
    std::vector<std::string> angle_seq(n_angles);
    std::vector<int> type_seq(n_types);

    for (const auto& shape : shapes) {
        // odometers over label and type assignments
        std::vector<size_t> li(n_angles, 0);
        for (;;) {
            for (int i = 0; i < n_angles; ++i) angle_seq[i] = labels[li[i]];
            std::vector<int> ti(n_types, 0);
            for (;;) {
                for (int i = 0; i < n_types; ++i) type_seq[i] = ti[i];
                size_t ai = 0, tidx = 0;
                out.emplace_back(Tree(decorate(shape, angle_seq, ai, type_seq, tidx, true, true)));
                int k = n_types - 1;
                while (k >= 0 && ++ti[k] == omega_size) ti[k--] = 0;
                if (k < 0) break;
            }
            int k = n_angles - 1;
            while (k >= 0 && ++li[k] == labels.size()) li[k--] = 0;
            if (k < 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt little_schroeder(int n) {
    if (n < 1) throw Error(Errc::domain, "little_schroeder: n must be >= 1");
    // f[L] = number of shapes with L leaf edges, f[1] = 1 (bare leaf)
    int L = n + 1;
    std::vector<BigInt> f(L + 1, BigInt(0));
    f[1] = BigInt(1);
    for (int l = 2; l <= L; ++l) {
        // g[k][m] = sum over compositions of m into k parts of prod f
        std::vector<BigInt> prev(l + 1, BigInt(0));  // k = 1
        for (int m = 1; m <= l; ++m) prev[m] = f[m];
        BigInt total(0);
        for (int k = 2; k <= l; ++k) {
            std::vector<BigInt> cur(l + 1, BigInt(0));
            for (int m = k; m <= l; ++m) {
                BigInt s(0);
                for (int j = 1; j + (k - 1) <= m; ++j) s = s + f[j] * prev[m - j];
                cur[m] = s;
            }
            total = total + cur[l];
            prev = std::move(cur);
        }
        f[l] = total;
    }
    return f[L];
}

BigInt count_trees(int n, int x_size, int omega_size) {
    if (n < 1 || x_size < 1 || omega_size < 1)
        throw Error(Errc::domain, "count: n, |X| and |Omega| must be positive");
    return little_schroeder(n) * BigInt::pow(BigInt(x_size), static_cast<unsigned>(n)) *
           BigInt::pow(BigInt(omega_size), static_cast<unsigned>(n - 1));
}

}  // namespace otrid
