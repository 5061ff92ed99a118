#pragma once

// Decorated trees: plane trees with integer leaf labels >= -1 subject to
// three conditions, plus the charging process on leaves.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamap/error.hpp"
#include "tamap/paths.hpp"

namespace tamap {

/// Nested form used while a tree is being assembled out of order.
struct TreeSketch {
    int label = -1;
    std::vector<TreeSketch> children;
};

/// Plane tree with leaf labels. Nodes are stored in preorder, node 0 is the
/// root, and every child list is in traversal (counter-clockwise) order.
/// Preorder restricted to leaves is therefore the traversal order.
class DecoratedTree {
public:
    struct Node {
        int parent = -1;
        int depth = 0;
        std::vector<int> children;
        int label = -1;  // meaningful on leaves only

        friend bool operator==(const Node&, const Node&) = default;
    };

    DecoratedTree() : nodes_(1) {}

    /// Shape given by the depth evolution of q; every leaf labeled -1.
    static DecoratedTree from_dyck(const DyckPath& q) {
        DecoratedTree t;
        int cur = 0;
        for (char c : q.word()) {
            if (c == 'u') {
                const int id = static_cast<int>(t.nodes_.size());
                t.nodes_.push_back({cur, t.nodes_[cur].depth + 1, {}, -1});
                t.nodes_[cur].children.push_back(id);
                cur = id;
            } else {
                cur = t.nodes_[cur].parent;
            }
        }
        return t;
    }

    static DecoratedTree from_sketch(const TreeSketch& root) {
        DecoratedTree t;
        std::function<void(const TreeSketch&, int)> add = [&](const TreeSketch& s, int parent) {
            const int id = static_cast<int>(t.nodes_.size());
            t.nodes_.push_back({parent, t.nodes_[static_cast<std::size_t>(parent)].depth + 1, {}, s.label});
            t.nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
            for (const auto& c : s.children) add(c, id);
        };
        for (const auto& c : root.children) add(c, 0);
        return t;
    }

    [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return nodes_.size() - 1; }
    [[nodiscard]] bool is_leaf(int id) const { return id != 0 && node(id).children.empty(); }

    void set_label(int leaf, int label) {
        if (!is_leaf(leaf)) throw std::invalid_argument("set_label: node is not a leaf");
        nodes_[static_cast<std::size_t>(leaf)].label = label;
    }

    [[nodiscard]] int label(int leaf) const { return node(leaf).label; }

    /// The last node of the subtree rooted at id, in preorder.
    [[nodiscard]] int subtree_end(int id) const {
        while (!node(id).children.empty()) id = node(id).children.back();
        return id;
    }

    /// Ancestor of id at the given depth (id itself if depths match).
    [[nodiscard]] int ancestor_at_depth(int id, int depth) const {
        while (node(id).depth > depth) id = node(id).parent;
        return id;
    }

    friend bool operator==(const DecoratedTree&, const DecoratedTree&) = default;

private:
    std::vector<Node> nodes_;
    friend class TreeParser;
};

/// Leaves in traversal order.
inline std::vector<int> leaves_in_traversal_order(const DecoratedTree& t) {
    std::vector<int> out;
    for (int id = 1; id < static_cast<int>(t.node_count()); ++id)
        if (t.is_leaf(id)) out.push_back(id);
    return out;
}

// ---------------------------------------------------------------------------
// Validation

struct Violation {
    int condition = 0;  // 0: label below -1, 1..3: the decorated-tree conditions
    int node = 0;       // offending leaf (conditions 0, 1, 3) or internal node (condition 2)
    std::string message;
};

inline std::vector<Violation> validate(const DecoratedTree& t) {
    std::vector<Violation> out;
    const int count = static_cast<int>(t.node_count());
    if (count == 1) {
        out.push_back({0, 0, "tree has no edges"});
        return out;
    }
    for (int id = 1; id < count; ++id) {
        if (!t.is_leaf(id)) continue;
        const int lab = t.label(id);
        const int p = t.node(t.node(id).parent).depth;
        if (lab < -1)
            out.push_back({0, id, "leaf " + std::to_string(id) + " has label " + std::to_string(lab) + " < -1"});
        if (lab >= p)
            out.push_back({1, id, "condition 1: leaf " + std::to_string(id) + " has label " + std::to_string(lab) +
                                      " but hangs from depth " + std::to_string(p)});
    }
    for (int id = 1; id < count; ++id) {
        if (t.is_leaf(id)) continue;
        const int p = t.node(id).depth;
        bool found = false;
        for (int k = id; k <= t.subtree_end(id) && !found; ++k) found = t.is_leaf(k) && t.label(k) <= p - 2;
        if (!found)
            out.push_back({2, id, "condition 2: internal node " + std::to_string(id) + " at depth " +
                                      std::to_string(p) + " has no descendant leaf labeled <= " +
                                      std::to_string(p - 2)});
    }
    for (int tnode = 0; tnode < count; ++tnode) {
        const int p = t.node(tnode).depth;
        for (int child : t.node(tnode).children) {
            bool lower_seen = false;
            for (int k = child; k <= t.subtree_end(child); ++k) {
                if (!t.is_leaf(k)) continue;
                if (t.label(k) == p && lower_seen)
                    out.push_back({3, k, "condition 3: leaf " + std::to_string(k) + " labeled " + std::to_string(p) +
                                             " follows a smaller label below node " + std::to_string(tnode)});
                lower_seen = lower_seen || t.label(k) < p;
            }
        }
    }
    return out;
}

inline bool is_valid(const DecoratedTree& t) { return validate(t).empty(); }

// ---------------------------------------------------------------------------
// Charges

/// charge[id] for every node id (zero on internal nodes). Each internal
/// non-root node of depth p charges its first descendant leaf labeled <= p-2.
inline std::vector<int> compute_charges(const DecoratedTree& t) {
    std::vector<int> charge(t.node_count(), 0);
    for (int id = 1; id < static_cast<int>(t.node_count()); ++id) {
        if (t.is_leaf(id)) continue;
        const int p = t.node(id).depth;
        int target = -1;
        for (int k = id; k <= t.subtree_end(id); ++k)
            if (t.is_leaf(k) && t.label(k) <= p - 2) {
                target = k;
                break;
            }
        if (target < 0) throw invalid_object("compute_charges: condition 2 fails at node " + std::to_string(id));
        ++charge[static_cast<std::size_t>(target)];
    }
    return charge;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

class LabelSearch {
public:
    LabelSearch(DecoratedTree shape, std::vector<DecoratedTree>& out)
        : t_(std::move(shape)), out_(out), leaves_(leaves_in_traversal_order(t_)) {
        const auto n = t_.node_count();
        min_label_.assign(n, 1 << 20);
        closes_.resize(leaves_.size());
        // internal non-root nodes are checked for condition 2 once their last leaf is set
        for (int id = 1; id < static_cast<int>(n); ++id) {
            if (t_.is_leaf(id)) continue;
            const int last = t_.subtree_end(id);
            for (std::size_t k = 0; k < leaves_.size(); ++k)
                if (leaves_[k] == last) closes_[k].push_back(id);
        }
    }

    void run() { assign(0); }

private:
    void assign(std::size_t k) {
        if (k == leaves_.size()) {
            out_.push_back(t_);
            return;
        }
        const int leaf = leaves_[k];
        const int parent_depth = t_.node(t_.node(leaf).parent).depth;
        for (int lab = -1; lab < parent_depth; ++lab) {
            if (!condition3_ok(leaf, lab)) continue;
            t_.set_label(leaf, lab);
            std::vector<std::pair<int, int>> saved;
            for (int a = leaf; a != 0; a = t_.node(a).parent) {
                saved.emplace_back(a, min_label_[static_cast<std::size_t>(a)]);
                if (lab < min_label_[static_cast<std::size_t>(a)]) min_label_[static_cast<std::size_t>(a)] = lab;
            }
            bool ok = true;
            for (int id : closes_[k]) ok = ok && min_label_[static_cast<std::size_t>(id)] <= t_.node(id).depth - 2;
            if (ok) assign(k + 1);
            for (auto [a, m] : saved) min_label_[static_cast<std::size_t>(a)] = m;
        }
    }

    // For each proper ancestor t of depth p with child c on the way to the
    // leaf: labeling the leaf p is forbidden once a label < p occurred in c.
    [[nodiscard]] bool condition3_ok(int leaf, int lab) const {
        for (int c = leaf; c != 0; c = t_.node(c).parent) {
            const int p = t_.node(t_.node(c).parent).depth;
            if (lab == p && min_label_[static_cast<std::size_t>(c)] < p) return false;
        }
        return true;
    }

    DecoratedTree t_;
    std::vector<DecoratedTree>& out_;
    std::vector<int> leaves_;
    std::vector<int> min_label_;
    std::vector<std::vector<int>> closes_;
};

}  // namespace detail

/// All decorated trees with n edges, ordered by shape (depth-evolution word)
/// then by the label sequence in traversal order.
inline std::vector<DecoratedTree> enumerate_decorated_trees(std::size_t n) {
    std::vector<DecoratedTree> out;
    for (const auto& q : all_dyck_paths(n)) detail::LabelSearch(DecoratedTree::from_dyck(q), out).run();
    return out;
}

// ---------------------------------------------------------------------------
// Text form: tree := label | "(" tree+ ")"

inline std::string to_string(const DecoratedTree& t) {
    std::string s;
    std::function<void(int)> emit = [&](int id) {
        if (t.is_leaf(id)) {
            s += std::to_string(t.label(id));
            return;
        }
        s += '(';
        bool first = true;
        for (int c : t.node(id).children) {
            if (!first) s += ' ';
            first = false;
            emit(c);
        }
        s += ')';
    };
    emit(0);
    return s;
}

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : s_(text) {}

    DecoratedTree parse() {
        DecoratedTree t;
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '(') fail("tree must start with '('");
        ++pos_;
        parse_children(t, 0);
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters after tree");
        return t;
    }

private:
    void parse_children(DecoratedTree& t, int parent) {
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) fail("unbalanced parentheses");
            if (s_[pos_] == ')') {
                if (!any) fail("empty parentheses");
                ++pos_;
                return;
            }
            any = true;
            const int id = static_cast<int>(t.nodes_.size());
            t.nodes_.push_back({parent, t.nodes_[static_cast<std::size_t>(parent)].depth + 1, {}, -1});
            t.nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
            if (s_[pos_] == '(') {
                ++pos_;
                parse_children(t, id);
            } else {
                t.nodes_[static_cast<std::size_t>(id)].label = parse_label();
            }
        }
    }

    int parse_label() {
        int value = 0;
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail("expected an integer label");
        pos_ += static_cast<std::size_t>(ptr - first);
        if (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
            s_[pos_] != ')')
            fail("malformed label");
        return value;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("tree parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline DecoratedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

}  // namespace tamap
