#pragma once

// The bijection chain
//
//   non-separable maps (m+1 edges) <-> decorated trees (m edges)
//       <-> synchronized intervals (size m) <-> canopy intervals (size m-1)
//
// map_to_tree / tree_to_map explore the map depth-first; tree_to_lower and
// tree_to_upper build the interval [P(T), Q(T)]; interval_to_tree recovers
// leaf labels from P by horizontal rays.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tamap/error.hpp"
#include "tamap/map_decomposition.hpp"
#include "tamap/maps.hpp"
#include "tamap/paths.hpp"
#include "tamap/tamari.hpp"
#include "tamap/trees.hpp"

namespace tamap {

// ---------------------------------------------------------------------------
// Maps <-> trees

/// Depth-first exploration from the root vertex v (depth -1) through the
/// root edge, turning clockwise around each vertex starting after the
/// arrival dart. An edge reaching an already visited vertex x becomes a leaf
/// labeled depth(x). Siblings explored first come last in traversal order.
inline DecoratedTree map_to_tree(const PlanarMap& m) {
    if (!is_non_separable(m)) throw invalid_object("map_to_tree: map is separable");
    std::vector<int> depth(static_cast<std::size_t>(m.vertex_count()), -2);  // -2: unvisited
    std::vector<bool> explored(static_cast<std::size_t>(m.edge_count()), false);
    depth[static_cast<std::size_t>(m.root_vertex())] = -1;
    explored[static_cast<std::size_t>(m.root() / 2)] = true;

    std::function<void(int, TreeSketch&)> explore = [&](int arrival, TreeSketch& node) {
        const int here = m.origin(arrival);
        std::vector<TreeSketch> visit_order;
        for (int d = m.sigma(arrival); d != arrival; d = m.sigma(d)) {
            if (explored[static_cast<std::size_t>(d / 2)]) continue;
            explored[static_cast<std::size_t>(d / 2)] = true;
            const int x = m.head(d);
            if (depth[static_cast<std::size_t>(x)] == -2) {
                depth[static_cast<std::size_t>(x)] = depth[static_cast<std::size_t>(here)] + 1;
                TreeSketch child;
                explore(twin(d), child);
                visit_order.push_back(std::move(child));
            } else {
                visit_order.push_back({depth[static_cast<std::size_t>(x)], {}});
            }
        }
        node.children.assign(std::make_move_iterator(visit_order.rbegin()),
                             std::make_move_iterator(visit_order.rend()));
    };

    TreeSketch root;
    depth[static_cast<std::size_t>(m.head(m.root()))] = 0;
    explore(twin(m.root()), root);
    return DecoratedTree::from_sketch(root);
}

/// Inverse exploration. Edge k of the result is the tree edge above node k
/// (dart 2k at the upper end); edge 0 is the new root edge from v to the
/// tree root. Leaves are closed from last to first in traversal order, each
/// onto its ancestor s at depth = label, just after the first edge of the
/// s-to-leaf path in clockwise order around s.
inline PlanarMap tree_to_map(const DecoratedTree& t) {
    if (auto v = validate(t); !v.empty()) throw invalid_object("tree_to_map: " + v.front().message);
    const int count = static_cast<int>(t.node_count());
    const int v_slot = count;  // rotation slot of the extra vertex v
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(count + 1));
    rot[static_cast<std::size_t>(v_slot)] = {0};
    for (int id = 0; id < count; ++id) {
        if (t.is_leaf(id)) continue;
        auto& r = rot[static_cast<std::size_t>(id)];
        r.push_back(id == 0 ? 1 : 2 * id + 1);
        const auto& ch = t.node(id).children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) r.push_back(2 * *it);
    }
    const auto leaves = leaves_in_traversal_order(t);
    for (auto it = leaves.rbegin(); it != leaves.rend(); ++it) {
        const int leaf = *it;
        const int p = t.label(leaf);
        int s = v_slot, e_dart = 0;
        if (p >= 0) {
            s = t.ancestor_at_depth(leaf, p);
            e_dart = 2 * t.ancestor_at_depth(leaf, p + 1);
        }
        auto& r = rot[static_cast<std::size_t>(s)];
        auto pos = std::find(r.begin(), r.end(), e_dart);
        r.insert(pos + 1, 2 * leaf + 1);
    }
    std::vector<int> sigma(static_cast<std::size_t>(2 * count));
    for (const auto& r : rot)
        for (std::size_t k = 0; k < r.size(); ++k) sigma[static_cast<std::size_t>(r[k])] = r[(k + 1) % r.size()];
    return PlanarMap(std::move(sigma), 0);
}

// ---------------------------------------------------------------------------
// Trees <-> synchronized intervals

/// Q(T): u when an edge is walked down, d when it is walked back up.
inline DyckPath tree_to_upper(const DecoratedTree& t) {
    std::string w;
    std::function<void(int)> walk = [&](int id) {
        for (int c : t.node(id).children) {
            w += 'u';
            walk(c);
            w += 'd';
        }
    };
    walk(0);
    return DyckPath(std::move(w));
}

/// P(T): u for each internal edge on first visit, u d^(1+k) for a leaf with charge k.
inline DyckPath tree_to_lower(const DecoratedTree& t) {
    const auto charge = compute_charges(t);
    std::string w;
    for (int id = 1; id < static_cast<int>(t.node_count()); ++id) {
        w += 'u';
        if (t.is_leaf(id)) w.append(static_cast<std::size_t>(1 + charge[static_cast<std::size_t>(id)]), 'd');
    }
    return DyckPath(std::move(w));
}

inline SyncInterval tree_to_interval(const DecoratedTree& t) { return {tree_to_lower(t), tree_to_upper(t)}; }

/// R([P, Q]): the shape comes from Q. For the leaf giving the i-th up step,
/// a ray goes left from the bottom of the down-run following the i-th up
/// step of P, at that height, to the nearest midpoint of a double up step.
/// If the lower step of that pair is the j-th up step, the label is the
/// depth of the upper end of the j-th tree edge; no such midpoint gives -1.
inline DecoratedTree interval_to_tree(const SyncInterval& iv) {
    if (!is_synchronized(iv)) throw invalid_object("interval_to_tree: not a synchronized interval");
    DecoratedTree t = DecoratedTree::from_dyck(iv.upper);
    const auto& w = iv.lower.word();
    const auto h = iv.lower.heights();
    // up_index[k] = 1-based index of the up step w[k]
    std::vector<int> up_index(w.size(), 0);
    for (std::size_t k = 0, c = 0; k < w.size(); ++k)
        if (w[k] == 'u') up_index[k] = static_cast<int>(++c);
    const auto ups = iv.lower.up_positions();

    for (int leaf : leaves_in_traversal_order(t)) {
        // tree node ids follow the order of up steps of Q, so node `leaf` is the leaf-th up step
        std::size_t bottom = ups[static_cast<std::size_t>(leaf - 1)];  // offset after the up step
        while (bottom < w.size() && w[bottom] == 'd') ++bottom;
        const int level = h[bottom];
        int label = -1;
        for (std::size_t k = bottom; k-- > 1;) {
            if (h[k] == level && w[k - 1] == 'u' && w[k] == 'u') {
                const int j = up_index[k - 1];
                label = t.node(j).depth - 1;
                break;
            }
        }
        t.set_label(leaf, label);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Composed chains

inline SyncInterval map_to_interval(const PlanarMap& m) { return tree_to_interval(map_to_tree(m)); }

inline PlanarMap interval_to_map(const SyncInterval& i) { return tree_to_map(interval_to_tree(i)); }

inline CanopyInterval map_to_canopy(const PlanarMap& m) { return sync_to_canopy(map_to_interval(m)); }

inline PlanarMap canopy_to_map(const CanopyInterval& c) { return interval_to_map(canopy_to_sync(c)); }

// ---------------------------------------------------------------------------
// Recursive bijection

namespace detail {
inline SyncInterval recursive_from_parts(std::vector<MapComponent> parts);
}

/// Recursive bijection M_n -> I_n matching two decompositions: the last
/// parallel component C (pointed at its exit corner) and the map R rebuilt
/// from the remaining components give [P, Q] = compose(pointed image of C,
/// image of R). A loop component gives the empty pointed interval, a bare
/// root edge the empty interval. It maps root-vertex degree - 1 to
/// contacts(P) - 1.
inline SyncInterval recursive_map_to_interval(const PlanarMap& m) {
    if (!is_non_separable(m)) throw invalid_object("recursive_map_to_interval: map is separable");
    return detail::recursive_from_parts(parallel_components(m));
}

namespace detail {
inline SyncInterval recursive_from_parts(std::vector<MapComponent> parts) {
    const MapComponent last = std::move(parts.back());
    parts.pop_back();
    PointedSyncInterval left{};
    if (last.map.edge_count() > 1) {
        SyncInterval base = recursive_map_to_interval(last.map);
        const std::size_t cut = contact_offsets(base.lower).at(static_cast<std::size_t>(last.exit));
        left = {std::move(base), cut};
    }
    const SyncInterval right = parts.empty() ? SyncInterval{} : recursive_map_to_interval(compose_parallel(parts));
    return compose_intervals(left, right);
}
}  // namespace detail

}  // namespace tamap
