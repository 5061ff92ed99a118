#pragma once

// Series and parallel decompositions of non-separable maps.
//
// Deleting the root edge of M leaves a chain of blocks B_1, ..., B_j from the
// root vertex to the other end of the root. Each block is a single edge or a
// non-separable map; it is rooted at its first dart on the side of the face
// right of the root, so walking its outer face from the root dart follows
// that side to the next link vertex after `exit` darts, then comes back
// along the side of M's outer face. Contracting the root instead gives the
// parallel decomposition, computed here as the dual of the series
// decomposition of the dual map (single edges dualize to loops).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "tamap/error.hpp"
#include "tamap/maps.hpp"

namespace tamap {

struct MapComponent {
    PlanarMap map;
    /// Series: number of outer-face darts from the root to the exit link
    /// vertex. Parallel: the same quantity read on the dual.
    int exit = 1;
    /// Dart of the decomposed map that each local dart came from.
    std::vector<int> origin;
};

namespace detail {

/// Block id of every edge of the multigraph, ignoring edge `skip` (id -1).
inline std::vector<int> edge_blocks(int vertex_count, const std::vector<std::pair<int, int>>& edges, int skip) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(vertex_count));
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
        if (k == skip) continue;
        adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)].first)].emplace_back(edges[static_cast<std::size_t>(k)].second, k);
        adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(k)].second)].emplace_back(edges[static_cast<std::size_t>(k)].first, k);
    }
    std::vector<int> disc(static_cast<std::size_t>(vertex_count), -1), low(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> block(edges.size(), -1), stack;
    std::vector<bool> stacked(edges.size(), false);
    int timer = 0, blocks = 0;
    std::function<void(int, int)> dfs = [&](int x, int via) {
        disc[static_cast<std::size_t>(x)] = low[static_cast<std::size_t>(x)] = timer++;
        for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
            if (e == via) continue;
            if (!stacked[static_cast<std::size_t>(e)]) {
                stacked[static_cast<std::size_t>(e)] = true;
                stack.push_back(e);
            }
            if (disc[static_cast<std::size_t>(y)] >= 0) {
                low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], disc[static_cast<std::size_t>(y)]);
                continue;
            }
            dfs(y, e);
            low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], low[static_cast<std::size_t>(y)]);
            if (low[static_cast<std::size_t>(y)] >= disc[static_cast<std::size_t>(x)]) {
                int top;
                do {
                    top = stack.back();
                    stack.pop_back();
                    block[static_cast<std::size_t>(top)] = blocks;
                } while (top != e);
                ++blocks;
            }
        }
    };
    for (int x = 0; x < vertex_count; ++x)
        if (disc[static_cast<std::size_t>(x)] < 0) dfs(x, -1);
    return block;
}

/// Sub-map on a set of edges with the induced rotation, rooted at `root`.
inline MapComponent extract(const PlanarMap& m, const std::vector<int>& edge_ids, int root, int exit) {
    std::map<int, int> local;
    std::vector<int> origin;
    for (int e : edge_ids) {
        local[2 * e] = static_cast<int>(origin.size());
        origin.push_back(2 * e);
        local[2 * e + 1] = static_cast<int>(origin.size());
        origin.push_back(2 * e + 1);
    }
    std::vector<int> sigma(origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) {
        int s = m.sigma(origin[i]);
        while (!local.contains(s)) s = m.sigma(s);
        sigma[i] = local.at(s);
    }
    return {PlanarMap(std::move(sigma), local.at(root)), exit, std::move(origin)};
}

inline int phi_power(const PlanarMap& m, int d, int k) {
    while (k-- > 0) d = m.phi(d);
    return d;
}

}  // namespace detail

/// Blocks of M minus its root edge, in order from the root vertex.
inline std::vector<MapComponent> series_components(const PlanarMap& m) {
    if (!is_non_separable(m)) throw invalid_object("series_components: map is separable");
    const auto block = detail::edge_blocks(m.vertex_count(), detail::edge_list(m), m.root() / 2);
    const int r = m.root();
    std::vector<MapComponent> out;
    std::vector<int> group;  // darts of the current block along the right side
    auto flush = [&] {
        const int b = block[static_cast<std::size_t>(group.front() / 2)];
        std::vector<int> edges;
        for (int k = 0; k < m.edge_count(); ++k)
            if (block[static_cast<std::size_t>(k)] == b) edges.push_back(k);
        out.push_back(detail::extract(m, edges, group.front(), static_cast<int>(group.size())));
        group.clear();
    };
    for (int d = m.sigma(r); d != twin(r); d = m.phi(d)) {
        if (!group.empty() && block[static_cast<std::size_t>(d / 2)] != block[static_cast<std::size_t>(group.front() / 2)])
            flush();
        group.push_back(d);
    }
    flush();
    return out;
}

/// Inverse of series_components: chains the blocks between a new root edge.
inline PlanarMap compose_series(const std::vector<MapComponent>& parts) {
    if (parts.empty()) throw std::invalid_argument("compose_series: no components");
    std::vector<int> offset;
    int total = 2;
    for (const auto& c : parts) {
        if (c.exit < 1 || c.exit >= outer_face_degree(c.map))
            throw invalid_object("compose_series: exit must lie strictly inside the outer face");
        offset.push_back(total);
        total += c.map.dart_count();
    }
    std::vector<int> sigma(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int d = 0; d < parts[i].map.dart_count(); ++d)
            sigma[static_cast<std::size_t>(offset[i] + d)] = offset[i] + parts[i].map.sigma(d);

    auto before_root = [&](std::size_t i) {  // z with sigma_B(z) = root_B, global id
        const auto& c = parts[i].map;
        return offset[i] + c.sigma_inverse()[static_cast<std::size_t>(c.root())];
    };
    auto exit_darts = [&](std::size_t i) {  // (twin(x), y) in global ids
        const auto& c = parts[i].map;
        const int x = detail::phi_power(c, c.root(), parts[i].exit - 1);
        const int y = c.phi(x);
        return std::pair{offset[i] + twin(x), offset[i] + y};
    };

    // root vertex: r sits just before the first block's root dart
    sigma[static_cast<std::size_t>(before_root(0))] = 0;
    sigma[0] = offset[0] + parts[0].map.root();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto [tx, y] = exit_darts(i - 1);
        const int z = before_root(i);
        sigma[static_cast<std::size_t>(tx)] = offset[i] + parts[i].map.root();
        sigma[static_cast<std::size_t>(z)] = y;
    }
    auto [tx, y] = exit_darts(parts.size() - 1);
    sigma[static_cast<std::size_t>(tx)] = 1;
    sigma[1] = y;
    return PlanarMap(std::move(sigma), 0);
}

/// Components after contracting the root edge, as duals of the series
/// components of dual(M). Dart ids are shared with M.
inline std::vector<MapComponent> parallel_components(const PlanarMap& m) {
    auto parts = series_components(dual(m));
    for (auto& c : parts) c.map = dual(c.map);
    return parts;
}

inline PlanarMap compose_parallel(const std::vector<MapComponent>& parts) {
    std::vector<MapComponent> dual_parts;
    dual_parts.reserve(parts.size());
    for (const auto& c : parts) dual_parts.push_back({dual(c.map), c.exit, c.origin});
    return dual(compose_series(dual_parts));
}

}  // namespace tamap
