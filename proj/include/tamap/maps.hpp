#pragma once

// Rooted planar maps as rotation systems.
//
// Darts are 0..2m-1 and the darts of edge k are 2k and 2k+1, so twin(d) is
// d ^ 1. sigma(d) is the next dart CLOCKWISE around the origin of d. The
// face permutation is phi(d) = sigma(twin(d)); with a clockwise sigma this
// walks the face lying on the LEFT of d. The root dart points from the root
// vertex; the outer face is the phi-orbit of the root dart.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamap/error.hpp"

namespace tamap {

inline constexpr int twin(int d) noexcept { return d ^ 1; }

namespace detail {

inline bool is_permutation(const std::vector<int>& sigma) {
    std::vector<bool> hit(sigma.size(), false);
    for (int s : sigma) {
        if (s < 0 || static_cast<std::size_t>(s) >= sigma.size() || hit[static_cast<std::size_t>(s)]) return false;
        hit[static_cast<std::size_t>(s)] = true;
    }
    return true;
}

/// Orbit id of every element, ids assigned in order of smallest element.
template <typename Next>
std::vector<int> orbit_ids(std::size_t n, Next next, int& count) {
    std::vector<int> id(n, -1);
    count = 0;
    for (std::size_t d = 0; d < n; ++d) {
        if (id[d] >= 0) continue;
        int x = static_cast<int>(d);
        do {
            id[static_cast<std::size_t>(x)] = count;
            x = next(x);
        } while (x != static_cast<int>(d));
        ++count;
    }
    return id;
}

inline int count_orbits_sigma(const std::vector<int>& sigma) {
    int c = 0;
    orbit_ids(sigma.size(), [&](int d) { return sigma[static_cast<std::size_t>(d)]; }, c);
    return c;
}

inline int count_orbits_phi(const std::vector<int>& sigma) {
    int c = 0;
    orbit_ids(sigma.size(), [&](int d) { return sigma[static_cast<std::size_t>(twin(d))]; }, c);
    return c;
}

inline bool is_connected(const std::vector<int>& sigma) {
    if (sigma.empty()) return false;
    std::vector<bool> seen(sigma.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int d = stack.back();
        stack.pop_back();
        for (int e : {sigma[static_cast<std::size_t>(d)], twin(d)})
            if (!seen[static_cast<std::size_t>(e)]) {
                seen[static_cast<std::size_t>(e)] = true;
                ++reached;
                stack.push_back(e);
            }
    }
    return reached == sigma.size();
}

/// V - E + F == 2
inline bool is_planar(const std::vector<int>& sigma) {
    const int e = static_cast<int>(sigma.size() / 2);
    return count_orbits_sigma(sigma) - e + count_orbits_phi(sigma) == 2;
}

}  // namespace detail

/// Rooted connected planar map with at least one edge.
class PlanarMap {
public:
    /// Throws invalid_object unless sigma is a permutation of an even number
    /// of darts, the map is connected and Euler's formula holds.
    PlanarMap(std::vector<int> sigma, int root) : sigma_(std::move(sigma)), root_(root) {
        if (sigma_.empty() || sigma_.size() % 2 != 0) throw invalid_object("map needs a positive even dart count");
        if (!detail::is_permutation(sigma_)) throw invalid_object("sigma is not a permutation of the darts");
        if (root_ < 0 || static_cast<std::size_t>(root_) >= sigma_.size())
            throw invalid_object("root dart out of range");
        if (!detail::is_connected(sigma_)) throw invalid_object("map is not connected");
        if (!detail::is_planar(sigma_)) throw invalid_object("map violates Euler's formula V - E + F = 2");
        int count = 0;
        vertex_ = detail::orbit_ids(sigma_.size(), [&](int d) { return sigma_[static_cast<std::size_t>(d)]; }, count);
        vertex_count_ = count;
        face_ = detail::orbit_ids(sigma_.size(), [&](int d) { return phi(d); }, count);
        face_count_ = count;
    }

    [[nodiscard]] const std::vector<int>& sigma() const noexcept { return sigma_; }
    [[nodiscard]] int sigma(int d) const { return sigma_.at(static_cast<std::size_t>(d)); }
    [[nodiscard]] int phi(int d) const { return sigma_.at(static_cast<std::size_t>(twin(d))); }
    [[nodiscard]] int root() const noexcept { return root_; }
    [[nodiscard]] int dart_count() const noexcept { return static_cast<int>(sigma_.size()); }
    [[nodiscard]] int edge_count() const noexcept { return dart_count() / 2; }
    [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
    [[nodiscard]] int face_count() const noexcept { return face_count_; }

    /// Vertex (sigma-orbit) holding dart d as an outgoing half-edge.
    [[nodiscard]] int origin(int d) const { return vertex_.at(static_cast<std::size_t>(d)); }
    [[nodiscard]] int head(int d) const { return origin(twin(d)); }
    /// Face (phi-orbit) on the left of dart d.
    [[nodiscard]] int face_of(int d) const { return face_.at(static_cast<std::size_t>(d)); }

    [[nodiscard]] int root_vertex() const { return origin(root_); }
    [[nodiscard]] int outer_face() const { return face_of(root_); }

    [[nodiscard]] std::vector<int> sigma_inverse() const {
        std::vector<int> inv(sigma_.size());
        for (std::size_t d = 0; d < sigma_.size(); ++d) inv[static_cast<std::size_t>(sigma_[d])] = static_cast<int>(d);
        return inv;
    }

    friend bool operator==(const PlanarMap& a, const PlanarMap& b) {
        return a.root_ == b.root_ && a.sigma_ == b.sigma_;
    }

private:
    std::vector<int> sigma_;
    int root_ = 0;
    std::vector<int> vertex_;
    std::vector<int> face_;
    int vertex_count_ = 0;
    int face_count_ = 0;
};

struct MapStats {
    int outer_face_degree = 0;
    int root_vertex_degree = 0;
    int edge_count = 0;
    friend bool operator==(const MapStats&, const MapStats&) = default;
};

namespace detail {
template <typename Next>
std::vector<int> cycle_from(int start, Next next) {
    std::vector<int> c;
    int x = start;
    do {
        c.push_back(x);
        x = next(x);
    } while (x != start);
    return c;
}
}  // namespace detail

/// Dart cycles of the face permutation. The outer face comes first and
/// starts at the root dart; the others start at their smallest dart.
inline std::vector<std::vector<int>> faces(const PlanarMap& m) {
    std::vector<std::vector<int>> out;
    out.push_back(detail::cycle_from(m.root(), [&](int d) { return m.phi(d); }));
    std::vector<bool> done(static_cast<std::size_t>(m.dart_count()), false);
    for (int d : out.front()) done[static_cast<std::size_t>(d)] = true;
    for (int d = 0; d < m.dart_count(); ++d) {
        if (done[static_cast<std::size_t>(d)]) continue;
        out.push_back(detail::cycle_from(d, [&](int x) { return m.phi(x); }));
        for (int x : out.back()) done[static_cast<std::size_t>(x)] = true;
    }
    return out;
}

/// Clockwise dart cycles around each vertex; the root vertex first, from the root.
inline std::vector<std::vector<int>> vertices(const PlanarMap& m) {
    std::vector<std::vector<int>> out;
    out.push_back(detail::cycle_from(m.root(), [&](int d) { return m.sigma(d); }));
    std::vector<bool> done(static_cast<std::size_t>(m.dart_count()), false);
    for (int d : out.front()) done[static_cast<std::size_t>(d)] = true;
    for (int d = 0; d < m.dart_count(); ++d) {
        if (done[static_cast<std::size_t>(d)]) continue;
        out.push_back(detail::cycle_from(d, [&](int x) { return m.sigma(x); }));
        for (int x : out.back()) done[static_cast<std::size_t>(x)] = true;
    }
    return out;
}

inline int outer_face_degree(const PlanarMap& m) {
    return static_cast<int>(detail::cycle_from(m.root(), [&](int d) { return m.phi(d); }).size());
}

inline int root_vertex_degree(const PlanarMap& m) {
    return static_cast<int>(detail::cycle_from(m.root(), [&](int d) { return m.sigma(d); }).size());
}

inline MapStats stats(const PlanarMap& m) { return {outer_face_degree(m), root_vertex_degree(m), m.edge_count()}; }

// ---------------------------------------------------------------------------
// Non-separability

namespace detail {

/// Articulation-point search on the underlying multigraph (edge k joins
/// origin(2k) and origin(2k+1)). Parallel edges are told apart by id.
inline bool has_cut_vertex(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(vertex_count));
    for (std::size_t k = 0; k < edges.size(); ++k) {
        adj[static_cast<std::size_t>(edges[k].first)].emplace_back(edges[k].second, static_cast<int>(k));
        adj[static_cast<std::size_t>(edges[k].second)].emplace_back(edges[k].first, static_cast<int>(k));
    }
    std::vector<int> disc(static_cast<std::size_t>(vertex_count), -1), low(static_cast<std::size_t>(vertex_count), 0);
    int timer = 0;
    bool cut = false;
    std::function<void(int, int)> dfs = [&](int x, int via) {
        disc[static_cast<std::size_t>(x)] = low[static_cast<std::size_t>(x)] = timer++;
        int children = 0;
        for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
            if (e == via) continue;
            if (disc[static_cast<std::size_t>(y)] >= 0) {
                low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], disc[static_cast<std::size_t>(y)]);
                continue;
            }
            ++children;
            dfs(y, e);
            low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], low[static_cast<std::size_t>(y)]);
            if (via >= 0 && low[static_cast<std::size_t>(y)] >= disc[static_cast<std::size_t>(x)]) cut = true;
        }
        if (via < 0 && children > 1) cut = true;
    };
    dfs(0, -1);
    return cut;
}

inline std::vector<std::pair<int, int>> edge_list(const PlanarMap& m) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < m.edge_count(); ++k) edges.emplace_back(m.origin(2 * k), m.origin(2 * k + 1));
    return edges;
}

}  // namespace detail

/// At least two edges, no loop, no cut vertex.
inline bool is_non_separable(const PlanarMap& m) {
    if (m.edge_count() < 2) return false;
    const auto edges = detail::edge_list(m);
    for (auto [a, b] : edges)
        if (a == b) return false;
    return !detail::has_cut_vertex(m.vertex_count(), edges);
}

// ---------------------------------------------------------------------------
// Duality

/// Dual map on the same darts: sigma* = sigma o twin, same root dart. The
/// root vertex of the dual is the outer face of m, the outer face of the
/// dual is the root vertex of m, and dual(dual(m)) == m.
inline PlanarMap dual(const PlanarMap& m) {
    std::vector<int> s(static_cast<std::size_t>(m.dart_count()));
    for (int d = 0; d < m.dart_count(); ++d) s[static_cast<std::size_t>(d)] = m.phi(d);
    return PlanarMap(std::move(s), m.root());
}

// ---------------------------------------------------------------------------
// Canonical form

/// Relabels darts in root-first discovery order: the root becomes 0, its twin
/// 1, and scanning darts in label order, each unseen sigma-image gets the next
/// even label and its twin the following odd one. Rooted maps are isomorphic
/// iff their canonical forms are equal.
inline PlanarMap canonical_form(const PlanarMap& m) {
    const std::size_t n = static_cast<std::size_t>(m.dart_count());
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    auto take = [&](int d) {
        label[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
        label[static_cast<std::size_t>(twin(d))] = static_cast<int>(order.size());
        order.push_back(twin(d));
    };
    take(m.root());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int s = m.sigma(order[i]);
        if (label[static_cast<std::size_t>(s)] < 0) take(s);
    }
    std::vector<int> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = label[static_cast<std::size_t>(m.sigma(order[i]))];
    return PlanarMap(std::move(sigma), 0);
}

/// One byte per dart: the sigma image in the canonical labeling.
inline std::string canonical_code(const PlanarMap& m) {
    if (m.dart_count() > 255) throw std::length_error("canonical_code: more than 255 darts");
    const PlanarMap c = canonical_form(m);
    std::string code;
    code.reserve(static_cast<std::size_t>(c.dart_count()));
    for (int s : c.sigma()) code.push_back(static_cast<char>(static_cast<unsigned char>(s)));
    return code;
}

/// Relabels edge k as edge_perm[k]; when flip[k] is set the two darts of
/// edge k trade places. The result is isomorphic to m as a rooted map.
inline PlanarMap relabel(const PlanarMap& m, const std::vector<int>& edge_perm, const std::vector<bool>& flip) {
    const auto n = static_cast<std::size_t>(m.dart_count());
    std::vector<int> to(n);
    for (int d = 0; d < m.dart_count(); ++d) {
        const int k = d / 2;
        const int side = (d & 1) ^ (flip[static_cast<std::size_t>(k)] ? 1 : 0);
        to[static_cast<std::size_t>(d)] = 2 * edge_perm[static_cast<std::size_t>(k)] + side;
    }
    std::vector<int> sigma(n);
    for (std::size_t d = 0; d < n; ++d) sigma[static_cast<std::size_t>(to[d])] = to[static_cast<std::size_t>(m.sigma(static_cast<int>(d)))];
    return PlanarMap(std::move(sigma), to[static_cast<std::size_t>(m.root())]);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Every connected rooted rotation system with `edges` edges, each produced
/// once in canonical labeling: sigma is filled in dart order, and each image
/// is either an already labeled dart or the next fresh edge.
class RootedMapGenerator {
public:
    explicit RootedMapGenerator(int edges, std::function<void(const std::vector<int>&)> sink)
        : n_(2 * edges), sigma_(static_cast<std::size_t>(n_), -1), used_(static_cast<std::size_t>(n_), false),
          sink_(std::move(sink)) {}

    void run() { step(0, 2); }

private:
    void step(int i, int labeled) {
        if (i == n_) {
            sink_(sigma_);
            return;
        }
        if (i >= labeled) return;  // disconnected remainder
        for (int j = 0; j < labeled; ++j) {
            if (used_[static_cast<std::size_t>(j)]) continue;
            place(i, j);
            step(i + 1, labeled);
            unplace(i, j);
        }
        if (labeled < n_) {
            place(i, labeled);
            step(i + 1, labeled + 2);
            unplace(i, labeled);
        }
    }

    void place(int i, int j) {
        sigma_[static_cast<std::size_t>(i)] = j;
        used_[static_cast<std::size_t>(j)] = true;
    }
    void unplace(int i, int j) {
        sigma_[static_cast<std::size_t>(i)] = -1;
        used_[static_cast<std::size_t>(j)] = false;
    }

    int n_;
    std::vector<int> sigma_;
    std::vector<bool> used_;
    std::function<void(const std::vector<int>&)> sink_;
};

}  // namespace detail

/// Non-separable rooted planar maps with m edges, in canonical form, ordered
/// by canonical code.
inline std::vector<PlanarMap> enumerate_nonseparable(int m) {
    if (m < 2) throw std::invalid_argument("enumerate_nonseparable: needs at least two edges");
    if (m > 8) throw std::out_of_range("enumerate_nonseparable: more than 8 edges is out of desk scale");
    std::vector<PlanarMap> out;
    detail::RootedMapGenerator(m, [&](const std::vector<int>& sigma) {
        if (!detail::is_planar(sigma)) return;
        PlanarMap candidate(sigma, 0);
        if (is_non_separable(candidate)) out.push_back(std::move(candidate));
    }).run();
    std::sort(out.begin(), out.end(), [](const PlanarMap& a, const PlanarMap& b) { return a.sigma() < b.sigma(); });
    return out;
}

// ---------------------------------------------------------------------------
// Text format
//
//   darts 2m
//   root r
//   sigma a1 a2 ... a2m
//
// Darts are 1-based in the file; twin pairs are (1 2)(3 4)...

inline std::string to_text(const PlanarMap& m) {
    std::ostringstream os;
    os << "darts " << m.dart_count() << "\nroot " << m.root() + 1 << "\nsigma";
    for (int s : m.sigma()) os << ' ' << s + 1;
    os << '\n';
    return os.str();
}

inline PlanarMap parse_map(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string key;
    int darts = 0, root = 0;
    if (!(is >> key) || key != "darts" || !(is >> darts)) throw parse_error("map file: expected 'darts <2m>'");
    if (darts <= 0 || darts % 2 != 0) throw parse_error("map file: dart count must be positive and even");
    if (!(is >> key) || key != "root" || !(is >> root)) throw parse_error("map file: expected 'root <r>'");
    if (!(is >> key) || key != "sigma") throw parse_error("map file: expected 'sigma a1 ... a2m'");
    std::vector<int> sigma(static_cast<std::size_t>(darts));
    for (auto& s : sigma) {
        if (!(is >> s)) throw parse_error("map file: sigma has fewer than 'darts' entries");
        --s;
    }
    if (is >> key) throw parse_error("map file: trailing data after sigma");
    return PlanarMap(std::move(sigma), root - 1);
}

}  // namespace tamap
