#pragma once

// Graphviz renderings. Output is deterministic: vertices, nodes and edges
// are emitted in a fixed order derived from the objects themselves.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tamap/maps.hpp"
#include "tamap/paths.hpp"
#include "tamap/tamari.hpp"
#include "tamap/trees.hpp"

namespace tamap {

/// Vertices are sigma-orbits numbered from the root vertex; the root edge is
/// drawn first, directed and bold.
inline std::string to_dot(const PlanarMap& m) {
    const auto vs = vertices(m);
    std::vector<int> vid(static_cast<std::size_t>(m.dart_count()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (int d : vs[i]) vid[static_cast<std::size_t>(d)] = static_cast<int>(i);

    std::ostringstream os;
    os << "graph planar_map {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        os << "  v" << i << " [label=\"" << i << "\"";
        if (i == 0) os << ", style=bold";
        os << "];\n";
    }
    const int r = m.root();
    os << "  v" << vid[static_cast<std::size_t>(r)] << " -- v" << vid[static_cast<std::size_t>(twin(r))]
       << " [label=\"root\", dir=forward, penwidth=2];\n";
    for (int k = 0; k < m.edge_count(); ++k) {
        if (k == r / 2) continue;
        os << "  v" << vid[static_cast<std::size_t>(2 * k)] << " -- v" << vid[static_cast<std::size_t>(2 * k + 1)] << ";\n";
    }
    os << "}\n";
    return os.str();
}

/// Internal nodes are points, leaves are boxes carrying their labels.
inline std::string to_dot(const DecoratedTree& t) {
    std::ostringstream os;
    os << "graph decorated_tree {\n";
    os << "  ordering=out;\n";
    for (int id = 0; id < static_cast<int>(t.node_count()); ++id) {
        if (t.is_leaf(id))
            os << "  n" << id << " [shape=box, label=\"" << t.label(id) << "\"];\n";
        else
            os << "  n" << id << " [shape=circle, label=\"\"" << (id == 0 ? ", style=bold" : "") << "];\n";
    }
    for (int id = 1; id < static_cast<int>(t.node_count()); ++id) os << "  n" << t.node(id).parent << " -- n" << id << ";\n";
    os << "}\n";
    return os.str();
}

/// Hasse diagram of the Tamari lattice of size n under rotation, with one
/// cluster per type fiber.
inline std::string tamari_hasse_dot(std::size_t n) {
    std::map<std::string, std::vector<DyckPath>> fibers;
    const auto paths = all_dyck_paths(n);
    for (const auto& p : paths) fibers[type_of(p).word()].push_back(p);
    std::ostringstream os;
    os << "digraph tamari {\n";
    os << "  rankdir=BT;\n";
    std::size_t cluster = 0;
    for (const auto& [type, members] : fibers) {
        os << "  subgraph cluster_" << cluster++ << " {\n";
        os << "    label=\"type " << (type.empty() ? "(empty)" : type) << "\";\n";
        for (const auto& p : members) os << "    \"" << p.word() << "\";\n";
        os << "  }\n";
    }
    for (const auto& p : paths)
        for (const auto& q : dyck_rotation_covers(p)) os << "  \"" << p.word() << "\" -> \"" << q.word() << "\";\n";
    os << "}\n";
    return os.str();
}

/// Hasse diagram of Tam(v).
inline std::string tam_hasse_dot(const GridPath& v) {
    const TamLattice lat(v);
    std::ostringstream os;
    os << "digraph tam {\n";
    os << "  rankdir=BT;\n";
    os << "  label=\"Tam(" << v.word() << ")\";\n";
    for (const auto& e : lat.elements()) os << "  \"" << e.word() << "\";\n";
    for (std::size_t a = 0; a < lat.elements().size(); ++a)
        for (std::size_t b : lat.covers()[a])
            os << "  \"" << lat.elements()[a].word() << "\" -> \"" << lat.elements()[b].word() << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tamap
