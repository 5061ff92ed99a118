#pragma once

// Exhaustive verification suites over all objects up to a given size. Each
// suite returns one check per property and size; failures carry the first
// counterexample in its text encoding.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "tamap/bijections.hpp"
#include "tamap/map_decomposition.hpp"
#include "tamap/maps.hpp"
#include "tamap/paths.hpp"
#include "tamap/series.hpp"
#include "tamap/tamari.hpp"
#include "tamap/trees.hpp"

namespace tamap {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    void print(std::ostream& os) const {
        for (const auto& c : checks) {
            os << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) os << ": " << c.detail;
            os << '\n';
        }
        os << suite << ": " << (ok() ? "all checks passed" : "FAILED") << '\n';
    }
};

/// Largest map edge count the map-based checks will enumerate.
inline constexpr int kMaxCheckedEdges = 6;

namespace detail {

inline std::string map_line(const PlanarMap& m) {
    std::string s = to_text(m);
    std::replace(s.begin(), s.end(), '\n', ' ');
    if (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

/// Reflexive-transitive closure of the rotation covers on all Dyck paths of
/// size n, as a set of (lower, upper) word pairs.
inline std::set<std::pair<std::string, std::string>> rotation_closure(std::size_t n) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& p : all_dyck_paths(n)) {
        std::deque<DyckPath> todo{p};
        std::set<std::string> seen{p.word()};
        while (!todo.empty()) {
            DyckPath a = todo.front();
            todo.pop_front();
            out.emplace(p.word(), a.word());
            for (auto& b : dyck_rotation_covers(a))
                if (seen.insert(b.word()).second) todo.push_back(std::move(b));
        }
    }
    return out;
}

template <typename Key>
std::string histogram_string(const std::map<Key, long>& h) {
    std::string s;
    for (const auto& [k, v] : h) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
    return s;
}

}  // namespace detail

inline Report verify_roundtrip(std::size_t n) {
    Report r{"roundtrip", {}};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::string sz = " n=" + std::to_string(k);

        std::string bad;
        for (const auto& t : enumerate_decorated_trees(k)) {
            const SyncInterval iv = tree_to_interval(t);
            if (!is_synchronized(iv)) { bad = to_string(t) + " -> " + to_string(iv) + " not synchronized"; break; }
            if (interval_to_tree(iv) != t) { bad = to_string(t); break; }
        }
        r.add("R o [P,Q] = id on decorated trees" + sz, bad.empty(), bad);

        bad.clear();
        for (const auto& iv : enumerate_sync_intervals(k)) {
            const DecoratedTree t = interval_to_tree(iv);
            if (!is_valid(t)) { bad = to_string(iv) + " -> " + to_string(t) + " invalid"; break; }
            if (tree_to_interval(t) != iv) { bad = to_string(iv); break; }
        }
        r.add("[P,Q] o R = id on synchronized intervals" + sz, bad.empty(), bad);

        bad.clear();
        for (const auto& iv : enumerate_sync_intervals(k)) {
            auto [pointed, rest] = decompose_interval(iv);
            if (!is_properly_pointed(pointed) || !is_synchronized(rest) || compose_intervals(pointed, rest) != iv) {
                bad = to_string(iv);
                break;
            }
        }
        r.add("compose o decompose = id on synchronized intervals" + sz, bad.empty(), bad);

        bad.clear();
        for (const auto& iv : enumerate_sync_intervals(k)) {
            const CanopyInterval c = sync_to_canopy(iv);
            if (!is_canopy_interval(c) || canopy_to_sync(c) != iv) { bad = to_string(iv); break; }
        }
        r.add("canopy <-> synchronized round trip" + sz, bad.empty(), bad);

        if (static_cast<int>(k) + 1 <= kMaxCheckedEdges) {
            bad.clear();
            for (const auto& m : enumerate_nonseparable(static_cast<int>(k) + 1)) {
                const DecoratedTree t = map_to_tree(m);
                if (!is_valid(t)) { bad = detail::map_line(m) + " -> invalid tree " + to_string(t); break; }
                const PlanarMap back = tree_to_map(t);
                if (!is_non_separable(back) || canonical_code(back) != canonical_code(m)) { bad = detail::map_line(m); break; }
            }
            r.add("S o T = id on non-separable maps with " + std::to_string(k + 1) + " edges", bad.empty(), bad);

            bad.clear();
            for (const auto& t : enumerate_decorated_trees(k)) {
                const PlanarMap m = tree_to_map(t);
                if (!is_non_separable(m) || map_to_tree(m) != t) { bad = to_string(t); break; }
            }
            r.add("T o S = id on decorated trees" + sz, bad.empty(), bad);

            bad.clear();
            for (const auto& m : enumerate_nonseparable(static_cast<int>(k) + 1)) {
                const std::string code = canonical_code(m);
                if (canonical_code(compose_series(series_components(m))) != code ||
                    canonical_code(compose_parallel(parallel_components(m))) != code) {
                    bad = detail::map_line(m);
                    break;
                }
            }
            r.add("series/parallel recomposition with " + std::to_string(k + 1) + " edges", bad.empty(), bad);
        }
    }
    return r;
}

inline Report verify_partition(std::size_t n) {
    Report r{"partition", {}};
    for (std::size_t k = 1; k <= n; ++k) {
        std::map<std::string, std::size_t> fiber;
        for (const auto& p : all_dyck_paths(k)) ++fiber[type_of(p).word()];
        BigInt total = 0;
        std::string bad;
        for (const auto& v : all_grid_paths(k - 1)) {
            const std::size_t tam = enumerate_tam(v).size();
            total += tam;
            if (fiber[v.word()] != tam && bad.empty())
                bad = "|I(" + v.word() + ")| = " + std::to_string(fiber[v.word()]) + " but |Tam| = " + std::to_string(tam);
        }
        const BigInt cat = catalan(static_cast<unsigned>(k));
        r.add("sum |Tam(v)| = Catalan(" + std::to_string(k) + ")", total == cat,
              total.str() + " vs " + cat.str());
        r.add("2^" + std::to_string(k - 1) + " nonempty type fibers", fiber.size() == (std::size_t{1} << (k - 1)),
              std::to_string(fiber.size()) + " fibers");
        r.add("|I(v)| = |Tam(v)| for every v of length " + std::to_string(k - 1), bad.empty(), bad);
    }
    return r;
}

inline Report verify_order_oracle(std::size_t n) {
    Report r{"order-oracle", {}};
    for (std::size_t k = 1; k <= n; ++k) {
        const auto closure = detail::rotation_closure(k);
        const auto paths = all_dyck_paths(k);
        std::string bad;
        for (const auto& p : paths) {
            for (const auto& q : paths)
                if (tamari_leq(p, q) != closure.contains({p.word(), q.word()})) {
                    bad = p.word() + " vs " + q.word();
                    break;
                }
            if (!bad.empty()) break;
        }
        r.add("distance criterion = rotation closure, size " + std::to_string(k), bad.empty(), bad);

        bad.clear();
        std::map<std::string, std::vector<DyckPath>> fibers;
        for (const auto& p : paths) fibers[type_of(p).word()].push_back(p);
        for (const auto& [type, members] : fibers) {
            const TamLattice lat{GridPath(type)};
            for (const auto& p : members) {
                for (const auto& q : members)
                    if (tamari_leq(p, q) != lat.leq(dyck_to_pathpair(p).upper, dyck_to_pathpair(q).upper)) {
                        bad = p.word() + " vs " + q.word() + " in Tam(" + type + ")";
                        break;
                    }
                if (!bad.empty()) break;
            }
            if (!bad.empty()) break;
        }
        r.add("distance criterion = Tam(v) closure, |v| = " + std::to_string(k - 1), bad.empty(), bad);
    }
    return r;
}

/// Histogram series: t^size x^stat for each object.
inline BiSeries contact_series(std::size_t max_size, std::size_t order) {
    BiSeries s(order);
    for (std::size_t k = 1; k <= max_size; ++k)
        for (const auto& iv : enumerate_sync_intervals(k)) s.add_to(k, static_cast<std::size_t>(contacts(iv.lower) - 1), 1);
    return s;
}

inline BiSeries map_series(std::size_t max_size, std::size_t order, bool by_root_vertex) {
    BiSeries s(order);
    for (std::size_t k = 1; k <= max_size; ++k)
        for (const auto& m : enumerate_nonseparable(static_cast<int>(k) + 1)) {
            const int deg = by_root_vertex ? root_vertex_degree(m) : outer_face_degree(m);
            s.add_to(k, static_cast<std::size_t>(deg - 1), 1);
        }
    return s;
}

inline Report verify_series(std::size_t n) {
    Report r{"series", {}};
    const std::size_t order = std::max<std::size_t>(n, 12);
    const BiSeries f = solve_interval_equation(order);
    const BiSeries ms = solve_map_equation(order);
    r.add("interval and map equations agree to t^" + std::to_string(order), f == ms);

    const auto f1 = f.at_x_one();
    std::string bad;
    for (std::size_t k = 1; k <= order; ++k)
        if (f1[k] != closed_form(static_cast<unsigned>(k - 1)) && bad.empty())
            bad = "t^" + std::to_string(k) + ": " + f1[k].str();
    r.add("F(1,t) = closed form to t^" + std::to_string(order), bad.empty(), bad);

    const BiSeries contacts_hist = contact_series(n, n);
    const std::size_t map_n = std::min<std::size_t>(n, kMaxCheckedEdges - 1);
    const BiSeries outer_hist = map_series(map_n, map_n, false);
    const BiSeries root_hist = map_series(map_n, map_n, true);
    for (std::size_t k = 1; k <= n; ++k) {
        bool ok = true;
        for (std::size_t x = 0; x <= k + 1; ++x) ok = ok && f.coeff(k, x) == contacts_hist.coeff(k, x);
        r.add("[t^" + std::to_string(k) + "] F = contact histogram", ok);
    }
    for (std::size_t k = 1; k <= map_n; ++k) {
        bool ok_outer = true, ok_root = true;
        for (std::size_t x = 0; x <= k + 1; ++x) {
            ok_outer = ok_outer && ms.coeff(k, x) == outer_hist.coeff(k, x);
            ok_root = ok_root && ms.coeff(k, x) == root_hist.coeff(k, x);
        }
        r.add("[t^" + std::to_string(k) + "] M_s = outer-face histogram", ok_outer);
        r.add("[t^" + std::to_string(k) + "] M_p = root-vertex histogram", ok_root);
    }
    return r;
}

/// Distribution identities. Per-object transfer of the statistics under the
/// composed bijection is reported as an informational line: it never fails.
inline Report verify_stats(std::size_t n) {
    Report r{"stats", {}};
    const std::size_t map_n = std::min<std::size_t>(n, kMaxCheckedEdges - 1);
    for (std::size_t k = 1; k <= map_n; ++k) {
        std::map<int, long> contacts_h, outer_h, root_h;
        for (const auto& iv : enumerate_sync_intervals(k)) ++contacts_h[contacts(iv.lower) - 1];
        long transfer_root = 0, transfer_outer = 0, recursive_agree = 0, total = 0;
        for (const auto& m : enumerate_nonseparable(static_cast<int>(k) + 1)) {
            ++outer_h[outer_face_degree(m) - 1];
            ++root_h[root_vertex_degree(m) - 1];
            const SyncInterval iv = map_to_interval(m);
            transfer_root += contacts(iv.lower) == root_vertex_degree(m);
            transfer_outer += contacts(iv.lower) == outer_face_degree(m);
            recursive_agree += recursive_map_to_interval(m) == iv;
            ++total;
        }
        const std::string sz = " n=" + std::to_string(k);
        r.add("contacts-1 over I_n = outer-face degree-1 over M_n" + sz, contacts_h == outer_h,
              detail::histogram_string(contacts_h) + " | " + detail::histogram_string(outer_h));
        r.add("contacts-1 over I_n = root-vertex degree-1 over M_n" + sz, contacts_h == root_h,
              detail::histogram_string(contacts_h) + " | " + detail::histogram_string(root_h));
        r.add("info: per-object contacts = root-vertex degree under [P,Q] o T" + sz, true,
              std::to_string(transfer_root) + "/" + std::to_string(total));
        r.add("info: per-object contacts = outer-face degree under [P,Q] o T" + sz, true,
              std::to_string(transfer_outer) + "/" + std::to_string(total));
        r.add("info: recursive bijection coincides with [P,Q] o T" + sz, true,
              std::to_string(recursive_agree) + "/" + std::to_string(total));
    }
    return r;
}

}  // namespace tamap
