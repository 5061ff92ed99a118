#pragma once

// The generalized Tamari lattice Tam(v), the Tamari order on Dyck paths,
// synchronized and canopy intervals, and the translation between them.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamap/error.hpp"
#include "tamap/paths.hpp"

namespace tamap {

// ---------------------------------------------------------------------------
// Tam(v)

/// Elements covering v1 in Tam(v). Throws invalid_object if v1 is not in Tam(v).
inline std::vector<GridPath> tam_covers(const GridPath& v, const GridPath& v1) {
    if (!weakly_above(v1, v)) throw invalid_object("tam_covers: path is not an element of Tam(v)");
    const auto& w = v1.word();
    const auto pts = points_of(v1);
    std::vector<int> h(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) h[k] = horiz(v, pts[k]);

    std::vector<GridPath> out;
    // pts[k] is a valley when step k-1 is E and step k is N.
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (w[k - 1] != 'E' || w[k] != 'N') continue;
        std::size_t end = k + 1;
        while (h[end] != h[k]) ++end;  // terminates: horiz drops by exactly one per E step
        std::string next = w.substr(0, k - 1);
        next += w.substr(k, end - k);
        next += 'E';
        next += w.substr(end);
        out.emplace_back(std::move(next));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {
inline void tam_rec(const std::vector<int>& floor, int width, int height, std::string& w, int x, int y,
                    std::vector<GridPath>& out) {
    if (x == width && y == height) {
        out.emplace_back(w);
        return;
    }
    if (x < width && y >= floor[x + 1]) {
        w.push_back('E');
        tam_rec(floor, width, height, w, x + 1, y, out);
        w.pop_back();
    }
    if (y < height) {
        w.push_back('N');
        tam_rec(floor, width, height, w, x, y + 1, out);
        w.pop_back();
    }
}
}  // namespace detail

/// All grid paths weakly above v with v's endpoints, lexicographic.
inline std::vector<GridPath> enumerate_tam(const GridPath& v) {
    std::vector<GridPath> out;
    std::string w;
    detail::tam_rec(column_floor(v), v.east_steps(), v.north_steps(), w, 0, 0, out);
    return out;
}

/// Tam(v) with its cover graph and order relation materialized.
class TamLattice {
public:
    explicit TamLattice(GridPath canopy) : canopy_(std::move(canopy)), elements_(enumerate_tam(canopy_)) {
        for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].word(), i);
        covers_.resize(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i)
            for (const auto& c : tam_covers(canopy_, elements_[i])) covers_[i].push_back(index_.at(c.word()));

        leq_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            std::deque<std::size_t> todo{i};
            leq_[i][i] = true;
            while (!todo.empty()) {
                const std::size_t a = todo.front();
                todo.pop_front();
                for (std::size_t b : covers_[a])
                    if (!leq_[i][b]) {
                        leq_[i][b] = true;
                        todo.push_back(b);
                    }
            }
        }
    }

    [[nodiscard]] const GridPath& canopy() const noexcept { return canopy_; }
    [[nodiscard]] const std::vector<GridPath>& elements() const noexcept { return elements_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& covers() const noexcept { return covers_; }

    [[nodiscard]] std::optional<std::size_t> index_of(const GridPath& g) const {
        auto it = index_.find(g.word());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return leq_.at(a).at(b); }

    [[nodiscard]] bool leq(const GridPath& a, const GridPath& b) const {
        auto ia = index_of(a), ib = index_of(b);
        if (!ia || !ib) throw invalid_object("Tam(v) comparison of a path outside the lattice");
        return leq_[*ia][*ib];
    }

    [[nodiscard]] std::size_t interval_count() const {
        std::size_t c = 0;
        for (const auto& row : leq_) c += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
        return c;
    }

private:
    GridPath canopy_;
    std::vector<GridPath> elements_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> covers_;
    std::vector<std::vector<bool>> leq_;
};

// ---------------------------------------------------------------------------
// Tamari order on Dyck paths

/// P <= Q iff D_P(i) <= D_Q(i) for every up step i.
inline bool tamari_leq(const DyckPath& p, const DyckPath& q) {
    if (p.size() != q.size()) throw std::invalid_argument("tamari_leq: size mismatch");
    const auto dp = distance_vector(p), dq = distance_vector(q);
    for (std::size_t i = 0; i < dp.size(); ++i)
        if (dp[i] > dq[i]) return false;
    return true;
}

/// Classical right rotations: a down step followed by a primitive factor
/// u A d is swapped with that factor.
inline std::vector<DyckPath> dyck_rotation_covers(const DyckPath& p) {
    const auto& w = p.word();
    std::vector<DyckPath> out;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] != 'd' || w[k + 1] != 'u') continue;
        std::size_t j = k + 1;
        int depth = 0;
        do {
            depth += w[j] == 'u' ? 1 : -1;
            ++j;
        } while (depth != 0);
        // w[k+1 .. j) is the primitive factor
        out.emplace_back(w.substr(0, k) + w.substr(k + 1, j - k - 1) + 'd' + w.substr(j));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Dyck paths <-> non-crossing grid path pairs

/// Sends P of size n >= 1 to (v1, v) with v = Type(P). The k-th north step
/// of v1 sits c_k columns left of the k-th north step of v, where c_k counts
/// the up steps containing both consecutive "N" up steps.
inline PathPair dyck_to_pathpair(const DyckPath& p) {
    if (p.empty()) throw invalid_object("dyck_to_pathpair: the empty path has no image");
    const GridPath v = type_of(p);
    const std::size_t n = p.size();
    const auto ups = p.up_positions();
    std::vector<std::size_t> match(n);
    for (std::size_t i = 1; i <= n; ++i) match[i - 1] = match_up(p, i);

    // r_1 < ... < r_{s-1}: up indices whose type letter is N; r_s = n.
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v.word()[k] == 'N') r.push_back(k + 1);
    r.push_back(n);

    auto encloses = [&](std::size_t a, std::size_t b) {  // up a contains up b
        return ups[a - 1] < ups[b - 1] && ups[b - 1] < match[a - 1];
    };

    std::vector<int> north_x;  // abscissae of v's north steps
    {
        int x = 0;
        for (char c : v.word()) {
            if (c == 'E') ++x;
            else north_x.push_back(x);
        }
    }

    std::string upper;
    int x = 0;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
        int c = 0;
        for (std::size_t a = 1; a <= n; ++a)
            if (a != r[k] && a != r[k + 1] && encloses(a, r[k]) && encloses(a, r[k + 1])) ++c;
        const int target = north_x[k] - c;
        while (x < target) {
            upper += 'E';
            ++x;
        }
        upper += 'N';
    }
    while (x < v.east_steps()) {
        upper += 'E';
        ++x;
    }
    return {GridPath(std::move(upper)), v};
}

/// Inverse of dyck_to_pathpair. Rebuilds P run by run: v fixes the lengths
/// of the ascending runs, the column shifts c_k fix the valley heights.
inline DyckPath pathpair_to_dyck(const PathPair& pp) {
    if (!pp.valid()) throw invalid_object("pathpair_to_dyck: upper path is not weakly above the canopy");
    const auto& v = pp.canopy.word();

    std::vector<int> run_lengths{1};
    std::vector<int> v_north_x, u_north_x;
    int x = 0;
    for (char c : v) {
        if (c == 'E') {
            ++run_lengths.back();
            ++x;
        } else {
            v_north_x.push_back(x);
            run_lengths.push_back(1);
        }
    }
    x = 0;
    for (char c : pp.upper.word()) {
        if (c == 'E') ++x;
        else u_north_x.push_back(x);
    }

    std::string w;
    int h = 0;
    for (std::size_t j = 0; j < run_lengths.size(); ++j) {
        w.append(static_cast<std::size_t>(run_lengths[j]), 'u');
        h += run_lengths[j];
        const int valley = j + 1 < run_lengths.size() ? v_north_x[j] - u_north_x[j] : 0;
        const int fall = h - valley;
        if (valley < 0 || fall < 1) throw invalid_object("pathpair_to_dyck: pair has no Dyck preimage");
        w.append(static_cast<std::size_t>(fall), 'd');
        h = valley;
    }
    return DyckPath(std::move(w));
}

// ---------------------------------------------------------------------------
// Intervals

struct SyncInterval {
    DyckPath lower;
    DyckPath upper;

    [[nodiscard]] std::size_t size() const noexcept { return lower.size(); }
    friend auto operator<=>(const SyncInterval&, const SyncInterval&) = default;
};

/// Same size, same type, and lower <= upper in the Tamari order.
inline bool is_synchronized(const DyckPath& p, const DyckPath& q) {
    return p.size() == q.size() && type_of(p) == type_of(q) && tamari_leq(p, q);
}

inline bool is_synchronized(const SyncInterval& i) { return is_synchronized(i.lower, i.upper); }

/// A synchronized interval whose lower path is cut as P = P^l P^r at a
/// contact; `cut` is the word length of P^l.
struct PointedSyncInterval {
    SyncInterval base;
    std::size_t cut = 0;

    [[nodiscard]] DyckPath left() const { return DyckPath(base.lower.word().substr(0, cut)); }
    [[nodiscard]] DyckPath right() const { return DyckPath(base.lower.word().substr(cut)); }
    friend auto operator<=>(const PointedSyncInterval&, const PointedSyncInterval&) = default;
};

inline bool is_properly_pointed(const PointedSyncInterval& p) {
    if (!is_synchronized(p.base)) return false;
    if (p.base.lower.empty()) return p.cut == 0;
    if (p.cut == 0) return false;
    const auto cs = contact_offsets(p.base.lower);
    return std::find(cs.begin(), cs.end(), p.cut) != cs.end();
}

/// (v2, v1, v) with v1 <= v2 in Tam(v).
struct CanopyInterval {
    GridPath upper;   // v2
    GridPath lower;   // v1
    GridPath canopy;  // v

    [[nodiscard]] std::size_t size() const noexcept { return canopy.size(); }
    friend auto operator<=>(const CanopyInterval&, const CanopyInterval&) = default;
};

inline bool is_canopy_interval(const CanopyInterval& c) {
    if (!weakly_above(c.lower, c.canopy) || !weakly_above(c.upper, c.canopy)) return false;
    // search upward from v1 along covers
    std::deque<GridPath> todo{c.lower};
    std::vector<GridPath> seen{c.lower};
    while (!todo.empty()) {
        GridPath a = std::move(todo.front());
        todo.pop_front();
        if (a == c.upper) return true;
        for (auto& b : tam_covers(c.canopy, a))
            if (std::find(seen.begin(), seen.end(), b) == seen.end()) {
                seen.push_back(b);
                todo.push_back(std::move(b));
            }
    }
    return false;
}

/// Synchronized interval of size n -> canopy interval of size n-1.
inline CanopyInterval sync_to_canopy(const SyncInterval& i) {
    if (!is_synchronized(i)) throw invalid_object("sync_to_canopy: not a synchronized interval");
    auto lo = dyck_to_pathpair(i.lower);
    auto hi = dyck_to_pathpair(i.upper);
    return {std::move(hi.upper), std::move(lo.upper), std::move(lo.canopy)};
}

inline SyncInterval canopy_to_sync(const CanopyInterval& c) {
    if (!is_canopy_interval(c)) throw invalid_object("canopy_to_sync: not an interval of Tam(v)");
    return {pathpair_to_dyck({c.lower, c.canopy}), pathpair_to_dyck({c.upper, c.canopy})};
}

/// [u P1^l d P1^r P2, u Q1 d Q2]
inline SyncInterval compose_intervals(const PointedSyncInterval& i1, const SyncInterval& i2) {
    DyckPath p = i1.left().lifted() + i1.right() + i2.lower;
    DyckPath q = i1.base.upper.lifted() + i2.upper;
    return {std::move(p), std::move(q)};
}

namespace detail {
/// Word offset of the first return to the axis after offset 0.
inline std::size_t first_return(const DyckPath& p) {
    int h = 0;
    const auto& w = p.word();
    for (std::size_t k = 0; k < w.size(); ++k) {
        h += w[k] == 'u' ? 1 : -1;
        if (h == 0) return k + 1;
    }
    return 0;
}
}  // namespace detail

/// Inverse of compose_intervals on nonempty intervals.
inline std::pair<PointedSyncInterval, SyncInterval> decompose_interval(const SyncInterval& i) {
    if (i.lower.empty()) throw invalid_object("decompose_interval: empty interval");
    const std::size_t m = detail::first_return(i.upper);
    const auto& pw = i.lower.word();
    const auto& qw = i.upper.word();
    const DyckPath p1(pw.substr(0, m));
    const DyckPath p2(pw.substr(m));
    const DyckPath q1(qw.substr(1, m - 2));
    const DyckPath q2(qw.substr(m));
    const std::size_t l = detail::first_return(p1);
    const std::string inner_left = p1.word().substr(1, l - 2);
    PointedSyncInterval pointed{{DyckPath(inner_left + p1.word().substr(l)), q1}, inner_left.size()};
    return {std::move(pointed), SyncInterval{p2, q2}};
}

/// All synchronized intervals of size n, ordered by (lower, upper) words.
/// Pairs are compared only within a type fiber.
inline std::vector<SyncInterval> enumerate_sync_intervals(std::size_t n) {
    std::map<std::string, std::vector<std::pair<DyckPath, std::vector<int>>>> fibers;
    for (auto& p : all_dyck_paths(n)) {
        auto d = distance_vector(p);
        fibers[type_of(p).word()].emplace_back(std::move(p), std::move(d));
    }
    std::vector<SyncInterval> out;
    for (const auto& [type, paths] : fibers) {
        for (const auto& [p, dp] : paths)
            for (const auto& [q, dq] : paths) {
                bool ok = true;
                for (std::size_t i = 0; i < dp.size() && ok; ++i) ok = dp[i] <= dq[i];
                if (ok) out.push_back({p, q});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every properly pointed version of every interval of size n.
inline std::vector<PointedSyncInterval> enumerate_pointed_intervals(std::size_t n) {
    std::vector<PointedSyncInterval> out;
    for (auto& i : enumerate_sync_intervals(n)) {
        if (n == 0) {
            out.push_back({i, 0});
            continue;
        }
        for (std::size_t c : contact_offsets(i.lower))
            if (c > 0) out.push_back({i, c});
    }
    return out;
}

/// Canopy intervals of size len over all 2^len canopies, ordered by
/// (canopy, v1, v2).
inline std::vector<CanopyInterval> enumerate_canopy_intervals(std::size_t len) {
    std::vector<CanopyInterval> out;
    for (const auto& v : all_grid_paths(len)) {
        TamLattice lat(v);
        const auto& el = lat.elements();
        for (std::size_t a = 0; a < el.size(); ++a)
            for (std::size_t b = 0; b < el.size(); ++b)
                if (lat.leq(a, b)) out.push_back({el[b], el[a], v});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text encodings: "P|Q" and "v2|v1|v"

inline std::string to_string(const SyncInterval& i) { return i.lower.word() + "|" + i.upper.word(); }

inline std::string to_string(const CanopyInterval& c) {
    return c.upper.word() + "|" + c.lower.word() + "|" + c.canopy.word();
}

inline std::vector<std::string_view> split_bars(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto bar = s.find('|', start);
        parts.push_back(s.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return parts;
}

/// Parses "P|Q"; does not check synchronization.
inline SyncInterval parse_interval(std::string_view s) {
    const auto parts = split_bars(s);
    if (parts.size() != 2) throw parse_error("interval must have the form P|Q");
    return {DyckPath::parse(parts[0]), DyckPath::parse(parts[1])};
}

/// Parses "v2|v1|v"; does not check the order.
inline CanopyInterval parse_canopy_interval(std::string_view s) {
    const auto parts = split_bars(s);
    if (parts.size() != 3) throw parse_error("canopy interval must have the form v2|v1|v");
    return {GridPath::parse(parts[0]), GridPath::parse(parts[1]), GridPath::parse(parts[2])};
}

}  // namespace tamap
