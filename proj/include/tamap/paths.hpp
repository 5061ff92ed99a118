#pragma once

// Dyck paths over {u,d}, grid paths over {N,E}, and the statistics defined
// on them: matching, distance function, type, containment, contacts and the
// horizontal distance to a canopy.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamap/error.hpp"

namespace tamap {

/// Balanced word over {u, d} whose prefixes never go below the axis.
/// Up steps are numbered 1..n by occurrence, word positions 1..2n.
class DyckPath {
public:
    DyckPath() = default;

    /// Throws parse_error on a foreign letter or a non-Dyck word.
    explicit DyckPath(std::string word) : word_(std::move(word)) {
        int h = 0;
        for (char c : word_) {
            if (c == 'u') {
                ++h;
            } else if (c == 'd') {
                if (--h < 0) throw parse_error("Dyck word goes below the axis: " + word_);
            } else {
                throw parse_error(std::string("Dyck word has letter '") + c + "' outside {u,d}");
            }
        }
        if (h != 0) throw parse_error("Dyck word is not balanced: " + word_);
    }

    static DyckPath parse(std::string_view text) { return DyckPath(std::string(text)); }

    [[nodiscard]] const std::string& word() const noexcept { return word_; }
    [[nodiscard]] std::size_t size() const noexcept { return word_.size() / 2; }
    [[nodiscard]] std::size_t length() const noexcept { return word_.size(); }
    [[nodiscard]] bool empty() const noexcept { return word_.empty(); }

    /// Letter at 1-based word position.
    [[nodiscard]] char at(std::size_t pos) const { return word_.at(pos - 1); }

    /// Heights after each prefix, indices 0..2n.
    [[nodiscard]] std::vector<int> heights() const {
        std::vector<int> h(word_.size() + 1, 0);
        for (std::size_t k = 0; k < word_.size(); ++k) h[k + 1] = h[k] + (word_[k] == 'u' ? 1 : -1);
        return h;
    }

    /// 1-based word positions of the up steps, in order.
    [[nodiscard]] std::vector<std::size_t> up_positions() const {
        std::vector<std::size_t> pos;
        pos.reserve(size());
        for (std::size_t k = 0; k < word_.size(); ++k)
            if (word_[k] == 'u') pos.push_back(k + 1);
        return pos;
    }

    friend DyckPath operator+(const DyckPath& a, const DyckPath& b) {
        DyckPath r;
        r.word_ = a.word_ + b.word_;
        return r;
    }

    /// u A d
    [[nodiscard]] DyckPath lifted() const {
        DyckPath r;
        r.word_ = "u" + word_ + "d";
        return r;
    }

    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    std::string word_;
};

/// Word over {N, E}; any word is allowed.
class GridPath {
public:
    GridPath() = default;

    explicit GridPath(std::string word) : word_(std::move(word)) {
        for (char c : word_)
            if (c != 'N' && c != 'E')
                throw parse_error(std::string("grid path has letter '") + c + "' outside {N,E}");
    }

    static GridPath parse(std::string_view text) { return GridPath(std::string(text)); }

    [[nodiscard]] const std::string& word() const noexcept { return word_; }
    [[nodiscard]] std::size_t size() const noexcept { return word_.size(); }
    [[nodiscard]] bool empty() const noexcept { return word_.empty(); }

    [[nodiscard]] int east_steps() const noexcept {
        int e = 0;
        for (char c : word_) e += c == 'E';
        return e;
    }
    [[nodiscard]] int north_steps() const noexcept { return static_cast<int>(word_.size()) - east_steps(); }

    friend auto operator<=>(const GridPath&, const GridPath&) = default;

private:
    std::string word_;
};

struct Point {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Lattice points visited by a grid path, including both endpoints.
inline std::vector<Point> points_of(const GridPath& g) {
    std::vector<Point> pts{{0, 0}};
    pts.reserve(g.size() + 1);
    for (char c : g.word()) {
        Point p = pts.back();
        (c == 'E' ? p.x : p.y) += 1;
        pts.push_back(p);
    }
    return pts;
}

/// floor[x] = height at which the path first reaches abscissa x (0..width).
/// A point (x, y) is weakly above the path iff y >= floor[x].
inline std::vector<int> column_floor(const GridPath& g) {
    std::vector<int> floor{0};
    int y = 0;
    for (char c : g.word()) {
        if (c == 'N') {
            ++y;
        } else {
            floor.push_back(y);
        }
    }
    return floor;
}

/// True iff `upper` and `lower` share endpoints and no point of `upper`
/// lies strictly below `lower`.
inline bool weakly_above(const GridPath& upper, const GridPath& lower) {
    if (upper.size() != lower.size() || upper.east_steps() != lower.east_steps()) return false;
    const auto floor = column_floor(lower);
    for (const Point& p : points_of(upper))
        if (p.y < floor[p.x]) return false;
    return true;
}

/// Number of east steps available from p before crossing the canopy v.
/// The domain is the set of points weakly above v inside v's bounding box.
inline int horiz(const GridPath& v, Point p) {
    const auto floor = column_floor(v);
    const int width = static_cast<int>(floor.size()) - 1;
    if (p.x < 0 || p.x > width || p.y < 0 || p.y > v.north_steps())
        throw std::out_of_range("horiz: point outside the bounding rectangle of the canopy");
    if (p.y < floor[p.x]) throw invalid_object("horiz: point lies strictly below the canopy");
    int k = 0;
    while (p.x + k < width && floor[p.x + k + 1] <= p.y) ++k;
    return k;
}

/// Non-crossing pair (upper above canopy) with common endpoints.
struct PathPair {
    GridPath upper;
    GridPath canopy;

    [[nodiscard]] bool valid() const { return weakly_above(upper, canopy); }
    friend auto operator<=>(const PathPair&, const PathPair&) = default;
};

// ---------------------------------------------------------------------------
// Statistics on Dyck paths

/// Word position (1-based) of the down step matched with up step i.
inline std::size_t match_up(const DyckPath& p, std::size_t i) {
    if (i < 1 || i > p.size()) throw std::out_of_range("match_up: up-step index out of range");
    const auto& w = p.word();
    std::size_t pos = p.up_positions()[i - 1];
    int depth = 0;
    for (std::size_t k = pos - 1; k < w.size(); ++k) {
        depth += w[k] == 'u' ? 1 : -1;
        if (depth == 0) return k + 1;
    }
    throw invalid_object("match_up: unmatched up step");  // unreachable for a Dyck path
}

/// D_P(i): letters strictly between u_i and its match, plus one.
inline int distance(const DyckPath& p, std::size_t i) {
    const std::size_t pos = p.up_positions().at(i - 1);
    return static_cast<int>(match_up(p, i) - pos);
}

/// (D_P(1), ..., D_P(n)) computed in one stack pass.
inline std::vector<int> distance_vector(const DyckPath& p) {
    std::vector<int> d(p.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> open;  // (up index, position)
    std::size_t up = 0;
    const auto& w = p.word();
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 'u') {
            open.emplace_back(up++, k);
        } else {
            auto [idx, at] = open.back();
            open.pop_back();
            d[idx] = static_cast<int>(k - at);
        }
    }
    return d;
}

/// Letter k is E iff the k-th up step is immediately followed by an up step.
inline GridPath type_of(const DyckPath& p) {
    std::string w;
    const auto ups = p.up_positions();
    for (std::size_t k = 0; k + 1 < ups.size(); ++k) w += p.at(ups[k] + 1) == 'u' ? 'E' : 'N';
    return GridPath(std::move(w));
}

/// True iff up step j lies strictly between u_i and its matching down step.
inline bool contains(const DyckPath& p, std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("contains: indices must differ");
    if (i < 1 || i > p.size() || j < 1 || j > p.size())
        throw std::out_of_range("contains: up-step index out of range");
    const auto ups = p.up_positions();
    return ups[i - 1] < ups[j - 1] && ups[j - 1] < match_up(p, i);
}

/// Points at height 0, both endpoints included; 1 for the empty path.
inline int contacts(const DyckPath& p) {
    int c = 0;
    for (int h : p.heights()) c += h == 0;
    return c;
}

/// 0-based word offsets where the path touches the axis, 0 and 2n included.
inline std::vector<std::size_t> contact_offsets(const DyckPath& p) {
    std::vector<std::size_t> out;
    const auto h = p.heights();
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] == 0) out.push_back(k);
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration helpers

namespace detail {
inline void dyck_rec(std::string& w, int ups, int downs, int n, std::vector<DyckPath>& out) {
    if (ups == n && downs == n) {
        out.emplace_back(w);
        return;
    }
    if (downs < ups) {  // 'd' < 'u': emit the d branch first for lexicographic order
        w.push_back('d');
        dyck_rec(w, ups, downs + 1, n, out);
        w.pop_back();
    }
    if (ups < n) {
        w.push_back('u');
        dyck_rec(w, ups + 1, downs, n, out);
        w.pop_back();
    }
}
}  // namespace detail

/// All Dyck paths of size n in lexicographic order of their words.
inline std::vector<DyckPath> all_dyck_paths(std::size_t n) {
    std::vector<DyckPath> out;
    std::string w;
    detail::dyck_rec(w, 0, 0, static_cast<int>(n), out);
    return out;
}

/// All 2^len grid paths of the given length, lexicographic ('E' < 'N').
inline std::vector<GridPath> all_grid_paths(std::size_t len) {
    std::vector<GridPath> out;
    out.reserve(std::size_t{1} << len);
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
        std::string w(len, 'E');
        for (std::size_t k = 0; k < len; ++k)
            if (mask & (std::size_t{1} << (len - 1 - k))) w[k] = 'N';
        out.emplace_back(std::move(w));
    }
    return out;
}

}  // namespace tamap
